#include "hurstlab/cli.hpp"

int main(int argc, char** argv) { return hurstlab::cli_main(argc, argv); }
