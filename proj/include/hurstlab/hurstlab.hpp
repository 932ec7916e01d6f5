#pragma once

// Umbrella header: DFA Hurst-exponent estimation with Monte Carlo
// calibration of the estimator's empirical distribution.

#include "hurstlab/csv.hpp"
#include "hurstlab/dfa.hpp"
#include "hurstlab/divisor.hpp"
#include "hurstlab/errors.hpp"
#include "hurstlab/mc.hpp"
#include "hurstlab/rng.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/synth.hpp"
