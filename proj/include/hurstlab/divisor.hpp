#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hurstlab/errors.hpp"

namespace hurstlab {

/// Box sizes are eligible when they divide L, are >= kMinBoxSize, and leave
/// at least two boxes (N <= L/2).  The smallest-divisor floor is 4 even
/// though divisors below 8 are discouraged for production use; the
/// divisor-choice sweep needs them.
inline constexpr std::size_t kMinBoxSize = 4;

/// A window length L together with the ordered box sizes N_1 < ... < N_d,
/// each dividing L exactly.
struct DivisorPlan {
    std::size_t window_length = 0;
    std::vector<std::size_t> box_sizes;
    std::string label;

    std::size_t count() const { return box_sizes.size(); }
    std::size_t n_min() const { return box_sizes.empty() ? 0 : box_sizes.front(); }
    std::size_t n_max() const { return box_sizes.empty() ? 0 : box_sizes.back(); }
};

/// Validates the DivisorPlan invariants and stamps the label.
inline DivisorPlan make_plan(std::size_t window_length, std::vector<std::size_t> box_sizes,
                             std::string label) {
    if (box_sizes.size() < 2)
        throw PlanViolatesInvariants("plan '" + label + "' needs at least 2 box sizes, got " +
                                     std::to_string(box_sizes.size()));
    for (std::size_t i = 0; i < box_sizes.size(); ++i) {
        const std::size_t n = box_sizes[i];
        if (i > 0 && box_sizes[i - 1] >= n)
            throw PlanViolatesInvariants("plan '" + label + "': box sizes must be strictly increasing");
        if (n < kMinBoxSize)
            throw PlanViolatesInvariants("plan '" + label + "': box size " + std::to_string(n) +
                                         " is below the minimum of " + std::to_string(kMinBoxSize));
        if (n == 0 || window_length % n != 0)
            throw PlanViolatesInvariants("plan '" + label + "': " + std::to_string(n) +
                                         " does not divide L=" + std::to_string(window_length));
        if (n > window_length / 2)
            throw PlanViolatesInvariants("plan '" + label + "': box size " + std::to_string(n) +
                                         " exceeds L/2=" + std::to_string(window_length / 2));
    }
    return DivisorPlan{window_length, std::move(box_sizes), std::move(label)};
}

/// All positive divisors of L in ascending order, including 1 and L.
inline std::vector<std::size_t> divisors_of(std::size_t L) {
    std::vector<std::size_t> lo, hi;
    for (std::size_t k = 1; k * k <= L; ++k) {
        if (L % k == 0) {
            lo.push_back(k);
            if (k != L / k) hi.push_back(L / k);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

/// Divisors of L usable as box sizes: within [max(kMinBoxSize, floor), L/2].
inline std::vector<std::size_t> eligible_divisors(std::size_t L, std::size_t floor = kMinBoxSize) {
    std::vector<std::size_t> out;
    for (std::size_t n : divisors_of(L))
        if (n >= std::max(floor, kMinBoxSize) && n <= L / 2) out.push_back(n);
    return out;
}

// Selection strategies -------------------------------------------------

/// Every eligible divisor >= min_divisor.
struct AllFrom {
    std::size_t min_divisor = kMinBoxSize;
};

/// The d smallest eligible divisors >= min_divisor.
struct LowestCount {
    std::size_t d = 0;
    std::size_t min_divisor = kMinBoxSize;
};

/// d consecutive eligible divisors starting at 1-based ascending rank.
/// Ranks run over the divisors in [max(min_divisor, 4), L/2].
struct ConsecutiveWindow {
    std::size_t start_rank = 1;
    std::size_t d = 0;
    std::size_t min_divisor = kMinBoxSize;
};

/// An explicit box-size list, validated against the plan invariants.
struct Explicit {
    std::vector<std::size_t> box_sizes;
};

using SelectionStrategy = std::variant<AllFrom, LowestCount, ConsecutiveWindow, Explicit>;

inline DivisorPlan resolve_plan(std::size_t L, const SelectionStrategy& strategy,
                                std::string label = "") {
    struct Resolver {
        std::size_t L;
        std::string label;

        DivisorPlan operator()(const AllFrom& s) const {
            const std::size_t floor = std::max(s.min_divisor, kMinBoxSize);
            std::vector<std::size_t> boxes;
            for (std::size_t n : eligible_divisors(L))
                if (n >= floor) boxes.push_back(n);
            if (boxes.size() < 2)
                throw NotEnoughDivisors("L=" + std::to_string(L) + " has " +
                                        std::to_string(boxes.size()) + " divisors in [" +
                                        std::to_string(floor) + ", L/2], need at least 2");
            return make_plan(L, std::move(boxes),
                             label.empty() ? "allfrom-" + std::to_string(s.min_divisor) : label);
        }

        DivisorPlan operator()(const LowestCount& s) const {
            const std::size_t floor = std::max(s.min_divisor, kMinBoxSize);
            std::vector<std::size_t> boxes;
            for (std::size_t n : eligible_divisors(L)) {
                if (n < floor) continue;
                boxes.push_back(n);
                if (boxes.size() == s.d) break;
            }
            if (boxes.size() < s.d || s.d < 2)
                throw NotEnoughDivisors("L=" + std::to_string(L) + " has only " +
                                        std::to_string(boxes.size()) + " divisors in [" +
                                        std::to_string(floor) + ", L/2], need " +
                                        std::to_string(s.d));
            return make_plan(L, std::move(boxes),
                             label.empty() ? "lowest-d" + std::to_string(s.d) + "-min" +
                                                 std::to_string(s.min_divisor)
                                           : label);
        }

        DivisorPlan operator()(const ConsecutiveWindow& s) const {
            const std::vector<std::size_t> elig = eligible_divisors(L, s.min_divisor);
            if (s.start_rank < 1 || s.d < 2 || s.start_rank + s.d - 1 > elig.size())
                throw NotEnoughDivisors(
                    "L=" + std::to_string(L) + " has " + std::to_string(elig.size()) +
                    " eligible divisors; window of " + std::to_string(s.d) +
                    " starting at rank " + std::to_string(s.start_rank) + " does not fit");
            std::vector<std::size_t> boxes(elig.begin() + (s.start_rank - 1),
                                           elig.begin() + (s.start_rank - 1) + s.d);
            return make_plan(L, std::move(boxes),
                             label.empty() ? "window-r" + std::to_string(s.start_rank) + "-d" +
                                                 std::to_string(s.d)
                                           : label);
        }

        DivisorPlan operator()(const Explicit& s) const {
            std::vector<std::size_t> boxes = s.box_sizes;
            std::sort(boxes.begin(), boxes.end());
            return make_plan(L, std::move(boxes), label.empty() ? "explicit" : label);
        }
    };
    return std::visit(Resolver{L, std::move(label)}, strategy);
}

// The paper's two window-length families --------------------------------

/// Case A: L = 2^n for n in [6, 13]; box sizes are all powers of two in
/// [8, L/2], so d = n - 3.
inline DivisorPlan case_a_plan(int n) {
    if (n < 6 || n > 13)
        throw OutOfRange("case A exponent must lie in [6, 13], got " + std::to_string(n));
    const std::size_t L = std::size_t{1} << n;
    std::vector<std::size_t> boxes;
    for (std::size_t b = 8; b <= L / 2; b *= 2) boxes.push_back(b);
    return make_plan(L, std::move(boxes), "caseA-" + std::to_string(L));
}

namespace detail {
struct CaseBRow {
    std::size_t L, d, n_min;
};
// L, number of divisors used, smallest divisor used.
inline constexpr std::array<CaseBRow, 8> case_b_rows{{{60, 5, 10},
                                                      {120, 8, 10},
                                                      {240, 10, 12},
                                                      {480, 12, 15},
                                                      {960, 14, 20},
                                                      {1920, 16, 30},
                                                      {3840, 18, 40},
                                                      {7680, 20, 48}}};
}  // namespace detail

/// Case B: L a multiple of 60, resolved as the d smallest divisors >= n_min
/// from the fixed (L, d, n_min) table. k is the 1-based row index.
inline DivisorPlan case_b_plan(int k) {
    if (k < 1 || k > 8)
        throw OutOfRange("case B row index must lie in [1, 8], got " + std::to_string(k));
    const detail::CaseBRow row = detail::case_b_rows[static_cast<std::size_t>(k - 1)];
    return resolve_plan(row.L, LowestCount{row.d, row.n_min}, "caseB-" + std::to_string(row.L));
}

// CLI plan specs ---------------------------------------------------------

/// Parsed form of a --plan argument.  caseA/caseB pin L themselves;
/// explicit and lowest specs need L supplied separately.
struct PlanSpec {
    enum class Kind { CaseA, CaseB, Explicit, Lowest };
    Kind kind = Kind::CaseA;
    std::size_t L = 0;                    // CaseA / CaseB
    std::vector<std::size_t> box_sizes;   // Explicit
    std::size_t d = 0;                    // Lowest
    std::size_t min_divisor = 0;          // Lowest

    bool needs_window_length() const {
        return kind == Kind::Explicit || kind == Kind::Lowest;
    }
};

namespace detail {

inline std::size_t parse_size(const std::string& text, const std::string& what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw InvalidValue("expected a positive integer for " + what + ", got '" + text + "'");
    }
    if (pos != text.size() || text.empty() || text[0] == '-')
        throw InvalidValue("expected a positive integer for " + what + ", got '" + text + "'");
    return static_cast<std::size_t>(v);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = s.find(sep, begin);
        parts.push_back(s.substr(begin, end - begin));
        if (end == std::string::npos) break;
        begin = end + 1;
    }
    return parts;
}

}  // namespace detail

/// Accepted forms: "caseA:2048", "caseB:1920", "explicit:8,16,32",
/// "lowest:d=8,min=8".
inline PlanSpec parse_plan_spec(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidValue("plan spec '" + text + "' is missing ':'");
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);

    PlanSpec spec;
    if (head == "caseA") {
        spec.kind = PlanSpec::Kind::CaseA;
        spec.L = detail::parse_size(tail, "case A length");
    } else if (head == "caseB") {
        spec.kind = PlanSpec::Kind::CaseB;
        spec.L = detail::parse_size(tail, "case B length");
    } else if (head == "explicit") {
        spec.kind = PlanSpec::Kind::Explicit;
        for (const std::string& part : detail::split(tail, ','))
            spec.box_sizes.push_back(detail::parse_size(part, "box size"));
        if (spec.box_sizes.empty())
            throw InvalidValue("plan spec '" + text + "' lists no box sizes");
    } else if (head == "lowest") {
        spec.kind = PlanSpec::Kind::Lowest;
        spec.min_divisor = kMinBoxSize;
        bool saw_d = false;
        for (const std::string& part : detail::split(tail, ',')) {
            const std::size_t eq = part.find('=');
            if (eq == std::string::npos)
                throw InvalidValue("plan spec '" + text + "': expected key=value, got '" + part + "'");
            const std::string key = part.substr(0, eq);
            const std::string val = part.substr(eq + 1);
            if (key == "d") {
                spec.d = detail::parse_size(val, "divisor count");
                saw_d = true;
            } else if (key == "min") {
                spec.min_divisor = detail::parse_size(val, "minimum divisor");
            } else {
                throw InvalidValue("plan spec '" + text + "': unknown key '" + key + "'");
            }
        }
        if (!saw_d) throw InvalidValue("plan spec '" + text + "' is missing d=");
    } else {
        throw InvalidValue("unknown plan family '" + head +
                           "' (expected caseA, caseB, explicit, or lowest)");
    }
    return spec;
}

/// Resolves a parsed plan spec into a concrete plan.  window_length is
/// required for explicit/lowest specs and must be absent or matching for
/// the case families.
inline DivisorPlan resolve_plan_spec(const PlanSpec& spec,
                                     std::optional<std::size_t> window_length = std::nullopt) {
    switch (spec.kind) {
        case PlanSpec::Kind::CaseA: {
            int n = -1;
            for (int e = 6; e <= 13; ++e)
                if ((std::size_t{1} << e) == spec.L) n = e;
            if (n < 0)
                throw InvalidValue("case A length must be a power of two in [64, 8192], got " +
                                   std::to_string(spec.L));
            if (window_length && *window_length != spec.L)
                throw InvalidValue("--L contradicts the plan's window length");
            return case_a_plan(n);
        }
        case PlanSpec::Kind::CaseB: {
            int k = -1;
            for (int i = 1; i <= 8; ++i)
                if (detail::case_b_rows[static_cast<std::size_t>(i - 1)].L == spec.L) k = i;
            if (k < 0)
                throw InvalidValue("case B length must be one of {60, 120, 240, 480, 960, 1920, "
                                   "3840, 7680}, got " + std::to_string(spec.L));
            if (window_length && *window_length != spec.L)
                throw InvalidValue("--L contradicts the plan's window length");
            return case_b_plan(k);
        }
        case PlanSpec::Kind::Explicit: {
            if (!window_length)
                throw MissingRequired("an explicit plan needs --L for the window length");
            return resolve_plan(*window_length, Explicit{spec.box_sizes});
        }
        case PlanSpec::Kind::Lowest: {
            if (!window_length)
                throw MissingRequired("a lowest:d=... plan needs --L for the window length");
            return resolve_plan(*window_length, LowestCount{spec.d, spec.min_divisor});
        }
    }
    throw InvalidValue("unreachable plan kind");
}

}  // namespace hurstlab
