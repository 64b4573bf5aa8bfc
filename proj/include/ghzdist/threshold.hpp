// Threshold fidelities via bisection on exact rational midpoints, plus
// the analytic no-go bound and the average error rate behind it.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ghzdist/yields.hpp"

namespace ghzdist {

class NoThresholdError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ThresholdOptions {
    Rat tolerance = Rat(1, 1000000);
    YieldOptions yield;
};

struct ThresholdResult {
    Protocol protocol = Protocol::kSS;
    uint32_t q = 2, m = 2, n = 2;
    Rat bracket_lo, bracket_hi;  // final bracket: D(lo) <= 0 < D(hi), hi - lo <= tol
    Real f_min;                  // bracket midpoint
    Rat f_min_exact;             // same value as an exact rational
    Rat f_min_rounded;           // half-even to 4 decimals, for table comparison
    std::vector<std::pair<Rat, Rat>> bracket_history;
    int iterations = 0;
    Rat tolerance;
    // False when D at the analytic bound was already positive and the
    // search fell back to the maximally-mixed floor 1/q^m.
    bool bound_bracket_held = true;
    mpfr_prec_t max_precision_bits = 192;
};

// Bisection on [max(lower_bound, 1/q^m), 1].  A midpoint whose yield is
// smaller than 2^-80 in magnitude is re-evaluated at doubled precision
// before its sign is trusted.  Throws NoThresholdError when the yield
// does not change sign on the bracket.
ThresholdResult find_threshold(Protocol protocol, uint32_t q, uint32_t m, uint32_t n,
                               const ThresholdOptions& options = {});

// 1 - (q^m - 1) / (4 (q-1)) * (q^(m-1) + 1/(m-1))^-1, exact.
Rat lower_bound(uint32_t m, uint32_t q);

// Average number of erroneous qudits per receiver for a depolarized GHZ
// state of fidelity F: (1-F)(q-1)(q^(m-1) + 1/(m-1)) / (q^m - 1).
// Equals 1/4 exactly at F = lower_bound(m, q).
Rat average_error_rate(uint32_t m, const Rat& fidelity, uint32_t q = 2);

}  // namespace ghzdist
