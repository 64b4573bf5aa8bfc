#include "ghzdist/threshold.hpp"

#include <algorithm>
#include <sstream>

namespace ghzdist {

Rat lower_bound(uint32_t m, uint32_t q) {
    if (m < 2) throw std::invalid_argument("lower_bound needs m >= 2");
    if (q < 2) throw std::invalid_argument("lower_bound needs q >= 2");
    const Rat ratio = Rat(int_pow(q, m) - 1) / Rat(4 * (static_cast<long>(q) - 1));
    const Rat inner = Rat(int_pow(q, m - 1)) + Rat(1, static_cast<long>(m) - 1);
    return Rat(1) - ratio / inner;
}

Rat average_error_rate(uint32_t m, const Rat& fidelity, uint32_t q) {
    if (m < 2) throw std::invalid_argument("average_error_rate needs m >= 2");
    const Rat inner = Rat(int_pow(q, m - 1)) + Rat(1, static_cast<long>(m) - 1);
    return (Rat(1) - fidelity) * Rat(static_cast<long>(q) - 1) * inner / Rat(int_pow(q, m) - 1);
}

namespace {

struct Evaluation {
    Real value;
    mpfr_prec_t precision_bits;
};

Evaluation evaluate_yield(Protocol protocol, uint32_t q, uint32_t m, uint32_t n, const Rat& fidelity,
                          const YieldOptions& base_options) {
    YieldOptions options = base_options;
    // Near the root the yield is a difference of two small positive
    // sums; distrust any value below 2^-80 until the precision has been
    // doubled twice.
    for (int attempt = 0;; ++attempt) {
        const ChannelParams params = ChannelParams::make(q, m, n, fidelity);
        const YieldResult result = compute_yield(protocol, params, options);
        if (attempt >= 2 || result.value.abs() > Real::pow2(-80, options.precision_bits))
            return {result.value, options.precision_bits};
        options.precision_bits *= 2;
    }
}

}  // namespace

ThresholdResult find_threshold(Protocol protocol, uint32_t q, uint32_t m, uint32_t n,
                               const ThresholdOptions& options) {
    ThresholdResult result;
    result.protocol = protocol;
    result.q = q;
    result.m = m;
    result.n = n;
    result.tolerance = options.tolerance;
    result.max_precision_bits = options.yield.precision_bits;

    const Rat floor = Rat(1) / Rat(int_pow(q, m));
    Rat lo = lower_bound(m, q);
    if (lo < floor) lo = floor;
    Rat hi = 1;

    Evaluation d_lo = evaluate_yield(protocol, q, m, n, lo, options.yield);
    const Evaluation d_hi = evaluate_yield(protocol, q, m, n, hi, options.yield);
    result.max_precision_bits = std::max({result.max_precision_bits, d_lo.precision_bits, d_hi.precision_bits});
    if (d_lo.value.sign() > 0 && floor < lo) {
        // The analytic bound is not a valid bracket endpoint here (the
        // yield is already positive); fall back to the maximally mixed
        // floor, where every protocol's yield is negative.
        lo = floor;
        d_lo = evaluate_yield(protocol, q, m, n, lo, options.yield);
        result.max_precision_bits = std::max(result.max_precision_bits, d_lo.precision_bits);
        result.bound_bracket_held = false;
    }
    if (d_lo.value.sign() > 0 || d_hi.value.sign() <= 0) {
        std::ostringstream msg;
        msg << "no sign change for " << protocol_name(protocol) << " q=" << q << " m=" << m << " n=" << n
            << ": D(" << to_string(lo) << ") = " << d_lo.value.to_decimal(12) << ", D(" << to_string(hi)
            << ") = " << d_hi.value.to_decimal(12);
        throw NoThresholdError(msg.str());
    }

    result.bracket_history.emplace_back(lo, hi);
    while (hi - lo > options.tolerance) {
        const Rat mid = (lo + hi) / 2;
        const Evaluation d_mid = evaluate_yield(protocol, q, m, n, mid, options.yield);
        result.max_precision_bits = std::max(result.max_precision_bits, d_mid.precision_bits);
        if (d_mid.value.sign() > 0)
            hi = mid;
        else
            lo = mid;
        result.bracket_history.emplace_back(lo, hi);
        ++result.iterations;
    }

    result.bracket_lo = lo;
    result.bracket_hi = hi;
    result.f_min_exact = (lo + hi) / 2;
    result.f_min = Real::of(result.f_min_exact, options.yield.precision_bits);
    result.f_min_rounded = round_half_even(result.f_min_exact, 4);
    return result;
}

}  // namespace ghzdist
