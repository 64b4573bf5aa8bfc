// Ground-truth validators: exhaustive enumeration of all q^(mn) error
// tuples and a seeded Monte Carlo simulation of the protocol that decodes
// through the MXOR circuit instead of the closed forms.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "ghzdist/channel.hpp"
#include "ghzdist/real.hpp"

namespace ghzdist {

// (delta, gamma, syndrome) with gamma an encoded K^(m-1) vector and the
// syndrome the base-q^(m-1) encoding of (s_1, ..., s_(n-1)).
struct JointKey {
    uint32_t delta = 0;
    uint64_t gamma = 0;
    uint64_t syndrome = 0;
    auto operator<=>(const JointKey&) const = default;
};

struct ExhaustiveJointTable {
    ChannelParams params;
    std::map<JointKey, Rat> mass;  // sums to 1 exactly

    Rat total() const;
};

// Enumerates every label tuple, weighting it y^(n-wt) x^wt, and decodes
// through decode_repetition.  Throws ResourceLimitError when q^(mn)
// exceeds tuple_cap.
ExhaustiveJointTable exhaustive_joint(const ChannelParams& params, uint64_t tuple_cap = uint64_t(1) << 20);

// Direct sum over raw syndromes, no class regrouping: per syndrome the
// k-distribution is counted from its definition.  Throws when
// q^((m-1)(n-1)) exceeds syndrome_cap.
Real exhaustive_sx(const ChannelParams& params, mpfr_prec_t prec = 192,
                   uint64_t syndrome_cap = uint64_t(1) << 16);

struct SimulationOptions {
    uint64_t samples = 0;
    uint64_t seed = 0;
    unsigned threads = 1;
};

struct SimulationResult {
    ChannelParams params;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::map<JointKey, uint64_t> counts;
};

// Seeded sampler: n iid labels per set from the Werner distribution, a
// random source assignment, then the MXOR decoding circuit.  Sampling is
// split into fixed chunks of 2^16 sets; chunk c uses an mt19937_64 engine
// seeded with splitmix64(seed + c), so serial and parallel runs tally
// identically.  Bounded draws use rejection from whole 64-bit words.
SimulationResult simulate_protocol(const ChannelParams& params, const SimulationOptions& options);

struct CellCheck {
    JointKey key;
    double expected = 0;  // closed-form probability
    double observed = 0;  // empirical frequency
    double z = 0;         // (observed - expected) / binomial sigma
};

// One entry per (delta, gamma, syndrome) cell of positive probability.
std::vector<CellCheck> compare_simulation(const SimulationResult& result);

}  // namespace ghzdist
