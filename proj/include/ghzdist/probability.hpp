// Closed-form depolarization weight enumerators and the exact joint,
// marginal and conditional probabilities after decoding the repetition
// inner code.  Everything here is an exact rational; only the entropy
// layer (yields.hpp) leaves rational arithmetic.

#pragma once

#include <cstdint>
#include <vector>

#include "ghzdist/channel.hpp"
#include "ghzdist/classes.hpp"
#include "ghzdist/rational.hpp"

namespace ghzdist {

// w(k, delta; x, y) over Z/qZ:
//   k > 0:           q^(k-1) x^k ((q-1)x + y)^(n-k)
//   k = 0, delta=0:  (1/q) [ ((q-1)x + y)^n + (q-1)(y - x)^n ]
//   k = 0, delta!=0: (1/q) [ ((q-1)x + y)^n - (y - x)^n ]
Rat weight_enumerator(uint32_t k, uint32_t delta, uint32_t n, uint32_t q, const Rat& x, const Rat& y);

// Pr((delta,gamma) ^ s) for any (gamma, s) with k(s,gamma) = k; equals
// weight_enumerator at (x, y) = xy_params(params).
Rat joint_prob(uint32_t delta, uint32_t k, const ChannelParams& params);

// Per-syndrome Pr(s); multiply by the class cardinality for class mass.
Rat syndrome_prob(const KProfile& profile, const ChannelParams& params);
Rat syndrome_prob(const SyndromeMultiset& cls, const ChannelParams& params);

// Pr((delta,gamma)|s) grouped by (delta, k): probabilities depend on gamma
// only through k, so each k row carries its gamma count.
struct ConditionalTable {
    enum class Granularity { kProfile, kMultiset };
    struct Row {
        uint32_t k;
        Int gamma_count;     // f(k)
        Rat p_delta_zero;    // Pr((0,gamma)|s)
        Rat p_delta_other;   // Pr((d,gamma)|s) for each d != 0
    };
    Granularity granularity = Granularity::kProfile;
    uint32_t q = 2;
    uint32_t n = 2;
    Rat pr_s;                // per-syndrome Pr(s), > 0
    std::vector<Row> rows;   // ascending k

    Rat total_mass() const;  // == 1 exactly
    // True when every row has p_delta_zero == p_delta_other (all s != 0).
    bool delta_uniform() const;
};

// Throws std::domain_error on a zero-probability class.
ConditionalTable conditional_table(const KProfile& profile, const ChannelParams& params);
ConditionalTable conditional_table(const SyndromeMultiset& cls, const ChannelParams& params);

// Grouped exact distribution: pairs of (per-cell mass, cell count).
// Masses here are joint with s; dividing by Pr(s) conditions on s.
struct GroupedDist {
    std::vector<std::pair<Rat, Int>> groups;
    Rat total() const;
};

// Marginals of the conditional state given s, at multiset granularity.
GroupedDist delta_marginal(const SyndromeMultiset& cls, const ChannelParams& params);
GroupedDist gamma_marginal(const SyndromeMultiset& cls, const ChannelParams& params);
GroupedDist joint_delta_gamma(const SyndromeMultiset& cls, const ChannelParams& params);
// Marginal of the single coordinate gamma_i, i in [1, m-1].
GroupedDist coordinate_marginal(const SyndromeMultiset& cls, const ChannelParams& params, uint32_t i);
// Joint marginal of the prefix (gamma_1, ..., gamma_len), len in [0, m-1].
// len = 0 degenerates to a single group of mass Pr(s); len = m-1 equals
// gamma_marginal up to grouping.
GroupedDist prefix_marginal(const SyndromeMultiset& cls, const ChannelParams& params, uint32_t len);

}  // namespace ghzdist
