// Depolarizing/Werner error model: exact per-label probabilities and the
// weight-enumerator substitution variables x = (1-F)/(q^m - 1), y = F.

#pragma once

#include <cstdint>
#include <utility>

#include "ghzdist/labels.hpp"
#include "ghzdist/rational.hpp"

namespace ghzdist {

struct ChannelParams {
    uint32_t q = 2;   // local dimension
    uint32_t m = 2;   // players
    uint32_t n = 2;   // repetition code length
    Rat fidelity;     // exact rational in (0, 1]

    // Validates q, m, n >= 2 and 0 < F <= 1.
    static ChannelParams make(uint32_t q, uint32_t m, uint32_t n, Rat fidelity);

    Int labels_per_copy() const { return int_pow(q, m); }  // q^m
    Int gamma_space() const { return int_pow(q, m - 1); }  // q^(m-1)

    Rat x() const { return (Rat(1) - fidelity) / Rat(labels_per_copy() - 1); }
    Rat y() const { return fidelity; }
};

// F for the identity label, (1-F)/(q^m - 1) otherwise.
Rat label_probability(const ErrorLabel& label, const ChannelParams& params);

std::pair<Rat, Rat> xy_params(const ChannelParams& params);

}  // namespace ghzdist
