// Shared helpers for the unit suites.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ghzdist/channel.hpp"
#include "ghzdist/labels.hpp"
#include "ghzdist/real.hpp"

namespace ghzdist::test {

inline ErrorLabel label(uint32_t q, uint32_t beta, std::vector<uint32_t> alpha) {
    return ErrorLabel(q, beta, std::move(alpha));
}

inline LabelTuple tuple_from_indices(uint32_t q, uint32_t m, uint32_t n, uint64_t index) {
    const uint64_t per_copy = int_pow(q, m).get_ui();
    std::vector<ErrorLabel> labels;
    labels.reserve(n);
    for (uint32_t j = 0; j < n; ++j) {
        const uint64_t one = index % per_copy;
        index /= per_copy;
        labels.push_back(ErrorLabel(q, static_cast<uint32_t>(one % q), decode_vector(one / q, q, m - 1)));
    }
    return LabelTuple::make(labels);
}

inline bool close_to(const Real& value, double target, double tolerance) {
    return std::abs(value.to_double() - target) <= tolerance;
}

// Random exact rational in (0, 1] with a denominator up to `max_den`.
inline Rat random_fidelity(std::mt19937_64& rng, unsigned long max_den = 1000) {
    std::uniform_int_distribution<unsigned long> den_dist(2, max_den);
    const unsigned long den = den_dist(rng);
    std::uniform_int_distribution<unsigned long> num_dist(1, den);
    Rat out(num_dist(rng), den);
    out.canonicalize();
    return out;
}

}  // namespace ghzdist::test
