#include "ghzdist/channel.hpp"

#include <stdexcept>

namespace ghzdist {

ChannelParams ChannelParams::make(uint32_t q, uint32_t m, uint32_t n, Rat fidelity) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (m < 2) throw std::invalid_argument("m must be at least 2");
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    fidelity.canonicalize();
    if (fidelity <= 0 || fidelity > 1) throw std::invalid_argument("fidelity must lie in (0, 1]");
    ChannelParams params;
    params.q = q;
    params.m = m;
    params.n = n;
    params.fidelity = std::move(fidelity);
    return params;
}

Rat label_probability(const ErrorLabel& label, const ChannelParams& params) {
    if (label.q != params.q || label.players() != params.m)
        throw std::invalid_argument("label dimensions do not match channel parameters");
    return label.is_identity() ? params.y() : params.x();
}

std::pair<Rat, Rat> xy_params(const ChannelParams& params) {
    return {params.x(), params.y()};
}

}  // namespace ghzdist
