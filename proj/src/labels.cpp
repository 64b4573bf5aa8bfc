#include "ghzdist/labels.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghzdist {

RingK::RingK(uint32_t modulus) : q(modulus) {
    if (q < 2) throw std::invalid_argument("ring modulus must be at least 2");
}

ErrorLabel::ErrorLabel(uint32_t q_, uint32_t beta_, std::vector<uint32_t> alpha_)
    : q(q_), beta(beta_), alpha(std::move(alpha_)) {
    RingK ring(q);
    if (beta >= q) throw std::invalid_argument("beta out of range");
    for (uint32_t a : alpha)
        if (a >= q) throw std::invalid_argument("alpha coordinate out of range");
    if (alpha.empty()) throw std::invalid_argument("label needs at least one alpha coordinate (m >= 2)");
}

bool ErrorLabel::is_identity() const {
    return beta == 0 && std::all_of(alpha.begin(), alpha.end(), [](uint32_t a) { return a == 0; });
}

LabelTuple LabelTuple::make(std::vector<ErrorLabel> labels) {
    if (labels.empty()) throw std::invalid_argument("empty label tuple");
    const uint32_t q = labels.front().q;
    const size_t m = labels.front().alpha.size();
    for (const ErrorLabel& label : labels)
        if (label.q != q || label.alpha.size() != m)
            throw std::invalid_argument("label tuple mixes (q, m) dimensions");
    LabelTuple out;
    out.labels = std::move(labels);
    return out;
}

std::pair<ErrorLabel, ErrorLabel> mxor(const ErrorLabel& source, const ErrorLabel& target) {
    if (source.q != target.q || source.alpha.size() != target.alpha.size())
        throw std::invalid_argument("mxor operands disagree on (q, m)");
    RingK ring(source.q);
    ErrorLabel out_source = source;
    out_source.beta = ring.add(source.beta, target.beta);
    ErrorLabel out_target = target;
    for (size_t i = 0; i < target.alpha.size(); ++i)
        out_target.alpha[i] = ring.sub(source.alpha[i], target.alpha[i]);
    return {out_source, out_target};
}

RepetitionDecode decode_repetition(const LabelTuple& tuple) {
    if (tuple.size() < 2) throw std::domain_error("repetition decode needs n >= 2");
    RingK ring(tuple.q());
    const ErrorLabel& source = tuple.labels.front();

    RepetitionDecode out;
    out.syndrome.reserve(tuple.size() - 1);
    uint32_t beta_sum = source.beta;
    for (uint32_t j = 1; j < tuple.size(); ++j) {
        const ErrorLabel& label = tuple.labels[j];
        std::vector<uint32_t> s(label.alpha.size());
        for (size_t i = 0; i < s.size(); ++i) s[i] = ring.sub(label.alpha[i], source.alpha[i]);
        out.syndrome.push_back(std::move(s));
        beta_sum = ring.add(beta_sum, label.beta);
    }
    out.residual = ErrorLabel(tuple.q(), beta_sum, source.alpha);
    return out;
}

uint32_t depolarization_weight(const LabelTuple& tuple) {
    uint32_t weight = 0;
    for (const ErrorLabel& label : tuple.labels)
        if (!label.is_identity()) ++weight;
    return weight;
}

uint64_t encode_vector(std::span<const uint32_t> coords, uint32_t q) {
    uint64_t value = 0;
    for (size_t i = coords.size(); i-- > 0;) value = value * q + coords[i];
    return value;
}

std::vector<uint32_t> decode_vector(uint64_t value, uint32_t q, uint32_t len) {
    std::vector<uint32_t> coords(len);
    for (uint32_t i = 0; i < len; ++i) {
        coords[i] = static_cast<uint32_t>(value % q);
        value /= q;
    }
    return coords;
}

uint64_t negate_encoded(uint64_t value, uint32_t q, uint32_t len) {
    std::vector<uint32_t> coords = decode_vector(value, q, len);
    RingK ring(q);
    for (uint32_t& c : coords) c = ring.neg(c);
    return encode_vector(coords, q);
}

}  // namespace ghzdist
