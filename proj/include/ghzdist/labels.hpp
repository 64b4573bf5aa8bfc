// Algebra of stabilizer-eigenvalue error labels over the ring Z/qZ:
// label arithmetic, the MXOR action on label pairs, repetition-code
// decoding and the depolarization weight of a label tuple.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ghzdist {

// Z/qZ.  q = 2 reproduces GF(2) bit for bit.
struct RingK {
    uint32_t q;

    explicit RingK(uint32_t modulus);

    uint32_t add(uint32_t a, uint32_t b) const { return (a + b) % q; }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : q - a; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
};

// Eigenvalue pair (beta, alpha) of one noisy GHZ copy: beta is the phase
// coordinate, alpha the m-1 bit-flip coordinates.  (0, 0) means no error.
struct ErrorLabel {
    uint32_t q = 2;
    uint32_t beta = 0;
    std::vector<uint32_t> alpha;

    ErrorLabel() = default;
    ErrorLabel(uint32_t q_, uint32_t beta_, std::vector<uint32_t> alpha_);

    uint32_t players() const { return static_cast<uint32_t>(alpha.size()) + 1; }
    bool is_identity() const;

    bool operator==(const ErrorLabel&) const = default;
};

// Ordered tuple of n labels sharing (q, m); index 0 is the source copy.
struct LabelTuple {
    std::vector<ErrorLabel> labels;

    static LabelTuple make(std::vector<ErrorLabel> labels);

    uint32_t q() const { return labels.front().q; }
    uint32_t players() const { return labels.front().players(); }
    uint32_t size() const { return static_cast<uint32_t>(labels.size()); }
};

// Label transformation of the multilateral XOR:
//   [(b1,a1),(b2,a2)] -> [(b1+b2, a1), (b2, a1-a2)]   over Z/qZ.
// Throws std::invalid_argument on mismatched (q, m).
std::pair<ErrorLabel, ErrorLabel> mxor(const ErrorLabel& source, const ErrorLabel& target);

struct RepetitionDecode {
    // syndrome[j-1] = alpha_j - alpha_0 for j = 1..n-1
    std::vector<std::vector<uint32_t>> syndrome;
    // (sum_j beta_j, alpha_0)
    ErrorLabel residual;
};

// Syndrome and residual of the [n,1,n]_q repetition inner code.  Equals
// the composition of n-1 MXORs with source index 0 followed by negating
// each target's alpha.  Requires n >= 2.
RepetitionDecode decode_repetition(const LabelTuple& tuple);

// Number of copies carrying a non-identity label.
uint32_t depolarization_weight(const LabelTuple& tuple);

// Fixed little-endian encoding of K^len vectors: coordinate i is digit i.
uint64_t encode_vector(std::span<const uint32_t> coords, uint32_t q);
std::vector<uint32_t> decode_vector(uint64_t value, uint32_t q, uint32_t len);
uint64_t negate_encoded(uint64_t value, uint32_t q, uint32_t len);

}  // namespace ghzdist
