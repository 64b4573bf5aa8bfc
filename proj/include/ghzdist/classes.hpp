// Equivalence classes of inner-code syndromes s in (K^(m-1))^(n-1), with
// exact cardinalities, at two granularities:
//
//  * value multisets  {s_0 = 0, s_1, ..., s_(n-1)} as a multiset of
//    K^(m-1) values - enough for every yield formula;
//  * k-profiles  f(i) = |{t : k(s,t) = i}| - coarser, enough for the
//    first protocol's capacity and for Pr(s).
//
// Grouping syndromes this way shrinks the sum over q^((m-1)(n-1)) raw
// syndromes to a number of terms sub-exponential in n.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ghzdist/rational.hpp"

namespace ghzdist {

class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ClassLimits {
    // Gate on the *estimated* class count before enumerating.
    uint64_t max_classes = 100000000;
};

struct SyndromeMultiset {
    struct Entry {
        uint64_t value;  // encoded K^(m-1) vector
        uint32_t count;  // multiplicity, >= 1
    };
    // Ascending by value; entries.front().value == 0 always (slot 0 of the
    // syndrome is fixed to 0); counts sum to n.
    std::vector<Entry> entries;
    // Raw syndromes (s_1, ..., s_(n-1)) whose value multiset, together
    // with s_0 = 0, matches.
    Int cardinality;

    uint32_t total() const;          // n
    uint32_t distinct() const { return static_cast<uint32_t>(entries.size()); }
    // Multiplicity of an encoded value, 0 if absent.
    uint32_t count_of(uint64_t value) const;
};

struct KProfile {
    struct Entry {
        uint32_t k;
        uint64_t count;  // f(k) > 0
    };
    std::vector<Entry> entries;  // ascending k; counts sum to q^(m-1)
    Int cardinality;
};

// k(s, gamma) = |{j : s_j + gamma != 0}| = n - multiplicity of -gamma.
uint32_t k_of(const SyndromeMultiset& cls, std::span<const uint32_t> gamma, uint32_t q, uint32_t n);
uint32_t k_of_encoded(const SyndromeMultiset& cls, uint64_t gamma_value, uint32_t q, uint32_t m, uint32_t n);

KProfile profile_of(const SyndromeMultiset& cls, uint32_t q, uint32_t m, uint32_t n);

// Exact class-count estimates used by the feasibility gate.
Int multiset_class_count(uint32_t q, uint32_t m, uint32_t n);  // C(q^(m-1)+n-2, n-1)
Int profile_class_count(uint32_t q, uint32_t m, uint32_t n);   // sum_i P_i(n), i <= q^(m-1)

// Every class exactly once, in a fixed lexicographic order, so serial and
// parallel consumers reduce identically.  Throws ResourceLimitError when
// the estimated class count exceeds limits.max_classes.
void enumerate_multiset_classes(uint32_t q, uint32_t m, uint32_t n, const ClassLimits& limits,
                                const std::function<void(const SyndromeMultiset&)>& sink);
void enumerate_profiles(uint32_t q, uint32_t m, uint32_t n, const ClassLimits& limits,
                        const std::function<void(const KProfile&)>& sink);

}  // namespace ghzdist
