#include "ghzdist/classes.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ghzdist/labels.hpp"

namespace ghzdist {

uint32_t SyndromeMultiset::total() const {
    uint32_t n = 0;
    for (const Entry& e : entries) n += e.count;
    return n;
}

uint32_t SyndromeMultiset::count_of(uint64_t value) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), value,
                               [](const Entry& e, uint64_t v) { return e.value < v; });
    if (it == entries.end() || it->value != value) return 0;
    return it->count;
}

uint32_t k_of(const SyndromeMultiset& cls, std::span<const uint32_t> gamma, uint32_t q, uint32_t n) {
    RingK ring(q);
    std::vector<uint32_t> neg(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i) neg[i] = ring.neg(gamma[i]);
    return n - cls.count_of(encode_vector(neg, q));
}

uint32_t k_of_encoded(const SyndromeMultiset& cls, uint64_t gamma_value, uint32_t q, uint32_t m, uint32_t n) {
    return n - cls.count_of(negate_encoded(gamma_value, q, m - 1));
}

KProfile profile_of(const SyndromeMultiset& cls, uint32_t q, uint32_t m, uint32_t n) {
    // Values of multiplicity c contribute one gamma (their negation) at
    // k = n - c; the q^(m-1) - distinct absent values all land at k = n.
    std::map<uint32_t, uint64_t> counts;
    for (const SyndromeMultiset::Entry& e : cls.entries) counts[n - e.count] += 1;
    const Int absent = int_pow(q, m - 1) - cls.distinct();
    if (!absent.fits_ulong_p()) throw ResourceLimitError("value space q^(m-1) too large for a k-profile");
    if (absent > 0) counts[n] += absent.get_ui();
    KProfile profile;
    for (const auto& [k, f] : counts) profile.entries.push_back({k, f});
    profile.cardinality = cls.cardinality;
    return profile;
}

Int multiset_class_count(uint32_t q, uint32_t m, uint32_t n) {
    // One slot is pinned to value 0; the remaining n-1 slots form an
    // unordered multiset over q^(m-1) values.
    const Int values = int_pow(q, m - 1);
    Int top = values + static_cast<long>(n) - 2;
    if (top.fits_ulong_p())
        return binomial(top.get_ui(), n - 1);
    // combinations with repetition for huge value spaces
    Int out = 1;
    for (uint32_t i = 0; i < n - 1; ++i) out *= values + static_cast<long>(i);
    return out / factorial(n - 1);
}

Int profile_class_count(uint32_t q, uint32_t m, uint32_t n) {
    const Int values = int_pow(q, m - 1);
    Int total = 0;
    for (unsigned long parts = 1; parts <= n; ++parts) {
        if (Int(static_cast<long>(parts)) > values) break;
        total += partitions_exact(n, parts);
    }
    return total;
}

namespace {

// Cardinality of a multiset class: arrangements of the multiset over n
// ordered slots with slot 0 holding value 0, i.e.
//   (n-1)! * c_0 / prod_v c_v!
Int multiset_cardinality(const SyndromeMultiset& cls, uint32_t n) {
    Int denom = 1;
    for (const SyndromeMultiset::Entry& e : cls.entries) denom *= factorial(e.count);
    return factorial(n - 1) * cls.entries.front().count / denom;
}

void check_limit(const Int& estimate, const ClassLimits& limits, const char* what) {
    if (estimate > Int(static_cast<unsigned long>(limits.max_classes))) {
        std::ostringstream msg;
        msg << "estimated " << what << " class count " << estimate.get_str() << " exceeds limit "
            << limits.max_classes;
        throw ResourceLimitError(msg.str());
    }
}

}  // namespace

void enumerate_multiset_classes(uint32_t q, uint32_t m, uint32_t n, const ClassLimits& limits,
                                const std::function<void(const SyndromeMultiset&)>& sink) {
    if (q < 2 || m < 2 || n < 2) throw std::invalid_argument("enumerate_multiset_classes needs q, m, n >= 2");
    const Int values_big = int_pow(q, m - 1);
    check_limit(multiset_class_count(q, m, n), limits, "multiset");
    if (!values_big.fits_ulong_p()) throw ResourceLimitError("value space q^(m-1) too large to enumerate");
    const uint64_t values = values_big.get_ui();

    // Distribute the n-1 free slots over values 0..V-1 in lexicographic
    // order of (c_0, c_1, ...); value 0 additionally owns slot 0.
    SyndromeMultiset cls;
    std::vector<std::pair<uint64_t, uint32_t>> stack;  // (value, count) with count >= 1 for value 0
    std::function<void(uint64_t, uint32_t)> recurse = [&](uint64_t value, uint32_t remaining) {
        if (value == values || remaining == 0) {
            if (remaining != 0) return;
            cls.entries.clear();
            for (const auto& [v, c] : stack) cls.entries.push_back({v, c});
            cls.cardinality = multiset_cardinality(cls, n);
            sink(cls);
            return;
        }
        // skip values with zero multiplicity entirely (value 0 never skipped)
        const uint32_t base = value == 0 ? 1 : 0;
        for (uint32_t extra = remaining + 1; extra-- > 0;) {
            const uint32_t count = base + extra;
            if (count == 0) {
                recurse(value + 1, remaining);
            } else {
                stack.emplace_back(value, count);
                recurse(value + 1, remaining - extra);
                stack.pop_back();
            }
        }
    };
    recurse(0, n - 1);
}

void enumerate_profiles(uint32_t q, uint32_t m, uint32_t n, const ClassLimits& limits,
                        const std::function<void(const KProfile&)>& sink) {
    if (q < 2 || m < 2 || n < 2) throw std::invalid_argument("enumerate_profiles needs q, m, n >= 2");
    const Int values = int_pow(q, m - 1);
    if (!values.fits_ulong_p()) throw ResourceLimitError("value space q^(m-1) too large to profile");
    check_limit(profile_class_count(q, m, n), limits, "profile");

    // A profile is determined by the partition of n into the distinct
    // values' multiplicities.  For a partition with d parts, part sizes j
    // appearing m_j times, the class cardinality sums, over the choice j0
    // of the part holding value 0, the number of injective assignments of
    // distinct nonzero values to the remaining parts (equal-size parts are
    // interchangeable) times the slot arrangements:
    //   sum_j0  FF(V-1, d-1) / prod_j (m_j - [j==j0])!  *  (n-1)! j0 / prod_i part_i!
    std::vector<uint32_t> parts;
    std::function<void(uint32_t, uint32_t)> recurse = [&](uint32_t remaining, uint32_t max_part) {
        if (remaining == 0) {
            const unsigned long d = parts.size();
            if (Int(static_cast<long>(d)) > values) return;
            std::map<uint32_t, uint32_t> size_counts;
            Int parts_factorial = 1;
            for (uint32_t p : parts) {
                size_counts[p] += 1;
                parts_factorial *= factorial(p);
            }
            const Int assignments_base = falling_factorial(values - 1, d - 1);
            Int cardinality = 0;
            for (const auto& [j0, mj] : size_counts) {
                Int denom = 1;
                for (const auto& [j, mj2] : size_counts) denom *= factorial(mj2 - (j == j0 ? 1 : 0));
                cardinality += (assignments_base / denom) * factorial(n - 1) * static_cast<long>(j0) / parts_factorial;
            }

            KProfile profile;
            std::map<uint32_t, uint64_t> f;
            for (const auto& [j, mj] : size_counts) f[n - j] += mj;
            const Int absent = values - static_cast<long>(d);
            if (absent > 0) f[n] += absent.get_ui();
            for (const auto& [k, count] : f) profile.entries.push_back({k, count});
            profile.cardinality = cardinality;
            sink(profile);
            return;
        }
        if (parts.size() >= static_cast<size_t>(n)) return;
        for (uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            recurse(remaining - p, p);
            parts.pop_back();
        }
    };
    recurse(n, n);
}

}  // namespace ghzdist
