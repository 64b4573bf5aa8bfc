#include "ghzdist/probability.hpp"

#include <map>
#include <stdexcept>

#include "ghzdist/labels.hpp"

namespace ghzdist {

Rat weight_enumerator(uint32_t k, uint32_t delta, uint32_t n, uint32_t q, const Rat& x, const Rat& y) {
    if (k > n) throw std::domain_error("weight enumerator needs 0 <= k <= n");
    const Rat qm1x_y = Rat(static_cast<long>(q) - 1) * x + y;
    if (k > 0) {
        Rat out = rat_pow(x, k) * rat_pow(qm1x_y, n - k);
        out *= rat_pow(Rat(static_cast<long>(q)), k - 1);
        return out;
    }
    const Rat even = rat_pow(qm1x_y, n);
    const Rat odd = rat_pow(y - x, n);
    if (delta == 0) return (even + Rat(static_cast<long>(q) - 1) * odd) / Rat(static_cast<long>(q));
    return (even - odd) / Rat(static_cast<long>(q));
}

Rat joint_prob(uint32_t delta, uint32_t k, const ChannelParams& params) {
    return weight_enumerator(k, delta, params.n, params.q, params.x(), params.y());
}

namespace {

// Per-gamma mass summed over delta: (qx)^k ((q-1)x + y)^(n-k).
Rat gamma_mass(uint32_t k, const ChannelParams& params) {
    const Rat qx = Rat(static_cast<long>(params.q)) * params.x();
    const Rat qm1x_y = Rat(static_cast<long>(params.q) - 1) * params.x() + params.y();
    return rat_pow(qx, k) * rat_pow(qm1x_y, params.n - k);
}

}  // namespace

Rat syndrome_prob(const KProfile& profile, const ChannelParams& params) {
    Rat total = 0;
    for (const KProfile::Entry& e : profile.entries)
        total += Rat(Int(static_cast<unsigned long>(e.count))) * gamma_mass(e.k, params);
    return total;
}

Rat syndrome_prob(const SyndromeMultiset& cls, const ChannelParams& params) {
    return syndrome_prob(profile_of(cls, params.q, params.m, params.n), params);
}

Rat ConditionalTable::total_mass() const {
    Rat total = 0;
    for (const Row& row : rows)
        total += Rat(row.gamma_count) * (row.p_delta_zero + Rat(static_cast<long>(q) - 1) * row.p_delta_other);
    return total;
}

bool ConditionalTable::delta_uniform() const {
    for (const Row& row : rows)
        if (row.p_delta_zero != row.p_delta_other) return false;
    return true;
}

ConditionalTable conditional_table(const KProfile& profile, const ChannelParams& params) {
    const Rat pr_s = syndrome_prob(profile, params);
    if (pr_s == 0) throw std::domain_error("conditional table undefined on a zero-probability syndrome class");
    ConditionalTable table;
    table.granularity = ConditionalTable::Granularity::kProfile;
    table.q = params.q;
    table.n = params.n;
    table.pr_s = pr_s;
    table.rows.reserve(profile.entries.size());
    for (const KProfile::Entry& e : profile.entries) {
        ConditionalTable::Row row;
        row.k = e.k;
        row.gamma_count = Int(static_cast<unsigned long>(e.count));
        row.p_delta_zero = joint_prob(0, e.k, params) / pr_s;
        row.p_delta_other = params.q > 1 ? joint_prob(1, e.k, params) / pr_s : row.p_delta_zero;
        table.rows.push_back(std::move(row));
    }
    return table;
}

ConditionalTable conditional_table(const SyndromeMultiset& cls, const ChannelParams& params) {
    ConditionalTable table = conditional_table(profile_of(cls, params.q, params.m, params.n), params);
    table.granularity = ConditionalTable::Granularity::kMultiset;
    return table;
}

Rat GroupedDist::total() const {
    Rat sum = 0;
    for (const auto& [mass, count] : groups) sum += mass * Rat(count);
    return sum;
}

GroupedDist delta_marginal(const SyndromeMultiset& cls, const ChannelParams& params) {
    const KProfile profile = profile_of(cls, params.q, params.m, params.n);
    Rat mass_zero = 0, mass_other = 0;
    for (const KProfile::Entry& e : profile.entries) {
        const Rat count(Int(static_cast<unsigned long>(e.count)));
        mass_zero += count * joint_prob(0, e.k, params);
        mass_other += count * joint_prob(1, e.k, params);
    }
    GroupedDist dist;
    dist.groups.emplace_back(std::move(mass_zero), Int(1));
    dist.groups.emplace_back(std::move(mass_other), Int(static_cast<long>(params.q) - 1));
    return dist;
}

GroupedDist gamma_marginal(const SyndromeMultiset& cls, const ChannelParams& params) {
    const KProfile profile = profile_of(cls, params.q, params.m, params.n);
    GroupedDist dist;
    for (const KProfile::Entry& e : profile.entries)
        dist.groups.emplace_back(gamma_mass(e.k, params), Int(static_cast<unsigned long>(e.count)));
    return dist;
}

GroupedDist joint_delta_gamma(const SyndromeMultiset& cls, const ChannelParams& params) {
    const KProfile profile = profile_of(cls, params.q, params.m, params.n);
    GroupedDist dist;
    for (const KProfile::Entry& e : profile.entries) {
        const Int count(static_cast<unsigned long>(e.count));
        dist.groups.emplace_back(joint_prob(0, e.k, params), count);
        if (params.q > 1) dist.groups.emplace_back(joint_prob(1, e.k, params), count * (static_cast<long>(params.q) - 1));
    }
    return dist;
}

GroupedDist coordinate_marginal(const SyndromeMultiset& cls, const ChannelParams& params, uint32_t i) {
    if (i < 1 || i > params.m - 1) throw std::domain_error("coordinate index out of range");
    const uint32_t q = params.q;
    const uint32_t len = params.m - 1;
    const Rat absent_mass = gamma_mass(params.n, params);

    // For gamma = -v (v a multiset value) the mass depends on v's
    // multiplicity; every other gamma carries the k = n mass.  Cells with
    // coordinate i equal to g: q^(m-2) in total.
    std::vector<Rat> present(q, Rat(0));
    std::vector<unsigned long> present_count(q, 0);
    RingK ring(q);
    for (const SyndromeMultiset::Entry& e : cls.entries) {
        const std::vector<uint32_t> v = decode_vector(e.value, q, len);
        const uint32_t g = ring.neg(v[i - 1]);
        present[g] += gamma_mass(params.n - e.count, params);
        present_count[g] += 1;
    }
    const Int cells_per_g = int_pow(q, len - 1);
    GroupedDist dist;
    for (uint32_t g = 0; g < q; ++g) {
        Rat mass = present[g] + Rat(cells_per_g - static_cast<long>(present_count[g])) * absent_mass;
        dist.groups.emplace_back(std::move(mass), Int(1));
    }
    return dist;
}

GroupedDist prefix_marginal(const SyndromeMultiset& cls, const ChannelParams& params, uint32_t len) {
    const uint32_t full = params.m - 1;
    if (len > full) throw std::domain_error("prefix length out of range");
    const uint32_t q = params.q;
    const Rat absent_mass = gamma_mass(params.n, params);
    const Int completions = int_pow(q, full - len);  // gammas per prefix

    // prefix value (low len digits of the encoded gamma) -> present info
    std::map<uint64_t, std::pair<Rat, unsigned long>> present;
    const Int prefix_space = int_pow(q, len);
    if (!prefix_space.fits_ulong_p()) throw ResourceLimitError("prefix space too large");
    const uint64_t prefix_mod = prefix_space.get_ui();
    for (const SyndromeMultiset::Entry& e : cls.entries) {
        const uint64_t gamma = negate_encoded(e.value, q, full);
        const uint64_t prefix = gamma % prefix_mod;
        auto& slot = present[prefix];
        slot.first += gamma_mass(params.n - e.count, params);
        slot.second += 1;
    }
    GroupedDist dist;
    for (const auto& [prefix, info] : present) {
        Rat mass = info.first + Rat(completions - static_cast<long>(info.second)) * absent_mass;
        dist.groups.emplace_back(std::move(mass), Int(1));
    }
    const Int empty_prefixes = prefix_space - static_cast<long>(present.size());
    if (empty_prefixes > 0)
        dist.groups.emplace_back(Rat(completions) * absent_mass, empty_prefixes);
    return dist;
}

}  // namespace ghzdist
