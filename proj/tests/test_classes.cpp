#include "doctest.h"

#include <map>
#include <set>

#include "ghzdist/classes.hpp"
#include "ghzdist/labels.hpp"

using namespace ghzdist;

namespace {

SyndromeMultiset make_class(std::vector<SyndromeMultiset::Entry> entries, long cardinality = 1) {
    SyndromeMultiset cls;
    cls.entries = std::move(entries);
    cls.cardinality = cardinality;
    return cls;
}

std::vector<SyndromeMultiset> collect_multisets(uint32_t q, uint32_t m, uint32_t n) {
    std::vector<SyndromeMultiset> out;
    enumerate_multiset_classes(q, m, n, {}, [&](const SyndromeMultiset& cls) { out.push_back(cls); });
    return out;
}

std::vector<KProfile> collect_profiles(uint32_t q, uint32_t m, uint32_t n) {
    std::vector<KProfile> out;
    enumerate_profiles(q, m, n, {}, [&](const KProfile& profile) { out.push_back(profile); });
    return out;
}

// Group raw syndromes (s_1..s_(n-1)) by their value multiset, brute force.
std::map<std::vector<std::pair<uint64_t, uint32_t>>, Int> brute_force_multisets(uint32_t q, uint32_t m,
                                                                                uint32_t n) {
    const uint64_t radix = int_pow(q, m - 1).get_ui();
    const uint64_t total = int_pow(radix, n - 1).get_ui();
    std::map<std::vector<std::pair<uint64_t, uint32_t>>, Int> groups;
    for (uint64_t raw = 0; raw < total; ++raw) {
        std::map<uint64_t, uint32_t> counts;
        counts[0] += 1;  // s_0 = 0
        uint64_t rest = raw;
        for (uint32_t j = 1; j < n; ++j) {
            counts[rest % radix] += 1;
            rest /= radix;
        }
        std::vector<std::pair<uint64_t, uint32_t>> key(counts.begin(), counts.end());
        groups[key] += 1;
    }
    return groups;
}

}  // namespace

TEST_CASE("k_of from multiset multiplicities") {
    // all-zero multiset: gamma = 0 has k = 0
    auto zero = make_class({{0, 3}});
    std::vector<uint32_t> g0 = {0};
    CHECK(k_of(zero, g0, 2, 3) == 0);

    // q=2, m=2, n=3, multiset {0:2, 1:1}, gamma=(1) -> 2
    auto cls = make_class({{0, 2}, {1, 1}});
    std::vector<uint32_t> g1 = {1};
    CHECK(k_of(cls, g1, 2, 3) == 2);

    // q=2, m=3, n=2, multiset {00:1, 11:1}, gamma=(1,1) -> 1
    auto cls2 = make_class({{0, 1}, {3, 1}});
    std::vector<uint32_t> g11 = {1, 1};
    CHECK(k_of(cls2, g11, 2, 2) == 1);

    // q=3: negation matters: multiset {0:1, (1):1}, gamma=(2) -> -gamma=(1) present
    auto cls3 = make_class({{0, 1}, {1, 1}});
    std::vector<uint32_t> g2 = {2};
    CHECK(k_of(cls3, g2, 3, 2) == 1);
    std::vector<uint32_t> g1q3 = {1};
    CHECK(k_of(cls3, g1q3, 3, 2) == 2);
}

TEST_CASE("profile_of direct examples") {
    // q=2, m=2, n=2, {0:2} -> f(0)=1, f(2)=1
    auto p1 = profile_of(make_class({{0, 2}}), 2, 2, 2);
    REQUIRE(p1.entries.size() == 2);
    CHECK(p1.entries[0].k == 0);
    CHECK(p1.entries[0].count == 1);
    CHECK(p1.entries[1].k == 2);
    CHECK(p1.entries[1].count == 1);

    // q=2, m=2, n=2, {0:1,1:1} -> f(1)=2
    auto p2 = profile_of(make_class({{0, 1}, {1, 1}}), 2, 2, 2);
    REQUIRE(p2.entries.size() == 1);
    CHECK(p2.entries[0].k == 1);
    CHECK(p2.entries[0].count == 2);
}

TEST_CASE("profile counts always sum to q^(m-1)") {
    for (uint32_t q : {2u, 3u}) {
        for (uint32_t m : {2u, 3u}) {
            for (uint32_t n : {2u, 3u, 4u}) {
                for (const auto& cls : collect_multisets(q, m, n)) {
                    auto profile = profile_of(cls, q, m, n);
                    Int total = 0;
                    for (const auto& e : profile.entries) total += static_cast<unsigned long>(e.count);
                    CHECK(total == int_pow(q, m - 1));
                }
            }
        }
    }
}

TEST_CASE("multiset enumeration matches the spec'd small cases") {
    auto m222 = collect_multisets(2, 2, 2);
    REQUIRE(m222.size() == 2);
    CHECK(m222[0].cardinality + m222[1].cardinality == 2);

    auto m232 = collect_multisets(2, 3, 2);
    REQUIRE(m232.size() == 4);
    for (const auto& cls : m232) CHECK(cls.cardinality == 1);

    auto m223 = collect_multisets(2, 2, 3);
    REQUIRE(m223.size() == 3);
    std::map<std::vector<std::pair<uint64_t, uint32_t>>, Int> got;
    for (const auto& cls : m223) {
        std::vector<std::pair<uint64_t, uint32_t>> key;
        for (const auto& e : cls.entries) key.emplace_back(e.value, e.count);
        got[key] = cls.cardinality;
    }
    CHECK(got[{{0, 3}}] == 1);
    CHECK(got[{{0, 2}, {1, 1}}] == 2);
    CHECK(got[{{0, 1}, {1, 2}}] == 1);
}

TEST_CASE("multiset classes reproduce brute-force grouping exactly") {
    for (auto [q, m, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 2, 4},
                           {2, 3, 3},
                           {3, 2, 3},
                           {2, 2, 5},
                           {3, 3, 2}}) {
        auto brute = brute_force_multisets(q, m, n);
        auto classes = collect_multisets(q, m, n);
        REQUIRE(classes.size() == brute.size());
        for (const auto& cls : classes) {
            std::vector<std::pair<uint64_t, uint32_t>> key;
            for (const auto& e : cls.entries) key.emplace_back(e.value, e.count);
            auto it = brute.find(key);
            REQUIRE(it != brute.end());
            CHECK(cls.cardinality == it->second);
        }
    }
}

TEST_CASE("cardinality conservation at both granularities") {
    for (uint32_t q : {2u, 3u}) {
        for (uint32_t m : {2u, 3u, 4u}) {
            for (uint32_t n : {2u, 3u, 4u, 5u}) {
                const Int expected = int_pow(q, (m - 1) * (n - 1));
                Int multiset_total = 0;
                for (const auto& cls : collect_multisets(q, m, n)) multiset_total += cls.cardinality;
                CHECK(multiset_total == expected);
                Int profile_total = 0;
                for (const auto& profile : collect_profiles(q, m, n)) profile_total += profile.cardinality;
                CHECK(profile_total == expected);
            }
        }
    }
}

TEST_CASE("profiles aggregate multiset classes") {
    // q=2, m=3, n=2: {f(0)=1,f(2)=3} card 1 and {f(1)=2,f(2)=2} card 3
    auto profiles = collect_profiles(2, 3, 2);
    REQUIRE(profiles.size() == 2);
    std::map<std::vector<std::pair<uint32_t, uint64_t>>, Int> got;
    for (const auto& p : profiles) {
        std::vector<std::pair<uint32_t, uint64_t>> key;
        for (const auto& e : p.entries) key.emplace_back(e.k, e.count);
        got[key] = p.cardinality;
    }
    CHECK(got[{{0, 1}, {2, 3}}] == 1);
    CHECK(got[{{1, 2}, {2, 2}}] == 3);

    // profiles equal the aggregation of multiset classes sharing the profile
    for (auto [q, m, n] :
         {std::tuple<uint32_t, uint32_t, uint32_t>{2, 2, 4}, {2, 3, 3}, {3, 2, 3}, {2, 4, 3}}) {
        std::map<std::vector<std::pair<uint32_t, uint64_t>>, Int> aggregated;
        for (const auto& cls : collect_multisets(q, m, n)) {
            auto profile = profile_of(cls, q, m, n);
            std::vector<std::pair<uint32_t, uint64_t>> key;
            for (const auto& e : profile.entries) key.emplace_back(e.k, e.count);
            aggregated[key] += cls.cardinality;
        }
        std::map<std::vector<std::pair<uint32_t, uint64_t>>, Int> direct;
        for (const auto& p : collect_profiles(q, m, n)) {
            std::vector<std::pair<uint32_t, uint64_t>> key;
            for (const auto& e : p.entries) key.emplace_back(e.k, e.count);
            direct[key] = p.cardinality;
        }
        CHECK(aggregated == direct);
    }
}

TEST_CASE("class count estimates and the resource gate") {
    CHECK(multiset_class_count(2, 2, 3) == 3);
    CHECK(multiset_class_count(2, 4, 15) == binomial(21, 14));
    ClassLimits tight;
    tight.max_classes = 2;
    CHECK_THROWS_AS(enumerate_multiset_classes(2, 2, 3, tight, [](const SyndromeMultiset&) {}),
                    ResourceLimitError);
    CHECK_THROWS_AS(enumerate_profiles(2, 6, 31, tight, [](const KProfile&) {}), ResourceLimitError);
    try {
        enumerate_multiset_classes(2, 6, 15, {}, [](const SyndromeMultiset&) {});
        FAIL("limit should have triggered");
    } catch (const ResourceLimitError& error) {
        CHECK(std::string(error.what()).find(multiset_class_count(2, 6, 15).get_str()) != std::string::npos);
    }
}

TEST_CASE("total profile cardinality for q=2, m=3, n=3 is 16") {
    Int total = 0;
    for (const auto& profile : collect_profiles(2, 3, 3)) total += profile.cardinality;
    CHECK(total == 16);
}
