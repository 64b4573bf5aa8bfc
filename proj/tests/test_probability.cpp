#include "doctest.h"

#include <random>

#include "ghzdist/probability.hpp"
#include "test_util.hpp"

using namespace ghzdist;

namespace {

std::vector<SyndromeMultiset> all_classes(uint32_t q, uint32_t m, uint32_t n) {
    std::vector<SyndromeMultiset> out;
    enumerate_multiset_classes(q, m, n, {}, [&](const SyndromeMultiset& cls) { out.push_back(cls); });
    return out;
}

}  // namespace

TEST_CASE("weight enumerator closed forms") {
    // at x = y = 1 the enumerator counts |E| = q^(n-1)
    CHECK(weight_enumerator(2, 0, 3, 2, Rat(1), Rat(1)) == Rat(4));
    CHECK(weight_enumerator(1, 0, 3, 3, Rat(1), Rat(1)) == Rat(9));

    // k = 0, delta = 0, n = 2 reduces to x^2 + y^2 over GF(2)
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Rat x = test::random_fidelity(rng);
        const Rat y = test::random_fidelity(rng);
        CHECK(weight_enumerator(0, 0, 2, 2, x, y) == x * x + y * y);
        CHECK(weight_enumerator(0, 1, 2, 2, x, y) == 2 * x * y);
    }

    // q=3, k=1, n=2, x=1/8, y=1/2
    CHECK(weight_enumerator(1, 2, 2, 3, Rat(1, 8), Rat(1, 2)) == Rat(3, 32));

    CHECK_THROWS_AS(weight_enumerator(3, 0, 2, 2, Rat(1), Rat(1)), std::domain_error);
}

TEST_CASE("joint probability special points") {
    auto perfect = ChannelParams::make(2, 3, 3, Rat(1));
    CHECK(joint_prob(0, 0, perfect) == Rat(1));
    CHECK(joint_prob(1, 0, perfect) == Rat(0));
    CHECK(joint_prob(0, 2, perfect) == Rat(0));

    // maximally mixed, q=2, m=2, n=2: every (delta, k) cell has mass 1/8
    auto mixed = ChannelParams::make(2, 2, 2, Rat(1, 4));
    for (uint32_t delta : {0u, 1u})
        for (uint32_t k : {0u, 1u, 2u}) CHECK(joint_prob(delta, k, mixed) == Rat(1, 8));

    // frozen by exhaustive enumeration (test_oracle re-derives it)
    auto params = ChannelParams::make(2, 2, 3, Rat(4, 5));
    CHECK(joint_prob(0, 1, params) == Rat(169, 3375));
}

TEST_CASE("joint probability equals the direct fidelity form") {
    // q^(k-1) (1-F)^k (q^m F - qF + q - 1)^(n-k) / (q^m - 1)^n for k > 0,
    // and the (..)^n +- (q^m F - 1)^n forms at k = 0.
    std::mt19937_64 rng(5);
    for (uint32_t q : {2u, 3u, 5u}) {
        for (uint32_t m : {2u, 3u}) {
            const uint32_t n = 3;
            const Rat F = test::random_fidelity(rng);
            auto params = ChannelParams::make(q, m, n, F);
            const Rat qm = Rat(int_pow(q, m));
            const Rat denom = rat_pow(qm - 1, n);
            const Rat a = qm * F - q * F + q - 1;
            const Rat b = qm * F - 1;
            for (uint32_t k = 0; k <= n; ++k) {
                for (uint32_t delta : {0u, 1u}) {
                    Rat expected;
                    if (k > 0) {
                        expected = rat_pow(Rat(static_cast<long>(q)), k - 1) * rat_pow(Rat(1) - F, k) *
                                   rat_pow(a, n - k) / denom;
                    } else if (delta == 0) {
                        expected = (rat_pow(a, n) + (q - 1) * rat_pow(b, n)) / (q * denom);
                    } else {
                        expected = (rat_pow(a, n) - rat_pow(b, n)) / (q * denom);
                    }
                    CHECK(joint_prob(delta, k, params) == expected);
                }
            }
        }
    }
}

TEST_CASE("syndrome probabilities") {
    // q=2, m=2, n=2: Pr(s=0) = [(2F+1)^2 + 4(1-F)^2]/9
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        const Rat F = test::random_fidelity(rng);
        auto params = ChannelParams::make(2, 2, 2, F);
        auto classes = all_classes(2, 2, 2);
        REQUIRE(classes.size() == 2);
        const Rat pr_zero = syndrome_prob(classes[0], params);
        CHECK(pr_zero == (rat_pow(2 * F + 1, 2) + 4 * rat_pow(1 - F, 2)) / 9);
    }
    auto perfect = ChannelParams::make(2, 2, 2, Rat(1));
    CHECK(syndrome_prob(all_classes(2, 2, 2)[0], perfect) == Rat(1));

    // maximally mixed: both syndromes carry 1/2
    auto mixed = ChannelParams::make(2, 2, 2, Rat(1, 4));
    for (const auto& cls : all_classes(2, 2, 2)) CHECK(syndrome_prob(cls, mixed) == Rat(1, 2));
}

TEST_CASE("law of total probability over classes") {
    std::mt19937_64 rng(11);
    for (auto [q, m, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 2, 4},
                           {2, 3, 3},
                           {3, 2, 3},
                           {3, 3, 2},
                           {2, 4, 3},
                           {5, 2, 2}}) {
        const Rat F = test::random_fidelity(rng);
        auto params = ChannelParams::make(q, m, n, F);
        Rat total = 0;
        for (const auto& cls : all_classes(q, m, n)) total += Rat(cls.cardinality) * syndrome_prob(cls, params);
        CHECK(total == Rat(1));
    }
}

TEST_CASE("conditional tables: special points and exact normalization") {
    // F = 1, zero class: Pr((0,0)|0) = 1 and everything else 0
    auto perfect = ChannelParams::make(2, 3, 3, Rat(1));
    auto classes = all_classes(2, 3, 3);
    auto zero_table = conditional_table(classes[0], perfect);
    CHECK(zero_table.rows.front().k == 0);
    CHECK(zero_table.rows.front().p_delta_zero == Rat(1));
    CHECK(zero_table.rows.front().p_delta_other == Rat(0));
    for (size_t i = 1; i < zero_table.rows.size(); ++i) {
        CHECK(zero_table.rows[i].p_delta_zero == Rat(0));
        CHECK(zero_table.rows[i].p_delta_other == Rat(0));
    }
    // zero-probability classes reject conditioning at F = 1
    CHECK_THROWS_AS(conditional_table(classes[1], perfect), std::domain_error);

    // maximally mixed: every (delta, gamma) at exactly q^-m
    for (auto [q, m, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 2, 3}, {3, 2, 2}}) {
        auto mixed = ChannelParams::make(q, m, n, Rat(Int(1), int_pow(q, m)));
        for (const auto& cls : all_classes(q, m, n)) {
            auto table = conditional_table(cls, mixed);
            for (const auto& row : table.rows) {
                CHECK(row.p_delta_zero == Rat(Int(1), int_pow(q, m)));
                CHECK(row.p_delta_other == Rat(Int(1), int_pow(q, m)));
            }
        }
    }

    // exact normalization and the uniform-delta law on a grid of random F
    std::mt19937_64 rng(13);
    for (auto [q, m, n] : {std::tuple<uint32_t, uint32_t, uint32_t>{2, 2, 4},
                           {2, 3, 3},
                           {3, 2, 3},
                           {3, 3, 2},
                           {5, 2, 2}}) {
        const Rat F = test::random_fidelity(rng);
        auto params = ChannelParams::make(q, m, n, F);
        for (const auto& cls : all_classes(q, m, n)) {
            auto table = conditional_table(cls, params);
            CHECK(table.total_mass() == Rat(1));
            const bool zero_syndrome = cls.entries.size() == 1;  // only {0:n} has one entry
            if (!zero_syndrome) CHECK(table.delta_uniform());
        }
    }
}

TEST_CASE("marginal building blocks integrate back to Pr(s)") {
    std::mt19937_64 rng(17);
    for (auto [q, m, n] :
         {std::tuple<uint32_t, uint32_t, uint32_t>{2, 3, 3}, {3, 3, 2}, {2, 4, 3}, {3, 2, 3}}) {
        const Rat F = test::random_fidelity(rng);
        auto params = ChannelParams::make(q, m, n, F);
        for (const auto& cls : all_classes(q, m, n)) {
            const Rat pr_s = syndrome_prob(cls, params);
            CHECK(delta_marginal(cls, params).total() == pr_s);
            CHECK(gamma_marginal(cls, params).total() == pr_s);
            CHECK(joint_delta_gamma(cls, params).total() == pr_s);
            for (uint32_t i = 1; i <= m - 1; ++i) CHECK(coordinate_marginal(cls, params, i).total() == pr_s);
            for (uint32_t len = 0; len <= m - 1; ++len) CHECK(prefix_marginal(cls, params, len).total() == pr_s);
        }
    }
}
