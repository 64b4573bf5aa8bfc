#include "doctest.h"

#include <random>

#include "ghzdist/labels.hpp"
#include "test_util.hpp"

using namespace ghzdist;
using test::label;
using test::tuple_from_indices;

TEST_CASE("ring arithmetic") {
    RingK gf2(2);
    CHECK(gf2.add(1, 1) == 0);
    CHECK(gf2.neg(1) == 1);
    RingK z3(3);
    CHECK(z3.add(1, 2) == 0);
    CHECK(z3.sub(2, 1) == 1);
    CHECK(z3.neg(0) == 0);
    CHECK_THROWS_AS(RingK(1), std::invalid_argument);
}

TEST_CASE("mxor identity and direct substitutions") {
    // identity pair stays put
    auto [s0, t0] = mxor(label(2, 0, {0}), label(2, 0, {0}));
    CHECK(s0 == label(2, 0, {0}));
    CHECK(t0 == label(2, 0, {0}));

    // q=2, m=3
    auto [s1, t1] = mxor(label(2, 1, {1, 0}), label(2, 0, {0, 1}));
    CHECK(s1 == label(2, 1, {1, 0}));
    CHECK(t1 == label(2, 0, {1, 1}));

    // q=3, m=2: 1+2 = 0 and 2-1 = 1
    auto [s2, t2] = mxor(label(3, 1, {2}), label(3, 2, {1}));
    CHECK(s2 == label(3, 0, {2}));
    CHECK(t2 == label(3, 2, {1}));
}

TEST_CASE("mxor rejects mismatched dimensions") {
    CHECK_THROWS_AS(mxor(label(2, 0, {0}), label(3, 0, {0})), std::invalid_argument);
    CHECK_THROWS_AS(mxor(label(2, 0, {0}), label(2, 0, {0, 0})), std::invalid_argument);
}

TEST_CASE("mxor folds the beta pair-sum into the source") {
    // The conservation the decoder relies on: the source accumulates the
    // pair total while its alpha and the target's beta stay put, so the
    // composed residual carries the sum of every beta in the tuple.
    std::mt19937_64 rng(7);
    for (uint32_t q : {2u, 3u, 5u}) {
        RingK ring(q);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<uint32_t> dist(0, q - 1);
            ErrorLabel a(q, dist(rng), {dist(rng), dist(rng)});
            ErrorLabel b(q, dist(rng), {dist(rng), dist(rng)});
            auto [a2, b2] = mxor(a, b);
            CHECK(a2.beta == ring.add(a.beta, b.beta));
            CHECK(a2.alpha == a.alpha);
            CHECK(b2.beta == b.beta);
        }
    }
    // and through a whole composition: residual beta is the tuple total
    std::uniform_int_distribution<uint32_t> dist(0, 2);
    RingK z3(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ErrorLabel> labels;
        uint32_t total = 0;
        for (int j = 0; j < 4; ++j) {
            labels.push_back(ErrorLabel(3, dist(rng), {dist(rng), dist(rng)}));
            total = z3.add(total, labels.back().beta);
        }
        ErrorLabel source = labels[0];
        for (int j = 1; j < 4; ++j) source = mxor(source, labels[j]).first;
        CHECK(source.beta == total);
    }
}

TEST_CASE("repetition decode direct substitution") {
    // all-zero tuple
    auto zero = decode_repetition(tuple_from_indices(3, 3, 3, 0));
    for (const auto& s : zero.syndrome)
        for (uint32_t c : s) CHECK(c == 0);
    CHECK(zero.residual.is_identity());

    // q=2, m=2, n=2: ((1,(1)),(1,(0))) -> s=((1)), residual (0,(1))
    auto decoded = decode_repetition(LabelTuple::make({label(2, 1, {1}), label(2, 1, {0})}));
    REQUIRE(decoded.syndrome.size() == 1);
    CHECK(decoded.syndrome[0] == std::vector<uint32_t>{1});
    CHECK(decoded.residual == label(2, 0, {1}));

    CHECK_THROWS_AS(decode_repetition(LabelTuple::make({label(2, 0, {0})})), std::domain_error);
}

TEST_CASE("repetition decode equals the MXOR composition on all q=2, m=3, n=3 tuples") {
    const uint32_t q = 2, m = 3, n = 3;
    RingK ring(q);
    const uint64_t total = int_pow(q, m * n).get_ui();
    for (uint64_t index = 0; index < total; ++index) {
        LabelTuple tuple = tuple_from_indices(q, m, n, index);
        const auto direct = decode_repetition(tuple);

        ErrorLabel source = tuple.labels[0];
        std::vector<std::vector<uint32_t>> syndrome;
        for (uint32_t j = 1; j < n; ++j) {
            auto [next_source, measured] = mxor(source, tuple.labels[j]);
            source = next_source;
            std::vector<uint32_t> s(measured.alpha.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = ring.neg(measured.alpha[i]);
            syndrome.push_back(std::move(s));
        }
        CHECK(direct.syndrome == syndrome);
        CHECK(direct.residual == source);
    }
}

TEST_CASE("decode yields zero syndrome whenever all alphas agree") {
    std::mt19937_64 rng(11);
    for (uint32_t q : {2u, 3u, 4u}) {
        std::uniform_int_distribution<uint32_t> dist(0, q - 1);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<uint32_t> alpha = {dist(rng), dist(rng)};
            std::vector<ErrorLabel> labels;
            for (int j = 0; j < 4; ++j) labels.push_back(ErrorLabel(q, dist(rng), alpha));
            auto decoded = decode_repetition(LabelTuple::make(labels));
            for (const auto& s : decoded.syndrome)
                for (uint32_t c : s) CHECK(c == 0);
        }
    }
}

TEST_CASE("depolarization weight counts and is permutation invariant") {
    CHECK(depolarization_weight(tuple_from_indices(2, 2, 4, 0)) == 0);
    // q=2, m=2, n=3: ((0,(0)),(1,(0)),(0,(1))) -> 2
    auto tuple = LabelTuple::make({label(2, 0, {0}), label(2, 1, {0}), label(2, 0, {1})});
    CHECK(depolarization_weight(tuple) == 2);
    // q=3, m=2, n=2: single nonzero label
    CHECK(depolarization_weight(LabelTuple::make({label(3, 0, {2}), label(3, 0, {0})})) == 1);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<uint32_t> dist(0, 2);
        std::vector<ErrorLabel> labels;
        for (int j = 0; j < 5; ++j) labels.push_back(ErrorLabel(3, dist(rng), {dist(rng), dist(rng)}));
        const uint32_t weight = depolarization_weight(LabelTuple::make(labels));
        std::shuffle(labels.begin(), labels.end(), rng);
        CHECK(depolarization_weight(LabelTuple::make(labels)) == weight);
    }
}

TEST_CASE("vector encoding round trip and negation") {
    std::mt19937_64 rng(17);
    for (uint32_t q : {2u, 3u, 5u}) {
        RingK ring(q);
        std::uniform_int_distribution<uint32_t> dist(0, q - 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<uint32_t> coords = {dist(rng), dist(rng), dist(rng)};
            const uint64_t encoded = encode_vector(coords, q);
            CHECK(decode_vector(encoded, q, 3) == coords);
            std::vector<uint32_t> negated(3);
            for (size_t i = 0; i < 3; ++i) negated[i] = ring.neg(coords[i]);
            CHECK(negate_encoded(encoded, q, 3) == encode_vector(negated, q));
        }
    }
}
