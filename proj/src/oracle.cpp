#include "ghzdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "ghzdist/classes.hpp"
#include "ghzdist/labels.hpp"
#include "ghzdist/probability.hpp"
#include "ghzdist/yields.hpp"

namespace ghzdist {

namespace {

ErrorLabel label_from_index(uint64_t index, uint32_t q, uint32_t m) {
    const uint32_t beta = static_cast<uint32_t>(index % q);
    return ErrorLabel(q, beta, decode_vector(index / q, q, m - 1));
}

uint64_t syndrome_index(const RepetitionDecode& decoded, uint32_t q, uint32_t m) {
    const uint64_t radix = int_pow(q, m - 1).get_ui();
    uint64_t index = 0;
    for (size_t j = decoded.syndrome.size(); j-- > 0;)
        index = index * radix + encode_vector(decoded.syndrome[j], q);
    return index;
}

JointKey key_of(const RepetitionDecode& decoded, uint32_t q, uint32_t m) {
    JointKey key;
    key.delta = decoded.residual.beta;
    key.gamma = encode_vector(decoded.residual.alpha, q);
    key.syndrome = syndrome_index(decoded, q, m);
    return key;
}

}  // namespace

Rat ExhaustiveJointTable::total() const {
    Rat sum = 0;
    for (const auto& [key, value] : mass) sum += value;
    return sum;
}

ExhaustiveJointTable exhaustive_joint(const ChannelParams& params, uint64_t tuple_cap) {
    const Int tuple_count = int_pow(params.q, params.m * params.n);
    if (tuple_count > Int(static_cast<unsigned long>(tuple_cap)))
        throw ResourceLimitError("q^(mn) = " + tuple_count.get_str() + " exceeds the exhaustive cap");

    const uint64_t labels_per_copy = params.labels_per_copy().get_ui();
    const Rat x = params.x();
    const Rat y = params.y();

    ExhaustiveJointTable table;
    table.params = params;

    std::vector<uint64_t> indices(params.n, 0);
    std::vector<ErrorLabel> labels;
    labels.reserve(params.n);
    for (uint64_t i = 0; i < params.n; ++i) labels.push_back(label_from_index(0, params.q, params.m));
    while (true) {
        uint32_t weight = 0;
        for (uint32_t j = 0; j < params.n; ++j)
            if (!labels[j].is_identity()) ++weight;
        const Rat mass = rat_pow(x, weight) * rat_pow(y, params.n - weight);
        if (mass != 0) {
            const RepetitionDecode decoded = decode_repetition(LabelTuple::make(labels));
            table.mass[key_of(decoded, params.q, params.m)] += mass;
        }
        // mixed-radix increment
        uint32_t pos = 0;
        for (; pos < params.n; ++pos) {
            if (++indices[pos] < labels_per_copy) {
                labels[pos] = label_from_index(indices[pos], params.q, params.m);
                break;
            }
            indices[pos] = 0;
            labels[pos] = label_from_index(0, params.q, params.m);
        }
        if (pos == params.n) break;
    }
    return table;
}

Real exhaustive_sx(const ChannelParams& params, mpfr_prec_t prec, uint64_t syndrome_cap) {
    const Int syndrome_count_big = int_pow(params.q, (params.m - 1) * (params.n - 1));
    if (syndrome_count_big > Int(static_cast<unsigned long>(syndrome_cap)))
        throw ResourceLimitError("syndrome space " + syndrome_count_big.get_str() + " exceeds the cap");
    const uint64_t syndrome_count = syndrome_count_big.get_ui();
    const uint64_t gamma_count = params.gamma_space().get_ui();
    const uint64_t radix = gamma_count;
    const unsigned base = entropy_base(params.q);
    const Real ln_base = Real::log(Real::of(static_cast<long>(base), prec));

    Real sx(prec);
    for (uint64_t s = 0; s < syndrome_count; ++s) {
        // raw syndrome values s_0 = 0, s_1, ..., s_(n-1)
        std::vector<uint64_t> values(params.n, 0);
        uint64_t rest = s;
        for (uint32_t j = 1; j < params.n; ++j) {
            values[j] = rest % radix;
            rest /= radix;
        }
        // k(s, t) for every t, straight from the definition
        std::map<uint32_t, uint64_t> f;
        for (uint64_t t = 0; t < gamma_count; ++t) {
            // s_j + t != 0  <=>  s_j != -t
            const uint64_t neg_t = negate_encoded(t, params.q, params.m - 1);
            uint32_t k = 0;
            for (uint32_t j = 0; j < params.n; ++j)
                if (values[j] != neg_t) ++k;
            f[k] += 1;
        }
        KProfile profile;
        for (const auto& [k, count] : f) profile.entries.push_back({k, count});
        profile.cardinality = 1;

        const Rat pr_s = syndrome_prob(profile, params);
        if (pr_s == 0) continue;
        GroupedDist cells;
        for (const KProfile::Entry& e : profile.entries) {
            const Int count(static_cast<unsigned long>(e.count));
            cells.groups.emplace_back(joint_prob(0, e.k, params), count);
            cells.groups.emplace_back(joint_prob(1, e.k, params), count * (static_cast<long>(params.q) - 1));
        }
        Real h(prec);
        for (const auto& [mass, count] : cells.groups) {
            if (mass == 0 || count == 0) continue;
            const Real p = Real::of(mass / pr_s, prec);
            h -= Real::of(count, prec) * p * Real::log(p);
        }
        sx += Real::of(pr_s, prec) * h / ln_base;
    }
    return sx;
}

namespace {

constexpr uint64_t kChunkSize = uint64_t(1) << 16;

uint64_t splitmix64(uint64_t state) {
    uint64_t z = state + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class SeededRng {
  public:
    explicit SeededRng(uint64_t seed) : engine_(seed) {}

    // Unbiased draw from [0, bound) by rejection on whole 64-bit words.
    uint64_t next_below(uint64_t bound) {
        const uint64_t limit = bound * (UINT64_MAX / bound);
        while (true) {
            const uint64_t word = engine_();
            if (word < limit) return word % bound;
        }
    }

    // Same, for arbitrary-precision bounds: draw bit_count bits, reject.
    Int next_below(const Int& bound) {
        if (bound.fits_ulong_p()) return Int(static_cast<unsigned long>(next_below(bound.get_ui())));
        const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        while (true) {
            Int draw = 0;
            for (size_t produced = 0; produced < bits; produced += 64) {
                draw <<= 64;
                draw += Int(static_cast<unsigned long>(engine_()));
            }
            draw >>= (64 - bits % 64) % 64;
            if (draw < bound) return draw;
        }
    }

  private:
    std::mt19937_64 engine_;
};

struct ChunkTally {
    std::map<JointKey, uint64_t> counts;
};

ChunkTally run_chunk(const ChannelParams& params, uint64_t chunk_seed, uint64_t sets) {
    SeededRng rng(chunk_seed);
    const Int fid_den = params.fidelity.get_den();
    const Int fid_num = params.fidelity.get_num();
    const Int nonidentity = params.labels_per_copy() - 1;
    const uint64_t nonidentity_u = nonidentity.get_ui();

    ChunkTally tally;
    std::vector<ErrorLabel> labels;
    for (uint64_t set = 0; set < sets; ++set) {
        labels.clear();
        for (uint32_t j = 0; j < params.n; ++j) {
            const Int draw = rng.next_below(fid_den);
            uint64_t index = 0;
            if (draw >= fid_num) index = 1 + rng.next_below(nonidentity_u);
            labels.push_back(label_from_index(index, params.q, params.m));
        }
        // random source assignment; a statistical no-op for iid labels
        const uint64_t source = rng.next_below(static_cast<uint64_t>(params.n));
        std::swap(labels[0], labels[source]);

        // decode through the MXOR circuit: fold every target into the
        // source, then negate each target's alpha to read the syndrome
        LabelTuple tuple = LabelTuple::make(labels);
        ErrorLabel residual = tuple.labels[0];
        RepetitionDecode circuit;
        RingK ring(params.q);
        for (uint32_t j = 1; j < params.n; ++j) {
            auto [next_source, measured] = mxor(residual, tuple.labels[j]);
            residual = next_source;
            std::vector<uint32_t> s(measured.alpha.size());
            for (size_t i = 0; i < s.size(); ++i) s[i] = ring.neg(measured.alpha[i]);
            circuit.syndrome.push_back(std::move(s));
        }
        circuit.residual = residual;

        const RepetitionDecode direct = decode_repetition(tuple);
        if (circuit.syndrome != direct.syndrome || !(circuit.residual == direct.residual))
            throw std::logic_error("MXOR circuit and closed-form decoding disagree");
        tally.counts[key_of(circuit, params.q, params.m)] += 1;
    }
    return tally;
}

}  // namespace

SimulationResult simulate_protocol(const ChannelParams& params, const SimulationOptions& options) {
    if (options.samples == 0) throw std::invalid_argument("samples must be >= 1");
    const Int syndrome_space = int_pow(params.q, (params.m - 1) * (params.n - 1));
    if (!syndrome_space.fits_ulong_p()) throw ResourceLimitError("syndrome space does not fit an index");

    SimulationResult result;
    result.params = params;
    result.samples = options.samples;
    result.seed = options.seed;

    const uint64_t chunk_count = (options.samples + kChunkSize - 1) / kChunkSize;
    const unsigned workers = std::max(1u, options.threads);

    std::vector<ChunkTally> tallies(chunk_count);
    uint64_t next_chunk = 0;
    while (next_chunk < chunk_count) {
        const uint64_t batch = std::min<uint64_t>(workers, chunk_count - next_chunk);
        std::vector<std::future<ChunkTally>> futures;
        for (uint64_t b = 0; b < batch; ++b) {
            const uint64_t c = next_chunk + b;
            const uint64_t sets = std::min(kChunkSize, options.samples - c * kChunkSize);
            futures.push_back(std::async(batch == 1 ? std::launch::deferred : std::launch::async,
                                         [&params, c, sets, seed = options.seed] {
                                             return run_chunk(params, splitmix64(seed + c), sets);
                                         }));
        }
        for (uint64_t b = 0; b < batch; ++b) tallies[next_chunk + b] = futures[b].get();
        next_chunk += batch;
    }
    // merge in chunk order
    for (const ChunkTally& tally : tallies)
        for (const auto& [key, count] : tally.counts) result.counts[key] += count;
    return result;
}

std::vector<CellCheck> compare_simulation(const SimulationResult& result) {
    const ChannelParams& params = result.params;
    const uint64_t gamma_count = params.gamma_space().get_ui();
    const uint64_t radix = gamma_count;
    const uint64_t syndrome_count = int_pow(params.q, (params.m - 1) * (params.n - 1)).get_ui();
    const double samples = static_cast<double>(result.samples);

    std::vector<CellCheck> checks;
    for (uint64_t s = 0; s < syndrome_count; ++s) {
        std::vector<uint64_t> values(params.n, 0);
        uint64_t rest = s;
        for (uint32_t j = 1; j < params.n; ++j) {
            values[j] = rest % radix;
            rest /= radix;
        }
        for (uint64_t gamma = 0; gamma < gamma_count; ++gamma) {
            uint32_t k = 0;
            const uint64_t neg_gamma = negate_encoded(gamma, params.q, params.m - 1);
            for (uint32_t j = 0; j < params.n; ++j)
                if (values[j] != neg_gamma) ++k;
            for (uint32_t delta = 0; delta < params.q; ++delta) {
                const Rat p = joint_prob(delta, k, params);
                if (p == 0) continue;
                CellCheck check;
                check.key = {delta, gamma, s};
                check.expected = Real::of(p, 64).to_double();
                auto it = result.counts.find(check.key);
                const double observed = it == result.counts.end() ? 0.0 : static_cast<double>(it->second);
                check.observed = observed / samples;
                const double sigma = std::sqrt(check.expected * (1 - check.expected) / samples);
                check.z = sigma > 0 ? (check.observed - check.expected) / sigma : 0.0;
                checks.push_back(check);
            }
        }
    }
    return checks;
}

}  // namespace ghzdist
