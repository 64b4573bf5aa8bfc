#include "ghzdist/yields.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace ghzdist {

std::string_view protocol_name(Protocol protocol) {
    switch (protocol) {
        case Protocol::kSS: return "ss";
        case Protocol::kMS: return "ms";
        case Protocol::kCL: return "cl";
        case Protocol::kD1: return "d1";
        case Protocol::kD2: return "d2";
    }
    return "?";
}

std::optional<Protocol> protocol_from_name(std::string_view name) {
    if (name == "ss") return Protocol::kSS;
    if (name == "ms") return Protocol::kMS;
    if (name == "cl") return Protocol::kCL;
    if (name == "d1") return Protocol::kD1;
    if (name == "d2") return Protocol::kD2;
    return std::nullopt;
}

bool protocol_uses_inner_code(Protocol protocol) {
    return protocol == Protocol::kSS || protocol == Protocol::kMS || protocol == Protocol::kCL;
}

unsigned entropy_base(uint32_t q) { return q == 2 ? 2 : q; }

namespace {

// -sum count * p * ln(p), p = mass / normalizer, in units of ln.
Real neg_plogp(const GroupedDist& dist, const Rat& normalizer, mpfr_prec_t prec) {
    Real acc(prec);
    for (const auto& [mass, count] : dist.groups) {
        if (mass == 0 || count == 0) continue;  // 0 log 0 = 0
        const Rat p = mass / normalizer;
        const Real pr = Real::of(p, prec);
        acc -= Real::of(count, prec) * pr * Real::log(pr);
    }
    return acc;
}

Real log_base(unsigned base, mpfr_prec_t prec) { return Real::log(Real::of(static_cast<long>(base), prec)); }

class TopContributions {
  public:
    void record(std::string desc, double contribution) {
        items_.push_back({std::move(desc), contribution});
        std::sort(items_.begin(), items_.end(), [](const ClassContribution& a, const ClassContribution& b) {
            return std::abs(a.contribution) > std::abs(b.contribution);
        });
        if (items_.size() > 3) items_.resize(3);
    }
    std::vector<ClassContribution> take() { return std::move(items_); }

  private:
    std::vector<ClassContribution> items_;
};

std::string describe_profile(const KProfile& profile) {
    std::ostringstream out;
    out << "profile{";
    for (size_t i = 0; i < profile.entries.size(); ++i) {
        if (i) out << ",";
        out << "f(" << profile.entries[i].k << ")=" << profile.entries[i].count;
    }
    out << "}";
    return out.str();
}

std::string describe_multiset(const SyndromeMultiset& cls) {
    std::ostringstream out;
    out << "multiset{";
    for (size_t i = 0; i < cls.entries.size(); ++i) {
        if (i) out << ",";
        out << cls.entries[i].value << ":" << cls.entries[i].count;
    }
    out << "}";
    return out.str();
}

bool is_zero_syndrome(const KProfile& profile) {
    return !profile.entries.empty() && profile.entries.front().k == 0;
}

}  // namespace

Real entropy(std::span<const Rat> dist, unsigned base, mpfr_prec_t prec) {
    Rat total = 0;
    for (const Rat& p : dist) {
        if (p < 0) throw std::domain_error("entropy input has a negative entry");
        total += p;
    }
    if (total != 1) throw std::domain_error("entropy input does not sum to one");
    GroupedDist grouped;
    for (const Rat& p : dist) grouped.groups.emplace_back(p, Int(1));
    return neg_plogp(grouped, Rat(1), prec) / log_base(base, prec);
}

Real entropy_conditional(const GroupedDist& dist, const Rat& normalizer, unsigned base, mpfr_prec_t prec) {
    if (normalizer <= 0) throw std::domain_error("conditional entropy needs a positive normalizer");
    return neg_plogp(dist, normalizer, prec) / log_base(base, prec);
}

SxResult s_x(const ChannelParams& params, const YieldOptions& options) {
    const mpfr_prec_t prec = options.precision_bits;
    const unsigned base = entropy_base(params.q);
    const Real ln_base = log_base(base, prec);

    Real direct(prec);          // sum Pr(s) h(s)
    Real zero_term(prec);       // Pr(0) [1 - h(0)]
    Real nonzero_excess(prec);  // sum_{s != 0} Pr(s) [h(s) - 1]
    const Real one = Real::of(1, prec);
    uint64_t class_count = 0;
    TopContributions top;

    enumerate_profiles(params.q, params.m, params.n, options.limits, [&](const KProfile& profile) {
        ++class_count;
        const Rat pr_s = syndrome_prob(profile, params);
        if (pr_s == 0) return;
        GroupedDist cells;
        for (const KProfile::Entry& e : profile.entries) {
            const Int count(static_cast<unsigned long>(e.count));
            cells.groups.emplace_back(joint_prob(0, e.k, params), count);
            cells.groups.emplace_back(joint_prob(1, e.k, params), count * (static_cast<long>(params.q) - 1));
        }
        const Real h = neg_plogp(cells, pr_s, prec) / ln_base;
        const Real mass = Real::of(Rat(profile.cardinality) * pr_s, prec);
        const Real contribution = mass * h;
        direct += contribution;
        top.record(describe_profile(profile), contribution.to_double());
        if (is_zero_syndrome(profile)) {
            zero_term = mass * (one - h);
        } else {
            nonzero_excess += mass * (h - one);
        }
    });

    SxResult out{direct, one - (zero_term - nonzero_excess), class_count, top.take()};
    if ((out.primary - out.alternative).abs() > Real::pow2(-64, prec))
        throw std::logic_error("direct and rearranged averages of the conditional entropy disagree");
    return out;
}

namespace {

YieldResult finish(Protocol protocol, const ChannelParams& params, Real value, const YieldOptions& options,
                   uint64_t class_count, TopContributions& top,
                   std::chrono::steady_clock::time_point started) {
    YieldResult result;
    result.protocol = protocol;
    result.params = params;
    result.value = std::move(value);
    result.precision_bits = options.precision_bits;
    result.class_count = class_count;
    result.top_contributions = top.take();
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

// Shared shape of the second and third protocols: per class,
//   term = max_i H(...) + H(delta|s) [- I(delta;gamma|s)],
// yield = (1/n) (1 - sum_s Pr(s) term).
template <typename PerClassTerm>
YieldResult class_sum_yield(Protocol protocol, const ChannelParams& params, const YieldOptions& options,
                            PerClassTerm per_class) {
    const auto started = std::chrono::steady_clock::now();
    const mpfr_prec_t prec = options.precision_bits;
    Real weighted(prec);
    uint64_t class_count = 0;
    TopContributions top;
    enumerate_multiset_classes(params.q, params.m, params.n, options.limits, [&](const SyndromeMultiset& cls) {
        ++class_count;
        const Rat pr_s = syndrome_prob(cls, params);
        if (pr_s == 0) return;
        const Real term = per_class(cls, pr_s);
        const Real contribution = Real::of(Rat(cls.cardinality) * pr_s, prec) * term;
        weighted += contribution;
        top.record(describe_multiset(cls), contribution.to_double());
    });
    const Real value =
        (Real::of(1, prec) - weighted) / Real::of(static_cast<long>(params.n), prec);
    return finish(protocol, params, value, options, class_count, top, started);
}

}  // namespace

YieldResult yield_ss(const ChannelParams& params, const YieldOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const SxResult sx = s_x(params, options);
    const mpfr_prec_t prec = options.precision_bits;
    const Real value = (Real::of(1, prec) - sx.primary) / Real::of(static_cast<long>(params.n), prec);
    TopContributions top;
    YieldResult result = finish(Protocol::kSS, params, value, options, sx.class_count, top, started);
    result.top_contributions = sx.top_contributions;
    result.s_x_primary = sx.primary;
    result.s_x_alternative = sx.alternative;
    return result;
}

YieldResult yield_ms(const ChannelParams& params, const YieldOptions& options) {
    const mpfr_prec_t prec = options.precision_bits;
    const unsigned base = entropy_base(params.q);
    return class_sum_yield(Protocol::kMS, params, options, [&](const SyndromeMultiset& cls, const Rat& pr_s) {
        Real max_coord(prec);
        for (uint32_t i = 1; i <= params.m - 1; ++i) {
            const Real h = entropy_conditional(coordinate_marginal(cls, params, i), pr_s, base, prec);
            if (i == 1 || h > max_coord) max_coord = h;
        }
        const GroupedDist dm = delta_marginal(cls, params);
        // delta is exactly uniform away from the zero syndrome, where its
        // entropy is exactly one dit (base == q).
        const Real h_delta = dm.groups.front().first == dm.groups.back().first
                                 ? Real::of(1, prec)
                                 : entropy_conditional(dm, pr_s, base, prec);
        return max_coord + h_delta;
    });
}

YieldResult yield_cl(const ChannelParams& params, const YieldOptions& options) {
    const mpfr_prec_t prec = options.precision_bits;
    const unsigned base = entropy_base(params.q);
    return class_sum_yield(Protocol::kCL, params, options, [&](const SyndromeMultiset& cls, const Rat& pr_s) {
        // Chained conditional entropies via prefix-marginal differences:
        // H(gamma_i | gamma_(i-1)..gamma_1, s) = H(prefix_i|s) - H(prefix_(i-1)|s).
        Real max_chain(prec);
        Real previous(prec);
        for (uint32_t len = 1; len <= params.m - 1; ++len) {
            const Real h_prefix = entropy_conditional(prefix_marginal(cls, params, len), pr_s, base, prec);
            const Real chained = h_prefix - previous;
            if (len == 1 || chained > max_chain) max_chain = chained;
            previous = h_prefix;
        }
        const GroupedDist dm = delta_marginal(cls, params);
        const bool uniform = dm.groups.front().first == dm.groups.back().first;
        Real h_delta = uniform ? Real::of(1, prec) : entropy_conditional(dm, pr_s, base, prec);
        Real mutual(prec);  // I(delta; gamma | s), exactly 0 when delta is uniform
        if (!uniform) {
            const Real h_gamma = entropy_conditional(gamma_marginal(cls, params), pr_s, base, prec);
            const Real h_joint = entropy_conditional(joint_delta_gamma(cls, params), pr_s, base, prec);
            mutual = h_delta + h_gamma - h_joint;
        }
        return max_chain + h_delta - mutual;
    });
}

namespace {

// Single-copy Werner marginals: the joint over (b_0, ..., b_(m-1)) puts F
// on the all-zero label and x on each of the other q^m - 1.  A marginal
// over any j coordinates keeps F + (q^(m-j) - 1) x on zero and q^(m-j) x
// elsewhere.
GroupedDist werner_marginal(uint32_t q, uint32_t m, uint32_t kept, const Rat& fidelity) {
    const Rat x = (Rat(1) - fidelity) / Rat(int_pow(q, m) - 1);
    const Int cells = int_pow(q, kept);
    const Int rest = int_pow(q, m - kept);
    GroupedDist dist;
    dist.groups.emplace_back(fidelity + Rat(rest - 1) * x, Int(1));
    dist.groups.emplace_back(Rat(rest) * x, cells - 1);
    return dist;
}

}  // namespace

YieldResult baseline_d1(uint32_t m, uint32_t q, const Rat& fidelity, const YieldOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const ChannelParams params = ChannelParams::make(q, m, 2, fidelity);
    const mpfr_prec_t prec = options.precision_bits;
    const unsigned base = entropy_base(q);
    // Every single-coordinate marginal of the Werner label distribution is
    // the same, so max_i H(b_i) = H(b_0).
    const Real h_single = entropy_conditional(werner_marginal(q, m, 1, params.fidelity), Rat(1), base, prec);
    const Real value = Real::of(1, prec) - h_single - h_single;
    TopContributions top;
    YieldResult result = finish(Protocol::kD1, params, value, options, 0, top, started);
    return result;
}

YieldResult baseline_d2(uint32_t m, uint32_t q, const Rat& fidelity, const YieldOptions& options) {
    const auto started = std::chrono::steady_clock::now();
    const ChannelParams params = ChannelParams::make(q, m, 2, fidelity);
    const mpfr_prec_t prec = options.precision_bits;
    const unsigned base = entropy_base(q);

    // Chained conditional entropies of the bit-flip coordinates
    // b_1, ..., b_(m-1); prefix entropies H(b_1..b_i) drive both the max
    // term and the mutual information I(b_0; b_(m-1)..b_1).
    std::vector<Real> prefix;
    prefix.push_back(Real(prec));  // H(empty) = 0
    for (uint32_t i = 1; i <= m - 1; ++i)
        prefix.push_back(entropy_conditional(werner_marginal(q, m, i, params.fidelity), Rat(1), base, prec));
    Real max_chain(prec);
    for (uint32_t i = 1; i <= m - 1; ++i) {
        const Real chained = prefix[i] - prefix[i - 1];
        if (i == 1 || chained > max_chain) max_chain = chained;
    }
    const Real h_b0 = entropy_conditional(werner_marginal(q, m, 1, params.fidelity), Rat(1), base, prec);
    const Real h_full = entropy_conditional(werner_marginal(q, m, m, params.fidelity), Rat(1), base, prec);
    const Real mutual = h_b0 + prefix[m - 1] - h_full;
    const Real value = Real::of(1, prec) - max_chain - h_b0 + mutual;
    TopContributions top;
    return finish(Protocol::kD2, params, value, options, 0, top, started);
}

YieldResult compute_yield(Protocol protocol, const ChannelParams& params, const YieldOptions& options) {
    switch (protocol) {
        case Protocol::kSS: return yield_ss(params, options);
        case Protocol::kMS: return yield_ms(params, options);
        case Protocol::kCL: return yield_cl(params, options);
        case Protocol::kD1: return baseline_d1(params.m, params.q, params.fidelity, options);
        case Protocol::kD2: return baseline_d2(params.m, params.q, params.fidelity, options);
    }
    throw std::logic_error("unknown protocol");
}

}  // namespace ghzdist
