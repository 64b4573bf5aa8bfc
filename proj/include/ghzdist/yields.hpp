// Entropy evaluation and the yield formulas of the three concatenated
// protocols (repetition inner code + Shor-Smolin / Maneva-Smolin /
// Chen-Lo outer hashing) plus the two direct hashing baselines.
//
// Probabilities stay exact rationals; entropies are evaluated in MPFR at
// a configurable precision (default 192 bits).  Entropy base is 2 for
// q = 2 and q otherwise, so yields are in bits/dits per channel use and
// must not be compared across different q.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghzdist/channel.hpp"
#include "ghzdist/classes.hpp"
#include "ghzdist/probability.hpp"
#include "ghzdist/real.hpp"

namespace ghzdist {

enum class Protocol { kSS, kMS, kCL, kD1, kD2 };

std::string_view protocol_name(Protocol protocol);
std::optional<Protocol> protocol_from_name(std::string_view name);
bool protocol_uses_inner_code(Protocol protocol);  // false for the baselines

unsigned entropy_base(uint32_t q);

struct YieldOptions {
    mpfr_prec_t precision_bits = 192;
    ClassLimits limits;
};

// -sum p_i log_base p_i with 0 log 0 = 0.  The distribution must sum to
// one exactly; otherwise std::domain_error.
Real entropy(std::span<const Rat> dist, unsigned base, mpfr_prec_t prec);

// Entropy of a grouped conditional distribution: cells of joint mass
// `mass` (count many each), conditioned on a syndrome of mass `normalizer`.
Real entropy_conditional(const GroupedDist& dist, const Rat& normalizer, unsigned base, mpfr_prec_t prec);

struct ClassContribution {
    std::string class_desc;
    double contribution = 0;
};

struct YieldResult {
    Protocol protocol = Protocol::kSS;
    ChannelParams params;
    Real value;
    mpfr_prec_t precision_bits = 192;
    uint64_t class_count = 0;
    double elapsed_seconds = 0;
    std::vector<ClassContribution> top_contributions;
    // First-protocol diagnostics: S_X by direct summation and by the
    // cancellation-friendly rearrangement; they must agree to 2^-64.
    std::optional<Real> s_x_primary;
    std::optional<Real> s_x_alternative;
};

struct SxResult {
    Real primary;
    Real alternative;
    uint64_t class_count = 0;
    std::vector<ClassContribution> top_contributions;
};

// Average conditional entropy of the residual state over syndrome
// classes (k-profile granularity).
SxResult s_x(const ChannelParams& params, const YieldOptions& options = {});

YieldResult yield_ss(const ChannelParams& params, const YieldOptions& options = {});
YieldResult yield_ms(const ChannelParams& params, const YieldOptions& options = {});
YieldResult yield_cl(const ChannelParams& params, const YieldOptions& options = {});

// Hashing baselines applied directly to the single-copy Werner label
// distribution (no inner code; n is irrelevant).
YieldResult baseline_d1(uint32_t m, uint32_t q, const Rat& fidelity, const YieldOptions& options = {});
YieldResult baseline_d2(uint32_t m, uint32_t q, const Rat& fidelity, const YieldOptions& options = {});

// Dispatch on protocol; baselines ignore params.n.
YieldResult compute_yield(Protocol protocol, const ChannelParams& params, const YieldOptions& options = {});

}  // namespace ghzdist
