#include "ghzdist/rational.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ghzdist {

Int int_pow(const Int& base, unsigned long exp) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    // num/den already coprime, so the power is canonical.
    return out;
}

Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Int falling_factorial(const Int& x, unsigned long k) {
    Int out = 1;
    for (unsigned long i = 0; i < k; ++i) out *= x - static_cast<long>(i);
    return out;
}

Int partitions_exact(unsigned long n, unsigned long k) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (k > n) return 0;
    static std::map<std::pair<unsigned long, unsigned long>, Int> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
    // p(n,k) = p(n-1,k-1) + p(n-k,k)
    std::function<Int(unsigned long, unsigned long)> rec = [&](unsigned long nn, unsigned long kk) -> Int {
        if (kk == 0) return nn == 0 ? 1 : 0;
        if (kk > nn) return 0;
        auto found = cache.find({nn, kk});
        if (found != cache.end()) return found->second;
        Int value = rec(nn - 1, kk - 1) + rec(nn - kk, kk);
        cache.emplace(std::make_pair(nn, kk), value);
        return value;
    };
    return rec(n, k);
}

std::optional<Rat> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) return std::nullopt;
        Int n, d;
        if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) return std::nullopt;
        if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) return std::nullopt;
        if (d <= 0) return std::nullopt;
        Rat out(n, d);
        out.canonicalize();
        return out;
    }
    // decimal literal: [+-]?digits[.digits]  (at least one digit overall)
    std::string_view rest = text;
    bool negative = false;
    if (rest.front() == '+' || rest.front() == '-') {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    std::string digits;
    unsigned long frac_digits = 0;
    bool seen_point = false;
    for (char c : rest) {
        if (c == '.') {
            if (seen_point) return std::nullopt;
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            return std::nullopt;
        }
    }
    if (digits.empty()) return std::nullopt;
    Int n;
    if (mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0) return std::nullopt;
    if (negative) n = -n;
    Rat out(n, int_pow(10, frac_digits));
    out.canonicalize();
    return out;
}

std::string to_string(const Rat& value) {
    return value.get_str();
}

Rat round_half_even(const Rat& value, unsigned digits) {
    const Int scale = int_pow(10, digits);
    const Rat scaled = value * Rat(scale);
    Int floor_part;
    mpz_fdiv_q(floor_part.get_mpz_t(), mpq_numref(scaled.get_mpq_t()), mpq_denref(scaled.get_mpq_t()));
    const Rat frac = scaled - Rat(floor_part);
    const int cmp = ::cmp(frac, Rat(1, 2));
    Int rounded = floor_part;
    if (cmp > 0) {
        rounded += 1;
    } else if (cmp == 0) {
        if (mpz_odd_p(floor_part.get_mpz_t())) rounded += 1;
    }
    return Rat(rounded, scale);
}

std::string to_fixed_decimal(const Rat& value, unsigned digits) {
    const Int scale = int_pow(10, digits);
    const Rat rounded = round_half_even(value, digits);
    Int scaled_num = rounded.get_num() * (scale / rounded.get_den());
    std::string sign;
    if (scaled_num < 0) {
        sign = "-";
        scaled_num = -scaled_num;
    }
    Int whole = scaled_num / scale;
    Int frac = scaled_num % scale;
    std::string frac_str = frac.get_str();
    while (frac_str.size() < digits) frac_str.insert(frac_str.begin(), '0');
    if (digits == 0) return sign + whole.get_str();
    return sign + whole.get_str() + "." + frac_str;
}

}  // namespace ghzdist
