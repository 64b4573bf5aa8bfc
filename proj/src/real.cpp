#include "ghzdist/real.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace ghzdist {

std::string Real::to_decimal(int significant_digits) const {
    std::vector<char> buffer(significant_digits + 64);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", significant_digits, value_);
    return std::string(buffer.data());
}

std::string Real::to_full_decimal() const {
    // ~0.3010 decimal digits per bit
    const int digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 2;
    std::vector<char> buffer(digits + 64);
    mpfr_snprintf(buffer.data(), buffer.size(), "%.*Rg", digits, value_);
    return std::string(buffer.data());
}

}  // namespace ghzdist
