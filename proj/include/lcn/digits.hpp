#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lcn/arith.hpp"

namespace lcn {

/// Base-b representation, little-endian: digits[i] is the coefficient of b^i.
struct DigitExpansion {
    Integer base;
    std::vector<Integer> digits;

    Integer value() const {
        Integer v = 0;
        for (auto it = digits.rbegin(); it != digits.rend(); ++it)
            v = v * base + *it;
        return v;
    }
};

inline DigitExpansion to_base(Integer n, const Integer& b) {
    if (b < 2) throw std::invalid_argument("to_base: base must be >= 2");
    if (n < 0) throw std::invalid_argument("to_base: n must be nonnegative");
    DigitExpansion e;
    e.base = b;
    if (n == 0) {
        e.digits.push_back(0);
        return e;
    }
    while (n > 0) {
        e.digits.push_back(n % b);
        n /= b;
    }
    return e;
}

/// S_b(n), the sum of the base-b digits of n.
inline Integer digit_sum(Integer n, const Integer& b) {
    if (b < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
    if (n < 0) throw std::invalid_argument("digit_sum: n must be nonnegative");
    Integer s = 0;
    while (n > 0) {
        s += n % b;
        n /= b;
    }
    return s;
}

inline std::uint64_t digit_sum_u64(std::uint64_t n, std::uint64_t b) {
    std::uint64_t s = 0;
    while (n > 0) {
        s += n % b;
        n /= b;
    }
    return s;
}

/// (S_{m+1}(n+1) - (n+1)) mod m, reduced to [0, m). Always 0: each power
/// (m+1)^k is 1 mod m, so the digit sum of n+1 in base m+1 is n+1 mod m.
inline Integer lemma21_residual(const Integer& m, const Integer& n) {
    if (m < 1 || n <= m)
        throw std::invalid_argument("lemma21_residual: requires n > m >= 1");
    Integer r = (digit_sum(n + 1, m + 1) - (n + 1)) % m;
    if (r < 0) r += m;
    return r;
}

} // namespace lcn
