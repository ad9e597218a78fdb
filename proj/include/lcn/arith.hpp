#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcn {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a computation contradicts a proved statement (a would-be
/// counterexample). Distinct from invalid input so the test suite can
/// treat it as a hard failure rather than a usage error.
class theorem_violation : public std::runtime_error {
public:
    explicit theorem_violation(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Strong probable prime test to base a; n odd, n > 2, n-1 = d * 2^s.
inline bool sprp_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Witness bases: the first twelve primes make the strong-pseudoprime test
// deterministic for all n < 3.18e23, which covers the whole 64-bit range.
inline constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace detail

/// Deterministic primality for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : detail::kWitnesses)
        if (!detail::sprp_u64(n, a, d, s)) return false;
    return true;
}

struct PrimalityResult {
    bool prime = false;
    /// False only for probable primes above 2^64 (strong test with the fixed
    /// witness bases 2..37, no deterministic guarantee there).
    bool certain = true;
};

inline PrimalityResult primality(const Integer& n) {
    if (n < 0) return {false, true};
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return {is_prime_u64(static_cast<std::uint64_t>(n)), true};
    using boost::multiprecision::powm;
    for (std::uint64_t p : detail::kWitnesses) {
        if (n % p == 0) return {false, true};
    }
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : detail::kWitnesses) {
        Integer x = powm(Integer(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return {false, true};
    }
    return {true, false};
}

inline bool is_prime(const Integer& n) { return primality(n).prime; }

/// Sorted prime-power decomposition of a positive integer.
struct Factorization {
    Integer n;
    std::vector<std::pair<Integer, unsigned>> factors; // primes strictly increasing

    unsigned omega() const { return static_cast<unsigned>(factors.size()); }

    unsigned big_omega() const {
        unsigned t = 0;
        for (const auto& [p, e] : factors) t += e;
        return t;
    }

    std::vector<Integer> distinct_primes() const {
        std::vector<Integer> ps;
        ps.reserve(factors.size());
        for (const auto& [p, e] : factors) ps.push_back(p);
        return ps;
    }

    Integer reassemble() const {
        Integer v = 1;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
};

inline bool is_squarefree(const Factorization& f) {
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

namespace detail {

// Brent's cycle variant of Pollard rho; n odd composite, not a prime power issue here.
inline std::uint64_t pollard_brent_u64(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t c = 1;
    for (;;) {
        std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = y;
        const unsigned m = 128;
        unsigned r = 1;
        while (d == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (unsigned k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned i = 0; i < std::min<unsigned>(m, r - k); ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack
            do {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        ++c;
    }
}

inline Integer pollard_brent_big(const Integer& n) {
    using boost::multiprecision::gcd;
    if (n % 2 == 0) return 2;
    for (Integer c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1, q = 1, ys = y;
        const unsigned m = 64;
        unsigned r = 1;
        while (d == 1) {
            x = y;
            for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned k = 0; k < r && d == 1; k += m) {
                ys = y;
                for (unsigned i = 0; i < std::min<unsigned>(m, r - k); ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n && d != 1) return d;
    }
}

inline void factor_u64_into(std::uint64_t n, std::vector<std::pair<Integer, unsigned>>& out,
                            std::uint64_t trial_bound) {
    for (std::uint64_t p = 2; p <= trial_bound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(Integer(p), e);
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(Integer(n), 1u);
        return;
    }
    std::uint64_t d = pollard_brent_u64(n);
    factor_u64_into(d, out, trial_bound);
    factor_u64_into(n / d, out, trial_bound);
}

inline void factor_big_into(Integer n, std::vector<std::pair<Integer, unsigned>>& out,
                            std::uint64_t trial_bound) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        factor_u64_into(static_cast<std::uint64_t>(n), out, trial_bound);
        return;
    }
    for (std::uint64_t p = 2; p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(Integer(p), e);
            if (n <= std::numeric_limits<std::uint64_t>::max()) {
                factor_u64_into(static_cast<std::uint64_t>(n), out, trial_bound);
                return;
            }
        }
        if (Integer(p) * p > n) break;
    }
    if (n == 1) return;
    if (primality(n).prime) {
        out.emplace_back(n, 1u);
        return;
    }
    Integer d = pollard_brent_big(n);
    factor_big_into(d, out, trial_bound);
    factor_big_into(n / d, out, trial_bound);
}

} // namespace detail

struct FactorizeOptions {
    std::uint64_t trial_bound = 10'000'000; // trial division cutoff, then rho splitting
};

inline Factorization factorize(const Integer& n, const FactorizeOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    Factorization f;
    f.n = n;
    detail::factor_big_into(n, f.factors, opts.trial_bound);
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates produced by recursive splitting
    std::vector<std::pair<Integer, unsigned>> merged;
    for (auto& fe : f.factors) {
        if (!merged.empty() && merged.back().first == fe.first)
            merged.back().second += fe.second;
        else
            merged.push_back(std::move(fe));
    }
    f.factors = std::move(merged);
    return f;
}

inline Integer lcm_list(const std::vector<Integer>& xs) {
    if (xs.empty()) throw std::invalid_argument("lcm_list: empty input");
    Integer l = 1;
    for (const Integer& x : xs) {
        if (x < 1) throw std::invalid_argument("lcm_list: entries must be positive");
        l = boost::multiprecision::lcm(l, x);
    }
    return l;
}

inline Integer gcd_list(const std::vector<Integer>& xs) {
    if (xs.empty()) throw std::invalid_argument("gcd_list: empty input");
    Integer g = 0;
    for (const Integer& x : xs) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Smallest-prime-factor table for 2..limit. Factors any k <= limit in
/// O(log k). Memory: 4 bytes per entry, so limit is capped well below 2^32.
class SpfSieve {
public:
    explicit SpfSieve(std::uint64_t limit) : limit_(limit) {
        if (limit < 2) throw std::invalid_argument("SpfSieve: limit must be >= 2");
        if (limit >= (1ull << 32)) throw std::invalid_argument("SpfSieve: limit exceeds 32-bit sieve range");
        spf_.assign(limit + 1, 0);
        for (std::uint64_t i = 2; i <= limit; ++i) {
            if (spf_[i] == 0) {
                for (std::uint64_t j = i; j <= limit; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }

    std::uint64_t limit() const { return limit_; }

    std::uint32_t operator[](std::uint64_t k) const { return spf_[k]; }

    /// Distinct prime factors of k; sets squarefree=false on a repeated prime.
    void factor(std::uint64_t k, std::vector<std::uint64_t>& primes, bool& squarefree) const {
        primes.clear();
        squarefree = true;
        while (k > 1) {
            std::uint64_t p = spf_[k];
            unsigned e = 0;
            while (k % p == 0) { k /= p; ++e; }
            if (e > 1) squarefree = false;
            primes.push_back(p);
        }
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

/// All primes <= limit, ascending.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> ps;
    if (limit < 2) return ps;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            ps.push_back(i);
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
        }
    }
    return ps;
}

} // namespace lcn
