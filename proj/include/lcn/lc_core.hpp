#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcn/arith.hpp"
#include "lcn/digits.hpp"

namespace lcn {

/// One row per prime factor p of n: the base-(p+2) digit sum of n+2, its
/// residue mod p+1, and the divisibility p+1 | n+1.
struct PrimeDigitEntry {
    Integer p;
    Integer s;       // S_{p+2}(n+2)
    Integer residue; // s mod (p+1)
    bool divides;    // p+1 | n+1
};

struct LcReport {
    Integer n;
    Factorization factorization;
    bool squarefree = false;
    bool composite = false; // >= 2 prime factors counted with multiplicity
    bool korselt_ok = false;
    std::vector<PrimeDigitEntry> per_prime;
    bool is_lc = false;
    std::optional<Integer> degree;  // present iff is_lc
    std::optional<bool> primary;    // present iff is_lc
    std::vector<std::string> flags; // caveats, e.g. "probable-prime-factor"
};

struct ThreeFactorForm {
    Integer h;
    std::array<Integer, 3> r; // r1 < r2 < r3, pairwise coprime
};

/// Korselt-like criterion: n square-free, composite, and p+1 | n+1 for
/// every prime factor p.
inline bool korselt_check(const Factorization& f) {
    if (f.big_omega() < 2) return false;
    if (!is_squarefree(f)) return false;
    for (const auto& [p, e] : f.factors)
        if ((f.n + 1) % (p + 1) != 0) return false;
    return true;
}

/// Digit-sum form of the same criterion: n square-free, composite, and
/// S_{p+2}(n+2) == 1 (mod p+1) for every prime factor p.
inline bool digit_check(const Factorization& f) {
    if (f.big_omega() < 2) return false;
    if (!is_squarefree(f)) return false;
    for (const auto& [p, e] : f.factors)
        if (digit_sum(f.n + 2, p + 2) % (p + 1) != 1) return false;
    return true;
}

inline LcReport analyze(const Integer& n, const FactorizeOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("analyze: n must be >= 2");
    LcReport rep;
    rep.n = n;
    rep.factorization = factorize(n, opts);
    rep.squarefree = is_squarefree(rep.factorization);
    rep.composite = rep.factorization.big_omega() >= 2;
    for (const auto& [p, e] : rep.factorization.factors) {
        if (!primality(p).certain) rep.flags.push_back("probable-prime-factor");
        PrimeDigitEntry entry;
        entry.p = p;
        entry.s = digit_sum(n + 2, p + 2);
        entry.residue = entry.s % (p + 1);
        entry.divides = (n + 1) % (p + 1) == 0;
        rep.per_prime.push_back(std::move(entry));
    }
    rep.korselt_ok = rep.squarefree && rep.composite &&
                     std::all_of(rep.per_prime.begin(), rep.per_prime.end(),
                                 [](const PrimeDigitEntry& e) { return e.divides; });
    rep.is_lc = rep.korselt_ok;
    if (rep.is_lc) {
        Integer deg = 0;
        bool primary = true;
        for (const auto& e : rep.per_prime) {
            Integer d = (e.s - 1) / (e.p + 1);
            if (d > deg) deg = d;
            if (e.s != e.p + 2) primary = false;
        }
        rep.degree = deg;
        rep.primary = primary;
    }
    return rep;
}

/// Structural properties every Lucas-Carmichael integer must satisfy:
/// oddness, at least three prime factors, p+1 | n/p - 1, and p < sqrt(n).
inline std::vector<std::pair<std::string, bool>> structural_audit(const LcReport& rep) {
    if (!rep.is_lc) throw std::invalid_argument("structural_audit: report is not a Lucas-Carmichael integer");
    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("odd", rep.n % 2 == 1);
    out.emplace_back("at_least_three_prime_factors", rep.factorization.omega() >= 3);
    bool cofactor_ok = true;
    bool sqrt_ok = true;
    for (const auto& [p, e] : rep.factorization.factors) {
        if ((rep.n / p - 1) % (p + 1) != 0) cofactor_ok = false;
        if (p * p >= rep.n) sqrt_ok = false;
    }
    out.emplace_back("p_plus_1_divides_n_over_p_minus_1", cofactor_ok);
    out.emplace_back("every_prime_below_sqrt_n", sqrt_ok);
    return out;
}

struct QrBounds {
    Integer m; // n / (q*r); may be composite
    Integer q; // second largest prime factor
    Integer r; // largest prime factor
    bool q_ok; // q < 3m^2
    bool r_ok; // r < 3m^3
};

inline QrBounds qr_bound_check(const LcReport& rep) {
    if (!rep.is_lc || rep.factorization.omega() < 3)
        throw std::invalid_argument("qr_bound_check: requires an LC integer with >= 3 prime factors");
    const auto& fs = rep.factorization.factors;
    QrBounds b;
    b.r = fs[fs.size() - 1].first;
    b.q = fs[fs.size() - 2].first;
    b.m = rep.n / (b.q * b.r);
    b.q_ok = b.q < 3 * b.m * b.m;
    b.r_ok = b.r < 3 * b.m * b.m * b.m;
    return b;
}

/// Decomposes a 3-factor LC integer as (2h*r1 - 1)(2h*r2 - 1)(2h*r3 - 1)
/// with 2h = gcd(p_i + 1) and the r_i pairwise coprime. An odd gcd or a
/// common factor among the r_i would contradict a proved statement.
inline ThreeFactorForm three_factor_form(const LcReport& rep) {
    if (!rep.is_lc || rep.factorization.omega() != 3)
        throw std::invalid_argument("three_factor_form: requires an LC integer with exactly 3 prime factors");
    const auto& fs = rep.factorization.factors;
    std::vector<Integer> succ = {fs[0].first + 1, fs[1].first + 1, fs[2].first + 1};
    Integer k = gcd_list(succ);
    if (k % 2 != 0)
        throw theorem_violation("three_factor_form: gcd of p_i+1 is odd for n=" + rep.n.str());
    ThreeFactorForm form;
    form.h = k / 2;
    for (int i = 0; i < 3; ++i) form.r[i] = succ[i] / k;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (boost::multiprecision::gcd(form.r[i], form.r[j]) != 1)
                throw theorem_violation("three_factor_form: r_i not pairwise coprime for n=" + rep.n.str());
    return form;
}

} // namespace lcn
