#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lcn/arith.hpp"
#include "lcn/digits.hpp"
#include "lcn/lc_core.hpp"
#include "lcn/ratpoly.hpp"

namespace lcn {

struct LinearForm {
    Integer a; // positive
    Integer b;

    Integer value(const Integer& m) const { return a * m + b; }

    RatPoly poly() const { return RatPoly::linear(Rational(a), Rational(b)); }
};

/// Claimed digit sum S_{p+2}(n+2) = scale * p + offset, where p is the
/// value of the claim's factor form.
struct DigitSumClaim {
    Integer scale;
    Integer offset;

    Integer at(const Integer& factor_value) const { return scale * factor_value + offset; }
};

/// A base-(p+2) expansion of n+2 where p runs over one factor form:
/// n+2 = sum_j coeffs[j](m) * (a*m + b + 2)^j, coefficients polynomials in m.
struct ExpansionClaim {
    std::size_t factor_index = 0;
    std::vector<RatPoly> coeffs; // little-endian in powers of the base
    DigitSumClaim claimed_sum;
};

struct FamilySpec {
    std::vector<LinearForm> forms; // odd count, >= 3
    Integer m_divisor = 1;         // admissible m must be divisible by this
    Integer m_min = 1;
    std::string provenance;
    std::vector<ExpansionClaim> claims;

    bool admissible(const Integer& m) const {
        return m >= m_min && m % m_divisor == 0;
    }

    RatPoly product_poly() const {
        RatPoly p = RatPoly::constant(1);
        for (const auto& f : forms) p = p * f.poly();
        return p;
    }
};

enum class BuiltinFamily { u3, u5, u7 };

struct DerivedFamily {
    Integer seed;
    Integer k1;             // gcd of p_i + 1
    std::vector<Integer> r; // (p_i + 1) / k1
    Integer R;              // lcm of r_i
    FamilySpec spec;        // forms r_i * R * m + p_i
};

struct EvalResult {
    Integer n;
    std::vector<Integer> factor_values;
    bool all_prime = false;
    bool primality_certain = true;
};

namespace detail {

inline RatPoly lin(long long a, long long b) { return RatPoly::linear(Rational(a), Rational(b)); }

inline RatPoly lin(const Rational& a, long long b) { return RatPoly::linear(a, Rational(b)); }

inline RatPoly con(long long v) { return RatPoly::constant(Rational(v)); }

inline Rational frac(long long n, long long d) { return Rational(n, d); }

} // namespace detail

inline FamilySpec builtin(BuiltinFamily name) {
    using detail::lin;
    using detail::con;
    using detail::frac;
    FamilySpec s;
    switch (name) {
    case BuiltinFamily::u3:
        s.forms = {{6, -1}, {12, -1}, {18, -1}};
        s.m_divisor = 1;
        s.m_min = 8; // below 8 the base-(p+2) coefficients leave the digit range
        s.provenance = "u3";
        s.claims = {
            {0, {lin(6, -21), con(45), lin(6, -28), con(5)}, {2, 3}},
            {1, {lin(6, -5), lin(9, 11), lin(9, -5)}, {2, 3}},
            {2, {lin(8, -2), lin(6, 5), lin(4, -2)}, {1, 2}},
        };
        break;
    case BuiltinFamily::u5:
        s.forms = {{1188, 5}, {1584, 7}, {3564, 17}, {4752, 23}, {8712, 43}};
        s.m_divisor = 156816;
        s.m_min = 1;
        s.provenance = "u5";
        s.claims = {
            {0,
             {lin(132, -775), lin(132, 2724), lin(660, -3771), lin(1056, 2593), lin(396, -875),
              con(117)},
             {2, 3}},
            {1,
             {lin(1188, -287), lin(1287, 958), lin(frac(2273832, 1584), -1199),
              lin(frac(1724976, 1584), 758), lin(frac(2117016, 1584), -224), con(27)},
             {4, 5}},
            {2,
             {lin(frac(12005136, 3564), -11), lin(frac(4373424, 3564), 78),
              lin(frac(574992, 3564), -65), lin(frac(2317392, 3564), 32),
              lin(frac(6133248, 3564), 3)},
             {2, 3}},
            {3,
             {lin(4092, 7), lin(1023, 38), lin(frac(14662296, 4752), -10),
              lin(frac(3606768, 4752), 13), lin(frac(2587464, 4752), 1)},
             {2, 3}},
            {4,
             {lin(frac(68897952, 8712), 37), lin(frac(31403376, 8712), 26),
              lin(frac(41885424, 8712), 20), lin(frac(9191232, 8712), 6),
              lin(frac(419904, 8712), 0)},
             {2, 3}},
        };
        break;
    case BuiltinFamily::u7:
        s.forms = {{1728, 7}, {2592, 11}, {3888, 17}, {5184, 23}, {6912, 31}, {11664, 53}, {15552, 71}};
        s.m_divisor = 373248;
        s.m_min = 1;
        s.provenance = "u7";
        s.claims = {
            {0,
             {lin(864, -25181), lin(1512, 128798), lin(432, -280653), lin(1026, 337790),
              lin(1512, -242426), lin(918, 103732), lin(648, -24487), con(2460)},
             {4, 5}},
            {1,
             {lin(432, -3525), lin(2088, 16136), lin(216, -31287), lin(720, 33401),
              lin(1728, -21163), con(7965), lin(2592, -1633), con(143)},
             {3, 4}},
            {2,
             {lin(frac(9296, 3), -607), lin(frac(3376, 3), 2482), lin(frac(3776, 3), -4148),
              lin(frac(11152, 3), 3829), lin(frac(944, 3), -2064), lin(frac(1456, 3), 662),
              lin(1664, -107), con(8)},
             {3, 4}},
            {3,
             {lin(1728, -202), lin(2016, 758), lin(4212, -1090), lin(4086, 915), lin(1404, -419),
              lin(1458, 125), lin(648, -15), con(1)},
             {3, 4}},
            {4,
             {lin(frac(1453005, 256), -53), lin(frac(1590921, 512), 267),
              lin(frac(811161, 512), -319), lin(frac(1532709, 256), 256),
              lin(frac(312795, 128), -82), lin(frac(460701, 512), 26),
              lin(frac(531441, 512), 2)},
             {3, 4}},
            {5,
             {lin(frac(4805968, 729), 13), lin(frac(5584880, 729), 82),
              lin(frac(1404608, 729), -36), lin(frac(1154864, 243), 45),
              lin(frac(793744, 729), -2), lin(frac(919552, 729), 7), lin(frac(32768, 729), 0)},
             {2, 3}},
            {6,
             {lin(frac(33824, 3), 44), lin(frac(31096, 3), 69), lin(frac(13664, 3), 4),
              lin(frac(26998, 3), 49), lin(frac(33416, 3), 50), lin(frac(946, 3), 1), lin(8, 0)},
             {3, 4}},
        };
        break;
    }
    return s;
}

inline EvalResult evaluate(const FamilySpec& spec, const Integer& m, bool allow_inadmissible = false) {
    if (!allow_inadmissible && !spec.admissible(m))
        throw std::invalid_argument("evaluate: m=" + m.str() + " is not admissible for this family");
    EvalResult res;
    res.n = 1;
    res.all_prime = true;
    for (const auto& f : spec.forms) {
        Integer v = f.value(m);
        res.n *= v;
        auto pr = primality(v);
        if (!pr.prime) res.all_prime = false;
        if (!pr.certain) res.primality_certain = false;
        res.factor_values.push_back(std::move(v));
    }
    return res;
}

/// From an LC integer with an odd number of prime factors p_i, builds the
/// family r_i*R*m + p_i where k1 = gcd(p_i+1), r_i = (p_i+1)/k1, R = lcm(r_i).
inline DerivedFamily derive_family(const LcReport& seed) {
    if (!seed.is_lc)
        throw std::invalid_argument("derive_family: seed is not a Lucas-Carmichael integer");
    if (seed.factorization.omega() % 2 == 0)
        throw std::invalid_argument("derive_family: seed must have an odd number of prime factors");
    DerivedFamily d;
    d.seed = seed.n;
    std::vector<Integer> succ;
    for (const auto& [p, e] : seed.factorization.factors) succ.push_back(p + 1);
    d.k1 = gcd_list(succ);
    for (const Integer& s : succ) d.r.push_back(s / d.k1);
    d.R = lcm_list(d.r);
    for (std::size_t i = 0; i < d.r.size(); ++i)
        d.spec.forms.push_back({d.r[i] * d.R, seed.factorization.factors[i].first});
    d.spec.m_divisor = 1;
    d.spec.m_min = 0;
    d.spec.provenance = "derived from " + seed.n.str();
    return d;
}

/// Checks prod(forms) + 1 == -1 is divisible by a_i*m + b_i + 1 for each
/// form, as an exact polynomial statement over Q.
inline bool verify_congruence_symbolic(const FamilySpec& spec) {
    RatPoly prod_plus_1 = spec.product_poly() + RatPoly::constant(1);
    for (const auto& f : spec.forms) {
        RatPoly succ = RatPoly::linear(Rational(f.a), Rational(f.b + 1));
        if (!poly_divisible(prod_plus_1, succ)) return false;
    }
    return true;
}

/// Exact coefficient-by-coefficient comparison of the claimed expansion
/// with prod(forms) + 2.
inline bool verify_expansion_symbolic(const FamilySpec& spec, const ExpansionClaim& claim) {
    if (claim.factor_index >= spec.forms.size())
        throw std::invalid_argument("verify_expansion_symbolic: factor index out of range");
    const LinearForm& f = spec.forms[claim.factor_index];
    RatPoly base = RatPoly::linear(Rational(f.a), Rational(f.b + 2));
    RatPoly sum;
    RatPoly power = RatPoly::constant(1);
    for (const RatPoly& c : claim.coeffs) {
        sum = sum + c * power;
        power = power * base;
    }
    return sum == spec.product_poly() + RatPoly::constant(2);
}

/// At each sampled m, every claimed coefficient must be an integer in
/// [0, base-1] and the coefficient list must coincide with the canonical
/// base-(p+2) digits of n+2.
inline bool verify_digit_ranges(const FamilySpec& spec, const ExpansionClaim& claim,
                                const std::vector<Integer>& sample,
                                bool allow_inadmissible = false) {
    const LinearForm& f = spec.forms[claim.factor_index];
    for (const Integer& m : sample) {
        if (!allow_inadmissible && !spec.admissible(m))
            throw std::invalid_argument("verify_digit_ranges: m=" + m.str() + " is not admissible");
        Integer base = f.value(m) + 2;
        std::vector<Integer> evaluated;
        for (const RatPoly& c : claim.coeffs) {
            Rational v = c.eval(Rational(m));
            if (denominator(v) != 1) return false; // non-integral coefficient
            Integer d = numerator(v);
            if (d < 0 || d > base - 1) return false;
            evaluated.push_back(std::move(d));
        }
        Integer n = 1;
        for (const auto& g : spec.forms) n *= g.value(m);
        if (to_base(n + 2, base).digits != evaluated) return false;
    }
    return true;
}

/// For each factor value p (prime or not), S_{p+2}(n+2) where n is the
/// full product at m.
inline std::vector<std::pair<Integer, Integer>>
digit_sum_profile(const FamilySpec& spec, const Integer& m, bool allow_inadmissible = false) {
    if (!allow_inadmissible && !spec.admissible(m))
        throw std::invalid_argument("digit_sum_profile: m=" + m.str() + " is not admissible");
    Integer n = 1;
    std::vector<Integer> values;
    for (const auto& f : spec.forms) {
        values.push_back(f.value(m));
        n *= values.back();
    }
    std::vector<std::pair<Integer, Integer>> out;
    for (const Integer& v : values)
        out.emplace_back(v, digit_sum(n + 2, v + 2));
    return out;
}

struct KtupleHit {
    Integer m;
    Integer n;
    LcReport report;
};

struct KtupleResult {
    std::vector<KtupleHit> hits; // ascending by m
    std::uint64_t scanned = 0;   // number of m values examined (empirical P(x) denominator)
};

struct KtupleOptions {
    bool allow_inadmissible = false;
    unsigned threads = 1; // 0 = hardware concurrency
};

namespace detail {

inline LcReport report_from_prime_values(const Integer& n, std::vector<Integer> primes) {
    Factorization f;
    f.n = n;
    std::sort(primes.begin(), primes.end());
    for (const Integer& p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second += 1;
        else
            f.factors.emplace_back(p, 1u);
    }
    LcReport rep;
    rep.n = n;
    rep.factorization = std::move(f);
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

} // namespace detail

/// Scans m over [m_lo, m_hi] with the given stride; a hit is an m where
/// every factor form is prime. The range is partitioned into contiguous
/// chunks per worker and re-joined in order, so output is deterministic.
inline KtupleResult ktuple_search(const FamilySpec& spec, const Integer& m_lo, const Integer& m_hi,
                                  const Integer& stride, const KtupleOptions& opts = {}) {
    if (stride < 1 || stride % spec.m_divisor != 0)
        throw std::invalid_argument("ktuple_search: stride must be a positive multiple of the family's m divisor");
    std::vector<Integer> ms;
    for (Integer m = m_lo; m <= m_hi; m += stride) {
        if (!spec.admissible(m) && !opts.allow_inadmissible)
            throw std::invalid_argument("ktuple_search: m=" + m.str() + " is not admissible (use the override to scan anyway)");
        ms.push_back(m);
    }
    unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    threads = std::min<std::size_t>(threads, ms.empty() ? 1 : ms.size());

    auto scan_chunk = [&](std::size_t lo, std::size_t hi, std::vector<KtupleHit>& out) {
        for (std::size_t i = lo; i < hi; ++i) {
            EvalResult ev = evaluate(spec, ms[i], true);
            if (!ev.all_prime) continue;
            KtupleHit hit;
            hit.m = ms[i];
            hit.n = ev.n;
            hit.report = detail::report_from_prime_values(ev.n, ev.factor_values);
            out.push_back(std::move(hit));
        }
    };

    KtupleResult res;
    res.scanned = ms.size();
    if (threads <= 1) {
        scan_chunk(0, ms.size(), res.hits);
    } else {
        std::vector<std::vector<KtupleHit>> parts(threads);
        std::vector<std::thread> workers;
        std::size_t chunk = (ms.size() + threads - 1) / threads;
        for (unsigned w = 0; w < threads; ++w) {
            std::size_t lo = w * chunk, hi = std::min(ms.size(), lo + chunk);
            workers.emplace_back([&, lo, hi, w] { scan_chunk(lo, hi, parts[w]); });
        }
        for (auto& t : workers) t.join();
        for (auto& p : parts)
            for (auto& h : p) res.hits.push_back(std::move(h));
    }
    return res;
}

/// Plain-text family config: one "a b" pair per line, optional
/// "m_divisor N" and "m_min N" keys, '#' comments.
inline FamilySpec parse_family_config(std::istream& in) {
    FamilySpec spec;
    spec.m_min = 1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "m_divisor") {
            if (!(ls >> spec.m_divisor) || spec.m_divisor < 1)
                throw std::invalid_argument("family config: bad m_divisor");
        } else if (first == "m_min") {
            if (!(ls >> spec.m_min) || spec.m_min < 0)
                throw std::invalid_argument("family config: bad m_min");
        } else {
            Integer a(first), b;
            if (!(ls >> b)) throw std::invalid_argument("family config: form line needs two integers");
            if (a < 1) throw std::invalid_argument("family config: coefficient a must be positive");
            spec.forms.push_back({a, b});
        }
    }
    if (spec.forms.size() < 3 || spec.forms.size() % 2 == 0)
        throw std::invalid_argument("family config: need an odd number of forms, at least 3");
    return spec;
}

inline void format_family_config(const FamilySpec& spec, std::ostream& out) {
    for (const auto& f : spec.forms) out << f.a << " " << f.b << "\n";
    out << "m_divisor " << spec.m_divisor << "\n";
    out << "m_min " << spec.m_min << "\n";
}

} // namespace lcn
