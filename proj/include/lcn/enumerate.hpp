#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <thread>
#include <vector>

#include "lcn/arith.hpp"
#include "lcn/lc_core.hpp"

namespace lcn {

enum class EnumMethod { dfs, oracle };

struct EnumerationResult {
    std::uint64_t limit = 0;
    std::vector<LcReport> entries; // ascending by n
    EnumMethod method = EnumMethod::dfs;

    std::vector<Integer> values() const {
        std::vector<Integer> v;
        v.reserve(entries.size());
        for (const auto& e : entries) v.push_back(e.n);
        return v;
    }
};

namespace detail {

struct DfsContext {
    std::uint64_t limit;
    std::vector<std::uint64_t> primes; // odd candidate primes
    std::vector<std::uint64_t>* out;
};

// Extends the chain p_{i} < p_{i+1} < ... with partial product P and
// L = lcm(p_j + 1). A node with >= 3 primes and P <= limit is accepted
// iff P == -1 (mod L), i.e. p_j + 1 | P + 1 for all j.
inline void dfs_extend(const DfsContext& ctx, std::size_t from, std::uint64_t P,
                       std::uint64_t L, int depth) {
    for (std::size_t i = from; i < ctx.primes.size(); ++i) {
        std::uint64_t p = ctx.primes[i];
        if (P > ctx.limit / p) break; // primes ascending, all further branches exceed limit
        std::uint64_t P2 = P * p;
        std::uint64_t L2 = std::lcm(L, p + 1);
        if (depth + 1 >= 3 && (P2 + 1) % L2 == 0) ctx.out->push_back(P2);
        dfs_extend(ctx, i + 1, P2, L2, depth + 1);
    }
}

} // namespace detail

/// Product-construction search: strictly increasing odd primes (every LC
/// integer is odd since each p+1 divides the even n+1), each below
/// sqrt(limit) (every prime factor of an LC integer lies below sqrt(n)).
/// Top-level branches are distributed across workers; output is sorted, so
/// the result is independent of the worker count.
inline EnumerationResult enumerate_dfs(std::uint64_t limit, unsigned threads = 1) {
    if (limit < 3) throw std::invalid_argument("enumerate_dfs: limit must be >= 3");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    std::uint64_t root = 1;
    while ((root + 1) * (root + 1) < limit) ++root; // root = max p with p*p < limit
    std::vector<std::uint64_t> pool;
    for (std::uint64_t p : primes_up_to(root))
        if (p % 2 == 1) pool.push_back(p);

    std::vector<std::vector<std::uint64_t>> per_branch(pool.size());
    auto run_branch = [&](std::size_t i) {
        detail::DfsContext ctx{limit, pool, &per_branch[i]};
        std::uint64_t p = pool[i];
        if (p <= limit) detail::dfs_extend(ctx, i + 1, p, p + 1, 1);
    };
    if (threads <= 1 || pool.size() <= 1) {
        for (std::size_t i = 0; i < pool.size(); ++i) run_branch(i);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < pool.size(); i += threads) run_branch(i);
            });
        for (auto& t : workers) t.join();
    }

    std::vector<std::uint64_t> hits;
    for (auto& v : per_branch) hits.insert(hits.end(), v.begin(), v.end());
    std::sort(hits.begin(), hits.end());

    EnumerationResult res;
    res.limit = limit;
    res.method = EnumMethod::dfs;
    for (std::uint64_t n : hits) res.entries.push_back(analyze(Integer(n)));
    return res;
}

/// Brute-force oracle: smallest-prime-factor sieve, then the Korselt-like
/// divisibility test on every odd n up to the limit. Structurally
/// independent of the search above.
inline EnumerationResult enumerate_oracle(std::uint64_t limit) {
    if (limit < 3) throw std::invalid_argument("enumerate_oracle: limit must be >= 3");
    SpfSieve sieve(limit);
    EnumerationResult res;
    res.limit = limit;
    res.method = EnumMethod::oracle;
    std::vector<std::uint64_t> primes;
    bool squarefree = false;
    for (std::uint64_t n = 3; n <= limit; n += 2) {
        if (sieve[n] == n) continue; // prime
        sieve.factor(n, primes, squarefree);
        if (!squarefree || primes.size() < 2) continue;
        bool ok = true;
        for (std::uint64_t p : primes)
            if ((n + 1) % (p + 1) != 0) { ok = false; break; }
        if (ok) res.entries.push_back(analyze(Integer(n)));
    }
    return res;
}

struct ComparisonResult {
    bool equal = true;
    std::optional<std::size_t> first_divergence; // index of first differing position
};

inline ComparisonResult compare_enumerations(const EnumerationResult& a, const EnumerationResult& b) {
    if (a.limit != b.limit)
        throw std::invalid_argument("compare_enumerations: limits differ");
    std::size_t k = std::min(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < k; ++i)
        if (a.entries[i].n != b.entries[i].n) return {false, i};
    if (a.entries.size() != b.entries.size()) return {false, k};
    return {true, std::nullopt};
}

} // namespace lcn
