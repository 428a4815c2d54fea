// Brute-force reference computations for the test suites. Nothing here calls
// into the library's algorithms beyond the Partition value type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hookratio/partition.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240917) {
    if (const char* s = std::getenv("HOOKRATIO_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

/// Hook lengths by literally walking a filled grid to the right and downwards.
inline std::vector<int> grid_hooks(const std::vector<int>& parts) {
    const int rows = static_cast<int>(parts.size());
    const int cols = rows == 0 ? 0 : parts.front();
    std::vector<std::vector<bool>> grid(static_cast<std::size_t>(rows), std::vector<bool>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < parts[static_cast<std::size_t>(r)]; ++c) grid[r][c] = true;
    std::vector<int> out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (!grid[r][c]) continue;
            int h = 1;
            for (int cc = c + 1; cc < cols && grid[r][cc]; ++cc) ++h;
            for (int rr = r + 1; rr < rows && grid[rr][c]; ++rr) ++h;
            out.push_back(h);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> grid_hooks(const hookratio::Partition& p) {
    return grid_hooks(std::vector<int>(p.parts().begin(), p.parts().end()));
}

/// Hooks restricted to multiples of r, divided by r, ascending.
inline std::vector<int> grid_restricted_hooks(const hookratio::Partition& p, int r) {
    std::vector<int> out;
    for (int h : grid_hooks(p))
        if (h % r == 0) out.push_back(h / r);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t grid_hook_count(const hookratio::Partition& p, std::int64_t r) {
    std::int64_t n = 0;
    for (int h : grid_hooks(p))
        if (h % r == 0) ++n;
    return n;
}

/// Maya-diagram 01-word of a partition as (first index, entries), built from
/// the outline walk: 1^{lambda_d} 0 1^{lambda_{d-1}-lambda_d} 0 ... 0, then
/// aligned so that the row-1 zero sits at lambda_1 - 1.
inline std::pair<std::int64_t, std::vector<int>> outline_walk(const hookratio::Partition& p) {
    std::vector<int> word;
    int prev = 0;
    for (std::size_t r = p.length(); r-- > 0;) {
        for (int k = prev; k < p[r]; ++k) word.push_back(1);
        word.push_back(0);
        prev = p[r];
    }
    const std::int64_t start = p.empty() ? 0 : -static_cast<std::int64_t>(p.length());
    return {start, word};
}

/// {j - i : x_i = 1, x_j = 0, i < j} over an explicit finite word.
inline std::vector<int> pair_hooks(const std::vector<int>& word) {
    std::vector<int> out;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] == 1 && word[j] == 0) out.push_back(static_cast<int>(j - i));
    std::sort(out.begin(), out.end());
    return out;
}

/// Standard Young tableaux by peeling off the largest entry (a removable corner).
inline std::int64_t count_syt(const std::vector<int>& parts) {
    static std::map<std::vector<int>, std::int64_t> memo;
    if (parts.empty()) return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const bool corner = r + 1 == parts.size() || parts[r + 1] < parts[r];
        if (!corner) continue;
        std::vector<int> smaller = parts;
        if (--smaller[r] == 0) smaller.pop_back();
        total += count_syt(smaller);
    }
    memo[parts] = total;
    return total;
}

/// p(n) via Euler's pentagonal recurrence.
inline std::int64_t partition_count(int n) {
    std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        std::int64_t s = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const std::int64_t sign = (k % 2 == 1) ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

/// All partitions of n by recursion on the largest part (any order).
inline std::vector<hookratio::Partition> partitions_of(int n) {
    std::vector<hookratio::Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline std::vector<hookratio::Partition> partitions_up_to(int n) {
    std::vector<hookratio::Partition> out;
    for (int m = 0; m <= n; ++m) {
        auto part = partitions_of(m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline BigInt product(const std::vector<int>& values) {
    BigInt out = 1;
    for (int v : values) out *= v;
    return out;
}

inline std::int64_t big_valuation(BigInt n, std::int64_t p) {
    std::int64_t e = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

/// Exact ratio prod_k H_{gamma_k} / prod_l H_{delta_l} as (numerator, denominator), unreduced.
inline std::pair<BigInt, BigInt> exact_ratio(const hookratio::Partition& lambda, const std::vector<std::int64_t>& gammas,
                                             const std::vector<std::int64_t>& deltas) {
    BigInt num = 1;
    BigInt den = 1;
    for (auto g : gammas) num *= product(grid_restricted_hooks(lambda, static_cast<int>(g)));
    for (auto d : deltas) den *= product(grid_restricted_hooks(lambda, static_cast<int>(d)));
    return {num, den};
}

/// Signed hook count sum computed from the literal grid.
inline std::int64_t grid_signature(const hookratio::Partition& mu, const std::vector<std::int64_t>& gammas,
                                   const std::vector<std::int64_t>& deltas) {
    std::int64_t s = 0;
    for (auto g : gammas) s += grid_hook_count(mu, g);
    for (auto d : deltas) s -= grid_hook_count(mu, d);
    return s;
}

/// Floor-sum step function evaluated term by term.
inline std::int64_t floor_sum(std::int64_t x, const std::vector<std::int64_t>& gammas,
                              const std::vector<std::int64_t>& deltas) {
    std::int64_t s = 0;
    for (auto g : gammas) s += x / g;
    for (auto d : deltas) s -= x / d;
    return s;
}

/// sum 1/g == sum 1/d by cross-multiplying over the product of all entries.
inline bool balanced_by_fractions(const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& d) {
    BigInt prod = 1;
    for (auto v : g) prod *= v;
    for (auto v : d) prod *= v;
    BigInt lhs = 0;
    BigInt rhs = 0;
    for (auto v : g) lhs += prod / v;
    for (auto v : d) rhs += prod / v;
    return lhs == rhs;
}

using ParamPair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

/// Balanced (gamma, delta) with entries in [1, max_entry], K <= max_k, L <= max_l,
/// both sides sorted, no shared value.
inline std::vector<ParamPair> balanced_grid(std::int64_t max_entry = 8, std::size_t max_k = 3, std::size_t max_l = 4) {
    std::vector<std::vector<std::int64_t>> sides;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::size_t)> rec = [&](std::int64_t from, std::size_t left) {
        if (!cur.empty()) sides.push_back(cur);
        if (left == 0) return;
        for (std::int64_t v = from; v <= max_entry; ++v) {
            cur.push_back(v);
            rec(v, left - 1);
            cur.pop_back();
        }
    };
    rec(1, std::max(max_k, max_l));
    std::vector<ParamPair> out;
    for (const auto& g : sides) {
        if (g.size() > max_k) continue;
        for (const auto& d : sides) {
            if (d.size() > max_l) continue;
            bool shared = false;
            for (auto a : g)
                for (auto b : d) shared |= a == b;
            if (!shared && balanced_by_fractions(g, d)) out.emplace_back(g, d);
        }
    }
    return out;
}

}  // namespace oracle
