#pragma once

// Brute-force reference computations. Deliberately naive and independent of the library's
// search, matching and verification code paths: everything here works on raw bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;  // bit i-1 <=> server i

// Every c <= min(k, n) columns span at least r + c servers (subsets enumerated as bitmasks of files).
inline bool hall_ok(const std::vector<Mask>& cols, int k, int r) {
    const int n = static_cast<int>(cols.size());
    for (std::uint32_t files = 1; files < (1u << n); ++files) {
        const int c = std::popcount(files);
        if (c > k) continue;
        Mask span = 0;
        for (int j = 0; j < n; ++j)
            if (files >> j & 1u) span |= cols[j];
        if (std::popcount(span) < r + c) return false;
    }
    return true;
}

// Does some injective file -> server map exist? Tries every assignment recursively.
inline bool has_sdr(const std::vector<Mask>& reach, std::size_t at = 0, Mask used = 0) {
    if (at == reach.size()) return true;
    for (Mask free = reach[at] & ~used; free; free &= free - 1)
        if (has_sdr(reach, at + 1, used | (free & -free))) return true;
    return false;
}

// The batch-code definition taken literally: every demand of <= k files and every set of
// >= m - r live servers admits a one-file-per-server plan.
inline bool definition_ok(const std::vector<Mask>& cols, int m, int k, int r) {
    const int n = static_cast<int>(cols.size());
    for (std::uint32_t demand = 1; demand < (1u << n); ++demand) {
        if (std::popcount(demand) > k) continue;
        for (Mask live = 0; live < (1u << m); ++live) {
            if (std::popcount(live) < m - r) continue;
            std::vector<Mask> reach;
            for (int j = 0; j < n; ++j)
                if (demand >> j & 1u) reach.push_back(cols[j] & live);
            if (!has_sdr(reach)) return false;
        }
    }
    return true;
}

// Minimum weight over all multisets of n nonempty columns on m servers (no cardinality band).
inline std::optional<int> min_weight(int n, int k, int m, int r) {
    std::optional<int> best;
    std::vector<Mask> cols(n);
    std::function<void(int, Mask, int)> rec = [&](int j, Mask from, int w) {
        if (best && w >= *best) return;
        if (j == n) {
            if (hall_ok(cols, k, r)) best = w;
            return;
        }
        for (Mask c = from; c < (1u << m); ++c) {
            cols[j] = c;
            rec(j + 1, c, w + std::popcount(c));
        }
    };
    rec(0, 1, 0);
    return best;
}

// Largest multiset of `card`-subsets of {1..m} (at most `cap`) with hall_ok(k, r).
inline int max_uniform(int card, int k, int m, int r, int cap) {
    std::vector<Mask> pool;
    for (Mask c = 1; c < (1u << m); ++c)
        if (std::popcount(c) == card) pool.push_back(c);
    int best = 0;
    std::vector<Mask> cols;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        best = std::max(best, static_cast<int>(cols.size()));
        if (static_cast<int>(cols.size()) == cap) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cols.push_back(pool[i]);
            if (hall_ok(cols, k, r)) rec(i);
            cols.pop_back();
        }
    };
    rec(0);
    return best;
}

// Shortest cycle by exhaustive simple-path search (no BFS), 0 for forests.
inline int girth(int m, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(m + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int best = 0;
    std::vector<char> on_path(m + 1, 0);
    std::function<void(int, int, int)> walk = [&](int start, int at, int len) {
        for (int w : adj[at]) {
            if (w == start && len >= 3) {
                if (best == 0 || len < best) best = len;
            } else if (!on_path[w] && w > start) {
                on_path[w] = 1;
                walk(start, w, len + 1);
                on_path[w] = 0;
            }
        }
    };
    for (int s = 1; s <= m; ++s) {
        on_path[s] = 1;
        walk(s, s, 1);
        on_path[s] = 0;
    }
    return best;
}

}  // namespace oracle
