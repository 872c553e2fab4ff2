#include "cbc/search.hpp"

#include <algorithm>
#include <limits>

#include "budget_clock.hpp"
#include "cbc/combinatorics.hpp"
#include "cbc/errors.hpp"
#include "cbc/verify.hpp"

namespace cbc {

void SearchBudget::validate() const {
    if (node_limit == 0 || time_limit.count() <= 0) throw ContractError("search budget limits must be positive");
}

namespace {

using detail::BudgetClock;

constexpr int kMaxSearchServers = 20;

// Row-containment counters: cnt[I] = number of chosen columns inside I, for every server set I
// with r <= |I| <= r+k-1. Adding a column may push some cnt[I] past |I| - r.
class ContainmentCounters {
public:
    ContainmentCounters(int m, int k, int r) : m_(m), k_(k), r_(r), cnt_(std::size_t{1} << m, 0) {}

    std::vector<std::uint32_t> constrained_supersets(ServerSet column) const {
        std::vector<std::uint32_t> out;
        const auto base = static_cast<std::uint32_t>(column.mask());
        const std::uint32_t free = static_cast<std::uint32_t>(ServerSet::full(m_).mask()) & ~base;
        const int top = r_ + k_ - 1;
        for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
            const int size = std::popcount(base | extra);
            if (size >= r_ && size <= top) out.push_back(base | extra);
            if (extra == 0) break;
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool try_add(const std::vector<std::uint32_t>& sups) {
        for (std::size_t i = 0; i < sups.size(); ++i) {
            if (++cnt_[sups[i]] > std::popcount(sups[i]) - r_) {
                for (std::size_t j = 0; j <= i; ++j) --cnt_[sups[j]];
                return false;
            }
        }
        return true;
    }

    void remove(const std::vector<std::uint32_t>& sups) {
        for (std::uint32_t s : sups) --cnt_[s];
    }

    // How many more copies of a column with these supersets fit right now.
    int headroom(const std::vector<std::uint32_t>& sups) const {
        int best = std::numeric_limits<int>::max();
        for (std::uint32_t s : sups) best = std::min(best, std::popcount(s) - r_ - cnt_[s]);
        return std::max(best, 0);
    }

private:
    int m_, k_, r_;
    std::vector<int> cnt_;
};

struct Candidate {
    ServerSet column;
    std::vector<std::uint32_t> supersets;
};

std::vector<Candidate> make_candidates(const ContainmentCounters& counters, std::vector<ServerSet> columns) {
    std::sort(columns.begin(), columns.end(), card_lex_less);
    std::vector<Candidate> out;
    out.reserve(columns.size());
    for (ServerSet c : columns) out.push_back({c, counters.constrained_supersets(c)});
    return out;
}

class MinWeightSearch {
public:
    MinWeightSearch(const CodeParams& p, const SearchBudget& budget)
        : p_(p), counters_(p.m, p.k, p.r), clock_(budget) {
        std::vector<ServerSet> columns;
        for (int size = p.r + 1; size <= p.r + p.k; ++size)
            for (ServerSet s : subsets_of_size(p.m, size)) columns.push_back(s);
        candidates_ = make_candidates(counters_, std::move(columns));
        best_weight_ = static_cast<std::int64_t>(p.r + p.k) * p.n + 1;
    }

    SearchResult run() {
        chosen_.clear();
        dfs(0, 0);
        SearchResult out;
        out.nodes = clock_.nodes();
        if (!best_.empty()) out.witness = BatchCode(p_.m, best_);
        if (clock_.exhausted()) {
            out.exact = false;
            out.bound = SearchResult::Bound::Lower;
            out.value = static_cast<std::int64_t>(p_.r + 1) * p_.n;
        } else {
            out.value = best_weight_;
        }
        return out;
    }

private:
    void dfs(std::size_t start, std::int64_t weight) {
        if (!clock_.tick()) return;
        const int placed = static_cast<int>(chosen_.size());
        if (placed == p_.n) {
            best_weight_ = weight;
            best_ = chosen_;
            return;
        }
        const int remaining = p_.n - placed;
        for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
            const Candidate& cand = candidates_[idx];
            // later candidates are no smaller, so every completion costs at least this much
            if (weight + static_cast<std::int64_t>(cand.column.size()) * remaining >= best_weight_) break;
            if (placed == 0 && cand.column != ServerSet::range(1, cand.column.size())) continue;
            if (!counters_.try_add(cand.supersets)) continue;
            chosen_.push_back(cand.column);
            dfs(idx, weight + cand.column.size());
            chosen_.pop_back();
            counters_.remove(cand.supersets);
            if (clock_.exhausted()) return;
        }
    }

    CodeParams p_;
    ContainmentCounters counters_;
    BudgetClock clock_;
    std::vector<Candidate> candidates_;
    std::vector<ServerSet> chosen_, best_;
    std::int64_t best_weight_;
};

class PackingSearch {
public:
    PackingSearch(int cardinality, int k, int m, int r, std::int64_t limit, const SearchBudget& budget)
        : m_(m), limit_(limit), counters_(m, k, r), clock_(budget) {
        candidates_ = make_candidates(counters_, subsets_of_size(m, cardinality));
    }

    SearchResult run() {
        dfs(0);
        SearchResult out;
        out.nodes = clock_.nodes();
        out.value = static_cast<std::int64_t>(best_.size());
        out.witness = BatchCode(m_, best_);
        if (clock_.exhausted()) {
            out.exact = false;
            out.bound = SearchResult::Bound::Lower;
        }
        return out;
    }

private:
    void dfs(std::size_t start) {
        if (!clock_.tick()) return;
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (static_cast<std::int64_t>(best_.size()) >= limit_) return;

        std::int64_t bound = static_cast<std::int64_t>(chosen_.size());
        for (std::size_t idx = start; idx < candidates_.size(); ++idx) bound += counters_.headroom(candidates_[idx].supersets);
        if (bound <= static_cast<std::int64_t>(best_.size())) return;

        for (std::size_t idx = start; idx < candidates_.size(); ++idx) {
            if (chosen_.empty() && idx > 0) break;  // first column is {1..c} up to relabeling
            const Candidate& cand = candidates_[idx];
            if (!counters_.try_add(cand.supersets)) continue;
            chosen_.push_back(cand.column);
            dfs(idx);
            chosen_.pop_back();
            counters_.remove(cand.supersets);
            if (clock_.exhausted() || static_cast<std::int64_t>(best_.size()) >= limit_) return;
        }
    }

    int m_;
    std::int64_t limit_;
    ContainmentCounters counters_;
    BudgetClock clock_;
    std::vector<Candidate> candidates_;
    std::vector<ServerSet> chosen_, best_;
};

void require_search_scale(int m) {
    if (m > kMaxSearchServers)
        throw ContractError("exact search supports at most " + std::to_string(kMaxSearchServers) + " servers");
}

}  // namespace

SearchResult exact_min_weight(const CodeParams& p, const SearchBudget& budget) {
    validate_params(p);
    require_search_scale(p.m);
    return MinWeightSearch(p, budget).run();
}

SearchResult max_uniform_code(int cardinality, int k, int m, int r, std::int64_t limit, const SearchBudget& budget) {
    if (m < 1 || r < 0 || r >= m || k < 1 || k > m - r) throw ContractError("max_uniform_code: invalid k, m, r");
    if (cardinality < r + 1 || cardinality > m) throw ContractError("max_uniform_code: cardinality outside [r+1, m]");
    if (limit < 0) throw ContractError("max_uniform_code: negative limit");
    require_search_scale(m);
    return PackingSearch(cardinality, k, m, r, limit, budget).run();
}

SearchResult compute_F(int k, int m, int r, const SearchBudget& budget) {
    if (k < 3 || r < 0 || m < r + k) throw ContractError("compute_F needs k >= 3, r >= 0 and m >= r + k");
    return max_uniform_code(r + k - 2, k, m, r, std::numeric_limits<std::int64_t>::max(), budget);
}

SearchResult compute_n_max(int k, int m, int r, std::int64_t limit, const SearchBudget& budget) {
    if (m < 1 || r < 0 || r >= m || k < 1 || k > m - r) throw ContractError("compute_n_max: invalid k, m, r");
    if (k == 1) {
        SearchResult out;
        out.value = std::nullopt;
        return out;
    }
    return max_uniform_code(r + 1, k, m, r, limit, budget);
}

std::int64_t f_upper_bound(int k, int m, int r) {
    return (k - 1) * binomial(m, r + k - 2) / (r + k - 1);
}

}  // namespace cbc
