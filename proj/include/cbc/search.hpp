#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "cbc/batch_code.hpp"
#include "cbc/params.hpp"

namespace cbc {

struct SearchBudget {
    std::uint64_t node_limit = 2'000'000'000;
    std::chrono::milliseconds time_limit{std::chrono::minutes(10)};

    /// Throws ContractError unless both limits are positive.
    void validate() const;
};

/// Outcome of an exact search. When `exact` is false the budget ran out and `value` is only a
/// bound in the direction given by `bound`; a witness, if any, is the best code found so far.
struct SearchResult {
    enum class Bound { Exact, Lower, Upper };

    std::optional<std::int64_t> value;  ///< nullopt means unbounded
    std::optional<BatchCode> witness;
    bool exact = true;
    Bound bound = Bound::Exact;
    std::uint64_t nodes = 0;

    bool unbounded() const { return !value.has_value(); }
};

/// Minimum weight N(n,k,m;r) by branch and bound over multisets of columns with cardinality in
/// [r+1, r+k], taken in nondecreasing (cardinality, lexicographic) order. Infeasible prefixes are
/// cut by incremental row-containment counters; a prefix is cut when its weight plus
/// |last column| * (columns left) cannot beat the incumbent. The first column is fixed to
/// {1..c} (row relabeling). Inexact results report the lower bound (r+1)n.
SearchResult exact_min_weight(const CodeParams& p, const SearchBudget& budget = {});

/// Largest multiset of `cardinality`-subsets of {1..m}, capped at `limit`, that is an r-CBC for batch
/// size k. The shared engine behind compute_F and compute_n_max. Inexact results are lower bounds.
SearchResult max_uniform_code(int cardinality, int k, int m, int r, std::int64_t limit, const SearchBudget& budget = {});

/// F(k,m,r): the most columns of cardinality r+k-2 an r-CBC(n,k,m) can have. Needs k >= 3, m >= r+k.
SearchResult compute_F(int k, int m, int r, const SearchBudget& budget = {});

/// n(k,m;r): the largest n <= limit with N(n,k,m;r) = (r+1)n. Unbounded for k = 1.
SearchResult compute_n_max(int k, int m, int r, std::int64_t limit, const SearchBudget& budget = {});

/// floor((k-1) C(m, r+k-2) / (r+k-1)), the double-counting bound on F(k,m,r).
std::int64_t f_upper_bound(int k, int m, int r);

}  // namespace cbc
