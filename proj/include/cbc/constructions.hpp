#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbc/batch_code.hpp"
#include "cbc/params.hpp"

namespace cbc {

/// Column j = {j, j+1, ..., j+r} taken cyclically in {1..m}. Requires n <= m.
BatchCode construct_circulant(const CodeParams& p);

/// The first m columns circulant of width r+1, the remaining n - m columns full.
/// Optimal for k = m - r; requires m <= n and r < m.
BatchCode construct_max_k(int n, int m, int r);

/// k-1 copies of every (r+k-1)-subset (subset-major, lexicographic), then
/// n - (k-1) C(m, r+k-1) filler columns cycling through the (r+k)-subsets in lexicographic order.
/// Requires k >= 2 and n >= (k-1) C(m, r+k-1).
BatchCode construct_large_n(const CodeParams& p);

/// k = 1: n cyclic windows of width r+1, starting at servers 1, 2, ..., m, 1, 2, ...
BatchCode construct_k1(const CodeParams& p);

/// k = 2: the first n (r+1)-subsets in lexicographic order. Requires n <= C(m, r+1).
BatchCode construct_distinct(const CodeParams& p);

/// How many columns of cardinality r+k-1 can still be appended to an accepted code whose
/// columns all have cardinality <= r+k-1:
///   (k-1) C(m, r+k-1) - sum_{i=r+1}^{r+k-1} l_i C(m-i, r+k-1-i).
/// k, m, r come from p; p.n is ignored.
std::int64_t extension_capacity(const BatchCode& code, const CodeParams& p);

/// Appends `count` columns of cardinality r+k-1: for each (r+k-1)-set C in lexicographic order,
/// up to k-1 minus (columns already inside C) copies of C. Throws ContractError past capacity.
BatchCode extend_with_columns(const BatchCode& code, const CodeParams& p, std::int64_t count);

/// Target weight in the gap regime: (r+k-1)n - floor(((k-1)C(m,r+k-1) - n) / (m-r-k+1)).
std::int64_t gap_weight(const CodeParams& p);

/// Smallest n the gap construction accepts for a base packing of `base_size` columns:
/// (k-1) C(m, r+k-1) - (m-r-k+1) * base_size.
std::int64_t gap_interval_start(int k, int m, int r, std::int64_t base_size);

/// Gap-regime construction: the lexicographically first x columns of `base` (all of cardinality
/// r+k-2, accepted), extended with n - x columns of cardinality r+k-1.
/// Requires k >= 3, m >= r+k and n inside [gap_interval_start, (k-1) C(m, r+k-1)].
BatchCode construct_gap(const CodeParams& p, const BatchCode& base);

/// A multiset of `block_size`-subsets of {1..v} where every `strength`-subset lies in at most
/// `lambda` blocks.
struct PackingDesign {
    int v = 0;
    int block_size = 0;
    int strength = 0;
    int lambda = 0;
    std::vector<ServerSet> blocks;

    bool is_packing() const;
    /// No block occurs more than k-2 times.
    bool has_property_p(int k) const;

    /// All (m-k+2)-subsets of {1..m}: the (m-k+1)-(m, m-k+2, k-1) design used for r = 0.
    static PackingDesign all_subsets_design(int m, int k);
};

/// One column per block, column = {1..m} \ block. The design must be a
/// (g+1)-(m, g+2, k-1) packing with property (P), g = m - (r+k) >= 0. p.n is ignored.
BatchCode construct_from_design(const PackingDesign& d, const CodeParams& p);

enum class Regime {
    SingleFile,     ///< k = 1
    Tall,           ///< n <= m
    MaxBatch,       ///< k = m - r, n >= m
    PairDistinct,   ///< k = 2, n <= C(m, r+1)
    LargeN,         ///< n >= (k-1) C(m, r+k-1)
    Gap,            ///< k >= 3, inside the packing-extension interval
};

std::string to_string(Regime r);

/// Supplies an accepted code of F(k,m,r) (or at least some) columns of cardinality r+k-2.
using PackingProvider = std::function<std::optional<BatchCode>(int k, int m, int r)>;

/// Provider backed by compute_F with the default budget.
PackingProvider search_packing_provider();

struct RegimePrediction {
    std::optional<std::int64_t> value;
    std::optional<Regime> regime;
    std::vector<Regime> applicable;  ///< every regime that applied, all agreeing on value

    bool known() const { return value.has_value(); }
};

/// Closed-form N(n,k,m;r) where a known regime covers p, else unknown. Every applicable regime is
/// evaluated; disagreement throws std::logic_error. The gap regime consults `packings`
/// (defaults to search_packing_provider()).
RegimePrediction predicted_weight(const CodeParams& p, const PackingProvider& packings = {});

struct Construction {
    BatchCode code;
    Regime regime;
};

/// The construction for the first applicable regime, or nullopt when none applies.
std::optional<Construction> construct_for(const CodeParams& p, const PackingProvider& packings = {});

}  // namespace cbc
