#pragma once

#include "cbc/batch_code.hpp"
#include "cbc/params.hpp"

namespace cbc {

/// Moves the servers `moved` from column j to column i (1-based files).
/// Requires A_i a proper subset of A_j and `moved` a nonempty subset of A_j \ A_i.
/// Acceptance and weight are preserved.
BatchCode move_ones(const BatchCode& code, int i, int j, ServerSet moved);

/// All column cardinalities in [r+1, r+k-1].
bool is_type_i(const BatchCode& code, int k, int r);
/// All column cardinalities in [r+k-1, r+k].
bool is_type_ii(const BatchCode& code, int k, int r);

/// Rewrites an accepted code with cardinalities in [r+1, r+k] into type (i) or type (ii)
/// at equal weight. While a column of cardinality <= r+k-2 and one of cardinality r+k
/// coexist, the first such large column is replaced by the lexicographically smallest
/// (r+k)-superset of the first such small column, then its smallest extra server moves
/// into the small column.
///
/// Only k, m and r are read from p; the code's own column count is used.
BatchCode normalize_types(const BatchCode& code, const CodeParams& p);

}  // namespace cbc
