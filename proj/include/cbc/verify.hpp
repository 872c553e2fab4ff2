#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbc/batch_code.hpp"
#include "cbc/params.hpp"

namespace cbc {

enum class VerifyStrategy {
    Auto,            ///< row-containment or column-union, whichever enumerates fewer subsets
    Definitional,    ///< match every maximal (demand, availability) pair
    ColumnUnion,     ///< every c <= k columns span at least r + c rows
    RowContainment,  ///< every d rows, r <= d <= r+k-1, contain at most d - r columns
};

std::string to_string(VerifyStrategy s);
/// Accepts "auto", "definitional", "column-union", "row-containment".
std::optional<VerifyStrategy> parse_strategy(std::string_view name);

/// Files J (1-based, ascending) whose columns span fewer than r + |J| servers.
struct ColumnUnionWitness {
    std::vector<int> files;
    ServerSet span;
};

/// Servers I with more than |I| - r columns inside them.
struct RowContainmentWitness {
    ServerSet servers;
    std::vector<int> contained_files;
};

/// A demand of k files and m - r available servers admitting no one-file-per-server plan.
struct ServiceWitness {
    std::vector<int> demand;
    ServerSet available;
};

using VerifyWitness = std::variant<ColumnUnionWitness, RowContainmentWitness, ServiceWitness>;

struct VerifyReport {
    bool ok = false;
    VerifyStrategy strategy = VerifyStrategy::ColumnUnion;  ///< strategy actually run (never Auto)
    std::optional<VerifyWitness> witness;                   ///< present iff !ok
};

std::string describe(const VerifyWitness& w);

/// Checks whether `code` is an r-CBC(n, k, m). Requires valid params and matching dimensions.
/// Witnesses are the first failure in lexicographic enumeration order.
VerifyReport verify(const BatchCode& code, const CodeParams& p, VerifyStrategy strategy = VerifyStrategy::Auto);

/// The strategy Auto resolves to for p.
VerifyStrategy auto_strategy(const CodeParams& p);

/// Column-union check with no constraint tying k to n: every c <= min(k, n) columns must
/// span >= r + c servers. Used by operations whose codes grow or shrink (extension, transforms).
std::optional<ColumnUnionWitness> first_column_union_violation(const BatchCode& code, int k, int r);

inline bool accepts(const BatchCode& code, int k, int r) {
    return !first_column_union_violation(code, k, r).has_value();
}

/// Independent re-check of a witness against the code: true iff it demonstrates a violation.
bool witness_is_valid(const BatchCode& code, const CodeParams& p, const VerifyWitness& w);

}  // namespace cbc
