#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cbc/params.hpp"
#include "cbc/server_set.hpp"

namespace cbc {

/// An m x n placement: column j (file j) is the set of servers storing it.
///
/// Columns form a multiset; duplicates are kept as distinct files. Construction order
/// is preserved, `canonical()` gives the sorted representative. Empty columns are
/// representable (they come from arbitrary 0/1 matrices) but never verify.
class BatchCode {
public:
    BatchCode() = default;
    /// Throws ContractError if m is outside [1, 64] or a column has a server outside {1..m}.
    BatchCode(int m, std::vector<ServerSet> columns);

    int m() const { return m_; }
    int n() const { return static_cast<int>(columns_.size()); }

    std::span<const ServerSet> columns() const { return columns_; }
    /// 1-based file index.
    ServerSet column(int file) const;

    /// Files stored on `server` (the server's row), ascending.
    std::vector<int> row(int server) const;

    /// Columns sorted lexicographically; equal codes up to column order have equal canonical forms.
    BatchCode canonical() const;

    BatchCode with_column(ServerSet column) const;

    friend bool operator==(const BatchCode&, const BatchCode&) = default;

private:
    int m_ = 1;
    std::vector<ServerSet> columns_;
};

/// Total number of stored copies (ones in the incidence matrix).
std::int64_t weight(const BatchCode& code);

/// Histogram of column cardinalities against the band [r+1, r+k].
struct CardinalityProfile {
    int r = 0;
    int k = 0;
    /// by_cardinality[c] = number of columns with exactly c servers, c in [0, m].
    std::vector<int> by_cardinality;

    /// Number of columns of cardinality i (0 when i is out of [0, m]).
    int ell(int i) const;
    int below_band() const;  ///< cardinality <= r
    int above_band() const;  ///< cardinality > r + k
    int total() const;
};

CardinalityProfile cardinality_profile(const BatchCode& code, const CodeParams& p);

/// Matrix text: "m n", then m rows of n characters from {0,1}. Blank lines and '#' comments are skipped.
BatchCode parse_matrix(std::string_view text);
std::string render_matrix(const BatchCode& code);

}  // namespace cbc
