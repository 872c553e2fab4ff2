#pragma once

#include <stdexcept>
#include <string>

namespace cbc {

/// Parameters (n, k, m, r) of a batch code with redundancy; at most one file is taken per server.
struct CodeParams {
    int n = 0;  ///< files (columns)
    int k = 0;  ///< batch size
    int m = 0;  ///< servers (rows)
    int r = 0;  ///< servers that may be unavailable at once

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
    std::string to_string() const;
};

class ParameterError : public std::invalid_argument {
public:
    enum class Violation {
        OutOfRange,           ///< n, k, m < 1 or r < 0
        RedundancyTooLarge,   ///< r >= m
        BatchExceedsFiles,    ///< k > n
        BatchExceedsServers,  ///< k > m - r
    };

    ParameterError(Violation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
    Violation violation() const { return violation_; }

private:
    Violation violation_;
};

/// Throws ParameterError naming the first failed inequality. A code exists iff r < m and k <= min(n, m - r).
void validate_params(const CodeParams& p);

/// Non-throwing form of validate_params.
bool params_valid(const CodeParams& p) noexcept;

}  // namespace cbc
