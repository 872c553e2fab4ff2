#pragma once

#include <cstdint>
#include <vector>

#include "cbc/server_set.hpp"

namespace cbc {

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws std::overflow_error past 2^63.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// All `size`-subsets of {1..m} in lexicographic order.
std::vector<ServerSet> subsets_of_size(int m, int size);

/// Lexicographic k-combination walker over {1..n}, 1-based.
class Combination {
public:
    Combination(int n, int k);

    const std::vector<int>& current() const { return items_; }
    bool valid() const { return valid_; }
    /// Advances to the lexicographic successor; returns false (and invalidates) past the last.
    bool next();

private:
    int n_;
    std::vector<int> items_;
    bool valid_;
};

}  // namespace cbc
