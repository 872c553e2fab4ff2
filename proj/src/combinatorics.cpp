#include "cbc/combinatorics.hpp"

#include <limits>
#include <stdexcept>

namespace cbc {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) / i stays integral at every step
        const std::int64_t factor = n - k + i;
        if (result > std::numeric_limits<std::int64_t>::max() / factor)
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        result = result * factor / i;
    }
    return result;
}

std::vector<ServerSet> subsets_of_size(int m, int size) {
    std::vector<ServerSet> out;
    if (size < 0 || size > m) return out;
    for (Combination c(m, size); c.valid(); c.next()) out.emplace_back(std::span<const int>(c.current()));
    return out;
}

Combination::Combination(int n, int k) : n_(n), items_(k > 0 ? k : 0), valid_(k >= 0 && k <= n) {
    for (int i = 0; i < static_cast<int>(items_.size()); ++i) items_[i] = i + 1;
}

bool Combination::next() {
    if (!valid_) return false;
    const int k = static_cast<int>(items_.size());
    int i = k - 1;
    while (i >= 0 && items_[i] == n_ - k + i + 1) --i;
    if (i < 0) {
        valid_ = false;
        return false;
    }
    ++items_[i];
    for (int j = i + 1; j < k; ++j) items_[j] = items_[j - 1] + 1;
    return true;
}

}  // namespace cbc
