#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cbc {

/// A subset of the servers {1..64}, stored as a bitmask (bit i-1 <=> server i).
/// Iteration and `elements()` always yield servers in ascending order.
class ServerSet {
public:
    static constexpr int kMaxServer = 64;

    constexpr ServerSet() = default;
    constexpr explicit ServerSet(std::uint64_t mask) : mask_(mask) {}
    ServerSet(std::initializer_list<int> servers);
    explicit ServerSet(std::span<const int> servers);

    /// {1..m}
    static constexpr ServerSet full(int m) {
        return ServerSet(m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1));
    }
    /// {first, first+1, ..., last}; empty when last < first.
    static ServerSet range(int first, int last);

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int server) const {
        return server >= 1 && server <= kMaxServer && ((mask_ >> (server - 1)) & 1u);
    }
    /// Largest server index present, 0 when empty.
    constexpr int max_element() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
    constexpr int min_element() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    std::vector<int> elements() const;

    constexpr bool is_subset_of(ServerSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool is_proper_subset_of(ServerSet other) const {
        return is_subset_of(other) && mask_ != other.mask_;
    }

    ServerSet& insert(int server);
    ServerSet& erase(int server);

    friend constexpr ServerSet operator|(ServerSet a, ServerSet b) { return ServerSet(a.mask_ | b.mask_); }
    friend constexpr ServerSet operator&(ServerSet a, ServerSet b) { return ServerSet(a.mask_ & b.mask_); }
    /// Set difference.
    friend constexpr ServerSet operator-(ServerSet a, ServerSet b) { return ServerSet(a.mask_ & ~b.mask_); }
    friend constexpr bool operator==(ServerSet a, ServerSet b) = default;

    /// "{1,3,4}"
    std::string to_string() const;

private:
    std::uint64_t mask_ = 0;
};

/// Lexicographic order on the ascending element sequences: {1,2} < {1,2,3} < {1,3} < {2}.
bool lex_less(ServerSet a, ServerSet b);

struct LexLess {
    bool operator()(ServerSet a, ServerSet b) const { return lex_less(a, b); }
};

/// Orders by cardinality first, then lexicographically.
bool card_lex_less(ServerSet a, ServerSet b);

}  // namespace cbc
