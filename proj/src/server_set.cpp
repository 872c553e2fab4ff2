#include "cbc/server_set.hpp"

#include "cbc/errors.hpp"

namespace cbc {

ServerSet::ServerSet(std::initializer_list<int> servers) {
    for (int s : servers) insert(s);
}

ServerSet::ServerSet(std::span<const int> servers) {
    for (int s : servers) insert(s);
}

ServerSet ServerSet::range(int first, int last) {
    ServerSet out;
    for (int s = first; s <= last; ++s) out.insert(s);
    return out;
}

std::vector<int> ServerSet::elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest) + 1);
    return out;
}

ServerSet& ServerSet::insert(int server) {
    if (server < 1 || server > kMaxServer)
        throw ContractError("server index " + std::to_string(server) + " outside [1, 64]");
    mask_ |= std::uint64_t{1} << (server - 1);
    return *this;
}

ServerSet& ServerSet::erase(int server) {
    if (server >= 1 && server <= kMaxServer) mask_ &= ~(std::uint64_t{1} << (server - 1));
    return *this;
}

std::string ServerSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int s : elements()) {
        if (!first) out += ',';
        out += std::to_string(s);
        first = false;
    }
    return out + "}";
}

bool lex_less(ServerSet a, ServerSet b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x != 0 && y != 0) {
        const int ex = std::countr_zero(x), ey = std::countr_zero(y);
        if (ex != ey) return ex < ey;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

bool card_lex_less(ServerSet a, ServerSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace cbc
