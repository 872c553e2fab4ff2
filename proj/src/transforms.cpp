#include "cbc/transforms.hpp"

#include "cbc/errors.hpp"
#include "cbc/verify.hpp"

namespace cbc {

BatchCode move_ones(const BatchCode& code, int i, int j, ServerSet moved) {
    if (i < 1 || i > code.n() || j < 1 || j > code.n()) throw ContractError("move_ones: file index out of range");
    const ServerSet small = code.column(i), large = code.column(j);
    if (!small.is_proper_subset_of(large))
        throw ContractError("move_ones: column " + std::to_string(i) + " " + small.to_string() +
                            " is not a proper subset of column " + std::to_string(j) + " " + large.to_string());
    if (moved.empty()) throw ContractError("move_ones: moved server set is empty");
    if (!moved.is_subset_of(large - small))
        throw ContractError("move_ones: " + moved.to_string() + " is not inside A_j \\ A_i = " +
                            (large - small).to_string());

    std::vector<ServerSet> cols(code.columns().begin(), code.columns().end());
    cols[i - 1] = small | moved;
    cols[j - 1] = large - moved;
    return BatchCode(code.m(), std::move(cols));
}

bool is_type_i(const BatchCode& code, int k, int r) {
    for (ServerSet c : code.columns())
        if (c.size() < r + 1 || c.size() > r + k - 1) return false;
    return true;
}

bool is_type_ii(const BatchCode& code, int k, int r) {
    for (ServerSet c : code.columns())
        if (c.size() < r + k - 1 || c.size() > r + k) return false;
    return true;
}

BatchCode normalize_types(const BatchCode& code, const CodeParams& p) {
    const int k = p.k, r = p.r;
    if (code.m() != p.m) throw ContractError("normalize_types: code has " + std::to_string(code.m()) + " servers");
    if (r < 0 || r >= p.m || k < 1 || k > p.m - r) throw ContractError("normalize_types: invalid k, m, r");
    for (ServerSet c : code.columns())
        if (c.size() < r + 1 || c.size() > r + k)
            throw ContractError("normalize_types: column " + c.to_string() + " outside cardinality band [r+1, r+k]");
    if (!accepts(code, k, r)) throw ContractError("normalize_types: input is not an r-CBC");

    BatchCode current = code;
    for (;;) {
        int small = 0, large = 0;
        for (int j = 1; j <= current.n(); ++j) {
            const int size = current.column(j).size();
            if (small == 0 && size <= r + k - 2) small = j;
            if (large == 0 && size == r + k) large = j;
        }
        if (small == 0 || large == 0) return current;

        // A column of cardinality r+k never causes a violation, so it may be swapped for any
        // other (r+k)-set; take the lexicographically smallest superset of the small column.
        const ServerSet base = current.column(small);
        ServerSet superset = base;
        for (int s = 1; superset.size() < r + k; ++s)
            if (!superset.contains(s)) superset.insert(s);

        std::vector<ServerSet> cols(current.columns().begin(), current.columns().end());
        cols[large - 1] = superset;
        current = BatchCode(current.m(), std::move(cols));

        ServerSet moved;
        moved.insert((superset - base).min_element());
        current = move_ones(current, small, large, moved);
    }
}

}  // namespace cbc
