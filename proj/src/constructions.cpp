#include "cbc/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cbc/combinatorics.hpp"
#include "cbc/errors.hpp"
#include "cbc/search.hpp"
#include "cbc/verify.hpp"

namespace cbc {

namespace {

// {start, start+1, ..., start+width-1}, wrapping around {1..m}.
ServerSet cyclic_window(int start, int width, int m) {
    ServerSet out;
    for (int x = 0; x < width; ++x) out.insert((start + x - 1) % m + 1);
    return out;
}

void require_shape(const CodeParams& p) {
    if (p.m < 1 || p.m > ServerSet::kMaxServer || p.r < 0 || p.r >= p.m || p.k < 1 || p.k > p.m - p.r)
        throw ContractError("need 1 <= k <= m - r and 0 <= r < m, got " + p.to_string());
}

std::int64_t full_capacity(int k, int m, int r) { return (k - 1) * binomial(m, r + k - 1); }

}  // namespace

BatchCode construct_circulant(const CodeParams& p) {
    validate_params(p);
    if (p.n > p.m) throw ContractError("circulant construction needs n <= m, got " + p.to_string());
    std::vector<ServerSet> cols;
    for (int j = 1; j <= p.n; ++j) cols.push_back(cyclic_window(j, p.r + 1, p.m));
    return BatchCode(p.m, std::move(cols));
}

BatchCode construct_max_k(int n, int m, int r) {
    validate_params({n, m - r, m, r});
    if (n < m) throw ContractError("max-k construction needs m <= n");
    std::vector<ServerSet> cols;
    for (int j = 1; j <= n; ++j) cols.push_back(j <= m ? cyclic_window(j, r + 1, m) : ServerSet::full(m));
    return BatchCode(m, std::move(cols));
}

BatchCode construct_large_n(const CodeParams& p) {
    validate_params(p);
    if (p.k < 2) throw ContractError("large-n construction needs k >= 2; k = 1 is the single-file regime");
    const std::int64_t floor_n = full_capacity(p.k, p.m, p.r);
    if (p.n < floor_n)
        throw ContractError("large-n construction needs n >= (k-1) C(m, r+k-1) = " + std::to_string(floor_n));

    std::vector<ServerSet> cols;
    for (ServerSet s : subsets_of_size(p.m, p.r + p.k - 1))
        for (int copy = 0; copy < p.k - 1; ++copy) cols.push_back(s);
    const std::vector<ServerSet> fillers = subsets_of_size(p.m, p.r + p.k);
    for (std::int64_t i = 0; i < p.n - floor_n; ++i) cols.push_back(fillers[i % fillers.size()]);
    return BatchCode(p.m, std::move(cols));
}

BatchCode construct_k1(const CodeParams& p) {
    validate_params(p);
    if (p.k != 1) throw ContractError("single-file construction needs k = 1");
    std::vector<ServerSet> cols;
    for (int j = 1; j <= p.n; ++j) cols.push_back(cyclic_window((j - 1) % p.m + 1, p.r + 1, p.m));
    return BatchCode(p.m, std::move(cols));
}

BatchCode construct_distinct(const CodeParams& p) {
    validate_params(p);
    if (p.k != 2) throw ContractError("distinct-column construction needs k = 2");
    std::vector<ServerSet> all = subsets_of_size(p.m, p.r + 1);
    if (p.n > static_cast<int>(all.size())) throw ContractError("distinct-column construction needs n <= C(m, r+1)");
    all.resize(p.n);
    return BatchCode(p.m, std::move(all));
}

std::int64_t extension_capacity(const BatchCode& code, const CodeParams& p) {
    require_shape(p);
    if (code.m() != p.m) throw ContractError("extension_capacity: code has " + std::to_string(code.m()) + " servers");
    for (ServerSet c : code.columns())
        if (c.size() > p.r + p.k - 1)
            throw ContractError("extension_capacity: column " + c.to_string() + " exceeds cardinality r+k-1");
    if (!accepts(code, p.k, p.r)) throw ContractError("extension_capacity: code is not an r-CBC");

    const int top = p.r + p.k - 1;
    std::int64_t used = 0;
    for (ServerSet c : code.columns()) used += binomial(p.m - c.size(), top - c.size());
    return full_capacity(p.k, p.m, p.r) - used;
}

BatchCode extend_with_columns(const BatchCode& code, const CodeParams& p, std::int64_t count) {
    if (count < 0) throw ContractError("extend_with_columns: negative count");
    const std::int64_t capacity = extension_capacity(code, p);
    if (count > capacity)
        throw ContractError("extend_with_columns: " + std::to_string(count) + " exceeds capacity " +
                            std::to_string(capacity));

    std::vector<ServerSet> cols(code.columns().begin(), code.columns().end());
    std::int64_t left = count;
    for (ServerSet target : subsets_of_size(p.m, p.r + p.k - 1)) {
        if (left == 0) break;
        int inside = 0;
        for (ServerSet c : code.columns()) inside += c.is_subset_of(target) ? 1 : 0;
        const std::int64_t room = std::min<std::int64_t>(p.k - 1 - inside, left);
        for (std::int64_t i = 0; i < room; ++i) cols.push_back(target);
        left -= std::max<std::int64_t>(room, 0);
    }
    return BatchCode(p.m, std::move(cols));
}

std::int64_t gap_weight(const CodeParams& p) {
    const std::int64_t slack = full_capacity(p.k, p.m, p.r) - p.n;
    return static_cast<std::int64_t>(p.r + p.k - 1) * p.n - slack / (p.m - p.r - p.k + 1);
}

std::int64_t gap_interval_start(int k, int m, int r, std::int64_t base_size) {
    return full_capacity(k, m, r) - static_cast<std::int64_t>(m - r - k + 1) * base_size;
}

BatchCode construct_gap(const CodeParams& p, const BatchCode& base) {
    validate_params(p);
    if (p.k < 3 || p.m < p.r + p.k) throw ContractError("gap construction needs k >= 3 and m >= r + k");
    if (base.m() != p.m) throw ContractError("gap construction: base has the wrong server count");
    for (ServerSet c : base.columns())
        if (c.size() != p.r + p.k - 2)
            throw ContractError("gap construction: base column " + c.to_string() + " is not of cardinality r+k-2");
    if (!accepts(base, p.k, p.r)) throw ContractError("gap construction: base is not an r-CBC");

    const std::int64_t hi = full_capacity(p.k, p.m, p.r);
    const std::int64_t lo = gap_interval_start(p.k, p.m, p.r, base.n());
    if (p.n < lo || p.n > hi)
        throw ContractError("gap construction: n = " + std::to_string(p.n) + " outside [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");

    const std::int64_t x = (hi - p.n) / (p.m - p.r - p.k + 1);
    const BatchCode sorted = base.canonical();
    std::vector<ServerSet> head(sorted.columns().begin(), sorted.columns().begin() + x);
    return extend_with_columns(BatchCode(p.m, std::move(head)), p, p.n - x);
}

bool PackingDesign::is_packing() const {
    if (v < 1 || block_size < 0 || strength < 0 || strength > v) return false;
    const ServerSet points = ServerSet::full(v);
    for (ServerSet b : blocks)
        if (b.size() != block_size || !b.is_subset_of(points)) return false;
    for (ServerSet t : subsets_of_size(v, strength)) {
        int covering = 0;
        for (ServerSet b : blocks) covering += t.is_subset_of(b) ? 1 : 0;
        if (covering > lambda) return false;
    }
    return true;
}

bool PackingDesign::has_property_p(int k) const {
    std::map<std::uint64_t, int> copies;
    for (ServerSet b : blocks)
        if (++copies[b.mask()] > k - 2) return false;
    return true;
}

PackingDesign PackingDesign::all_subsets_design(int m, int k) {
    const int g = m - k;
    return PackingDesign{m, g + 2, g + 1, k - 1, subsets_of_size(m, g + 2)};
}

BatchCode construct_from_design(const PackingDesign& d, const CodeParams& p) {
    require_shape(p);
    const int g = p.m - (p.r + p.k);
    if (d.v != p.m || d.block_size != g + 2 || d.strength != g + 1 || d.lambda != p.k - 1)
        throw ContractError("design must be a " + std::to_string(g + 1) + "-(" + std::to_string(p.m) + ", " +
                            std::to_string(g + 2) + ", " + std::to_string(p.k - 1) + ") packing");
    if (!d.is_packing()) throw ContractError("blocks do not form a packing with the stated parameters");
    if (!d.has_property_p(p.k)) throw ContractError("a block occurs more than k-2 times");

    std::vector<ServerSet> cols;
    for (ServerSet b : d.blocks) cols.push_back(ServerSet::full(p.m) - b);
    return BatchCode(p.m, std::move(cols));
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::SingleFile: return "single-file";
        case Regime::Tall: return "tall";
        case Regime::MaxBatch: return "max-batch";
        case Regime::PairDistinct: return "pair-distinct";
        case Regime::LargeN: return "large-n";
        case Regime::Gap: return "gap";
    }
    return "?";
}

PackingProvider search_packing_provider() {
    return [](int k, int m, int r) -> std::optional<BatchCode> {
        SearchResult res = compute_F(k, m, r);
        return res.witness;
    };
}

namespace {

std::vector<std::pair<Regime, std::int64_t>> applicable_regimes(const CodeParams& p, const PackingProvider& packings,
                                                                std::optional<BatchCode>* gap_base) {
    std::vector<std::pair<Regime, std::int64_t>> out;
    const std::int64_t n = p.n, k = p.k, m = p.m, r = p.r;
    if (k == 1) out.emplace_back(Regime::SingleFile, (r + 1) * n);
    if (n <= m) out.emplace_back(Regime::Tall, (r + 1) * n);
    if (k == m - r && n >= m) out.emplace_back(Regime::MaxBatch, m * n - m * (m - r - 1));
    if (k == 2 && n <= binomial(m, r + 1)) out.emplace_back(Regime::PairDistinct, (r + 1) * n);
    if (k >= 2 && n >= full_capacity(p.k, p.m, p.r))
        out.emplace_back(Regime::LargeN, (r + k) * n - full_capacity(p.k, p.m, p.r));
    if (k >= 3 && m >= r + k && n <= full_capacity(p.k, p.m, p.r)) {
        // Cheapest possible start of the interval uses the counting bound on F; skip the search when
        // even that cannot reach n.
        if (n >= gap_interval_start(p.k, p.m, p.r, f_upper_bound(p.k, p.m, p.r))) {
            const PackingProvider& provider = packings ? packings : search_packing_provider();
            std::optional<BatchCode> base = provider(p.k, p.m, p.r);
            if (base && n >= gap_interval_start(p.k, p.m, p.r, base->n())) {
                out.emplace_back(Regime::Gap, gap_weight(p));
                if (gap_base) *gap_base = std::move(base);
            }
        }
    }
    return out;
}

}  // namespace

RegimePrediction predicted_weight(const CodeParams& p, const PackingProvider& packings) {
    validate_params(p);
    const auto regimes = applicable_regimes(p, packings, nullptr);
    RegimePrediction out;
    for (const auto& [regime, value] : regimes) {
        if (out.value && *out.value != value)
            throw std::logic_error("regimes " + to_string(*out.regime) + " and " + to_string(regime) +
                                   " disagree at " + p.to_string());
        if (!out.value) {
            out.value = value;
            out.regime = regime;
        }
        out.applicable.push_back(regime);
    }
    return out;
}

std::optional<Construction> construct_for(const CodeParams& p, const PackingProvider& packings) {
    validate_params(p);
    std::optional<BatchCode> base;
    const auto regimes = applicable_regimes(p, packings, &base);
    if (regimes.empty()) return std::nullopt;
    switch (regimes.front().first) {
        case Regime::SingleFile: return Construction{construct_k1(p), Regime::SingleFile};
        case Regime::Tall: return Construction{construct_circulant(p), Regime::Tall};
        case Regime::MaxBatch: return Construction{construct_max_k(p.n, p.m, p.r), Regime::MaxBatch};
        case Regime::PairDistinct: return Construction{construct_distinct(p), Regime::PairDistinct};
        case Regime::LargeN: return Construction{construct_large_n(p), Regime::LargeN};
        case Regime::Gap: return Construction{construct_gap(p, *base), Regime::Gap};
    }
    return std::nullopt;
}

}  // namespace cbc
