#include "cbc/verify.hpp"

#include <algorithm>

#include "cbc/combinatorics.hpp"
#include "cbc/errors.hpp"
#include "cbc/retrieval.hpp"

namespace cbc {

std::string to_string(VerifyStrategy s) {
    switch (s) {
        case VerifyStrategy::Auto: return "auto";
        case VerifyStrategy::Definitional: return "definitional";
        case VerifyStrategy::ColumnUnion: return "column-union";
        case VerifyStrategy::RowContainment: return "row-containment";
    }
    return "?";
}

std::optional<VerifyStrategy> parse_strategy(std::string_view name) {
    for (VerifyStrategy s : {VerifyStrategy::Auto, VerifyStrategy::Definitional, VerifyStrategy::ColumnUnion,
                             VerifyStrategy::RowContainment})
        if (name == to_string(s)) return s;
    return std::nullopt;
}

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

std::optional<RowContainmentWitness> first_row_containment_violation(const BatchCode& code, int k, int r) {
    const int m = code.m();
    for (int d = r; d <= std::min(r + k - 1, m); ++d) {
        for (Combination rows(m, d); rows.valid(); rows.next()) {
            const ServerSet servers(std::span<const int>(rows.current()));
            std::vector<int> inside;
            for (int j = 1; j <= code.n(); ++j)
                if (code.column(j).is_subset_of(servers)) inside.push_back(j);
            if (static_cast<int>(inside.size()) > d - r) return RowContainmentWitness{servers, std::move(inside)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<ColumnUnionWitness> first_column_union_violation(const BatchCode& code, int k, int r) {
    const int n = code.n();
    for (int c = 1; c <= std::min(k, n); ++c) {
        for (Combination files(n, c); files.valid(); files.next()) {
            ServerSet span;
            for (int j : files.current()) span = span | code.column(j);
            if (span.size() < r + c) return ColumnUnionWitness{files.current(), span};
        }
    }
    return std::nullopt;
}

VerifyStrategy auto_strategy(const CodeParams& p) {
    std::int64_t row_work = 0, column_work = 0;
    for (int d = p.r; d <= p.r + p.k - 1; ++d) row_work += binomial(p.m, d);
    for (int c = 1; c <= p.k; ++c) column_work += binomial(p.n, c);
    return row_work <= column_work ? VerifyStrategy::RowContainment : VerifyStrategy::ColumnUnion;
}

VerifyReport verify(const BatchCode& code, const CodeParams& p, VerifyStrategy strategy) {
    validate_params(p);
    if (code.m() != p.m || code.n() != p.n)
        throw ContractError("code is " + std::to_string(code.m()) + "x" + std::to_string(code.n()) +
                            " but parameters are " + p.to_string());
    if (strategy == VerifyStrategy::Auto) strategy = auto_strategy(p);

    VerifyReport report;
    report.strategy = strategy;
    switch (strategy) {
        case VerifyStrategy::ColumnUnion:
            if (auto w = first_column_union_violation(code, p.k, p.r)) report.witness = std::move(*w);
            break;
        case VerifyStrategy::RowContainment:
            if (auto w = first_row_containment_violation(code, p.k, p.r)) report.witness = std::move(*w);
            break;
        case VerifyStrategy::Definitional:
            if (auto f = exhaustive_service_check(code, p))
                report.witness = ServiceWitness{std::move(f->demand.files), f->availability.servers};
            break;
        case VerifyStrategy::Auto: break;
    }
    report.ok = !report.witness.has_value();
    return report;
}

std::string describe(const VerifyWitness& w) {
    if (const auto* c = std::get_if<ColumnUnionWitness>(&w))
        return "columns " + join(c->files) + " span only " + std::to_string(c->span.size()) + " servers " +
               c->span.to_string();
    if (const auto* rw = std::get_if<RowContainmentWitness>(&w))
        return "servers " + rw->servers.to_string() + " contain " + std::to_string(rw->contained_files.size()) +
               " columns " + join(rw->contained_files);
    const auto& s = std::get<ServiceWitness>(w);
    return "demand " + join(s.demand) + " cannot be served from servers " + s.available.to_string();
}

bool witness_is_valid(const BatchCode& code, const CodeParams& p, const VerifyWitness& w) {
    if (const auto* c = std::get_if<ColumnUnionWitness>(&w)) {
        std::vector<int> files = c->files;
        std::sort(files.begin(), files.end());
        if (files.empty() || static_cast<int>(files.size()) > p.k) return false;
        if (std::adjacent_find(files.begin(), files.end()) != files.end()) return false;
        ServerSet span;
        for (int j : files) {
            if (j < 1 || j > code.n()) return false;
            span = span | code.column(j);
        }
        return span.size() < p.r + static_cast<int>(files.size());
    }
    if (const auto* rw = std::get_if<RowContainmentWitness>(&w)) {
        const int d = rw->servers.size();
        if (d < p.r || d > p.r + p.k - 1 || !rw->servers.is_subset_of(ServerSet::full(p.m))) return false;
        int inside = 0;
        for (ServerSet col : code.columns()) inside += col.is_subset_of(rw->servers) ? 1 : 0;
        return inside > d - p.r;
    }
    // Service witness: by Hall's theorem a plan is impossible iff some subset of the demand
    // sees fewer available servers than its size. Checked by brute force over subsets.
    const auto& s = std::get<ServiceWitness>(w);
    const int count = static_cast<int>(s.demand.size());
    if (count > p.k || count > 20 || s.available.size() < p.m - p.r) return false;
    for (int j : s.demand)
        if (j < 1 || j > code.n()) return false;
    for (unsigned subset = 1; subset < (1u << count); ++subset) {
        ServerSet seen;
        for (int b = 0; b < count; ++b)
            if (subset >> b & 1u) seen = seen | (code.column(s.demand[b]) & s.available);
        if (seen.size() < std::popcount(subset)) return true;
    }
    return false;
}

}  // namespace cbc
