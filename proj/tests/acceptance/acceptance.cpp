// One PASS/FAIL line per acceptance criterion, with wall time. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cbc/batch_code.hpp"
#include "cbc/combinatorics.hpp"
#include "cbc/constructions.hpp"
#include "cbc/graphs.hpp"
#include "cbc/retrieval.hpp"
#include "cbc/search.hpp"
#include "cbc/transforms.hpp"
#include "cbc/verify.hpp"
#include "../unit/fixtures.hpp"

using namespace cbc;

namespace {

struct Check {
    int failures = 0;
    long cases = 0;
    std::string first;
    void expect(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first = what;
    }
};

bool run_criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= limit_s;
    const bool ok = c.failures == 0 && in_time;
    std::printf("%s criterion %2d: %s (%ld checks, %.2fs, limit %.0fs)", ok ? "PASS" : "FAIL", id, title, c.cases, secs,
                limit_s);
    if (c.failures) std::printf(" -- %d failure(s), first: %s", c.failures, c.first.c_str());
    if (!in_time) std::printf(" -- over time limit");
    std::printf("\n");
    std::fflush(stdout);
    return ok;
}

bool three_way_agree(const BatchCode& code, const CodeParams& p) {
    const bool a = verify(code, p, VerifyStrategy::Definitional).ok;
    const bool b = verify(code, p, VerifyStrategy::ColumnUnion).ok;
    const bool c = verify(code, p, VerifyStrategy::RowContainment).ok;
    return a == b && b == c;
}

BatchCode random_accepted(std::mt19937& rng, int& k, int& r) {
    for (;;) {
        const int m = static_cast<int>(rng() % 5) + 2;
        r = static_cast<int>(rng() % m);
        k = static_cast<int>(rng() % (m - r)) + 1;
        const int n = static_cast<int>(rng() % 7) + k;
        std::vector<ServerSet> cols;
        for (int j = 0; j < n; ++j) {
            const int card = r + 1 + static_cast<int>(rng() % k);
            ServerSet s;
            while (s.size() < card) s.insert(static_cast<int>(rng() % m) + 1);
            cols.push_back(s);
        }
        BatchCode code(m, cols);
        if (accepts(code, k, r)) return code;
    }
}

}  // namespace

int main() {
    bool all = true;

    all &= run_criterion(1, "reference matrix reproduction", 1, [](Check& c) {
        c.expect(construct_circulant({4, 3, 6, 3}) == fixtures::tall(), "circulant(4,3,6,3) differs from the tall reference");
        const BatchCode mk = construct_max_k(7, 6, 3);
        c.expect(mk == fixtures::max_k(), "max_k(7,6,3) differs from its reference");
        c.expect(weight(mk) == 30, "max_k weight");
        const BatchCode ln = construct_large_n({8, 2, 4, 1});
        const auto prof = cardinality_profile(ln, {8, 2, 4, 1});
        c.expect(weight(ln) == 18, "large_n weight");
        c.expect(prof.ell(2) == 6 && prof.ell(3) == 2, "large_n profile");
        const auto fig = cardinality_profile(fixtures::large_n(), {8, 2, 4, 1});
        c.expect(fig.ell(2) == 6 && fig.ell(3) == 2 && weight(fixtures::large_n()) == 18, "large-n reference profile");
    });

    all &= run_criterion(2, "three-way verifier equivalence", 60, [](Check& c) {
        const int m = 4;
        for (int n = 0; n <= 3; ++n) {
            const std::uint64_t total = std::uint64_t{1} << (m * n);
            for (std::uint64_t bits = 0; bits < total; ++bits) {
                std::vector<ServerSet> cols;
                for (int j = 0; j < n; ++j) cols.emplace_back((bits >> (m * j)) & 0xFu);
                const BatchCode code(m, cols);
                for (int r = 0; r < m; ++r)
                    for (int k = 1; k <= std::min(n, m - r); ++k)
                        c.expect(three_way_agree(code, {n, k, m, r}), "disagreement on " + render_matrix(code));
            }
        }
        std::mt19937 rng(2024);
        for (int t = 0; t < 1000; ++t) {
            const int mm = static_cast<int>(rng() % 6) + 1, n = static_cast<int>(rng() % 6) + 1;
            std::vector<ServerSet> cols;
            for (int j = 0; j < n; ++j) cols.emplace_back(rng() & ServerSet::full(mm).mask());
            const BatchCode code(mm, cols);
            const int r = static_cast<int>(rng() % mm);
            if (std::min(n, mm - r) < 1) continue;
            const int k = static_cast<int>(rng() % std::min(n, mm - r)) + 1;
            c.expect(three_way_agree(code, {n, k, mm, r}), "random disagreement on " + render_matrix(code));
        }
    });

    all &= run_criterion(3, "exact oracle vs closed forms (m<=5, n<=7)", 600, [](Check& c) {
        int compared = 0;
        for (int m = 1; m <= 5; ++m)
            for (int r = 0; r < m; ++r)
                for (int k = 1; k <= m - r; ++k)
                    for (int n = k; n <= 7; ++n) {
                        const CodeParams p{n, k, m, r};
                        const auto pred = predicted_weight(p);
                        if (!pred.known()) continue;
                        const SearchResult res = exact_min_weight(p);
                        c.expect(res.exact, "search inexact at " + p.to_string());
                        c.expect(res.value == pred.value, "mismatch at " + p.to_string());
                        ++compared;
                    }
        c.expect(compared > 100, "too few regimes applied");
    });

    all &= run_criterion(4, "gap regime at (k,r,m)=(3,0,5)", 60, [](Check& c) {
        const SearchResult F = compute_F(3, 5, 0);
        c.expect(F.exact && F.witness, "F(3,5,0) search failed");
        if (!F.witness) return;
        const BatchCode at20 = construct_gap({20, 3, 5, 0}, *F.witness);
        c.expect(weight(at20) == 40 && weight(construct_large_n({20, 3, 5, 0})) == 40, "n=20 weight");
        c.expect(verify(at20, {20, 3, 5, 0}).ok, "n=20 code fails verify");
        const BatchCode at10 = construct_gap({10, 3, 5, 0}, *F.witness);
        c.expect(weight(at10) == 17 && verify(at10, {10, 3, 5, 0}).ok, "n=10 weight or verify");
        const SearchResult opt = exact_min_weight({10, 3, 5, 0});
        c.expect(opt.exact && opt.value == 17, "oracle disagrees at n=10");
    });

    all &= run_criterion(5, "F values and the counting bound", 60, [](Check& c) {
        for (int m = 4; m <= 6; ++m) {
            const SearchResult F = compute_F(3, m, 1);
            c.expect(F.exact && F.value == m * m / 4, "F(3," + std::to_string(m) + ",1)");
        }
        for (int m = 3; m <= 6; ++m)
            for (int r = 0; r <= 2; ++r)
                for (int k = 3; k <= m - r; ++k) {
                    const SearchResult F = compute_F(k, m, r);
                    c.expect(F.exact && *F.value <= f_upper_bound(k, m, r), "bound violated");
                }
    });

    all &= run_criterion(6, "trivial-minimum thresholds", 120, [](Check& c) {
        for (int m = 4; m <= 5; ++m) {
            c.expect(compute_n_max(2, m, 1, 100).value == binomial(m, 2), "n(2,m;1)");
            c.expect(compute_n_max(3, m, 1, 100).value == m * m / 4, "n(3,m;1)");
        }
        for (int m = 2; m <= 5; ++m)
            for (int k = 2; k <= m; ++k) c.expect(compute_n_max(k, m, 0, 100).value == m, "n(k,m;0)");
        c.expect(compute_n_max(1, 5, 0, 100).unbounded(), "k=1 must be unbounded");
    });

    all &= run_criterion(7, "girth equivalence on 5 vertices", 60, [](Check& c) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 1; u <= 5; ++u)
            for (int v = u + 1; v <= 5; ++v) all_edges.emplace_back(u, v);
        int checked = 0;
        for (std::uint32_t sel = 0; sel < (1u << all_edges.size()); ++sel) {
            SimpleGraph g(5);
            for (std::size_t i = 0; i < all_edges.size(); ++i)
                if (sel >> i & 1u) g.add_edge(all_edges[i].first, all_edges[i].second);
            const int n = g.edge_count();
            if (n < 5) continue;
            const BatchCode code = code_from_graph(g);
            const auto gi = girth(g);
            for (int k = 2; k <= 4; ++k) {
                const bool expected = !gi || *gi >= k + 1;
                c.expect(verify(code, {n, k, 5, 1}).ok == expected, "girth mismatch on " + render_graph(g));
                ++checked;
            }
        }
        c.expect(checked > 0, "no graphs checked");
    });

    all &= run_criterion(8, "retrieval completeness on the reference codes", 60, [](Check& c) {
        const std::vector<std::pair<BatchCode, CodeParams>> cases = {
            {construct_circulant({4, 3, 6, 3}), {4, 3, 6, 3}},
            {construct_max_k(7, 6, 3), {7, 3, 6, 3}},
            {construct_large_n({8, 2, 4, 1}), {8, 2, 4, 1}},
        };
        for (const auto& [code, p] : cases) {
            std::int64_t plans = 0;
            for (ServerSet files : subsets_of_size(p.n, p.k))
                for (ServerSet down : subsets_of_size(p.m, p.r)) {
                    const Demand d{files.elements()};
                    const Availability avail = Availability::all_but(p.m, down);
                    const auto out = plan_retrieval(code, p, d, avail);
                    const auto* plan = std::get_if<RetrievalPlan>(&out);
                    c.expect(plan != nullptr, "no plan for " + p.to_string());
                    if (plan) c.expect(plan_is_valid(code, d, avail, *plan), "invalid plan for " + p.to_string());
                    ++plans;
                }
            c.expect(plans == binomial(p.n, p.k) * binomial(p.m, p.r), "pair count");
        }
    });

    all &= run_criterion(9, "transform preservation on 500 random codes", 60, [](Check& c) {
        std::mt19937 rng(99);
        for (int t = 0; t < 500; ++t) {
            int k = 0, r = 0;
            const BatchCode code = random_accepted(rng, k, r);
            const CodeParams p{code.n(), k, code.m(), r};
            const BatchCode norm = normalize_types(code, p);
            c.expect(weight(norm) == weight(code), "normalize changed weight");
            c.expect(accepts(norm, k, r), "normalize broke acceptance");
            c.expect(is_type_i(norm, k, r) || is_type_ii(norm, k, r), "normalize output has no type");
            for (int i = 1; i <= code.n(); ++i)
                for (int j = 1; j <= code.n(); ++j) {
                    const ServerSet a = code.column(i), b = code.column(j);
                    if (i == j || !a.is_proper_subset_of(b)) continue;
                    const ServerSet extra = b - a;
                    const BatchCode moved = move_ones(code, i, j, ServerSet{extra.min_element()});
                    c.expect(weight(moved) == weight(code) && accepts(moved, k, r), "move_ones broke the code");
                    const BatchCode moved_all = move_ones(code, i, j, extra);
                    c.expect(weight(moved_all) == weight(code) && accepts(moved_all, k, r), "move_ones (all) broke the code");
                }
        }
    });

    all &= run_criterion(10, "binomial quotient inequality for m <= 12", 1, [](Check& c) {
        for (int m = 2; m <= 12; ++m)
            for (int p = 1; p <= m - 1; ++p)
                for (int i = 1; i <= p; ++i)
                    c.expect((binomial(m - i, p - i) - 1) / (m - p) >= p - i,
                             "fails at m=" + std::to_string(m) + " p=" + std::to_string(p) + " i=" + std::to_string(i));
    });

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
