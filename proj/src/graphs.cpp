#include "cbc/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <queue>

#include "budget_clock.hpp"
#include "cbc/errors.hpp"

namespace cbc {

SimpleGraph::SimpleGraph(int m) : m_(m) {
    if (m < 0 || m > ServerSet::kMaxServer) throw ContractError("vertex count must lie in [0, 64]");
}

SimpleGraph::SimpleGraph(int m, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(m) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::add_edge(int u, int v) {
    if (u < 1 || u > m_ || v < 1 || v > m_)
        throw ContractError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") leaves {1.." +
                            std::to_string(m_) + "}");
    if (u == v) throw ContractError("loop at vertex " + std::to_string(u));
    return edges_.emplace(std::min(u, v), std::max(u, v)).second;
}

bool SimpleGraph::has_edge(int u, int v) const { return edges_.count({std::min(u, v), std::max(u, v)}) > 0; }

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(m_ + 1);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::optional<int> girth(const SimpleGraph& g) {
    const auto adj = g.adjacency();
    const int m = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    for (int root = 1; root <= m; ++root) {
        std::vector<int> dist(m + 1, -1), parent(m + 1, 0);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

BatchCode code_from_graph(const SimpleGraph& g) {
    std::vector<ServerSet> cols;
    for (const auto& [u, v] : g.edges()) cols.push_back(ServerSet{u, v});
    return BatchCode(std::max(g.vertex_count(), 1), std::move(cols));
}

SimpleGraph graph_from_code(const BatchCode& code) {
    SimpleGraph g(code.m());
    for (int j = 1; j <= code.n(); ++j) {
        const ServerSet c = code.column(j);
        if (c.size() != 2)
            throw NotAGraph(j, NotAGraph::Reason::WrongCardinality,
                            "column " + std::to_string(j) + " " + c.to_string() + " does not have exactly 2 servers");
        if (!g.add_edge(c.min_element(), c.max_element()))
            throw NotAGraph(j, NotAGraph::Reason::ParallelEdge,
                            "column " + std::to_string(j) + " " + c.to_string() + " repeats an earlier edge");
    }
    return g;
}

namespace {

class GirthEdgeSearch {
public:
    GirthEdgeSearch(int m, int girth_min, const SearchBudget& budget)
        : m_(m), girth_min_(girth_min), adj_(m + 1, 0), clock_(budget) {
        for (int u = 1; u <= m; ++u)
            for (int v = u + 1; v <= m; ++v) edges_.emplace_back(u, v);
    }

    SearchResult run() {
        dfs(0);
        SearchResult out;
        out.nodes = clock_.nodes();
        out.value = static_cast<std::int64_t>(best_.size());
        out.witness = code_from_graph(SimpleGraph(m_, best_));
        if (clock_.exhausted()) {
            out.exact = false;
            out.bound = SearchResult::Bound::Lower;
        }
        return out;
    }

private:
    // Adding (u, v) closes a cycle of length dist(u, v) + 1; allowed iff that is >= girth_min.
    bool addable(int u, int v) const {
        const int reach = girth_min_ - 2;  // u, v must be farther apart than this
        std::uint64_t frontier = std::uint64_t{1} << u, seen = frontier;
        for (int d = 1; d <= reach; ++d) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
            next &= ~seen;
            if (next >> v & 1u) return false;
            seen |= next;
            frontier = next;
            if (!frontier) break;
        }
        return true;
    }

    void dfs(std::size_t idx) {
        if (!clock_.tick()) return;
        if (chosen_.size() > best_.size()) best_ = chosen_;
        if (idx == edges_.size()) return;

        std::size_t bound = chosen_.size();
        for (std::size_t e = idx; e < edges_.size(); ++e) bound += addable(edges_[e].first, edges_[e].second) ? 1 : 0;
        if (bound <= best_.size()) return;

        const auto [u, v] = edges_[idx];
        if (addable(u, v)) {
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
            chosen_.emplace_back(u, v);
            dfs(idx + 1);
            chosen_.pop_back();
            adj_[u] &= ~(std::uint64_t{1} << v);
            adj_[v] &= ~(std::uint64_t{1} << u);
        }
        // any nonempty graph can be relabeled to contain edge {1,2}
        if (idx == 0) return;
        if (!clock_.exhausted()) dfs(idx + 1);
    }

    int m_, girth_min_;
    std::vector<std::uint64_t> adj_;
    detail::BudgetClock clock_;
    std::vector<std::pair<int, int>> edges_, chosen_, best_;
};

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool two_ints(std::string_view s, int& a, int& b) {
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc()) return false;
    p = r1.ptr;
    if (p == end || (*p != ' ' && *p != '\t')) return false;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, b);
    return r2.ec == std::errc() && r2.ptr == end;
}

}  // namespace

SearchResult max_edges_with_girth(int m, int girth_min, const SearchBudget& budget) {
    if (m < 1 || m > 63) throw ContractError("max_edges_with_girth: m must lie in [1, 63]");
    if (girth_min < 3) throw ContractError("max_edges_with_girth: girth_min must be at least 3");
    return GirthEdgeSearch(m, girth_min, budget).run();
}

SimpleGraph parse_graph(std::string_view text) {
    int line_no = 0, m = 0, e = 0, read = 0;
    bool have_header = false;
    std::optional<SimpleGraph> g;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        const std::string_view line = trimmed(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() != '#') {
            int a = 0, b = 0;
            if (!two_ints(line, a, b))
                throw ParseError(line_no, 0, have_header ? "edge line must be \"u v\"" : "header must be \"m e\"");
            if (!have_header) {
                if (a < 0 || a > ServerSet::kMaxServer || b < 0) throw ParseError(line_no, 0, "bad header values");
                m = a;
                e = b;
                g.emplace(m);
                have_header = true;
            } else {
                if (read == e) throw ParseError(line_no, 0, "more than e = " + std::to_string(e) + " edges");
                try {
                    if (!g->add_edge(a, b)) throw ParseError(line_no, 0, "parallel edge");
                } catch (const ContractError& err) {
                    throw ParseError(line_no, 0, err.what());
                }
                ++read;
            }
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw ParseError(line_no, 0, "missing header \"m e\"");
    if (read != e) throw ParseError(line_no, 0, "expected " + std::to_string(e) + " edges, got " + std::to_string(read));
    return *g;
}

std::string render_graph(const SimpleGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace cbc
