#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbc/batch_code.hpp"
#include "cbc/search.hpp"

namespace cbc {

/// Undirected simple graph on vertices {1..m}. Edges are stored as (u, v) with u < v.
class SimpleGraph {
public:
    explicit SimpleGraph(int m = 0);
    SimpleGraph(int m, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return m_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::set<std::pair<int, int>>& edges() const { return edges_; }

    /// Throws ContractError on loops or out-of-range vertices; returns false if already present.
    bool add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int m_;
    std::set<std::pair<int, int>> edges_;
};

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const SimpleGraph& g);

/// One column {u, v} per edge, in edge order.
BatchCode code_from_graph(const SimpleGraph& g);

class NotAGraph : public std::invalid_argument {
public:
    enum class Reason { WrongCardinality, ParallelEdge };
    NotAGraph(int file, Reason reason, const std::string& what)
        : std::invalid_argument(what), file_(file), reason_(reason) {}
    int file() const { return file_; }  ///< 1-based offending column
    Reason reason() const { return reason_; }

private:
    int file_;
    Reason reason_;
};

/// Inverse of code_from_graph. Throws NotAGraph if a column is not a pair or repeats.
SimpleGraph graph_from_code(const BatchCode& code);

/// Most edges of a graph on m vertices with girth >= girth_min (forests count). Exhaustive
/// edge-by-edge search; the witness is the graph's incidence code.
SearchResult max_edges_with_girth(int m, int girth_min, const SearchBudget& budget = {});

/// Graph text: "m e", then e lines "u v".
SimpleGraph parse_graph(std::string_view text);
std::string render_graph(const SimpleGraph& g);

}  // namespace cbc
