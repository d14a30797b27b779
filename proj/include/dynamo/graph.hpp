#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynamo/errors.hpp"

namespace dynamo {

// Finite simple undirected graph over string-named vertices.
//
// Vertex names are non-empty tokens without whitespace (apostrophes are
// fine, so mirrored vertices can be called v'). Vertex order is
// first-mention order and is fixed for the lifetime of the graph; all
// construction helpers return new graphs, so a built Graph is immutable
// and safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Builds the graph on the union of `vertices` and all edge endpoints.
    // Repeated vertices and edges are idempotent; self-loops are rejected.
    static Graph build(const std::vector<std::string>& vertices,
                       const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(std::size_t v) const { return names_.at(v); }

    std::optional<std::size_t> find(std::string_view name) const;
    // Like find(), but throws Error when the name is absent.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    // Neighbor indices, sorted ascending.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool has_edge(std::size_t u, std::size_t v) const;

    // Edges as index pairs (u < v), in first-mention order.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

private:
    std::size_t intern(const std::string& name);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Edge-list documents: one edge per line ("u v"), lines whose first
// non-blank character is '#' are comments, blank lines are ignored.
// Malformed lines and self-loops are rejected with their line number.
// Note that the format cannot carry isolated vertices; save_graph drops
// them and callers that care should check beforehand.
Graph load_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string save_graph(const Graph& g);

// Vertex-set documents: one token per line, same comment rules.
// Duplicated tokens are idempotent; order of first mention is kept.
std::vector<std::string> load_vertex_set(const std::string& text);
std::vector<std::string> load_vertex_set_file(const std::string& path);
std::string save_vertex_set(const std::vector<std::string>& names);

// Equality as labeled graphs: same vertex-name set and same edge set.
bool labeled_equal(const Graph& a, const Graph& b);

// New graph with every vertex renamed through `f` (must stay injective).
Graph relabel(const Graph& g, const std::function<std::string(const std::string&)>& f);

// New graph without the listed vertices (which must exist) and their edges.
Graph remove_vertices(const Graph& g, const std::vector<std::string>& names);

// New graph with extra edges between existing vertices.
Graph add_edges(const Graph& g, const std::vector<std::pair<std::string, std::string>>& extra);

bool valid_vertex_name(std::string_view name);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace dynamo
