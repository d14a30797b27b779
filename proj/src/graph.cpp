#include "dynamo/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace dynamo {

bool valid_vertex_name(std::string_view name) {
    if (name.empty()) return false;
    for (char ch : name) {
        if (std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::size_t Graph::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (!valid_vertex_name(name)) {
        throw Error("invalid vertex name: '" + name + "'");
    }
    std::size_t id = names_.size();
    names_.push_back(name);
    index_.emplace(name, id);
    adj_.emplace_back();
    return id;
}

Graph Graph::build(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    for (const auto& v : vertices) g.intern(v);
    for (const auto& [a, b] : edges) {
        if (a == b) throw Error("self-loop on vertex '" + a + "'");
        std::size_t u = g.intern(a);
        std::size_t v = g.intern(b);
        if (u > v) std::swap(u, v);
        auto& nu = g.adj_[u];
        if (std::find(nu.begin(), nu.end(), v) != nu.end()) continue;
        nu.push_back(v);
        g.adj_[v].push_back(u);
        g.edges_.emplace_back(u, v);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

std::optional<std::size_t> Graph::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Graph::index_of(std::string_view name) const {
    auto idx = find(name);
    if (!idx) throw Error("unknown vertex '" + std::string(name) + "'");
    return *idx;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

bool comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '#';
    }
    return true;
}

} // namespace

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        auto toks = split_tokens(line);
        if (toks.size() != 2) {
            throw Error("line " + std::to_string(lineno) +
                        ": expected two tokens, got " + std::to_string(toks.size()));
        }
        if (toks[0] == toks[1]) {
            throw Error("line " + std::to_string(lineno) + ": self-loop on '" + toks[0] + "'");
        }
        edges.emplace_back(toks[0], toks[1]);
    }
    return Graph::build({}, edges);
}

Graph load_graph_file(const std::string& path) {
    return load_graph(read_text_file(path));
}

std::string save_graph(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        std::string a = g.name(u), b = g.name(v);
        if (b < a) std::swap(a, b);
        named.emplace_back(std::move(a), std::move(b));
    }
    std::sort(named.begin(), named.end());
    std::ostringstream out;
    for (const auto& [a, b] : named) out << a << ' ' << b << '\n';
    return out.str();
}

std::vector<std::string> load_vertex_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> names;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        auto toks = split_tokens(line);
        if (toks.size() != 1) {
            throw Error("line " + std::to_string(lineno) +
                        ": expected one token, got " + std::to_string(toks.size()));
        }
        if (std::find(names.begin(), names.end(), toks[0]) == names.end()) {
            names.push_back(toks[0]);
        }
    }
    return names;
}

std::vector<std::string> load_vertex_set_file(const std::string& path) {
    return load_vertex_set(read_text_file(path));
}

std::string save_vertex_set(const std::vector<std::string>& names) {
    std::ostringstream out;
    for (const auto& n : names) out << n << '\n';
    return out.str();
}

bool labeled_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::string> na = a.vertex_names(), nb = b.vertex_names();
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    if (na != nb) return false;
    auto edge_key = [](const Graph& g) {
        std::vector<std::pair<std::string, std::string>> out;
        out.reserve(g.edge_count());
        for (auto [u, v] : g.edges()) {
            std::string x = g.name(u), y = g.name(v);
            if (y < x) std::swap(x, y);
            out.emplace_back(std::move(x), std::move(y));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return edge_key(a) == edge_key(b);
}

Graph relabel(const Graph& g, const std::function<std::string(const std::string&)>& f) {
    std::vector<std::string> vertices;
    vertices.reserve(g.vertex_count());
    for (const auto& n : g.vertex_names()) vertices.push_back(f(n));
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(vertices[u], vertices[v]);
    Graph out = Graph::build(vertices, edges);
    if (out.vertex_count() != g.vertex_count()) {
        throw Error("relabel map is not injective");
    }
    return out;
}

Graph remove_vertices(const Graph& g, const std::vector<std::string>& names) {
    std::vector<bool> drop(g.vertex_count(), false);
    for (const auto& n : names) drop[g.index_of(n)] = true;
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (!drop[v]) vertices.push_back(g.name(v));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) {
        if (!drop[u] && !drop[v]) edges.emplace_back(g.name(u), g.name(v));
    }
    return Graph::build(vertices, edges);
}

Graph add_edges(const Graph& g, const std::vector<std::pair<std::string, std::string>>& extra) {
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(g.edge_count() + extra.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(g.name(u), g.name(v));
    for (const auto& [a, b] : extra) {
        g.index_of(a);
        g.index_of(b);
        edges.emplace_back(a, b);
    }
    return Graph::build(g.vertex_names(), edges);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace dynamo
