#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

// Blow-up: every vertex v of dSet is replaced by n copies "v@1".."v@n".
// Edges inside the untouched part are kept, an edge between an untouched
// vertex u and a duplicated vertex v fans out to all copies (u, v@i), and
// an edge between two duplicated vertices survives only between copies of
// matching index (u@i, v@i).
Graph duplicate(const Graph& g, const std::vector<std::string>& dSet, std::size_t n);

// Class-level view of a blow-up. Anchor classes have multiplicity 1 and
// bulk classes multiplicity n; under class-uniform colorings a bulk vertex
// sees every class-neighbor once while an anchor vertex sees each bulk
// class-neighbor n times.
struct QuotientGraph {
    Graph base;             // one vertex per class
    std::vector<bool> bulk; // bulk[v] <=> class of multiplicity n

    std::vector<std::string> anchor_names() const;
    std::vector<std::string> bulk_names() const;
};

QuotientGraph quotient(const Graph& g, const std::vector<std::string>& dSet);

// Concrete blow-up of a quotient; equals duplicate(g, dSet, n) as a
// labeled graph whenever the quotient came from (g, dSet).
Graph expand(const QuotientGraph& qg, std::size_t n);

// Two mirrored layers plus a rung (v, v') at every even-degree vertex.
// Primes are named by appending "'"; every vertex of the result has odd
// degree, so majority ties are impossible in the result.
Graph hat(const Graph& g);

// Edit turning a candidate hat-graph of J into the chain base: drops f,
// then wires f' to y0 and to g1. Requires those four names to be present.
Graph jtilde_edit(const Graph& jhat);

// Port structure a chain base must expose.
struct ChainRoles {
    std::string spreader;                 // duplicated vertex whose copies feed the next level
    std::string q;
    std::string q_prime;
    std::vector<std::string> receivers;   // 30 white-side receivers, ordered
    std::vector<std::string> removable;   // 6 seed vertices dropped from every level after the first
    std::vector<std::string> dup_set;     // duplicated classes
};

// Roles document: lines "role vertex" with '#' comments; role is one of
// spreader, q, qprime, receiver, removable, dup. receiver and removable
// lines keep file order.
ChainRoles load_roles(const std::string& text);
ChainRoles load_roles_file(const std::string& path);

struct ChainResult {
    Graph graph;
    std::vector<std::string> seed;
};

// Chained construction over levels 2^5 .. 2^levels: per-level blow-ups of
// the base (the removable vertices are dropped everywhere but in the first
// level), with the 2^i spreader copies of level i split into 32 equal
// blocks wired to q, q' and the 30 receivers of level i+1. Level tags are
// appended to vertex names as "#<2^i>". The returned seed has exactly
// 36 + 30*(levels-5) vertices.
ChainResult chain_construct(const Graph& base, const ChainRoles& roles, std::size_t levels);

} // namespace dynamo
