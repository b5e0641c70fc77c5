#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tpq/errors.hpp"
#include "tpq/setops.hpp"

namespace tpq {

using NodeSet = std::vector<std::string>;  // canonical: sorted, duplicate-free

// A finite hypergraph over opaque string node identifiers. Edges are stored
// in canonical order with exact duplicates collapsed; subsumed edges are kept
// (subsumption pruning is a separate, explicit normalization).
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(NodeSet nodes, std::vector<NodeSet> edges);

    // Nodes default to the union of the edges.
    static Hypergraph from_edges(std::vector<NodeSet> edges);

    const NodeSet& nodes() const { return nodes_; }
    const std::vector<NodeSet>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t node_count() const { return nodes_.size(); }

    bool has_node(const std::string& n) const { return set_contains(nodes_, n); }

    // Drops edges properly contained in other edges.
    Hypergraph subsumption_pruned() const;

    bool operator==(const Hypergraph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    NodeSet nodes_;
    std::vector<NodeSet> edges_;
};

// Join tree of an acyclic hypergraph: one vertex per hyperedge, parent links,
// a distinguished root. An empty hypergraph yields an empty tree.
struct JoinTree {
    std::vector<NodeSet> vertices;
    std::vector<std::pair<int, int>> tree_edges;  // (child, parent) vertex indices
    int root = -1;
};

// One [v]-component together with its border and frontier.
struct Separation {
    NodeSet component;
    NodeSet border;    // frontier \ component, always within the separating set
    NodeSet frontier;  // component plus border
};

bool covers(const Hypergraph& h1, const Hypergraph& h2);

// All [v]-components of h, ordered by smallest member.
std::vector<Separation> separate(const Hypergraph& h, const NodeSet& v);

bool is_acyclic(const Hypergraph& h);

// Throws NotAcyclic when no join tree exists.
JoinTree join_tree(const Hypergraph& h);

// Checks the connectedness condition of jt against h (vertices must be
// exactly the edges of h, in order).
bool join_tree_valid(const Hypergraph& h, const JoinTree& jt);

// H^k: all unions of between 1 and k edges.
Hypergraph union_expand(const Hypergraph& h, int k);

struct ExpandOptions {
    std::uint64_t cluster_cap = 1000000;  // max number of generated clusters
    int arity_cap = 16;                   // max edge size accepted by simplicial()
};

// H^tk: all non-empty node subsets of size <= k+1.
Hypergraph cluster_expand(const Hypergraph& h, int k, const ExpandOptions& opts = {});

// Closure of the edge family under non-empty subsets.
Hypergraph simplicial(const Hypergraph& h, const ExpandOptions& opts = {});

// Frontier/border of an arbitrary node set (not necessarily a component).
NodeSet frontier_of(const Hypergraph& h, const NodeSet& c);

}  // namespace tpq
