#pragma once

#include <cstdint>
#include <optional>

#include "tpq/hypergraph.hpp"

namespace tpq {

// A game configuration: the active squad (edge index into h2, -1 before the
// first move), the deployed cops M, and the Robber's component C (empty once
// captured).
struct Configuration {
    int squad = -1;
    NodeSet cops;
    NodeSet robber;

    auto operator<=>(const Configuration&) const = default;
};

// Configuration-level view of a strategy, with cop-removal steps explicit.
struct StrategyGraph {
    std::vector<Configuration> nodes;
    std::vector<std::pair<int, int>> arcs;
    // Captain's choice per configuration: (squad, cops); squad -1 = none.
    std::vector<std::pair<int, NodeSet>> choice;
    int root = 0;
};

// Compact encoding of a nice strategy: one node per (squad, component) pair
// reached, with the Captain's move recorded explicitly. Capture nodes carry
// an empty component and no choice.
struct ComponentGraph {
    struct Node {
        int squad = -1;      // squad under which this component arose; -1 at the root
        NodeSet component;   // empty = capture
        int choice_squad = -1;
        NodeSet choice_cops;
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    int root = 0;

    bool is_capture(int i) const { return nodes.at(i).component.empty(); }
};

// An acyclic hypergraph sandwiched between h1 and h2, with a witnessing join
// tree and the per-edge covering proofs.
struct TreeProjection {
    Hypergraph hypergraph;
    JoinTree jointree;
    std::vector<int> h2_cover;     // per hypergraph edge: covering edge of h2
    std::vector<int> h1_cover_by;  // per h1 edge: covering edge of hypergraph
};

struct GameStats {
    std::uint64_t distinct_configurations = 0;
    bool used_marking_fallback = false;
};

// |edges(h2)| * |nodes(h1)| * (|edges(h2)| * |nodes(h1)| + 1) + 1
std::uint64_t config_bound(const Hypergraph& h1, const Hypergraph& h2);

// Component graph of a greedy winning strategy for the Captain on (h1, h2),
// if one exists. monotone_only restricts the Captain to moves with an empty
// escape door, deciding the monotone Robber-and-Marshal variant.
std::optional<ComponentGraph> greedy_strategy(const Hypergraph& h1, const Hypergraph& h2,
                                              bool monotone_only,
                                              GameStats* stats = nullptr);

// Validating normalization: checks that cg encodes a winning strategy on
// (h1, h2) and returns it with children in canonical order. The component
// graph form is intrinsically nice (standing cops are the component border;
// cop-removal steps appear only in the expanded StrategyGraph).
ComponentGraph to_nice(const ComponentGraph& cg, const Hypergraph& h1, const Hypergraph& h2);

bool is_monotone(const ComponentGraph& cg, const Hypergraph& h1);

// Rewrites a nice winning component graph into a monotone one by repeatedly
// removing escape doors along a leaves-first topological order.
ComponentGraph monotonize(const ComponentGraph& cg, const Hypergraph& h1,
                          const Hypergraph& h2);

// Reads the tree projection off a monotone winning component graph: its edges
// are the cop sets of the strategy. Verifies the sandwich and acyclicity.
TreeProjection extract_tree_projection(const ComponentGraph& cg, const Hypergraph& h1,
                                       const Hypergraph& h2);

// Full configuration-level expansion, including the implicit cop-removal
// configurations of the nice strategy.
StrategyGraph expand_strategy(const ComponentGraph& cg, const Hypergraph& h1,
                              const Hypergraph& h2);

}  // namespace tpq
