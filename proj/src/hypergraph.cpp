#include "tpq/hypergraph.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace tpq {

Hypergraph::Hypergraph(NodeSet nodes, std::vector<NodeSet> edges) {
    nodes_ = canonical_set(std::move(nodes));
    for (auto& e : edges) {
        e = canonical_set(std::move(e));
        if (e.empty())
            throw Error("empty_edge", "hyperedges must be non-empty");
        for (const auto& n : e)
            if (!set_contains(nodes_, n))
                throw Error("unknown_node", "edge references undeclared node '" + n + "'");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_edges(std::vector<NodeSet> edges) {
    NodeSet nodes;
    for (const auto& e : edges)
        for (const auto& n : e)
            nodes.push_back(n);
    return Hypergraph(std::move(nodes), std::move(edges));
}

Hypergraph Hypergraph::subsumption_pruned() const {
    std::vector<NodeSet> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < edges_.size() && !subsumed; ++j)
            if (i != j && is_subset(edges_[i], edges_[j]) && edges_[i] != edges_[j])
                subsumed = true;
        if (!subsumed)
            kept.push_back(edges_[i]);
    }
    return Hypergraph(nodes_, std::move(kept));
}

bool covers(const Hypergraph& h1, const Hypergraph& h2) {
    for (const auto& e : h1.edges()) {
        bool contained = false;
        for (const auto& f : h2.edges())
            if (is_subset(e, f)) {
                contained = true;
                break;
            }
        if (!contained)
            return false;
    }
    return true;
}

NodeSet frontier_of(const Hypergraph& h, const NodeSet& c) {
    NodeSet f;
    for (const auto& e : h.edges())
        if (sets_intersect(e, c))
            f = set_union(f, e);
    return f;
}

std::vector<Separation> separate(const Hypergraph& h, const NodeSet& v) {
    NodeSet sep = canonical_set(v);
    for (const auto& n : sep)
        if (!h.has_node(n))
            throw Error("unknown_node", "separator references unknown node '" + n + "'");

    NodeSet free = set_diff(h.nodes(), sep);
    std::vector<Separation> out;
    std::set<std::string> assigned;
    for (const auto& seed : free) {
        if (assigned.count(seed))
            continue;
        // grow the [v]-component containing seed
        NodeSet comp{seed};
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : h.edges()) {
                NodeSet open = set_diff(e, sep);
                if (open.size() <= 1)
                    continue;
                if (sets_intersect(open, comp)) {
                    NodeSet merged = set_union(comp, open);
                    if (merged != comp) {
                        comp = std::move(merged);
                        changed = true;
                    }
                }
            }
        }
        for (const auto& n : comp)
            assigned.insert(n);
        Separation s;
        s.component = comp;
        s.frontier = frontier_of(h, comp);
        s.border = set_diff(s.frontier, comp);
        out.push_back(std::move(s));
    }
    // components are discovered in order of their smallest member since
    // `free` is sorted and each component is claimed by its first node
    return out;
}

namespace {

// GYO ear removal; returns parent assignments when a full reduction exists.
std::optional<std::vector<std::pair<int, int>>> gyo_reduce(const Hypergraph& h) {
    const auto& edges = h.edges();
    int m = static_cast<int>(edges.size());
    std::vector<bool> live(m, true);
    std::vector<std::pair<int, int>> parents;
    int remaining = m;

    while (remaining > 1) {
        int ear = -1, witness = -1;
        for (int i = 0; i < m && ear < 0; ++i) {
            if (!live[i])
                continue;
            // nodes of i shared with some other live edge
            NodeSet shared;
            for (int j = 0; j < m; ++j) {
                if (j == i || !live[j])
                    continue;
                shared = set_union(shared, set_intersect(edges[i], edges[j]));
            }
            for (int j = 0; j < m; ++j) {
                if (j == i || !live[j])
                    continue;
                if (is_subset(shared, edges[j])) {
                    ear = i;
                    witness = j;
                    break;
                }
            }
        }
        if (ear < 0)
            return std::nullopt;
        live[ear] = false;
        --remaining;
        parents.emplace_back(ear, witness);
    }
    return parents;
}

}  // namespace

bool is_acyclic(const Hypergraph& h) {
    if (h.edge_count() <= 1)
        return true;
    return gyo_reduce(h).has_value();
}

JoinTree join_tree(const Hypergraph& h) {
    JoinTree jt;
    jt.vertices = h.edges();
    if (h.edge_count() == 0)
        return jt;
    if (h.edge_count() == 1) {
        jt.root = 0;
        return jt;
    }
    auto parents = gyo_reduce(h);
    if (!parents)
        throw NotAcyclic("hypergraph has no join tree");
    std::vector<bool> has_parent(h.edge_count(), false);
    for (auto [child, parent] : *parents) {
        jt.tree_edges.emplace_back(child, parent);
        has_parent[child] = true;
    }
    for (std::size_t i = 0; i < h.edge_count(); ++i)
        if (!has_parent[i])
            jt.root = static_cast<int>(i);
    return jt;
}

bool join_tree_valid(const Hypergraph& h, const JoinTree& jt) {
    if (jt.vertices != h.edges())
        return false;
    int m = static_cast<int>(jt.vertices.size());
    if (m == 0)
        return jt.tree_edges.empty() && jt.root == -1;
    if (jt.root < 0 || jt.root >= m)
        return false;
    if (static_cast<int>(jt.tree_edges.size()) != m - 1)
        return false;
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : jt.tree_edges) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // connected with m-1 edges => tree
    std::vector<bool> seen(m, false);
    std::queue<int> q;
    q.push(jt.root);
    seen[jt.root] = true;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                q.push(y);
            }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        return false;
    // connectedness condition, node by node
    for (const auto& n : h.nodes()) {
        std::vector<int> holders;
        for (int i = 0; i < m; ++i)
            if (set_contains(jt.vertices[i], n))
                holders.push_back(i);
        if (holders.size() <= 1)
            continue;
        std::vector<bool> in_holders(m, false);
        for (int i : holders)
            in_holders[i] = true;
        std::vector<bool> reach(m, false);
        std::queue<int> bfs;
        bfs.push(holders[0]);
        reach[holders[0]] = true;
        while (!bfs.empty()) {
            int x = bfs.front();
            bfs.pop();
            for (int y : adj[x])
                if (in_holders[y] && !reach[y]) {
                    reach[y] = true;
                    bfs.push(y);
                }
        }
        for (int i : holders)
            if (!reach[i])
                return false;
    }
    return true;
}

Hypergraph union_expand(const Hypergraph& h, int k) {
    if (k < 1)
        throw Error("bad_argument", "union expansion requires k >= 1");
    std::set<NodeSet> acc(h.edges().begin(), h.edges().end());
    std::set<NodeSet> layer = acc;
    for (int round = 2; round <= k; ++round) {
        std::set<NodeSet> next;
        for (const auto& u : layer)
            for (const auto& e : h.edges()) {
                NodeSet w = set_union(u, e);
                if (!acc.count(w))
                    next.insert(w);
            }
        if (next.empty())
            break;
        acc.insert(next.begin(), next.end());
        layer = std::move(next);
    }
    return Hypergraph(h.nodes(), std::vector<NodeSet>(acc.begin(), acc.end()));
}

namespace {

std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap)
            return cap + 1;
    }
    return r;
}

}  // namespace

Hypergraph cluster_expand(const Hypergraph& h, int k, const ExpandOptions& opts) {
    if (k < 1)
        throw Error("bad_argument", "cluster expansion requires k >= 1");
    std::uint64_t n = h.node_count();
    std::uint64_t total = 0;
    for (int size = 1; size <= k + 1; ++size) {
        total += choose_capped(n, static_cast<std::uint64_t>(size), opts.cluster_cap);
        if (total > opts.cluster_cap)
            throw ExpansionTooLarge("cluster expansion would exceed cap of " +
                                    std::to_string(opts.cluster_cap) + " edges");
    }
    std::vector<NodeSet> out;
    NodeSet current;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (!current.empty())
            out.push_back(current);
        if (static_cast<int>(current.size()) == k + 1)
            return;
        for (std::size_t i = start; i < h.nodes().size(); ++i) {
            current.push_back(h.nodes()[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return Hypergraph(h.nodes(), std::move(out));
}

Hypergraph simplicial(const Hypergraph& h, const ExpandOptions& opts) {
    for (const auto& e : h.edges())
        if (static_cast<int>(e.size()) > opts.arity_cap)
            throw ArityCapExceeded("edge of size " + std::to_string(e.size()) +
                                   " exceeds the simplicial arity cap of " +
                                   std::to_string(opts.arity_cap));
    std::set<NodeSet> acc;
    for (const auto& e : h.edges()) {
        std::uint64_t total = 1ull << e.size();
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            NodeSet sub;
            for (std::size_t b = 0; b < e.size(); ++b)
                if (mask & (1ull << b))
                    sub.push_back(e[b]);
            acc.insert(std::move(sub));
        }
    }
    return Hypergraph(h.nodes(), std::vector<NodeSet>(acc.begin(), acc.end()));
}

}  // namespace tpq
