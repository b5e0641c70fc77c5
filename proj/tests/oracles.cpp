#include "oracles.hpp"

#include <functional>
#include <map>
#include <set>

namespace tpq::oracle {

std::vector<std::vector<std::pair<int, int>>> all_trees(int m) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (m == 1) {
        out.push_back({});
        return out;
    }
    if (m == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> pruefer(m - 2, 0);
    while (true) {
        // decode
        std::vector<int> degree(m, 1);
        for (int x : pruefer)
            ++degree[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int i = 0; i < m; ++i)
            if (degree[i] == 1)
                leaves.insert(i);
        std::vector<int> seq = pruefer;
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, x);
            if (--degree[x] == 1)
                leaves.insert(x);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        out.push_back(std::move(edges));
        // advance
        int pos = m - 3;
        while (pos >= 0 && pruefer[pos] == m - 1)
            pruefer[pos--] = 0;
        if (pos < 0)
            break;
        ++pruefer[pos];
    }
    return out;
}

namespace {

bool connectedness_holds(const std::vector<NodeSet>& vertices,
                         const std::vector<std::pair<int, int>>& edges) {
    int m = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    NodeSet all;
    for (const auto& v : vertices)
        all = set_union(all, v);
    for (const auto& node : all) {
        std::vector<int> holders;
        for (int i = 0; i < m; ++i)
            if (set_contains(vertices[i], node))
                holders.push_back(i);
        if (holders.size() <= 1)
            continue;
        // walk only through holder vertices
        std::set<int> holder_set(holders.begin(), holders.end());
        std::set<int> seen{holders[0]};
        std::vector<int> stack{holders[0]};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (holder_set.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    stack.push_back(y);
                }
        }
        if (seen.size() != holders.size())
            return false;
    }
    return true;
}

}  // namespace

bool brute_acyclic(const Hypergraph& h) {
    int m = static_cast<int>(h.edge_count());
    if (m <= 1)
        return true;
    for (const auto& tree : all_trees(m))
        if (connectedness_holds(h.edges(), tree))
            return true;
    return false;
}

AnswerSet naive_evaluate(const Query& q, const Database& db, const NodeSet& output) {
    NodeSet vars = q.vars();
    std::set<std::string> domain_set;
    for (const auto& [rel, tuples] : db.relations)
        for (const auto& t : tuples)
            for (const auto& c : t)
                domain_set.insert(c);
    std::vector<std::string> domain(domain_set.begin(), domain_set.end());

    AnswerSet out;
    out.vars = canonical_set(output);

    std::map<std::string, std::string> assign;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == vars.size()) {
            for (const auto& a : q.atoms) {
                Tuple t;
                for (const auto& term : a.terms)
                    t.push_back(term.is_var ? assign.at(term.name) : term.name);
                if (!db.at(a.rel).count(t))
                    return;
            }
            Tuple row;
            for (const auto& v : out.vars)
                row.push_back(assign.at(v));
            out.tuples.insert(std::move(row));
            return;
        }
        for (const auto& c : domain) {
            assign[vars[i]] = c;
            rec(i + 1);
        }
        assign.erase(vars[i]);
    };
    rec(0);
    return out;
}

namespace {

using Mask = std::uint32_t;  // node masks, universe <= 32 nodes

bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// GYO on bitmask edges, written independently of the library version.
bool mask_acyclic(std::vector<Mask> edges) {
    while (edges.size() > 1) {
        bool removed = false;
        for (std::size_t i = 0; i < edges.size() && !removed; ++i) {
            Mask shared = 0;
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (j != i)
                    shared |= edges[i] & edges[j];
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (j != i && mask_subset(shared, edges[j])) {
                    edges.erase(edges.begin() + static_cast<long>(i));
                    removed = true;
                    break;
                }
        }
        if (!removed)
            return false;
    }
    return true;
}

}  // namespace

bool brute_tree_projection(const Hypergraph& h1, const Hypergraph& h2) {
    NodeSet universe = h1.nodes();
    if (universe.size() > 32)
        throw Error("oracle_limit", "brute tree-projection oracle handles <= 32 nodes");
    auto mask_of = [&](const NodeSet& s) {
        Mask m = 0;
        for (const auto& x : s) {
            auto it = std::lower_bound(universe.begin(), universe.end(), x);
            if (it != universe.end() && *it == x)
                m |= 1u << (it - universe.begin());
        }
        return m;
    };

    std::vector<Mask> h1_edges;
    for (const auto& e : h1.edges())
        h1_edges.push_back(mask_of(e));

    // candidate bags: non-empty subsets of h2 edges restricted to nodes(h1)
    std::set<Mask> cand_set;
    for (const auto& e : h2.edges()) {
        Mask base = mask_of(e);
        for (Mask sub = base; sub; sub = (sub - 1) & base)
            cand_set.insert(sub);
    }
    std::vector<Mask> cands(cand_set.begin(), cand_set.end());

    for (Mask e : h1_edges) {
        bool coverable = false;
        for (Mask c : cands)
            if (mask_subset(e, c)) {
                coverable = true;
                break;
            }
        if (!coverable)
            return false;
    }

    // a reduced acyclic hypergraph on n nodes has at most n edges
    int max_bags = static_cast<int>(universe.size());
    std::vector<Mask> chosen;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        bool covered = true;
        for (Mask e : h1_edges) {
            bool ok = false;
            for (Mask c : chosen)
                if (mask_subset(e, c)) {
                    ok = true;
                    break;
                }
            if (!ok) {
                covered = false;
                break;
            }
        }
        if (covered && !chosen.empty() && mask_acyclic(chosen))
            return true;
        if (static_cast<int>(chosen.size()) == max_bags)
            return false;
        for (std::size_t i = start; i < cands.size(); ++i) {
            bool antichain = true;
            for (Mask c : chosen)
                if (mask_subset(c, cands[i]) || mask_subset(cands[i], c)) {
                    antichain = false;
                    break;
                }
            if (!antichain)
                continue;
            chosen.push_back(cands[i]);
            if (rec(i + 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    return rec(0);
}

Hypergraph random_hypergraph(Rng& rng, int max_nodes, int max_edges, int max_arity) {
    int n = rng.pick(1, max_nodes);
    int m = rng.pick(1, max_edges);
    std::vector<NodeSet> edges;
    for (int i = 0; i < m; ++i) {
        int arity = rng.pick(1, std::min(max_arity, n));
        NodeSet e;
        while (static_cast<int>(e.size()) < arity) {
            std::string v = "n" + std::to_string(rng.pick(0, n - 1));
            if (!set_contains(e, v))
                e.insert(std::lower_bound(e.begin(), e.end(), v), v);
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(std::move(edges));
}

Query random_query(Rng& rng, int max_atoms, int max_arity, int var_pool, int symbol_pool) {
    int m = rng.pick(1, max_atoms);
    std::vector<Atom> atoms;
    for (int i = 0; i < m; ++i) {
        Atom a;
        a.rel = "r" + std::to_string(rng.pick(0, symbol_pool - 1));
        int arity = rng.pick(1, max_arity);
        // reuse the arity of an earlier atom over the same symbol
        for (const auto& prev : atoms)
            if (prev.rel == a.rel)
                arity = static_cast<int>(prev.terms.size());
        for (int t = 0; t < arity; ++t)
            a.terms.push_back(Term::var("X" + std::to_string(rng.pick(0, var_pool - 1))));
        atoms.push_back(std::move(a));
    }
    return Query(std::move(atoms));
}

Database random_database(Rng& rng, const Query& q, int domain, int max_tuples_per_rel) {
    Database db;
    for (const auto& a : q.atoms)
        db.relations.emplace(a.rel, std::set<Tuple>{});
    for (auto& [rel, tuples] : db.relations) {
        std::size_t arity = 0;
        for (const auto& a : q.atoms)
            if (a.rel == rel)
                arity = a.terms.size();
        int count = rng.pick(0, max_tuples_per_rel);
        for (int i = 0; i < count; ++i) {
            Tuple t;
            for (std::size_t p = 0; p < arity; ++p)
                t.push_back("c" + std::to_string(rng.pick(0, domain - 1)));
            tuples.insert(std::move(t));
        }
    }
    return db;
}

Query random_acyclic_query(Rng& rng, int max_atoms, int max_arity) {
    int m = rng.pick(1, max_atoms);
    std::vector<NodeSet> bags;
    int next_var = 0;
    auto fresh = [&]() { return "X" + std::to_string(next_var++); };
    for (int i = 0; i < m; ++i) {
        NodeSet bag;
        if (i > 0) {
            const NodeSet& parent = bags[rng.pick(0, i - 1)];
            int share = rng.pick(1, static_cast<int>(parent.size()));
            for (int s = 0; s < share; ++s)
                bag.push_back(parent[rng.pick(0, static_cast<int>(parent.size()) - 1)]);
        }
        int arity = rng.pick(1, max_arity);
        while (static_cast<int>(bag.size()) < arity)
            bag.push_back(fresh());
        bags.push_back(canonical_set(bag));
    }
    std::vector<Atom> atoms;
    for (int i = 0; i < m; ++i) {
        Atom a;
        a.rel = "r" + std::to_string(i);
        for (const auto& v : bags[i])
            a.terms.push_back(Term::var(v));
        atoms.push_back(std::move(a));
    }
    Query q(std::move(atoms));
    return q;
}

Database random_legal_database(Rng& rng, const Query& q, const ViewSystem& vs, int domain,
                               int max_tuples_per_rel) {
    Database db = random_database(rng, q, domain, max_tuples_per_rel);
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        const View& w = vs.query_view(static_cast<int>(i));
        AnswerSet answers = evaluate(q, db, w.vars);
        std::set<Tuple> rel = answers.tuples;
        // legal extras: tuples of the atom's own answers
        NamedRelation own = atom_answers(q.atoms[i], db);
        for (const auto& t : own.tuples)
            if (rng.chance(0.3))
                rel.insert(t);
        db.relations[w.name] = std::move(rel);
    }
    for (const auto& w : vs.views) {
        if (w.is_query_view)
            continue;
        std::set<Tuple> rel;
        int count = rng.pick(0, max_tuples_per_rel);
        for (int i = 0; i < count; ++i) {
            Tuple t;
            for (std::size_t p = 0; p < w.vars.size(); ++p)
                t.push_back("c" + std::to_string(rng.pick(0, domain - 1)));
            rel.insert(std::move(t));
        }
        db.relations[w.name] = std::move(rel);
    }
    return db;
}

}  // namespace tpq::oracle
