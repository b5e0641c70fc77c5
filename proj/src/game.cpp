#include "tpq/game.hpp"

#include <functional>
#include <list>
#include <map>
#include <queue>

namespace tpq {

namespace {

void require(bool cond, const char* what) {
    if (!cond)
        throw InternalError(what);
}

// Fixed-width bitset over the joint node universe of a game.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return w_[i >> 6] >> (i & 63) & 1; }

    bool any() const {
        for (auto x : w_)
            if (x)
                return true;
        return false;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i])
                return true;
        return false;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }
    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] &= o.w_[i];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] |= o.w_[i];
        return r;
    }
    Bits minus(const Bits& o) const {
        Bits r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i)
            r.w_[i] &= ~o.w_[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    auto operator<=>(const Bits&) const = default;

    int size() const { return n_; }
    template <typename F>
    void for_each(F f) const {
        for (int i = 0; i < n_; ++i)
            if (test(i))
                f(i);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct GameContext {
    std::vector<std::string> names;  // joint sorted universe
    std::vector<Bits> h1_edges;
    std::vector<Bits> h2_edges;
    std::vector<std::vector<int>> incident;  // node -> h1 edge indices
    Bits active;                             // nodes occurring in some h1 edge

    GameContext(const Hypergraph& h1, const Hypergraph& h2) {
        names = canonical_set(set_union(h1.nodes(), h2.nodes()));
        int n = static_cast<int>(names.size());
        auto id = [&](const std::string& s) {
            return static_cast<int>(std::lower_bound(names.begin(), names.end(), s) -
                                    names.begin());
        };
        auto pack = [&](const NodeSet& e) {
            Bits b(n);
            for (const auto& x : e)
                b.set(id(x));
            return b;
        };
        for (const auto& e : h1.edges())
            h1_edges.push_back(pack(e));
        for (const auto& e : h2.edges())
            h2_edges.push_back(pack(e));
        incident.resize(n);
        active = Bits(n);
        for (std::size_t e = 0; e < h1_edges.size(); ++e) {
            h1_edges[e].for_each([&](int x) { incident[x].push_back(static_cast<int>(e)); });
            active |= h1_edges[e];
        }
    }

    NodeSet unpack(const Bits& b) const {
        NodeSet out;
        b.for_each([&](int i) { out.push_back(names[i]); });
        return out;
    }
    Bits pack(const NodeSet& s) const {
        Bits b(static_cast<int>(names.size()));
        for (const auto& x : s) {
            auto it = std::lower_bound(names.begin(), names.end(), x);
            require(it != names.end() && *it == x, "node outside the game universe");
            b.set(static_cast<int>(it - names.begin()));
        }
        return b;
    }

    Bits frontier(const Bits& c) const {
        Bits f(static_cast<int>(names.size()));
        for (const auto& e : h1_edges)
            if (e.intersects(c))
                f |= e;
        return f;
    }
    Bits border(const Bits& c) const { return frontier(c).minus(c); }

    // Region reachable from `seeds` along h1 edges avoiding `blocked`.
    Bits reach(const Bits& seeds, const Bits& blocked) const {
        Bits r = seeds.minus(blocked);
        std::queue<int> q;
        r.for_each([&](int x) { q.push(x); });
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : incident[x]) {
                Bits open = h1_edges[e].minus(blocked);
                if (!open.test(x))
                    continue;
                open.for_each([&](int y) {
                    if (!r.test(y)) {
                        r.set(y);
                        q.push(y);
                    }
                });
            }
        }
        return r;
    }

    // [cops]-components of the active nodes, ordered by smallest member.
    std::vector<Bits> components(const Bits& cops) const {
        std::vector<Bits> out;
        Bits seen = cops;
        Bits free = active.minus(cops);
        free.for_each([&](int x) {
            if (seen.test(x))
                return;
            Bits seed(static_cast<int>(names.size()));
            seed.set(x);
            Bits comp = reach(seed, cops);
            seen |= comp;
            out.push_back(std::move(comp));
        });
        return out;
    }

    // Escape components of the move (squad_cops = M) from component c with
    // standing cops on the border of c. `from_root` lifts the reachability
    // requirement: initially the Robber may stand anywhere.
    std::vector<Bits> escapes(const Bits& c, const Bits& move_cops, bool from_root) const {
        std::vector<Bits> comps = components(move_cops);
        if (from_root)
            return comps;
        Bits sep = border(c) & move_cops;
        Bits region = reach(c, sep);
        std::vector<Bits> out;
        for (auto& comp : comps)
            if (comp.intersects(region))
                out.push_back(std::move(comp));
        return out;
    }
};

}  // namespace

std::uint64_t config_bound(const Hypergraph& h1, const Hypergraph& h2) {
    std::uint64_t base =
        static_cast<std::uint64_t>(h2.edge_count()) * static_cast<std::uint64_t>(h1.node_count());
    return base * (base + 1) + 1;
}

namespace {

// (squad, component) fully determines the value of a greedy game position:
// future moves recompute their cops from the component's frontier.
using StateKey = std::pair<int, Bits>;

struct Solver {
    const GameContext& g;
    bool monotone_only;
    std::map<StateKey, int> win;  // state -> winning squad
    std::uint64_t generation = 0;
    std::map<StateKey, std::uint64_t> transient_lose;
    std::set<StateKey> on_stack;
    std::set<StateKey> visited;

    explicit Solver(const GameContext& ctx, bool mono) : g(ctx), monotone_only(mono) {}

    std::vector<int> allowed_squads(const StateKey& s) const {
        if (s.first >= 0 && g.h2_edges[s.first].intersects(s.second))
            return {s.first};
        std::vector<int> all(g.h2_edges.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        return all;
    }

    bool move_allowed(const StateKey& s, const Bits& move_cops, bool from_root) const {
        if (!monotone_only || from_root)
            return true;
        return g.border(s.second).minus(move_cops).any() == false;  // empty escape door
    }

    // One depth-first sweep; wins are cached permanently, refutations only
    // while no new win invalidates them.
    bool sweep(const StateKey& s) {
        if (auto it = win.find(s); it != win.end())
            return true;
        if (on_stack.count(s))
            return false;  // revisiting a configuration loops forever
        if (auto it = transient_lose.find(s); it != transient_lose.end()) {
            if (it->second == generation)
                return false;
            transient_lose.erase(it);
        }
        visited.insert(s);
        on_stack.insert(s);
        const bool from_root = s.first < 0;
        int winning_squad = -1;
        for (int squad : allowed_squads(s)) {
            Bits cops = g.h2_edges[squad] & g.frontier(s.second);
            if (!move_allowed(s, cops, from_root))
                continue;
            bool all_win = true;
            for (const Bits& comp : g.escapes(s.second, cops, from_root))
                if (!sweep({squad, comp})) {
                    all_win = false;
                    break;
                }
            if (all_win) {
                winning_squad = squad;
                break;
            }
        }
        on_stack.erase(s);
        if (winning_squad >= 0) {
            win.emplace(s, winning_squad);
            ++generation;
            return true;
        }
        transient_lose.emplace(s, generation);
        return false;
    }

    // Least-fixpoint marking over the materialized configuration graph; the
    // authoritative path for refutations.
    bool marking(const StateKey& root) {
        struct Move {
            int squad;
            std::vector<int> children;
        };
        std::map<StateKey, int> index;
        std::vector<StateKey> keys;
        std::vector<std::vector<Move>> moves;
        std::queue<int> frontier_q;
        auto intern = [&](const StateKey& k) {
            auto [it, fresh] = index.emplace(k, static_cast<int>(keys.size()));
            if (fresh) {
                keys.push_back(k);
                moves.emplace_back();
                frontier_q.push(it->second);
            }
            return it->second;
        };
        intern(root);
        while (!frontier_q.empty()) {
            int v = frontier_q.front();
            frontier_q.pop();
            StateKey s = keys[v];
            visited.insert(s);
            const bool from_root = s.first < 0;
            for (int squad : allowed_squads(s)) {
                Bits cops = g.h2_edges[squad] & g.frontier(s.second);
                if (!move_allowed(s, cops, from_root))
                    continue;
                Move mv{squad, {}};
                for (const Bits& comp : g.escapes(s.second, cops, from_root))
                    mv.children.push_back(intern({squad, comp}));
                moves[v].push_back(std::move(mv));
            }
        }
        int n = static_cast<int>(keys.size());
        std::vector<std::vector<std::pair<int, int>>> watchers(n);  // child -> (state, move)
        std::vector<std::vector<int>> pending(n);
        std::vector<bool> marked(n, false);
        std::queue<int> ready;
        for (int v = 0; v < n; ++v) {
            pending[v].resize(moves[v].size());
            for (std::size_t m = 0; m < moves[v].size(); ++m) {
                pending[v][m] = static_cast<int>(moves[v][m].children.size());
                if (pending[v][m] == 0 && !marked[v]) {
                    marked[v] = true;
                    ready.push(v);
                }
                for (int c : moves[v][m].children)
                    watchers[c].emplace_back(v, static_cast<int>(m));
            }
        }
        while (!ready.empty()) {
            int c = ready.front();
            ready.pop();
            for (auto [v, m] : watchers[c])
                if (--pending[v][m] == 0 && !marked[v]) {
                    marked[v] = true;
                    ready.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (!marked[v])
                continue;
            for (std::size_t m = 0; m < moves[v].size(); ++m) {
                bool all = true;
                for (int c : moves[v][m].children)
                    if (!marked[c]) {
                        all = false;
                        break;
                    }
                if (all) {
                    win.emplace(keys[v], moves[v][m].squad);
                    break;
                }
            }
        }
        return marked[index.at(root)];
    }
};

}  // namespace

std::optional<ComponentGraph> greedy_strategy(const Hypergraph& h1, const Hypergraph& h2,
                                              bool monotone_only, GameStats* stats) {
    GameContext g(h1, h2);

    if (!g.active.any()) {
        // nothing to guard: the game is won before any move
        ComponentGraph cg;
        cg.nodes.push_back({});
        cg.root = 0;
        if (stats)
            stats->distinct_configurations = 1;
        return cg;
    }

    Solver solver(g, monotone_only);
    StateKey root{-1, g.active};
    bool won = solver.sweep(root);
    bool fallback = false;
    if (!won) {
        fallback = true;
        won = solver.marking(root);
    }
    if (stats) {
        stats->distinct_configurations = solver.visited.size();
        stats->used_marking_fallback = fallback;
    }
    if (!won)
        return std::nullopt;

    // materialize the component graph of the winning strategy
    ComponentGraph cg;
    std::map<StateKey, int> node_of;
    std::map<int, int> capture_of;  // squad -> capture node
    std::function<int(const StateKey&)> build = [&](const StateKey& s) -> int {
        if (auto it = node_of.find(s); it != node_of.end())
            return it->second;
        int idx = static_cast<int>(cg.nodes.size());
        cg.nodes.emplace_back();
        node_of.emplace(s, idx);
        int squad = solver.win.at(s);
        Bits cops = g.h2_edges[squad] & g.frontier(s.second);
        {
            ComponentGraph::Node& node = cg.nodes[idx];
            node.squad = s.first;
            node.component = g.unpack(s.second);
            node.choice_squad = squad;
            node.choice_cops = g.unpack(cops);
        }
        std::vector<Bits> escapes = g.escapes(s.second, cops, s.first < 0);
        if (escapes.empty()) {
            auto [it, fresh] = capture_of.emplace(squad, static_cast<int>(cg.nodes.size()));
            if (fresh) {
                ComponentGraph::Node capture;
                capture.squad = squad;
                cg.nodes.push_back(std::move(capture));
            }
            cg.nodes[idx].children.push_back(it->second);
            return idx;
        }
        std::vector<int> children;
        for (const Bits& comp : escapes)
            children.push_back(build({squad, comp}));
        cg.nodes[idx].children = std::move(children);
        return idx;
    };
    cg.root = build(root);
    return cg;
}

namespace {

struct CgCheck {
    GameContext g;
    std::vector<Bits> comp_bits;
    std::vector<int> topo;  // children before parents

    CgCheck(const ComponentGraph& cg, const Hypergraph& h1, const Hypergraph& h2)
        : g(h1, h2) {
        const auto& nodes = cg.nodes;
        int n = static_cast<int>(nodes.size());
        require(n > 0 && cg.root >= 0 && cg.root < n, "component graph has no root");

        if (!g.active.any()) {
            if (n == 1 && nodes[0].component.empty() && nodes[0].children.empty())
                return;
            throw NotWinning("component graph does not match the trivially-won game");
        }

        comp_bits.resize(n, Bits(static_cast<int>(g.names.size())));
        std::vector<int> indeg(n, 0);
        for (int v = 0; v < n; ++v) {
            comp_bits[v] = g.pack(nodes[v].component);
            for (int c : nodes[v].children) {
                require(c >= 0 && c < n, "component graph arc out of range");
                ++indeg[c];
            }
        }
        if (nodes[cg.root].squad != -1 || comp_bits[cg.root] != g.active ||
            indeg[cg.root] != 0)
            throw NotWinning("root must be the initial configuration with no incoming arcs");
        for (int v = 0; v < n; ++v)
            if (v != cg.root && indeg[v] == 0)
                throw NotWinning("non-root configuration without incoming arcs");

        // Kahn order on reversed arcs, smallest index first for determinism
        std::vector<int> outdeg(n, 0);
        std::vector<std::vector<int>> parents(n);
        for (int v = 0; v < n; ++v) {
            outdeg[v] = static_cast<int>(nodes[v].children.size());
            for (int c : nodes[v].children)
                parents[c].push_back(v);
        }
        std::priority_queue<int, std::vector<int>, std::greater<>> q;
        for (int v = 0; v < n; ++v)
            if (outdeg[v] == 0)
                q.push(v);
        while (!q.empty()) {
            int v = q.top();
            q.pop();
            topo.push_back(v);
            for (int p : parents[v])
                if (--outdeg[p] == 0)
                    q.push(p);
        }
        if (static_cast<int>(topo.size()) != n)
            throw NotWinning("strategy graph contains a cycle: the Robber escapes forever");

        for (int v = 0; v < n; ++v) {
            const auto& node = nodes[v];
            if (node.component.empty()) {
                if (!node.children.empty() || node.choice_squad != -1)
                    throw NotWinning("capture node with further moves");
                continue;
            }
            int squad = node.choice_squad;
            if (squad < 0 || squad >= static_cast<int>(g.h2_edges.size()))
                throw NotWinning("configuration without a legal Captain choice");
            Bits cops = g.pack(node.choice_cops);
            if (!cops.subset_of(g.h2_edges[squad] & g.frontier(comp_bits[v])))
                throw NotWinning("cops outside the squad's reachable positions");
            std::vector<Bits> esc = g.escapes(comp_bits[v], cops, v == cg.root);
            if (esc.empty()) {
                if (node.children.size() != 1)
                    throw NotWinning("capture move must lead to one capture node");
                const auto& child = nodes[node.children[0]];
                if (!child.component.empty() || child.squad != squad)
                    throw NotWinning("capture move must lead to a capture node of its squad");
            } else {
                if (esc.size() != node.children.size())
                    throw NotWinning("children do not match the escape components");
                for (std::size_t i = 0; i < esc.size(); ++i) {
                    const auto& child = nodes[node.children[i]];
                    if (child.squad != squad || g.pack(child.component) != esc[i])
                        throw NotWinning("children do not match the escape components");
                }
            }
        }
    }
};

}  // namespace

ComponentGraph to_nice(const ComponentGraph& cg, const Hypergraph& h1, const Hypergraph& h2) {
    ComponentGraph out = cg;
    // canonical child order: escapes sorted by smallest member
    for (auto& node : out.nodes) {
        if (node.component.empty() || node.children.size() <= 1)
            continue;
        std::stable_sort(node.children.begin(), node.children.end(), [&](int a, int b) {
            return out.nodes[a].component < out.nodes[b].component;
        });
    }
    CgCheck check(out, h1, h2);  // throws NotWinning on any defect
    return out;
}

bool is_monotone(const ComponentGraph& cg, const Hypergraph& h1) {
    for (const auto& node : cg.nodes) {
        if (node.component.empty())
            continue;
        for (int c : node.children)
            if (!is_subset(cg.nodes[c].component, node.component) &&
                !cg.nodes[c].component.empty())
                return false;
    }
    return true;
}

ComponentGraph monotonize(const ComponentGraph& input, const Hypergraph& h1,
                          const Hypergraph& h2) {
    ComponentGraph cg = to_nice(input, h1, h2);
    GameContext g(h1, h2);
    if (!g.active.any())
        return cg;

    struct WorkNode {
        int squad = -1;
        Bits component;
        int choice_squad = -1;
        Bits choice_cops;
        std::vector<int> children;
        std::vector<int> parents;
        bool alive = true;
        bool capture = false;
    };
    std::vector<WorkNode> nodes;
    for (const auto& n : cg.nodes) {
        WorkNode w;
        w.squad = n.squad;
        w.component = g.pack(n.component);
        w.capture = n.component.empty();
        w.choice_squad = n.choice_squad;
        w.choice_cops = g.pack(n.choice_cops);
        w.children = n.children;
        nodes.push_back(std::move(w));
    }
    for (std::size_t v = 0; v < nodes.size(); ++v)
        for (int c : nodes[v].children)
            nodes[c].parents.push_back(static_cast<int>(v));

    // leaves-first sequence
    CgCheck pre(cg, h1, h2);
    std::list<int> seq(pre.topo.begin(), pre.topo.end());

    auto drop_parent = [&](int child, int parent) {
        auto& ps = nodes[child].parents;
        ps.erase(std::find(ps.begin(), ps.end(), parent));
    };
    auto cascade_remove = [&](int start, int root) {
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v == root || !nodes[v].alive || !nodes[v].parents.empty())
                continue;
            nodes[v].alive = false;
            for (int c : nodes[v].children) {
                drop_parent(c, v);
                if (nodes[c].parents.empty())
                    stack.push_back(c);
            }
            nodes[v].children.clear();
        }
    };

    std::uint64_t max_in = 1;
    for (const auto& n : nodes)
        max_in = std::max<std::uint64_t>(max_in, n.parents.size());
    std::uint64_t budget = static_cast<std::uint64_t>(nodes.size()) * max_in + 16;

    const int root = cg.root;
    auto it = seq.begin();
    while (it != seq.end()) {
        int j = *it;
        if (!nodes[j].alive || nodes[j].capture || j == root) {
            ++it;
            continue;
        }
        int bad_child = -1;
        for (int c : nodes[j].children)
            if (!nodes[c].capture && !nodes[c].component.subset_of(nodes[j].component)) {
                bad_child = c;
                break;
            }
        if (bad_child < 0) {
            ++it;
            continue;
        }
        require(budget-- > 0, "monotonization exceeded its iteration bound");

        const Bits& move_cops = nodes[j].choice_cops;  // M_s, the non-monotone move
        Bits door = g.border(nodes[j].component).minus(move_cops);
        require(door.any(), "non-monotone move without an escape door");

        int p = nodes[j].parents.front();
        Bits reduced = nodes[p].choice_cops.minus(door);  // M_j'
        Bits seed(static_cast<int>(g.names.size()));
        // the enlarged component properly containing C_j
        nodes[j].component.for_each([&](int x) { seed.set(x); });
        Bits enlarged = g.reach(seed, reduced);
        require(nodes[j].component.subset_of(enlarged) && enlarged != nodes[j].component,
                "escape-door removal must enlarge the component");

        // fresh node for the enlarged component, inheriting the old move
        int fresh = static_cast<int>(nodes.size());
        {
            WorkNode w;
            w.squad = nodes[j].squad;
            w.component = enlarged;
            w.choice_squad = nodes[j].choice_squad;
            w.choice_cops = move_cops;
            nodes.push_back(std::move(w));
        }
        std::vector<Bits> fresh_esc = g.escapes(enlarged, move_cops, false);
        require(!fresh_esc.empty(), "the enlarged component keeps the old escapes");
        for (const Bits& comp : fresh_esc) {
            int found = -1;
            for (int c : nodes[j].children)
                if (!nodes[c].capture && nodes[c].component == comp) {
                    found = c;
                    break;
                }
            require(found >= 0, "escapes of the enlarged component must be escapes of the old");
            nodes[fresh].children.push_back(found);
            nodes[found].parents.push_back(fresh);
        }

        // repoint the parent to the reduced move
        std::vector<Bits> new_esc = g.escapes(nodes[p].component, reduced, p == root);
        std::vector<int> new_children;
        for (const Bits& comp : new_esc) {
            if (comp == enlarged) {
                new_children.push_back(fresh);
                continue;
            }
            int found = -1;
            for (int c : nodes[p].children)
                if (!nodes[c].capture && nodes[c].component == comp) {
                    found = c;
                    break;
                }
            require(found >= 0, "new escape of the parent is neither old nor the fresh node");
            new_children.push_back(found);
        }
        require(!new_esc.empty(), "reduced move cannot capture: the fresh component escapes");
        std::vector<int> orphans;
        for (int c : nodes[p].children) {
            drop_parent(c, p);
            if (nodes[c].parents.empty())
                orphans.push_back(c);
        }
        nodes[p].choice_cops = reduced;
        nodes[p].children = new_children;
        for (int c : new_children)
            nodes[c].parents.push_back(p);
        for (int c : orphans)
            if (nodes[c].parents.empty())
                cascade_remove(c, root);

        seq.insert(it, fresh);
        if (!nodes[j].alive) {
            it = seq.erase(it);
        }
        // else: reconsider j for its remaining parents
    }

    // compact and re-number
    ComponentGraph out;
    std::map<int, int> remap;
    std::function<int(int)> emit = [&](int v) -> int {
        if (auto found = remap.find(v); found != remap.end())
            return found->second;
        int idx = static_cast<int>(out.nodes.size());
        out.nodes.emplace_back();
        remap.emplace(v, idx);
        ComponentGraph::Node node;
        node.squad = nodes[v].squad;
        node.component = g.unpack(nodes[v].component);
        if (!nodes[v].capture) {
            node.choice_squad = nodes[v].choice_squad;
            node.choice_cops = g.unpack(nodes[v].choice_cops);
        }
        out.nodes[idx] = std::move(node);
        std::vector<int> children;
        for (int c : nodes[v].children)
            children.push_back(emit(c));
        out.nodes[idx].children = std::move(children);
        return idx;
    };
    out.root = emit(root);

    out = to_nice(out, h1, h2);
    require(is_monotone(out, h1), "monotonization left a non-monotone move");
    return out;
}

TreeProjection extract_tree_projection(const ComponentGraph& input, const Hypergraph& h1,
                                       const Hypergraph& h2) {
    ComponentGraph cg = to_nice(input, h1, h2);
    if (!is_monotone(cg, h1))
        throw NotMonotone("tree projections are read off monotone strategies only");

    std::vector<NodeSet> edges;
    for (const auto& node : cg.nodes)
        if (!node.component.empty())
            edges.push_back(node.choice_cops);

    TreeProjection tp;
    tp.hypergraph = Hypergraph(h1.nodes(), std::move(edges));
    for (const auto& e : tp.hypergraph.edges()) {
        int cover = -1;
        for (std::size_t i = 0; i < h2.edges().size(); ++i)
            if (is_subset(e, h2.edges()[i])) {
                cover = static_cast<int>(i);
                break;
            }
        if (cover < 0)
            throw SandwichViolation("extracted edge not contained in any h2 edge");
        tp.h2_cover.push_back(cover);
    }
    for (const auto& e : h1.edges()) {
        int cover = -1;
        for (std::size_t i = 0; i < tp.hypergraph.edges().size(); ++i)
            if (is_subset(e, tp.hypergraph.edges()[i])) {
                cover = static_cast<int>(i);
                break;
            }
        if (cover < 0)
            throw SandwichViolation("h1 edge not covered by the extracted hypergraph");
        tp.h1_cover_by.push_back(cover);
    }
    tp.jointree = join_tree(tp.hypergraph);  // throws NotAcyclic on an internal bug
    return tp;
}

StrategyGraph expand_strategy(const ComponentGraph& input, const Hypergraph& h1,
                              const Hypergraph& h2) {
    ComponentGraph cg = to_nice(input, h1, h2);
    GameContext g(h1, h2);

    StrategyGraph sg;
    std::map<Configuration, int> index;
    auto intern = [&](Configuration c) {
        auto [it, fresh] = index.emplace(std::move(c), static_cast<int>(sg.nodes.size()));
        if (fresh) {
            sg.nodes.push_back(it->first);
            sg.choice.emplace_back(-1, NodeSet{});
        }
        return it->second;
    };
    auto arc = [&](int a, int b) { sg.arcs.emplace_back(a, b); };

    // expand each component-graph node into its as-reached configuration plus
    // the cop-removal step of the nice strategy
    std::map<std::pair<int, NodeSet>, int> expanded;
    std::set<int> acted;
    std::function<int(int, const NodeSet&)> visit = [&](int v, const NodeSet& cops_in) -> int {
        auto memo = expanded.find({v, cops_in});
        if (memo != expanded.end())
            return memo->second;
        const auto& node = cg.nodes[v];
        int reached = intern({node.squad, cops_in, node.component});
        expanded.emplace(std::make_pair(v, cops_in), reached);
        if (node.component.empty())
            return reached;
        NodeSet border = g.unpack(g.border(g.pack(node.component)));
        int acting = reached;
        if (border != cops_in && v != cg.root) {
            sg.choice[reached] = {node.squad, border};
            acting = intern({node.squad, border, node.component});
            arc(reached, acting);
        }
        if (acted.insert(acting).second) {
            sg.choice[acting] = {node.choice_squad, node.choice_cops};
            for (int c : node.children)
                arc(acting, visit(c, node.choice_cops));
        }
        return reached;
    };
    sg.root = visit(cg.root, {});
    return sg;
}

}  // namespace tpq
