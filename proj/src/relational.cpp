#include "tpq/relational.hpp"

#include <algorithm>
#include <functional>

namespace tpq {

NodeSet Atom::vars() const {
    NodeSet out;
    for (const auto& t : terms)
        if (t.is_var)
            out.push_back(t.name);
    return canonical_set(std::move(out));
}

Query::Query(std::vector<Atom> a) : atoms(std::move(a)) {
    if (atoms.empty())
        throw Error("empty_query", "a conjunctive query needs at least one atom");
    std::map<std::string, std::size_t> arity;
    for (const auto& atom : atoms) {
        auto [it, fresh] = arity.emplace(atom.rel, atom.terms.size());
        if (!fresh && it->second != atom.terms.size())
            throw Error("arity_mismatch",
                        "relation '" + atom.rel + "' used with inconsistent arities");
    }
    if (vars().empty())
        throw Error("no_variables", "query has no variables");
}

NodeSet Query::vars() const {
    NodeSet out;
    for (const auto& a : atoms)
        for (const auto& t : a.terms)
            if (t.is_var)
                out.push_back(t.name);
    return canonical_set(std::move(out));
}

bool Query::is_simple() const {
    std::set<std::string> seen;
    for (const auto& a : atoms)
        if (!seen.insert(a.rel).second)
            return false;
    return true;
}

const std::set<Tuple>& Database::at(const std::string& rel) const {
    auto it = relations.find(rel);
    if (it == relations.end())
        throw MissingRelation("no relation for symbol '" + rel + "'");
    return it->second;
}

void Database::validate() const {
    for (const auto& [rel, tuples] : relations) {
        std::size_t arity = tuples.empty() ? 0 : tuples.begin()->size();
        for (const auto& t : tuples)
            if (t.size() != arity)
                throw Error("arity_mismatch", "relation '" + rel + "' mixes tuple arities");
    }
}

namespace {

// Tuples of rel compatible with the atom's constants and repeated variables.
std::vector<Tuple> atom_candidates(const Atom& a, const std::set<Tuple>& rel) {
    std::vector<Tuple> out;
    for (const auto& t : rel) {
        if (t.size() != a.terms.size())
            continue;
        bool ok = true;
        std::map<std::string, std::string> bind;
        for (std::size_t i = 0; i < t.size() && ok; ++i) {
            const Term& term = a.terms[i];
            if (!term.is_var) {
                ok = term.name == t[i];
            } else {
                auto [it, fresh] = bind.emplace(term.name, t[i]);
                if (!fresh)
                    ok = it->second == t[i];
            }
        }
        if (ok)
            out.push_back(t);
    }
    return out;
}

// Deterministic greedy join order: most-connected atom next, candidate count
// as tiebreak.
std::vector<int> atom_order(const Query& q, const std::vector<std::vector<Tuple>>& cands) {
    int m = static_cast<int>(q.atoms.size());
    std::vector<NodeSet> avars(m);
    for (int i = 0; i < m; ++i)
        avars[i] = q.atoms[i].vars();
    std::vector<bool> used(m, false);
    std::vector<int> order;
    NodeSet bound;
    for (int step = 0; step < m; ++step) {
        int best = -1;
        std::size_t best_shared = 0, best_cands = 0;
        for (int i = 0; i < m; ++i) {
            if (used[i])
                continue;
            std::size_t shared = set_intersect(avars[i], bound).size();
            if (best < 0 || shared > best_shared ||
                (shared == best_shared && cands[i].size() < best_cands)) {
                best = i;
                best_shared = shared;
                best_cands = cands[i].size();
            }
        }
        used[best] = true;
        order.push_back(best);
        bound = set_union(bound, avars[best]);
    }
    return order;
}

}  // namespace

NamedRelation atom_answers(const Atom& a, const Database& db) {
    NamedRelation out;
    out.vars = a.vars();
    for (const auto& t : atom_candidates(a, db.at(a.rel))) {
        std::map<std::string, std::string> bind;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (a.terms[i].is_var)
                bind[a.terms[i].name] = t[i];
        Tuple row;
        for (const auto& v : out.vars)
            row.push_back(bind.at(v));
        out.tuples.insert(std::move(row));
    }
    return out;
}

AnswerSet evaluate(const Query& q, const Database& db, const NodeSet& output) {
    NodeSet out_vars = canonical_set(output);
    if (!is_subset(out_vars, q.vars()))
        throw VarsOutOfRange("output variables must occur in the query");

    int m = static_cast<int>(q.atoms.size());
    std::vector<std::vector<Tuple>> cands(m);
    for (int i = 0; i < m; ++i)
        cands[i] = atom_candidates(q.atoms[i], db.at(q.atoms[i].rel));

    AnswerSet result;
    result.vars = out_vars;
    const bool boolean_mode = out_vars.empty();

    std::vector<int> order = atom_order(q, cands);
    std::map<std::string, std::string> assign;

    std::function<bool(int)> dfs = [&](int depth) -> bool {
        if (depth == m) {
            Tuple row;
            for (const auto& v : out_vars)
                row.push_back(assign.at(v));
            result.tuples.insert(std::move(row));
            return boolean_mode;  // stop at the first witness
        }
        const Atom& a = q.atoms[order[depth]];
        for (const auto& t : cands[order[depth]]) {
            std::vector<std::string> bound_here;
            bool ok = true;
            for (std::size_t i = 0; i < t.size() && ok; ++i) {
                if (!a.terms[i].is_var)
                    continue;
                auto it = assign.find(a.terms[i].name);
                if (it == assign.end()) {
                    assign.emplace(a.terms[i].name, t[i]);
                    bound_here.push_back(a.terms[i].name);
                } else {
                    ok = it->second == t[i];
                }
            }
            if (ok && dfs(depth + 1))
                return true;
            for (const auto& v : bound_here)
                assign.erase(v);
        }
        return false;
    };
    dfs(0);
    return result;
}

namespace {

struct StructureIndex {
    std::map<std::string, std::vector<std::vector<Term>>> by_rel;

    explicit StructureIndex(const Query& q) {
        for (const auto& a : q.atoms)
            by_rel[a.rel].push_back(a.terms);
    }
};

std::optional<std::map<std::string, Term>> hom_search(const Query& q1, const Query& q2,
                                                      std::map<std::string, Term> preset,
                                                      bool injective) {
    StructureIndex target(q2);

    // constants must be present in the target with identity mapping
    std::set<Term> q2_terms;
    for (const auto& a : q2.atoms)
        for (const auto& t : a.terms)
            q2_terms.insert(t);
    for (const auto& a : q1.atoms)
        for (const auto& t : a.terms)
            if (!t.is_var && !q2_terms.count(t))
                return std::nullopt;

    std::set<Term> used;  // images taken, for injective searches
    if (injective) {
        for (const auto& a : q1.atoms)
            for (const auto& t : a.terms)
                if (!t.is_var)
                    used.insert(t);
        for (const auto& [v, img] : preset)
            used.insert(img);
    }

    std::map<std::string, Term> assign = std::move(preset);

    int m = static_cast<int>(q1.atoms.size());
    std::vector<std::vector<Tuple>> dummy(m);
    std::vector<int> order = atom_order(q1, dummy);

    std::function<bool(int)> dfs = [&](int depth) -> bool {
        if (depth == m)
            return true;
        const Atom& a = q1.atoms[order[depth]];
        auto it = target.by_rel.find(a.rel);
        if (it == target.by_rel.end())
            return false;
        for (const auto& image : it->second) {
            if (image.size() != a.terms.size())
                continue;
            std::vector<std::string> bound_here;
            std::vector<Term> used_here;
            bool ok = true;
            for (std::size_t i = 0; i < image.size() && ok; ++i) {
                const Term& t = a.terms[i];
                if (!t.is_var) {
                    ok = image[i] == t;
                    continue;
                }
                auto found = assign.find(t.name);
                if (found != assign.end()) {
                    ok = found->second == image[i];
                } else if (injective && used.count(image[i])) {
                    ok = false;
                } else {
                    assign.emplace(t.name, image[i]);
                    bound_here.push_back(t.name);
                    if (injective) {
                        used.insert(image[i]);
                        used_here.push_back(image[i]);
                    }
                }
            }
            if (ok && dfs(depth + 1))
                return true;
            for (const auto& v : bound_here)
                assign.erase(v);
            for (const auto& t : used_here)
                used.erase(t);
        }
        return false;
    };

    if (!dfs(0))
        return std::nullopt;
    return assign;
}

}  // namespace

std::optional<std::map<std::string, Term>> homomorphism(const Query& q1, const Query& q2) {
    return hom_search(q1, q2, {}, false);
}

Query subquery(const Query& q, const std::vector<int>& atom_subset) {
    std::vector<Atom> atoms;
    for (int i : atom_subset)
        atoms.push_back(q.atoms.at(i));
    return Query(std::move(atoms));
}

std::optional<std::map<std::string, Term>> retraction(const Query& q,
                                                      const std::vector<int>& atom_subset) {
    Query sub = subquery(q, atom_subset);
    std::map<std::string, Term> preset;
    for (const auto& a : sub.atoms)
        for (const auto& t : a.terms)
            if (t.is_var)
                preset.emplace(t.name, t);
    return hom_search(q, sub, std::move(preset), false);
}

std::vector<std::vector<int>> core_atom_sets(const Query& q, const CoreOptions& opts) {
    int m = static_cast<int>(q.atoms.size());
    if (m > opts.max_atoms)
        throw CoreCapExceeded("query has " + std::to_string(m) +
                              " atoms, above the core-enumeration cap of " +
                              std::to_string(opts.max_atoms));

    std::set<std::string> symbols;
    for (const auto& a : q.atoms)
        symbols.insert(a.rel);

    std::vector<std::vector<int>> found;
    std::vector<int> pick;

    std::function<void(int, int)> choose = [&](int start, int remaining) {
        if (remaining == 0) {
            std::set<std::string> covered;
            for (int i : pick)
                covered.insert(q.atoms[i].rel);
            if (covered.size() != symbols.size())
                return;  // the image of an r-atom is an r-atom
            if (homomorphism(q, subquery(q, pick)).has_value())
                found.push_back(pick);
            return;
        }
        for (int i = start; i <= m - remaining; ++i) {
            pick.push_back(i);
            choose(i + 1, remaining - 1);
            pick.pop_back();
        }
    };

    for (int size = 1; size <= m && found.empty(); ++size)
        choose(0, size);

    for (std::size_t i = 1; i < found.size(); ++i)
        if (!isomorphic(subquery(q, found[0]), subquery(q, found[i])))
            throw InternalError("core enumeration produced non-isomorphic cores");
    return found;
}

std::vector<Query> cores(const Query& q, const CoreOptions& opts) {
    std::vector<Query> out;
    for (const auto& s : core_atom_sets(q, opts))
        out.push_back(subquery(q, s));
    return out;
}

bool isomorphic(const Query& a, const Query& b) {
    if (a.atoms.size() != b.atoms.size())
        return false;
    return hom_search(a, b, {}, true).has_value() && hom_search(b, a, {}, true).has_value();
}

NamedRelation semijoin(const NamedRelation& left, const NamedRelation& right) {
    NodeSet shared = set_intersect(left.vars, right.vars);
    NamedRelation out;
    out.vars = left.vars;
    if (shared.empty()) {
        if (!right.tuples.empty())
            out.tuples = left.tuples;
        return out;
    }
    std::vector<std::size_t> lpos, rpos;
    for (const auto& v : shared) {
        lpos.push_back(std::lower_bound(left.vars.begin(), left.vars.end(), v) -
                       left.vars.begin());
        rpos.push_back(std::lower_bound(right.vars.begin(), right.vars.end(), v) -
                       right.vars.begin());
    }
    std::set<Tuple> keys;
    for (const auto& t : right.tuples) {
        Tuple key;
        for (auto p : rpos)
            key.push_back(t[p]);
        keys.insert(std::move(key));
    }
    for (const auto& t : left.tuples) {
        Tuple key;
        for (auto p : lpos)
            key.push_back(t[p]);
        if (keys.count(key))
            out.tuples.insert(t);
    }
    return out;
}

NamedRelation project(const NamedRelation& r, const NodeSet& onto) {
    NodeSet target = canonical_set(onto);
    if (!is_subset(target, r.vars))
        throw VarsOutOfRange("projection target outside the relation schema");
    std::vector<std::size_t> pos;
    for (const auto& v : target)
        pos.push_back(std::lower_bound(r.vars.begin(), r.vars.end(), v) - r.vars.begin());
    NamedRelation out;
    out.vars = target;
    for (const auto& t : r.tuples) {
        Tuple row;
        for (auto p : pos)
            row.push_back(t[p]);
        out.tuples.insert(std::move(row));
    }
    return out;
}

Hypergraph query_hypergraph(const Query& q) {
    std::vector<NodeSet> edges;
    for (const auto& a : q.atoms) {
        NodeSet vs = a.vars();
        if (vs.empty())
            throw DegenerateAtom("atom over relation '" + a.rel + "' has no variables");
        edges.push_back(std::move(vs));
    }
    return Hypergraph(q.vars(), std::move(edges));
}

std::pair<Query, Database> induced_subproblem(const Query& q, const Database& db,
                                              const NodeSet& s) {
    NodeSet scope = canonical_set(s);
    if (!is_subset(scope, q.vars()))
        throw VarsOutOfRange("induced-subproblem scope outside the query variables");
    std::vector<Atom> atoms;
    Database out_db;
    int counter = 0;
    for (const auto& a : q.atoms) {
        NodeSet keep = set_intersect(a.vars(), scope);
        if (keep.empty())
            continue;
        std::string fresh = "__s::r" + std::to_string(counter++);
        Atom fresh_atom{fresh, {}};
        for (const auto& v : keep)
            fresh_atom.terms.push_back(Term::var(v));
        atoms.push_back(std::move(fresh_atom));
        out_db.relations[fresh] = project(atom_answers(a, db), keep).tuples;
    }
    if (atoms.empty())
        throw VarsOutOfRange("scope does not meet any query atom");
    return {Query(std::move(atoms)), std::move(out_db)};
}

}  // namespace tpq
