#include "tpq/views.hpp"

#include <functional>

namespace tpq {

namespace {

std::string fresh_name(int n) { return "__v::w" + std::to_string(n); }

}  // namespace

ViewSystem make_view_system(const Query& q, const std::vector<NodeSet>& extra_var_sets) {
    ViewSystem vs;
    vs.query_vars = q.vars();
    int n = 0;
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        View w;
        w.name = fresh_name(n++);
        w.vars = q.atoms[i].vars();
        w.is_query_view = true;
        w.for_atom = static_cast<int>(i);
        vs.query_view_of.push_back(static_cast<int>(vs.views.size()));
        vs.views.push_back(std::move(w));
    }
    for (const auto& raw : extra_var_sets) {
        NodeSet s = canonical_set(raw);
        if (s.empty())
            throw VarsOutOfRange("extra view variable set is empty");
        if (!is_subset(s, vs.query_vars))
            throw VarsOutOfRange("extra view uses variables outside the query");
        View w;
        w.name = fresh_name(n++);
        w.vars = std::move(s);
        vs.views.push_back(std::move(w));
    }
    return vs;
}

ViewSystem bind_view_system(const Query& q, std::vector<View> views) {
    ViewSystem vs;
    vs.query_vars = q.vars();
    std::set<std::string> names;
    for (auto& w : views) {
        w.vars = canonical_set(w.vars);
        if (w.vars.empty())
            throw VarsOutOfRange("view '" + w.name + "' has no variables");
        if (!names.insert(w.name).second)
            throw Error("duplicate_view", "view name '" + w.name + "' appears twice");
        if (!is_subset(w.vars, vs.query_vars))
            throw VarsOutOfRange("view '" + w.name + "' uses variables outside the query");
        if (w.is_query_view != (w.for_atom >= 0))
            throw Error("bad_view", "view '" + w.name +
                                        "' must pair isQueryView with a forAtom index");
    }
    vs.query_view_of.assign(q.atoms.size(), -1);
    for (std::size_t i = 0; i < views.size(); ++i) {
        const View& w = views[i];
        if (!w.is_query_view)
            continue;
        if (w.for_atom >= static_cast<int>(q.atoms.size()))
            throw Error("bad_view", "view '" + w.name + "' names a non-existent atom");
        if (w.vars != q.atoms[w.for_atom].vars())
            throw Error("bad_view", "query view '" + w.name +
                                        "' does not match its atom's variables");
        if (vs.query_view_of[w.for_atom] != -1)
            throw Error("bad_view", "atom " + std::to_string(w.for_atom) +
                                        " has two query views");
        vs.query_view_of[w.for_atom] = static_cast<int>(i);
    }
    // atoms sharing a variable set may share a query view (as the cluster
    // methods produce); fall back to any query view with matching variables
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        if (vs.query_view_of[i] != -1)
            continue;
        for (std::size_t j = 0; j < views.size(); ++j)
            if (views[j].is_query_view && views[j].vars == q.atoms[i].vars()) {
                vs.query_view_of[i] = static_cast<int>(j);
                break;
            }
        if (vs.query_view_of[i] == -1)
            throw Error("bad_view",
                        "no query view for atom " + std::to_string(i) + " of the query");
    }
    vs.views = std::move(views);
    return vs;
}

Hypergraph view_hypergraph(const ViewSystem& vs) {
    std::vector<NodeSet> edges;
    for (const auto& w : vs.views)
        edges.push_back(w.vars);
    return Hypergraph(vs.query_vars, std::move(edges));
}

NamedRelation view_relation(const View& w, const Database& db) {
    NamedRelation r;
    r.vars = w.vars;
    for (const auto& t : db.at(w.name)) {
        if (t.size() != w.vars.size())
            throw Error("arity_mismatch",
                        "relation for view '" + w.name + "' does not match its schema");
        r.tuples.insert(t);
    }
    return r;
}

namespace {

std::uint64_t count_atom_subsets(std::size_t m, int k, std::uint64_t cap) {
    std::uint64_t total = 0;
    std::uint64_t row = 1;  // C(m, j)
    for (int j = 1; j <= k && j <= static_cast<int>(m); ++j) {
        row = row * (m - j + 1) / j;
        total += row;
        if (row > cap || total > cap)
            return cap + 1;
    }
    return total;
}

std::pair<ViewSystem, Database> generate_hw(const Query& q, const Database& db, int k,
                                            const GenerateOptions& opts) {
    if (count_atom_subsets(q.atoms.size(), k, opts.subset_cap) > opts.subset_cap)
        throw ExpansionTooLarge("hw view generation would exceed the subset cap");

    ViewSystem vs = make_view_system(q, {});
    Database out = db;
    for (std::size_t i = 0; i < q.atoms.size(); ++i)
        out.relations[vs.views[i].name] = atom_answers(q.atoms[i], db).tuples;

    int name_counter = static_cast<int>(vs.views.size());
    std::vector<int> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() >= 2) {
            Query sub = subquery(q, pick);
            View w;
            w.name = fresh_name(name_counter++);
            w.vars = sub.vars();
            out.relations[w.name] = evaluate(sub, db, sub.vars()).tuples;
            vs.views.push_back(std::move(w));
        }
        if (static_cast<int>(pick.size()) == k)
            return;
        for (std::size_t i = start; i < q.atoms.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return {std::move(vs), std::move(out)};
}

std::pair<ViewSystem, Database> generate_tw(const Query& q, const Database& db, int k,
                                            const GenerateOptions& opts) {
    for (const auto& a : q.atoms)
        if (static_cast<int>(a.vars().size()) > k + 1)
            throw MethodInapplicable("atom over '" + a.rel + "' has more than k+1 variables; "
                                     "the treewidth method defines no view system for it");

    NodeSet vars = q.vars();
    // reuse the cluster guard so tw and clusterExpand fail in step
    Hypergraph clusters = cluster_expand(query_hypergraph(q), k, opts.expand);

    // per-variable domains consistent with every atom individually
    std::map<std::string, std::set<std::string>> domain;
    if (opts.liberal_tw) {
        for (const auto& v : vars) {
            bool first = true;
            std::set<std::string> dom;
            for (const auto& a : q.atoms) {
                if (!set_contains(a.vars(), v))
                    continue;
                NamedRelation proj = project(atom_answers(a, db), {v});
                std::set<std::string> vals;
                for (const auto& t : proj.tuples)
                    vals.insert(t[0]);
                if (first) {
                    dom = std::move(vals);
                    first = false;
                } else {
                    std::set<std::string> merged;
                    for (const auto& x : dom)
                        if (vals.count(x))
                            merged.insert(x);
                    dom = std::move(merged);
                }
            }
            domain[v] = std::move(dom);
        }
    }

    ViewSystem vs;
    vs.query_vars = vars;
    Database out = db;
    std::map<NodeSet, int> view_of_subset;
    int name_counter = 0;
    for (const auto& s : clusters.edges()) {
        View w;
        w.name = fresh_name(name_counter++);
        w.vars = s;
        view_of_subset[s] = static_cast<int>(vs.views.size());

        if (opts.liberal_tw) {
            std::set<Tuple> rows{{Tuple{}}};
            for (const auto& v : s) {
                std::set<Tuple> next;
                for (const auto& row : rows)
                    for (const auto& val : domain[v]) {
                        Tuple r = row;
                        r.push_back(val);
                        next.insert(std::move(r));
                    }
                rows = std::move(next);
            }
            out.relations[w.name] = std::move(rows);
        } else {
            auto [sub_q, sub_db] = induced_subproblem(q, db, s);
            out.relations[w.name] = evaluate(sub_q, sub_db, s).tuples;
        }
        vs.views.push_back(std::move(w));
    }
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        auto it = view_of_subset.find(q.atoms[i].vars());
        if (it == view_of_subset.end())
            throw InternalError("missing cluster view for a query atom");
        vs.query_view_of.push_back(it->second);
        vs.views[it->second].is_query_view = true;
        if (vs.views[it->second].for_atom < 0)
            vs.views[it->second].for_atom = static_cast<int>(i);
    }
    return {std::move(vs), std::move(out)};
}

}  // namespace

std::pair<ViewSystem, Database> generate(const Query& q, const Database& db, MethodTag tag,
                                         const GenerateOptions& opts) {
    if (tag.k < 1)
        throw Error("bad_argument", "decomposition methods require k >= 1");
    switch (tag.method) {
        case Method::acyc:
            return generate_hw(q, db, 1, opts);
        case Method::hw:
            return generate_hw(q, db, tag.k, opts);
        case Method::tw:
            return generate_tw(q, db, tag.k, opts);
    }
    throw Error("bad_argument", "unknown method");
}

bool is_legal(const Query& q, const ViewSystem& vs, const Database& db, LegalMode mode) {
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        NamedRelation wr = view_relation(vs.query_view(static_cast<int>(i)), db);
        NamedRelation qr = atom_answers(q.atoms[i], db);
        if (!std::includes(qr.tuples.begin(), qr.tuples.end(), wr.tuples.begin(),
                           wr.tuples.end()))
            return false;
    }
    if (mode == LegalMode::full) {
        for (std::size_t i = 0; i < q.atoms.size(); ++i) {
            const View& w = vs.query_view(static_cast<int>(i));
            NamedRelation wr = view_relation(w, db);
            AnswerSet ans = evaluate(q, db, w.vars);
            if (!std::includes(wr.tuples.begin(), wr.tuples.end(), ans.tuples.begin(),
                               ans.tuples.end()))
                return false;
        }
    }
    return true;
}

}  // namespace tpq
