#include "tpq/analysis.hpp"

namespace tpq {

std::optional<TreeProjection> exact_tree_projection(const Hypergraph& h1,
                                                    const Hypergraph& h2,
                                                    const ExpandOptions& opts) {
    Hypergraph hs = simplicial(h2, opts);
    auto strat = greedy_strategy(h1, hs, false);
    if (!strat)
        return std::nullopt;
    ComponentGraph nice = to_nice(*strat, h1, hs);
    ComponentGraph mono = monotonize(nice, h1, hs);
    TreeProjection tp = extract_tree_projection(mono, h1, hs);
    // simplicial edges are subsets of h2 edges, so the sandwich transfers
    tp.h2_cover.clear();
    for (const auto& e : tp.hypergraph.edges()) {
        int cover = -1;
        for (std::size_t i = 0; i < h2.edges().size(); ++i)
            if (is_subset(e, h2.edges()[i])) {
                cover = static_cast<int>(i);
                break;
            }
        if (cover < 0)
            throw SandwichViolation("extracted edge not inside any original h2 edge");
        tp.h2_cover.push_back(cover);
    }
    return tp;
}

namespace {

const std::string kOutputAtomSymbol = "__o::atom";

// q /\ atom(o) over a fresh relation symbol; the fresh atom comes last.
Query with_output_atom(const Query& q, const NodeSet& o) {
    std::vector<Atom> atoms = q.atoms;
    Atom extra{kOutputAtomSymbol, {}};
    for (const auto& v : o)
        extra.terms.push_back(Term::var(v));
    atoms.push_back(std::move(extra));
    return Query(std::move(atoms));
}

}  // namespace

TpCoverResult is_tp_covered(const Query& q, const ViewSystem& vs, const NodeSet& o,
                            const AnalysisOptions& opts) {
    NodeSet out = canonical_set(o);
    Hypergraph hv = view_hypergraph(vs);

    TpCoverResult result;
    if (out.empty()) {
        // decision-problem mode: tp-covering of the empty set is immaterial;
        // look for a core of q itself with a tree projection
        for (const auto& core : core_atom_sets(q, opts.core)) {
            Hypergraph hc = query_hypergraph(subquery(q, core));
            if (auto tp = exact_tree_projection(hc, hv, opts.expand)) {
                result.covered = true;
                result.core = core;
                result.projection = std::move(tp);
                return result;
            }
        }
        return result;
    }

    bool inside_view = false;
    for (const auto& w : vs.views)
        if (is_subset(out, w.vars)) {
            inside_view = true;
            break;
        }
    if (!inside_view)
        throw OUnsupported("output variables are not covered by any view");

    Query extended = with_output_atom(q, out);
    for (const auto& core : core_atom_sets(extended, opts.core)) {
        Hypergraph hc = query_hypergraph(subquery(extended, core));
        if (auto tp = exact_tree_projection(hc, hv, opts.expand)) {
            result.covered = true;
            result.core = core;
            result.projection = std::move(tp);
            return result;
        }
    }
    return result;
}

Certificate lc_gc_certificate(const Query& q, const ViewSystem& vs,
                              const AnalysisOptions& opts) {
    Certificate cert;
    cert.holds = true;
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        TpCoverResult r = is_tp_covered(q, vs, q.atoms[i].vars(), opts);
        Certificate::AtomWitness w;
        w.atom = static_cast<int>(i);
        w.covered = r.covered;
        w.core = std::move(r.core);
        w.projection = std::move(r.projection);
        cert.holds = cert.holds && w.covered;
        cert.atoms.push_back(std::move(w));
    }
    return cert;
}

Certificate lc_nonempty_certificate(const Query& q, const ViewSystem& vs,
                                    const AnalysisOptions& opts) {
    Certificate cert;
    TpCoverResult r = is_tp_covered(q, vs, {}, opts);
    cert.holds = r.covered;
    cert.witness_core = std::move(r.core);
    cert.projection = std::move(r.projection);
    return cert;
}

WidthResult width(const Query& q, WidthMode mode, int kmax, const AnalysisOptions& opts) {
    if (kmax < 1)
        throw Error("bad_argument", "width search requires kmax >= 1");
    WidthResult result;
    result.mode = mode;
    Hypergraph hq = query_hypergraph(q);
    for (int k = 1; k <= kmax; ++k) {
        Hypergraph expanded = union_expand(hq, k);
        if (mode == WidthMode::ghw) {
            if (auto tp = exact_tree_projection(hq, expanded, opts.expand)) {
                result.value = k;
                result.witness = std::move(tp);
                return result;
            }
        } else {
            bool monotone_only = mode == WidthMode::hw;
            if (auto strat = greedy_strategy(hq, expanded, monotone_only)) {
                result.value = k;
                ComponentGraph mono = monotonize(*strat, hq, expanded);
                result.witness = extract_tree_projection(mono, hq, expanded);
                return result;
            }
        }
    }
    return result;
}

AnswerResult answer_correctness(const Query& q, const ViewSystem& vs, const Database& db,
                                const NodeSet& o, const AnalysisOptions& opts) {
    NodeSet out = canonical_set(o);
    if (!is_legal(q, vs, db, LegalMode::cheap))
        throw NotLegal("database fails the cheap legality check");

    std::vector<int> covering;
    for (std::size_t i = 0; i < vs.views.size(); ++i)
        if (is_subset(out, vs.views[i].vars))
            covering.push_back(static_cast<int>(i));
    if (covering.empty())
        throw NoCoveringView("no view covers the requested output variables");

    Database reduced = reduct(vs, db);
    const View& chosen = vs.views[covering.front()];

    AnswerResult result;
    result.vars = out;
    result.via_view = chosen.name;
    result.tuples = project(view_relation(chosen, reduced), out).tuples;

    bool reduct_empty = true;
    for (const auto& w : vs.views)
        if (!reduced.at(w.name).empty()) {
            reduct_empty = false;
            break;
        }
    if (reduct_empty) {
        result.status = AnswerStatus::exact;  // no answers survive an empty reduct
        return result;
    }

    if (is_tp_covered(q, vs, out, opts).covered) {
        bool trusted = false;
        for (int i : covering)
            if (is_view_consistent(vs.views[i], q, db)) {
                trusted = true;
                break;
            }
        result.status = trusted ? AnswerStatus::exact : AnswerStatus::sound_only;
    } else {
        result.status = AnswerStatus::unverified;
    }
    return result;
}

}  // namespace tpq
