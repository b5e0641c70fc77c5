#include "tpq/consistency.hpp"

#include <deque>
#include <random>

namespace tpq {

ConsistencyReport is_locally_consistent(const ViewSystem& vs, const Database& db) {
    ConsistencyReport report;
    std::vector<NamedRelation> rels;
    for (const auto& w : vs.views)
        rels.push_back(view_relation(w, db));

    for (std::size_t i = 0; i < rels.size(); ++i)
        if (rels[i].tuples.empty()) {
            report.emptied_views.push_back(vs.views[i].name);
            if (!report.first_violation)
                report.first_violation =
                    ConsistencyReport::Violation{vs.views[i].name, vs.views[i].name, {}};
        }
    if (report.first_violation)
        return report;

    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j) {
            if (i == j || !sets_intersect(rels[i].vars, rels[j].vars))
                continue;
            NamedRelation filtered = semijoin(rels[i], rels[j]);
            if (filtered.tuples.size() != rels[i].tuples.size()) {
                Tuple witness;
                for (const auto& t : rels[i].tuples)
                    if (!filtered.tuples.count(t)) {
                        witness = t;
                        break;
                    }
                report.first_violation = ConsistencyReport::Violation{
                    vs.views[i].name, vs.views[j].name, std::move(witness)};
                return report;
            }
        }
    report.locally_consistent = true;
    return report;
}

Database reduct(const ViewSystem& vs, const Database& db, std::vector<ReductRound>* trace,
                std::uint64_t schedule_seed) {
    const int n = static_cast<int>(vs.views.size());
    std::vector<NamedRelation> rels;
    for (const auto& w : vs.views)
        rels.push_back(view_relation(w, db));

    std::vector<std::vector<int>> neighbours(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && sets_intersect(rels[i].vars, rels[j].vars))
                neighbours[i].push_back(j);

    std::deque<std::pair<int, int>> worklist;  // filter .first against .second
    std::vector<std::vector<bool>> queued(n, std::vector<bool>(n, false));
    auto push = [&](int i, int j) {
        if (!queued[i][j]) {
            queued[i][j] = true;
            worklist.emplace_back(i, j);
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j : neighbours[i])
            push(i, j);

    std::mt19937_64 rng(schedule_seed);
    bool someone_empty = false;
    for (int i = 0; i < n && !someone_empty; ++i)
        someone_empty = rels[i].tuples.empty();

    while (!worklist.empty() && !someone_empty) {
        std::size_t pos = 0;
        if (schedule_seed != 0)
            pos = std::uniform_int_distribution<std::size_t>(0, worklist.size() - 1)(rng);
        auto [i, j] = worklist[pos];
        worklist.erase(worklist.begin() + static_cast<long>(pos));
        queued[i][j] = false;

        NamedRelation filtered = semijoin(rels[i], rels[j]);
        if (filtered.tuples.size() == rels[i].tuples.size())
            continue;
        if (trace) {
            ReductRound round;
            round.filtered = vs.views[i].name;
            round.against = vs.views[j].name;
            for (const auto& t : rels[i].tuples)
                if (!filtered.tuples.count(t))
                    round.deleted.push_back(t);
            trace->push_back(std::move(round));
        }
        rels[i] = std::move(filtered);
        if (rels[i].tuples.empty()) {
            someone_empty = true;
            break;
        }
        for (int k : neighbours[i])
            if (k != j)
                push(k, i);
    }

    Database out = db;
    for (int i = 0; i < n; ++i)
        out.relations[vs.views[i].name] =
            someone_empty ? std::set<Tuple>{} : rels[i].tuples;
    return out;
}

bool is_globally_consistent(const Query& q, const ViewSystem& vs, const Database& db) {
    if (!is_legal(q, vs, db, LegalMode::cheap))
        throw NotLegal("database is not legal for the query and view system");
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        const View& w = vs.query_view(static_cast<int>(i));
        NamedRelation wr = view_relation(w, db);
        AnswerSet ans = evaluate(q, db, w.vars);
        if (wr.tuples != ans.tuples)
            return false;
    }
    return true;
}

bool is_view_consistent(const View& w, const Query& q, const Database& db) {
    NamedRelation wr = view_relation(w, db);
    AnswerSet ans = evaluate(q, db, w.vars);
    return std::includes(wr.tuples.begin(), wr.tuples.end(), ans.tuples.begin(),
                         ans.tuples.end());
}

}  // namespace tpq
