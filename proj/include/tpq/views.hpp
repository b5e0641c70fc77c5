#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpq/hypergraph.hpp"
#include "tpq/relational.hpp"

namespace tpq {

struct View {
    std::string name;  // doubles as the relation symbol in the database
    NodeSet vars;
    bool is_query_view = false;
    int for_atom = -1;
};

// A view system for a query: one query view per atom plus arbitrary extra
// views, all over vars of the query.
struct ViewSystem {
    std::vector<View> views;
    std::vector<int> query_view_of;  // atom index -> view index
    NodeSet query_vars;

    const View& query_view(int atom) const { return views.at(query_view_of.at(atom)); }
};

enum class Method { acyc, tw, hw };

struct MethodTag {
    Method method = Method::acyc;
    int k = 1;
};

struct GenerateOptions {
    // d-tw normally uses induced-subproblem solutions; the liberal variant
    // fills views with products of per-variable consistent domains instead.
    bool liberal_tw = false;
    std::uint64_t subset_cap = 1000000;
    ExpandOptions expand;
};

// Query views in atom order, then one fresh view per extra variable set.
ViewSystem make_view_system(const Query& q, const std::vector<NodeSet>& extra_var_sets);

// Validates a user-supplied view list against the query.
ViewSystem bind_view_system(const Query& q, std::vector<View> views);

// View generator of a structural decomposition method. The returned database
// combines the original relations with one relation per view.
std::pair<ViewSystem, Database> generate(const Query& q, const Database& db, MethodTag tag,
                                         const GenerateOptions& opts = {});

enum class LegalMode { cheap, full };

// cheap: query-view relations are subsets of their atoms' answers.
// full: additionally query views are view consistent.
bool is_legal(const Query& q, const ViewSystem& vs, const Database& db, LegalMode mode);

Hypergraph view_hypergraph(const ViewSystem& vs);

// The view's relation from the database, checked against its schema.
NamedRelation view_relation(const View& w, const Database& db);

}  // namespace tpq
