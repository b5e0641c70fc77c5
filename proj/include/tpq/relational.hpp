#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tpq/errors.hpp"
#include "tpq/hypergraph.hpp"

namespace tpq {

// Variables and constants live in disjoint namespaces; a Term is one or the
// other. Equality and ordering are componentwise so terms can key sets/maps.
struct Term {
    bool is_var = true;
    std::string name;

    static Term var(std::string n) { return Term{true, std::move(n)}; }
    static Term constant(std::string n) { return Term{false, std::move(n)}; }

    auto operator<=>(const Term&) const = default;
};

struct Atom {
    std::string rel;
    std::vector<Term> terms;

    NodeSet vars() const;
    auto operator<=>(const Atom&) const = default;
};

struct Query {
    std::vector<Atom> atoms;

    explicit Query(std::vector<Atom> a = {});
    NodeSet vars() const;
    bool is_simple() const;  // every atom over a distinct relation symbol
};

using Tuple = std::vector<std::string>;

struct Database {
    // relation symbol -> set of constant tuples (uniform arity per symbol)
    std::map<std::string, std::set<Tuple>> relations;

    const std::set<Tuple>& at(const std::string& rel) const;
    bool has(const std::string& rel) const { return relations.count(rel) > 0; }
    void validate() const;  // arity consistency
};

// A set of homomorphisms restricted to a fixed, sorted variable list.
struct AnswerSet {
    NodeSet vars;            // sorted output schema
    std::set<Tuple> tuples;  // values aligned with vars

    bool empty() const { return tuples.empty(); }
};

// A named relation with an explicit schema, used for views and plan vertices.
struct NamedRelation {
    NodeSet vars;
    std::set<Tuple> tuples;
};

// Exact query answers restricted to `output`, via backtracking search.
// output == {} yields the boolean convention: one empty tuple iff satisfiable.
AnswerSet evaluate(const Query& q, const Database& db, const NodeSet& output);

// Answers of a single atom as a relation over its (sorted) variables.
NamedRelation atom_answers(const Atom& a, const Database& db);

// Homomorphism from q1 into q2 viewed as a relational structure; maps
// variables of q1 to terms of q2, constants staying fixed.
std::optional<std::map<std::string, Term>> homomorphism(const Query& q1, const Query& q2);

// Like homomorphism(q, sub) but required to fix every term of `sub`.
std::optional<std::map<std::string, Term>> retraction(const Query& q,
                                                      const std::vector<int>& atom_subset);

struct CoreOptions {
    int max_atoms = 12;
};

// All cores of q, each as a sublist of atom indices (increasing). Throws
// CoreCapExceeded when |atoms| exceeds the cap.
std::vector<std::vector<int>> core_atom_sets(const Query& q, const CoreOptions& opts = {});

// Cores as queries (atom order preserved).
std::vector<Query> cores(const Query& q, const CoreOptions& opts = {});

Query subquery(const Query& q, const std::vector<int>& atom_subset);

bool isomorphic(const Query& a, const Query& b);

// Tuples of `left` matching some tuple of `right` on the shared variables.
NamedRelation semijoin(const NamedRelation& left, const NamedRelation& right);

NamedRelation project(const NamedRelation& r, const NodeSet& onto);

Hypergraph query_hypergraph(const Query& q);

// Fresh-symbol induced subproblem of (q, db) on the variable set s.
std::pair<Query, Database> induced_subproblem(const Query& q, const Database& db,
                                              const NodeSet& s);

}  // namespace tpq
