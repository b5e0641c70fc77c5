#pragma once

// Independent brute-force reference implementations used to cross-check the
// library, plus seeded random instance generators. Nothing here may call the
// code path it is meant to verify.

#include <random>

#include "tpq/consistency.hpp"
#include "tpq/game.hpp"
#include "tpq/hypergraph.hpp"
#include "tpq/relational.hpp"
#include "tpq/views.hpp"

namespace tpq::oracle {

// All labeled trees on m vertices as edge lists (Pruefer enumeration).
std::vector<std::vector<std::pair<int, int>>> all_trees(int m);

// Join-tree existence by exhaustive tree enumeration (m <= 6 or so).
bool brute_acyclic(const Hypergraph& h);

// Query answers by filtering the full cross product of active-domain
// assignments; usable only on tiny instances.
AnswerSet naive_evaluate(const Query& q, const Database& db, const NodeSet& output);

// Tree-projection existence by enumerating antichains of candidate edges
// (subsets of h2 edges restricted to nodes of h1).
bool brute_tree_projection(const Hypergraph& h1, const Hypergraph& h2);

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    int pick(int lo, int hi) {  // inclusive
        return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(engine));
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0., 1.)(engine) < p;
    }
};

Hypergraph random_hypergraph(Rng& rng, int max_nodes, int max_edges, int max_arity);

// Random connected-ish query over relation symbols r0..r{k}; repeated symbols
// allowed so cores become interesting.
Query random_query(Rng& rng, int max_atoms, int max_arity, int var_pool, int symbol_pool);

Database random_database(Rng& rng, const Query& q, int domain, int max_tuples_per_rel);

// Random acyclic query built along a random join tree (distinct symbols,
// genuinely fresh variables outside the inherited bag overlap).
Query random_acyclic_query(Rng& rng, int max_atoms, int max_arity);

// Legal database for (q, vs): query views get answer projections plus random
// legal extras, other views random relations over the active domain.
Database random_legal_database(Rng& rng, const Query& q, const ViewSystem& vs, int domain,
                               int max_tuples_per_rel);

}  // namespace tpq::oracle
