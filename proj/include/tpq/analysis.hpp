#pragma once

#include <optional>

#include "tpq/consistency.hpp"
#include "tpq/game.hpp"
#include "tpq/views.hpp"

namespace tpq {

struct AnalysisOptions {
    CoreOptions core;
    ExpandOptions expand;
    GenerateOptions gen;
};

// Exact decision: does (h1, h2) have a tree projection? Decided by playing
// the greedy game against the simplicial expansion of h2; on success the
// witness is rebased onto h2 itself.
std::optional<TreeProjection> exact_tree_projection(const Hypergraph& h1,
                                                    const Hypergraph& h2,
                                                    const ExpandOptions& opts = {});

struct TpCoverResult {
    bool covered = false;
    // the witnessing core of q /\ atom(o) (atom indices; the fresh atom is
    // index |atoms(q)|) and its tree projection
    std::vector<int> core;
    std::optional<TreeProjection> projection;
};

// Is o tp-covered in q w.r.t. the view system? o must occur inside some view;
// o = {} asks the decision-problem variant (cores of q itself).
TpCoverResult is_tp_covered(const Query& q, const ViewSystem& vs, const NodeSet& o,
                            const AnalysisOptions& opts = {});

struct Certificate {
    bool holds = false;
    struct AtomWitness {
        int atom = -1;
        bool covered = false;
        std::vector<int> core;
        std::optional<TreeProjection> projection;
    };
    std::vector<AtomWitness> atoms;   // per-atom evidence (gc certificates)
    std::vector<int> witness_core;    // witnessing core (nonempty certificates)
    std::optional<TreeProjection> projection;
};

// Local consistency entails global consistency iff every atom's variable set
// is tp-covered; witnesses list the failing atoms.
Certificate lc_gc_certificate(const Query& q, const ViewSystem& vs,
                              const AnalysisOptions& opts = {});

// Local consistency entails a non-empty answer iff some core of q has a tree
// projection w.r.t. the view hypergraph.
Certificate lc_nonempty_certificate(const Query& q, const ViewSystem& vs,
                                    const AnalysisOptions& opts = {});

enum class WidthMode { ghw, grhw, hw };

struct WidthResult {
    WidthMode mode = WidthMode::ghw;
    std::optional<int> value;  // empty = above kmax
    std::optional<TreeProjection> witness;
};

WidthResult width(const Query& q, WidthMode mode, int kmax,
                  const AnalysisOptions& opts = {});

enum class AnswerStatus { exact, sound_only, unverified };

struct AnswerResult {
    NodeSet vars;
    std::set<Tuple> tuples;
    AnswerStatus status = AnswerStatus::unverified;
    std::string via_view;  // covering view whose reduct projection is returned
};

// Answers over o read off the reduct: the projection of a covering view.
// exact when o is tp-covered and some covering view is view consistent;
// sound_only when tp-covered without such a view; unverified otherwise.
AnswerResult answer_correctness(const Query& q, const ViewSystem& vs, const Database& db,
                                const NodeSet& o, const AnalysisOptions& opts = {});

}  // namespace tpq
