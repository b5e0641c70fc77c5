#pragma once

#include <cstdint>
#include <optional>

#include "tpq/views.hpp"

namespace tpq {

struct ConsistencyReport {
    bool locally_consistent = false;
    struct Violation {
        std::string view_a;
        std::string view_b;  // equals view_a when the violation is emptiness
        Tuple witness;       // tuple of view_a with no partner in view_b; empty for emptiness
    };
    std::optional<Violation> first_violation;
    std::vector<std::string> emptied_views;
};

struct ReductRound {
    std::string filtered;
    std::string against;
    std::vector<Tuple> deleted;
};

ConsistencyReport is_locally_consistent(const ViewSystem& vs, const Database& db);

// The unique maximal locally consistent sub-database of the view relations
// (all view relations empty when none exists). Query-atom relations pass
// through untouched. The semijoin schedule is a pure performance choice;
// schedule_seed shuffles it for confluence testing.
Database reduct(const ViewSystem& vs, const Database& db,
                std::vector<ReductRound>* trace = nullptr, std::uint64_t schedule_seed = 0);

// Throws NotLegal when the database fails the cheap legality check.
bool is_globally_consistent(const Query& q, const ViewSystem& vs, const Database& db);

bool is_view_consistent(const View& w, const Query& q, const Database& db);

}  // namespace tpq
