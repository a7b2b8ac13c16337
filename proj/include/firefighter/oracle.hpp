#pragma once

#include <cstdint>
#include <optional>

#include "firefighter/game.hpp"

namespace firefighter {

struct OracleLimits {
    int max_vertices = 14;
    int max_rounds = 4;
    uint64_t max_states = 50'000'000;
};

struct OracleResult {
    long long best_value = 0;
    std::vector<Strategy> optimal;   // every distinct optimal play, trailing skips trimmed
    std::vector<bool> irredundant;   // parallel to optimal: no protection can be dropped
    uint64_t states = 0;
};

// Exhaustive search over protection plays of at most max_rounds rounds
// (each round protects <= p vertices or skips). Ground truth for all
// solver differential tests. Vertices in `forbidden` are never protected
// (reduction gadgets pin their synthetic vertices this way).
OracleResult brute_force_optimal(const Scenario& sc, int max_rounds,
                                 const OracleLimits& limits = {},
                                 const std::vector<VertexId>& forbidden = {});

enum class BurntMode { AtMost, Exactly };

struct DecisionResult {
    bool yes = false;
    std::optional<Strategy> witness;
};

// Exact decision for the burnt-count problems (unit weights, p = h = 1).
// A play must protect at least one vertex unless the fire is contained
// before the first round.
DecisionResult brute_force_burnt_decision(const Graph& g, VertexId s, int k,
                                          BurntMode mode,
                                          const OracleLimits& limits = {});

}  // namespace firefighter
