#pragma once

#include <string>
#include <vector>

#include "firefighter/graph.hpp"

namespace firefighter {

inline constexpr int kNever = std::numeric_limits<int>::max();

// A strategy that breaks the game rules (protecting a burnt vertex, a
// source, a duplicate, or too many vertices in one round).
struct invalid_strategy_error : std::runtime_error {
    invalid_strategy_error(const std::string& what, int round_index)
        : std::runtime_error(what), round(round_index) {}
    int round;  // 1-based offending round
};

struct Scenario {
    Graph graph;
    std::vector<VertexId> sources;      // nonempty
    int protections_per_round = 1;      // p >= 1
    int spread_depth = 1;               // h >= 1
};

Scenario make_scenario(Graph g, std::vector<VertexId> sources, int p = 1, int h = 1);

// Ordered rounds of protected vertices; round i is protected before the
// i-th spread step. Empty rounds are legal (the firefighter may skip).
struct Strategy {
    std::vector<std::vector<VertexId>> rounds;

    int protection_count() const;
    std::vector<VertexId> protected_vertices() const;  // flattened in order

    // text form: rounds comma-separated, vertices within a round
    // semicolon-separated, e.g. "a;x,b" = round 1 {a,x}, round 2 {b}
    static Strategy parse(const Graph& g, std::string_view text);
    std::string to_text(const Graph& g) const;
};

Strategy single_rounds(const std::vector<VertexId>& order);
Strategy chunk_rounds(const std::vector<VertexId>& order, int per_round);

struct GameOutcome {
    std::vector<int> burn_round;     // kNever while unburnt; sources burn at 0
    std::vector<int> protect_round;  // kNever while unprotected
    std::vector<VertexId> burnt;     // sorted
    std::vector<VertexId> saved;     // sorted; complement of burnt
    int rounds_played = 0;
    bool strategy_truncated = false;  // protections left over after the game ended
};

// Exact discrete-time simulation. Each round protects first, then the fire
// advances h weight-units; zero-weight edges propagate within the instant.
GameOutcome simulate(const Scenario& sc, const Strategy& st);

// Total value of saved vertices plus edges with both endpoints saved.
long long outcome_value(const Graph& g, const GameOutcome& out);

}  // namespace firefighter
