#pragma once

#include <functional>
#include <optional>
#include <string>

#include "firefighter/game.hpp"
#include "firefighter/universal.hpp"

namespace firefighter {

// pre-pinned vertex colors (sources, forbidden vertices, case constraints)
using PinSet = std::vector<std::pair<VertexId, Color>>;

enum class TrialMode { Randomized, ExhaustiveColorings, UniversalFamily };

struct TrialBudget {
    TrialMode mode = TrialMode::Randomized;
    double delta = 0.01;        // failure probability target for randomized mode
    uint64_t seed = 1;          // master seed; trial i derives its own stream
    std::optional<uint64_t> trial_override;  // explicit randomized trial count
    uint64_t max_trials = 1u << 24;          // hard clamp on any mode

    // ceil((1 / p_good) * ln(1 / delta)), saturating
    static uint64_t trials_for(double p_good, double delta);
    std::string mode_name() const;
};

struct SolveResult {
    bool decision = false;
    std::optional<Strategy> best_strategy;
    long long best_value = 0;
    uint64_t trials_used = 0;
    uint64_t seed = 0;
    bool deterministic = false;  // exhaustive / universal modes
    std::string mode;
};

// Decision: can the fire be held to at most k burnt vertices?
SolveResult solve_at_most_k_burnt(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget);

// Decision: is there a play burning exactly k vertices?
SolveResult solve_exactly_k_burnt(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget);

// Tree of shortest burn paths from s to every target, targets as leaves.
// Path search never runs through another target (distance of a target is
// measured with the other targets removed).
struct BurningTree {
    std::vector<VertexId> vertices;                   // sorted
    std::vector<std::pair<VertexId, VertexId>> edges; // parent < child pairs sorted
    std::vector<int> dist;                            // per graph vertex, kInfDist outside
};
BurningTree min_bfs_burning_tree(const Graph& g, VertexId s,
                                 const std::vector<VertexId>& targets);

// Maximum saved value with at most k protections on a graph of max degree
// <= degree_bound. Trials 3-color the graph, read the green boundary of the
// red component as the candidate strategy and keep the best simulated
// outcome. p/h generalize to multi-protection and multi-burning rounds.
// `forbidden` vertices (reduction gadgets) may burn but never go green:
// any green they draw is demoted to yellow.
SolveResult solve_max_k_protection_bounded_degree(const Graph& g, VertexId s, int k,
                                                  int degree_bound,
                                                  const TrialBudget& budget,
                                                  const PinSet& pins = {}, int p = 1,
                                                  int h = 1,
                                                  const std::vector<VertexId>& forbidden = {});

// Scores a tree strategy; values below zero mean "invalid, skip". Used by
// the cycle solvers to rank candidate strategies by their value on the
// original graph rather than on the transformed tree.
using StrategyScore = std::function<long long(const Strategy&)>;

// Maximum k-protection on a tree rooted at s. Per coloring, candidates are
// green vertices with all-red ancestors; a level-by-level greedy protects
// the heaviest eligible subtree per round.
SolveResult solve_tree_max_k(const Graph& tree, VertexId s, int k, const PinSet& pins,
                             const TrialBudget& budget, const StrategyScore& score = {});

// cycle saved: contract the cycle into one heavily loaded vertex
struct Case1Transform {
    Graph tree;
    VertexId c0_prime;
    std::vector<VertexId> old_to_new;   // cycle vertices all map to c0_prime
    std::vector<VertexId> pendants;     // synthetic leaves on c0_prime
};
Case1Transform transform_case1(const Graph& g, const CycleInfo& info);

// cycle fully burnt: drop the cycle edge the fire crosses last
struct Case2Transform {
    Graph tree;  // same vertex ids as g
    PinSet pins;
};
Case2Transform transform_case2(const Graph& g, const CycleInfo& info);

// exactly u1, u2 protected on the cycle: delete the far arc and its subtrees
struct Case3Transform {
    Graph graph;  // a tree when u1 != u2; unchanged when u1 == u2
    PinSet pins;
    std::vector<VertexId> old_to_new;  // -1 for deleted vertices
    std::vector<VertexId> new_to_old;
};
Case3Transform transform_case3(const Graph& g, const CycleInfo& info, VertexId u1,
                               VertexId u2);

// Maximum k-protection on a unicyclic graph via the three cycle cases.
SolveResult solve_unicyclic_max_k(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget);

// Maximum k-protection on a connected graph with m = n - 1 + b, small b:
// guess up to 2b protected vertices on the cyclic core, cut off what they
// save, pin the rest of the core red and solve the remainder as a tree.
SolveResult solve_tree_plus_b(const Graph& g, VertexId s, int k, int b,
                              const TrialBudget& budget);

}  // namespace firefighter
