#pragma once

#include <optional>

#include "firefighter/game.hpp"

namespace firefighter {

// Decides whether the candidate set can be ordered into a schedule that
// protects each vertex before the fire, confined to `burnt`, reaches it.
// Distances are measured on the induced subgraph over burnt + cand with the
// edges inside cand removed. Candidates are sorted by ascending distance
// (ties by id); the order is valid iff d[v_i] >= i for every position i.
//
// Preconditions: s in burnt; burnt connected; cand subset of N(burnt);
// burnt and cand disjoint. Violations raise std::invalid_argument.
std::optional<std::vector<VertexId>> order_and_verify(const Graph& g, VertexId s,
                                                      const std::vector<VertexId>& burnt,
                                                      const std::vector<VertexId>& cand);

// Multi-protection / multi-burning variant: position i fails iff
// ceil(d[v_i] / h) < ceil(i / p). The accepted order is chunked into
// rounds of p.
std::optional<Strategy> order_and_verify_multi(const Graph& g, VertexId s,
                                               const std::vector<VertexId>& burnt,
                                               const std::vector<VertexId>& cand, int p,
                                               int h);

// Distances of candidates on the verification subgraph (shared with the
// solvers; kInfDist marks candidates the confined fire can never reach).
std::vector<int> verification_distances(const Graph& g, VertexId s,
                                        const std::vector<VertexId>& burnt,
                                        const std::vector<VertexId>& cand);

}  // namespace firefighter
