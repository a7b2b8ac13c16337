#pragma once

#include "firefighter/game.hpp"

namespace firefighter {

// A local-replacement reduction: the rewritten graph, where each original
// vertex landed, and which new vertices the firefighter may not protect.
struct ReductionResult {
    Graph graph;
    std::vector<VertexId> old_to_new;
    std::vector<char> forbidden;  // per new vertex
};

// Weighted -> unit-weight: zero-weight edges are contracted, weight-w edges
// become paths of w unit edges through forbidden vertices. Values of edges
// that vanish inside a contraction fold into the merged vertex.
ReductionResult subdivide_weighted(const Graph& g);

// Valued -> unit-valued: a value-z vertex grows a chain of z-1 unit
// vertices, a value-z edge grows a parallel path of z unit vertices; only
// the original anchors stay protectable. Rejects zero-value vertices.
ReductionResult expand_values(const Graph& g);

struct MergedScenario {
    Scenario scenario;
    std::vector<VertexId> old_to_new;
};

// All fire sources merged into a single vertex; p and h carry over.
MergedScenario merge_sources(const Scenario& sc);

// Parameter translation for multi-protection / multi-burning rounds.
int reduce_multi_step(int k, int p, int h);

}  // namespace firefighter
