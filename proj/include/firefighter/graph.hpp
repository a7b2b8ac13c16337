#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace firefighter {

using VertexId = int;

inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Thrown when a cycle query is asked on a graph with more than one cycle.
struct not_unicyclic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    VertexId u = 0;  // u < v always
    VertexId v = 0;
    int weight = 1;
    int value = 0;
};

// Immutable undirected simple graph with optional integer edge weights,
// vertex values and edge values. Adjacency lists are sorted, so every
// traversal that scans neighbors in order is deterministic.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(VertexId v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<size_t>(v)].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
        return d;
    }

    bool has_edge(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        return attr_.count(edge_key(u, v)) != 0;
    }

    int edge_weight(VertexId u, VertexId v) const { return edge_attr(u, v).weight; }
    int edge_value(VertexId u, VertexId v) const { return edge_attr(u, v).value; }

    int vertex_value(VertexId v) const {
        check_vertex(v);
        return vertex_value_[static_cast<size_t>(v)];
    }

    const std::string& label(VertexId v) const {
        check_vertex(v);
        return labels_[static_cast<size_t>(v)];
    }

    // Label lookup; labels default to the decimal id of the vertex.
    std::optional<VertexId> find_label(std::string_view name) const;

    // Resolves a token that is either a label or a decimal vertex id.
    VertexId resolve(std::string_view token) const;

    // All edges with u < v, sorted by (u, v).
    const std::vector<Edge>& edges() const { return edges_; }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    }

private:
    friend class GraphBuilder;

    static uint64_t edge_key(VertexId u, VertexId v) {
        auto a = static_cast<uint64_t>(std::min(u, v));
        auto b = static_cast<uint64_t>(std::max(u, v));
        return (a << 32) | b;
    }

    struct Attr {
        int weight;
        int value;
    };

    const Attr& edge_attr(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        auto it = attr_.find(edge_key(u, v));
        if (it == attr_.end())
            throw std::invalid_argument("no edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        return it->second;
    }

    int n_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<Edge> edges_;
    std::unordered_map<uint64_t, Attr> attr_;
    std::vector<int> vertex_value_;
    std::vector<std::string> labels_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    GraphBuilder& add_edge(VertexId u, VertexId v, int weight = 1, int value = 0);
    GraphBuilder& set_vertex_value(VertexId v, int value);
    GraphBuilder& set_label(VertexId v, std::string name);

    bool has_edge(VertexId u, VertexId v) const {
        return g_.attr_.count(Graph::edge_key(u, v)) != 0;
    }

    Graph build();

private:
    Graph g_;
    bool built_ = false;
};

// Unique cycle of a unicyclic graph, oriented from the cycle vertex nearest
// the source. The successor of c0 along the stored order is its smaller-id
// cycle neighbor, which pins down "clockwise" deterministically.
struct CycleInfo {
    std::vector<VertexId> cycle;  // c0, c1, ..., cr (closed; cr adjacent to c0)
    std::vector<VertexId> path;   // s, ..., c0 (l + 1 vertices)
    int l = 0;                    // distance from the source to the cycle

    VertexId c0() const { return cycle.front(); }
    int r() const { return static_cast<int>(cycle.size()) - 1; }
};

struct MergeResult {
    Graph graph;
    std::vector<VertexId> old_to_new;
};

// N(vs), or N[vs] when closed is set. Input may be unsorted; output is sorted.
std::vector<VertexId> neighbors_set(const Graph& g, const std::vector<VertexId>& vs,
                                    bool closed = false);

// Unit-hop BFS distances from s; kInfDist marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId s);

// BFS restricted to the induced subgraph on `allowed` (s must be allowed).
std::vector<int> bfs_distances(const Graph& g, VertexId s,
                               const std::vector<VertexId>& allowed);

// BFS parent array (parent[s] = s, unreachable = -1). Neighbors are scanned
// in ascending order, so each vertex gets its smallest-distance, first-seen
// parent deterministically.
std::vector<VertexId> bfs_parents(const Graph& g, VertexId s);

// Contracts vs into a single vertex, relabels compactly, drops self-loops
// and collapses parallel edges (weight = min, values summed).
MergeResult merge_vertices(const Graph& g, const std::vector<VertexId>& vs);

// nullopt iff g is a tree; throws not_unicyclic_error when m > n.
std::optional<CycleInfo> find_unique_cycle(const Graph& g, VertexId s);

// Cross edges E(V1, V2); pairs sharing a vertex set side are excluded.
std::vector<Edge> cross_edges(const Graph& g, const std::vector<VertexId>& v1,
                              const std::vector<VertexId>& v2);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_unicyclic(const Graph& g);

// Shortest-path tree from s on the same vertex ids (deterministic tie-break).
Graph bfs_tree_of(const Graph& g, VertexId s);

}  // namespace firefighter
