#include "firefighter/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

namespace firefighter {

namespace {

std::vector<char> make_membership(const Graph& g, const std::vector<VertexId>& vs) {
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : vs) {
        g.check_vertex(v);
        in[static_cast<size_t>(v)] = 1;
    }
    return in;
}

}  // namespace

std::optional<VertexId> Graph::find_label(std::string_view name) const {
    for (VertexId v = 0; v < n_; ++v)
        if (labels_[static_cast<size_t>(v)] == name) return v;
    return std::nullopt;
}

VertexId Graph::resolve(std::string_view token) const {
    if (auto v = find_label(token)) return *v;
    int id = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
    if (ec == std::errc() && ptr == token.data() + token.size() && id >= 0 && id < n_)
        return id;
    throw std::invalid_argument("unknown vertex '" + std::string(token) + "'");
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    g_.n_ = n;
    g_.adj_.resize(static_cast<size_t>(n));
    g_.vertex_value_.assign(static_cast<size_t>(n), 1);
    g_.labels_.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) g_.labels_[static_cast<size_t>(v)] = std::to_string(v);
}

GraphBuilder& GraphBuilder::add_edge(VertexId u, VertexId v, int weight, int value) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (weight < 0) throw std::invalid_argument("negative edge weight");
    if (value < 0) throw std::invalid_argument("negative edge value");
    uint64_t key = Graph::edge_key(u, v);
    if (g_.attr_.count(key))
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    g_.attr_[key] = Graph::Attr{weight, value};
    g_.adj_[static_cast<size_t>(u)].push_back(v);
    g_.adj_[static_cast<size_t>(v)].push_back(u);
    return *this;
}

GraphBuilder& GraphBuilder::set_vertex_value(VertexId v, int value) {
    g_.check_vertex(v);
    if (value < 0) throw std::invalid_argument("negative vertex value");
    g_.vertex_value_[static_cast<size_t>(v)] = value;
    return *this;
}

GraphBuilder& GraphBuilder::set_label(VertexId v, std::string name) {
    g_.check_vertex(v);
    if (name.empty()) throw std::invalid_argument("empty label");
    g_.labels_[static_cast<size_t>(v)] = std::move(name);
    return *this;
}

Graph GraphBuilder::build() {
    if (built_) throw std::logic_error("GraphBuilder::build called twice");
    built_ = true;
    for (auto& a : g_.adj_) std::sort(a.begin(), a.end());
    g_.edges_.clear();
    for (VertexId u = 0; u < g_.n_; ++u)
        for (VertexId v : g_.adj_[static_cast<size_t>(u)])
            if (u < v) {
                const auto& at = g_.attr_.at(Graph::edge_key(u, v));
                g_.edges_.push_back(Edge{u, v, at.weight, at.value});
            }
    return std::move(g_);
}

std::vector<VertexId> neighbors_set(const Graph& g, const std::vector<VertexId>& vs,
                                    bool closed) {
    auto in = make_membership(g, vs);
    std::vector<VertexId> out;
    for (VertexId v : vs)
        for (VertexId w : g.neighbors(v))
            if (!in[static_cast<size_t>(w)]) {
                in[static_cast<size_t>(w)] = 2;
                out.push_back(w);
            }
    if (closed) out.insert(out.end(), vs.begin(), vs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId s) {
    g.check_vertex(s);
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInfDist);
    std::deque<VertexId> queue{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (dist[static_cast<size_t>(w)] == kInfDist) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<int> bfs_distances(const Graph& g, VertexId s,
                               const std::vector<VertexId>& allowed) {
    auto in = make_membership(g, allowed);
    if (!in[static_cast<size_t>(s)])
        throw std::invalid_argument("BFS source not in the allowed set");
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kInfDist);
    std::deque<VertexId> queue{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (in[static_cast<size_t>(w)] && dist[static_cast<size_t>(w)] == kInfDist) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::vector<VertexId> bfs_parents(const Graph& g, VertexId s) {
    g.check_vertex(s);
    std::vector<VertexId> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<VertexId> queue{s};
    parent[static_cast<size_t>(s)] = s;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = u;
                queue.push_back(w);
            }
    }
    return parent;
}

MergeResult merge_vertices(const Graph& g, const std::vector<VertexId>& vs) {
    if (vs.empty()) throw std::invalid_argument("merge_vertices: empty vertex set");
    auto in = make_membership(g, vs);

    int n = g.vertex_count();
    std::vector<VertexId> old_to_new(static_cast<size_t>(n), -1);
    VertexId next = 0, merged = -1;
    for (VertexId v = 0; v < n; ++v) {
        if (in[static_cast<size_t>(v)]) {
            if (merged == -1) merged = next++;
            old_to_new[static_cast<size_t>(v)] = merged;
        } else {
            old_to_new[static_cast<size_t>(v)] = next++;
        }
    }

    GraphBuilder b(next);
    // vertex values: members of the merged set are summed
    std::vector<int> value(static_cast<size_t>(next), 0);
    std::vector<std::string> label(static_cast<size_t>(next));
    for (VertexId v = 0; v < n; ++v) {
        VertexId nv = old_to_new[static_cast<size_t>(v)];
        if (in[static_cast<size_t>(v)]) {
            value[static_cast<size_t>(nv)] += g.vertex_value(v);
            if (!label[static_cast<size_t>(nv)].empty())
                label[static_cast<size_t>(nv)] += "+";
            label[static_cast<size_t>(nv)] += g.label(v);
        } else {
            value[static_cast<size_t>(nv)] = g.vertex_value(v);
            label[static_cast<size_t>(nv)] = g.label(v);
        }
    }
    for (VertexId v = 0; v < next; ++v) {
        b.set_vertex_value(v, value[static_cast<size_t>(v)]);
        b.set_label(v, label[static_cast<size_t>(v)]);
    }

    // collapse parallel edges: min weight, summed value; drop self-loops
    std::unordered_map<uint64_t, std::pair<int, int>> collapsed;
    for (const Edge& e : g.edges()) {
        VertexId a = old_to_new[static_cast<size_t>(e.u)];
        VertexId c = old_to_new[static_cast<size_t>(e.v)];
        if (a == c) continue;
        uint64_t key = (static_cast<uint64_t>(std::min(a, c)) << 32) |
                       static_cast<uint64_t>(std::max(a, c));
        auto it = collapsed.find(key);
        if (it == collapsed.end()) {
            collapsed[key] = {e.weight, e.value};
        } else {
            it->second.first = std::min(it->second.first, e.weight);
            it->second.second += e.value;
        }
    }
    std::vector<std::pair<uint64_t, std::pair<int, int>>> sorted(collapsed.begin(),
                                                                 collapsed.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, attr] : sorted)
        b.add_edge(static_cast<VertexId>(key >> 32),
                   static_cast<VertexId>(key & 0xffffffffu), attr.first, attr.second);

    return MergeResult{b.build(), std::move(old_to_new)};
}

std::optional<CycleInfo> find_unique_cycle(const Graph& g, VertexId s) {
    g.check_vertex(s);
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    int n = g.vertex_count(), m = g.edge_count();
    if (m == n - 1) return std::nullopt;
    if (m > n) throw not_unicyclic_error("graph has more than one cycle (m > n)");

    // peel degree-1 vertices; what remains is exactly the cycle
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::deque<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        VertexId v = leaves.front();
        leaves.pop_front();
        alive[static_cast<size_t>(v)] = 0;
        for (VertexId w : g.neighbors(v))
            if (alive[static_cast<size_t>(w)] && --deg[static_cast<size_t>(w)] == 1)
                leaves.push_back(w);
    }

    auto dist = bfs_distances(g, s);
    VertexId c0 = -1;
    for (VertexId v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)] &&
            (c0 == -1 || dist[static_cast<size_t>(v)] < dist[static_cast<size_t>(c0)]))
            c0 = v;

    CycleInfo info;
    info.l = dist[static_cast<size_t>(c0)];

    // walk the cycle starting at c0 toward its smaller-id cycle neighbor
    VertexId prev = c0, cur = -1;
    for (VertexId w : g.neighbors(c0))
        if (alive[static_cast<size_t>(w)]) {
            cur = w;
            break;  // neighbors are sorted, first alive is the smallest id
        }
    info.cycle.push_back(c0);
    while (cur != c0) {
        info.cycle.push_back(cur);
        VertexId nxt = -1;
        for (VertexId w : g.neighbors(cur))
            if (alive[static_cast<size_t>(w)] && w != prev) {
                nxt = w;
                break;
            }
        prev = cur;
        cur = nxt;
    }

    auto parent = bfs_parents(g, s);
    std::vector<VertexId> rev;
    for (VertexId v = c0; v != s; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
    rev.push_back(s);
    info.path.assign(rev.rbegin(), rev.rend());
    return info;
}

std::vector<Edge> cross_edges(const Graph& g, const std::vector<VertexId>& v1,
                              const std::vector<VertexId>& v2) {
    auto in1 = make_membership(g, v1);
    auto in2 = make_membership(g, v2);
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        bool a = (in1[static_cast<size_t>(e.u)] && in2[static_cast<size_t>(e.v)]);
        bool b = (in1[static_cast<size_t>(e.v)] && in2[static_cast<size_t>(e.u)]);
        if (a || b) out.push_back(e);
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kInfDist; });
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
    return g.edge_count() == g.vertex_count() && is_connected(g);
}

Graph bfs_tree_of(const Graph& g, VertexId s) {
    auto parent = bfs_parents(g, s);
    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, g.vertex_value(v));
        b.set_label(v, g.label(v));
        VertexId p = parent[static_cast<size_t>(v)];
        if (v != s && p != -1) b.add_edge(p, v, g.edge_weight(p, v), g.edge_value(p, v));
    }
    return b.build();
}

}  // namespace firefighter
