#include "firefighter/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace firefighter {

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace

ReductionResult subdivide_weighted(const Graph& g) {
    const int n = g.vertex_count();
    for (const Edge& e : g.edges())
        if (e.weight < 0) throw std::invalid_argument("negative edge weight");

    // contract zero-weight edges
    DisjointSet ds(n);
    for (const Edge& e : g.edges())
        if (e.weight == 0) ds.unite(e.u, e.v);

    std::vector<VertexId> comp(static_cast<size_t>(n), -1);
    int n_comp = 0;
    for (VertexId v = 0; v < n; ++v)
        if (ds.find(v) == v) comp[static_cast<size_t>(v)] = n_comp++;
    for (VertexId v = 0; v < n; ++v) comp[static_cast<size_t>(v)] = comp[static_cast<size_t>(ds.find(v))];

    std::vector<int> value(static_cast<size_t>(n_comp), 0);
    std::vector<std::string> label(static_cast<size_t>(n_comp));
    for (VertexId v = 0; v < n; ++v) {
        VertexId c = comp[static_cast<size_t>(v)];
        value[static_cast<size_t>(c)] += g.vertex_value(v);
        if (!label[static_cast<size_t>(c)].empty()) label[static_cast<size_t>(c)] += "+";
        label[static_cast<size_t>(c)] += g.label(v);
    }

    // surviving edges collapse (min weight, summed value); edges that fall
    // inside a component fold their value into the component
    std::map<std::pair<VertexId, VertexId>, std::pair<int, int>> collapsed;
    for (const Edge& e : g.edges()) {
        VertexId a = comp[static_cast<size_t>(e.u)];
        VertexId c = comp[static_cast<size_t>(e.v)];
        if (a == c) {
            value[static_cast<size_t>(a)] += e.value;
            continue;
        }
        auto key = std::make_pair(std::min(a, c), std::max(a, c));
        auto it = collapsed.find(key);
        if (it == collapsed.end())
            collapsed[key] = {e.weight, e.value};
        else {
            it->second.first = std::min(it->second.first, e.weight);
            it->second.second += e.value;
        }
    }

    int extra = 0;
    for (const auto& [key, wz] : collapsed) extra += std::max(0, wz.first - 1);

    GraphBuilder b(n_comp + extra);
    for (VertexId c = 0; c < n_comp; ++c) {
        b.set_vertex_value(c, value[static_cast<size_t>(c)]);
        b.set_label(c, label[static_cast<size_t>(c)]);
    }
    ReductionResult out;
    out.forbidden.assign(static_cast<size_t>(n_comp + extra), 0);

    VertexId next = n_comp;
    int serial = 0;
    for (const auto& [key, wz] : collapsed) {
        auto [u, v] = key;
        auto [w, z] = wz;
        if (w == 1) {
            b.add_edge(u, v, 1, z);
            continue;
        }
        VertexId prev = u;
        for (int i = 0; i < w - 1; ++i) {
            b.set_label(next, "x" + std::to_string(serial++));
            out.forbidden[static_cast<size_t>(next)] = 1;
            b.add_edge(prev, next, 1, prev == u ? z : 0);
            prev = next++;
        }
        b.add_edge(prev, v, 1, 0);
    }
    out.graph = b.build();
    out.old_to_new = comp;
    return out;
}

ReductionResult expand_values(const Graph& g) {
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (g.vertex_value(v) == 0)
            throw std::runtime_error("irreducible: zero-value vertex " + g.label(v));

    int extra = 0;
    for (VertexId v = 0; v < n; ++v) extra += g.vertex_value(v) - 1;
    for (const Edge& e : g.edges()) extra += e.value;

    GraphBuilder b(n + extra);
    ReductionResult out;
    out.forbidden.assign(static_cast<size_t>(n + extra), 0);
    out.old_to_new.resize(static_cast<size_t>(n));

    for (VertexId v = 0; v < n; ++v) {
        out.old_to_new[static_cast<size_t>(v)] = v;
        b.set_label(v, g.label(v));  // anchors keep id, label, unit value
    }

    VertexId next = n;
    // vertex value z -> anchor plus a chain of z-1 unit vertices
    for (VertexId v = 0; v < n; ++v) {
        VertexId prev = v;
        for (int i = 1; i < g.vertex_value(v); ++i) {
            b.set_label(next, g.label(v) + "#" + std::to_string(i));
            out.forbidden[static_cast<size_t>(next)] = 1;
            b.add_edge(prev, next, 1, 0);
            prev = next++;
        }
    }
    // edge value z -> the edge itself plus a parallel path of z unit
    // vertices; the path burns from whichever endpoint falls
    for (const Edge& e : g.edges()) {
        b.add_edge(e.u, e.v, e.weight, 0);
        if (e.value == 0) continue;
        VertexId prev = e.u;
        for (int i = 0; i < e.value; ++i) {
            b.set_label(next, g.label(e.u) + "~" + g.label(e.v) + "#" + std::to_string(i));
            out.forbidden[static_cast<size_t>(next)] = 1;
            b.add_edge(prev, next, 1, 0);
            prev = next++;
        }
        b.add_edge(prev, e.v, 1, 0);
    }
    out.graph = b.build();
    return out;
}

MergedScenario merge_sources(const Scenario& sc) {
    MergedScenario out;
    if (sc.sources.size() <= 1) {
        out.scenario = sc;
        out.old_to_new.resize(static_cast<size_t>(sc.graph.vertex_count()));
        std::iota(out.old_to_new.begin(), out.old_to_new.end(), 0);
        return out;
    }
    auto merged = merge_vertices(sc.graph, sc.sources);
    VertexId src = merged.old_to_new[static_cast<size_t>(sc.sources.front())];
    out.scenario = make_scenario(std::move(merged.graph), {src},
                                 sc.protections_per_round, sc.spread_depth);
    out.old_to_new = std::move(merged.old_to_new);
    return out;
}

int reduce_multi_step(int k, int p, int h) {
    if (k < 1 || p < 1 || h < 1) throw std::invalid_argument("k, p, h must be >= 1");
    return (k * p + h - 1) / h;
}

}  // namespace firefighter
