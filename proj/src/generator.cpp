#include "firefighter/generator.hpp"

#include <random>

namespace firefighter {

InstanceKind kind_from_string(const std::string& s) {
    if (s == "tree") return InstanceKind::Tree;
    if (s == "unicyclic") return InstanceKind::Unicyclic;
    if (s == "bounded-degree") return InstanceKind::BoundedDegree;
    if (s == "tree-plus-b") return InstanceKind::TreePlusB;
    throw std::invalid_argument("unknown instance kind '" + s + "'");
}

std::string kind_to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::Tree: return "tree";
        case InstanceKind::Unicyclic: return "unicyclic";
        case InstanceKind::BoundedDegree: return "bounded-degree";
        case InstanceKind::TreePlusB: return "tree-plus-b";
    }
    return "?";
}

namespace {

// random spanning tree by attaching each vertex to an earlier one; the
// degree cap keeps bounded-degree instances inside their family
void random_tree_edges(GraphBuilder& b, int n, int degree_cap, std::vector<int>& deg,
                       std::mt19937_64& rng) {
    deg.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        std::vector<int> eligible;
        for (int j = 0; j < i; ++j)
            if (degree_cap <= 0 || deg[static_cast<size_t>(j)] < degree_cap)
                eligible.push_back(j);
        int j = eligible[static_cast<size_t>(rng() % eligible.size())];
        b.add_edge(j, i);
        ++deg[static_cast<size_t>(j)];
        ++deg[static_cast<size_t>(i)];
    }
}

int random_extra_edges(GraphBuilder& b, int n, int want, int degree_cap,
                       std::vector<int>& deg, std::mt19937_64& rng) {
    int added = 0;
    int attempts = 0;
    while (added < want && attempts < 64 * (want + 1)) {
        ++attempts;
        int u = static_cast<int>(rng() % static_cast<uint64_t>(n));
        int v = static_cast<int>(rng() % static_cast<uint64_t>(n));
        if (u == v || b.has_edge(u, v)) continue;
        if (degree_cap > 0 && (deg[static_cast<size_t>(u)] >= degree_cap ||
                               deg[static_cast<size_t>(v)] >= degree_cap))
            continue;
        b.add_edge(u, v);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        ++added;
    }
    return added;
}

}  // namespace

ParsedInstance generate_instance(InstanceKind kind, int n, int d, int b, uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
    std::vector<int> deg;

    auto finish = [&](GraphBuilder& gb, const std::string& tag) {
        ParsedInstance inst;
        inst.graph = gb.build();
        inst.sources = {static_cast<VertexId>(rng() % static_cast<uint64_t>(n))};
        inst.name = tag + "-n" + std::to_string(n) + "-seed" + std::to_string(seed);
        return inst;
    };

    switch (kind) {
        case InstanceKind::Tree: {
            if (n < 1) throw std::invalid_argument("tree needs n >= 1");
            GraphBuilder gb(n);
            random_tree_edges(gb, n, 0, deg, rng);
            auto inst = finish(gb, "tree");
            if (!is_tree(inst.graph)) throw std::logic_error("generator produced a non-tree");
            return inst;
        }
        case InstanceKind::Unicyclic: {
            if (n < 3) throw std::invalid_argument("unicyclic needs n >= 3");
            GraphBuilder gb(n);
            random_tree_edges(gb, n, 0, deg, rng);
            if (random_extra_edges(gb, n, 1, 0, deg, rng) != 1)
                throw std::runtime_error("could not place the cycle edge");
            auto inst = finish(gb, "unicyclic");
            if (!is_unicyclic(inst.graph))
                throw std::logic_error("generator produced a non-unicyclic graph");
            find_unique_cycle(inst.graph, inst.sources.front());
            return inst;
        }
        case InstanceKind::BoundedDegree: {
            if (n < 1 || d < 2) throw std::invalid_argument("bounded-degree needs n >= 1, d >= 2");
            GraphBuilder gb(n);
            random_tree_edges(gb, n, d, deg, rng);
            int want = static_cast<int>(rng() % static_cast<uint64_t>(n + 1));
            random_extra_edges(gb, n, want, d, deg, rng);
            auto inst = finish(gb, "deg" + std::to_string(d));
            if (inst.graph.max_degree() > d)
                throw std::logic_error("generator exceeded the degree bound");
            return inst;
        }
        case InstanceKind::TreePlusB: {
            if (n < 3 || b < 0) throw std::invalid_argument("tree-plus-b needs n >= 3, b >= 0");
            GraphBuilder gb(n);
            random_tree_edges(gb, n, 0, deg, rng);
            if (random_extra_edges(gb, n, b, 0, deg, rng) != b)
                throw std::runtime_error("could not place all extra edges");
            auto inst = finish(gb, "tree+" + std::to_string(b));
            if (inst.graph.edge_count() != n - 1 + b)
                throw std::logic_error("generator missed the edge count");
            return inst;
        }
    }
    throw std::invalid_argument("bad instance kind");
}

}  // namespace firefighter
