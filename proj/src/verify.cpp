#include "firefighter/verify.hpp"

#include <algorithm>

namespace firefighter {

namespace {

void check_preconditions(const Graph& g, VertexId s, const std::vector<VertexId>& burnt,
                         const std::vector<VertexId>& cand) {
    g.check_vertex(s);
    std::vector<char> in_burnt(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : burnt) {
        g.check_vertex(v);
        in_burnt[static_cast<size_t>(v)] = 1;
    }
    if (!in_burnt[static_cast<size_t>(s)])
        throw std::invalid_argument("source must be in the burnt set");
    auto dist = bfs_distances(g, s, burnt);
    for (VertexId v : burnt)
        if (dist[static_cast<size_t>(v)] == kInfDist)
            throw std::invalid_argument("burnt set is not connected");
    for (VertexId c : cand) {
        g.check_vertex(c);
        if (in_burnt[static_cast<size_t>(c)])
            throw std::invalid_argument("candidate " + g.label(c) + " is in the burnt set");
        bool adjacent = false;
        for (VertexId w : g.neighbors(c))
            if (in_burnt[static_cast<size_t>(w)]) {
                adjacent = true;
                break;
            }
        if (!adjacent)
            throw std::invalid_argument("candidate " + g.label(c) +
                                        " is not a neighbor of the burnt set");
    }
}

}  // namespace

std::vector<int> verification_distances(const Graph& g, VertexId s,
                                        const std::vector<VertexId>& burnt,
                                        const std::vector<VertexId>& cand) {
    check_preconditions(g, s, burnt, cand);
    auto inner = bfs_distances(g, s, burnt);
    std::vector<int> d;
    d.reserve(cand.size());
    for (VertexId c : cand) {
        int best = kInfDist;
        for (VertexId w : g.neighbors(c)) {
            int dw = inner[static_cast<size_t>(w)];
            if (dw != kInfDist) best = std::min(best, dw + 1);
        }
        d.push_back(best);
    }
    return d;
}

namespace {

// sorted candidate order plus its distances; shared by both variants
std::pair<std::vector<VertexId>, std::vector<int>> sorted_order(
    const Graph& g, VertexId s, const std::vector<VertexId>& burnt,
    const std::vector<VertexId>& cand) {
    auto d = verification_distances(g, s, burnt, cand);
    std::vector<size_t> idx(cand.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (d[a] != d[b]) return d[a] < d[b];
        return cand[a] < cand[b];
    });
    std::vector<VertexId> order;
    std::vector<int> dist;
    for (size_t i : idx) {
        order.push_back(cand[i]);
        dist.push_back(d[i]);
    }
    return {std::move(order), std::move(dist)};
}

}  // namespace

std::optional<std::vector<VertexId>> order_and_verify(const Graph& g, VertexId s,
                                                      const std::vector<VertexId>& burnt,
                                                      const std::vector<VertexId>& cand) {
    auto [order, dist] = sorted_order(g, s, burnt, cand);
    for (size_t i = 0; i < order.size(); ++i) {
        if (dist[i] == kInfDist) continue;  // the confined fire never gets there
        if (dist[i] < static_cast<int>(i) + 1) return std::nullopt;
    }
    return order;
}

std::optional<Strategy> order_and_verify_multi(const Graph& g, VertexId s,
                                               const std::vector<VertexId>& burnt,
                                               const std::vector<VertexId>& cand, int p,
                                               int h) {
    if (p < 1 || h < 1) throw std::invalid_argument("p and h must be >= 1");
    auto [order, dist] = sorted_order(g, s, burnt, cand);
    for (size_t i = 0; i < order.size(); ++i) {
        if (dist[i] == kInfDist) continue;
        long long lhs = (dist[i] + h - 1) / h;           // rounds until the fire arrives
        long long rhs = (static_cast<long long>(i) + p) / p;  // round this slot protects in
        if (lhs < rhs) return std::nullopt;
    }
    return chunk_rounds(order, p);
}

}  // namespace firefighter
