#include "firefighter/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>

#include "firefighter/verify.hpp"

namespace firefighter {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Color color_from_digit(uint64_t d) {
    switch (d) {
        case 0: return Color::Red;
        case 1: return Color::Green;
        default: return Color::Yellow;
    }
}

// One fillable coloring per trial index; identical results whether trials
// run serially or in parallel because trial i seeds its own stream.
struct ColoringPlan {
    TrialMode mode = TrialMode::Randomized;
    int colors = 2;
    uint64_t seed = 0;
    uint64_t trials = 0;
    std::vector<Color> base;
    std::vector<VertexId> free_list;
    std::vector<char> not_green;  // per vertex: green demotes to the waste color
    std::vector<std::vector<Color>> stream;

    void fill(uint64_t trial, std::vector<Color>& out) const {
        out = base;
        if (mode == TrialMode::Randomized) {
            std::mt19937_64 rng(splitmix64(seed ^ splitmix64(trial + 1)));
            for (VertexId v : free_list)
                out[static_cast<size_t>(v)] =
                    color_from_digit(rng() % static_cast<uint64_t>(colors));
        } else if (mode == TrialMode::ExhaustiveColorings) {
            uint64_t x = trial;
            for (VertexId v : free_list) {
                out[static_cast<size_t>(v)] =
                    color_from_digit(x % static_cast<uint64_t>(colors));
                x /= static_cast<uint64_t>(colors);
            }
        } else {
            const auto& vec = stream[trial];
            for (size_t i = 0; i < free_list.size(); ++i)
                out[static_cast<size_t>(free_list[i])] = vec[i];
        }
        if (!not_green.empty())
            for (VertexId v = 0; v < static_cast<VertexId>(out.size()); ++v)
                if (not_green[static_cast<size_t>(v)] &&
                    out[static_cast<size_t>(v)] == Color::Green)
                    out[static_cast<size_t>(v)] =
                        colors == 2 ? Color::Red : Color::Yellow;
    }
};

ColoringPlan make_plan(const Graph& g, const PinSet& pins, int colors,
                       const TrialBudget& budget, double p_good, int universal_t,
                       const std::vector<VertexId>& forbidden = {}) {
    const int n = g.vertex_count();
    std::vector<int> pinned(static_cast<size_t>(n), -1);
    for (const auto& [v, c] : pins) {
        g.check_vertex(v);
        if (colors == 2 && c == Color::Yellow)
            throw std::invalid_argument("two-color mode forbids Yellow pins");
        int ci = static_cast<int>(c);
        if (pinned[static_cast<size_t>(v)] != -1 && pinned[static_cast<size_t>(v)] != ci)
            throw std::invalid_argument("conflicting pins on vertex " + g.label(v));
        pinned[static_cast<size_t>(v)] = ci;
    }

    ColoringPlan plan;
    plan.mode = budget.mode;
    plan.colors = colors;
    plan.seed = budget.seed;
    if (!forbidden.empty()) {
        plan.not_green.assign(static_cast<size_t>(n), 0);
        for (VertexId v : forbidden) {
            g.check_vertex(v);
            plan.not_green[static_cast<size_t>(v)] = 1;
        }
    }
    plan.base.assign(static_cast<size_t>(n), Color::Red);
    for (VertexId v = 0; v < n; ++v) {
        if (pinned[static_cast<size_t>(v)] >= 0)
            plan.base[static_cast<size_t>(v)] =
                static_cast<Color>(pinned[static_cast<size_t>(v)]);
        else
            plan.free_list.push_back(v);
    }

    const size_t free_count = plan.free_list.size();
    switch (budget.mode) {
        case TrialMode::Randomized: {
            uint64_t t = budget.trial_override
                             ? *budget.trial_override
                             : TrialBudget::trials_for(p_good, budget.delta);
            plan.trials = std::min<uint64_t>(t, budget.max_trials);
            break;
        }
        case TrialMode::ExhaustiveColorings: {
            double total = std::pow(static_cast<double>(colors),
                                    static_cast<double>(free_count));
            if (total > static_cast<double>(budget.max_trials))
                throw std::runtime_error(
                    "exhaustive coloring enumeration infeasible: " +
                    std::to_string(colors) + "^" + std::to_string(free_count) +
                    " colorings");
            plan.trials = static_cast<uint64_t>(total);
            break;
        }
        case TrialMode::UniversalFamily: {
            int t = std::min<int>(universal_t, static_cast<int>(free_count));
            if (t > 16)
                throw std::runtime_error(
                    "universal family infeasible: would need t = " + std::to_string(t));
            plan.stream = derandomized_colorings(static_cast<int>(free_count), t, colors,
                                                 budget.seed);
            plan.trials = plan.stream.size();
            break;
        }
    }
    return plan;
}

std::vector<VertexId> red_component(const Graph& g, VertexId s,
                                    const std::vector<Color>& color) {
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::deque<VertexId> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    std::vector<VertexId> comp{s};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (!seen[static_cast<size_t>(w)] && color[static_cast<size_t>(w)] == Color::Red) {
                seen[static_cast<size_t>(w)] = 1;
                comp.push_back(w);
                queue.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// BFS that never expands a sink vertex (sinks are reached as leaves);
// second phase attaches the region behind the sinks.
void sink_bfs(const Graph& g, VertexId s, const std::vector<char>& is_sink,
              std::vector<VertexId>& parent, std::vector<int>& dist,
              bool expand_behind) {
    const int n = g.vertex_count();
    parent.assign(static_cast<size_t>(n), -1);
    dist.assign(static_cast<size_t>(n), kInfDist);
    std::deque<VertexId> queue{s};
    parent[static_cast<size_t>(s)] = s;
    dist[static_cast<size_t>(s)] = 0;
    std::vector<VertexId> reached_sinks;
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        if (is_sink[static_cast<size_t>(u)]) {
            reached_sinks.push_back(u);
            continue;
        }
        for (VertexId w : g.neighbors(u))
            if (parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = u;
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
    if (!expand_behind) return;
    std::sort(reached_sinks.begin(), reached_sinks.end());
    queue.assign(reached_sinks.begin(), reached_sinks.end());
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = u;
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(w);
            }
    }
}

// Shortest-path tree whose paths stop at the protected vertices; whatever
// hides behind them is attached below so the tree still spans the graph.
Graph protected_bfs_tree(const Graph& g, VertexId s,
                         const std::vector<VertexId>& protected_set) {
    std::vector<char> sink(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : protected_set) sink[static_cast<size_t>(v)] = 1;
    std::vector<VertexId> parent;
    std::vector<int> dist;
    sink_bfs(g, s, sink, parent, dist, true);
    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, g.vertex_value(v));
        b.set_label(v, g.label(v));
        if (v != s && parent[static_cast<size_t>(v)] != -1)
            b.add_edge(parent[static_cast<size_t>(v)], v);
    }
    return b.build();
}

Strategy map_strategy(const Strategy& st, const std::vector<VertexId>& to_g,
                      VertexId skip_source) {
    Strategy out;
    for (const auto& round : st.rounds) {
        std::vector<VertexId> mapped;
        for (VertexId v : round) {
            VertexId w = to_g[static_cast<size_t>(v)];
            if (w == -1 || w == skip_source) continue;
            mapped.push_back(w);
        }
        out.rounds.push_back(std::move(mapped));
    }
    while (!out.rounds.empty() && out.rounds.back().empty()) out.rounds.pop_back();
    return out;
}

}  // namespace

uint64_t TrialBudget::trials_for(double p_good, double delta) {
    if (p_good <= 0 || delta <= 0 || delta >= 1) return 1;
    double t = std::ceil(std::log(1.0 / delta) / p_good);
    if (!std::isfinite(t) || t >= 9e18) return std::numeric_limits<uint64_t>::max();
    return std::max<uint64_t>(1, static_cast<uint64_t>(t));
}

std::string TrialBudget::mode_name() const {
    switch (mode) {
        case TrialMode::Randomized: return "randomized";
        case TrialMode::ExhaustiveColorings: return "exhaustive";
        case TrialMode::UniversalFamily: return "universal";
    }
    return "?";
}

namespace {

SolveResult solve_burnt_common(const Graph& g, VertexId s, int k,
                               const TrialBudget& budget, bool exact) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    g.check_vertex(s);
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");

    const Scenario sc = make_scenario(g, {s});
    PinSet pins{{s, Color::Red}};
    auto plan = make_plan(g, pins, 2, budget, std::pow(4.0, -k), 2 * k);

    SolveResult res;
    res.seed = budget.seed;
    res.mode = budget.mode_name();
    res.deterministic = budget.mode != TrialMode::Randomized;

    std::vector<Color> coloring;
    for (uint64_t trial = 0; trial < plan.trials; ++trial) {
        ++res.trials_used;
        plan.fill(trial, coloring);
        auto comp = red_component(g, s, coloring);
        int size = static_cast<int>(comp.size());
        if (exact ? size != k : size > k) continue;
        auto cand = neighbors_set(g, comp);
        if (cand.empty()) {
            // whole graph burnt red; only a game that never starts qualifies
            if (g.vertex_count() == 1) {
                res.decision = true;
                res.best_strategy = Strategy{};
                res.best_value = 0;
                return res;
            }
            continue;
        }
        auto order = order_and_verify(g, s, comp, cand);
        if (!order) continue;
        Strategy st = single_rounds(*order);
        GameOutcome out;
        try {
            out = simulate(sc, st);
        } catch (const invalid_strategy_error&) {
            continue;
        }
        if (exact && static_cast<int>(out.burnt.size()) != k) continue;
        if (static_cast<int>(out.burnt.size()) > k) continue;
        res.decision = true;
        res.best_strategy = std::move(st);
        res.best_value = outcome_value(g, out);
        return res;
    }
    return res;
}

}  // namespace

SolveResult solve_at_most_k_burnt(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget) {
    return solve_burnt_common(g, s, k, budget, false);
}

SolveResult solve_exactly_k_burnt(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget) {
    return solve_burnt_common(g, s, k, budget, true);
}

BurningTree min_bfs_burning_tree(const Graph& g, VertexId s,
                                 const std::vector<VertexId>& targets) {
    g.check_vertex(s);
    std::vector<char> sink(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId t : targets) {
        g.check_vertex(t);
        if (t == s) throw std::invalid_argument("target equals the source");
        sink[static_cast<size_t>(t)] = 1;
    }
    std::vector<VertexId> parent;
    std::vector<int> dist;
    sink_bfs(g, s, sink, parent, dist, false);

    BurningTree tree;
    tree.dist.assign(static_cast<size_t>(g.vertex_count()), kInfDist);
    std::set<VertexId> verts;
    std::set<std::pair<VertexId, VertexId>> edges;
    verts.insert(s);
    tree.dist[static_cast<size_t>(s)] = 0;
    for (VertexId t : targets) {
        if (parent[static_cast<size_t>(t)] == -1)
            throw std::invalid_argument("target " + g.label(t) +
                                        " unreachable without crossing other targets");
        for (VertexId v = t; v != s; v = parent[static_cast<size_t>(v)]) {
            VertexId p = parent[static_cast<size_t>(v)];
            verts.insert(v);
            edges.insert({std::min(p, v), std::max(p, v)});
            tree.dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(v)];
        }
    }
    tree.vertices.assign(verts.begin(), verts.end());
    tree.edges.assign(edges.begin(), edges.end());
    return tree;
}

SolveResult solve_max_k_protection_bounded_degree(const Graph& g, VertexId s, int k,
                                                  int degree_bound,
                                                  const TrialBudget& budget,
                                                  const PinSet& pins, int p, int h,
                                                  const std::vector<VertexId>& forbidden) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    if (p < 1 || h < 1) throw std::invalid_argument("p and h must be >= 1");
    g.check_vertex(s);
    if (g.max_degree() > degree_bound)
        throw std::invalid_argument("graph violates the degree bound " +
                                    std::to_string(degree_bound));
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");

    const int kk = (k * p + h - 1) / h;  // protection budget in vertices
    const Scenario sc = make_scenario(g, {s}, p, h);

    PinSet all_pins = pins;
    all_pins.emplace_back(s, Color::Red);
    double p_good = std::pow(3.0, -static_cast<double>(kk) * kk * (degree_bound + 1));
    int universal_t = kk + kk * kk * (degree_bound + 1);
    auto plan = make_plan(g, all_pins, 3, budget, p_good, universal_t, forbidden);

    SolveResult res;
    res.decision = true;
    res.seed = budget.seed;
    res.mode = budget.mode_name();
    res.deterministic = budget.mode != TrialMode::Randomized;
    res.best_value = outcome_value(g, simulate(sc, {}));
    res.best_strategy = Strategy{};

    // TODO: trials are independent (per-trial RNG streams); split this loop
    // over a thread pool with a best-so-far cell if larger d/k ever matter.
    std::vector<Color> coloring;
    for (uint64_t trial = 0; trial < plan.trials; ++trial) {
        ++res.trials_used;
        plan.fill(trial, coloring);
        auto comp = red_component(g, s, coloring);
        std::vector<VertexId> cand;
        for (VertexId v : neighbors_set(g, comp))
            if (coloring[static_cast<size_t>(v)] == Color::Green) cand.push_back(v);
        if (static_cast<int>(cand.size()) > kk) continue;
        auto order = order_and_verify_multi(g, s, comp, cand, p, h);
        if (!order) continue;
        GameOutcome out;
        try {
            out = simulate(sc, *order);
        } catch (const invalid_strategy_error&) {
            continue;
        }
        long long value = outcome_value(g, out);
        if (value > res.best_value) {
            res.best_value = value;
            res.best_strategy = std::move(*order);
        }
    }
    return res;
}

SolveResult solve_tree_max_k(const Graph& tree, VertexId s, int k, const PinSet& pins,
                             const TrialBudget& budget, const StrategyScore& score) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    tree.check_vertex(s);
    if (!is_tree(tree)) throw std::invalid_argument("tree solver requires a tree");

    const int n = tree.vertex_count();
    const Scenario sc = make_scenario(tree, {s});
    auto parent = bfs_parents(tree, s);
    auto depth = bfs_distances(tree, s);
    int max_depth = 0;
    for (int d : depth) max_depth = std::max(max_depth, d);

    // subtree weights bottom-up (children before parents in depth order)
    std::vector<VertexId> by_depth(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) by_depth[static_cast<size_t>(v)] = v;
    std::sort(by_depth.begin(), by_depth.end(), [&](VertexId a, VertexId b) {
        return depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)];
    });
    std::vector<long long> subtree(static_cast<size_t>(n), 0);
    for (VertexId v : by_depth) {
        subtree[static_cast<size_t>(v)] += tree.vertex_value(v);
        if (v != s) subtree[static_cast<size_t>(parent[static_cast<size_t>(v)])] +=
            subtree[static_cast<size_t>(v)];
    }

    StrategyScore eval = score;
    if (!eval)
        eval = [&](const Strategy& st) -> long long {
            try {
                return outcome_value(tree, simulate(sc, st));
            } catch (const invalid_strategy_error&) {
                return -1;
            }
        };

    PinSet all_pins = pins;
    all_pins.emplace_back(s, Color::Red);
    double p_good = std::pow(static_cast<double>(std::max(2, k)), -2.0 * k);
    auto plan = make_plan(tree, all_pins, 2, budget, p_good, 2 * k * (k + 1));

    SolveResult res;
    res.decision = true;
    res.seed = budget.seed;
    res.mode = budget.mode_name();
    res.deterministic = budget.mode != TrialMode::Randomized;
    res.best_strategy = Strategy{};
    res.best_value = eval(Strategy{});

    std::vector<Color> coloring;
    std::vector<char> red_chain(static_cast<size_t>(n));
    std::vector<char> picked_mark(static_cast<size_t>(n));
    for (uint64_t trial = 0; trial < plan.trials; ++trial) {
        ++res.trials_used;
        plan.fill(trial, coloring);

        // candidate <=> green with every ancestor red
        for (VertexId v : by_depth) red_chain[static_cast<size_t>(v)] = 0;
        red_chain[static_cast<size_t>(s)] = 1;
        std::vector<std::vector<VertexId>> level(static_cast<size_t>(max_depth) + 1);
        for (auto it = by_depth.rbegin(); it != by_depth.rend(); ++it) {
            VertexId v = *it;
            if (v == s) continue;
            VertexId pa = parent[static_cast<size_t>(v)];
            red_chain[static_cast<size_t>(v)] =
                red_chain[static_cast<size_t>(pa)] &&
                coloring[static_cast<size_t>(pa)] == Color::Red;
            if (red_chain[static_cast<size_t>(v)] &&
                coloring[static_cast<size_t>(v)] == Color::Green)
                level[static_cast<size_t>(depth[static_cast<size_t>(v)])].push_back(v);
        }

        std::vector<VertexId> picked;
        std::fill(picked_mark.begin(), picked_mark.end(), 0);
        auto under_picked = [&](VertexId v) {
            for (VertexId a = parent[static_cast<size_t>(v)];; a = parent[static_cast<size_t>(a)]) {
                if (picked_mark[static_cast<size_t>(a)]) return true;
                if (a == s) return false;
            }
        };
        for (int L = 1; L <= max_depth; ++L) {
            auto cands = level[static_cast<size_t>(L)];
            std::sort(cands.begin(), cands.end(), [&](VertexId a, VertexId b) {
                if (subtree[static_cast<size_t>(a)] != subtree[static_cast<size_t>(b)])
                    return subtree[static_cast<size_t>(a)] > subtree[static_cast<size_t>(b)];
                return a < b;
            });
            for (VertexId c : cands) {
                if (static_cast<int>(picked.size()) >= std::min(L, k)) break;
                if (under_picked(c)) continue;
                picked.push_back(c);
                picked_mark[static_cast<size_t>(c)] = 1;
            }
        }

        std::sort(picked.begin(), picked.end(), [&](VertexId a, VertexId b) {
            if (depth[static_cast<size_t>(a)] != depth[static_cast<size_t>(b)])
                return depth[static_cast<size_t>(a)] < depth[static_cast<size_t>(b)];
            return a < b;
        });
        Strategy st = single_rounds(picked);
        long long value = eval(st);
        if (value > res.best_value) {
            res.best_value = value;
            res.best_strategy = std::move(st);
        }
    }
    return res;
}

Case1Transform transform_case1(const Graph& g, const CycleInfo& info) {
    if (!is_unicyclic(g)) throw not_unicyclic_error("cycle contraction needs a unicyclic graph");
    auto merged = merge_vertices(g, info.cycle);
    VertexId c0p = merged.old_to_new[static_cast<size_t>(info.c0())];

    int base = merged.graph.vertex_count();
    int extra = 2 * g.vertex_count();
    GraphBuilder b(base + extra);
    for (VertexId v = 0; v < base; ++v) {
        b.set_vertex_value(v, merged.graph.vertex_value(v));
        b.set_label(v, v == c0p ? g.label(info.c0()) + "'" : merged.graph.label(v));
    }
    for (const Edge& e : merged.graph.edges()) b.add_edge(e.u, e.v, e.weight, e.value);

    Case1Transform out;
    for (int i = 0; i < extra; ++i) {
        VertexId pv = base + i;
        b.set_label(pv, "p" + std::to_string(i));
        b.add_edge(c0p, pv);
        out.pendants.push_back(pv);
    }
    out.tree = b.build();
    out.c0_prime = c0p;
    out.old_to_new = merged.old_to_new;
    return out;
}

Case2Transform transform_case2(const Graph& g, const CycleInfo& info) {
    if (!is_unicyclic(g)) throw not_unicyclic_error("case 2 needs a unicyclic graph");
    int r = info.r();
    VertexId a = info.cycle[static_cast<size_t>(r / 2)];
    VertexId c = info.cycle[static_cast<size_t>(r / 2 + 1)];

    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, g.vertex_value(v));
        b.set_label(v, g.label(v));
    }
    for (const Edge& e : g.edges()) {
        if ((e.u == std::min(a, c) && e.v == std::max(a, c))) continue;
        b.add_edge(e.u, e.v, e.weight, e.value);
    }

    Case2Transform out;
    out.tree = b.build();
    std::set<VertexId> red(info.path.begin(), info.path.end());
    red.insert(info.cycle.begin(), info.cycle.end());
    for (VertexId v : red) out.pins.emplace_back(v, Color::Red);
    return out;
}

Case3Transform transform_case3(const Graph& g, const CycleInfo& info, VertexId u1,
                               VertexId u2) {
    if (!is_unicyclic(g)) throw not_unicyclic_error("case 3 needs a unicyclic graph");
    auto pos_of = [&](VertexId u) {
        for (size_t i = 0; i < info.cycle.size(); ++i)
            if (info.cycle[i] == u) return static_cast<int>(i);
        return -1;
    };
    for (VertexId u : {u1, u2}) {
        if (u == info.c0())
            throw std::invalid_argument("protected cycle vertex must differ from c0");
        if (std::find(info.path.begin(), info.path.end(), u) != info.path.end())
            throw std::invalid_argument("protected cycle vertex lies on the source path");
        if (pos_of(u) < 0)
            throw std::invalid_argument(g.label(u) + " is not on the cycle");
    }

    const int n = g.vertex_count();
    Case3Transform out;

    std::set<VertexId> pin_red(info.path.begin(), info.path.end());

    if (u1 == u2) {
        // nothing is removed; the whole remaining cycle is assumed burnt
        GraphBuilder b(n);
        for (VertexId v = 0; v < n; ++v) {
            b.set_vertex_value(v, g.vertex_value(v));
            b.set_label(v, g.label(v));
        }
        for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, e.weight, e.value);
        out.graph = b.build();
        out.old_to_new.resize(static_cast<size_t>(n));
        out.new_to_old.resize(static_cast<size_t>(n));
        for (VertexId v = 0; v < n; ++v) {
            out.old_to_new[static_cast<size_t>(v)] = v;
            out.new_to_old[static_cast<size_t>(v)] = v;
        }
        for (VertexId v : info.cycle)
            if (v != u1) pin_red.insert(v);
        for (VertexId v : pin_red) out.pins.emplace_back(v, Color::Red);
        out.pins.emplace_back(u1, Color::Green);
        return out;
    }

    int i1 = pos_of(u1), i2 = pos_of(u2);
    if (i1 > i2) {
        std::swap(i1, i2);
        std::swap(u1, u2);
    }
    // the arc strictly between u1 and u2 avoiding position 0 is the far
    // side; the arc through c0 stays and is pinned red
    std::vector<VertexId> c_down, c_up;
    for (int i = i1 + 1; i < i2; ++i) c_down.push_back(info.cycle[static_cast<size_t>(i)]);
    for (int i = i2 + 1; i <= info.r(); ++i) c_up.push_back(info.cycle[static_cast<size_t>(i)]);
    for (int i = 0; i < i1; ++i) c_up.push_back(info.cycle[static_cast<size_t>(i)]);

    // delete the far arc plus every subtree hanging from it
    std::vector<char> cycle_member(static_cast<size_t>(n), 0);
    for (VertexId v : info.cycle) cycle_member[static_cast<size_t>(v)] = 1;
    std::vector<char> deleted(static_cast<size_t>(n), 0);
    std::deque<VertexId> queue;
    for (VertexId v : c_down) {
        deleted[static_cast<size_t>(v)] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u))
            if (!deleted[static_cast<size_t>(w)] && !cycle_member[static_cast<size_t>(w)]) {
                deleted[static_cast<size_t>(w)] = 1;
                queue.push_back(w);
            }
    }

    out.old_to_new.assign(static_cast<size_t>(n), -1);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!deleted[static_cast<size_t>(v)]) {
            out.old_to_new[static_cast<size_t>(v)] = next++;
            out.new_to_old.push_back(v);
        }
    GraphBuilder b(next);
    for (VertexId v = 0; v < n; ++v) {
        VertexId nv = out.old_to_new[static_cast<size_t>(v)];
        if (nv == -1) continue;
        b.set_vertex_value(nv, g.vertex_value(v));
        b.set_label(nv, g.label(v));
    }
    for (const Edge& e : g.edges()) {
        VertexId a = out.old_to_new[static_cast<size_t>(e.u)];
        VertexId c = out.old_to_new[static_cast<size_t>(e.v)];
        if (a == -1 || c == -1) continue;
        if (c_down.empty() && ((e.u == u1 && e.v == u2) || (e.u == u2 && e.v == u1)))
            continue;  // adjacent guesses cut the direct cycle edge
        b.add_edge(a, c, e.weight, e.value);
    }
    out.graph = b.build();

    pin_red.insert(c_up.begin(), c_up.end());
    for (VertexId v : pin_red)
        out.pins.emplace_back(out.old_to_new[static_cast<size_t>(v)], Color::Red);
    out.pins.emplace_back(out.old_to_new[static_cast<size_t>(u1)], Color::Green);
    out.pins.emplace_back(out.old_to_new[static_cast<size_t>(u2)], Color::Green);
    return out;
}

SolveResult solve_unicyclic_max_k(const Graph& g, VertexId s, int k,
                                  const TrialBudget& budget) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    g.check_vertex(s);
    auto maybe = find_unique_cycle(g, s);  // throws when m > n
    if (!maybe) throw std::invalid_argument("graph is a tree, not unicyclic");
    const CycleInfo info = *maybe;

    const Scenario sc = make_scenario(g, {s});
    SolveResult res;
    res.decision = true;
    res.seed = budget.seed;
    res.mode = budget.mode_name();
    res.deterministic = budget.mode != TrialMode::Randomized;
    res.best_strategy = Strategy{};
    res.best_value = outcome_value(g, simulate(sc, {}));

    auto score_on_g = [&](const Strategy& on_g) -> long long {
        try {
            return outcome_value(g, simulate(sc, on_g));
        } catch (const invalid_strategy_error&) {
            return -1;
        }
    };
    auto consider = [&](const Strategy& on_g) {
        long long v = score_on_g(on_g);
        if (v > res.best_value) {
            res.best_value = v;
            res.best_strategy = on_g;
        }
    };

    // case 1: the whole cycle survives behind c0'
    {
        auto t1 = transform_case1(g, info);
        std::vector<VertexId> to_g(static_cast<size_t>(t1.tree.vertex_count()), -1);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            VertexId nv = t1.old_to_new[static_cast<size_t>(v)];
            if (nv != t1.c0_prime) to_g[static_cast<size_t>(nv)] = v;
        }
        to_g[static_cast<size_t>(t1.c0_prime)] = info.c0();
        PinSet pins;
        for (VertexId pv : t1.pendants) pins.emplace_back(pv, Color::Red);
        VertexId src = t1.old_to_new[static_cast<size_t>(s)];
        auto sub = solve_tree_max_k(t1.tree, src, k, pins, budget,
                                    [&](const Strategy& st) {
                                        return score_on_g(map_strategy(st, to_g, s));
                                    });
        res.trials_used += sub.trials_used;
        if (sub.best_strategy) consider(map_strategy(*sub.best_strategy, to_g, s));
    }

    // case 2: the whole cycle burns
    {
        auto t2 = transform_case2(g, info);
        auto sub = solve_tree_max_k(t2.tree, s, k, t2.pins, budget, score_on_g);
        res.trials_used += sub.trials_used;
        if (sub.best_strategy) consider(*sub.best_strategy);
    }

    // case 3: one or two protected vertices on the cycle
    for (int i = 1; i <= info.r(); ++i) {
        for (int j = i; j <= info.r(); ++j) {
            VertexId u1 = info.cycle[static_cast<size_t>(i)];
            VertexId u2 = info.cycle[static_cast<size_t>(j)];
            if (i == j) {
                Graph tr = protected_bfs_tree(g, s, {u1});
                PinSet pins;
                std::set<VertexId> red(info.path.begin(), info.path.end());
                for (VertexId v : info.cycle)
                    if (v != u1) red.insert(v);
                for (VertexId v : red) pins.emplace_back(v, Color::Red);
                pins.emplace_back(u1, Color::Green);
                auto sub = solve_tree_max_k(tr, s, k, pins, budget, score_on_g);
                res.trials_used += sub.trials_used;
                if (sub.best_strategy) consider(*sub.best_strategy);
            } else {
                auto t3 = transform_case3(g, info, u1, u2);
                VertexId src = t3.old_to_new[static_cast<size_t>(s)];
                auto sub = solve_tree_max_k(
                    t3.graph, src, k, t3.pins, budget, [&](const Strategy& st) {
                        return score_on_g(map_strategy(st, t3.new_to_old, s));
                    });
                res.trials_used += sub.trials_used;
                if (sub.best_strategy)
                    consider(map_strategy(*sub.best_strategy, t3.new_to_old, s));
            }
        }
    }
    return res;
}

SolveResult solve_tree_plus_b(const Graph& g, VertexId s, int k, int b,
                              const TrialBudget& budget) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    g.check_vertex(s);
    const int n = g.vertex_count();
    if (b < 0 || g.edge_count() != n - 1 + b)
        throw std::invalid_argument("graph does not satisfy m = n - 1 + b");
    if (b > 3) throw std::invalid_argument("unsupported b (guard: b <= 3)");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    if (b == 0) return solve_tree_max_k(g, s, k, {}, budget);

    // cyclic core: union of the fundamental cycles of the non-tree edges
    auto parent = bfs_parents(g, s);
    auto depth = bfs_distances(g, s);
    std::set<VertexId> core;
    for (const Edge& e : g.edges()) {
        if (parent[static_cast<size_t>(e.u)] == e.v ||
            parent[static_cast<size_t>(e.v)] == e.u)
            continue;
        VertexId a = e.u, c = e.v;
        while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(c)]) {
            core.insert(a);
            a = parent[static_cast<size_t>(a)];
        }
        while (depth[static_cast<size_t>(c)] > depth[static_cast<size_t>(a)]) {
            core.insert(c);
            c = parent[static_cast<size_t>(c)];
        }
        while (a != c) {
            core.insert(a);
            core.insert(c);
            a = parent[static_cast<size_t>(a)];
            c = parent[static_cast<size_t>(c)];
        }
        core.insert(a);
    }

    const Scenario sc = make_scenario(g, {s});
    SolveResult res;
    res.decision = true;
    res.seed = budget.seed;
    res.mode = budget.mode_name();
    res.deterministic = budget.mode != TrialMode::Randomized;
    res.best_strategy = Strategy{};
    res.best_value = outcome_value(g, simulate(sc, {}));

    auto consider = [&](const Strategy& on_g) {
        try {
            long long v = outcome_value(g, simulate(sc, on_g));
            if (v > res.best_value) {
                res.best_value = v;
                res.best_strategy = on_g;
            }
        } catch (const invalid_strategy_error&) {
        }
    };

    std::vector<VertexId> core_list;
    for (VertexId v : core)
        if (v != s) core_list.push_back(v);

    // all core guesses of size <= 2b
    std::vector<std::vector<VertexId>> guesses{{}};
    std::vector<VertexId> cur;
    auto gen = [&](auto&& self, size_t from) -> void {
        if (static_cast<int>(cur.size()) == 2 * b) return;
        for (size_t i = from; i < core_list.size(); ++i) {
            cur.push_back(core_list[i]);
            guesses.push_back(cur);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    gen(gen, 0);

    for (const auto& guess : guesses) {
        std::vector<char> in_guess(static_cast<size_t>(n), 0);
        for (VertexId u : guess) in_guess[static_cast<size_t>(u)] = 1;

        // region still reachable when the guessed vertices hold
        std::vector<char> reach(static_cast<size_t>(n), 0);
        std::deque<VertexId> queue{s};
        reach[static_cast<size_t>(s)] = 1;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u))
                if (!reach[static_cast<size_t>(w)] && !in_guess[static_cast<size_t>(w)]) {
                    reach[static_cast<size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        bool touches = true;
        for (VertexId u : guess) {
            bool adj = false;
            for (VertexId w : g.neighbors(u))
                if (reach[static_cast<size_t>(w)]) adj = true;
            if (!adj) touches = false;
        }
        if (!touches) continue;  // a smaller guess covers this play

        std::vector<VertexId> old_to_new(static_cast<size_t>(n), -1);
        std::vector<VertexId> new_to_old;
        for (VertexId v = 0; v < n; ++v)
            if (reach[static_cast<size_t>(v)] || in_guess[static_cast<size_t>(v)]) {
                old_to_new[static_cast<size_t>(v)] = static_cast<VertexId>(new_to_old.size());
                new_to_old.push_back(v);
            }
        GraphBuilder hb(static_cast<int>(new_to_old.size()));
        for (VertexId v : new_to_old) {
            VertexId nv = old_to_new[static_cast<size_t>(v)];
            hb.set_vertex_value(nv, g.vertex_value(v));
            hb.set_label(nv, g.label(v));
        }
        for (const Edge& e : g.edges()) {
            VertexId a = old_to_new[static_cast<size_t>(e.u)];
            VertexId c = old_to_new[static_cast<size_t>(e.v)];
            if (a == -1 || c == -1) continue;
            if (in_guess[static_cast<size_t>(e.u)] && in_guess[static_cast<size_t>(e.v)])
                continue;  // both ends held: the edge never carries fire
            hb.add_edge(a, c, e.weight, e.value);
        }
        Graph h = hb.build();
        VertexId src = old_to_new[static_cast<size_t>(s)];

        std::vector<VertexId> guess_new;
        for (VertexId u : guess) guess_new.push_back(old_to_new[static_cast<size_t>(u)]);
        Graph tr = protected_bfs_tree(h, src, guess_new);

        PinSet pins;
        for (VertexId v : core) {
            VertexId nv = old_to_new[static_cast<size_t>(v)];
            if (nv == -1) continue;
            pins.emplace_back(nv, in_guess[static_cast<size_t>(v)] ? Color::Green
                                                                   : Color::Red);
        }
        auto sub = solve_tree_max_k(tr, src, k, pins, budget, [&](const Strategy& st) {
            Strategy on_g = map_strategy(st, new_to_old, s);
            try {
                return outcome_value(g, simulate(sc, on_g));
            } catch (const invalid_strategy_error&) {
                return -1ll;
            }
        });
        res.trials_used += sub.trials_used;
        if (sub.best_strategy) consider(map_strategy(*sub.best_strategy, new_to_old, s));
    }
    return res;
}

}  // namespace firefighter
