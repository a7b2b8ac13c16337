#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "firefighter/game.hpp"
#include "firefighter/generator.hpp"
#include "firefighter/graph_io.hpp"

using namespace firefighter;

namespace {

std::vector<VertexId> names(const Graph& g, std::initializer_list<const char*> ns) {
    std::vector<VertexId> out;
    for (const char* n : ns) out.push_back(g.resolve(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("basic plays on the fixtures") {
    auto p4 = make_fixture("P4");
    auto sc = make_scenario(p4.graph, p4.sources);
    auto out = simulate(sc, Strategy::parse(p4.graph, "a"));
    CHECK(out.burnt == names(p4.graph, {"s"}));
    CHECK(out.saved == names(p4.graph, {"a", "b", "c"}));
    CHECK(out.rounds_played == 1);
    CHECK(outcome_value(p4.graph, out) == 3);

    auto star = make_fixture("STAR4");
    auto so = simulate(make_scenario(star.graph, star.sources),
                       Strategy::parse(star.graph, "l1"));
    CHECK(so.burnt == names(star.graph, {"s", "l2", "l3", "l4"}));
    CHECK(so.saved == names(star.graph, {"l1"}));

    auto spider = make_fixture("SPIDER");
    auto sp = simulate(make_scenario(spider.graph, spider.sources),
                       Strategy::parse(spider.graph, "a1,b2"));
    CHECK(sp.burnt == names(spider.graph, {"s", "b1"}));
    CHECK(sp.saved == names(spider.graph, {"a1", "a2", "b2"}));
}

TEST_CASE("weighted edges delay the fire") {
    GraphBuilder b(3);
    b.set_label(0, "s").set_label(1, "a").set_label(2, "b");
    b.add_edge(0, 1, 2).add_edge(1, 2, 1);
    Graph g = b.build();
    auto out = simulate(make_scenario(g, {0}), {});
    CHECK(out.burn_round[1] == 2);
    CHECK(out.burn_round[2] == 3);
}

TEST_CASE("zero-weight edges burn within the same instant") {
    GraphBuilder b(4);
    b.add_edge(0, 1, 1).add_edge(1, 2, 0).add_edge(2, 3, 0);
    Graph g = b.build();
    auto out = simulate(make_scenario(g, {0}), {});
    CHECK(out.burn_round[1] == 1);
    CHECK(out.burn_round[2] == 1);
    CHECK(out.burn_round[3] == 1);

    // protected vertices block the instant closure
    auto blocked = simulate(make_scenario(g, {0}), Strategy::parse(g, "2"));
    CHECK(blocked.burn_round[1] == 1);
    CHECK(blocked.burn_round[2] == kNever);
    CHECK(blocked.burn_round[3] == kNever);
}

TEST_CASE("weights and spread depth compose as time units per round") {
    // s-a weight 3, then unit edge a-b; h=2 grants two weight units a round
    GraphBuilder gb(3);
    gb.add_edge(0, 1, 3).add_edge(1, 2, 1);
    Graph g = gb.build();
    auto out = simulate(make_scenario(g, {0}, 1, 2), {});
    CHECK(out.burn_round[1] == 2);  // arrives at time 3, inside round 2
    CHECK(out.burn_round[2] == 2);  // time 4, still round 2
    CHECK(out.rounds_played == 2);
}

TEST_CASE("spread depth h compresses rounds") {
    auto p4 = make_fixture("P4");
    auto out = simulate(make_scenario(p4.graph, p4.sources, 1, 2), {});
    CHECK(out.burn_round[p4.graph.resolve("a")] == 1);
    CHECK(out.burn_round[p4.graph.resolve("b")] == 1);
    CHECK(out.burn_round[p4.graph.resolve("c")] == 2);
    CHECK(out.rounds_played == 2);
}

TEST_CASE("multi-protection rounds") {
    auto star = make_fixture("STAR4");
    auto sc = make_scenario(star.graph, star.sources, 2, 1);
    auto out = simulate(sc, Strategy::parse(star.graph, "l1;l2"));
    CHECK(out.saved == names(star.graph, {"l1", "l2"}));

    CHECK_THROWS_AS(simulate(sc, Strategy::parse(star.graph, "l1;l2;l3")),
                    invalid_strategy_error);
}

TEST_CASE("invalid strategies carry the offending round") {
    auto p4 = make_fixture("P4");
    auto sc = make_scenario(p4.graph, p4.sources);
    try {
        simulate(sc, Strategy::parse(p4.graph, ",,a"));  // a burns in round 1
        FAIL("expected invalid_strategy_error");
    } catch (const invalid_strategy_error& e) {
        CHECK(e.round == 3);
    }
    CHECK_THROWS_AS(simulate(sc, Strategy::parse(p4.graph, "s")), invalid_strategy_error);
    CHECK_THROWS_AS(simulate(sc, Strategy::parse(p4.graph, "b,b")), invalid_strategy_error);
}

TEST_CASE("late protection with skip rounds") {
    auto p4 = make_fixture("P4");
    auto out = simulate(make_scenario(p4.graph, p4.sources),
                        Strategy::parse(p4.graph, ",,c"));
    CHECK(out.burnt == names(p4.graph, {"s", "a", "b"}));
    CHECK(out.saved == names(p4.graph, {"c"}));
}

TEST_CASE("strategies longer than the game are truncated with a flag") {
    auto p4 = make_fixture("P4");
    auto out = simulate(make_scenario(p4.graph, p4.sources),
                        Strategy::parse(p4.graph, "a,b"));
    CHECK(out.strategy_truncated);
    CHECK(out.saved == names(p4.graph, {"a", "b", "c"}));
}

TEST_CASE("outcome values include vertex and edge values") {
    auto p4 = make_fixture("P4");
    {
        GraphBuilder b(4);
        for (int i = 0; i < 4; ++i) b.set_label(i, p4.graph.label(i));
        b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
        b.set_vertex_value(3, 5);
        Graph g = b.build();
        auto out = simulate(make_scenario(g, {0}), Strategy::parse(g, "a"));
        CHECK(outcome_value(g, out) == 7);
    }
    {
        GraphBuilder b(4);
        for (int i = 0; i < 4; ++i) b.set_label(i, p4.graph.label(i));
        b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3, 1, 2);
        Graph g = b.build();
        auto out = simulate(make_scenario(g, {0}), Strategy::parse(g, "a"));
        CHECK(outcome_value(g, out) == 5);  // b, c saved plus the edge between them
    }
}

TEST_CASE("multiple sources ignite together") {
    auto star = make_fixture("STAR4");
    auto sc = make_scenario(star.graph, names(star.graph, {"l1", "l2"}));
    auto out = simulate(sc, {});
    CHECK(out.burn_round[star.graph.resolve("l1")] == 0);
    CHECK(out.burn_round[star.graph.resolve("l2")] == 0);
    CHECK(out.burn_round[star.graph.resolve("s")] == 1);
    CHECK(out.burn_round[star.graph.resolve("l3")] == 2);
}

TEST_CASE("strategy text round-trips") {
    auto spider = make_fixture("SPIDER");
    Strategy st = Strategy::parse(spider.graph, "a1;b1,b2,,a2");
    CHECK(st.rounds.size() == 4);
    CHECK(st.rounds[0].size() == 2);
    CHECK(st.rounds[2].empty());
    Strategy again = Strategy::parse(spider.graph, st.to_text(spider.graph));
    CHECK(again.rounds == st.rounds);
}

TEST_CASE("simulation is deterministic and monotone under extra protection") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, 900 + trial);
        auto sc = make_scenario(inst.graph, inst.sources);
        VertexId s = inst.sources.front();

        // random valid strategy: protect a fresh unburnt vertex or skip
        Strategy st;
        {
            auto probe = [&](const Strategy& candidate) {
                return simulate(sc, candidate);
            };
            Strategy partial;
            for (int round = 1; round <= 3; ++round) {
                auto now = probe(partial);
                std::vector<VertexId> open;
                for (VertexId v : now.saved)
                    if (now.protect_round[v] == kNever && v != s) open.push_back(v);
                partial.rounds.emplace_back();
                if (!open.empty() && rng() % 3 != 0) {
                    VertexId pick = open[rng() % open.size()];
                    // only protect if it survives until this round unprotected
                    if (now.burn_round[pick] == kNever) partial.rounds.back().push_back(pick);
                }
            }
            st = partial;
        }

        auto out1 = simulate(sc, st);
        auto out2 = simulate(sc, st);
        CHECK(out1.burnt == out2.burnt);
        CHECK(out1.burn_round == out2.burn_round);

        // unit semantics: burn rounds match bfs layers when nothing is protected
        auto empty = simulate(sc, {});
        auto dist = bfs_distances(inst.graph, s);
        for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
            CHECK(empty.burn_round[v] == dist[v]);

        // adding one more protected vertex never grows the burnt set size
        std::vector<VertexId> open;
        for (VertexId v : out1.saved)
            if (out1.protect_round[v] == kNever && v != s) open.push_back(v);
        auto frontier = simulate(sc, st);
        for (VertexId v : open) {
            Strategy more = st;
            more.rounds.push_back({v});
            if (frontier.burn_round[v] != kNever) continue;
            auto out3 = simulate(sc, more);
            CHECK(out3.burnt.size() <= out1.burnt.size());
        }
    }
}

namespace {

// independent reference for unit-weight games: protect, then burn h layers
GameOutcome layered_reference(const Scenario& sc, const Strategy& st) {
    const Graph& g = sc.graph;
    const int n = g.vertex_count();
    GameOutcome out;
    out.burn_round.assign(static_cast<size_t>(n), kNever);
    out.protect_round.assign(static_cast<size_t>(n), kNever);
    std::vector<char> burnt(static_cast<size_t>(n), 0), prot(static_cast<size_t>(n), 0);
    for (VertexId s : sc.sources) {
        burnt[static_cast<size_t>(s)] = 1;
        out.burn_round[static_cast<size_t>(s)] = 0;
    }
    auto can_spread = [&] {
        for (VertexId u = 0; u < n; ++u)
            if (burnt[static_cast<size_t>(u)])
                for (VertexId w : g.neighbors(u))
                    if (!burnt[static_cast<size_t>(w)] && !prot[static_cast<size_t>(w)])
                        return true;
        return false;
    };
    int round = 0;
    while (can_spread()) {
        ++round;
        if (static_cast<size_t>(round) <= st.rounds.size())
            for (VertexId v : st.rounds[static_cast<size_t>(round - 1)]) {
                REQUIRE(!burnt[static_cast<size_t>(v)]);
                prot[static_cast<size_t>(v)] = 1;
                out.protect_round[static_cast<size_t>(v)] = round;
            }
        for (int layer = 0; layer < sc.spread_depth; ++layer) {
            std::vector<VertexId> next;
            for (VertexId u = 0; u < n; ++u)
                if (burnt[static_cast<size_t>(u)])
                    for (VertexId w : g.neighbors(u))
                        if (!burnt[static_cast<size_t>(w)] && !prot[static_cast<size_t>(w)])
                            next.push_back(w);
            for (VertexId w : next)
                if (!burnt[static_cast<size_t>(w)]) {
                    burnt[static_cast<size_t>(w)] = 1;
                    out.burn_round[static_cast<size_t>(w)] = round;
                }
        }
    }
    out.rounds_played = round;
    for (VertexId v = 0; v < n; ++v)
        (burnt[static_cast<size_t>(v)] ? out.burnt : out.saved).push_back(v);
    return out;
}

}  // namespace

TEST_CASE("simulator matches an independent layered reference on unit graphs") {
    std::mt19937_64 rng(21);
    int compared = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, 5000 + trial);
        int p = 1 + static_cast<int>(rng() % 2);
        int h = 1 + static_cast<int>(rng() % 2);
        auto sc = make_scenario(inst.graph, inst.sources, p, h);

        // grow a random strategy that only protects vertices still alive
        Strategy st;
        for (int round = 1; round <= 3; ++round) {
            auto now = simulate(sc, st);
            std::vector<VertexId> open;
            for (VertexId v : now.saved)
                if (now.protect_round[static_cast<size_t>(v)] == kNever &&
                    v != inst.sources.front())
                    open.push_back(v);
            st.rounds.emplace_back();
            for (int i = 0; i < p && !open.empty(); ++i) {
                VertexId pick = open[rng() % open.size()];
                if (now.burn_round[static_cast<size_t>(pick)] != kNever) continue;
                open.erase(std::find(open.begin(), open.end(), pick));
                st.rounds.back().push_back(pick);
            }
        }

        auto got = simulate(sc, st);
        auto want = layered_reference(sc, st);
        CHECK(got.burnt == want.burnt);
        CHECK(got.burn_round == want.burn_round);
        CHECK(got.rounds_played == want.rounds_played);

        // outcome invariants: burnt/saved partition, protected is saved
        CHECK(got.burnt.size() + got.saved.size() == static_cast<size_t>(n));
        for (VertexId v : got.burnt)
            CHECK(got.protect_round[static_cast<size_t>(v)] == kNever);
        ++compared;
    }
    CHECK(compared == 120);
}

TEST_CASE("burn rounds respect distance over spread depth") {
    for (int trial = 0; trial < 20; ++trial) {
        auto inst = generate_instance(InstanceKind::BoundedDegree, 8, 7, 0, 1200 + trial);
        for (int h = 1; h <= 3; ++h) {
            auto sc = make_scenario(inst.graph, inst.sources, 1, h);
            auto out = simulate(sc, {});
            auto dist = bfs_distances(inst.graph, inst.sources.front());
            for (VertexId v : out.burnt)
                CHECK(out.burn_round[v] >= (dist[v] + h - 1) / h);
        }
    }
}
