#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "firefighter/generator.hpp"
#include "firefighter/graph_io.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/solvers.hpp"

using namespace firefighter;

namespace {

TrialBudget exhaustive() {
    TrialBudget b;
    b.mode = TrialMode::ExhaustiveColorings;
    return b;
}

TrialBudget randomized(uint64_t seed = 1) {
    TrialBudget b;
    b.seed = seed;
    return b;
}

}  // namespace

TEST_CASE("at-most-k decisions on the fixtures") {
    auto p4 = make_fixture("P4");
    auto yes = solve_at_most_k_burnt(p4.graph, 0, 1, exhaustive());
    CHECK(yes.decision);
    REQUIRE(yes.best_strategy.has_value());
    CHECK(yes.best_strategy->protected_vertices() == std::vector<VertexId>{1});

    auto spider = make_fixture("SPIDER");
    CHECK(!solve_at_most_k_burnt(spider.graph, 0, 1, exhaustive()).decision);
    auto two = solve_at_most_k_burnt(spider.graph, 0, 2, exhaustive());
    CHECK(two.decision);
    auto out = simulate(make_scenario(spider.graph, {0}), *two.best_strategy);
    CHECK(out.burnt.size() <= 2);
}

TEST_CASE("exactly-k decisions on the fixtures") {
    auto p4 = make_fixture("P4");
    CHECK(solve_exactly_k_burnt(p4.graph, 0, 1, exhaustive()).decision);
    auto three = solve_exactly_k_burnt(p4.graph, 0, 3, exhaustive());
    CHECK(three.decision);
    auto out = simulate(make_scenario(p4.graph, {0}), *three.best_strategy);
    CHECK(out.burnt.size() == 3);
    CHECK(!solve_exactly_k_burnt(p4.graph, 0, 4, exhaustive()).decision);
}

TEST_CASE("witnesses stay within k protections") {
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + trial % 6;
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, 600 + trial);
        int k = 1 + trial % 3;
        auto r = solve_at_most_k_burnt(inst.graph, inst.sources.front(), k, exhaustive());
        if (r.decision) CHECK(r.best_strategy->protection_count() <= k);
    }
}

TEST_CASE("solver input guards") {
    auto p4 = make_fixture("P4");
    CHECK_THROWS_AS(solve_at_most_k_burnt(p4.graph, 0, 0, exhaustive()),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_exactly_k_burnt(p4.graph, 0, -1, exhaustive()),
                    std::invalid_argument);
    GraphBuilder disc(4);
    disc.add_edge(0, 1).add_edge(2, 3);
    CHECK_THROWS_AS(solve_at_most_k_burnt(disc.build(), 0, 1, exhaustive()),
                    std::invalid_argument);

    auto uni = make_fixture("UNI6");
    auto info = *find_unique_cycle(uni.graph, 0);
    CHECK_THROWS_AS(transform_case1(p4.graph, info), not_unicyclic_error);
    CHECK_THROWS_AS(transform_case2(p4.graph, info), not_unicyclic_error);
}

TEST_CASE("randomized mode finds easy instances") {
    auto p4 = make_fixture("P4");
    auto r = solve_at_most_k_burnt(p4.graph, 0, 1, randomized(5));
    CHECK(r.decision);
    CHECK(!r.deterministic);
    CHECK(r.trials_used >= 1);
}

TEST_CASE("burning trees on the fixtures") {
    auto p4 = make_fixture("P4");
    auto t1 = min_bfs_burning_tree(p4.graph, 0, {1});
    CHECK(t1.vertices == std::vector<VertexId>{0, 1});
    CHECK(t1.edges.size() == 1);

    auto spider = make_fixture("SPIDER");
    auto t2 = min_bfs_burning_tree(spider.graph, 0,
                                   {spider.graph.resolve("a1"), spider.graph.resolve("b2")});
    CHECK(t2.vertices == std::vector<VertexId>{0, spider.graph.resolve("a1"),
                                               spider.graph.resolve("b1"),
                                               spider.graph.resolve("b2")});
    CHECK(t2.edges.size() == 3);

    auto star = make_fixture("STAR4");
    auto t3 = min_bfs_burning_tree(star.graph, 0,
                                   {star.graph.resolve("l1"), star.graph.resolve("l2")});
    CHECK(t3.vertices.size() == 3);

    // a target walled off by the other targets is an error
    GraphBuilder b(3);
    b.add_edge(0, 1).add_edge(1, 2);
    Graph chain = b.build();
    CHECK_THROWS_AS(min_bfs_burning_tree(chain, 0, {1, 2}), std::invalid_argument);
}

TEST_CASE("degree-bounded maximum protection on the fixtures") {
    auto p4 = make_fixture("P4");
    auto r1 = solve_max_k_protection_bounded_degree(p4.graph, 0, 1, 2, exhaustive());
    CHECK(r1.best_value == 3);

    auto star = make_fixture("STAR4");
    auto r2 = solve_max_k_protection_bounded_degree(star.graph, 0, 1, 4, exhaustive());
    CHECK(r2.best_value == 1);

    auto spider = make_fixture("SPIDER");
    auto r3 = solve_max_k_protection_bounded_degree(spider.graph, 0, 2, 2, exhaustive());
    CHECK(r3.best_value == 3);

    CHECK_THROWS_AS(solve_max_k_protection_bounded_degree(star.graph, 0, 1, 2, exhaustive()),
                    std::invalid_argument);  // degree bound violated
}

TEST_CASE("reported values re-simulate exactly") {
    for (int trial = 0; trial < 30; ++trial) {
        auto inst = generate_instance(InstanceKind::BoundedDegree, 5 + trial % 5, 3, 0,
                                      800 + trial);
        auto r = solve_max_k_protection_bounded_degree(inst.graph, inst.sources.front(),
                                                       1 + trial % 2, 3, exhaustive());
        REQUIRE(r.best_strategy.has_value());
        auto out = simulate(make_scenario(inst.graph, inst.sources), *r.best_strategy);
        CHECK(outcome_value(inst.graph, out) == r.best_value);
    }
}

TEST_CASE("tree solver on the fixtures") {
    auto p4 = make_fixture("P4");
    CHECK(solve_tree_max_k(p4.graph, 0, 1, {}, exhaustive()).best_value == 3);

    auto spider = make_fixture("SPIDER");
    CHECK(solve_tree_max_k(spider.graph, 0, 2, {}, exhaustive()).best_value == 3);

    // with a1 off the table the best play is b1 first, then a2 behind the
    // burning a1 (oracle-confirmed value)
    PinSet forbid_a1{{spider.graph.resolve("a1"), Color::Red}};
    auto pinned = solve_tree_max_k(spider.graph, 0, 2, forbid_a1, exhaustive());
    CHECK(pinned.best_value == 3);
    auto truth = brute_force_optimal(make_scenario(spider.graph, {0}), 2, {},
                                     {spider.graph.resolve("a1")});
    CHECK(pinned.best_value == truth.best_value);
    for (VertexId v : pinned.best_strategy->protected_vertices())
        CHECK(v != spider.graph.resolve("a1"));

    PinSet conflict{{1, Color::Red}, {1, Color::Green}};
    CHECK_THROWS_AS(solve_tree_max_k(p4.graph, 0, 1, conflict, exhaustive()),
                    std::invalid_argument);

    auto uni = make_fixture("UNI6");
    CHECK_THROWS_AS(solve_tree_max_k(uni.graph, 0, 1, {}, exhaustive()),
                    std::invalid_argument);  // not a tree
}

TEST_CASE("cycle contraction produces the loaded tree") {
    auto uni = make_fixture("UNI6");
    auto info = *find_unique_cycle(uni.graph, 0);
    auto t1 = transform_case1(uni.graph, info);
    CHECK(t1.tree.vertex_count() == 15);  // 3n - r
    CHECK(is_tree(t1.tree));
    CHECK(t1.pendants.size() == 12);
    CHECK(t1.tree.degree(t1.c0_prime) >= 12);

    auto c4 = make_fixture("C4");
    auto ic = *find_unique_cycle(c4.graph, 0);
    auto t2 = transform_case1(c4.graph, ic);
    CHECK(t2.tree.vertex_count() == 9);
    CHECK(is_tree(t2.tree));
}

TEST_CASE("the burnt-cycle transform deletes the far edge") {
    auto uni = make_fixture("UNI6");
    auto info = *find_unique_cycle(uni.graph, 0);
    auto t = transform_case2(uni.graph, info);
    CHECK(is_tree(t.tree));
    CHECK(!t.tree.has_edge(uni.graph.resolve("c1"), uni.graph.resolve("c2")));
    CHECK(is_connected(t.tree));
    std::set<VertexId> red;
    for (auto& [v, c] : t.pins) {
        CHECK(c == Color::Red);
        red.insert(v);
    }
    CHECK(red == std::set<VertexId>{0, 1, 2, 3, 4});

    auto c4 = make_fixture("C4");
    auto ic = *find_unique_cycle(c4.graph, 0);
    auto tc = transform_case2(c4.graph, ic);
    CHECK(!tc.tree.has_edge(1, 2));
    CHECK(is_connected(tc.tree));
}

TEST_CASE("the two-guess transform removes the far arc") {
    auto uni = make_fixture("UNI6");
    auto info = *find_unique_cycle(uni.graph, 0);

    auto t = transform_case3(uni.graph, info, uni.graph.resolve("c1"),
                             uni.graph.resolve("c3"));
    CHECK(t.graph.vertex_count() == 4);  // c2 and d removed
    CHECK(is_tree(t.graph));
    int green = 0;
    for (auto& [v, c] : t.pins)
        if (c == Color::Green) ++green;
    CHECK(green == 2);

    auto same = transform_case3(uni.graph, info, uni.graph.resolve("c2"),
                                uni.graph.resolve("c2"));
    CHECK(same.graph.vertex_count() == 6);  // nothing removed
    CHECK(same.graph.edge_count() == 6);
    std::set<VertexId> red;
    for (auto& [v, c] : same.pins)
        if (c == Color::Red) red.insert(v);
    CHECK(red == std::set<VertexId>{uni.graph.resolve("s"), uni.graph.resolve("c0"),
                                    uni.graph.resolve("c1"), uni.graph.resolve("c3")});

    auto c4 = make_fixture("C4");
    auto ic = *find_unique_cycle(c4.graph, 0);
    auto tc = transform_case3(c4.graph, ic, 1, 3);
    CHECK(tc.graph.vertex_count() == 3);

    CHECK_THROWS_AS(transform_case3(uni.graph, info, uni.graph.resolve("c0"),
                                    uni.graph.resolve("c1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(transform_case3(uni.graph, info, uni.graph.resolve("s"),
                                    uni.graph.resolve("c1")),
                    std::invalid_argument);
}

TEST_CASE("unicyclic solver on the fixtures") {
    auto uni = make_fixture("UNI6");
    auto r = solve_unicyclic_max_k(uni.graph, 0, 1, exhaustive());
    CHECK(r.best_value == 5);
    REQUIRE(r.best_strategy.has_value());
    CHECK(r.best_strategy->protected_vertices() ==
          std::vector<VertexId>{uni.graph.resolve("c0")});

    auto c4 = make_fixture("C4");
    CHECK(solve_unicyclic_max_k(c4.graph, 0, 1, exhaustive()).best_value == 1);
    CHECK(solve_unicyclic_max_k(c4.graph, 0, 2, exhaustive()).best_value == 2);

    auto p4 = make_fixture("P4");
    CHECK_THROWS_AS(solve_unicyclic_max_k(p4.graph, 0, 1, exhaustive()),
                    std::invalid_argument);
}

TEST_CASE("tree-plus-b solver delegates, matches, and generalizes") {
    auto p4 = make_fixture("P4");
    CHECK(solve_tree_plus_b(p4.graph, 0, 1, 0, exhaustive()).best_value == 3);

    auto uni = make_fixture("UNI6");
    auto b1 = solve_tree_plus_b(uni.graph, 0, 1, 1, exhaustive());
    CHECK(b1.best_value == 5);
    CHECK(b1.best_value == solve_unicyclic_max_k(uni.graph, 0, 1, exhaustive()).best_value);

    // UNI6 plus the chord (c1, c3): protecting c0 still cuts everything
    GraphBuilder gb(6);
    for (VertexId v = 0; v < 6; ++v) gb.set_label(v, uni.graph.label(v));
    for (const Edge& e : uni.graph.edges()) gb.add_edge(e.u, e.v);
    gb.add_edge(uni.graph.resolve("c1"), uni.graph.resolve("c3"));
    Graph two = gb.build();
    auto truth = brute_force_optimal(make_scenario(two, {0}), 1);
    CHECK(truth.best_value == 5);
    auto b2 = solve_tree_plus_b(two, 0, 1, 2, exhaustive());
    CHECK(b2.best_value == 5);

    CHECK_THROWS_AS(solve_tree_plus_b(uni.graph, 0, 1, 2, exhaustive()),
                    std::invalid_argument);  // m does not match b
    GraphBuilder big(6);
    for (VertexId v = 1; v < 6; ++v) big.add_edge(0, v);
    big.add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(4, 5);
    CHECK_THROWS_AS(solve_tree_plus_b(big.build(), 0, 1, 4, exhaustive()),
                    std::invalid_argument);  // b over the guard
}

TEST_CASE("tree-plus-b handles b up to the guard") {
    for (int trial = 0; trial < 6; ++trial) {
        auto inst = generate_instance(InstanceKind::TreePlusB, 7, 0, 3, 6200 + trial);
        VertexId s = inst.sources.front();
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), 2);
        auto got = solve_tree_plus_b(inst.graph, s, 2, 3, exhaustive());
        CHECK(got.best_value == truth.best_value);
    }
}

TEST_CASE("universal mode drives the tree solver on small trees") {
    auto p4 = make_fixture("P4");
    TrialBudget b;
    b.mode = TrialMode::UniversalFamily;
    auto r = solve_tree_max_k(p4.graph, 0, 1, {}, b);
    CHECK(r.best_value == 3);
    CHECK(r.deterministic);
}

TEST_CASE("exhaustive mode equals the oracle on random unicyclic instances") {
    for (int trial = 0; trial < 12; ++trial) {
        auto inst = generate_instance(InstanceKind::Unicyclic, 5 + trial % 6, 0, 0,
                                      1500 + trial);
        int k = 1 + trial % 2;
        VertexId s = inst.sources.front();
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), k);
        auto got = solve_unicyclic_max_k(inst.graph, s, k, exhaustive());
        CHECK(got.best_value == truth.best_value);
    }
}

TEST_CASE("identical seeds reproduce identical results") {
    auto inst = generate_instance(InstanceKind::BoundedDegree, 9, 3, 0, 3100);
    VertexId s = inst.sources.front();
    auto run = [&](uint64_t seed) {
        TrialBudget b = randomized(seed);
        b.trial_override = 4000;
        auto r = solve_max_k_protection_bounded_degree(inst.graph, s, 2, 3, b);
        return std::make_tuple(r.best_value, r.trials_used,
                               r.best_strategy ? r.best_strategy->to_text(inst.graph)
                                               : std::string());
    };
    CHECK(run(7) == run(7));
    auto a = solve_at_most_k_burnt(inst.graph, s, 2, randomized(7));
    auto b = solve_at_most_k_burnt(inst.graph, s, 2, randomized(7));
    CHECK(a.decision == b.decision);
    CHECK(a.trials_used == b.trials_used);
}

TEST_CASE("multi-round protection via the translated budget") {
    auto star = make_fixture("STAR4");
    // two protections per round save two leaves in a single round
    auto r = solve_max_k_protection_bounded_degree(star.graph, 0, 1, 4, exhaustive(), {},
                                                   2, 1);
    CHECK(r.best_value == 2);
    auto truth = brute_force_optimal(make_scenario(star.graph, {0}, 2, 1), 1);
    CHECK(truth.best_value == 2);
}
