#include "firefighter/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "firefighter/generator.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/reductions.hpp"
#include "firefighter/solvers.hpp"
#include "firefighter/universal.hpp"
#include "firefighter/verify.hpp"

namespace firefighter::acceptance {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

struct Suite {
    std::vector<ParsedInstance> instances;
    std::vector<int> ks;
};

// connected graphs, n in 4..10, k cycling 1..3
Suite suite_burnt(int count, uint64_t seed0) {
    Suite s;
    for (int i = 0; i < count; ++i) {
        int n = 4 + i % 7;
        s.instances.push_back(
            generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, seed0 + i));
        s.ks.push_back(1 + i % 3);
    }
    return s;
}

// max degree 3, n in 4..10, k cycling 1..2
Suite suite_degree(int count, uint64_t seed0) {
    Suite s;
    for (int i = 0; i < count; ++i) {
        int n = 4 + i % 7;
        s.instances.push_back(
            generate_instance(InstanceKind::BoundedDegree, n, 3, 0, seed0 + i));
        s.ks.push_back(1 + i % 2);
    }
    return s;
}

// unicyclic, n in 4..12, k cycling 1..3
Suite suite_unicyclic(int count, uint64_t seed0) {
    Suite s;
    for (int i = 0; i < count; ++i) {
        int n = 4 + i % 9;
        s.instances.push_back(
            generate_instance(InstanceKind::Unicyclic, n, 0, 0, seed0 + i));
        s.ks.push_back(1 + i % 3);
    }
    return s;
}

TrialBudget exhaustive_budget() {
    TrialBudget b;
    b.mode = TrialMode::ExhaustiveColorings;
    return b;
}

TrialBudget randomized_budget(uint64_t seed) {
    TrialBudget b;
    b.mode = TrialMode::Randomized;
    b.delta = 0.01;
    b.seed = seed;
    return b;
}

TrialBudget universal_budget(uint64_t seed) {
    TrialBudget b;
    b.mode = TrialMode::UniversalFamily;
    b.seed = seed;
    return b;
}

std::string fraction(int good, int total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

CriterionResult criterion_1() {
    Timer timer;
    auto suite = suite_burnt(200, 1000);
    int exh_ok = 0, rand_ok = 0;
    std::string first_bad;
    for (size_t i = 0; i < suite.instances.size(); ++i) {
        const auto& inst = suite.instances[i];
        int k = suite.ks[i];
        VertexId s = inst.sources.front();
        bool truth_atmost = brute_force_burnt_decision(inst.graph, s, k, BurntMode::AtMost).yes;
        bool truth_exact = brute_force_burnt_decision(inst.graph, s, k, BurntMode::Exactly).yes;

        auto exh = exhaustive_budget();
        bool e1 = solve_at_most_k_burnt(inst.graph, s, k, exh).decision;
        bool e2 = solve_exactly_k_burnt(inst.graph, s, k, exh).decision;
        if (e1 == truth_atmost && e2 == truth_exact)
            ++exh_ok;
        else if (first_bad.empty())
            first_bad = inst.name + " k=" + std::to_string(k);

        auto rnd = randomized_budget(77 + i);
        bool r1 = solve_at_most_k_burnt(inst.graph, s, k, rnd).decision;
        bool r2 = solve_exactly_k_burnt(inst.graph, s, k, rnd).decision;
        if (r1 == truth_atmost && r2 == truth_exact) ++rand_ok;
    }
    CriterionResult res{1, "burnt-count solvers match the oracle", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = exh_ok == 200 && rand_ok >= 194 && res.seconds < 60.0;
    std::ostringstream d;
    d << "exhaustive " << fraction(exh_ok, 200) << ", randomized " << fraction(rand_ok, 200)
      << " (>=194 required)";
    if (!first_bad.empty()) d << ", first mismatch: " << first_bad;
    res.detail = d.str();
    return res;
}

CriterionResult criterion_2() {
    Timer timer;
    auto suite = suite_degree(100, 2000);
    int ok = 0;
    std::string first_bad;
    for (size_t i = 0; i < suite.instances.size(); ++i) {
        const auto& inst = suite.instances[i];
        int k = suite.ks[i];
        VertexId s = inst.sources.front();
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), k);
        auto got = solve_max_k_protection_bounded_degree(inst.graph, s, k, 3,
                                                         exhaustive_budget());
        if (got.best_value == truth.best_value)
            ++ok;
        else if (first_bad.empty())
            first_bad = inst.name + " k=" + std::to_string(k) + " got " +
                        std::to_string(got.best_value) + " want " +
                        std::to_string(truth.best_value);
    }
    CriterionResult res{2, "degree-bounded solver is exactly optimal", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = ok == 100 && res.seconds < 120.0;
    res.detail = fraction(ok, 100) + (first_bad.empty() ? "" : ", first mismatch: " + first_bad);
    return res;
}

CriterionResult criterion_3() {
    Timer timer;
    auto suite = suite_unicyclic(100, 3000);
    int ok = 0, agree_b1 = 0;
    std::string first_bad;
    for (size_t i = 0; i < suite.instances.size(); ++i) {
        const auto& inst = suite.instances[i];
        int k = suite.ks[i];
        VertexId s = inst.sources.front();
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), k);
        auto uni = solve_unicyclic_max_k(inst.graph, s, k, exhaustive_budget());
        auto tpb = solve_tree_plus_b(inst.graph, s, k, 1, exhaustive_budget());
        if (uni.best_value == truth.best_value)
            ++ok;
        else if (first_bad.empty())
            first_bad = inst.name + " k=" + std::to_string(k) + " got " +
                        std::to_string(uni.best_value) + " want " +
                        std::to_string(truth.best_value);
        if (tpb.best_value == uni.best_value) ++agree_b1;
    }
    CriterionResult res{3, "unicyclic solver is exactly optimal, tree+1 agrees", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = ok == 100 && agree_b1 == 100 && res.seconds < 180.0;
    res.detail = "oracle " + fraction(ok, 100) + ", tree+1 agreement " + fraction(agree_b1, 100) +
                 (first_bad.empty() ? "" : ", first mismatch: " + first_bad);
    return res;
}

CriterionResult criterion_4() {
    Timer timer;
    int ok = 0;
    const int total = 200;
    std::string first_bad;
    for (int i = 0; i < total; ++i) {
        int n = 4 + i % 9;
        auto inst = generate_instance(InstanceKind::Unicyclic, n, 0, 0, 4000 + i);
        VertexId s = inst.sources.front();
        auto info = find_unique_cycle(inst.graph, s);
        auto out = simulate(make_scenario(inst.graph, {s}), {});
        int r = info->r();
        // everything burns under the empty strategy; the last cycle vertices
        // to fall must be the two across from the entry point
        int worst = -1;
        for (VertexId v : info->cycle)
            worst = std::max(worst, out.burn_round[static_cast<size_t>(v)]);
        bool good = true;
        for (VertexId v : info->cycle)
            if (out.burn_round[static_cast<size_t>(v)] == worst &&
                v != info->cycle[static_cast<size_t>(r / 2)] &&
                v != info->cycle[static_cast<size_t>(r / 2 + 1)])
                good = false;
        if (good)
            ++ok;
        else if (first_bad.empty())
            first_bad = inst.name;
    }
    CriterionResult res{4, "empty-strategy burns end opposite the cycle entry", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = ok == total;
    res.detail = fraction(ok, total) + (first_bad.empty() ? "" : ", first bad: " + first_bad);
    return res;
}

CriterionResult criterion_5() {
    Timer timer;
    auto suite = suite_unicyclic(100, 3000);
    int ok = 0;
    std::string first_bad;
    for (size_t i = 0; i < suite.instances.size(); ++i) {
        const auto& inst = suite.instances[i];
        int k = suite.ks[i];
        VertexId s = inst.sources.front();
        auto info = find_unique_cycle(inst.graph, s);
        std::set<VertexId> cycle(info->cycle.begin(), info->cycle.end());
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), k);
        bool found = false;
        for (const Strategy& st : truth.optimal) {
            int on_cycle = 0;
            for (VertexId v : st.protected_vertices())
                if (cycle.count(v)) ++on_cycle;
            if (on_cycle <= 2) found = true;
        }
        if (found)
            ++ok;
        else if (first_bad.empty())
            first_bad = inst.name + " k=" + std::to_string(k);
    }
    CriterionResult res{5, "some optimum protects at most two cycle vertices", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = ok == 100;
    res.detail = fraction(ok, 100) + (first_bad.empty() ? "" : ", first bad: " + first_bad);
    return res;
}

CriterionResult criterion_6() {
    Timer timer;
    // part a: every at-most-k witness uses at most k protections
    auto burnt_suite = suite_burnt(200, 1000);
    int witness_ok = 0, witness_total = 0;
    for (size_t i = 0; i < burnt_suite.instances.size(); ++i) {
        const auto& inst = burnt_suite.instances[i];
        int k = burnt_suite.ks[i];
        VertexId s = inst.sources.front();
        auto sol = solve_at_most_k_burnt(inst.graph, s, k, exhaustive_budget());
        auto dec = brute_force_burnt_decision(inst.graph, s, k, BurntMode::AtMost);
        if (sol.decision) {
            ++witness_total;
            if (sol.best_strategy->protection_count() <= k) ++witness_ok;
        }
        if (dec.yes) {
            ++witness_total;
            if (dec.witness->protection_count() <= k) ++witness_ok;
        }
    }

    // part b: protection distance bound on irredundant optimal strategies
    int checked = 0, violations = 0;
    std::string first_violation;
    auto scan = [&](const Suite& suite) {
        for (size_t i = 0; i < suite.instances.size(); ++i) {
            const auto& inst = suite.instances[i];
            int k = suite.ks[i];
            VertexId s = inst.sources.front();
            auto truth = brute_force_optimal(make_scenario(inst.graph, {s}), k);
            for (size_t j = 0; j < truth.optimal.size(); ++j) {
                if (!truth.irredundant[j]) continue;
                auto prot = truth.optimal[j].protected_vertices();
                if (static_cast<int>(prot.size()) > k) continue;
                ++checked;
                for (VertexId v : prot) {
                    std::vector<VertexId> allowed;
                    for (VertexId w = 0; w < inst.graph.vertex_count(); ++w) {
                        bool removed = false;
                        for (VertexId p : prot)
                            if (p == v ? false : p == w) removed = true;
                        if (!removed) allowed.push_back(w);
                    }
                    auto dist = bfs_distances(inst.graph, s, allowed);
                    if (dist[static_cast<size_t>(v)] > k) {
                        ++violations;
                        if (first_violation.empty())
                            first_violation = inst.name + " k=" + std::to_string(k) +
                                              " protects " + inst.graph.label(v) +
                                              " at distance " +
                                              std::to_string(dist[static_cast<size_t>(v)]);
                        break;
                    }
                }
            }
        }
    };
    scan(suite_degree(100, 2000));
    scan(suite_unicyclic(100, 3000));

    CriterionResult res{6, "witness length bound and protection distance bound", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = witness_ok == witness_total && violations == 0;
    std::ostringstream d;
    d << "witness lengths " << fraction(witness_ok, witness_total) << "; distance bound: "
      << violations << " violation(s) over " << checked << " irredundant optima";
    if (!first_violation.empty()) d << ", e.g. " << first_violation;
    res.detail = d.str();
    return res;
}

// every ordering of the candidates, played against the simulator
bool any_ordering_confines(const Graph& g, VertexId s, const std::vector<VertexId>& burnt,
                           std::vector<VertexId> cand, int p, int h) {
    std::vector<char> inside(static_cast<size_t>(g.vertex_count()), 0);
    for (VertexId v : burnt) inside[static_cast<size_t>(v)] = 1;
    Scenario sc = make_scenario(g, {s}, p, h);
    std::sort(cand.begin(), cand.end());
    do {
        Strategy st = chunk_rounds(cand, p);
        GameOutcome out;
        try {
            out = simulate(sc, st);
        } catch (const invalid_strategy_error&) {
            continue;
        }
        bool confined = true;
        for (VertexId v : out.burnt)
            if (!inside[static_cast<size_t>(v)]) confined = false;
        if (confined) return true;
    } while (std::next_permutation(cand.begin(), cand.end()));
    return false;
}

CriterionResult criterion_7() {
    Timer timer;
    int ok_single = 0, ok_multi = 0;
    const int total = 500;
    std::string first_bad;
    int made = 0;
    uint64_t seed = 7000;
    while (made < total) {
        ++seed;
        int n = 5 + static_cast<int>(seed % 6);
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, seed);
        VertexId s = inst.sources.front();
        // grow a random connected burnt region from s
        std::mt19937_64 rng(seed * 11400714819323198485ull + 3);
        std::vector<VertexId> burnt{s};
        std::vector<char> in(static_cast<size_t>(n), 0);
        in[static_cast<size_t>(s)] = 1;
        int grow = static_cast<int>(rng() % static_cast<uint64_t>(n - 1));
        for (int step = 0; step < grow; ++step) {
            auto frontier = neighbors_set(inst.graph, burnt);
            if (frontier.empty()) break;
            VertexId pick = frontier[rng() % frontier.size()];
            burnt.push_back(pick);
            in[static_cast<size_t>(pick)] = 1;
            std::sort(burnt.begin(), burnt.end());
        }
        auto cand = neighbors_set(inst.graph, burnt);
        if (cand.empty() || cand.size() > 5) continue;
        ++made;

        bool truth = any_ordering_confines(inst.graph, s, burnt, cand, 1, 1);
        bool got = order_and_verify(inst.graph, s, burnt, cand).has_value();
        if (truth == got)
            ++ok_single;
        else if (first_bad.empty())
            first_bad = inst.name + " single p=h=1";

        bool multi_good = true;
        for (int p = 1; p <= 2 && multi_good; ++p)
            for (int h = 1; h <= 2 && multi_good; ++h) {
                bool t = any_ordering_confines(inst.graph, s, burnt, cand, p, h);
                bool m = order_and_verify_multi(inst.graph, s, burnt, cand, p, h).has_value();
                if (t != m) {
                    multi_good = false;
                    if (first_bad.empty())
                        first_bad = inst.name + " p=" + std::to_string(p) + " h=" +
                                    std::to_string(h);
                }
            }
        if (multi_good) ++ok_multi;
    }
    CriterionResult res{7, "verifier agrees with exhaustive ordering enumeration", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = ok_single == total && ok_multi == total;
    res.detail = "single " + fraction(ok_single, total) + ", multi " + fraction(ok_multi, total) +
                 (first_bad.empty() ? "" : ", first bad: " + first_bad);
    return res;
}

Graph with_random_weights(const Graph& g, std::mt19937_64& rng, int lo, int hi) {
    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, g.vertex_value(v));
        b.set_label(v, g.label(v));
    }
    for (const Edge& e : g.edges())
        b.add_edge(e.u, e.v, lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1)),
                   e.value);
    return b.build();
}

Graph with_random_values(const Graph& g, std::mt19937_64& rng) {
    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, 1 + static_cast<int>(rng() % 3));
        b.set_label(v, g.label(v));
    }
    for (const Edge& e : g.edges())
        b.add_edge(e.u, e.v, e.weight, static_cast<int>(rng() % 4));
    return b.build();
}

Graph zero_values_on(const Graph& g, const std::vector<char>& forbidden) {
    GraphBuilder b(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        b.set_vertex_value(v, forbidden[static_cast<size_t>(v)] ? 0 : g.vertex_value(v));
        b.set_label(v, g.label(v));
    }
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, e.weight, e.value);
    return b.build();
}

std::vector<VertexId> forbidden_list(const std::vector<char>& forbidden) {
    std::vector<VertexId> out;
    for (size_t i = 0; i < forbidden.size(); ++i)
        if (forbidden[i]) out.push_back(static_cast<VertexId>(i));
    return out;
}

CriterionResult criterion_8() {
    Timer timer;
    OracleLimits wide;
    wide.max_vertices = 40;

    int w_ok = 0, v_ok = 0, m_ok = 0, flagged = 0;
    std::string first_bad;
    const int per_family = 50;

    for (int i = 0; i < per_family; ++i) {
        // weighted: w in 1..3 (zero weights change the protection game and
        // are exercised structurally elsewhere)
        int n = 4 + i % 5;
        auto inst = generate_instance(InstanceKind::TreePlusB, n, 0, i % 2, 8000 + i);
        std::mt19937_64 rng(500 + i);
        Graph wg = with_random_weights(inst.graph, rng, 1, 3);
        VertexId s = inst.sources.front();
        auto direct = brute_force_optimal(make_scenario(wg, {s}), 2, wide);
        auto red = subdivide_weighted(wg);
        Graph counted = zero_values_on(red.graph, red.forbidden);
        VertexId s2 = red.old_to_new[static_cast<size_t>(s)];
        auto reduced = brute_force_optimal(make_scenario(counted, {s2}), 2, wide,
                                           forbidden_list(red.forbidden));
        if (direct.best_value == reduced.best_value)
            ++w_ok;
        else if (first_bad.empty())
            first_bad = "weighted " + inst.name;
    }

    for (int i = 0; i < per_family; ++i) {
        int n = 4 + i % 5;
        auto inst = generate_instance(InstanceKind::TreePlusB, n, 0, i % 2, 8500 + i);
        std::mt19937_64 rng(900 + i);
        Graph vg = with_random_values(inst.graph, rng);
        VertexId s = inst.sources.front();
        auto direct = brute_force_optimal(make_scenario(vg, {s}), 2, wide);
        auto red = expand_values(vg);
        VertexId s2 = red.old_to_new[static_cast<size_t>(s)];
        auto reduced = brute_force_optimal(make_scenario(red.graph, {s2}), 2, wide,
                                           forbidden_list(red.forbidden));
        if (direct.best_value == reduced.best_value)
            ++v_ok;
        else if (first_bad.empty())
            first_bad = "valued " + inst.name;
    }

    for (int i = 0; i < per_family; ++i) {
        int n = 6 + i % 5;
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, n - 1, 0, 9000 + i);
        std::mt19937_64 rng(1300 + i);
        int g_count = 2 + static_cast<int>(rng() % 2);
        std::vector<VertexId> sources;
        while (static_cast<int>(sources.size()) < g_count) {
            VertexId v = static_cast<VertexId>(rng() % static_cast<uint64_t>(n));
            if (std::find(sources.begin(), sources.end(), v) == sources.end())
                sources.push_back(v);
        }
        Scenario multi = make_scenario(inst.graph, sources);
        auto direct = brute_force_optimal(multi, 2, wide);
        auto merged = merge_sources(multi);
        auto reduced = brute_force_optimal(merged.scenario, 2, wide);
        if (direct.best_value == reduced.best_value)
            ++m_ok;
        else if (first_bad.empty())
            first_bad = "multi-source " + inst.name;
    }

    // multi-step translation: flagged findings are reported, not asserted
    for (int i = 0; i < 20; ++i) {
        int n = 5 + i % 4;
        auto inst = generate_instance(InstanceKind::BoundedDegree, n, 3, 0, 9500 + i);
        VertexId s = inst.sources.front();
        int p = 1 + i % 2, h = 1 + (i / 2) % 2;
        int k = 2;
        auto truth = brute_force_optimal(make_scenario(inst.graph, {s}, p, h), k, wide);
        auto got = solve_max_k_protection_bounded_degree(inst.graph, s, k, 3,
                                                         exhaustive_budget(), {}, p, h);
        if (got.best_value != truth.best_value) ++flagged;
    }

    CriterionResult res{8, "reduction equivalences hold on seeded suites", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = w_ok == per_family && v_ok == per_family && m_ok == per_family;
    std::ostringstream d;
    d << "weighted " << fraction(w_ok, per_family) << ", valued " << fraction(v_ok, per_family)
      << ", multi-source " << fraction(m_ok, per_family) << ", multi-step flagged findings: "
      << flagged << "/20 (reported, not asserted)";
    if (!first_bad.empty()) d << ", first bad: " << first_bad;
    res.detail = d.str();
    return res;
}

CriterionResult criterion_9() {
    Timer timer;
    int built = 0, verified = 0, sized = 0;
    for (int n = 1; n <= 12; ++n)
        for (int t = 1; t <= std::min(4, n); ++t) {
            ++built;
            auto fam = build_universal_set(n, t, 42);
            if (is_universal(fam)) ++verified;
            if (fam.vectors.size() >= (1ull << t)) ++sized;
        }

    auto suite = suite_burnt(200, 1000);
    int agree = 0;
    std::string first_bad;
    for (size_t i = 0; i < suite.instances.size(); ++i) {
        const auto& inst = suite.instances[i];
        int k = suite.ks[i];
        VertexId s = inst.sources.front();
        bool truth_atmost = brute_force_burnt_decision(inst.graph, s, k, BurntMode::AtMost).yes;
        bool truth_exact = brute_force_burnt_decision(inst.graph, s, k, BurntMode::Exactly).yes;
        auto uni = universal_budget(42);
        bool u1 = solve_at_most_k_burnt(inst.graph, s, k, uni).decision;
        bool u2 = solve_exactly_k_burnt(inst.graph, s, k, uni).decision;
        if (u1 == truth_atmost && u2 == truth_exact)
            ++agree;
        else if (first_bad.empty())
            first_bad = inst.name + " k=" + std::to_string(k);
    }
    CriterionResult res{9, "universal families verify; deterministic driver matches oracle",
                        false, "", 0};
    res.seconds = timer.seconds();
    res.pass = verified == built && sized == built && agree == 200;
    res.detail = "families " + fraction(verified, built) + ", sizes " + fraction(sized, built) +
                 ", driver " + fraction(agree, 200) +
                 (first_bad.empty() ? "" : ", first bad: " + first_bad);
    return res;
}

CriterionResult criterion_10() {
    Timer timer;
    // stars with nine leaves burn at least nine vertices whatever the play,
    // so at-most-k is "no" for k <= 3 and a randomized run consumes its
    // whole trial budget; the median consumed count should grow ~4x per k
    Graph star = [] {
        GraphBuilder b(10);
        for (VertexId v = 1; v < 10; ++v) b.add_edge(0, v);
        return b.build();
    }();
    std::vector<double> medians;
    for (int k = 1; k <= 3; ++k) {
        std::vector<uint64_t> used;
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            auto r = solve_at_most_k_burnt(star, 0, k, randomized_budget(seed));
            if (r.decision) return {10, "randomized trial growth", false,
                                    "star instance unexpectedly solvable", timer.seconds()};
            used.push_back(r.trials_used);
        }
        std::sort(used.begin(), used.end());
        medians.push_back(static_cast<double>(used[used.size() / 2]));
    }
    double r1 = medians[1] / medians[0];
    double r2 = medians[2] / medians[1];
    CriterionResult res{10, "randomized trial count grows ~4x per unit k", false, "", 0};
    res.seconds = timer.seconds();
    res.pass = r1 >= 3.0 && r1 <= 6.0 && r2 >= 3.0 && r2 <= 6.0;
    std::ostringstream d;
    d << "median trials " << medians[0] << "/" << medians[1] << "/" << medians[2]
      << ", ratios " << r1 << ", " << r2 << " (within [3,6])";
    res.detail = d.str();
    return res;
}

}  // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}; }

CriterionResult run_criterion(int id) {
    switch (id) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        case 10: return criterion_10();
        default: throw std::invalid_argument("unknown criterion " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id : criterion_ids()) out.push_back(run_criterion(id));
    return out;
}

}  // namespace firefighter::acceptance
