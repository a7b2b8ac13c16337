// Command-line front end. JSON goes to stdout, human-readable notes to
// stderr. Exit codes: 0 success / "yes", 1 "no" or infeasible, 2 errors.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "firefighter/acceptance.hpp"
#include "firefighter/generator.hpp"
#include "firefighter/graph_io.hpp"
#include "firefighter/oracle.hpp"
#include "firefighter/reductions.hpp"
#include "firefighter/solvers.hpp"
#include "firefighter/universal.hpp"
#include "firefighter/verify.hpp"

namespace ff = firefighter;
using json = nlohmann::ordered_json;

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("FF_SEED")) {
        char* end = nullptr;
        uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 1;
}

std::vector<ff::VertexId> parse_vertex_list(const ff::Graph& g, const std::string& text) {
    std::vector<ff::VertexId> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        out.push_back(g.resolve(token));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json strategy_json(const ff::Graph& g, const ff::Strategy& st) {
    json rounds = json::array();
    for (const auto& r : st.rounds) {
        json round = json::array();
        for (ff::VertexId v : r) round.push_back(g.label(v));
        rounds.push_back(round);
    }
    return rounds;
}

json labels_json(const ff::Graph& g, const std::vector<ff::VertexId>& vs) {
    json out = json::array();
    for (ff::VertexId v : vs) out.push_back(g.label(v));
    return out;
}

json result_json(const ff::Graph& g, const ff::SolveResult& r) {
    json out;
    out["decision"] = r.decision ? "yes" : "no";
    out["value"] = r.best_value;
    out["strategy"] =
        r.best_strategy ? strategy_json(g, *r.best_strategy) : json(nullptr);
    out["trials_used"] = r.trials_used;
    out["seed"] = r.seed;
    out["mode"] = r.mode;
    out["deterministic"] = r.deterministic;
    return out;
}

ff::TrialBudget make_budget(const std::string& mode, double delta, uint64_t seed,
                            uint64_t trials) {
    ff::TrialBudget b;
    if (mode == "randomized")
        b.mode = ff::TrialMode::Randomized;
    else if (mode == "exhaustive")
        b.mode = ff::TrialMode::ExhaustiveColorings;
    else if (mode == "universal")
        b.mode = ff::TrialMode::UniversalFamily;
    else
        throw std::invalid_argument("unknown mode '" + mode + "'");
    b.delta = delta;
    b.seed = seed;
    if (trials > 0) b.trial_override = trials;
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"firefighter: exact and fixed-parameter solvers for the firefighter problem"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees --h for the spread depth

    std::string graph_arg, problem, mode = "randomized", strategy_text, burnt_arg, cand_arg;
    std::string kind_arg = "tree", reduce_mode, out_path;
    int k = 1, d = -1, b = -1, p = 1, h = 1, n = 10;
    int criterion = 0;
    double delta = 0.01;
    uint64_t seed = default_seed(), trials = 0;

    auto* solve = app.add_subcommand("solve", "run a fixed-parameter solver");
    solve->add_option("--problem", problem, "at-most-burnt|exact-burnt|max-protect")->required();
    solve->add_option("--k", k)->required();
    solve->add_option("--graph", graph_arg)->required();
    solve->add_option("--d", d, "degree bound (selects the bounded-degree solver)");
    solve->add_option("--b", b, "extra edge count (selects the tree+b solver)");
    solve->add_option("--mode", mode, "randomized|exhaustive|universal");
    solve->add_option("--seed", seed);
    solve->add_option("--delta", delta);
    solve->add_option("--trials", trials, "override the randomized trial count");
    solve->add_option("--p", p, "protections per round");
    solve->add_option("--h", h, "spread depth per round");

    auto* oracle = app.add_subcommand("oracle", "exact brute-force reference");
    oracle->add_option("--problem", problem, "at-most-burnt|exact-burnt|max-protect")->required();
    oracle->add_option("--k", k)->required();
    oracle->add_option("--graph", graph_arg)->required();
    oracle->add_option("--p", p);
    oracle->add_option("--h", h);

    auto* sim = app.add_subcommand("simulate", "play a strategy and report the outcome");
    sim->add_option("--graph", graph_arg)->required();
    sim->add_option("--strategy", strategy_text, "rounds ','-separated, ';' within a round");
    sim->add_option("--p", p);
    sim->add_option("--h", h);

    auto* verify = app.add_subcommand("verify", "order a candidate protection set");
    verify->add_option("--graph", graph_arg)->required();
    verify->add_option("--burnt", burnt_arg)->required();
    verify->add_option("--cand", cand_arg)->required();
    verify->add_option("--p", p);
    verify->add_option("--h", h);

    auto* reduce = app.add_subcommand("reduce", "rewrite an instance by local replacement");
    reduce->add_option("--mode", reduce_mode, "weighted|valued|merge-sources|multi-step")
        ->required();
    reduce->add_option("--graph", graph_arg);
    reduce->add_option("--k", k);
    reduce->add_option("--p", p);
    reduce->add_option("--h", h);
    reduce->add_option("--out", out_path, "write the transformed graph here");

    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    gen->add_option("--kind", kind_arg, "tree|unicyclic|bounded-degree|tree-plus-b")->required();
    gen->add_option("--n", n)->required();
    gen->add_option("--d", d);
    gen->add_option("--b", b);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "run the acceptance checks");
    bench->add_option("--criterion", criterion, "run a single check");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->set_help_flag("--help", "print help");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            auto inst = ff::load_instance(graph_arg);
            if (inst.sources.empty()) throw std::runtime_error("graph has no source");
            if (inst.sources.size() > 1) {
                // single-source solvers; fold multiple sources into one first
                auto merged =
                    ff::merge_sources(ff::make_scenario(inst.graph, inst.sources, p, h));
                inst.graph = merged.scenario.graph;
                inst.sources = merged.scenario.sources;
            }
            ff::VertexId s = inst.sources.front();
            auto budget = make_budget(mode, delta, seed, trials);
            ff::SolveResult r;
            if (problem == "at-most-burnt") {
                r = ff::solve_at_most_k_burnt(inst.graph, s, k, budget);
            } else if (problem == "exact-burnt") {
                r = ff::solve_exactly_k_burnt(inst.graph, s, k, budget);
            } else if (problem == "max-protect") {
                if (d > 0) {
                    r = ff::solve_max_k_protection_bounded_degree(inst.graph, s, k, d,
                                                                  budget, {}, p, h);
                } else if (b >= 0) {
                    r = ff::solve_tree_plus_b(inst.graph, s, k, b, budget);
                } else if (ff::is_tree(inst.graph)) {
                    r = ff::solve_tree_max_k(inst.graph, s, k, {}, budget);
                } else if (ff::is_unicyclic(inst.graph)) {
                    r = ff::solve_unicyclic_max_k(inst.graph, s, k, budget);
                } else {
                    r = ff::solve_max_k_protection_bounded_degree(
                        inst.graph, s, k, inst.graph.max_degree(), budget, {}, p, h);
                }
            } else {
                throw std::invalid_argument("unknown problem '" + problem + "'");
            }
            std::cout << result_json(inst.graph, r).dump(2) << "\n";
            return r.decision ? 0 : 1;
        }

        if (oracle->parsed()) {
            auto inst = ff::load_instance(graph_arg);
            if (inst.sources.empty()) throw std::runtime_error("graph has no source");
            json out;
            if (problem == "at-most-burnt" || problem == "exact-burnt") {
                if (inst.sources.size() > 1) {
                    auto merged =
                        ff::merge_sources(ff::make_scenario(inst.graph, inst.sources));
                    inst.graph = merged.scenario.graph;
                    inst.sources = merged.scenario.sources;
                }
                ff::VertexId s = inst.sources.front();
                auto mode_sel = problem == "at-most-burnt" ? ff::BurntMode::AtMost
                                                           : ff::BurntMode::Exactly;
                auto r = ff::brute_force_burnt_decision(inst.graph, s, k, mode_sel);
                out["decision"] = r.yes ? "yes" : "no";
                out["witness"] =
                    r.witness ? strategy_json(inst.graph, *r.witness) : json(nullptr);
                std::cout << out.dump(2) << "\n";
                return r.yes ? 0 : 1;
            }
            if (problem != "max-protect")
                throw std::invalid_argument("unknown problem '" + problem + "'");
            auto sc = ff::make_scenario(inst.graph, inst.sources, p, h);
            auto r = ff::brute_force_optimal(sc, k);
            out["value"] = r.best_value;
            out["optimal_count"] = r.optimal.size();
            json strategies = json::array();
            for (size_t i = 0; i < r.optimal.size(); ++i) {
                json entry;
                entry["rounds"] = strategy_json(inst.graph, r.optimal[i]);
                entry["irredundant"] = static_cast<bool>(r.irredundant[i]);
                strategies.push_back(entry);
            }
            out["optimal"] = strategies;
            out["states"] = r.states;
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (sim->parsed()) {
            auto inst = ff::load_instance(graph_arg);
            auto sc = ff::make_scenario(inst.graph, inst.sources, p, h);
            auto st = ff::Strategy::parse(inst.graph, strategy_text);
            auto out = ff::simulate(sc, st);
            json j;
            j["burnt"] = labels_json(inst.graph, out.burnt);
            j["saved"] = labels_json(inst.graph, out.saved);
            j["value"] = ff::outcome_value(inst.graph, out);
            j["rounds_played"] = out.rounds_played;
            j["truncated"] = out.strategy_truncated;
            json burns;
            for (ff::VertexId v : out.burnt)
                burns[inst.graph.label(v)] = out.burn_round[static_cast<size_t>(v)];
            j["burn_round"] = burns;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            auto inst = ff::load_instance(graph_arg);
            ff::VertexId s = inst.sources.front();
            auto burnt = parse_vertex_list(inst.graph, burnt_arg);
            auto cand = parse_vertex_list(inst.graph, cand_arg);
            json j;
            if (p == 1 && h == 1) {
                auto order = ff::order_and_verify(inst.graph, s, burnt, cand);
                j["valid"] = order.has_value();
                j["order"] = order ? labels_json(inst.graph, *order) : json(nullptr);
                std::cout << j.dump(2) << "\n";
                return order ? 0 : 1;
            }
            auto st = ff::order_and_verify_multi(inst.graph, s, burnt, cand, p, h);
            j["valid"] = st.has_value();
            j["rounds"] = st ? strategy_json(inst.graph, *st) : json(nullptr);
            std::cout << j.dump(2) << "\n";
            return st ? 0 : 1;
        }

        if (reduce->parsed()) {
            json j;
            if (reduce_mode == "multi-step") {
                j["k"] = k;
                j["p"] = p;
                j["h"] = h;
                j["k_translated"] = ff::reduce_multi_step(k, p, h);
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            if (graph_arg.empty()) throw std::invalid_argument("--graph required");
            auto inst = ff::load_instance(graph_arg);
            std::string text;
            if (reduce_mode == "weighted" || reduce_mode == "valued") {
                auto red = reduce_mode == "weighted" ? ff::subdivide_weighted(inst.graph)
                                                     : ff::expand_values(inst.graph);
                std::vector<ff::VertexId> sources;
                for (ff::VertexId v : inst.sources)
                    sources.push_back(red.old_to_new[static_cast<size_t>(v)]);
                std::sort(sources.begin(), sources.end());
                sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
                text = ff::print_graph(red.graph, sources);
                json map;
                for (ff::VertexId v = 0; v < inst.graph.vertex_count(); ++v)
                    map[inst.graph.label(v)] = red.old_to_new[static_cast<size_t>(v)];
                j["map"] = map;
                json forb = json::array();
                for (size_t i = 0; i < red.forbidden.size(); ++i)
                    if (red.forbidden[i]) forb.push_back(i);
                j["forbidden"] = forb;
            } else if (reduce_mode == "merge-sources") {
                auto merged = ff::merge_sources(ff::make_scenario(inst.graph, inst.sources, p, h));
                text = ff::print_graph(merged.scenario.graph, merged.scenario.sources);
                json map;
                for (ff::VertexId v = 0; v < inst.graph.vertex_count(); ++v)
                    map[inst.graph.label(v)] = merged.old_to_new[static_cast<size_t>(v)];
                j["map"] = map;
            } else {
                throw std::invalid_argument("unknown reduce mode '" + reduce_mode + "'");
            }
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text;
                j["graph_file"] = out_path;
            } else {
                j["graph"] = text;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (gen->parsed()) {
            auto kind = ff::kind_from_string(kind_arg);
            auto inst = ff::generate_instance(kind, n, d > 0 ? d : 3, b >= 0 ? b : 0, seed);
            std::string text = "# " + inst.name + "\n" +
                               ff::print_graph(inst.graph, inst.sources);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text;
            } else {
                std::cout << text;
            }
            return 0;
        }

        if (bench->parsed()) {
            json rows = json::array();
            bool all = true;
            for (int id : ff::acceptance::criterion_ids()) {
                if (criterion && id != criterion) continue;
                auto r = ff::acceptance::run_criterion(id);
                std::cerr << "[" << r.id << "] " << (r.pass ? "PASS" : "FAIL") << " "
                          << r.name << " — " << r.detail << " (" << r.seconds << "s)\n";
                json row;
                row["id"] = r.id;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                row["seconds"] = r.seconds;
                rows.push_back(row);
                if (!r.pass) all = false;
            }
            json j;
            j["criteria"] = rows;
            j["all_pass"] = all;
            std::cout << j.dump(2) << "\n";
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
