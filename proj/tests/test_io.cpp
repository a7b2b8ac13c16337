#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "firefighter/generator.hpp"
#include "firefighter/graph_io.hpp"

using namespace firefighter;

TEST_CASE("fixtures parse from their shipped files") {
    for (const std::string& name : fixture_names()) {
        auto built = make_fixture(name);
        std::string path = std::string(FF_FIXTURE_DIR) + "/" +
                           [&] {
                               std::string lower = name;
                               for (char& c : lower) c = static_cast<char>(std::tolower(c));
                               return lower;
                           }() +
                           ".ff";
        auto parsed = parse_graph_file(path);
        CHECK(same_instance(built, parsed));
    }
}

TEST_CASE("fixture shapes") {
    auto p4 = make_fixture("P4");
    CHECK(p4.graph.vertex_count() == 4);
    CHECK(p4.graph.edge_count() == 3);
    CHECK(p4.sources == std::vector<VertexId>{0});

    auto uni = make_fixture("UNI6");
    CHECK(uni.graph.vertex_count() == 6);
    CHECK(uni.graph.edge_count() == 6);
    CHECK_THROWS_AS(make_fixture("NOPE"), std::invalid_argument);
}

TEST_CASE("parse errors carry locations") {
    CHECK_THROWS_WITH_AS(parse_graph_text("p ff 4\ne 0 0\n", "t"),
                         doctest::Contains("self-loop"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p ff 4\ne 0 1\ns 99\n", "t"),
                         doctest::Contains("unknown source"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p ff 4\ne 0 1\ne 1 0\n", "t"),
                         doctest::Contains("duplicate edge"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("e 0 1\n", "t"),
                         doctest::Contains("before problem line"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p ff 3\nz 1\n", "t"),
                         doctest::Contains("unknown record"), parse_error);
    CHECK_THROWS_WITH_AS(parse_graph_text("p ff 3\nl 0 x\nl 1 x\n", "t"),
                         doctest::Contains("duplicate label"), parse_error);
    try {
        parse_graph_text("p ff 4\ne 0 1\ne 9 1\n", "t");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("weights, values and labels survive a round-trip") {
    std::string text =
        "# demo\n"
        "p ff 3\n"
        "v 2 4\n"
        "l 0 src\n"
        "e 0 1 2 1\n"
        "e 1 2 0\n"
        "s 0\n";
    auto inst = parse_graph_text(text, "demo");
    CHECK(inst.graph.edge_weight(0, 1) == 2);
    CHECK(inst.graph.edge_value(0, 1) == 1);
    CHECK(inst.graph.edge_weight(1, 2) == 0);
    CHECK(inst.graph.vertex_value(2) == 4);
    CHECK(inst.graph.label(0) == "src");
    CHECK(inst.graph.resolve("src") == 0);

    auto again = parse_graph_text(print_graph(inst.graph, inst.sources), "again");
    CHECK(same_instance(inst, again));
}

TEST_CASE("generated instances round-trip and validate") {
    for (int trial = 0; trial < 30; ++trial) {
        InstanceKind kind = static_cast<InstanceKind>(trial % 4);
        int n = 6 + trial % 5;
        auto inst = generate_instance(kind, n, 3, trial % 3, 4200 + trial);
        switch (kind) {
            case InstanceKind::Tree: CHECK(is_tree(inst.graph)); break;
            case InstanceKind::Unicyclic: CHECK(is_unicyclic(inst.graph)); break;
            case InstanceKind::BoundedDegree: CHECK(inst.graph.max_degree() <= 3); break;
            case InstanceKind::TreePlusB:
                CHECK(inst.graph.edge_count() == n - 1 + trial % 3);
                break;
        }
        auto again = parse_graph_text(print_graph(inst.graph, inst.sources), inst.name);
        again.name = inst.name;
        CHECK(same_instance(inst, again));
    }
}

TEST_CASE("identical seeds reproduce identical instances") {
    auto a = generate_instance(InstanceKind::Unicyclic, 9, 0, 0, 123);
    auto b = generate_instance(InstanceKind::Unicyclic, 9, 0, 0, 123);
    CHECK(same_instance(a, b));
    auto c = generate_instance(InstanceKind::Unicyclic, 9, 0, 0, 124);
    CHECK(!same_instance(a, c));
}

TEST_CASE("file loading falls back from fixture names to paths") {
    auto p4 = load_instance("P4");
    CHECK(p4.graph.vertex_count() == 4);

    auto tmp = std::filesystem::temp_directory_path() / "ff_io_test.ff";
    {
        std::ofstream f(tmp);
        f << print_graph(p4.graph, p4.sources);
    }
    auto back = load_instance(tmp.string());
    CHECK(same_instance(p4, back));
    std::filesystem::remove(tmp);

    CHECK_THROWS(load_instance("/nonexistent/path.ff"));
}
