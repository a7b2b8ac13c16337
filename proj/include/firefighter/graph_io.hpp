#pragma once

#include <string>

#include "firefighter/graph.hpp"

namespace firefighter {

struct parse_error : std::runtime_error {
    parse_error(const std::string& origin, int line_no, const std::string& what)
        : std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    int line;
};

struct ParsedInstance {
    Graph graph;
    std::vector<VertexId> sources;
    std::string name;
};

// One record per line:
//   p ff <n>
//   e <u> <v> [weight] [edge_value]
//   v <id> <vertex_value>
//   l <id> <name>
//   s <id>...
//   # comment
ParsedInstance parse_graph_text(const std::string& text, const std::string& origin);
ParsedInstance parse_graph_file(const std::string& path);

std::string print_graph(const Graph& g, const std::vector<VertexId>& sources);

// structural equality (shape, attributes, labels, sources)
bool same_instance(const ParsedInstance& a, const ParsedInstance& b);

// built-in named instances: P4, STAR4, SPIDER, UNI6, C4
std::vector<std::string> fixture_names();
ParsedInstance make_fixture(const std::string& name);

// a fixture name resolves to the built-in; anything else is read as a file
ParsedInstance load_instance(const std::string& name_or_path);

}  // namespace firefighter
