#include "firefighter/graph_io.hpp"

#include <algorithm>
#include <set>
#include <fstream>
#include <sstream>

namespace firefighter {

namespace {

struct RawEdge {
    int line;
    VertexId u, v;
    int weight, value;
};

}  // namespace

ParsedInstance parse_graph_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n = -1;
    std::vector<RawEdge> edges;
    std::vector<std::pair<int, std::pair<VertexId, int>>> values;
    std::vector<std::pair<int, std::pair<VertexId, std::string>>> labels;
    std::vector<std::pair<int, VertexId>> sources;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        auto need_int = [&](const char* what) {
            long long x;
            if (!(ls >> x)) throw parse_error(origin, line_no, std::string("expected ") + what);
            return x;
        };
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt) || fmt != "ff")
                throw parse_error(origin, line_no, "expected 'p ff <n>'");
            if (n >= 0) throw parse_error(origin, line_no, "duplicate problem line");
            long long count = need_int("vertex count");
            if (count < 0 || count > 1'000'000)
                throw parse_error(origin, line_no, "bad vertex count");
            n = static_cast<int>(count);
        } else if (tag == "e") {
            if (n < 0) throw parse_error(origin, line_no, "edge before problem line");
            RawEdge e{line_no, static_cast<VertexId>(need_int("vertex id")),
                      static_cast<VertexId>(need_int("vertex id")), 1, 0};
            long long w, z;
            if (ls >> w) {
                if (w < 0) throw parse_error(origin, line_no, "negative weight");
                e.weight = static_cast<int>(w);
                if (ls >> z) {
                    if (z < 0) throw parse_error(origin, line_no, "negative edge value");
                    e.value = static_cast<int>(z);
                }
            }
            edges.push_back(e);
        } else if (tag == "v") {
            if (n < 0) throw parse_error(origin, line_no, "value before problem line");
            VertexId id = static_cast<VertexId>(need_int("vertex id"));
            long long val = need_int("vertex value");
            if (val < 0) throw parse_error(origin, line_no, "negative vertex value");
            values.push_back({line_no, {id, static_cast<int>(val)}});
        } else if (tag == "l") {
            if (n < 0) throw parse_error(origin, line_no, "label before problem line");
            VertexId id = static_cast<VertexId>(need_int("vertex id"));
            std::string name;
            if (!(ls >> name)) throw parse_error(origin, line_no, "expected label text");
            labels.push_back({line_no, {id, name}});
        } else if (tag == "s") {
            if (n < 0) throw parse_error(origin, line_no, "source before problem line");
            long long id;
            bool any = false;
            while (ls >> id) {
                any = true;
                sources.push_back({line_no, static_cast<VertexId>(id)});
            }
            if (!any) throw parse_error(origin, line_no, "expected source ids");
        } else {
            throw parse_error(origin, line_no, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error(origin, line_no, "missing 'p ff <n>' line");

    auto check_id = [&](int line_of, VertexId v, const char* what) {
        if (v < 0 || v >= n)
            throw parse_error(origin, line_of,
                              std::string("unknown ") + what + " " + std::to_string(v));
    };

    GraphBuilder b(n);
    for (const RawEdge& e : edges) {
        check_id(e.line, e.u, "vertex");
        check_id(e.line, e.v, "vertex");
        if (e.u == e.v) throw parse_error(origin, e.line, "self-loop");
        if (b.has_edge(e.u, e.v)) throw parse_error(origin, e.line, "duplicate edge");
        b.add_edge(e.u, e.v, e.weight, e.value);
    }
    for (const auto& [line_of, kv] : values) {
        check_id(line_of, kv.first, "vertex");
        b.set_vertex_value(kv.first, kv.second);
    }
    std::set<std::string> label_names;
    for (const auto& [line_of, kv] : labels) {
        check_id(line_of, kv.first, "vertex");
        if (!label_names.insert(kv.second).second)
            throw parse_error(origin, line_of, "duplicate label '" + kv.second + "'");
        b.set_label(kv.first, kv.second);
    }

    ParsedInstance inst;
    inst.name = origin;
    for (const auto& [line_of, v] : sources) {
        check_id(line_of, v, "source");
        if (std::find(inst.sources.begin(), inst.sources.end(), v) != inst.sources.end())
            throw parse_error(origin, line_of, "duplicate source " + std::to_string(v));
        inst.sources.push_back(v);
    }
    std::sort(inst.sources.begin(), inst.sources.end());
    inst.graph = b.build();
    return inst;
}

ParsedInstance parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str(), path);
}

std::string print_graph(const Graph& g, const std::vector<VertexId>& sources) {
    std::ostringstream out;
    out << "p ff " << g.vertex_count() << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.vertex_value(v) != 1) out << "v " << v << " " << g.vertex_value(v) << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.label(v) != std::to_string(v)) out << "l " << v << " " << g.label(v) << "\n";
    for (const Edge& e : g.edges()) {
        out << "e " << e.u << " " << e.v;
        if (e.weight != 1 || e.value != 0) {
            out << " " << e.weight;
            if (e.value != 0) out << " " << e.value;
        }
        out << "\n";
    }
    if (!sources.empty()) {
        out << "s";
        for (VertexId v : sources) out << " " << v;
        out << "\n";
    }
    return out.str();
}

bool same_instance(const ParsedInstance& a, const ParsedInstance& b) {
    const Graph &x = a.graph, &y = b.graph;
    if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count())
        return false;
    for (VertexId v = 0; v < x.vertex_count(); ++v)
        if (x.vertex_value(v) != y.vertex_value(v) || x.label(v) != y.label(v))
            return false;
    for (const Edge& e : x.edges()) {
        if (!y.has_edge(e.u, e.v)) return false;
        if (y.edge_weight(e.u, e.v) != e.weight || y.edge_value(e.u, e.v) != e.value)
            return false;
    }
    return a.sources == b.sources;
}

namespace {

ParsedInstance build_fixture(const std::string& name) {
    if (name == "P4") {
        GraphBuilder b(4);
        b.set_label(0, "s").set_label(1, "a").set_label(2, "b").set_label(3, "c");
        b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3);
        return {b.build(), {0}, name};
    }
    if (name == "STAR4") {
        GraphBuilder b(5);
        b.set_label(0, "s");
        for (int i = 1; i <= 4; ++i) {
            b.set_label(i, "l" + std::to_string(i));
            b.add_edge(0, i);
        }
        return {b.build(), {0}, name};
    }
    if (name == "SPIDER") {
        GraphBuilder b(5);
        b.set_label(0, "s").set_label(1, "a1").set_label(2, "a2").set_label(3, "b1").set_label(4, "b2");
        b.add_edge(0, 1).add_edge(1, 2).add_edge(0, 3).add_edge(3, 4);
        return {b.build(), {0}, name};
    }
    if (name == "UNI6") {
        GraphBuilder b(6);
        b.set_label(0, "s").set_label(1, "c0").set_label(2, "c1").set_label(3, "c2").set_label(4, "c3").set_label(5, "d");
        b.add_edge(0, 1);                                        // s - c0
        b.add_edge(1, 2).add_edge(2, 3).add_edge(3, 4).add_edge(1, 4);  // cycle
        b.add_edge(3, 5);                                        // pendant on c2
        return {b.build(), {0}, name};
    }
    if (name == "C4") {
        GraphBuilder b(4);
        for (int i = 0; i < 4; ++i) b.set_label(i, "c" + std::to_string(i));
        b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(0, 3);
        return {b.build(), {0}, name};
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace

std::vector<std::string> fixture_names() { return {"P4", "STAR4", "SPIDER", "UNI6", "C4"}; }

ParsedInstance make_fixture(const std::string& name) { return build_fixture(name); }

ParsedInstance load_instance(const std::string& name_or_path) {
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return make_fixture(name_or_path);
    return parse_graph_file(name_or_path);
}

}  // namespace firefighter
