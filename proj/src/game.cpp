#include "firefighter/game.hpp"

#include <algorithm>
#include <numeric>

namespace firefighter {

Scenario make_scenario(Graph g, std::vector<VertexId> sources, int p, int h) {
    if (sources.empty()) throw std::invalid_argument("scenario needs at least one source");
    for (VertexId s : sources) g.check_vertex(s);
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    if (p < 1) throw std::invalid_argument("protections per round must be >= 1");
    if (h < 1) throw std::invalid_argument("spread depth must be >= 1");
    return Scenario{std::move(g), std::move(sources), p, h};
}

int Strategy::protection_count() const {
    int c = 0;
    for (const auto& r : rounds) c += static_cast<int>(r.size());
    return c;
}

std::vector<VertexId> Strategy::protected_vertices() const {
    std::vector<VertexId> out;
    for (const auto& r : rounds) out.insert(out.end(), r.begin(), r.end());
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Strategy Strategy::parse(const Graph& g, std::string_view text) {
    Strategy st;
    if (trim(text).empty()) return st;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view seg =
            text.substr(pos, comma == std::string_view::npos ? text.size() - pos
                                                             : comma - pos);
        std::vector<VertexId> round;
        size_t spos = 0;
        while (spos <= seg.size()) {
            size_t semi = seg.find(';', spos);
            std::string_view tok =
                trim(seg.substr(spos, semi == std::string_view::npos ? seg.size() - spos
                                                                     : semi - spos));
            if (!tok.empty()) round.push_back(g.resolve(tok));
            if (semi == std::string_view::npos) break;
            spos = semi + 1;
        }
        st.rounds.push_back(std::move(round));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return st;
}

std::string Strategy::to_text(const Graph& g) const {
    std::string out;
    for (size_t i = 0; i < rounds.size(); ++i) {
        if (i) out += ',';
        for (size_t j = 0; j < rounds[i].size(); ++j) {
            if (j) out += ';';
            out += g.label(rounds[i][j]);
        }
    }
    return out;
}

Strategy single_rounds(const std::vector<VertexId>& order) {
    Strategy st;
    for (VertexId v : order) st.rounds.push_back({v});
    return st;
}

Strategy chunk_rounds(const std::vector<VertexId>& order, int per_round) {
    if (per_round < 1) throw std::invalid_argument("per_round must be >= 1");
    Strategy st;
    for (size_t i = 0; i < order.size(); i += static_cast<size_t>(per_round)) {
        size_t end = std::min(order.size(), i + static_cast<size_t>(per_round));
        st.rounds.emplace_back(order.begin() + static_cast<long>(i),
                               order.begin() + static_cast<long>(end));
    }
    return st;
}

GameOutcome simulate(const Scenario& sc, const Strategy& st) {
    const Graph& g = sc.graph;
    const int n = g.vertex_count();
    const int h = sc.spread_depth;

    // structural strategy validation (applies to all rounds, even those the
    // game never reaches)
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (VertexId s : sc.sources) seen[static_cast<size_t>(s)] = 2;
        for (size_t i = 0; i < st.rounds.size(); ++i) {
            int round = static_cast<int>(i) + 1;
            if (static_cast<int>(st.rounds[i].size()) > sc.protections_per_round)
                throw invalid_strategy_error(
                    "round " + std::to_string(round) + " protects more than p vertices",
                    round);
            for (VertexId v : st.rounds[i]) {
                g.check_vertex(v);
                if (seen[static_cast<size_t>(v)] == 2)
                    throw invalid_strategy_error(
                        "round " + std::to_string(round) + " protects source " + g.label(v),
                        round);
                if (seen[static_cast<size_t>(v)] == 1)
                    throw invalid_strategy_error(
                        "round " + std::to_string(round) + " protects " + g.label(v) +
                            " twice",
                        round);
                seen[static_cast<size_t>(v)] = 1;
            }
        }
    }

    std::vector<long long> tau(static_cast<size_t>(n), -1);  // burn time, weight units
    std::vector<int> protect_round(static_cast<size_t>(n), kNever);

    // fire advance to the given time limit: minimal-arrival fixpoint over
    // edges leaving the burnt region (zero-weight edges close instantly)
    auto advance = [&](long long limit) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Edge& e : g.edges()) {
                for (int dir = 0; dir < 2; ++dir) {
                    VertexId a = dir ? e.v : e.u;
                    VertexId b = dir ? e.u : e.v;
                    if (tau[static_cast<size_t>(a)] < 0) continue;
                    if (protect_round[static_cast<size_t>(b)] != kNever) continue;
                    long long arrive = tau[static_cast<size_t>(a)] + e.weight;
                    if (arrive > limit) continue;
                    if (tau[static_cast<size_t>(b)] < 0 ||
                        arrive < tau[static_cast<size_t>(b)]) {
                        tau[static_cast<size_t>(b)] = arrive;
                        changed = true;
                    }
                }
            }
        }
    };

    auto fire_can_spread = [&]() {
        for (VertexId u = 0; u < n; ++u) {
            if (tau[static_cast<size_t>(u)] < 0) continue;
            for (VertexId w : g.neighbors(u))
                if (tau[static_cast<size_t>(w)] < 0 &&
                    protect_round[static_cast<size_t>(w)] == kNever)
                    return true;
        }
        return false;
    };

    for (VertexId s : sc.sources) tau[static_cast<size_t>(s)] = 0;
    advance(0);  // zero-weight closure around the sources

    int round = 0;
    while (fire_can_spread()) {
        ++round;
        if (static_cast<size_t>(round) <= st.rounds.size()) {
            for (VertexId v : st.rounds[static_cast<size_t>(round - 1)]) {
                if (tau[static_cast<size_t>(v)] >= 0)
                    throw invalid_strategy_error("round " + std::to_string(round) +
                                                     " protects burnt vertex " + g.label(v),
                                                 round);
                protect_round[static_cast<size_t>(v)] = round;
            }
        }
        advance(static_cast<long long>(round) * h);
    }

    GameOutcome out;
    out.rounds_played = round;
    out.burn_round.assign(static_cast<size_t>(n), kNever);
    out.protect_round = protect_round;
    for (VertexId v = 0; v < n; ++v) {
        if (tau[static_cast<size_t>(v)] >= 0) {
            out.burn_round[static_cast<size_t>(v)] =
                static_cast<int>((tau[static_cast<size_t>(v)] + h - 1) / h);
            out.burnt.push_back(v);
        } else {
            out.saved.push_back(v);
        }
    }
    for (size_t i = static_cast<size_t>(round); i < st.rounds.size(); ++i)
        if (!st.rounds[i].empty()) out.strategy_truncated = true;
    return out;
}

long long outcome_value(const Graph& g, const GameOutcome& out) {
    if (static_cast<int>(out.burn_round.size()) != g.vertex_count())
        throw std::invalid_argument("outcome does not match the graph");
    long long total = 0;
    for (VertexId v : out.saved) total += g.vertex_value(v);
    for (const Edge& e : g.edges())
        if (out.burn_round[static_cast<size_t>(e.u)] == kNever &&
            out.burn_round[static_cast<size_t>(e.v)] == kNever)
            total += e.value;
    return total;
}

}  // namespace firefighter
