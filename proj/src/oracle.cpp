#include "firefighter/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <unordered_map>

namespace firefighter {

namespace {

constexpr long long kRunToEnd = std::numeric_limits<long long>::max() / 4;

struct FireState {
    std::vector<long long> tau;  // burn time in weight units, -1 unburnt
    std::vector<char> prot;
    int round = 0;
};

class Searcher {
public:
    Searcher(const Scenario& sc, int max_rounds, const OracleLimits& limits,
             const std::vector<VertexId>& forbidden)
        : g_(sc.graph),
          p_(sc.protections_per_round),
          h_(sc.spread_depth),
          max_rounds_(max_rounds),
          limits_(limits) {
        n_ = g_.vertex_count();
        unit_memo_ok_ = n_ <= 20;
        for (const Edge& e : g_.edges())
            if (e.weight != 1) unit_memo_ok_ = false;
        forbidden_.assign(static_cast<size_t>(n_), 0);
        for (VertexId v : forbidden) {
            g_.check_vertex(v);
            forbidden_[static_cast<size_t>(v)] = 1;
        }
        start_.tau.assign(static_cast<size_t>(n_), -1);
        start_.prot.assign(static_cast<size_t>(n_), 0);
        for (VertexId s : sc.sources) start_.tau[static_cast<size_t>(s)] = 0;
        advance(start_, 0);
    }

    const FireState& start() const { return start_; }
    uint64_t states() const { return states_; }

    void advance(FireState& st, long long limit) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Edge& e : g_.edges()) {
                for (int dir = 0; dir < 2; ++dir) {
                    VertexId a = dir ? e.v : e.u;
                    VertexId b = dir ? e.u : e.v;
                    if (st.tau[static_cast<size_t>(a)] < 0) continue;
                    if (st.prot[static_cast<size_t>(b)]) continue;
                    long long arrive = st.tau[static_cast<size_t>(a)] + e.weight;
                    if (arrive > limit) continue;
                    if (st.tau[static_cast<size_t>(b)] < 0 ||
                        arrive < st.tau[static_cast<size_t>(b)]) {
                        st.tau[static_cast<size_t>(b)] = arrive;
                        changed = true;
                    }
                }
            }
        }
    }

    bool fire_can_spread(const FireState& st) const {
        for (VertexId u = 0; u < n_; ++u) {
            if (st.tau[static_cast<size_t>(u)] < 0) continue;
            for (VertexId w : g_.neighbors(u))
                if (st.tau[static_cast<size_t>(w)] < 0 && !st.prot[static_cast<size_t>(w)])
                    return true;
        }
        return false;
    }

    // unburnt, unprotected vertices the fire can still reach
    std::vector<VertexId> candidates(const FireState& st) const {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        std::deque<VertexId> queue;
        for (VertexId v = 0; v < n_; ++v)
            if (st.tau[static_cast<size_t>(v)] >= 0) {
                seen[static_cast<size_t>(v)] = 1;
                queue.push_back(v);
            }
        std::vector<VertexId> out;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g_.neighbors(u))
                if (!seen[static_cast<size_t>(w)] && !st.prot[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    if (!forbidden_[static_cast<size_t>(w)]) out.push_back(w);
                    queue.push_back(w);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    FireState step(const FireState& st, const std::vector<VertexId>& protects) const {
        FireState next = st;
        next.round = st.round + 1;
        for (VertexId v : protects) next.prot[static_cast<size_t>(v)] = 1;
        advance(next, static_cast<long long>(next.round) * h_);
        return next;
    }

    long long value_now(const FireState& st) const {
        long long total = 0;
        for (VertexId v = 0; v < n_; ++v)
            if (st.tau[static_cast<size_t>(v)] < 0) total += g_.vertex_value(v);
        for (const Edge& e : g_.edges())
            if (st.tau[static_cast<size_t>(e.u)] < 0 && st.tau[static_cast<size_t>(e.v)] < 0)
                total += e.value;
        return total;
    }

    long long final_value(const FireState& st) const {
        FireState done = st;
        advance(done, kRunToEnd);
        return value_now(done);
    }

    // all subsets of cands with size <= p, skip (empty) first, lexicographic
    std::vector<std::vector<VertexId>> actions(const std::vector<VertexId>& cands) const {
        std::vector<std::vector<VertexId>> out{{}};
        std::vector<VertexId> cur;
        auto rec = [&](auto&& self, size_t from) -> void {
            if (static_cast<int>(cur.size()) == p_) return;
            for (size_t i = from; i < cands.size(); ++i) {
                cur.push_back(cands[i]);
                out.push_back(cur);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return out;
    }

    long long best_value(const FireState& st) {
        bump();
        uint64_t key = 0;
        bool memoable = unit_memo_ok_;
        if (memoable) {
            key = pack(st);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        long long result;
        if (!fire_can_spread(st)) {
            result = value_now(st);
        } else if (st.round >= max_rounds_) {
            result = final_value(st);
        } else {
            result = std::numeric_limits<long long>::min();
            for (const auto& act : actions(candidates(st)))
                result = std::max(result, best_value(step(st, act)));
        }
        if (memoable) memo_[key] = result;
        return result;
    }

    void collect(const FireState& st, std::vector<std::vector<VertexId>>& prefix,
                 long long target, std::vector<Strategy>& out) {
        bump();
        if (!fire_can_spread(st)) {
            if (value_now(st) == target) record(prefix, out);
            return;
        }
        if (st.round >= max_rounds_) {
            if (final_value(st) == target) record(prefix, out);
            return;
        }
        for (const auto& act : actions(candidates(st))) {
            FireState child = step(st, act);
            if (best_value(child) != target) continue;
            prefix.push_back(act);
            collect(child, prefix, target, out);
            prefix.pop_back();
        }
    }

private:
    void bump() {
        if (++states_ > limits_.max_states)
            throw std::runtime_error("oracle state budget exceeded (n=" +
                                     std::to_string(n_) + ", rounds=" +
                                     std::to_string(max_rounds_) + ")");
    }

    uint64_t pack(const FireState& st) const {
        uint64_t burnt = 0, prot = 0;
        for (VertexId v = 0; v < n_; ++v) {
            if (st.tau[static_cast<size_t>(v)] >= 0) burnt |= (1ull << v);
            if (st.prot[static_cast<size_t>(v)]) prot |= (1ull << v);
        }
        return burnt | (prot << 20) | (static_cast<uint64_t>(st.round) << 40);
    }

    static void record(const std::vector<std::vector<VertexId>>& prefix,
                       std::vector<Strategy>& out) {
        Strategy st;
        st.rounds = prefix;
        while (!st.rounds.empty() && st.rounds.back().empty()) st.rounds.pop_back();
        out.push_back(std::move(st));
    }

    const Graph& g_;
    int n_;
    int p_;
    int h_;
    int max_rounds_;
    OracleLimits limits_;
    bool unit_memo_ok_;
    std::vector<char> forbidden_;
    FireState start_;
    uint64_t states_ = 0;
    std::unordered_map<uint64_t, long long> memo_;
};

std::string strategy_fingerprint(const Strategy& st) {
    std::string s;
    for (const auto& r : st.rounds) {
        for (VertexId v : r) s += std::to_string(v) + ";";
        s += ",";
    }
    return s;
}

}  // namespace

OracleResult brute_force_optimal(const Scenario& sc, int max_rounds,
                                 const OracleLimits& limits,
                                 const std::vector<VertexId>& forbidden) {
    if (sc.graph.vertex_count() > limits.max_vertices)
        throw std::runtime_error("oracle limit: " + std::to_string(sc.graph.vertex_count()) +
                                 " vertices exceeds guard " +
                                 std::to_string(limits.max_vertices));
    if (max_rounds < 0 || max_rounds > limits.max_rounds)
        throw std::runtime_error("oracle limit: " + std::to_string(max_rounds) +
                                 " rounds exceeds guard " + std::to_string(limits.max_rounds));

    Searcher search(sc, max_rounds, limits, forbidden);
    OracleResult result;
    result.best_value = search.best_value(search.start());

    std::vector<std::vector<VertexId>> prefix;
    std::vector<Strategy> raw;
    search.collect(search.start(), prefix, result.best_value, raw);

    std::set<std::string> seen;
    for (auto& st : raw)
        if (seen.insert(strategy_fingerprint(st)).second)
            result.optimal.push_back(std::move(st));

    // a strategy is irredundant when dropping any single protection loses value
    for (const Strategy& st : result.optimal) {
        bool irred = true;
        for (size_t i = 0; i < st.rounds.size() && irred; ++i) {
            for (size_t j = 0; j < st.rounds[i].size() && irred; ++j) {
                Strategy variant = st;
                variant.rounds[i].erase(variant.rounds[i].begin() + static_cast<long>(j));
                long long val;
                try {
                    val = outcome_value(sc.graph, simulate(sc, variant));
                } catch (const invalid_strategy_error&) {
                    val = -1;
                }
                if (val >= result.best_value) irred = false;
            }
        }
        result.irredundant.push_back(irred);
    }
    result.states = search.states();
    return result;
}

DecisionResult brute_force_burnt_decision(const Graph& g, VertexId s, int k,
                                          BurntMode mode, const OracleLimits& limits) {
    if (k <= 0) throw std::invalid_argument("k must be positive");
    g.check_vertex(s);
    if (g.vertex_count() > limits.max_vertices)
        throw std::runtime_error("oracle limit: too many vertices");
    for (const Edge& e : g.edges())
        if (e.weight != 1)
            throw std::invalid_argument("burnt-count decisions need unit weights");

    const int n = g.vertex_count();
    // state: burnt mask, protected mask; spread is one layer per round
    auto spread = [&](uint64_t burnt, uint64_t prot) {
        uint64_t add = 0;
        for (VertexId u = 0; u < n; ++u)
            if (burnt & (1ull << u))
                for (VertexId w : g.neighbors(u))
                    if (!(burnt & (1ull << w)) && !(prot & (1ull << w))) add |= (1ull << w);
        return burnt | add;
    };
    auto contained = [&](uint64_t burnt, uint64_t prot) {
        return spread(burnt, prot) == burnt;
    };

    std::set<std::pair<uint64_t, uint64_t>> visited;
    std::vector<VertexId> play;  // one entry per round, -1 = skip
    DecisionResult result;

    auto accept = [&](uint64_t burnt, uint64_t prot) {
        int count = std::popcount(burnt);
        if (mode == BurntMode::AtMost ? count > k : count != k) return false;
        // a legal play protects something, unless the game never started
        if (prot == 0 && !play.empty()) return false;
        Strategy witness;
        for (VertexId v : play)
            witness.rounds.push_back(v == -1 ? std::vector<VertexId>{}
                                             : std::vector<VertexId>{v});
        while (!witness.rounds.empty() && witness.rounds.back().empty())
            witness.rounds.pop_back();
        result.yes = true;
        result.witness = std::move(witness);
        return true;
    };

    auto dfs = [&](auto&& self, uint64_t burnt, uint64_t prot) -> bool {
        if (std::popcount(burnt) > k) return false;
        if (contained(burnt, prot)) return accept(burnt, prot);
        if (!visited.insert({burnt, prot}).second) return false;
        // candidate protections: unburnt, unprotected, still reachable
        std::vector<VertexId> cands;
        {
            uint64_t reach = burnt, prev = 0;
            while (reach != prev) {
                prev = reach;
                reach = spread(reach, prot);
            }
            for (VertexId v = 0; v < n; ++v)
                if ((reach & (1ull << v)) && !(burnt & (1ull << v))) cands.push_back(v);
        }
        for (VertexId v : cands) {
            play.push_back(v);
            if (self(self, spread(burnt, prot | (1ull << v)), prot | (1ull << v)))
                return true;
            play.pop_back();
        }
        play.push_back(-1);
        if (self(self, spread(burnt, prot), prot)) return true;
        play.pop_back();
        return false;
    };

    dfs(dfs, 1ull << s, 0);
    return result;
}

}  // namespace firefighter
