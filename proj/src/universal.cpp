#include "firefighter/universal.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <string>

namespace firefighter {

namespace {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<uint64_t>(n - k + i) / i;
    return r;
}

// enumerate all k-subsets of {0..n-1} in lexicographic order
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

uint32_t extract_pattern(uint64_t vec, const std::vector<int>& positions) {
    uint32_t pat = 0;
    for (size_t i = 0; i < positions.size(); ++i)
        if (vec >> positions[i] & 1) pat |= (1u << i);
    return pat;
}

}  // namespace

bool is_universal(const UniversalFamily& f, uint64_t work_budget) {
    if (f.t < 0 || f.t > f.n || f.n > 64)
        throw std::invalid_argument("need 0 <= t <= n <= 64");
    uint64_t cost = binomial(f.n, f.t) * (1ull << f.t) *
                    std::max<uint64_t>(1, f.vectors.size() / 8);
    if (cost > work_budget)
        throw std::runtime_error("universality check unverifiable at this size");
    if (f.t == 0) return true;
    bool ok = true;
    for_each_subset(f.n, f.t, [&](const std::vector<int>& positions) {
        if (!ok) return;
        std::vector<char> seen(1ull << f.t, 0);
        uint32_t count = 0;
        for (uint64_t vec : f.vectors) {
            uint32_t pat = extract_pattern(vec, positions);
            if (!seen[pat]) {
                seen[pat] = 1;
                if (++count == (1u << f.t)) break;
            }
        }
        if (count != (1u << f.t)) ok = false;
    });
    return ok;
}

UniversalFamily build_universal_set(int n, int t, uint64_t seed, size_t max_vectors) {
    if (t < 0 || t > n || n > 64) throw std::invalid_argument("need 0 <= t <= n <= 64");
    UniversalFamily f{n, t, {}};
    if (t == 0) {
        f.vectors.push_back(0);
        return f;
    }

    // every (subset, pattern) pair must be hit by some vector
    std::vector<std::vector<int>> subsets;
    for_each_subset(n, t, [&](const std::vector<int>& s) { subsets.push_back(s); });
    const uint32_t patterns = 1u << t;
    std::vector<std::vector<char>> covered(subsets.size(),
                                           std::vector<char>(patterns, 0));
    uint64_t missing = static_cast<uint64_t>(subsets.size()) * patterns;

    auto cover = [&](uint64_t vec) {
        uint64_t hit = 0;
        for (size_t si = 0; si < subsets.size(); ++si) {
            uint32_t pat = extract_pattern(vec, subsets[si]);
            if (!covered[si][pat]) {
                covered[si][pat] = 1;
                ++hit;
            }
        }
        missing -= hit;
        return hit;
    };
    auto would_cover = [&](uint64_t vec) {
        uint64_t hit = 0;
        for (size_t si = 0; si < subsets.size(); ++si)
            if (!covered[si][extract_pattern(vec, subsets[si])]) ++hit;
        return hit;
    };

    std::mt19937_64 rng(seed);
    uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);

    auto add = [&](uint64_t vec) {
        f.vectors.push_back(vec);
        cover(vec);
    };
    add(0);
    add(mask);

    while (missing > 0) {
        if (f.vectors.size() >= max_vectors)
            throw std::runtime_error("universal set construction failed within budget");
        // one targeted candidate guarantees progress; random ones speed it up
        uint64_t best_vec = 0;
        uint64_t best_hit = 0;
        for (size_t si = 0; si < subsets.size() && best_hit == 0; ++si)
            for (uint32_t pat = 0; pat < patterns; ++pat)
                if (!covered[si][pat]) {
                    uint64_t vec = rng() & mask;
                    for (size_t b = 0; b < subsets[si].size(); ++b) {
                        uint64_t bit = 1ull << subsets[si][b];
                        if (pat >> b & 1)
                            vec |= bit;
                        else
                            vec &= ~bit;
                    }
                    best_vec = vec;
                    best_hit = would_cover(vec);
                    break;
                }
        for (int trial = 0; trial < 48; ++trial) {
            uint64_t vec = rng() & mask;
            uint64_t hit = would_cover(vec);
            if (hit > best_hit) {
                best_hit = hit;
                best_vec = vec;
            }
        }
        add(best_vec);
    }
    return f;
}

std::vector<std::vector<Color>> derandomized_colorings(int n, int t, int colors,
                                                       uint64_t seed) {
    if (colors != 2 && colors != 3)
        throw std::invalid_argument("coloring stream supports 2 or 3 colors");
    std::vector<std::vector<Color>> stream;
    if (colors == 2) {
        UniversalFamily f = build_universal_set(n, t, seed);
        for (uint64_t vec : f.vectors) {
            std::vector<Color> c(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                c[static_cast<size_t>(i)] = (vec >> i & 1) ? Color::Green : Color::Red;
            stream.push_back(std::move(c));
        }
    } else {
        UniversalFamily a = build_universal_set(n, t, seed);
        UniversalFamily b = build_universal_set(n, t, seed + 0x9e3779b97f4a7c15ull);
        for (uint64_t va : a.vectors)
            for (uint64_t vb : b.vectors) {
                std::vector<Color> c(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) {
                    int two = static_cast<int>(va >> i & 1) * 2 +
                              static_cast<int>(vb >> i & 1);
                    // 00 -> Red, 01 -> Green, 10/11 -> Yellow
                    c[static_cast<size_t>(i)] =
                        two == 0 ? Color::Red : (two == 1 ? Color::Green : Color::Yellow);
                }
                stream.push_back(std::move(c));
            }
    }
    return stream;
}

void save_family(const UniversalFamily& f, std::ostream& out) {
    out << "u " << f.n << " " << f.t << " " << f.vectors.size() << "\n";
    for (uint64_t vec : f.vectors) {
        std::string line(static_cast<size_t>(f.n), '0');
        for (int i = 0; i < f.n; ++i)
            if (vec >> i & 1) line[static_cast<size_t>(i)] = '1';
        out << line << "\n";
    }
}

UniversalFamily load_family(std::istream& in) {
    std::string tag;
    UniversalFamily f;
    size_t count = 0;
    if (!(in >> tag >> f.n >> f.t >> count) || tag != "u")
        throw std::runtime_error("bad universal family header");
    if (f.n < 0 || f.n > 64) throw std::runtime_error("bad family vector length");
    for (size_t i = 0; i < count; ++i) {
        std::string line;
        if (!(in >> line) || line.size() != static_cast<size_t>(f.n))
            throw std::runtime_error("bad family bitstring");
        uint64_t vec = 0;
        for (int b = 0; b < f.n; ++b) {
            if (line[static_cast<size_t>(b)] == '1')
                vec |= (1ull << b);
            else if (line[static_cast<size_t>(b)] != '0')
                throw std::runtime_error("bad family bitstring");
        }
        f.vectors.push_back(vec);
    }
    return f;
}

}  // namespace firefighter
