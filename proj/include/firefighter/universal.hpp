#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "firefighter/graph.hpp"

namespace firefighter {

enum class Color : uint8_t { Green = 0, Red = 1, Yellow = 2 };

// Family of binary vectors of length n realizing every bit pattern on every
// index subset of size t. Vectors are stored little-endian in uint64_t, so
// n is capped at 64 (far beyond desk scale).
struct UniversalFamily {
    int n = 0;
    int t = 0;
    std::vector<uint64_t> vectors;
};

// Exact universality check by exhausting all subsets and patterns.
// Throws when C(n,t) * 2^t exceeds the work budget.
bool is_universal(const UniversalFamily& f, uint64_t work_budget = 1ull << 32);

// Greedy cover construction: seeded, deterministic, verified small families.
// No size bound is promised beyond termination within max_vectors.
UniversalFamily build_universal_set(int n, int t, uint64_t seed = 1,
                                    size_t max_vectors = 100000);

// Finite coloring stream such that any target assignment on <= t relevant
// vertices is realized by at least one coloring. Two colors map one family
// bit per vertex; three colors combine two independent families per vertex
// (the leftover two-bit pattern collapses onto Yellow).
std::vector<std::vector<Color>> derandomized_colorings(int n, int t, int colors,
                                                       uint64_t seed = 1);

// Cache format: header "u <n> <t> <count>", then one bitstring per line.
void save_family(const UniversalFamily& f, std::ostream& out);
UniversalFamily load_family(std::istream& in);

}  // namespace firefighter
