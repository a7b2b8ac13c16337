#pragma once

#include <cstdint>

#include "firefighter/graph_io.hpp"

namespace firefighter {

enum class InstanceKind { Tree, Unicyclic, BoundedDegree, TreePlusB };

InstanceKind kind_from_string(const std::string& s);
std::string kind_to_string(InstanceKind k);

// Seeded random instance with a random source; the requested family is
// re-validated before returning. d applies to BoundedDegree, b to TreePlusB.
ParsedInstance generate_instance(InstanceKind kind, int n, int d, int b, uint64_t seed);

}  // namespace firefighter
