#pragma once

#include <string>

#include "hspex/hypergraph.hpp"

namespace hspex {

// Canonically relabelled copy of h: the result is identical for every
// relabelling of the same graph.  Exact search; refuses n > 12.
Hypergraph canonical_form(const Hypergraph& h);

// Compact string key of canonical_form(h), suitable for hashing.
std::string canonical_key(const Hypergraph& h);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);

// Partition of the vertices by the transitive closure of "swapping u and v
// leaves the edge set unchanged".  Vertices in one block are mutually
// interchangeable by automorphisms.
VertexPartition transposition_orbits(const Hypergraph& h);

}  // namespace hspex
