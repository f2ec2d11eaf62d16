#pragma once

#include <functional>

#include "hspex/hypergraph.hpp"

namespace hspex {

enum class EnumMode {
  exhaustive,   // every labelled graph, increasing edge-bitmask order
  iso_reduced,  // one representative per isomorphism class, breadth-first by
                // edge count, canonical forms, key-sorted within each level
};

// Streams r-uniform hypergraphs on n vertices through 'sink'.
//
// The filter gates which graphs reach the sink.  In iso_reduced mode it must
// be closed under taking subgraphs (monotone): a class failing it is pruned
// together with every extension, which is what makes the search tractable.
// In exhaustive mode the filter is a plain gate and may be arbitrary.
//
// Guardrails: exhaustive requires C(n,r) <= 36; iso_reduced requires n <= 10
// for r = 2 and n <= 7 for r >= 3.
void enumerate_hypergraphs(int n, int r, EnumMode mode,
                           const std::function<bool(const Hypergraph&)>& filter,
                           const std::function<void(const Hypergraph&)>& sink);

}  // namespace hspex
