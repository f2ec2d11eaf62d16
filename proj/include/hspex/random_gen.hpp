#pragma once

#include <random>

#include "hspex/hypergraph.hpp"

namespace hspex {

// Each r-subset of {0..n-1} becomes an edge independently with probability p.
Hypergraph random_hypergraph(int n, int r, double p, std::mt19937_64& rng);

// Same, but resamples until at least one edge is present.
Hypergraph random_nonempty_hypergraph(int n, int r, double p, std::mt19937_64& rng);

}  // namespace hspex
