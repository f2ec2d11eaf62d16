#pragma once

#include "hspex/hypergraph.hpp"

namespace hspex {

// Chromatic number of a 2-graph by branch and bound (clique lower bound,
// most-constrained vertex first).  Desk scale; refuses n > 16.
int chromatic_number(const Hypergraph& g);

// True when chi(f) == l and deleting some edge drops the chromatic number.
bool is_color_critical(const Hypergraph& f, int l);

}  // namespace hspex
