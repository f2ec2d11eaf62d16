#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hspex/hypergraph.hpp"

namespace hspex {

// A palette of l colors together with the admissible color multisets of an
// edge, each stored as a multiplicity vector (m_0..m_{l-1}) summing to r.
struct Pattern {
  int l = 1;
  int r = 2;
  std::vector<std::vector<int>> rows;  // sorted, distinct

  bool allows(const std::vector<int>& mult) const;
  std::string to_text() const;
};

using Coloring = std::vector<int>;  // vertex -> color in 0..l-1

Pattern make_pattern(int l, int r, std::vector<std::vector<int>> rows);

// All r-subsets of the palette: colorable graphs are the l-partite ones.
Pattern clique_pattern(int l, int r);

// Every multiset except the constant ones: colorable graphs are those with no
// edge inside a single color class (weak k-colorability).
Pattern chromatic_pattern(int k, int r);

// Single color, single row (r): every graph is colorable.
Pattern single_color_pattern(int r);

std::vector<int> edge_color_multiplicity(const Pattern& p, const Edge& e, const Coloring& phi);

bool is_valid_coloring(const Hypergraph& h, const Pattern& p, const Coloring& phi);

// Deterministic backtracking search for a valid coloring: vertices in
// decreasing degree order, colors in increasing order.
std::optional<Coloring> find_homomorphism(const Hypergraph& h, const Pattern& p);

struct ColoredGraph {
  Hypergraph graph;
  Coloring coloring;
};

// The edge-maximal colorable graph with the given class sizes: classes are
// consecutive vertex ranges and every admissible r-set is an edge.
ColoredGraph maximal_colorable(const std::vector<int>& sizes, const Pattern& p);

// Edge count of maximal_colorable as a closed form; tolerates class sizes far
// beyond what can be materialized.
double colorable_edge_count(const std::vector<int>& sizes, const Pattern& p);

// Add one clone of color class cls: the new vertex joins every edge in place
// of each class member.  Errors when the class is empty.
ColoredGraph clone_vertex(const Hypergraph& h, const Coloring& phi, int cls);

struct ClosureReport {
  bool pass = false;
  std::string detail;
};

// Checks that phi is valid, its restriction to the induced subgraph on
// 'subset' stays valid, and its lift through blow_up(h, mult) stays valid.
ClosureReport closure_check(const Hypergraph& h, const Pattern& p, const Coloring& phi,
                            const std::vector<int>& mult, const std::vector<int>& subset);

// Simplex polynomial of the pattern: sum over rows of (r!/prod m_i!) y^m.
double pattern_poly(const Pattern& p, std::span<const double> y);
std::vector<double> pattern_poly_gradient(const Pattern& p, std::span<const double> y);

// Enumerates forbidden-family-free graphs on n vertices whose minimum degree
// reaches (density/(r-1)! - eps) n^{r-1} and returns those with no valid
// coloring, deduplicated up to isomorphism.  'density' is the caller-supplied
// edge density of the forbidden family's extremal graphs.
std::vector<Hypergraph> degree_stability_probe(const std::vector<Hypergraph>& forbidden,
                                               const Pattern& p, int n, double eps,
                                               double density);

// Text format: "pat <l> <r> <m>" then m multiplicity rows.
Pattern parse_pattern(const std::string& text);

}  // namespace hspex
