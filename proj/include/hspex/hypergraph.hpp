#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hspex/errors.hpp"

namespace hspex {

using Edge = std::vector<int>;  // strictly increasing vertex ids

// r-uniform hypergraph on vertex set {0..n-1}.  Edges are kept sorted (each
// edge ascending, the edge list lexicographic) so equal graphs have equal
// representations and containment checks can binary-search.
struct Hypergraph {
  int n = 0;
  int r = 2;
  std::vector<Edge> edges;

  int edge_count() const { return int(edges.size()); }
  bool has_edge(const Edge& sorted_edge) const;

  // One bitmask per edge; requires n <= 64.
  std::vector<std::uint64_t> edge_masks() const;

  std::string to_text() const;
};

struct DegreeProfile {
  std::vector<int> degree;
  int min_degree = 0;
  int max_degree = 0;
};

struct VertexPartition {
  std::vector<std::vector<int>> blocks;  // sorted blocks, ordered by least member
  std::vector<int> block_of;
};

// Validates and normalizes the edge list: every edge must have r distinct
// vertices inside range, and no edge may repeat.
Hypergraph make_hypergraph(int n, int r, std::vector<Edge> edges);

DegreeProfile degrees(const Hypergraph& h);

// Subgraph induced on 'keep' (sorted, distinct); vertices are relabelled to
// 0..keep.size()-1 preserving order.
Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep);

Hypergraph delete_vertex(const Hypergraph& h, int v);

struct Blowup {
  Hypergraph graph;
  std::vector<int> origin;  // new vertex -> source vertex in h
};

// Replace vertex i by mult[i] >= 1 clones; an edge expands to every choice of
// one clone per endpoint.  Clones of v are consecutive.
Blowup blow_up(const Hypergraph& h, const std::vector<int>& mult);

// r-expansion of a 2-graph: each edge gets r-2 fresh vertices of its own.
Hypergraph expansion(const Hypergraph& f, int r);

Hypergraph complete_hypergraph(int n, int r);
Hypergraph edge_hypergraph(int r);

// Balanced block sizes for n vertices in l blocks; the remainder goes to the
// lowest-indexed blocks.
std::vector<int> balanced_sizes(int n, int l);

// Complete l-partite r-graph with balanced blocks: edges meet every block at
// most once.  Requires l >= r.
Hypergraph turan_hypergraph(int n, int l, int r);

// Complete k-chromatic r-graph with balanced blocks: all r-sets except those
// lying inside a single block.  Requires k >= 2.
Hypergraph chromatic_turan(int n, int k, int r);

// One base edge {0..r-1} plus, for every pair {i,j} of {0..l-1} not inside the
// base, an edge {i,j} together with its own r-2 fresh vertices (allocated in
// lexicographic pair order starting at vertex l).  Requires l > r.
Hypergraph pair_expansion(int r, int l);

Hypergraph cycle_graph(int k);
Hypergraph path_graph(int k);

// True when pat has an injective vertex map into host sending every edge of
// pat onto an edge of host.  Optionally reports one such map.
bool contains_subgraph(const Hypergraph& host, const Hypergraph& pat,
                       std::vector<int>* witness = nullptr);

// Text format:  "hg <n> <r> <m>" then m lines of r vertex ids.
Hypergraph parse_hypergraph(const std::string& text);

}  // namespace hspex
