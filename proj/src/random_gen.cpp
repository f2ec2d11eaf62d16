#include "hspex/random_gen.hpp"

#include "hspex/combin.hpp"

namespace hspex {

Hypergraph random_hypergraph(int n, int r, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    if (coin(rng) < p) edges.push_back(s);
  });
  return make_hypergraph(n, r, std::move(edges));
}

Hypergraph random_nonempty_hypergraph(int n, int r, double p, std::mt19937_64& rng) {
  for (int tries = 0; tries < 1000; ++tries) {
    Hypergraph h = random_hypergraph(n, r, p, rng);
    if (h.edge_count() > 0) return h;
  }
  return edge_hypergraph(r);
}

}  // namespace hspex
