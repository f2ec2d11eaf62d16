#include "hspex/chromatic.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hspex {

namespace {

struct Adj {
  int n;
  std::vector<std::uint64_t> nbr;
  explicit Adj(const Hypergraph& g) : n(g.n), nbr(g.n, 0) {
    for (const Edge& e : g.edges) {
      nbr[e[0]] |= std::uint64_t(1) << e[1];
      nbr[e[1]] |= std::uint64_t(1) << e[0];
    }
  }
};

int greedy_clique(const Adj& a) {
  int best = a.n > 0 ? 1 : 0;
  for (int seed = 0; seed < a.n; ++seed) {
    std::uint64_t cand = a.nbr[seed];
    int size = 1;
    while (cand) {
      int pick = -1, deg = -1;
      for (int v = 0; v < a.n; ++v) {
        if (!(cand >> v & 1)) continue;
        int d = __builtin_popcountll(a.nbr[v] & cand);
        if (d > deg) deg = d, pick = v;
      }
      ++size;
      cand &= a.nbr[pick];
    }
    best = std::max(best, size);
  }
  return best;
}

bool colorable(const Adj& a, int k) {
  std::vector<int> color(a.n, -1);
  std::vector<int> order(a.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return __builtin_popcountll(a.nbr[x]) > __builtin_popcountll(a.nbr[y]);
  });
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == a.n) return true;
    int v = order[idx];
    int used_cap = 0;
    for (int u = 0; u < a.n; ++u)
      if (color[u] >= 0) used_cap = std::max(used_cap, color[u] + 1);
    for (int c = 0; c < std::min(k, used_cap + 1); ++c) {
      bool clash = false;
      for (int u = 0; u < a.n; ++u)
        if (color[u] == c && (a.nbr[v] >> u & 1)) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[v] = c;
      if (rec(idx + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

int chromatic_number(const Hypergraph& g) {
  if (g.r != 2) throw validation_error("chromatic number implemented for 2-graphs");
  if (g.n > 16) throw infeasible_error("chromatic number capped at n <= 16");
  if (g.n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  Adj a(g);
  int lb = greedy_clique(a);
  for (int k = lb;; ++k)
    if (colorable(a, k)) return k;
}

bool is_color_critical(const Hypergraph& f, int l) {
  if (chromatic_number(f) != l) return false;
  for (int drop = 0; drop < f.edge_count(); ++drop) {
    std::vector<Edge> edges;
    for (int i = 0; i < f.edge_count(); ++i)
      if (i != drop) edges.push_back(f.edges[i]);
    Hypergraph g = make_hypergraph(f.n, f.r, std::move(edges));
    if (chromatic_number(g) == l - 1) return true;
  }
  return false;
}

}  // namespace hspex
