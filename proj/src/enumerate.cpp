#include "hspex/enumerate.hpp"

#include <algorithm>
#include <map>

#include "hspex/combin.hpp"
#include "hspex/isomorphism.hpp"

namespace hspex {

namespace {

std::vector<Edge> edge_universe(int n, int r) {
  std::vector<Edge> all;
  for_each_subset(n, r, [&](const std::vector<int>& s) { all.push_back(s); });
  return all;
}

void enumerate_exhaustive(int n, int r,
                          const std::function<bool(const Hypergraph&)>& filter,
                          const std::function<void(const Hypergraph&)>& sink) {
  std::vector<Edge> all = edge_universe(n, r);
  if (all.size() > 36) throw infeasible_error("exhaustive enumeration caps C(n,r) at 36");
  const std::uint64_t total = std::uint64_t(1) << all.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) edges.push_back(all[b]);
    Hypergraph h = make_hypergraph(n, r, std::move(edges));
    if (!filter || filter(h)) sink(h);
  }
}

void enumerate_iso(int n, int r,
                   const std::function<bool(const Hypergraph&)>& filter,
                   const std::function<void(const Hypergraph&)>& sink) {
  if ((r == 2 && n > 10) || (r >= 3 && n > 7))
    throw infeasible_error("iso-reduced enumeration caps n at 10 (r=2) / 7 (r>=3)");
  std::vector<Edge> all = edge_universe(n, r);

  Hypergraph empty = make_hypergraph(n, r, {});
  if (filter && !filter(empty)) return;

  // breadth-first over edge counts, dedup each level by canonical key
  std::map<std::string, Hypergraph> level;
  level.emplace(canonical_key(empty), empty);
  while (!level.empty()) {
    for (const auto& kv : level) sink(kv.second);
    std::map<std::string, Hypergraph> next;
    for (const auto& kv : level) {
      const Hypergraph& g = kv.second;
      for (const Edge& e : all) {
        if (g.has_edge(e)) continue;
        std::vector<Edge> edges = g.edges;
        edges.push_back(e);
        Hypergraph cand = make_hypergraph(n, r, std::move(edges));
        if (filter && !filter(cand)) continue;
        std::string key = canonical_key(cand);
        if (!next.count(key)) next.emplace(std::move(key), canonical_form(cand));
      }
    }
    level = std::move(next);
  }
}

}  // namespace

void enumerate_hypergraphs(int n, int r, EnumMode mode,
                           const std::function<bool(const Hypergraph&)>& filter,
                           const std::function<void(const Hypergraph&)>& sink) {
  if (n < 0 || r < 2) throw validation_error("bad enumeration parameters");
  if (r > n) {
    // only the empty graph exists
    Hypergraph empty = make_hypergraph(n, r, {});
    if (!filter || filter(empty)) sink(empty);
    return;
  }
  if (mode == EnumMode::exhaustive)
    enumerate_exhaustive(n, r, filter, sink);
  else
    enumerate_iso(n, r, filter, sink);
}

}  // namespace hspex
