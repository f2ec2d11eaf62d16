#include "hspex/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hspex {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// true when exchanging u and v maps the edge set onto itself
bool swap_preserves(const Hypergraph& h, int u, int v) {
  for (const Edge& e : h.edges) {
    bool hu = std::binary_search(e.begin(), e.end(), u);
    bool hv = std::binary_search(e.begin(), e.end(), v);
    if (hu == hv) continue;
    Edge f = e;
    for (int& x : f) x = (x == u) ? v : (x == v ? u : x);
    std::sort(f.begin(), f.end());
    if (!h.has_edge(f)) return false;
  }
  return true;
}

// Iterated neighbourhood refinement.  Class ids depend only on the graph's
// structure, never on the labelling, so they can participate in the
// canonical objective below.
std::vector<int> invariant_classes(const Hypergraph& h) {
  const int n = h.n;
  std::vector<std::vector<int>> inc(n);
  for (int eid = 0; eid < h.edge_count(); ++eid)
    for (int v : h.edges[eid]) inc[v].push_back(eid);

  std::vector<int> klass(n, 0);
  DegreeProfile dp = degrees(h);
  {
    std::map<int, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(dp.degree[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    for (int v = 0; v < n; ++v) klass[v] = ids[dp.degree[v]];
  }

  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> profile;
      for (int eid : inc[v]) {
        std::vector<int> t;
        for (int u : h.edges[eid])
          if (u != v) t.push_back(klass[u]);
        std::sort(t.begin(), t.end());
        profile.push_back(std::move(t));
      }
      std::sort(profile.begin(), profile.end());
      sig[v].push_back(klass[v]);
      for (const auto& t : profile) {
        sig[v].push_back(-1);
        sig[v].insert(sig[v].end(), t.begin(), t.end());
      }
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ids[sig[v]];
    if (fresh == klass) break;
    klass = std::move(fresh);
  }
  return klass;
}

using Batch = std::vector<std::vector<int>>;  // completed edges at one level

// lexicographic with a missing element counting as +infinity, so the batch
// holding more (or smaller) edges wins
int compare_batches(const Batch& a, const Batch& b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() > b.size() ? -1 : 1;
}

struct Canonicalizer {
  const Hypergraph& h;
  int n;
  std::vector<std::vector<int>> inc;
  std::vector<int> klass;
  std::vector<std::vector<char>> swapok;

  std::vector<int> newlabel;  // old vertex -> assigned label, -1 if free
  std::vector<int> seq;       // level -> old vertex

  bool have_best = false;
  std::vector<int> best_seq;
  std::vector<int> best_class_seq;
  std::vector<Batch> best_batches;

  explicit Canonicalizer(const Hypergraph& g) : h(g), n(g.n) {
    inc.assign(n, {});
    for (int eid = 0; eid < h.edge_count(); ++eid)
      for (int v : h.edges[eid]) inc[v].push_back(eid);
    klass = invariant_classes(h);
    swapok.assign(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        swapok[u][v] = swapok[v][u] = swap_preserves(h, u, v) ? 1 : 0;
    newlabel.assign(n, -1);
    seq.assign(n, -1);
  }

  Batch batch_for(int v, int level) const {
    Batch out;
    for (int eid : inc[v]) {
      std::vector<int> t;
      bool full = true;
      for (int u : h.edges[eid]) {
        if (u == v) continue;
        if (newlabel[u] < 0) {
          full = false;
          break;
        }
        t.push_back(newlabel[u]);
      }
      if (!full) continue;
      t.push_back(level);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Returns true when a leaf below replaced the incumbent.  The caller must
  // then drop its strictly-better flag: the new incumbent runs through the
  // caller's own path, so later siblings tie the incumbent prefix exactly and
  // have to be compared against it, not waved through.
  bool dfs(int level, bool strictly_better, std::vector<Batch>& cur_batches) {
    if (level == n) {
      if (strictly_better || !have_best) {
        have_best = true;
        best_seq = seq;
        best_batches = cur_batches;
        best_class_seq.resize(n);
        for (int d = 0; d < n; ++d) best_class_seq[d] = klass[seq[d]];
        return true;
      }
      return false;
    }

    // one representative per swap-orbit of the free vertices
    Dsu dsu(n);
    for (int u = 0; u < n; ++u) {
      if (newlabel[u] >= 0) continue;
      for (int v = u + 1; v < n; ++v)
        if (newlabel[v] < 0 && swapok[u][v]) dsu.unite(u, v);
    }
    struct Cand {
      int klass;
      Batch batch;
      int vertex;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < n; ++v) {
      if (newlabel[v] >= 0 || dsu.find(v) != v) continue;
      cands.push_back({klass[v], batch_for(v, level), v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.klass != b.klass) return a.klass < b.klass;
      int c = compare_batches(a.batch, b.batch);
      if (c != 0) return c < 0;
      return a.vertex < b.vertex;
    });

    bool replaced = false;
    for (const Cand& c : cands) {
      bool child_better = strictly_better;
      if (!child_better && have_best) {
        if (c.klass != best_class_seq[level]) {
          if (c.klass > best_class_seq[level]) break;  // sorted: the rest lose too
          child_better = true;
        } else {
          int cmp = compare_batches(c.batch, best_batches[level]);
          if (cmp > 0) break;
          if (cmp < 0) child_better = true;
        }
      }
      newlabel[c.vertex] = level;
      seq[level] = c.vertex;
      cur_batches[level] = c.batch;
      if (dfs(level + 1, child_better, cur_batches)) {
        replaced = true;
        strictly_better = false;
      }
      newlabel[c.vertex] = -1;
      seq[level] = -1;
    }
    return replaced;
  }
};

}  // namespace

Hypergraph canonical_form(const Hypergraph& h) {
  if (h.n > 12) throw infeasible_error("canonical labelling is exact only for n <= 12");
  if (h.n == 0) return h;
  Canonicalizer c(h);
  std::vector<Batch> cur(c.n);
  c.dfs(0, false, cur);
  std::vector<int> relabel(h.n, -1);
  for (int d = 0; d < h.n; ++d) relabel[c.best_seq[d]] = d;
  std::vector<Edge> edges;
  edges.reserve(h.edges.size());
  for (const Edge& e : h.edges) {
    Edge f;
    f.reserve(e.size());
    for (int v : e) f.push_back(relabel[v]);
    edges.push_back(std::move(f));
  }
  return make_hypergraph(h.n, h.r, std::move(edges));
}

std::string canonical_key(const Hypergraph& h) {
  Hypergraph c = canonical_form(h);
  std::string key;
  key.reserve(3 + c.edges.size() * (c.r + 1));
  key.push_back(char(c.n));
  key.push_back(char(c.r));
  for (const Edge& e : c.edges) {
    for (int v : e) key.push_back(char(v));
    key.push_back(char(127));
  }
  return key;
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n != b.n || a.r != b.r || a.edge_count() != b.edge_count()) return false;
  DegreeProfile da = degrees(a), db = degrees(b);
  std::vector<int> sa = da.degree, sb = db.degree;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return canonical_key(a) == canonical_key(b);
}

VertexPartition transposition_orbits(const Hypergraph& h) {
  Dsu dsu(h.n);
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v)
      if (swap_preserves(h, u, v)) dsu.unite(u, v);
  VertexPartition p;
  p.block_of.assign(h.n, -1);
  std::map<int, int> root_to_block;
  for (int v = 0; v < h.n; ++v) {
    int rt = dsu.find(v);
    auto it = root_to_block.find(rt);
    if (it == root_to_block.end()) {
      it = root_to_block.emplace(rt, int(p.blocks.size())).first;
      p.blocks.emplace_back();
    }
    p.block_of[v] = it->second;
    p.blocks[it->second].push_back(v);
  }
  return p;
}

}  // namespace hspex
