#include "hspex/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hspex/combin.hpp"

namespace hspex {

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
  return std::binary_search(edges.begin(), edges.end(), sorted_edge);
}

std::vector<std::uint64_t> Hypergraph::edge_masks() const {
  if (n > 64) throw infeasible_error("edge masks need n <= 64");
  std::vector<std::uint64_t> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    std::uint64_t m = 0;
    for (int v : e) m |= (std::uint64_t(1) << v);
    out.push_back(m);
  }
  return out;
}

std::string Hypergraph::to_text() const {
  std::ostringstream os;
  os << "hg " << n << ' ' << r << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) {
    for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
  return os.str();
}

Hypergraph make_hypergraph(int n, int r, std::vector<Edge> edges) {
  if (n < 0) throw validation_error("vertex count must be nonnegative");
  if (r < 2) throw validation_error("uniformity must be at least 2");
  for (Edge& e : edges) {
    if (int(e.size()) != r)
      throw validation_error("edge has " + std::to_string(e.size()) +
                             " vertices, expected " + std::to_string(r));
    std::sort(e.begin(), e.end());
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n)
        throw validation_error("vertex " + std::to_string(e[i]) + " out of range");
      if (i > 0 && e[i] == e[i - 1])
        throw validation_error("edge repeats vertex " + std::to_string(e[i]));
    }
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1]) throw validation_error("duplicate edge");
  Hypergraph h;
  h.n = n;
  h.r = r;
  h.edges = std::move(edges);
  return h;
}

DegreeProfile degrees(const Hypergraph& h) {
  DegreeProfile p;
  p.degree.assign(h.n, 0);
  for (const Edge& e : h.edges)
    for (int v : e) ++p.degree[v];
  if (h.n > 0) {
    p.min_degree = *std::min_element(p.degree.begin(), p.degree.end());
    p.max_degree = *std::max_element(p.degree.begin(), p.degree.end());
  }
  return p;
}

Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<int>& keep) {
  std::vector<int> newid(h.n, -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= h.n) throw validation_error("induced set vertex out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw validation_error("induced set must be sorted and distinct");
    newid[v] = int(i);
  }
  std::vector<Edge> kept;
  for (const Edge& e : h.edges) {
    Edge f;
    f.reserve(h.r);
    for (int v : e) {
      if (newid[v] < 0) break;
      f.push_back(newid[v]);
    }
    if (int(f.size()) == h.r) kept.push_back(std::move(f));
  }
  return make_hypergraph(int(keep.size()), h.r, std::move(kept));
}

Hypergraph delete_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.n) throw validation_error("vertex out of range");
  std::vector<int> keep;
  keep.reserve(h.n - 1);
  for (int u = 0; u < h.n; ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(h, keep);
}

Blowup blow_up(const Hypergraph& h, const std::vector<int>& mult) {
  if (int(mult.size()) != h.n) throw validation_error("multiplicity profile length mismatch");
  for (int t : mult)
    if (t < 1) throw validation_error("multiplicities must be positive");
  std::vector<int> first(h.n + 1, 0);
  for (int v = 0; v < h.n; ++v) first[v + 1] = first[v] + mult[v];
  Blowup out;
  out.origin.resize(first[h.n]);
  for (int v = 0; v < h.n; ++v)
    for (int c = 0; c < mult[v]; ++c) out.origin[first[v] + c] = v;

  std::vector<Edge> edges;
  for (const Edge& e : h.edges) {
    std::vector<int> choice(h.r, 0);
    while (true) {
      Edge f(h.r);
      for (int i = 0; i < h.r; ++i) f[i] = first[e[i]] + choice[i];
      edges.push_back(std::move(f));
      int i = h.r - 1;
      while (i >= 0 && choice[i] == mult[e[i]] - 1) choice[i--] = 0;
      if (i < 0) break;
      ++choice[i];
    }
  }
  out.graph = make_hypergraph(first[h.n], h.r, std::move(edges));
  return out;
}

Hypergraph expansion(const Hypergraph& f, int r) {
  if (f.r != 2) throw validation_error("expansion starts from a 2-graph");
  if (r < 2) throw validation_error("uniformity must be at least 2");
  if (r == 2) return f;
  std::vector<Edge> edges;
  int next = f.n;
  for (const Edge& e : f.edges) {
    Edge g = e;
    for (int t = 0; t < r - 2; ++t) g.push_back(next++);
    edges.push_back(std::move(g));
  }
  return make_hypergraph(next, r, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const std::vector<int>& s) { edges.push_back(s); });
  return make_hypergraph(n, r, std::move(edges));
}

Hypergraph edge_hypergraph(int r) {
  Edge e(r);
  std::iota(e.begin(), e.end(), 0);
  return make_hypergraph(r, r, {e});
}

std::vector<int> balanced_sizes(int n, int l) {
  if (l < 1) throw validation_error("need at least one block");
  std::vector<int> sizes(l, n / l);
  for (int i = 0; i < n % l; ++i) ++sizes[i];
  return sizes;
}

namespace {

// block id per vertex for consecutive blocks of the given sizes
std::vector<int> block_labels(const std::vector<int>& sizes) {
  std::vector<int> lab;
  for (size_t b = 0; b < sizes.size(); ++b)
    lab.insert(lab.end(), sizes[b], int(b));
  return lab;
}

}  // namespace

Hypergraph turan_hypergraph(int n, int l, int r) {
  if (l < r) throw validation_error("need at least r blocks for an r-partite graph");
  std::vector<int> lab = block_labels(balanced_sizes(n, l));
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    for (int i = 1; i < r; ++i)
      if (lab[s[i]] == lab[s[i - 1]]) return;
    edges.push_back(s);
  });
  return make_hypergraph(n, r, std::move(edges));
}

Hypergraph chromatic_turan(int n, int k, int r) {
  if (k < 2) throw validation_error("need at least two blocks");
  std::vector<int> lab = block_labels(balanced_sizes(n, k));
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    // keep unless the whole edge sits in one block
    for (int i = 1; i < r; ++i)
      if (lab[s[i]] != lab[s[0]]) {
        edges.push_back(s);
        return;
      }
  });
  return make_hypergraph(n, r, std::move(edges));
}

Hypergraph pair_expansion(int r, int l) {
  if (l <= r) throw validation_error("pair expansion needs l > r");
  std::vector<Edge> edges;
  Edge base(r);
  std::iota(base.begin(), base.end(), 0);
  edges.push_back(base);
  int next = l;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      if (j < r) continue;  // pair already covered by the base edge
      Edge e = {i, j};
      for (int t = 0; t < r - 2; ++t) e.push_back(next++);
      edges.push_back(std::move(e));
    }
  return make_hypergraph(next, r, std::move(edges));
}

Hypergraph cycle_graph(int k) {
  if (k < 3) throw validation_error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  return make_hypergraph(k, 2, std::move(edges));
}

Hypergraph path_graph(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return make_hypergraph(k, 2, std::move(edges));
}

namespace {

struct MatchState {
  const Hypergraph* host;
  const Hypergraph* pat;
  std::vector<int> order;      // pattern vertices, most constrained first
  std::vector<int> image;      // pattern vertex -> host vertex or -1
  std::vector<bool> used;      // host vertex taken
  std::vector<std::vector<int>> pat_inc;  // pattern vertex -> incident edge ids
};

// every pattern edge whose image is fully/partially decided must extend to a
// host edge; partial images only need some host edge containing them
bool edges_feasible(const MatchState& st, int just_set) {
  for (int eid : st.pat_inc[just_set]) {
    const Edge& pe = st.pat->edges[eid];
    Edge img;
    bool full = true;
    for (int pv : pe) {
      if (st.image[pv] < 0) {
        full = false;
        continue;
      }
      img.push_back(st.image[pv]);
    }
    std::sort(img.begin(), img.end());
    if (full) {
      if (!st.host->has_edge(img)) return false;
    } else {
      bool ok = false;
      for (const Edge& he : st.host->edges) {
        if (std::includes(he.begin(), he.end(), img.begin(), img.end())) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
  }
  return true;
}

bool match_from(MatchState& st, size_t depth, const DegreeProfile& hd,
                const DegreeProfile& pd) {
  if (depth == st.order.size()) return true;
  int pv = st.order[depth];
  for (int hv = 0; hv < st.host->n; ++hv) {
    if (st.used[hv] || hd.degree[hv] < pd.degree[pv]) continue;
    st.used[hv] = true;
    st.image[pv] = hv;
    if (edges_feasible(st, pv) && match_from(st, depth + 1, hd, pd)) return true;
    st.image[pv] = -1;
    st.used[hv] = false;
  }
  return false;
}

}  // namespace

bool contains_subgraph(const Hypergraph& host, const Hypergraph& pat,
                       std::vector<int>* witness) {
  if (host.r != pat.r) throw validation_error("uniformity mismatch");
  if (pat.n > host.n || pat.edge_count() > host.edge_count()) return false;
  if (pat.edge_count() == 0) {
    if (witness) {
      witness->resize(pat.n);
      std::iota(witness->begin(), witness->end(), 0);
    }
    return true;
  }
  MatchState st;
  st.host = &host;
  st.pat = &pat;
  st.image.assign(pat.n, -1);
  st.used.assign(host.n, false);
  st.pat_inc.assign(pat.n, {});
  for (int eid = 0; eid < pat.edge_count(); ++eid)
    for (int v : pat.edges[eid]) st.pat_inc[v].push_back(eid);
  DegreeProfile hd = degrees(host), pd = degrees(pat);
  st.order.resize(pat.n);
  std::iota(st.order.begin(), st.order.end(), 0);
  std::sort(st.order.begin(), st.order.end(), [&](int a, int b) {
    if (pd.degree[a] != pd.degree[b]) return pd.degree[a] > pd.degree[b];
    return a < b;
  });
  if (!match_from(st, 0, hd, pd)) return false;
  if (witness) *witness = st.image;
  return true;
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw parse_error("empty input", 1);
  std::istringstream head(line);
  std::string tag;
  long long n, r, m;
  if (!(head >> tag >> n >> r >> m) || tag != "hg")
    throw parse_error("expected header 'hg <n> <r> <m>'", lineno);
  if (n < 0 || r < 2 || m < 0) throw parse_error("header values out of range", lineno);
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw parse_error("missing edge line", lineno + 1);
    std::istringstream es(line);
    Edge e;
    long long v;
    while (es >> v) e.push_back(int(v));
    if (static_cast<long long>(e.size()) != r) throw parse_error("edge line has wrong arity", lineno);
    edges.push_back(std::move(e));
  }
  try {
    return make_hypergraph(int(n), int(r), std::move(edges));
  } catch (const validation_error& ve) {
    throw parse_error(ve.what(), lineno);
  }
}

}  // namespace hspex
