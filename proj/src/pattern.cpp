#include "hspex/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "hspex/combin.hpp"
#include "hspex/enumerate.hpp"
#include "hspex/isomorphism.hpp"

namespace hspex {

bool Pattern::allows(const std::vector<int>& mult) const {
  return std::binary_search(rows.begin(), rows.end(), mult);
}

std::string Pattern::to_text() const {
  std::ostringstream os;
  os << "pat " << l << ' ' << r << ' ' << rows.size() << '\n';
  for (const auto& m : rows) {
    for (size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
    os << '\n';
  }
  return os.str();
}

Pattern make_pattern(int l, int r, std::vector<std::vector<int>> rows) {
  if (l < 1) throw validation_error("pattern needs at least one color");
  if (r < 2) throw validation_error("pattern arity must be at least 2");
  for (const auto& m : rows) {
    if (int(m.size()) != l) throw validation_error("pattern row length mismatch");
    int sum = 0;
    for (int v : m) {
      if (v < 0) throw validation_error("pattern multiplicities must be nonnegative");
      sum += v;
    }
    if (sum != r) throw validation_error("pattern row must sum to the arity");
  }
  std::sort(rows.begin(), rows.end());
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i] == rows[i - 1]) throw validation_error("duplicate pattern row");
  Pattern p;
  p.l = l;
  p.r = r;
  p.rows = std::move(rows);
  return p;
}

namespace {

void for_each_multiset(int l, int r, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> m(l, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == l - 1) {
      m[idx] = left;
      fn(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, r);
}

}  // namespace

Pattern clique_pattern(int l, int r) {
  if (l < r) throw validation_error("clique pattern needs l >= r");
  std::vector<std::vector<int>> rows;
  for_each_multiset(l, r, [&](const std::vector<int>& m) {
    for (int v : m)
      if (v > 1) return;
    rows.push_back(m);
  });
  return make_pattern(l, r, std::move(rows));
}

Pattern chromatic_pattern(int k, int r) {
  if (k < 2) throw validation_error("chromatic pattern needs k >= 2");
  std::vector<std::vector<int>> rows;
  for_each_multiset(k, r, [&](const std::vector<int>& m) {
    for (int v : m)
      if (v == r) return;
    rows.push_back(m);
  });
  return make_pattern(k, r, std::move(rows));
}

Pattern single_color_pattern(int r) {
  return make_pattern(1, r, {{r}});
}

std::vector<int> edge_color_multiplicity(const Pattern& p, const Edge& e, const Coloring& phi) {
  std::vector<int> mult(p.l, 0);
  for (int v : e) {
    if (phi[v] < 0 || phi[v] >= p.l) throw validation_error("color out of range");
    ++mult[phi[v]];
  }
  return mult;
}

bool is_valid_coloring(const Hypergraph& h, const Pattern& p, const Coloring& phi) {
  if (int(phi.size()) != h.n) throw validation_error("coloring length mismatch");
  if (h.r != p.r) throw validation_error("arity mismatch");
  for (const Edge& e : h.edges)
    if (!p.allows(edge_color_multiplicity(p, e, phi))) return false;
  return true;
}

namespace {

// a partial multiset is extendable when some row dominates it componentwise
bool partial_feasible(const Pattern& p, const std::vector<int>& partial) {
  for (const auto& row : p.rows) {
    bool ok = true;
    for (int c = 0; c < p.l; ++c)
      if (partial[c] > row[c]) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::optional<Coloring> find_homomorphism(const Hypergraph& h, const Pattern& p) {
  if (h.r != p.r) throw validation_error("arity mismatch");
  DegreeProfile dp = degrees(h);
  std::vector<int> order(h.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dp.degree[a] != dp.degree[b]) return dp.degree[a] > dp.degree[b];
    return a < b;
  });
  std::vector<std::vector<int>> inc(h.n);
  for (int eid = 0; eid < h.edge_count(); ++eid)
    for (int v : h.edges[eid]) inc[v].push_back(eid);

  Coloring phi(h.n, -1);
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == h.n) return true;
    int v = order[idx];
    for (int c = 0; c < p.l; ++c) {
      phi[v] = c;
      bool ok = true;
      for (int eid : inc[v]) {
        std::vector<int> partial(p.l, 0);
        bool full = true;
        for (int u : h.edges[eid]) {
          if (phi[u] < 0) {
            full = false;
            continue;
          }
          ++partial[phi[u]];
        }
        if (full ? !p.allows(partial) : !partial_feasible(p, partial)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(idx + 1)) return true;
      phi[v] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return phi;
}

ColoredGraph maximal_colorable(const std::vector<int>& sizes, const Pattern& p) {
  if (int(sizes.size()) != p.l) throw validation_error("class count mismatch");
  long long n = 0;
  for (int s : sizes) {
    if (s < 0) throw validation_error("class sizes must be nonnegative");
    n += s;
  }
  if (binom_d(n, p.r) > 2e6) throw infeasible_error("maximal colorable host too large to materialize");
  Coloring phi;
  for (int c = 0; c < p.l; ++c) phi.insert(phi.end(), sizes[c], c);
  std::vector<Edge> edges;
  for_each_subset(int(n), p.r, [&](const std::vector<int>& s) {
    std::vector<int> mult(p.l, 0);
    for (int v : s) ++mult[phi[v]];
    if (p.allows(mult)) edges.push_back(s);
  });
  ColoredGraph out;
  out.graph = make_hypergraph(int(n), p.r, std::move(edges));
  out.coloring = std::move(phi);
  return out;
}

double colorable_edge_count(const std::vector<int>& sizes, const Pattern& p) {
  if (int(sizes.size()) != p.l) throw validation_error("class count mismatch");
  double total = 0.0;
  for (const auto& row : p.rows) {
    double ways = 1.0;
    for (int c = 0; c < p.l; ++c) {
      if (row[c] == 0) continue;
      ways *= binom_d(sizes[c], row[c]);
      if (ways == 0.0) break;
    }
    total += ways;
  }
  return total;
}

ColoredGraph clone_vertex(const Hypergraph& h, const Coloring& phi, int cls) {
  if (int(phi.size()) != h.n) throw validation_error("coloring length mismatch");
  bool found = false;
  for (int v = 0; v < h.n; ++v)
    if (phi[v] == cls) found = true;
  if (!found) throw validation_error("cannot clone an empty class");
  const int k = h.n;
  std::vector<Edge> edges = h.edges;
  for (const Edge& e : h.edges)
    for (int v : e) {
      if (phi[v] != cls) continue;
      Edge f;
      for (int u : e)
        if (u != v) f.push_back(u);
      f.push_back(k);
      edges.push_back(std::move(f));
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  ColoredGraph out;
  out.graph = make_hypergraph(k + 1, h.r, std::move(edges));
  out.coloring = phi;
  out.coloring.push_back(cls);
  return out;
}

ClosureReport closure_check(const Hypergraph& h, const Pattern& p, const Coloring& phi,
                            const std::vector<int>& mult, const std::vector<int>& subset) {
  ClosureReport rep;
  if (!is_valid_coloring(h, p, phi)) {
    rep.detail = "supplied coloring is not valid";
    return rep;
  }
  Hypergraph sub = induced_subgraph(h, subset);
  Coloring sub_phi;
  for (int v : subset) sub_phi.push_back(phi[v]);
  if (!is_valid_coloring(sub, p, sub_phi)) {
    rep.detail = "restriction to induced subgraph breaks validity";
    return rep;
  }
  Blowup b = blow_up(h, mult);
  Coloring lifted;
  for (int v : b.origin) lifted.push_back(phi[v]);
  if (!is_valid_coloring(b.graph, p, lifted)) {
    rep.detail = "lift through blow-up breaks validity";
    return rep;
  }
  rep.pass = true;
  rep.detail = "restriction and blow-up lift stay valid";
  return rep;
}

double pattern_poly(const Pattern& p, std::span<const double> y) {
  if (int(y.size()) != p.l) throw validation_error("evaluation point length mismatch");
  double total = 0.0;
  for (const auto& row : p.rows) {
    double coeff = factorial_d(p.r);
    double term = 1.0;
    for (int c = 0; c < p.l; ++c) {
      coeff /= factorial_d(row[c]);
      for (int t = 0; t < row[c]; ++t) term *= y[c];
    }
    total += coeff * term;
  }
  return total;
}

std::vector<double> pattern_poly_gradient(const Pattern& p, std::span<const double> y) {
  if (int(y.size()) != p.l) throw validation_error("evaluation point length mismatch");
  std::vector<double> g(p.l, 0.0);
  for (const auto& row : p.rows) {
    double coeff = factorial_d(p.r);
    for (int c = 0; c < p.l; ++c) coeff /= factorial_d(row[c]);
    for (int c = 0; c < p.l; ++c) {
      if (row[c] == 0) continue;
      double term = coeff * row[c];
      for (int d = 0; d < p.l; ++d) {
        int pow = row[d] - (d == c ? 1 : 0);
        for (int t = 0; t < pow; ++t) term *= y[d];
      }
      g[c] += term;
    }
  }
  return g;
}

std::vector<Hypergraph> degree_stability_probe(const std::vector<Hypergraph>& forbidden,
                                               const Pattern& p, int n, double eps,
                                               double density) {
  for (const Hypergraph& f : forbidden)
    if (f.r != p.r) throw validation_error("arity mismatch in forbidden family");
  double threshold = (density / factorial_d(p.r - 1) - eps) * std::pow(double(n), p.r - 1);
  std::vector<Hypergraph> bad;
  std::map<std::string, bool> seen;
  enumerate_hypergraphs(
      n, p.r, EnumMode::exhaustive,
      [&](const Hypergraph& g) {
        if (degrees(g).min_degree < threshold) return false;
        for (const Hypergraph& f : forbidden)
          if (contains_subgraph(g, f)) return false;
        return true;
      },
      [&](const Hypergraph& g) {
        if (find_homomorphism(g, p)) return;
        std::string key = canonical_key(g);
        if (!seen.emplace(std::move(key), true).second) return;
        bad.push_back(canonical_form(g));
      });
  return bad;
}

Pattern parse_pattern(const std::string& text) {
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
  long long l, r, m;
  if (!(head >> tag >> l >> r >> m) || tag != "pat")
    throw parse_error("expected header 'pat <l> <r> <m>'", lineno);
  if (l < 1 || r < 2 || m < 0) throw parse_error("header values out of range", lineno);
  std::vector<std::vector<int>> rows;
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw parse_error("missing pattern row", lineno + 1);
    std::istringstream rs(line);
    std::vector<int> row;
    long long v;
    while (rs >> v) row.push_back(int(v));
    if (static_cast<long long>(row.size()) != l) throw parse_error("pattern row has wrong length", lineno);
    rows.push_back(std::move(row));
  }
  try {
    return make_pattern(int(l), int(r), std::move(rows));
  } catch (const validation_error& ve) {
    throw parse_error(ve.what(), lineno);
  }
}

}  // namespace hspex
