#include "hspex/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "hspex/chromatic.hpp"
#include "hspex/combin.hpp"
#include "hspex/errors.hpp"
#include "hspex/isomorphism.hpp"

namespace hspex {

namespace {

bool family_free(const Hypergraph& g, const std::vector<Hypergraph>& forbidden) {
  for (const Hypergraph& f : forbidden)
    if (contains_subgraph(g, f)) return false;
  return true;
}

// True when adding any absent edge creates a forbidden copy.
bool edge_maximal_free(const Hypergraph& g, const std::vector<Hypergraph>& forbidden) {
  bool maximal = true;
  for_each_subset(g.n, g.r, [&](const std::vector<int>& e) {
    if (!maximal || g.has_edge(e)) return;
    std::vector<Edge> edges = g.edges;
    edges.push_back(e);
    if (family_free(make_hypergraph(g.n, g.r, std::move(edges)), forbidden))
      maximal = false;
  });
  return maximal;
}

// Witness pool deduplicated by canonical key, emitted in key order.
struct WitnessPool {
  std::map<std::string, Hypergraph> by_key;

  void add(const Hypergraph& g) {
    std::string key = canonical_key(g);
    if (!by_key.count(key)) by_key.emplace(std::move(key), canonical_form(g));
  }
  void clear() { by_key.clear(); }
  std::vector<Hypergraph> take() const {
    std::vector<Hypergraph> out;
    for (const auto& [k, g] : by_key) out.push_back(g);
    return out;
  }
};

const char* mode_name(EnumMode mode) {
  return mode == EnumMode::exhaustive ? "exhaustive" : "iso-reduced";
}

double tie_tol(double best) { return 1e-9 * std::max(1.0, std::fabs(best)); }

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  return v;
}

// A pattern treats colors symmetrically when permuting colors maps the row
// set onto itself; adjacent transpositions generate all permutations.
bool pattern_color_symmetric(const Pattern& p) {
  std::set<std::vector<int>> rows(p.rows.begin(), p.rows.end());
  for (int c = 0; c + 1 < p.l; ++c) {
    for (const auto& row : p.rows) {
      std::vector<int> swapped = row;
      std::swap(swapped[c], swapped[c + 1]);
      if (!rows.count(swapped)) return false;
    }
  }
  return true;
}

}  // namespace

ExtremalReport turan_number(const std::vector<Hypergraph>& forbidden, int n, int r,
                            EnumMode mode) {
  ExtremalReport rep;
  rep.kind = ExtremalReport::Kind::edge_count;
  rep.n = n;
  rep.r = r;
  rep.mode = mode_name(mode);

  if (forbidden.empty()) {
    Hypergraph full = complete_hypergraph(n, r);
    rep.optimum = double(full.edge_count());
    rep.witnesses.push_back(n <= 12 ? canonical_form(full) : full);
    rep.audit_flags.push_back("empty-family-shortcut");
    return rep;
  }
  for (const Hypergraph& f : forbidden)
    if (f.r != r) throw validation_error("forbidden family arity mismatch");

  int best = -1;
  WitnessPool pool;
  enumerate_hypergraphs(
      n, r, mode, [&](const Hypergraph& g) { return family_free(g, forbidden); },
      [&](const Hypergraph& g) {
        int m = g.edge_count();
        if (m > best) {
          best = m;
          pool.clear();
        }
        if (m == best) pool.add(g);
      });
  rep.optimum = double(std::max(best, 0));
  rep.witnesses = pool.take();
  return rep;
}

ExtremalReport spectral_extremal(const std::vector<Hypergraph>& forbidden, int n, int r,
                                 double alpha, const SolverConfig& config, EnumMode mode) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  ExtremalReport rep;
  rep.kind = ExtremalReport::Kind::spectral;
  rep.n = n;
  rep.r = r;
  rep.alpha = alpha;
  rep.mode = mode_name(mode);

  if (forbidden.empty()) {
    Hypergraph full = complete_hypergraph(n, r);
    SpectralEstimate est = alpha_spectral_radius(full, alpha, config);
    rep.optimum = est.lambda;
    rep.all_converged = est.converged;
    rep.witnesses.push_back(n <= 12 ? canonical_form(full) : full);
    rep.audit_flags.push_back("empty-family-shortcut");
    return rep;
  }
  for (const Hypergraph& f : forbidden)
    if (f.r != r) throw validation_error("forbidden family arity mismatch");

  std::vector<Hypergraph> candidates;
  enumerate_hypergraphs(
      n, r, mode, [&](const Hypergraph& g) { return family_free(g, forbidden); },
      [&](const Hypergraph& g) {
        // adding an edge never lowers the radius, so for alpha > 1 only
        // edge-maximal graphs can carry the maximum
        if (alpha > 1.0 && !edge_maximal_free(g, forbidden)) return;
        candidates.push_back(g);
      });

  double best = 0.0;
  std::vector<std::pair<Hypergraph, SpectralEstimate>> solved;
  for (const Hypergraph& g : candidates) {
    SpectralEstimate est = alpha_spectral_radius(g, alpha, config);
    rep.all_converged = rep.all_converged && est.converged;
    best = std::max(best, est.lambda);
    solved.push_back({g, std::move(est)});
  }

  WitnessPool pool;
  bool positive = true;
  for (const auto& [g, est] : solved) {
    if (est.lambda < best - tie_tol(best)) continue;
    pool.add(g);
    for (double v : est.vector.values)
      if (v <= 1e-8) positive = false;
  }
  rep.optimum = best;
  rep.witnesses = pool.take();
  rep.audit_flags.push_back(alpha > 1.0 ? "edge-maximal-candidates-only"
                                        : "all-candidates-solved");
  if (alpha >= double(r))
    rep.audit_flags.push_back(positive ? "witness-eigenvectors-positive"
                                       : "witness-eigenvector-has-zeros");
  if (!rep.all_converged) rep.audit_flags.push_back("solver-nonconvergence");
  return rep;
}

CompositionScan composition_scan(const Pattern& p, int n, double alpha,
                                 const SolverConfig& config) {
  if (n < 0) throw validation_error("order must be nonnegative");
  CompositionScan scan;
  scan.color_symmetric = pattern_color_symmetric(p);
  // best radius per equivalence class of compositions
  std::map<std::vector<int>, double> classes;
  bool converged = true;
  for_each_composition(n, p.l, [&](const std::vector<int>& sizes) {
    SpectralEstimate est = symmetric_spectral_radius(sizes, p, alpha, config);
    converged = converged && est.converged;
    std::vector<int> key = scan.color_symmetric ? sorted_desc(sizes) : sizes;
    auto [it, fresh] = classes.emplace(std::move(key), est.lambda);
    if (!fresh) it->second = std::max(it->second, est.lambda);
  });
  scan.all_converged = converged;

  double best = -std::numeric_limits<double>::infinity();
  double runner = -std::numeric_limits<double>::infinity();
  for (const auto& [key, lambda] : classes) {
    if (lambda > best) {
      runner = best;
      scan.runner_up = scan.best;
      best = lambda;
      scan.best = key;
    } else if (lambda > runner) {
      runner = lambda;
      scan.runner_up = key;
    }
  }
  scan.best_lambda = std::max(best, 0.0);
  scan.runner_lambda = runner > -std::numeric_limits<double>::infinity() ? runner : 0.0;
  if (classes.size() < 2) scan.runner_up.clear();
  return scan;
}

ExtremalReport spex_col(const Pattern& p, int n, double alpha,
                        const SolverConfig& config) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  ExtremalReport rep;
  rep.kind = ExtremalReport::Kind::spectral;
  rep.n = n;
  rep.r = p.r;
  rep.alpha = alpha;
  rep.mode = "colorable-candidates";

  if (n < p.r) {
    rep.witnesses.push_back(make_hypergraph(n, p.r, {}));
    rep.audit_flags.push_back("order-below-edge-size");
    return rep;
  }

  struct Entry {
    std::vector<int> sizes;
    double lambda;
  };
  std::vector<Entry> entries;
  bool symmetric = pattern_color_symmetric(p);
  double best = 0.0;
  bool converged = true;
  for_each_composition(n, p.l, [&](const std::vector<int>& sizes) {
    SpectralEstimate est = symmetric_spectral_radius(sizes, p, alpha, config);
    converged = converged && est.converged;
    best = std::max(best, est.lambda);
    entries.push_back({sizes, est.lambda});
  });
  rep.all_converged = converged;
  rep.optimum = best;

  // hosts are determined by their composition (up to isomorphism for
  // color-symmetric patterns), so deduplicate on that instead of canonical
  // forms, which keeps large orders feasible
  std::set<std::vector<int>> seen;
  for (const Entry& e : entries) {
    if (e.lambda < best - tie_tol(best)) continue;
    std::vector<int> key = symmetric ? sorted_desc(e.sizes) : e.sizes;
    if (!seen.insert(key).second) continue;
    rep.witnesses.push_back(maximal_colorable(e.sizes, p).graph);
  }

  // agreement between reduced and full-size solves on tiny universes
  if (binom_d(n, p.r) <= 20) {
    bool agree = true;
    double full_best = 0.0;
    for (const Entry& e : entries) {
      Hypergraph host = maximal_colorable(e.sizes, p).graph;
      SpectralEstimate full = alpha_spectral_radius(host, alpha, config);
      full_best = std::max(full_best, full.lambda);
      if (std::fabs(full.lambda - e.lambda) > 1e-8 * std::max(1.0, e.lambda))
        agree = false;
    }
    if (std::fabs(full_best - best) > 1e-8 * std::max(1.0, best)) agree = false;
    rep.audit_flags.push_back(agree ? "reduced-matches-full" : "reduced-full-mismatch");
  }
  return rep;
}

ExtremalReport ex_col(const Pattern& p, int n) {
  ExtremalReport rep;
  rep.kind = ExtremalReport::Kind::edge_count;
  rep.n = n;
  rep.r = p.r;
  rep.mode = "colorable-candidates";

  if (n < p.r) {
    rep.witnesses.push_back(make_hypergraph(n, p.r, {}));
    rep.audit_flags.push_back("order-below-edge-size");
    return rep;
  }

  bool symmetric = pattern_color_symmetric(p);
  double best = -1.0;
  std::vector<std::vector<int>> argmax;
  for_each_composition(n, p.l, [&](const std::vector<int>& sizes) {
    double cnt = colorable_edge_count(sizes, p);
    if (cnt > best) {
      best = cnt;
      argmax.clear();
    }
    if (cnt == best) argmax.push_back(sizes);
  });
  rep.optimum = std::max(best, 0.0);

  std::set<std::vector<int>> seen;
  for (const auto& sizes : argmax) {
    std::vector<int> key = symmetric ? sorted_desc(sizes) : sizes;
    if (!seen.insert(key).second) continue;
    rep.witnesses.push_back(maximal_colorable(sizes, p).graph);
  }
  return rep;
}

InequalityAudit inequality_audit(const Hypergraph& h, double alpha, const Pattern* p,
                                 const SolverConfig& config) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  InequalityAudit audit;
  SpectralEstimate est = alpha_spectral_radius(h, alpha, config);
  audit.lambda = est.lambda;
  audit.edges = double(h.edge_count());
  double n = double(h.n);
  double r = double(h.r);
  double re = factorial_d(h.r) * audit.edges;

  double lower = h.n > 0 ? re / std::pow(n, r / alpha) : 0.0;
  audit.lower_ok = audit.lambda + 1e-9 * std::max(1.0, lower) >= lower;

  if (p) {
    if (p->r != h.r) throw validation_error("pattern arity mismatch");
    if (!find_homomorphism(h, *p))
      throw validation_error("graph is not colorable by the pattern");
    audit.has_pattern = true;
    audit.pi = pattern_density(*p).value;
    double interp = std::pow(audit.pi, 1.0 / alpha) * std::pow(re, 1.0 - 1.0 / alpha);
    double order = audit.pi * std::pow(n, r - r / alpha);
    double edge_cap = audit.pi * std::pow(n, r) / factorial_d(h.r);
    audit.upper_interp_ok = audit.lambda <= interp + 1e-9 * std::max(1.0, interp);
    audit.upper_order_ok = audit.lambda <= order + 1e-9 * std::max(1.0, order);
    audit.edge_bound_ok = audit.edges <= edge_cap + 1e-9 * std::max(1.0, edge_cap);
  }
  audit.all_ok = audit.lower_ok && audit.upper_interp_ok && audit.upper_order_ok &&
                 audit.edge_bound_ok;
  return audit;
}

SequenceTrace sequence_audit(const Pattern& p, double alpha, int n_lo, int n_hi,
                             const SolverConfig& config) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  if (n_lo < p.r) throw validation_error("range must start at or above the edge size");
  if (n_hi < n_lo) throw validation_error("empty order range");

  SequenceTrace trace;
  trace.r = p.r;
  trace.alpha = alpha;
  for (int n = n_lo; n <= n_hi; ++n) {
    CompositionScan scan = composition_scan(p, n, alpha, config);
    trace.orders.push_back(n);
    trace.values.push_back(scan.best_lambda);
    trace.normalized.push_back(scan.best_lambda * std::pow(double(n), double(p.r) / alpha) /
                               falling_factorial(double(n), p.r));
  }

  trace.monotone = true;
  for (size_t i = 1; i < trace.orders.size(); ++i) {
    if (alpha > 1.0) {
      if (trace.normalized[i] > trace.normalized[i - 1] + 1e-9) trace.monotone = false;
    } else {
      if (trace.values[i] < trace.values[i - 1] - 1e-9) trace.monotone = false;
    }
  }
  trace.bracket_lo = pattern_density(p).value;
  trace.bracket_hi = trace.normalized.empty() ? 0.0 : trace.normalized.back();
  return trace;
}

GrowthAudit growth_audit(const Pattern& p, double alpha, int n_lo, int n_hi,
                         const SolverConfig& config) {
  if (alpha <= 1.0) throw validation_error("alpha must exceed 1");
  if (n_lo <= p.l * (p.r - 1))
    throw validation_error("range must start above l(r-1)");
  if (n_hi < n_lo) throw validation_error("empty order range");

  double pi = pattern_density(p).value;
  if (pi <= 0.0) throw validation_error("pattern admits no edges");

  GrowthAudit audit;
  std::vector<double> xmins, mindegs;
  for (int n = n_lo; n <= n_hi; ++n) {
    CompositionScan scan = composition_scan(p, n, alpha, config);
    SpectralEstimate est = symmetric_spectral_radius(scan.best, p, alpha, config);
    audit.all_converged = audit.all_converged && est.converged;
    audit.orders.push_back(n);
    audit.lambdas.push_back(est.lambda);
    double xmin = est.vector.values.empty()
                      ? 0.0
                      : *std::min_element(est.vector.values.begin(), est.vector.values.end());
    xmins.push_back(xmin);
    DegreeProfile deg = degrees(maximal_colorable(scan.best, p).graph);
    mindegs.push_back(double(deg.min_degree));
  }

  audit.all_steps_ok = true;
  for (size_t i = 0; i + 1 < audit.orders.size(); ++i) {
    double n = double(audit.orders[i]);
    double l = double(p.l), r = double(p.r);
    double factor =
        1.0 + r * (1.0 - 1.0 / alpha - l / (alpha * (n - l * r + l))) *
                  std::pow(xmins[i], alpha);
    bool ok = audit.lambdas[i + 1] >= factor * audit.lambdas[i] - 1e-9;
    audit.step_ok.push_back(ok ? 1 : 0);
    audit.all_steps_ok = audit.all_steps_ok && ok;
  }

  double fitted = 0.0;
  for (size_t i = 0; i < audit.orders.size(); ++i) {
    double n = double(audit.orders[i]);
    double r = double(p.r);
    // (2) rearranged: M >= r n (1 - n x_min^alpha) / pi
    fitted = std::max(fitted, r * n * (1.0 - n * std::pow(xmins[i], alpha)) / pi);
    // (3) rearranged: M >= n (1 - delta / (pi binom(n, r-1)))
    double cap = pi * binom_d(audit.orders[i], p.r - 1);
    if (cap > 0.0) fitted = std::max(fitted, n * (1.0 - mindegs[i] / cap));
  }
  audit.fitted_M = fitted;
  return audit;
}

BalanceAudit balance_audit(int k, int r, double alpha, int n,
                           const SolverConfig& config) {
  if (k < 2) throw validation_error("need at least two color classes");
  BalanceAudit audit;
  CompositionScan scan = composition_scan(chromatic_pattern(k, r), n, alpha, config);
  audit.best_sizes = scan.best;
  audit.lambda = scan.best_lambda;
  double target = double(n) / double(k);
  for (int s : scan.best)
    audit.deviation = std::max(audit.deviation, std::fabs(double(s) - target));
  int lo = *std::min_element(scan.best.begin(), scan.best.end());
  int hi = *std::max_element(scan.best.begin(), scan.best.end());
  audit.balanced = hi - lo <= 1;
  audit.gap = scan.best_lambda - scan.runner_lambda;
  audit.unique = scan.runner_up.empty() || audit.gap >= 1e-9;
  return audit;
}

SpexEqExAudit spex_eq_ex_audit(const Pattern& p, int n, double alpha,
                               const SolverConfig& config) {
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  if (n > 12) throw infeasible_error("order too large for the subset brute force");

  SpexEqExAudit audit;
  double pi = pattern_density(p).value;

  ExtremalReport ex = ex_col(p, n);
  audit.ex_value = ex.optimum;
  double cap = pi * std::pow(double(n), p.r) / factorial_d(p.r);
  audit.hypothesis_holds = std::fabs(ex.optimum - cap) <= 1e-9 * std::max(1.0, cap);

  WitnessPool ex_pool;
  for (const Hypergraph& w : ex.witnesses) ex_pool.add(w);
  audit.ex_witnesses = ex_pool.take();

  // hosts and their radii; only subsets of tying hosts can reach the optimum
  struct Host {
    Hypergraph graph;
    double lambda;
  };
  std::vector<Host> hosts;
  double best = 0.0;
  for_each_composition(n, p.l, [&](const std::vector<int>& sizes) {
    Hypergraph host = maximal_colorable(sizes, p).graph;
    SpectralEstimate est = alpha_spectral_radius(host, alpha, config);
    best = std::max(best, est.lambda);
    hosts.push_back({std::move(host), est.lambda});
  });
  audit.spex_value = best;

  SolverConfig fast = config;
  fast.restarts = 2;
  WitnessPool spex_pool;
  double tol = tie_tol(best);
  for (const Host& host : hosts) {
    if (host.lambda < best - tol) continue;
    int m = host.graph.edge_count();
    if (m > 18) throw infeasible_error("edge universe too large for the subset brute force");
    // independent edge-count lower bounds for a radius of at least best-tol
    double need = best - tol;
    long long e_min = llround(std::ceil(
        need * std::pow(double(p.r), double(p.r) / alpha) / factorial_d(p.r) - 1e-12));
    if (p.r == 2 && alpha == 2.0)  // Frobenius: lambda <= sqrt(2e)
      e_min = std::max(e_min, llround(std::ceil(need * need / 2.0 - 1e-12)));
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) < e_min) continue;
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) edges.push_back(host.graph.edges[i]);
      Hypergraph g = make_hypergraph(n, p.r, std::move(edges));
      SpectralEstimate est = alpha_spectral_radius(g, alpha, fast);
      if (est.lambda >= best - tol) spex_pool.add(g);
    }
  }
  audit.spex_witnesses = spex_pool.take();

  std::set<std::string> ex_keys, spex_keys;
  for (const Hypergraph& w : audit.ex_witnesses) ex_keys.insert(canonical_key(w));
  for (const Hypergraph& w : audit.spex_witnesses) spex_keys.insert(canonical_key(w));
  audit.spex_subset_of_ex =
      std::includes(ex_keys.begin(), ex_keys.end(), spex_keys.begin(), spex_keys.end());
  audit.ex_subset_of_spex =
      std::includes(spex_keys.begin(), spex_keys.end(), ex_keys.begin(), ex_keys.end());
  audit.sets_equal = audit.spex_subset_of_ex && audit.ex_subset_of_spex;
  return audit;
}

bool deletion_ratio_decreasing(double alpha, int r, int grid_size) {
  if (alpha <= 1.0) throw validation_error("alpha must exceed 1");
  if (r < 2) throw validation_error("edge size must be at least 2");
  if (grid_size < 2) throw validation_error("grid too small");
  auto f = [&](double x) { return (1.0 - r * x) / std::pow(1.0 - x, double(r) / alpha); };
  double prev = f(0.0);
  for (int j = 1; j < grid_size; ++j) {
    double cur = f(double(j) / double(grid_size));
    if (cur >= prev) return false;
    prev = cur;
  }
  return true;
}

long long binomial_increment_threshold(double alpha, int r, int i, long long m_cap) {
  if (alpha <= 1.0) throw validation_error("alpha must exceed 1");
  if (r < 2 || i < 1 || i > r) throw validation_error("need 2 <= r and 1 <= i <= r");
  long long m_lo = std::max<long long>(r, i);
  if (m_cap < m_lo) throw validation_error("cap below the smallest testable value");

  auto holds = [&](long long m) {
    double lhs = binom_d(m + 1, i) * std::pow(double(m) / double(m + 1), double(i) / alpha) -
                 binom_d(m, i);
    double rhs = binom_d(m - 1, i - 1) *
                 (1.0 - 1.0 / alpha - 1.0 / (alpha * double(m - r + 1)));
    return lhs >= rhs - 1e-12 * std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  };

  long long threshold = -1;
  for (long long m = m_cap; m >= m_lo; --m) {
    if (!holds(m)) break;
    threshold = m;
  }
  return threshold;
}

MindegAudit mindeg_audit(const std::vector<Hypergraph>& forbidden, const Pattern& p,
                         double alpha, int n, double eps, const SolverConfig& config) {
  MindegAudit audit;
  double pi = pattern_density(p).value;
  ExtremalReport rep = spectral_extremal(forbidden, n, p.r, alpha, config);
  double hyp_cap = eps * pi / double(p.r - 1);
  for (const Hypergraph& w : rep.witnesses) {
    SpectralEstimate est = alpha_spectral_radius(w, alpha, config);
    double xmin = est.vector.values.empty()
                      ? 0.0
                      : *std::min_element(est.vector.values.begin(), est.vector.values.end());
    double eps_prime = 1.0 - double(n) * std::pow(xmin, alpha);
    if (eps_prime >= hyp_cap) {
      ++audit.skipped;
      audit.notes.push_back("witness skipped: eigenvector spread misses the hypothesis");
      continue;
    }
    ++audit.checked;
    double bound = (1.0 - eps) * pi * binom_d(n, p.r - 1);
    double delta = double(degrees(w).min_degree);
    if (delta >= bound - 1e-9) {
      ++audit.passed;
    } else {
      audit.all_checked_pass = false;
      audit.notes.push_back("degree conclusion failed at order " + std::to_string(n));
    }
  }
  return audit;
}

ExpansionAudit expansion_spex_audit(const Hypergraph& f, int l, int r, double alpha,
                                    int n, const SolverConfig& config) {
  if (f.r != 2) throw validation_error("the seed graph must be a 2-graph");
  if (alpha < 1.0) throw validation_error("alpha must be at least 1");
  if (!is_color_critical(f, l + 1))
    throw validation_error("seed graph is not color-critical at the requested level");

  Hypergraph fr = expansion(f, r);
  bool feasible = (r == 2 && n <= 8) || (r == 3 && fr.n <= n && n <= 7);
  if (!feasible) throw infeasible_error("expansion instance too large for brute force");

  std::vector<Hypergraph> forbidden{fr};
  ExpansionAudit audit;

  ExtremalReport rep = spectral_extremal(forbidden, n, r, alpha, config);
  audit.optimum = rep.optimum;
  audit.witnesses = rep.witnesses;

  if (alpha > 1.0) {
    Hypergraph turan = turan_hypergraph(n, l, r);
    audit.unique_turan =
        rep.witnesses.size() == 1 && is_isomorphic(rep.witnesses[0], turan);
    return audit;
  }

  // alpha == 1: the optimum is the complete-seed value and the witnesses are
  // exactly the family-free graphs containing the seed
  double target = falling_factorial(double(l), r) / std::pow(double(l), r);
  audit.value_matches = std::fabs(rep.optimum - target) <= 1e-7;

  Hypergraph seed = complete_hypergraph(l, r);
  bool witnesses_contain = true;
  for (const Hypergraph& w : rep.witnesses)
    if (!contains_subgraph(w, seed)) witnesses_contain = false;

  bool containing_attain = true;
  enumerate_hypergraphs(
      n, r, EnumMode::iso_reduced,
      [&](const Hypergraph& g) { return family_free(g, forbidden); },
      [&](const Hypergraph& g) {
        if (!containing_attain || !contains_subgraph(g, seed)) return;
        SpectralEstimate est = alpha_spectral_radius(g, 1.0, config);
        if (std::fabs(est.lambda - rep.optimum) > 1e-7) containing_attain = false;
      });
  audit.containment_ok = witnesses_contain && containing_attain;
  return audit;
}

}  // namespace hspex
