#pragma once

#include <string>
#include <vector>

#include "hspex/density.hpp"
#include "hspex/enumerate.hpp"
#include "hspex/hypergraph.hpp"
#include "hspex/pattern.hpp"
#include "hspex/solver.hpp"

namespace hspex {

// Result of an extremal search: the optimum (edge count or spectral radius)
// together with every witness attaining it, deduplicated up to isomorphism
// and stored in canonical form.
struct ExtremalReport {
  enum class Kind { edge_count, spectral };
  Kind kind = Kind::edge_count;
  int n = 0;
  int r = 2;
  double alpha = 0.0;  // spectral searches only
  double optimum = 0.0;
  std::vector<Hypergraph> witnesses;
  std::string mode;  // exhaustive | iso-reduced | colorable-candidates
  std::vector<std::string> audit_flags;
  bool all_converged = true;  // solver health across the search
};

// Exact maximum edge count over graphs avoiding every member of 'forbidden'
// (as a subgraph, not induced).  An empty family short-circuits to the
// complete graph.
ExtremalReport turan_number(const std::vector<Hypergraph>& forbidden, int n, int r,
                            EnumMode mode = EnumMode::iso_reduced);

// Maximum alpha-spectral radius over graphs avoiding the family.  For
// alpha > 1 only edge-maximal family-free graphs are solved (adding an edge
// never lowers the radius); the audit flags record whether every witness
// eigenvector is strictly positive, which certifies that no non-maximal
// graph can tie.  At alpha == 1 ties are common and every family-free graph
// is solved.
ExtremalReport spectral_extremal(const std::vector<Hypergraph>& forbidden, int n, int r,
                                 double alpha, const SolverConfig& config = {},
                                 EnumMode mode = EnumMode::iso_reduced);

// Maximum alpha-spectral radius over graphs colorable by the pattern:
// scans every class-size composition, solves each reduced problem, and
// materializes the best hosts.  Cross-checks the reduced solves against
// full-size solves when the edge universe is tiny.
ExtremalReport spex_col(const Pattern& p, int n, double alpha,
                        const SolverConfig& config = {});

// Maximum edge count over graphs colorable by the pattern: closed-form count
// per composition, exact.
ExtremalReport ex_col(const Pattern& p, int n);

// Scan of all class-size compositions of n for the pattern, solved via the
// class-reduced problem.  Runner-up is the best composition that is not
// equivalent to the winner (same multiset of sizes when the pattern treats
// colors symmetrically, same ordered sizes otherwise).
struct CompositionScan {
  std::vector<int> best;
  double best_lambda = 0.0;
  std::vector<int> runner_up;  // empty when no second equivalence class exists
  double runner_lambda = 0.0;
  bool color_symmetric = false;
  bool all_converged = true;
};

CompositionScan composition_scan(const Pattern& p, int n, double alpha,
                                 const SolverConfig& config = {});

// Spot check of the spectral/edge-count inequality chain on one graph:
//   lambda >= r! e / n^{r/alpha}                        (always)
// and, when a pattern coloring the graph is supplied (pi = its density):
//   lambda <= pi^{1/alpha} (r! e)^{1 - 1/alpha}
//   lambda <= pi n^{r - r/alpha}
//   e      <= pi n^r / r!
struct InequalityAudit {
  double lambda = 0.0;
  double edges = 0.0;
  double pi = 0.0;
  bool has_pattern = false;
  bool lower_ok = false;
  bool upper_interp_ok = true;
  bool upper_order_ok = true;
  bool edge_bound_ok = true;
  bool all_ok = false;
};

// Throws when p is supplied but does not color h.
InequalityAudit inequality_audit(const Hypergraph& h, double alpha,
                                 const Pattern* p = nullptr,
                                 const SolverConfig& config = {});

// Extremal values over a range of orders with the scale-free normalization
// value * n^{r/alpha} / (n)_r, which is nonincreasing for alpha > 1 over a
// hereditary family and converges to the pattern density.
struct SequenceTrace {
  int r = 2;
  double alpha = 2.0;
  std::vector<int> orders;
  std::vector<double> values;      // extremal spectral radius at each order
  std::vector<double> normalized;  // value * n^{r/alpha} / (n)_r
  bool monotone = false;  // normalized nonincreasing (alpha > 1); raw values
                          // nondecreasing (alpha == 1)
  double bracket_lo = 0.0;  // limit bracket: [density, last normalized value]
  double bracket_hi = 0.0;
};

SequenceTrace sequence_audit(const Pattern& p, double alpha, int n_lo, int n_hi,
                             const SolverConfig& config = {});

// Step growth of the extremal radius over consecutive orders:
//  (1) lambda_{n+1} >= (1 + r(1 - 1/alpha - l/(alpha(n - lr + l))) x_min^alpha) lambda_n
// checked at every step with the computed witness eigenvector, plus the
// smallest constant M making
//  (2) x_min^alpha >= (1/n)(1 - pi M / (r n))
//  (3) min_degree  >= pi (1 - M/n) binom(n, r-1)
// hold across the whole range.
struct GrowthAudit {
  std::vector<int> orders;
  std::vector<double> lambdas;
  std::vector<char> step_ok;  // one entry per consecutive pair
  bool all_steps_ok = false;
  double fitted_M = 0.0;
  bool all_converged = true;
};

GrowthAudit growth_audit(const Pattern& p, double alpha, int n_lo, int n_hi,
                         const SolverConfig& config = {});

// Argmax composition among complete k-chromatic r-graphs on n vertices, with
// its deviation from the balanced split.
struct BalanceAudit {
  std::vector<int> best_sizes;
  double lambda = 0.0;
  double deviation = 0.0;  // max |size - n/k|
  bool balanced = false;   // sizes differ by at most one
  bool unique = false;     // strict gap over every other size multiset
  double gap = 0.0;
};

BalanceAudit balance_audit(int k, int r, double alpha, int n,
                           const SolverConfig& config = {});

// Compares the edge-extremal and spectral-extremal witness sets over the
// colorable family at one order.  The spectral side is a subset search over
// the tying hosts' edge sets (feasible at desk scale; for 2-graphs at
// alpha = 2 the Frobenius bound lambda <= sqrt(2e) prunes the subsets).
struct SpexEqExAudit {
  double ex_value = 0.0;
  double spex_value = 0.0;
  bool hypothesis_holds = false;  // ex equals pi n^r / r! exactly
  std::vector<Hypergraph> ex_witnesses;
  std::vector<Hypergraph> spex_witnesses;
  bool sets_equal = false;
  bool spex_subset_of_ex = false;
  bool ex_subset_of_spex = false;
};

SpexEqExAudit spex_eq_ex_audit(const Pattern& p, int n, double alpha,
                               const SolverConfig& config = {});

// Samples f(x) = (1 - r x) / (1 - x)^{r/alpha} on a uniform grid of [0, 1)
// and reports whether it decreases strictly from point to point.
bool deletion_ratio_decreasing(double alpha, int r, int grid_size);

// Least m <= m_cap from which
//   binom(m+1, i) (m/(m+1))^{i/alpha} - binom(m, i)
//     >= binom(m-1, i-1) (1 - 1/alpha - 1/(alpha(m - r + 1)))
// holds for every tested m' in [m, m_cap]; -1 when no such m exists below
// the cap.
long long binomial_increment_threshold(double alpha, int r, int i, long long m_cap);

// Degree conclusion spot check on spectral-extremal witnesses: a witness
// whose eigenvector satisfies x_min^alpha >= (1/n)(1 - eps') with
// eps' < eps pi / (r - 1) must have min degree >= (1 - eps) pi binom(n, r-1).
// Witnesses failing the hypothesis are skipped, not failed.
struct MindegAudit {
  int checked = 0;
  int skipped = 0;
  int passed = 0;
  bool all_checked_pass = true;
  std::vector<std::string> notes;
};

MindegAudit mindeg_audit(const std::vector<Hypergraph>& forbidden, const Pattern& p,
                         double alpha, int n, double eps,
                         const SolverConfig& config = {});

// Extremal check for the r-expansion of a color-critical 2-graph F with
// chromatic number l+1: for alpha > 1 the spectral-extremal witness over
// expansion-free graphs must be exactly the balanced complete l-partite
// graph; for alpha == 1 the optimum equals (l)_r / l^r and the witnesses are
// exactly the expansion-free graphs containing the complete l-partite seed
// with one vertex per class.
struct ExpansionAudit {
  double optimum = 0.0;
  std::vector<Hypergraph> witnesses;
  bool unique_turan = false;    // alpha > 1 path
  bool value_matches = false;   // alpha == 1 path
  bool containment_ok = false;  // alpha == 1 path
};

ExpansionAudit expansion_spex_audit(const Hypergraph& f, int l, int r, double alpha,
                                    int n, const SolverConfig& config = {});

}  // namespace hspex
