#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "hspex/combin.hpp"
#include "hspex/errors.hpp"
#include "hspex/extremal.hpp"
#include "hspex/hypergraph.hpp"
#include "hspex/isomorphism.hpp"
#include "hspex/pattern.hpp"

using namespace hspex;

namespace {

SolverConfig quick(std::uint64_t seed = 2026, int restarts = 8) {
  SolverConfig cfg;
  cfg.seed = seed;
  cfg.restarts = restarts;
  return cfg;
}

bool has_flag(const ExtremalReport& rep, const std::string& flag) {
  for (const std::string& f : rep.audit_flags)
    if (f == flag) return true;
  return false;
}

}  // namespace

TEST_CASE("triangle-free edge maximum is the balanced bipartite count") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  for (int n = 3; n <= 6; ++n) {
    ExtremalReport rep = turan_number(tri, n, 2);
    CHECK(rep.optimum == doctest::Approx((n * n) / 4));
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(is_isomorphic(rep.witnesses[0], turan_hypergraph(n, 2, 2)));
  }
}

TEST_CASE("edge maximum ratio is nonincreasing in the order") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  double prev = 1.0;
  for (int n = 3; n <= 7; ++n) {
    double ratio = turan_number(tri, n, 2).optimum / binom_d(n, 2);
    CHECK(ratio <= prev + 1e-12);
    prev = ratio;
  }
}

TEST_CASE("known quadrilateral-free numbers") {
  std::vector<Hypergraph> c4 = {cycle_graph(4)};
  CHECK(turan_number(c4, 4, 2).optimum == doctest::Approx(4));
  CHECK(turan_number(c4, 5, 2).optimum == doctest::Approx(6));
  CHECK(turan_number(c4, 6, 2).optimum == doctest::Approx(7));
}

TEST_CASE("clique-free maximum matches the partite construction") {
  std::vector<Hypergraph> k4 = {complete_hypergraph(4, 2)};
  ExtremalReport rep = turan_number(k4, 6, 2);
  CHECK(rep.optimum == doctest::Approx(12));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(is_isomorphic(rep.witnesses[0], turan_hypergraph(6, 3, 2)));
}

TEST_CASE("exhaustive and iso-reduced modes agree") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  ExtremalReport a = turan_number(tri, 5, 2, EnumMode::exhaustive);
  ExtremalReport b = turan_number(tri, 5, 2, EnumMode::iso_reduced);
  CHECK(a.optimum == b.optimum);

  std::vector<Hypergraph> k43 = {complete_hypergraph(4, 3)};
  ExtremalReport c = turan_number(k43, 5, 3, EnumMode::exhaustive);
  ExtremalReport d = turan_number(k43, 5, 3, EnumMode::iso_reduced);
  CHECK(c.optimum == d.optimum);
}

TEST_CASE("empty family short-circuits to the complete graph") {
  ExtremalReport rep = turan_number({}, 5, 2);
  CHECK(rep.optimum == doctest::Approx(10));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(rep.witnesses[0].edge_count() == 10);
  CHECK(has_flag(rep, "empty-family-shortcut"));
}

TEST_CASE("spectral maximum over triangle-free graphs") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  ExtremalReport rep = spectral_extremal(tri, 5, 2, 2.0, quick());
  CHECK(rep.optimum == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
  REQUIRE(rep.witnesses.size() == 1);
  CHECK(is_isomorphic(rep.witnesses[0], turan_hypergraph(5, 2, 2)));
  CHECK(rep.all_converged);
  CHECK(has_flag(rep, "edge-maximal-candidates-only"));
  CHECK(has_flag(rep, "witness-eigenvectors-positive"));
}

TEST_CASE("spectral ties at alpha=1 collect every maximizer") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  ExtremalReport rep = spectral_extremal(tri, 5, 2, 1.0, quick());
  CHECK(rep.optimum == doctest::Approx(0.5).epsilon(1e-8));
  // every triangle-free graph with an edge has clique number two, so every
  // nonempty class ties: 14 classes on five vertices minus the empty graph
  CHECK(rep.witnesses.size() == 13);
  CHECK(has_flag(rep, "all-candidates-solved"));
}

TEST_CASE("spectral maximum respects the lower bound from edge counts") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  for (double a : {2.0, 3.0}) {
    ExtremalReport sp = spectral_extremal(tri, 6, 2, a, quick());
    ExtremalReport ed = turan_number(tri, 6, 2);
    CHECK(sp.optimum >=
          factorial_d(2) * ed.optimum / std::pow(6.0, 2.0 / a) - 1e-9);
  }
}

TEST_CASE("colorable-family searches") {
  Pattern bip = clique_pattern(2, 2);
  ExtremalReport sp = spex_col(bip, 7, 2.0, quick());
  CHECK(sp.optimum == doctest::Approx(std::sqrt(12.0)).epsilon(1e-9));
  REQUIRE(sp.witnesses.size() == 1);
  CHECK(is_isomorphic(sp.witnesses[0], turan_hypergraph(7, 2, 2)));

  ExtremalReport small = spex_col(bip, 6, 2.0, quick());
  CHECK(has_flag(small, "reduced-matches-full"));

  ExtremalReport ed = ex_col(bip, 7);
  CHECK(ed.optimum == doctest::Approx(12));

  // below the edge size the only colorable graph is empty
  ExtremalReport tiny = spex_col(bip, 1, 2.0, quick());
  CHECK(tiny.optimum == 0.0);
}

TEST_CASE("composition scan finds the balanced split") {
  Pattern bip = clique_pattern(2, 2);
  CompositionScan scan = composition_scan(bip, 5, 2.0, quick());
  CHECK(scan.best == std::vector<int>{3, 2});
  CHECK(scan.best_lambda == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
  CHECK(scan.runner_up == std::vector<int>{4, 1});
  CHECK(scan.runner_lambda == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(scan.color_symmetric);
  CHECK(scan.all_converged);
}

TEST_CASE("inequality chain is tight on complete graphs at alpha=2") {
  Pattern p4 = clique_pattern(4, 2);
  InequalityAudit audit = inequality_audit(complete_hypergraph(4, 2), 2.0, &p4, quick());
  CHECK(audit.all_ok);
  CHECK(audit.pi == doctest::Approx(0.75).epsilon(1e-8));
  // both ends of the chain collapse to lambda = 3 here
  CHECK(audit.lambda == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(std::pow(audit.pi, 0.5) * std::pow(2.0 * audit.edges, 0.5) ==
        doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("inequality audit without a pattern checks the lower bound only") {
  InequalityAudit audit = inequality_audit(cycle_graph(5), 2.0, nullptr, quick());
  CHECK(audit.all_ok);
  CHECK(!audit.has_pattern);
}

TEST_CASE("inequality audit rejects a non-coloring pattern") {
  Pattern bip = clique_pattern(2, 2);
  CHECK_THROWS_AS(inequality_audit(cycle_graph(5), 2.0, &bip, quick()), validation_error);
}

TEST_CASE("normalized extremal sequence decreases onto the density") {
  Pattern bip = clique_pattern(2, 2);
  SequenceTrace trace = sequence_audit(bip, 2.0, 4, 10, quick());
  CHECK(trace.monotone);
  CHECK(trace.bracket_lo == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(trace.bracket_hi >= trace.bracket_lo - 1e-9);
  CHECK(trace.bracket_hi <= 0.6);
  CHECK_THROWS_AS(sequence_audit(bip, 0.5, 4, 8, quick()), validation_error);
  CHECK_THROWS_AS(sequence_audit(bip, 2.0, 8, 4, quick()), validation_error);
}

TEST_CASE("step growth audit on the bipartite family") {
  Pattern bip = clique_pattern(2, 2);
  GrowthAudit audit = growth_audit(bip, 2.0, 10, 16, quick());
  CHECK(audit.all_steps_ok);
  CHECK(audit.all_converged);
  CHECK(std::isfinite(audit.fitted_M));
  CHECK(audit.fitted_M > 0.0);
  CHECK_THROWS_AS(growth_audit(bip, 1.0, 10, 16, quick()), validation_error);
  CHECK_THROWS_AS(growth_audit(bip, 2.0, 2, 16, quick()), validation_error);
}

TEST_CASE("balanced split wins among chromatic hosts") {
  BalanceAudit a = balance_audit(2, 3, 2.0, 8, quick());
  CHECK(a.balanced);
  CHECK(a.unique);
  CHECK(a.best_sizes == std::vector<int>{4, 4});
  CHECK(a.gap >= 1e-9);

  BalanceAudit b = balance_audit(3, 2, 2.0, 9, quick());
  CHECK(b.balanced);
  CHECK(b.best_sizes == std::vector<int>{3, 3, 3});
}

TEST_CASE("edge and spectral witness sets coincide for bipartite hosts") {
  Pattern bip = clique_pattern(2, 2);
  SpexEqExAudit audit = spex_eq_ex_audit(bip, 4, 2.0, quick());
  CHECK(audit.hypothesis_holds);
  CHECK(audit.sets_equal);
  CHECK(audit.ex_value == doctest::Approx(4));
  CHECK(audit.spex_value == doctest::Approx(2.0).epsilon(1e-8));
  REQUIRE(audit.spex_witnesses.size() == 1);
  CHECK(is_isomorphic(audit.spex_witnesses[0], cycle_graph(4)));

  CHECK_THROWS_AS(spex_eq_ex_audit(bip, 13, 2.0, quick()), infeasible_error);
}

TEST_CASE("scalar deletion ratio decreases") {
  CHECK(deletion_ratio_decreasing(2.0, 2, 1000));
  CHECK(deletion_ratio_decreasing(1.1, 3, 1000));
  CHECK(deletion_ratio_decreasing(5.0, 5, 500));
}

TEST_CASE("binomial increment threshold exists and is stable") {
  long long t = binomial_increment_threshold(2.0, 3, 2, 10000);
  CHECK(t >= 0);
  // once the inequality holds it keeps holding through the cap, so asking
  // with a larger cap returns the same onset
  CHECK(binomial_increment_threshold(2.0, 3, 2, 20000) == t);
}

TEST_CASE("minimum-degree conclusion holds on bipartite witnesses") {
  std::vector<Hypergraph> tri = {cycle_graph(3)};
  Pattern bip = clique_pattern(2, 2);
  MindegAudit audit = mindeg_audit(tri, bip, 2.0, 6, 0.5, quick());
  CHECK(audit.all_checked_pass);
  CHECK(audit.checked + audit.skipped >= 1);
}

TEST_CASE("expansion audit over forbidden-subgraph search") {
  Hypergraph k3 = cycle_graph(3);
  ExpansionAudit above = expansion_spex_audit(k3, 2, 2, 2.0, 6, quick());
  CHECK(above.unique_turan);
  REQUIRE(above.witnesses.size() == 1);
  CHECK(is_isomorphic(above.witnesses[0], turan_hypergraph(6, 2, 2)));

  ExpansionAudit at_one = expansion_spex_audit(k3, 2, 2, 1.0, 5, quick());
  CHECK(at_one.optimum == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(at_one.value_matches);
  CHECK(at_one.containment_ok);

  // C_5 is color-critical for three colors as well, but at this order the
  // book K_2 + 5K_1 (radius (1+sqrt(41))/2, no 5-cycle) beats the balanced
  // bipartite graph (sqrt 12), so the asymptotic witness is not yet extremal
  ExpansionAudit c5 = expansion_spex_audit(cycle_graph(5), 2, 2, 2.0, 7, quick());
  CHECK(c5.optimum >= (1.0 + std::sqrt(41.0)) / 2.0 - 1e-8);
  CHECK(!c5.unique_turan);

  CHECK_THROWS_AS(expansion_spex_audit(path_graph(3), 2, 2, 2.0, 6, quick()),
                  validation_error);  // not color-critical
  CHECK_THROWS_AS(expansion_spex_audit(k3, 2, 2, 2.0, 12, quick()), infeasible_error);
}
