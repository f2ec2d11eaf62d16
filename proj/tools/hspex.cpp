// Command-line front end: spectral solves, graph construction, pattern
// densities, extremal searches, alpha sweeps, and the experiment registry.
//
// Exit codes: 0 success, 1 usage or parse failure, 2 numeric
// non-convergence, 3 infeasible instance.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hspex/density.hpp"
#include "hspex/errors.hpp"
#include "hspex/extremal.hpp"
#include "hspex/hypergraph.hpp"
#include "hspex/pattern.hpp"
#include "hspex/report.hpp"
#include "hspex/solver.hpp"

namespace {

using hspex::Hypergraph;
using hspex::Pattern;

// "name:k=v,k=v" -> (name, {k: v})
std::pair<std::string, std::map<std::string, int>> parse_builtin(const std::string& text) {
  std::string name = text;
  std::map<std::string, int> args;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    name = text.substr(0, colon);
    std::stringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw hspex::validation_error("expected k=v in builtin spec: " + item);
      args[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    }
  }
  return {name, args};
}

int arg_or(const std::map<std::string, int>& args, const std::string& key, int fallback) {
  auto it = args.find(key);
  return it == args.end() ? fallback : it->second;
}

int arg_req(const std::map<std::string, int>& args, const std::string& key,
            const std::string& builtin) {
  auto it = args.find(key);
  if (it == args.end())
    throw hspex::validation_error("builtin '" + builtin + "' needs " + key + "=");
  return it->second;
}

Hypergraph builtin_graph(const std::string& text) {
  // K_<n> shorthand for the complete graph
  if (text.size() > 2 && text.rfind("K_", 0) == 0)
    return hspex::complete_hypergraph(std::stoi(text.substr(2)), 2);
  auto [name, args] = parse_builtin(text);
  if (name == "complete")
    return hspex::complete_hypergraph(arg_req(args, "n", name), arg_or(args, "r", 2));
  if (name == "edge") return hspex::edge_hypergraph(arg_or(args, "r", 2));
  if (name == "turan")
    return hspex::turan_hypergraph(arg_req(args, "n", name), arg_req(args, "l", name),
                                   arg_or(args, "r", 2));
  if (name == "chromatic")
    return hspex::chromatic_turan(arg_req(args, "n", name), arg_req(args, "k", name),
                                  arg_or(args, "r", 2));
  if (name == "cycle") return hspex::cycle_graph(arg_req(args, "n", name));
  if (name == "path") return hspex::path_graph(arg_req(args, "n", name));
  if (name == "pair")
    return hspex::pair_expansion(arg_or(args, "r", 3), arg_req(args, "l", name));
  throw hspex::validation_error(
      "unknown builtin graph '" + name +
      "' (known: K_<n>, complete, edge, turan, chromatic, cycle, path, pair)");
}

Pattern builtin_pattern(const std::string& text) {
  auto [name, args] = parse_builtin(text);
  if (name == "clique")
    return hspex::clique_pattern(arg_req(args, "l", name), arg_or(args, "r", 2));
  if (name == "chromatic")
    return hspex::chromatic_pattern(arg_req(args, "k", name), arg_or(args, "r", 2));
  if (name == "single") return hspex::single_color_pattern(arg_or(args, "r", 2));
  throw hspex::validation_error("unknown builtin pattern '" + name +
                                "' (known: clique, chromatic, single)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hspex::validation_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Hypergraph load_graph(const std::string& builtin, const std::string& file) {
  if (!builtin.empty() && !file.empty())
    throw hspex::validation_error("give either --builtin or --file, not both");
  if (!builtin.empty()) return builtin_graph(builtin);
  if (!file.empty()) return hspex::parse_hypergraph(slurp(file));
  throw hspex::validation_error("need --builtin or --file");
}

Pattern load_pattern(const std::string& spec) {
  if (spec.find(':') != std::string::npos || spec.find('=') != std::string::npos)
    return builtin_pattern(spec);
  std::ifstream probe(spec);
  if (probe.good()) return hspex::parse_pattern(slurp(spec));
  return builtin_pattern(spec);
}

std::vector<double> parse_alpha_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    // lo:hi[:count][:lin|log]
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    double lo = std::stod(parts[0]);
    double hi = std::stod(parts[1]);
    int count = 12;
    bool log_scale = false;
    for (size_t i = 2; i < parts.size(); ++i) {
      if (parts[i] == "log")
        log_scale = true;
      else if (parts[i] == "lin")
        log_scale = false;
      else
        count = std::stoi(parts[i]);
    }
    if (count < 2 || hi <= lo) throw hspex::validation_error("bad alpha grid " + spec);
    for (int i = 0; i < count; ++i) {
      double t = double(i) / double(count - 1);
      grid.push_back(log_scale ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo));
    }
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  }
  return grid;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw hspex::validation_error("cannot write " + path);
  out << content;
}

struct SolverFlags {
  double tolerance = 1e-10;
  long max_iterations = 100000;
  int restarts = 32;
  std::uint64_t seed = 0;  // 0: use the environment default
  int threads = 1;
  std::string method = "auto";

  hspex::SolverConfig config() const {
    hspex::SolverConfig cfg;
    cfg.tolerance = tolerance;
    cfg.max_iterations = max_iterations;
    cfg.restarts = restarts;
    cfg.seed = seed ? seed : hspex::default_seed();
    cfg.threads = threads;
    if (method == "auto")
      cfg.method = hspex::SolveMethod::automatic;
    else if (method == "power")
      cfg.method = hspex::SolveMethod::power;
    else if (method == "gradient")
      cfg.method = hspex::SolveMethod::projected_gradient;
    else if (method == "simplex")
      cfg.method = hspex::SolveMethod::simplex;
    else
      throw hspex::validation_error("unknown method " + method);
    return cfg;
  }

  void attach(CLI::App* app) {
    app->add_option("--tol", tolerance, "stationarity tolerance");
    app->add_option("--max-iter", max_iterations, "iteration budget per restart");
    app->add_option("--restarts", restarts, "ascent restarts");
    app->add_option("--seed", seed, "restart seed (default: HSPEX_SEED or 2026)");
    app->add_option("--threads", threads, "parallel restart threads");
    app->add_option("--method", method, "auto|power|gradient|simplex");
  }
};

nlohmann::ordered_json estimate_json(const hspex::SpectralEstimate& est) {
  hspex::VectorStats stats = hspex::vector_stats(est.vector.values);
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["alpha"] = est.vector.alpha;
  doc["lambda"] = est.lambda;
  doc["residual"] = est.residual;
  doc["converged"] = est.converged;
  doc["iterations"] = est.iterations;
  doc["restarts"] = est.restarts_used;
  doc["method"] = est.method;
  doc["x_min"] = stats.min;
  doc["x_max"] = stats.max;
  doc["principal_ratio"] = stats.ratio;
  doc["vector"] = est.vector.values;
  return doc;
}

void print_estimate(const hspex::SpectralEstimate& est, bool as_json) {
  if (as_json) {
    std::cout << estimate_json(est).dump(2) << "\n";
    return;
  }
  hspex::VectorStats stats = hspex::vector_stats(est.vector.values);
  std::cout.precision(12);
  std::cout << "lambda    " << est.lambda << "\n"
            << "residual  " << est.residual << "\n"
            << "x_min     " << stats.min << "\n"
            << "ratio     " << stats.ratio << "\n"
            << "method    " << est.method << " (" << est.iterations << " iterations, "
            << est.restarts_used << " restarts)\n"
            << "converged " << (est.converged ? "yes" : "no") << "\n";
}

void print_report(const hspex::ExtremalReport& rep) {
  std::cout.precision(12);
  std::cout << (rep.kind == hspex::ExtremalReport::Kind::edge_count ? "edge optimum "
                                                                    : "spectral optimum ")
            << rep.optimum << " at n=" << rep.n << ", r=" << rep.r;
  if (rep.kind == hspex::ExtremalReport::Kind::spectral)
    std::cout << ", alpha=" << rep.alpha;
  std::cout << "\nmode " << rep.mode << "\n";
  for (const std::string& f : rep.audit_flags) std::cout << "note " << f << "\n";
  std::cout << "witnesses " << rep.witnesses.size() << "\n";
  for (const Hypergraph& w : rep.witnesses) std::cout << w.to_text() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-spectral radius toolkit for uniform hypergraphs"};
  app.require_subcommand(1);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "solve one graph");
  std::string sp_builtin, sp_file;
  double sp_alpha = 2.0;
  bool sp_json = false;
  SolverFlags sp_flags;
  spectral->add_option("--builtin", sp_builtin, "builtin graph, e.g. K_5 or turan:n=6,l=2");
  spectral->add_option("--file", sp_file, "graph file in hg format");
  spectral->add_option("--alpha", sp_alpha, "alpha >= 1")->required();
  spectral->add_flag("--json", sp_json, "emit JSON instead of text");
  sp_flags.attach(spectral);

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph and print it");
  std::string co_name, co_out;
  int co_n = -1, co_r = 2, co_l = -1, co_k = -1;
  construct->add_option("builder", co_name, "complete|edge|turan|chromatic|cycle|path|pair")
      ->required();
  construct->add_option("--n", co_n, "vertex count");
  construct->add_option("--r", co_r, "edge size");
  construct->add_option("--l", co_l, "part count");
  construct->add_option("--k", co_k, "color count");
  construct->add_option("--out", co_out, "output file (default stdout)");

  // density
  auto* density = app.add_subcommand("density", "pattern density on the simplex");
  std::string de_pattern;
  bool de_ratio = false, de_json = false;
  std::uint64_t de_seed = 0;
  density->add_option("--pattern", de_pattern, "builtin (clique:l=3,r=2) or file")
      ->required();
  density->add_flag("--ratio", de_ratio, "also run the finite-host ratio trace");
  density->add_flag("--json", de_json, "emit JSON instead of text");
  density->add_option("--seed", de_seed, "restart seed");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "edge or spectral extremal search");
  std::vector<std::string> ex_forbid;
  std::string ex_pattern, ex_mode = "iso";
  int ex_n = -1, ex_r = 2;
  double ex_alpha = -1.0;
  SolverFlags ex_flags;
  extremal->add_option("--forbid", ex_forbid, "forbidden builtin graph (repeatable)");
  extremal->add_option("--pattern", ex_pattern, "colorable family instead of a forbidden family");
  extremal->add_option("--n", ex_n, "order")->required();
  extremal->add_option("--r", ex_r, "edge size (forbidden-family searches)");
  extremal->add_option("--alpha", ex_alpha, "spectral search when given, edge count otherwise");
  extremal->add_option("--mode", ex_mode, "iso|exhaustive");
  ex_flags.attach(extremal);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "lambda across an alpha grid, CSV");
  std::string sw_builtin, sw_file, sw_alphas = "1:100:12:log", sw_out;
  SolverFlags sw_flags;
  sweep->add_option("--builtin", sw_builtin, "builtin graph");
  sweep->add_option("--file", sw_file, "graph file");
  sweep->add_option("--alphas", sw_alphas, "comma list or lo:hi[:count][:lin|log]");
  sweep->add_option("--out", sw_out, "output file (default stdout)");
  sw_flags.attach(sweep);

  // verify
  auto* verify = app.add_subcommand("verify", "run a registered experiment");
  std::string ve_name, ve_json_out;
  std::uint64_t ve_seed = 0;
  verify->add_option("experiment", ve_name, "experiment name or 'all'")->required();
  verify->add_option("--json", ve_json_out, "also write the JSON report here");
  verify->add_option("--seed", ve_seed, "seed (default: HSPEX_SEED or 2026)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectral->parsed()) {
      Hypergraph g = load_graph(sp_builtin, sp_file);
      hspex::SpectralEstimate est =
          hspex::alpha_spectral_radius(g, sp_alpha, sp_flags.config());
      print_estimate(est, sp_json);
      return est.converged ? 0 : 2;
    }

    if (construct->parsed()) {
      std::ostringstream spec;
      spec << co_name << ":";
      bool first = true;
      auto put = [&](const char* key, int v) {
        if (v < 0) return;
        if (!first) spec << ",";
        spec << key << "=" << v;
        first = false;
      };
      put("n", co_n);
      put("r", co_r);
      put("l", co_l);
      put("k", co_k);
      Hypergraph g = builtin_graph(spec.str());
      write_out(co_out, g.to_text());
      return 0;
    }

    if (density->parsed()) {
      Pattern p = load_pattern(de_pattern);
      hspex::DensityConfig cfg;
      cfg.seed = de_seed ? de_seed : hspex::default_seed();
      hspex::DensityEstimate est = hspex::pattern_density(p, cfg);
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["value"] = est.value;
      doc["maximizer"] = est.maximizer;
      doc["residual"] = est.residual;
      doc["converged"] = est.converged;
      if (de_ratio) {
        hspex::RatioTrace trace = hspex::density_by_ratio(p, 2 * p.r, 1 << 21, 1e-9, cfg);
        doc["ratio_value"] = trace.value;
        doc["ratio_orders"] = trace.sizes;
        doc["ratio_trace"] = trace.ratios;
      }
      if (de_json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout.precision(12);
        std::cout << "density  " << est.value << "\n";
        std::cout << "maximizer";
        for (double y : est.maximizer) std::cout << " " << y;
        std::cout << "\nresidual " << est.residual << "\n";
        if (de_ratio) std::cout << "finite-host ratio " << double(doc["ratio_value"]) << "\n";
      }
      return est.converged ? 0 : 2;
    }

    if (extremal->parsed()) {
      hspex::EnumMode mode = ex_mode == "exhaustive" ? hspex::EnumMode::exhaustive
                                                     : hspex::EnumMode::iso_reduced;
      hspex::ExtremalReport rep;
      if (!ex_pattern.empty()) {
        Pattern p = load_pattern(ex_pattern);
        rep = ex_alpha > 0 ? hspex::spex_col(p, ex_n, ex_alpha, ex_flags.config())
                           : hspex::ex_col(p, ex_n);
      } else {
        std::vector<Hypergraph> family;
        for (const std::string& spec : ex_forbid) family.push_back(builtin_graph(spec));
        if (family.empty())
          throw hspex::validation_error("need --forbid or --pattern");
        rep = ex_alpha > 0
                  ? hspex::spectral_extremal(family, ex_n, ex_r, ex_alpha,
                                             ex_flags.config(), mode)
                  : hspex::turan_number(family, ex_n, ex_r, mode);
      }
      print_report(rep);
      return rep.all_converged ? 0 : 2;
    }

    if (sweep->parsed()) {
      Hypergraph g = load_graph(sw_builtin, sw_file);
      std::vector<double> grid = parse_alpha_grid(sw_alphas);
      auto estimates = hspex::alpha_sweep(g, grid, sw_flags.config());
      std::ostringstream csv;
      csv.precision(12);
      csv << "alpha,lambda,residual\n";
      bool converged = true;
      for (const auto& est : estimates) {
        csv << est.vector.alpha << "," << est.lambda << "," << est.residual << "\n";
        converged = converged && est.converged;
      }
      write_out(sw_out, csv.str());
      return converged ? 0 : 2;
    }

    if (verify->parsed()) {
      std::uint64_t seed = ve_seed ? ve_seed : hspex::default_seed();
      std::vector<std::string> names = ve_name == "all"
                                           ? hspex::experiment_names()
                                           : std::vector<std::string>{ve_name};
      bool all_ok = true;
      nlohmann::ordered_json all_docs = nlohmann::ordered_json::array();
      for (const std::string& name : names) {
        hspex::RunReport report = hspex::run_experiment(name, seed);
        std::cout << hspex::to_markdown(report) << "\n";
        all_docs.push_back(nlohmann::ordered_json::parse(hspex::to_json(report)));
        all_ok = all_ok && report.all_pass();
      }
      if (!ve_json_out.empty())
        write_out(ve_json_out,
                  names.size() == 1 ? all_docs[0].dump(2) : all_docs.dump(2));
      return all_ok ? 0 : 2;
    }
  } catch (const hspex::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const hspex::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const hspex::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
