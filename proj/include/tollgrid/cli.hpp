#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tollgrid/auxiliary.hpp"
#include "tollgrid/csv.hpp"
#include "tollgrid/delay.hpp"
#include "tollgrid/eq_solver.hpp"
#include "tollgrid/fixtures.hpp"
#include "tollgrid/flow.hpp"
#include "tollgrid/mpec.hpp"
#include "tollgrid/network.hpp"
#include "tollgrid/network_io.hpp"
#include "tollgrid/paths.hpp"
#include "tollgrid/pricing.hpp"
#include "tollgrid/so_solver.hpp"
#include "tollgrid/util.hpp"

namespace tollgrid::cli {

/// Effective settings of one run.  Snapshotted to <out>/config.json; feeding
/// that snapshot back through --config reproduces the run exactly.
struct RunConfig {
  std::string subcommand;
  std::string network;        // empty only for reproduce-example1 (bundled data)
  std::string prices = "none";  // solve-ue: toll CSV path, or "none"
  std::uint64_t seed = 0;
  double tol = 0.0;     // 0 = subcommand default
  int restarts = 0;     // 0 = subcommand default
  int budget = 0;       // 0 = default (toll search only)
  double tau_max = 0.0;  // 0 = derive from marginal tolls (toll search only)
  std::string out = ".";
  bool strict = false;
};

/// Hash over the numerically relevant settings; stamped into every artifact.
inline std::uint64_t config_hash(const RunConfig& c) {
  std::string s;
  s += "subcommand=" + c.subcommand + "\n";
  s += "network=" + c.network + "\n";
  s += "prices=" + c.prices + "\n";
  s += "seed=" + std::to_string(c.seed) + "\n";
  s += "tol=" + detail::fmt_double(c.tol) + "\n";
  s += "restarts=" + std::to_string(c.restarts) + "\n";
  s += "budget=" + std::to_string(c.budget) + "\n";
  s += "tau_max=" + detail::fmt_double(c.tau_max) + "\n";
  return detail::fnv1a(s);
}

namespace detail_cli {

inline void write_config_snapshot(const RunConfig& cfg, std::uint64_t hash) {
  nlohmann::json j;
  j["subcommand"] = cfg.subcommand;
  j["network"] = cfg.network;
  j["prices"] = cfg.prices;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["restarts"] = cfg.restarts;
  j["budget"] = cfg.budget;
  j["tau_max"] = cfg.tau_max;
  j["out"] = cfg.out;
  j["strict"] = cfg.strict;
  j["config_hash"] = tollgrid::detail::fmt_hex64(hash);
  std::ofstream f(std::filesystem::path(cfg.out) / "config.json", std::ios::binary);
  if (!f) throw Error("cannot write config snapshot in " + cfg.out);
  f << j.dump(2) << "\n";
}

inline Network load_input_network(const RunConfig& cfg) {
  if (cfg.subcommand == "reproduce-example1") return fixtures::example1_network();
  if (cfg.network.empty()) throw Error("--network is required for " + cfg.subcommand);
  return load_network(cfg.network);
}

inline PriceVector load_price_source(const Network& net, const std::string& source) {
  if (source == "none") return PriceVector::zeros(net.num_links());
  std::ifstream f(source, std::ios::binary);
  if (!f) throw Error("cannot read price file: " + source);
  std::map<std::string, int> by_id;
  for (std::size_t l = 0; l < net.num_links(); ++l)
    by_id[net.links()[l].id] = static_cast<int>(l);
  PriceVector tau = PriceVector::zeros(net.num_links());
  std::string line;
  bool header_seen = false;
  while (std::getline(f, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line.substr(0, line.find('#'));
    if (stripped.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream ss(stripped);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_seen) {
      header_seen = true;
      if (cells.size() < 3 || cells[0] != "link_id" || cells[1] != "tau_h" ||
          cells[2] != "tau_a")
        throw Error("price file must start with header link_id,tau_h,tau_a");
      continue;
    }
    if (cells.size() < 3) throw Error("price file row with fewer than 3 cells");
    const auto it = by_id.find(cells[0]);
    if (it == by_id.end()) throw Error("price file names unknown link: " + cells[0]);
    try {
      tau.h[it->second] = std::stod(cells[1]);
      tau.a[it->second] = std::stod(cells[2]);
    } catch (const std::exception&) {
      throw Error("price file has a non-numeric toll for link " + cells[0]);
    }
  }
  validate_prices(net, tau);
  return tau;
}

inline std::string link_ids_of_path(const Network& net, const Path& p) {
  std::string s;
  for (std::size_t i = 0; i < p.links.size(); ++i) {
    if (i) s += '|';
    s += net.links()[p.links[i]].id;
  }
  return s;
}

inline void write_flow_csv(const std::filesystem::path& file, std::uint64_t hash,
                           const Network& net, const PathSet& paths, const PathFlow& f) {
  CsvFile csv(file, hash);
  csv.row({"od", "path", "links", "flow_h", "flow_a"});
  for (std::size_t p = 0; p < paths.num_paths(); ++p) {
    const auto& path = paths.path(static_cast<int>(p));
    csv.row({CsvFile::cell(net.od_pairs()[path.od].id), CsvFile::cell(static_cast<int>(p)),
             CsvFile::cell(link_ids_of_path(net, path)), CsvFile::cell(f.h[p]),
             CsvFile::cell(f.a[p])});
  }
}

inline void write_prices_csv(const std::filesystem::path& file, std::uint64_t hash,
                             const Network& net, const PriceVector& tau) {
  CsvFile csv(file, hash);
  csv.row({"link_id", "tau_h", "tau_a"});
  for (std::size_t l = 0; l < net.num_links(); ++l)
    csv.row({CsvFile::cell(net.links()[l].id), CsvFile::cell(tau.h[l]),
             CsvFile::cell(tau.a[l])});
}

inline void write_equilibria_csv(const std::filesystem::path& file, std::uint64_t hash,
                                 const Network& net, const PathSet& paths,
                                 const std::vector<EquilibriumResult>& eqs) {
  CsvFile csv(file, hash);
  std::vector<std::string> header = {"restart", "converged", "gap", "normalized_gap",
                                     "social_delay", "total_cost"};
  for (const auto& l : net.links()) header.push_back("flow_h_" + l.id);
  for (const auto& l : net.links()) header.push_back("flow_a_" + l.id);
  csv.row(header);
  for (const auto& eq : eqs) {
    const LinkFlow lf = aggregate(net, paths, eq.flow);
    std::vector<std::string> row = {
        CsvFile::cell(eq.restart),        CsvFile::cell(eq.converged),
        CsvFile::cell(eq.gap),            CsvFile::cell(eq.normalized_gap),
        CsvFile::cell(eq.social_delay),   CsvFile::cell(eq.total_cost)};
    for (std::size_t l = 0; l < net.num_links(); ++l) row.push_back(CsvFile::cell(lf.h[l]));
    for (std::size_t l = 0; l < net.num_links(); ++l) row.push_back(CsvFile::cell(lf.a[l]));
    csv.row(row);
  }
}

inline void write_trace_csv(const std::filesystem::path& file, std::uint64_t hash,
                            const Network& net, const UndiffSearchResult& res) {
  CsvFile csv(file, hash);
  std::vector<std::string> header = {"evaluation"};
  for (const auto& l : net.links()) header.push_back("tau_" + l.id);
  header.push_back("num_equilibria");
  header.push_back("best_social_delay");
  csv.row(header);
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const auto& e = res.trace[i];
    std::vector<std::string> row = {CsvFile::cell(static_cast<int>(i))};
    for (double t : e.tau) row.push_back(CsvFile::cell(t));
    row.push_back(CsvFile::cell(static_cast<int>(e.equilibrium_social_delays.size())));
    row.push_back(CsvFile::cell(e.best_social_delay));
    csv.row(row);
  }
}

inline void write_compare_csv(const std::filesystem::path& file, std::uint64_t hash,
                              const ComparisonReport& rep) {
  CsvFile csv(file, hash);
  csv.row({"regime", "num_converged", "min_social", "max_social", "gap_min", "gap_max"});
  for (const RegimeRow* row : {&rep.no_pricing, &rep.undifferentiated, &rep.differentiated}) {
    csv.row({CsvFile::cell(row->name), CsvFile::cell(row->num_converged),
             CsvFile::cell(row->min_social), CsvFile::cell(row->max_social),
             CsvFile::cell(row->gap_min), CsvFile::cell(row->gap_max)});
  }
}

inline void write_certificate_csv(const std::filesystem::path& file, std::uint64_t hash,
                                  const CertificateReport& rep, const CertifyTols& tols) {
  CsvFile csv(file, hash);
  csv.row({"check", "value", "threshold", "pass"});
  csv.row({"auxiliary_gap", CsvFile::cell(rep.max_aux_gap), CsvFile::cell(tols.aux_gap),
           CsvFile::cell(rep.max_aux_gap <= tols.aux_gap)});
  csv.row({"combined_flow_spread", CsvFile::cell(rep.max_flow_spread),
           CsvFile::cell(tols.flow_spread), CsvFile::cell(rep.max_flow_spread <= tols.flow_spread)});
  csv.row({"social_delay_spread_rel", CsvFile::cell(rep.social_spread_rel),
           CsvFile::cell(tols.social_rel), CsvFile::cell(rep.social_spread_rel <= tols.social_rel)});
  csv.row({"cost_decomposition_rel", CsvFile::cell(rep.max_decomposition_err),
           CsvFile::cell(tols.decomposition_rel),
           CsvFile::cell(rep.max_decomposition_err <= tols.decomposition_rel)});
}

inline void kv(const std::string& key, const std::string& value) {
  std::cout << key << "=" << value << "\n";
}
inline void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
inline void kv(const std::string& key, double value) { kv(key, tollgrid::detail::fmt_double(value)); }
inline void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
inline void kv(const std::string& key, bool value) { kv(key, std::string(value ? "1" : "0")); }

inline void print_regime_table(const ComparisonReport& rep) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-18s %6s %14s %14s %12s %12s", "regime", "eqs", "min_J",
                "max_J", "gap_min", "gap_max");
  std::cout << buf << "\n";
  for (const RegimeRow* row : {&rep.no_pricing, &rep.undifferentiated, &rep.differentiated}) {
    std::snprintf(buf, sizeof(buf), "%-18s %6d %14.6f %14.6f %12.6f %12.6f", row->name.c_str(),
                  row->num_converged, row->min_social, row->max_social, row->gap_min,
                  row->gap_max);
    std::cout << buf << "\n";
  }
}

struct CommonOpts {
  CLI::Option* network = nullptr;
  CLI::Option* prices = nullptr;
  CLI::Option* seed = nullptr;
  CLI::Option* tol = nullptr;
  CLI::Option* restarts = nullptr;
  CLI::Option* budget = nullptr;
  CLI::Option* tau_max = nullptr;
  CLI::Option* out = nullptr;
  std::string config_path;
};

/// Fills every option the user did not give from a config snapshot.
inline void merge_config_file(RunConfig& cfg, const CommonOpts& opts) {
  if (opts.config_path.empty()) return;
  std::ifstream f(opts.config_path, std::ios::binary);
  if (!f) throw Error("cannot read config file: " + opts.config_path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw Error("config file is not valid JSON: " + std::string(e.what()));
  }
  if (j.contains("subcommand") && j["subcommand"].get<std::string>() != cfg.subcommand)
    throw Error("config file was recorded for subcommand " +
                j["subcommand"].get<std::string>() + ", not " + cfg.subcommand);
  const auto take = [&](const char* key, CLI::Option* opt, auto& field) {
    using T = std::decay_t<decltype(field)>;
    if (opt != nullptr && opt->count() == 0 && j.contains(key)) field = j[key].get<T>();
  };
  take("network", opts.network, cfg.network);
  take("prices", opts.prices, cfg.prices);
  take("seed", opts.seed, cfg.seed);
  take("tol", opts.tol, cfg.tol);
  take("restarts", opts.restarts, cfg.restarts);
  take("budget", opts.budget, cfg.budget);
  take("tau_max", opts.tau_max, cfg.tau_max);
  take("out", opts.out, cfg.out);
}

}  // namespace detail_cli

/// Entry point behind main().  Returns the process exit code: 0 success,
/// 2 input/solver errors, 3 when --strict and a quality flag failed.
inline int run(int argc, const char* const* argv) {
  using detail_cli::kv;
  CLI::App app{"Socially optimal tolls and induced equilibria on two-class road networks"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::map<std::string, detail_cli::CommonOpts> opt_handles;

  const auto add_common = [&](CLI::App* sub, bool with_prices, bool with_budget) {
    detail_cli::CommonOpts& h = opt_handles[sub->get_name()];
    if (sub->get_name() != "reproduce-example1")
      h.network = sub->add_option("--network", cfg.network, "Network description file");
    if (with_prices)
      h.prices = sub->add_option("--prices", cfg.prices,
                                 "Toll CSV (link_id,tau_h,tau_a) or 'none'");
    h.seed = sub->add_option("--seed", cfg.seed, "Random seed for solver restarts");
    h.tol = sub->add_option("--tol", cfg.tol, "Primary solver tolerance (0 = default)");
    h.restarts =
        sub->add_option("--restarts", cfg.restarts, "Primary solver restarts (0 = default)");
    if (with_budget) {
      h.budget = sub->add_option("--budget", cfg.budget,
                                 "Toll vectors to evaluate in the search (0 = default)");
      h.tau_max = sub->add_option("--tau-max", cfg.tau_max,
                                  "Toll box upper bound (0 = derive from marginal tolls)");
    }
    h.out = sub->add_option("--out", cfg.out, "Directory for result artifacts");
    sub->add_flag("--strict", cfg.strict, "Exit nonzero when any quality flag fails");
    sub->add_option("--config", h.config_path,
                    "Config snapshot; fills every option not given on the command line");
  };

  add_common(app.add_subcommand("solve-so", "Compute a socially optimal flow"), false, false);
  add_common(app.add_subcommand("solve-ue", "Find equilibria under fixed tolls"), true, false);
  add_common(app.add_subcommand("price", "Externality tolls at the social optimum"), false,
             false);
  add_common(app.add_subcommand(
                 "pipeline", "Social optimum, tolls at it, and the equilibria they induce"),
             false, false);
  add_common(app.add_subcommand("certify",
                                "Pipeline plus the social-delay uniqueness certificate"),
             false, false);
  add_common(app.add_subcommand("undiff-mpec",
                                "Best class-independent tolls by nested search"),
             false, true);
  add_common(app.add_subcommand("compare", "Social delay under the three toll regimes"), false,
             true);
  add_common(app.add_subcommand("reproduce-example1",
                                "Full reproduction run on the bundled example network"),
             false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();
    detail_cli::merge_config_file(cfg, opt_handles[cfg.subcommand]);

    if (cfg.tol < 0.0 || !std::isfinite(cfg.tol)) throw Error("--tol must be positive");
    if (cfg.restarts < 0) throw Error("--restarts must be positive");
    if (cfg.budget < 0) throw Error("--budget must be positive");
    if (cfg.tau_max < 0.0 || !std::isfinite(cfg.tau_max))
      throw Error("--tau-max must be nonnegative");
    if (cfg.tol == 0.0) cfg.tol = cfg.subcommand == "solve-so" || cfg.subcommand == "price"
                                      ? 1e-7
                                      : 1e-6;
    if (cfg.restarts == 0) cfg.restarts = cfg.subcommand == "solve-so" || cfg.subcommand == "price"
                                              ? 8
                                              : 16;
    if (cfg.budget == 0) cfg.budget = 2000;

    std::filesystem::create_directories(cfg.out);
    const std::uint64_t hash = config_hash(cfg);
    const Network net = detail_cli::load_input_network(cfg);
    const PathSet paths = enumerate_paths(net);
    const std::filesystem::path out_dir(cfg.out);
    detail_cli::write_config_snapshot(cfg, hash);

    kv("subcommand", cfg.subcommand);
    kv("config_hash", tollgrid::detail::fmt_hex64(hash));

    bool quality_ok = true;

    if (cfg.subcommand == "solve-so") {
      SoOptions so;
      so.tol = cfg.tol;
      so.restarts = cfg.restarts;
      so.seed = cfg.seed;
      const SoSolution sol = solve_social_optimum(net, paths, so);
      detail_cli::write_flow_csv(out_dir / "so_flow.csv", hash, net, paths, sol.flow);
      kv("J", sol.objective);
      kv("kkt_residual", sol.kkt_residual);
      kv("converged", sol.converged);
      kv("best_restart", sol.best_restart);
      quality_ok = sol.converged;
    } else if (cfg.subcommand == "solve-ue") {
      const PriceVector tau = detail_cli::load_price_source(net, cfg.prices);
      EqOptions eq;
      eq.tol = cfg.tol;
      eq.restarts = cfg.restarts;
      eq.seed = cfg.seed;
      const auto eqs = solve_equilibrium(net, paths, tau, eq);
      detail_cli::write_equilibria_csv(out_dir / "ue_results.csv", hash, net, paths, eqs);
      const auto reps = distinct_equilibria(net, paths, eqs);
      int conv = 0;
      double lo = std::numeric_limits<double>::infinity(), hi = -lo;
      for (const auto& e : eqs) {
        if (!e.converged) continue;
        ++conv;
        lo = std::min(lo, e.social_delay);
        hi = std::max(hi, e.social_delay);
      }
      kv("num_converged", conv);
      kv("num_distinct", static_cast<int>(reps.size()));
      kv("min_J", conv ? lo : std::numeric_limits<double>::quiet_NaN());
      kv("max_J", conv ? hi : std::numeric_limits<double>::quiet_NaN());
      quality_ok = conv > 0;
    } else if (cfg.subcommand == "price") {
      SoOptions so;
      so.tol = cfg.tol;
      so.restarts = cfg.restarts;
      so.seed = cfg.seed;
      const SoSolution sol = solve_social_optimum(net, paths, so);
      const PriceVector tau = marginal_prices(net, paths, sol.flow);
      const PriceStructureReport structure = check_price_structure(net, tau);
      detail_cli::write_flow_csv(out_dir / "so_flow.csv", hash, net, paths, sol.flow);
      detail_cli::write_prices_csv(out_dir / "prices.csv", hash, net, tau);
      kv("J", sol.objective);
      kv("converged", sol.converged);
      kv("structure_applicable", structure.applicable);
      if (structure.applicable) {
        kv("mu", structure.mu);
        kv("structure_max_rel_dev", structure.max_rel_deviation);
        kv("structure_pass", structure.pass);
      }
      quality_ok = sol.converged && (!structure.applicable || structure.pass);
    } else if (cfg.subcommand == "pipeline" || cfg.subcommand == "certify") {
      PipelineOptions po;
      po.so.seed = cfg.seed;
      po.eq.tol = cfg.tol;
      po.eq.restarts = cfg.restarts;
      po.eq.seed = cfg.seed;
      const PipelineResult pr = price_pipeline(net, paths, po);
      detail_cli::write_flow_csv(out_dir / "so_flow.csv", hash, net, paths, pr.so.flow);
      detail_cli::write_prices_csv(out_dir / "prices.csv", hash, net, pr.tau);
      detail_cli::write_equilibria_csv(out_dir / "ue_results.csv", hash, net, paths,
                                       pr.equilibria);
      kv("J_star", pr.so.objective);
      kv("so_converged", pr.so.converged);
      kv("witness_gap", pr.witness_gap);
      kv("num_converged", pr.num_converged);
      kv("num_distinct", static_cast<int>(pr.distinct.size()));
      kv("min_J", pr.min_social);
      kv("max_J", pr.max_social);
      kv("spread_rel", pr.social_spread_rel);
      kv("all_within_tol", pr.all_within_tol);
      quality_ok = pr.so.converged && pr.num_converged > 0 && pr.all_within_tol;
      if (cfg.subcommand == "certify") {
        const CertifyTols tols;
        const CertificateReport cert =
            certify_social_delay_uniqueness(net, paths, pr.tau, pr.equilibria, tols);
        detail_cli::write_certificate_csv(out_dir / "certificate.csv", hash, cert, tols);
        kv("certificate", to_string(cert.status));
        kv("num_checked", cert.num_checked);
        kv("aux_gap", cert.max_aux_gap);
        kv("flow_spread", cert.max_flow_spread);
        kv("social_spread_rel", cert.social_spread_rel);
        kv("decomposition_err", cert.max_decomposition_err);
        quality_ok = quality_ok && cert.status == CertificateStatus::Pass;
      }
    } else if (cfg.subcommand == "undiff-mpec") {
      UndiffOptions uo;
      uo.tol = cfg.tol;
      uo.budget = cfg.budget;
      uo.seed = cfg.seed;
      uo.tau_max = cfg.tau_max;
      uo.inner_restarts = cfg.restarts;
      const UndiffSearchResult res = solve_undiff_mpec(net, paths, uo);
      detail_cli::write_trace_csv(out_dir / "undiff_trace.csv", hash, net, res);
      {
        CsvFile csv(out_dir / "undiff_tau.csv", hash);
        csv.row({"link_id", "tau"});
        for (std::size_t l = 0; l < net.num_links(); ++l)
          csv.row({CsvFile::cell(net.links()[l].id), CsvFile::cell(res.best_tau.h[l])});
      }
      kv("best_J", res.best_social_delay);
      kv("evaluations", res.evaluations);
      kv("budget_exhausted", res.budget_exhausted);
      kv("tau_max_used", res.tau_max_used);
      kv("widenings", res.widenings);
      quality_ok = !res.budget_exhausted && res.best_trace >= 0;
    } else if (cfg.subcommand == "compare" || cfg.subcommand == "reproduce-example1") {
      CompareOptions co;
      co.pipeline.so.seed = cfg.seed;
      co.pipeline.eq.tol = cfg.tol;
      co.pipeline.eq.restarts = cfg.restarts;
      co.pipeline.eq.seed = cfg.seed;
      co.undiff.tol = cfg.tol;
      co.undiff.budget = cfg.budget;
      co.undiff.seed = cfg.seed;
      co.undiff.tau_max = cfg.tau_max;
      co.undiff.inner_restarts = cfg.restarts;
      const ComparisonReport rep = compare_pricing_regimes(net, paths, co);
      detail_cli::write_compare_csv(out_dir / "compare.csv", hash, rep);
      detail_cli::write_flow_csv(out_dir / "so_flow.csv", hash, net, paths, rep.pipeline.so.flow);
      detail_cli::write_prices_csv(out_dir / "prices.csv", hash, net, rep.pipeline.tau);
      detail_cli::write_equilibria_csv(out_dir / "ue_results.csv", hash, net, paths,
                                       rep.pipeline.equilibria);
      detail_cli::write_trace_csv(out_dir / "undiff_trace.csv", hash, net, rep.undiff);
      kv("j_star", rep.j_star);
      kv("undiff_best", rep.undiff.best_social_delay);
      kv("witness_gap", rep.pipeline.witness_gap);
      kv("pipeline_all_within_tol", rep.pipeline.all_within_tol);
      quality_ok = rep.pipeline.so.converged && rep.pipeline.num_converged > 0 &&
                   rep.pipeline.all_within_tol && !rep.undiff.budget_exhausted &&
                   rep.undiff.best_trace >= 0;
      if (cfg.subcommand == "reproduce-example1") {
        const CertifyTols tols;
        const CertificateReport cert = certify_social_delay_uniqueness(
            net, paths, rep.pipeline.tau, rep.pipeline.equilibria, tols);
        detail_cli::write_certificate_csv(out_dir / "certificate.csv", hash, cert, tols);
        kv("certificate", to_string(cert.status));
        quality_ok = quality_ok && cert.status == CertificateStatus::Pass;
      }
      detail_cli::print_regime_table(rep);
    }

    if (cfg.strict && !quality_ok) return 3;
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tollgrid::cli
