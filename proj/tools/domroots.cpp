// domroots: command-line front end for domination polynomials and their roots.
//
// Exit codes: 0 success, 1 internal error, 2 parse/usage error, 3 cap exceeded,
// 4 root finder did not converge, 5 product formula hypothesis not met.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domroots/domroots.hpp"

namespace {

using namespace domroots;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kCap = 3,
  kConvergence = 4,
  kHypothesis = 5,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kCap;
    case ErrorKind::NoConvergence: return kConvergence;
    case ErrorKind::HypothesisNotMet: return kHypothesis;
    case ErrorKind::Invalid: return kInternal;
    default: return kParse;
  }
}

struct RunConfig {
  std::vector<std::string> g6;
  std::string g6_file;
  std::string family;
  std::string params;
  std::string range;
  std::string window = "-3,3,-3,3";
  std::size_t grid = 20;
  std::string format;
  std::size_t workers = 0;
  std::size_t cap = kDefaultEnumerationCap;
  double tol = 1e-9;
  bool verify = false;
  bool certify = false;
  std::string out;
  std::string formula = "general";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidSpec, "bad integer '" + text + "' in " + what);
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidSpec, "bad number '" + text + "' in " + what);
}

std::vector<Graph> input_graphs(const RunConfig& cfg, std::size_t vertex_cap = kDefaultVertexCap) {
  std::vector<Graph> graphs;
  for (const auto& text : cfg.g6) graphs.push_back(parse_graph6(text, vertex_cap));
  if (!cfg.g6_file.empty()) {
    std::ifstream in(cfg.g6_file);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + cfg.g6_file);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      graphs.push_back(parse_graph6(line, vertex_cap));
    }
  }
  if (graphs.empty()) throw Error(ErrorKind::ParseError, "no input graph (use --g6 or --g6-file)");
  return graphs;
}

CountOptions counting(const RunConfig& cfg) { return {cfg.workers, cfg.cap}; }

FamilySweep sweep_from(const RunConfig& cfg) {
  FamilySweep sweep;
  sweep.base.family = parse_family(cfg.family);
  if (!cfg.params.empty())
    for (const auto& p : split(cfg.params, ',')) sweep.base.params.push_back(parse_long(p, "--params"));
  if (cfg.range.empty()) {
    if (sweep.base.params.empty()) throw Error(ErrorKind::InvalidSpec, "need --params or --range");
    sweep.first = sweep.last = sweep.base.params.front();
  } else {
    const auto parts = split(cfg.range, ':');
    if (parts.size() < 2 || parts.size() > 3) throw Error(ErrorKind::InvalidSpec, "--range expects first:last[:step]");
    sweep.first = parse_long(parts[0], "--range");
    sweep.last = parse_long(parts[1], "--range");
    if (parts.size() == 3) sweep.step = parse_long(parts[2], "--range");
  }
  return sweep;
}

Window window_from(const RunConfig& cfg) {
  const auto parts = split(cfg.window, ',');
  if (parts.size() != 4) throw Error(ErrorKind::InvalidSpec, "--window expects re_min,re_max,im_min,im_max");
  Window w{parse_double(parts[0], "--window"), parse_double(parts[1], "--window"), parse_double(parts[2], "--window"),
           parse_double(parts[3], "--window")};
  if (w.degenerate()) throw Error(ErrorKind::InvalidSpec, "--window is empty");
  return w;
}

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions opts;
  opts.counting = counting(cfg);
  opts.tol = cfg.tol;
  opts.workers = cfg.workers;
  return opts;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidSpec, "cannot write " + path);
  out << content;
}

int cmd_poly(const RunConfig& cfg) {
  for (const auto& g : input_graphs(cfg)) {
    const auto p = count_by_enumeration(g, counting(cfg));
    json j = p;
    if (cfg.verify) {
      const bool agree = count_by_inclusion_exclusion(g, counting(cfg)) == p;
      j["verified"] = agree;
      if (!agree) {
        std::cout << j.dump() << '\n';
        std::cerr << "enumeration and inclusion-exclusion disagree for " << to_graph6(g) << '\n';
        return kInternal;
      }
    }
    std::cout << j.dump() << '\n';
  }
  return kOk;
}

int cmd_roots(const RunConfig& cfg) {
  int status = kOk;
  for (const auto& g : input_graphs(cfg)) {
    const auto p = count_by_enumeration(g, counting(cfg));
    json j;
    try {
      const auto rs = find_all_roots(p);
      j = rs;
      if (cfg.certify) {
        j["classification"] = classify(rs, cfg.tol);
        j["certificate"] = sturm_real_root_count(p, Bound::neg_inf(), Bound::pos_inf());
        j["no_nonzero_real_roots"] = certify_no_nonzero_real_roots(p);
      }
    } catch (const NoConvergence& e) {
      j = e.best();
      j["error"] = e.what();
      status = kConvergence;
    }
    j["graph6"] = to_graph6(g);
    j["polynomial"] = p;
    std::cout << j.dump() << '\n';
  }
  return status;
}

int cmd_lexprod(const RunConfig& cfg) {
  const auto graphs = input_graphs(cfg);
  if (graphs.size() != 2) throw Error(ErrorKind::ParseError, "lexprod needs exactly two graphs (G then H)");
  LexFormula formula = LexFormula::General;
  if (cfg.formula == "composition")
    formula = LexFormula::Composition;
  else if (cfg.formula != "general")
    throw Error(ErrorKind::InvalidSpec, "--formula must be general or composition");
  const auto report = cross_check_product(graphs[0], graphs[1], formula, counting(cfg));
  std::cout << json(report).dump() << '\n';
  if (!report.hypothesis_met()) {
    std::cerr << report.failed_condition << '\n';
    return kHypothesis;
  }
  return report.equal ? kOk : kInternal;
}

int cmd_density(const RunConfig& cfg) {
  const auto sweep = sweep_from(cfg);
  const auto window = window_from(cfg);
  RootCloud cloud;
  const auto steps = cumulative_coverage(sweep, window, cfg.grid, sweep_options(cfg), &cloud);

  json report{{"family", to_string(sweep.base.family)}, {"window", window}, {"grid", cfg.grid}};
  report["prefixes"] = json::array();
  for (const auto& s : steps)
    report["prefixes"].push_back({{"member", s.last_member}, {"points", s.points}, {"coverage", s.coverage}});
  report["coverage"] = cloud.coverage(window, cfg.grid);
  report["points"] = cloud.points().size();
  report["errors"] = cloud.errors();

  if (!cfg.out.empty()) {
    write_file(cfg.out + ".csv", cloud.to_csv());
    write_file(cfg.out + ".coverage.json", report.dump(2) + "\n");
    if (cfg.format == "svg") write_file(cfg.out + ".svg", render_scatter_svg(cloud, window));
  }
  if (cfg.format == "csv")
    std::cout << cloud.to_csv();
  else if (cfg.format == "svg")
    std::cout << render_scatter_svg(cloud, window);
  else
    std::cout << report.dump() << '\n';

  const auto members = sweep.members().size();
  if (members > 0 && cloud.errors().size() == members) return exit_code_for(cloud.errors().front().kind);
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto sweep = sweep_from(cfg);
  for (const auto& spec : sweep.members()) families_detail::validate(spec);
  const auto opts = sweep_options(cfg);
  const auto certs = verify_no_nonzero_real_roots(sweep, opts);
  const auto flags = verify_positive_real_part(sweep, opts);
  json out{{"family", to_string(sweep.base.family)}, {"members", json::array()}};
  bool all_ok = true;
  for (std::size_t i = 0; i < certs.size(); ++i) {
    json member{{"member", certs[i].spec},
                {"no_nonzero_real_roots", certs[i]},
                {"positive_real_part", flags[i]},
                {"every_vertex_in_triangle", nullptr}};
    try {
      member["every_vertex_in_triangle"] = every_vertex_in_triangle(generate(certs[i].spec));
    } catch (const Error&) {
    }
    all_ok = all_ok && certs[i].error.empty() && flags[i].error.empty();
    out["members"].push_back(std::move(member));
  }
  std::cout << out.dump() << '\n';
  return all_ok ? kOk : kCap;
}

int cmd_generate(const RunConfig& cfg) {
  for (const auto& spec : sweep_from(cfg).members()) std::cout << to_graph6(generate(spec)) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination polynomials, domination roots and lexicographic products"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  const auto add_graph_inputs = [&cfg](CLI::App* sub) {
    sub->add_option("--g6", cfg.g6, "graph6 string (repeatable)");
    sub->add_option("--g6-file", cfg.g6_file, "file with one graph6 string per line");
  };
  const auto add_counting = [&cfg](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    sub->add_option("--cap", cfg.cap, "enumeration cap override")->check(CLI::Range(1, 32));
  };
  const auto add_family = [&cfg](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "family id")->required();
    sub->add_option("--params", cfg.params, "comma-separated parameters");
    sub->add_option("--range", cfg.range, "first:last[:step] for the first parameter");
  };

  auto* poly = app.add_subcommand("poly", "domination polynomial as JSON");
  add_graph_inputs(poly);
  add_counting(poly);
  poly->add_flag("--verify", cfg.verify, "cross-check with inclusion-exclusion");

  auto* roots = app.add_subcommand("roots", "complex domination roots as JSON");
  add_graph_inputs(roots);
  add_counting(roots);
  roots->add_flag("--certify", cfg.certify, "add classification and exact Sturm certificate");
  roots->add_option("--tol", cfg.tol, "real-axis tolerance");

  auto* lexprod = app.add_subcommand("lexprod", "formula vs enumeration for G[H]");
  add_graph_inputs(lexprod);
  add_counting(lexprod);
  lexprod->add_option("--formula", cfg.formula, "general | composition");

  auto* density = app.add_subcommand("density", "root cloud and grid coverage of a family sweep");
  add_family(density);
  add_counting(density);
  density->add_option("--window", cfg.window, "re_min,re_max,im_min,im_max");
  density->add_option("--grid", cfg.grid, "cells per side")->check(CLI::PositiveNumber);
  density->add_option("--format", cfg.format, "json | csv | svg (stdout)")->check(CLI::IsMember({"json", "csv", "svg"}));
  density->add_option("--out", cfg.out, "write <out>.csv, <out>.coverage.json and, with --format svg, <out>.svg");
  density->add_option("--tol", cfg.tol, "real-axis tolerance");

  auto* verify = app.add_subcommand("verify", "exact real-root certificates and positive-real-part flags");
  add_family(verify);
  add_counting(verify);
  verify->add_option("--tol", cfg.tol, "real-axis tolerance");

  auto* generate_cmd = app.add_subcommand("generate", "graph6 of family members");
  add_family(generate_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*poly) return cmd_poly(cfg);
    if (*roots) return cmd_roots(cfg);
    if (*lexprod) return cmd_lexprod(cfg);
    if (*density) return cmd_density(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*generate_cmd) return cmd_generate(cfg);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
