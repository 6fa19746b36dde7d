#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "baldom/backtracking.hpp"
#include "baldom/certificates.hpp"
#include "baldom/generators.hpp"
#include "baldom/graph.hpp"
#include "baldom/grids.hpp"
#include "baldom/io.hpp"
#include "baldom/solver.hpp"
#include "baldom/trees.hpp"

namespace baldom::cli {

// Exit codes: 0 success, 1 argument error, 2 resource limit,
// 3 invariant violation (a theorem check failed on some instance).
inline constexpr int exit_ok = 0;
inline constexpr int exit_argument_error = 1;
inline constexpr int exit_resource_error = 2;
inline constexpr int exit_invariant_violation = 3;

struct RunConfig {
  SearchLimits limits;
  std::string format = "json";
  std::string out_path;  // empty = standard output
};

namespace detail {

inline CLI::Option* add_common_options(CLI::App* sub, RunConfig& cfg,
                                       const std::vector<std::string>& formats) {
  CLI::Option* format = sub->add_option("--format", cfg.format, "output format")
                            ->check(CLI::IsMember(formats));
  sub->add_option("--out", cfg.out_path, "write output to this file");
  sub->add_option("--limits-max-free", cfg.limits.max_free_enumeration,
                  "free-variable enumeration bound (3^k search space)");
  sub->add_option("--limits-node-budget", cfg.limits.node_budget,
                  "backtracking node budget");
  sub->add_option("--limits-workers", cfg.limits.workers,
                  "worker threads for enumeration")
      ->check(CLI::PositiveNumber);
  return format;
}

inline void emit(const RunConfig& cfg, std::ostream& fallback, const std::string& text) {
  if (cfg.out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::invalid_argument("cannot open output file: " + cfg.out_path);
  f << text;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::vector<std::size_t> parse_count_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list: " + text);
    std::size_t pos = 0;
    const long long v = std::stoll(item, &pos);
    if (pos != item.size() || v < 0)
      throw std::invalid_argument("expected a non-negative count, got: " + item);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

struct FamilyArgs {
  std::string family;
  std::size_t n = 0, m = 0;
  std::string spec;   // comma list for caterpillar / two-level
  std::string shape;  // full binary shape descriptor
};

inline Graph build_family_graph(const FamilyArgs& args) {
  const std::string& f = args.family;
  if (f == "antiprism") return antiprism(args.n);
  if (f == "polytope-d") return polytope_d(args.n);
  if (f == "polytope-r2") return polytope_r2(args.n);
  if (f == "grid") return grid(args.m, args.n);
  if (f == "caterpillar") {
    auto leaves = parse_count_list(args.spec);
    return caterpillar(CaterpillarSpec{leaves.size(), leaves});
  }
  if (f == "two-level") {
    auto leaves = parse_count_list(args.spec);
    return two_level_tree(TwoLevelTreeSpec{leaves.size(), leaves});
  }
  if (f == "full-binary")
    return full_binary_tree(parse_full_binary_shape(args.shape));
  throw std::invalid_argument("unknown family: " + f);
}

inline void add_family_options(CLI::App* sub, FamilyArgs& args, bool required) {
  auto* fam = sub->add_option("--family", args.family,
                              "graph family: antiprism | polytope-d | polytope-r2 | "
                              "grid | caterpillar | two-level | full-binary")
                  ->check(CLI::IsMember({"antiprism", "polytope-d", "polytope-r2",
                                         "grid", "caterpillar", "two-level",
                                         "full-binary"}));
  if (required) fam->required();
  sub->add_option("--n", args.n, "family size parameter n");
  sub->add_option("--m", args.m, "grid row count m");
  sub->add_option("--spec", args.spec, "comma list of leaf counts");
  sub->add_option("--shape", args.shape,
                  "full binary shape, '.' = leaf, '(LR)' = node");
}

// ---------------------------------------------------------------------------
// sweep: re-verifies the paper-level claims over parameter ranges.
// ---------------------------------------------------------------------------

struct SweepOptions {
  std::size_t polytope_max = 8;
  std::size_t grid_max = 6;
  std::size_t tree_n_max = 4;
  std::size_t tree_leaf_max = 3;
  std::size_t binary_max_vertices = 11;
  std::size_t caterpillar_max = 7;
};

struct SweepRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline std::vector<SweepRow> run_sweep(const SweepOptions& opt,
                                       const SearchLimits& limits) {
  std::vector<SweepRow> rows;

  struct FamilyGen {
    std::string name;
    Graph (*make)(std::size_t);
  };
  const FamilyGen families[] = {
      {"antiprism", antiprism}, {"polytope-d", polytope_d}, {"polytope-r2", polytope_r2}};
  for (const auto& fam : families) {
    SweepRow row{fam.name + " d-balanced, n=5.." + std::to_string(opt.polytope_max),
                 true, ""};
    for (std::size_t n = 5; n <= opt.polytope_max; ++n) {
      const Graph g = fam.make(n);
      const auto part = natural_partition(g);
      const bool certified = part && certify_d_balanced(g, *part).has_value();
      const bool balanced = gamma_bd(g, limits).gamma == 0;
      if (!certified || !balanced) {
        row.pass = false;
        row.detail = "failed at n=" + std::to_string(n);
        break;
      }
    }
    if (row.pass)
      row.detail = "certificates + solver agree";
    rows.push_back(std::move(row));
  }

  {
    SweepRow row{"grids gamma=0 and classified, m<=n<=" + std::to_string(opt.grid_max),
                 true, ""};
    for (std::size_t m = 1; m <= opt.grid_max && row.pass; ++m) {
      for (std::size_t n = m; n <= opt.grid_max && row.pass; ++n) {
        const auto all = all_bdfs_by_propagation(m, n, limits);
        bool nonzero_found = false;
        for (const auto& lab : all) {
          if (lab.is_zero()) continue;
          nonzero_found = true;
          if (lab.weight() != 0 || !classify_grid(lab)) {
            row.pass = false;
            row.detail = "unclassified or non-zero-weight BDF on grid(" +
                         std::to_string(m) + "," + std::to_string(n) + ")";
          }
        }
        const bool congruent = scheme_congruences_hold(m, n, 1) ||
                               scheme_congruences_hold(m, n, 2) ||
                               scheme_congruences_hold(m, n, 3);
        if (nonzero_found != congruent) {
          row.pass = false;
          row.detail = "congruence mismatch at grid(" + std::to_string(m) + "," +
                       std::to_string(n) + ")";
        }
      }
    }
    if (row.pass) row.detail = "propagation sweep clean";
    rows.push_back(std::move(row));
  }

  {
    SweepRow row{"two-level verdict matches solver, n=2.." +
                     std::to_string(opt.tree_n_max) + ", l<=" +
                     std::to_string(opt.tree_leaf_max),
                 true, ""};
    std::size_t checked = 0;
    for (std::size_t n = 2; n <= opt.tree_n_max && row.pass; ++n) {
      std::vector<std::size_t> leaves(n, 0);
      while (true) {
        const TwoLevelTreeSpec spec{n, leaves};
        const TwoLevelVerdict v = two_level_verdict(spec);
        const GammaResult r = gamma_bd(two_level_tree(spec), limits);
        if (v.d_balanced != (r.gamma == 0) || r.gamma != v.gamma_formula) {
          row.pass = false;
          row.detail = "mismatch at a spec with n=" + std::to_string(n);
          break;
        }
        ++checked;
        std::size_t i = n;
        while (i > 0 && leaves[i - 1] == opt.tree_leaf_max) leaves[--i] = 0;
        if (i == 0) break;
        ++leaves[i - 1];
      }
    }
    if (row.pass) row.detail = std::to_string(checked) + " specs";
    rows.push_back(std::move(row));
  }

  {
    SweepRow row{"full binary trees: zero BDF only, <=" +
                     std::to_string(opt.binary_max_vertices) + " vertices",
                 true, ""};
    const auto shapes = enumerate_full_binary_shapes(opt.binary_max_vertices);
    for (const auto& s : shapes) {
      if (!full_binary_d_balanced(s, limits)) {
        row.pass = false;
        row.detail = "failed for shape " + shape_to_string(s);
        break;
      }
    }
    if (row.pass) row.detail = std::to_string(shapes.size()) + " shapes";
    rows.push_back(std::move(row));
  }

  {
    SweepRow row{"caterpillar MBDF leaf-count congruence, n=2.." +
                     std::to_string(opt.caterpillar_max),
                 true, ""};
    std::size_t found = 0;
    for (std::size_t n = 2; n <= opt.caterpillar_max && row.pass; ++n) {
      for (const auto& a : caterpillar_mbdf_search(n)) {
        ++found;
        const bool congruent =
            a.total_leaves % 4 == (3 * n - 2) % 4;
        auto [g, lab] = induced_caterpillar(a);
        if (!congruent || !is_bdf(g, lab) || a.pairs_with_zero % 2 != 0) {
          row.pass = false;
          row.detail = "violation at spine length " + std::to_string(n);
          break;
        }
      }
    }
    if (row.pass) row.detail = std::to_string(found) + " non-zero MBDFs";
    rows.push_back(std::move(row));
  }

  return rows;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"balanced domination number toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  detail::FamilyArgs fam;
  std::string input_path;
  std::string two_level_spec, full_binary_shape;
  std::size_t grid_m = 0, grid_n = 0, search_n = 0;
  detail::SweepOptions sweep_opt;

  auto* gen = app.add_subcommand("gen", "generate a graph and print it");
  detail::add_family_options(gen, fam, true);
  detail::add_common_options(gen, cfg, {"json", "dot"});

  auto* solve = app.add_subcommand("solve", "compute the balanced domination number");
  detail::add_family_options(solve, fam, false);
  solve->add_option("--input", input_path, "graph JSON file ('-' for stdin)");
  detail::add_common_options(solve, cfg, {"json", "text"});

  auto* certify = app.add_subcommand(
      "certify", "layer-sum certificate for a named polytope family");
  detail::add_family_options(certify, fam, true);
  detail::add_common_options(certify, cfg, {"json", "text"});

  auto* gridc = app.add_subcommand("grid-classify",
                                   "enumerate and classify all non-zero grid BDFs");
  gridc->add_option("--m", grid_m, "rows")->required();
  gridc->add_option("--n", grid_n, "columns")->required();
  detail::add_common_options(gridc, cfg, {"json", "text"});

  auto* treec = app.add_subcommand("tree-check", "closed-form tree verdicts");
  treec->add_option("--two-level", two_level_spec,
                    "child leaf counts of a two-level rooted tree, e.g. 2,0,0");
  treec->add_option("--full-binary", full_binary_shape,
                    "full binary shape, '.' = leaf, '(LR)' = node");
  detail::add_common_options(treec, cfg, {"json"});

  auto* cats = app.add_subcommand("caterpillar-search",
                                  "enumerate non-zero MBDFs by spine length");
  cats->add_option("--n", search_n, "spine length")->required();
  detail::add_common_options(cats, cfg, {"json"});

  auto* sweep = app.add_subcommand("sweep", "re-verify the theorem claims over ranges");
  sweep->add_option("--polytope-max", sweep_opt.polytope_max, "max polytope n");
  sweep->add_option("--grid-max", sweep_opt.grid_max, "max grid dimension");
  sweep->add_option("--tree-n-max", sweep_opt.tree_n_max, "max two-level children");
  sweep->add_option("--tree-leaf-max", sweep_opt.tree_leaf_max, "max leaves per child");
  sweep->add_option("--binary-max-vertices", sweep_opt.binary_max_vertices,
                    "max full binary tree vertices");
  sweep->add_option("--caterpillar-max", sweep_opt.caterpillar_max,
                    "max caterpillar spine length");
  CLI::Option* sweep_format =
      detail::add_common_options(sweep, cfg, {"text", "json"});

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  static const char* prog = "baldom";
  argv.push_back(prog);
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_argument_error;
  }

  try {
    if (gen->parsed()) {
      const Graph g = detail::build_family_graph(fam);
      if (cfg.format == "dot") detail::emit(cfg, out, graph_to_dot(g));
      else detail::emit(cfg, out, detail::dump(graph_to_json(g)));
      return exit_ok;
    }

    if (solve->parsed()) {
      Graph g;
      if (!fam.family.empty()) {
        g = detail::build_family_graph(fam);
      } else if (!input_path.empty()) {
        Json j;
        if (input_path == "-") {
          j = Json::parse(std::cin);
        } else {
          std::ifstream f(input_path);
          if (!f) throw std::invalid_argument("cannot open input: " + input_path);
          j = Json::parse(f);
        }
        g = graph_from_json(j);
      } else {
        throw std::invalid_argument("solve: need --family or --input");
      }
      const GammaResult r = gamma_bd(g, cfg.limits);
      if (cfg.format == "text") {
        std::ostringstream t;
        t << "gamma_bd = " << r.gamma << (r.d_balanced ? " (d-balanced)" : "") << "\n";
        detail::emit(cfg, out, t.str());
      } else {
        detail::emit(cfg, out, detail::dump(gamma_result_to_json(r)));
      }
      return exit_ok;
    }

    if (certify->parsed()) {
      const Graph g = detail::build_family_graph(fam);
      const auto part = natural_partition(g);
      if (!part)
        throw std::invalid_argument(
            "certify: no natural layer partition for family " + fam.family);
      const CertifyReport rep = certify_report(g, *part);
      if (cfg.format == "text") {
        detail::emit(cfg, out, to_string(rep.status) + "\n");
      } else {
        detail::emit(cfg, out, detail::dump(certify_report_to_json(*part, rep)));
      }
      return exit_ok;
    }

    if (gridc->parsed()) {
      const auto all = all_bdfs_by_propagation(grid_m, grid_n, cfg.limits);
      const GammaResult gr = gamma_bd_grid(grid_m, grid_n, cfg.limits);
      Json report;
      report["m"] = grid_m;
      report["n"] = grid_n;
      report["gamma"] = gr.gamma;
      std::size_t nonzero = 0;
      Json classifications = Json::array();
      bool all_classified = true;
      std::ostringstream text;
      for (const auto& lab : all) {
        if (lab.is_zero()) continue;
        ++nonzero;
        const auto scheme = classify_grid(lab);
        if (!scheme) all_classified = false;
        Json entry;
        entry["type"] = scheme ? Json(scheme->name()) : Json(nullptr);
        Json layout = Json::array();
        if (scheme)
          for (const RowBlock& b : scheme->row_layout) layout.push_back(to_string(b));
        entry["layout"] = std::move(layout);
        entry["labeling"] = grid_labeling_to_json(lab);
        classifications.push_back(std::move(entry));
        text << (scheme ? scheme->name() : std::string("UNCLASSIFIED")) << "\n"
             << grid_labeling_to_text(lab) << "\n";
      }
      report["nonzero_bdfs"] = nonzero;
      report["classifications"] = std::move(classifications);
      if (cfg.format == "text") {
        text << "gamma = " << gr.gamma << ", non-zero BDFs: " << nonzero << "\n";
        detail::emit(cfg, out, text.str());
      } else {
        detail::emit(cfg, out, detail::dump(report));
      }
      // an unclassified non-zero BDF falsifies the classification theorem
      return all_classified ? exit_ok : exit_invariant_violation;
    }

    if (treec->parsed()) {
      Json report;
      if (!two_level_spec.empty()) {
        const auto leaves = detail::parse_count_list(two_level_spec);
        const TwoLevelTreeSpec spec{leaves.size(), leaves};
        const TwoLevelVerdict v = two_level_verdict(spec);
        report["family"] = "two-level";
        report["n"] = spec.n_children;
        report["leaves"] = leaves;
        report["d_balanced"] = v.d_balanced;
        report["l_count"] = v.l_count;
        report["gamma"] = v.gamma_formula;
      } else if (!full_binary_shape.empty()) {
        const auto shape = parse_full_binary_shape(full_binary_shape);
        const GammaResult r = gamma_bd(full_binary_tree(shape), cfg.limits);
        report["family"] = "full-binary";
        report["vertices"] = shape.vertex_count();
        report["d_balanced"] = r.d_balanced;
        report["gamma"] = r.gamma;
        report["bdf_count"] = r.bdf_count ? Json(*r.bdf_count) : Json(nullptr);
      } else {
        throw std::invalid_argument("tree-check: need --two-level or --full-binary");
      }
      detail::emit(cfg, out, detail::dump(report));
      return exit_ok;
    }

    if (cats->parsed()) {
      const auto results = caterpillar_mbdf_search(search_n);
      Json report;
      report["n"] = search_n;
      report["count"] = results.size();
      Json arr = Json::array();
      for (const auto& a : results) {
        Json entry;
        entry["spine"] = a.spine_labels;
        entry["leaf_counts"] = a.leaf_counts;
        entry["L"] = a.total_leaves;
        entry["weight"] = a.weight;
        entry["pair_sum"] = a.pair_sum;
        entry["pairs"] = Json{{"same_sign", a.pairs_same_sign},
                              {"opposite", a.pairs_opposite},
                              {"with_zero", a.pairs_with_zero}};
        arr.push_back(std::move(entry));
      }
      report["results"] = std::move(arr);
      detail::emit(cfg, out, detail::dump(report));
      return exit_ok;
    }

    if (sweep->parsed()) {
      if (sweep_format->count() == 0) cfg.format = "text";  // table by default
      const auto rows = detail::run_sweep(sweep_opt, cfg.limits);
      bool all_pass = true;
      if (cfg.format == "text") {
        std::ostringstream t;
        for (const auto& r : rows) {
          all_pass = all_pass && r.pass;
          t << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        }
        detail::emit(cfg, out, t.str());
      } else {
        Json arr = Json::array();
        for (const auto& r : rows) {
          all_pass = all_pass && r.pass;
          arr.push_back(Json{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        detail::emit(cfg, out, detail::dump(arr));
      }
      return all_pass ? exit_ok : exit_invariant_violation;
    }
  } catch (const resource_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return exit_resource_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_argument_error;
  } catch (const Json::parse_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_argument_error;
  }
  return exit_argument_error;
}

inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace baldom::cli
