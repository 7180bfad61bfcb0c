#include "pbw/commands.hpp"

#include "pbw/errors.hpp"
#include "pbw/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace pbw {

namespace {

struct Options {
  std::string input;
  int degree = 4;
  int hbar_order = 3;
  std::string corrections;
  int dim = 0;
  int weight = 4;
  int cohomology_degree = 0;
  std::string deform;
  int levels = 2;
  int order = 2;
  int max_degree = -1;
  std::string output;
  int aerial = 1;
  std::string mode = "out2";
  int cap = 3;
  bool as_json = false;
};

InputSpec builtin(const std::string &name) {
  std::optional<LieAlgebra> g;
  if (name == "sl2")
    g = LieAlgebra::sl2();
  else if (name == "h3")
    g = LieAlgebra::heisenberg();
  else if (name == "so3")
    g = LieAlgebra::so3();
  else if (name == "non-jacobi")
    g = LieAlgebra::non_jacobi_example();
  if (!g)
    throw ParseError("cannot open '" + name + "' (and it is not one of sl2, h3, so3, non-jacobi)");
  InputSpec in;
  in.kind = InputSpec::Kind::lie;
  in.dimension = g->n;
  for (int i = 1; i <= g->n; ++i)
    in.variables.push_back("x" + std::to_string(i));
  in.poisson = g->poisson();
  in.lie = std::move(g);
  return in;
}

InputSpec resolve(const std::string &source) {
  if (source.empty())
    throw ParseError("no input given");
  if (std::filesystem::exists(source))
    return load_input(source);
  return builtin(source);
}

const LieAlgebra &require_lie(const InputSpec &in) {
  if (!in.lie)
    throw ParseError("this command needs a lie input (kind \"lie\")");
  return *in.lie;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_report(const json &r, const Options &o, std::ostream &out) {
  if (o.as_json) {
    out << r.dump(2) << "\n";
    return;
  }
  out << "command: " << r.at("command").get<std::string>() << "\n";
  for (const auto &line : r.at("lines"))
    out << line.get<std::string>() << "\n";
  out << "verdict: " << r.at("verdict").get<std::string>() << " (" << r.at("timing_ms").get<long>() << " ms)\n";
}

int finish(json &r, bool pass, const Options &o, std::ostream &out,
           std::chrono::steady_clock::time_point t0) {
  r["verdict"] = pass ? "PASS" : "FAIL";
  r["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  print_report(r, o, out);
  return pass ? exit_pass : exit_verdict;
}

std::string dims_line(const PBWReport &rep) {
  std::string s = "gr dims by degree:";
  for (std::size_t d = 0; d < rep.dims.size(); ++d)
    s += " " + std::to_string(rep.dims[d]) + "/" + std::to_string(rep.expected[d]);
  return s;
}

void pbw_lines(json &lines, const PBWReport &rep) {
  lines.push_back(dims_line(rep));
  if (rep.approximate)
    lines.push_back("no homogeneous grading: dimensions use a length window (approximate)");
  for (const auto &d : rep.defects)
    lines.push_back("overlap (" + std::to_string(d.k + 1) + "," + std::to_string(d.j + 1) + "," +
                    std::to_string(d.i + 1) + ") defect from h^" +
                    std::to_string(d.first_order) + ": " + d.defect.str());
}

int cmd_check_jacobi(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputSpec in = resolve(o.input);
  const PoissonCheck pc = is_poisson(in.poisson);
  json r{{"command", "check-jacobi"}, {"parameters", {{"input", o.input}}}};
  json lines = json::array();
  r["poisson"] = pc.poisson;
  r["bracket"] = pc.bracket.str();
  r["witness"] = pc.witness.str();
  lines.push_back("[alpha,alpha] = " + pc.bracket.str());
  bool pass = pc.poisson;
  if (in.lie) {
    const auto jc = in.lie->check_jacobi();
    r["jacobi"] = jc.ok;
    if (jc.witness) {
      const auto &w = *jc.witness;
      r["jacobi_triple"] = {w[0] + 1, w[1] + 1, w[2] + 1};
      lines.push_back("Jacobi fails on (" + std::to_string(w[0] + 1) + "," +
                      std::to_string(w[1] + 1) + "," + std::to_string(w[2] + 1) + ")");
    }
    pass = pass && jc.ok;
  }
  if (!pc.poisson)
    lines.push_back("Jacobiator trivector: " + pc.witness.str());
  r["lines"] = lines;
  return finish(r, pass, o, out, t0);
}

RelationSet input_relations(const InputSpec &in, int M) {
  if (in.lie)
    return relations_from_lie(*in.lie, M);
  return relations_order1(in.poisson, M);
}

int cmd_pbw_check(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputSpec in = resolve(o.input);
  RelationSet rel = input_relations(in, o.hbar_order);
  if (!o.corrections.empty())
    rel = apply_corrections(rel, load_corrections(o.corrections));
  const PBWReport rep = pbw_check(rel, o.degree, o.hbar_order);
  json r{{"command", "pbw-check"},
         {"parameters", {{"input", o.input}, {"N", o.degree}, {"M", o.hbar_order},
                         {"corrections", o.corrections}}},
         {"relations", relations_json(rel)},
         {"report", report_json(rep)}};
  json lines = json::array();
  pbw_lines(lines, rep);
  r["lines"] = lines;
  return finish(r, rep.pass, o, out, t0);
}

int cmd_cobar(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  json r{{"command", "cobar"}};
  json lines = json::array();
  bool pass = true;
  if (o.deform.empty()) {
    int n = o.dim;
    if (n <= 0 && !o.input.empty())
      n = resolve(o.input).dimension;
    if (n <= 0)
      throw ParseError("cobar: give --dim or an input");
    r["parameters"] = {{"dim", n}, {"weight", o.weight}, {"degree", o.cohomology_degree}};
    const CobarComplex c = exterior_cobar(n);
    json rows = json::array();
    std::string s = "H^" + std::to_string(o.cohomology_degree) + " dims by weight:";
    for (int w = 0; w <= o.weight; ++w) {
      const auto slice = truncated_cohomology(c, o.cohomology_degree, w);
      const int expected = o.cohomology_degree == 0 ? symmetric_power_dimension(n, w) : 0;
      rows.push_back({{"weight", w}, {"dimension", slice.dimension}, {"expected", expected},
                      {"cochains", slice.cochains}});
      s += " " + std::to_string(slice.dimension);
      pass = pass && slice.dimension == expected;
    }
    r["cohomology"] = rows;
    lines.push_back(s);
  } else {
    const InputSpec in = o.deform == "input" ? resolve(o.input) : resolve(o.deform);
    const LieAlgebra &g = require_lie(in);
    r["parameters"] = {{"deform", o.deform}, {"weight", o.weight}, {"M", o.hbar_order},
                       {"levels", o.levels}};
    const DeformedCobar dc = deformed_cobar(g, o.hbar_order, o.weight);
    r["square_zero"] = dc.square_zero;
    lines.push_back("(d0 + d1)^2 = 0: " + yes_no(dc.square_zero));
    if (dc.witness) {
      r["witness"] = word_str(*dc.complex.context(), *dc.witness);
      lines.push_back("square-zero witness: " + r["witness"].get<std::string>());
    }
    const FiltrationReport fr = filtration_graded_check(dc.complex, o.levels, o.weight);
    json graded = json::array();
    for (const auto &row : fr.graded) {
      graded.push_back({{"total_weight", row.total_weight}, {"level", row.level},
                        {"dimension", row.graded_dimension}, {"expected", row.expected}});
      lines.push_back("total weight " + std::to_string(row.total_weight) + ", F_" +
                      std::to_string(row.level) + "/F_" + std::to_string(row.level + 1) +
                      ": " + std::to_string(row.graded_dimension) + " (S: " +
                      std::to_string(row.expected) + ")");
    }
    json negative = json::array();
    int nonzero = 0;
    for (const auto &row : fr.negative) {
      negative.push_back({{"total_weight", row.total_weight}, {"degree", row.degree},
                          {"dimension", row.dimension}});
      nonzero += row.dimension != 0;
    }
    lines.push_back("negative-degree slices with cohomology: " + std::to_string(nonzero));
    r["graded"] = graded;
    r["negative"] = negative;
    pass = dc.square_zero && fr.ok();
  }
  r["lines"] = lines;
  return finish(r, pass, o, out, t0);
}

int cmd_enveloping(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputSpec in = resolve(o.input);
  const LieAlgebra &g = require_lie(in);
  json r{{"command", "enveloping"},
         {"parameters", {{"input", o.input}, {"N", o.degree}, {"M", o.hbar_order}}}};
  json lines = json::array();
  const DeformedCobar dc = deformed_cobar(g, o.hbar_order);
  r["square_zero"] = dc.square_zero;
  if (!dc.square_zero) {
    r["witness"] = word_str(*dc.complex.context(), *dc.witness);
    lines.push_back("(d0 + d1)^2 != 0 on " + r["witness"].get<std::string>());
    r["lines"] = lines;
    return finish(r, false, o, out, t0);
  }
  const H0Presentation h0 = h0_presentation(dc, o.degree, o.hbar_order);
  r["relations"] = relations_json(h0.relations);
  r["report"] = report_json(h0.report);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      lines.push_back("x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1) + " - x" +
                      std::to_string(j + 1) + "*x" + std::to_string(i + 1) + " = " +
                      h0.relations.relation(i, j).str());
  pbw_lines(lines, h0.report);
  r["lines"] = lines;
  return finish(r, h0.report.pass, o, out, t0);
}

int cmd_solve(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  const InputSpec in = resolve(o.input);
  const RelationSet rel = relations_order1(in.poisson, std::max(o.order, 1));
  json r{{"command", "solve-corrections"},
         {"parameters", {{"input", o.input}, {"order", o.order}, {"max_degree", o.max_degree}}}};
  json lines = json::array();
  CorrectionResult res;
  try {
    res = solve_corrections(rel, o.order, o.max_degree);
  } catch (const PreconditionError &e) {
    lines.push_back(e.what());
    r["lines"] = lines;
    return finish(r, false, o, out, t0);
  }
  r["degree_bound"] = res.degree_bound;
  r["unknowns"] = res.unknowns;
  r["feasible"] = res.feasible;
  lines.push_back(res.message);
  if (res.feasible) {
    const Corrections c = corrections_from(res, o.order);
    r["corrections"] = corrections_json(c);
    if (!o.output.empty()) {
      std::ofstream f(o.output);
      if (!f)
        throw ParseError("cannot write '" + o.output + "'");
      f << corrections_json(c).dump(2) << "\n";
      lines.push_back("corrections written to " + o.output);
    }
    bool all_zero = true;
    for (const auto &[ij, om] : res.omega)
      if (!om.is_zero()) {
        all_zero = false;
        lines.push_back("omega_" + std::to_string(o.order) + "(" + std::to_string(ij.first + 1) +
                        "," + std::to_string(ij.second + 1) + ") = " + om.str());
      }
    if (all_zero)
      lines.push_back("omega_" + std::to_string(o.order) + " = 0");
  } else {
    json residual = json::array();
    for (const auto &[t, e] : res.residual) {
      residual.push_back({{"overlap", {t[0] + 1, t[1] + 1, t[2] + 1}}, {"residual", element_json(e)}});
      lines.push_back("residual on (" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) +
                      "," + std::to_string(t[2] + 1) + "): " + e.str());
    }
    r["residual"] = residual;
  }
  r["lines"] = lines;
  return finish(r, res.feasible, o, out, t0);
}

int cmd_graphs(const Options &o, std::ostream &out) {
  const auto t0 = std::chrono::steady_clock::now();
  GraphMode mode;
  if (o.mode == "out2")
    mode = GraphMode::out2;
  else if (o.mode == "in2")
    mode = GraphMode::in2;
  else
    throw ParseError("graphs: --mode must be out2 or in2");
  const auto graphs = enumerate_graphs(o.aerial, mode, o.cap);
  json list = json::array();
  json lines = json::array();
  for (const auto &g : graphs) {
    list.push_back(graph_json(g));
    lines.push_back(g.key());
  }
  lines.push_back("count: " + std::to_string(graphs.size()));
  json r{{"command", "graphs"},
         {"parameters", {{"aerial", o.aerial}, {"mode", o.mode}, {"cap", o.cap}}},
         {"count", graphs.size()},
         {"graphs", list},
         {"lines", lines}};
  return finish(r, true, o, out, t0);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"PBW, cobar and Hochschild computations with exact arithmetic", "pbwtool"};
  app.set_version_flag("--version", "pbwtool 1.0");
  app.add_flag("--json", o.as_json, "Print the machine-readable report");
  app.require_subcommand(1);

  auto *jac = app.add_subcommand("check-jacobi", "Schouten bracket [alpha,alpha] / Jacobi identity");
  jac->add_option("input", o.input, "Input JSON or one of sl2, h3, so3, non-jacobi")->required();

  auto *pbwc = app.add_subcommand("pbw-check", "Overlap and graded-dimension PBW check");
  pbwc->add_option("input", o.input, "Input JSON or a builtin Lie algebra")->required();
  pbwc->add_option("--degree,-N", o.degree, "Maximal word degree")->capture_default_str();
  pbwc->add_option("--hbar-order,-M", o.hbar_order, "Truncation order in h")->capture_default_str();
  pbwc->add_option("--corrections", o.corrections, "Corrections JSON to add to the relations");

  auto *cob = app.add_subcommand("cobar", "Cohomology of the cobar complex of Lambda^-(V)");
  cob->add_option("input", o.input, "Optional input (dimension source)");
  cob->add_option("--dim", o.dim, "Dimension of V");
  cob->add_option("--weight", o.weight, "Maximal weight")->capture_default_str();
  cob->add_option("--degree", o.cohomology_degree, "Cohomological degree")->capture_default_str();
  cob->add_option("--deform", o.deform,
                  "Deform by a Lie algebra: sl2, h3, so3, non-jacobi, a file, or 'input'");
  cob->add_option("--hbar-order,-M", o.hbar_order, "Truncation order in h")->capture_default_str();
  cob->add_option("--levels", o.levels, "Filtration levels to compare")->capture_default_str();

  auto *env = app.add_subcommand("enveloping", "H^0 of the deformed cobar complex and its PBW check");
  env->add_option("input", o.input, "Lie input JSON or a builtin Lie algebra")->required();
  env->add_option("--degree,-N", o.degree, "Maximal word degree")->capture_default_str();
  env->add_option("--hbar-order,-M", o.hbar_order, "Truncation order in h")->capture_default_str();

  auto *sol = app.add_subcommand("solve-corrections", "Solve for the h^m correction omega_m");
  sol->add_option("input", o.input, "Poisson (or Lie) input JSON")->required();
  sol->add_option("--order", o.order, "Order m of the correction")->capture_default_str();
  sol->add_option("--max-degree", o.max_degree, "Word length bound D (default deg + m - 1)");
  sol->add_option("--output,-o", o.output, "Write the corrections JSON here");

  auto *gr = app.add_subcommand("graphs", "Enumerate admissible graphs");
  gr->add_option("--aerial,-m", o.aerial, "Number of aerial vertices")->capture_default_str();
  gr->add_option("--mode", o.mode, "out2 or in2")->capture_default_str();
  gr->add_option("--cap", o.cap, "Largest allowed m")->capture_default_str();

  std::vector<std::string> argv_store{"pbwtool"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : argv_store)
    argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForVersion &e) {
    out << "pbwtool 1.0\n";
    return exit_pass;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (*jac)
      return cmd_check_jacobi(o, out);
    if (*pbwc)
      return cmd_pbw_check(o, out);
    if (*cob)
      return cmd_cobar(o, out);
    if (*env)
      return cmd_enveloping(o, out);
    if (*sol)
      return cmd_solve(o, out);
    if (*gr)
      return cmd_graphs(o, out);
  } catch (const ResourceError &e) {
    err << "resource cap: " << e.what() << "\n";
    return exit_resource;
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::out_of_range &e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

} // namespace pbw
