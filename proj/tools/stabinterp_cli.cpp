// Experiment harness: Newton-coefficient error tables, error sweeps over an
// evaluation grid, single-point evaluation and condition reports, as CSV.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stabinterp/experiment.hpp"

namespace {

using namespace stabinterp;

struct RawOptions {
  std::vector<int> n;
  int degree = 7;
  std::string knots_path;
  std::string values_path;
  std::vector<double> equispaced;
  std::vector<double> random;
  std::optional<std::uint64_t> seed;
  std::vector<double> complex_segment;
  std::vector<std::string> ordering{"asis"};
  std::string alg = "both";
  std::vector<double> z;
  std::vector<double> t;
  std::vector<double> eval_grid;
  std::string out;
};

Complex to_complex(const std::vector<double>& v, const char* field) {
  if (v.empty() || v.size() > 2) throw ConfigError(field, "expects re [im]");
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

ExperimentConfig build_config(Mode mode, const RawOptions& o) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.n_values = o.n;
  cfg.s = o.degree;

  int sources = 0;
  if (!o.knots_path.empty()) {
    cfg.knots = KnotFile{o.knots_path};
    ++sources;
  }
  if (!o.equispaced.empty()) {
    cfg.knots = Equispaced{o.equispaced[0], o.equispaced[1]};
    ++sources;
  }
  if (!o.random.empty()) {
    if (!o.seed) throw ConfigError("seed", "required with --random");
    cfg.knots = RandomUniform{o.random[0], o.random[1], *o.seed};
    ++sources;
  }
  if (!o.complex_segment.empty()) {
    const auto& c = o.complex_segment;
    cfg.knots = ComplexSegment{{c[0], c[1]}, {c[2], c[3]}};
    ++sources;
  }
  if (sources == 0) throw ConfigError("knots", "give one of --knots, --equispaced, --random, --complex-segment");
  if (sources > 1) throw ConfigError("knots", "more than one knot source given");

  if (!o.values_path.empty()) cfg.values_path = o.values_path;

  static const std::map<std::string, OrderingStrategy> orderings{
      {"asis", OrderingStrategy::AsGiven},
      {"inc", OrderingStrategy::Increasing},
      {"dec", OrderingStrategy::Decreasing},
      {"leja", OrderingStrategy::Leja}};
  cfg.orderings.clear();
  for (const auto& name : o.ordering) {
    const auto it = orderings.find(name);
    if (it == orderings.end()) throw ConfigError("ordering", "unknown ordering '" + name + "'");
    cfg.orderings.push_back(it->second);
  }

  static const std::map<std::string, AlgorithmSelection> algs{
      {"alg1", AlgorithmSelection::Alg1},
      {"alg2", AlgorithmSelection::Alg2},
      {"both", AlgorithmSelection::Both},
      {"oracle", AlgorithmSelection::Oracle}};
  const auto alg = algs.find(o.alg);
  if (alg == algs.end()) throw ConfigError("alg", "unknown algorithm '" + o.alg + "'");
  cfg.algorithm = alg->second;

  if (!o.eval_grid.empty()) {
    const double count = o.eval_grid[2];
    if (count < 1 || count != static_cast<double>(static_cast<std::size_t>(count))) {
      throw ConfigError("eval-grid", "count must be a positive integer");
    }
    cfg.eval_grid = EvalGrid{o.eval_grid[0], o.eval_grid[1], static_cast<std::size_t>(count)};
  }
  if (!o.z.empty()) cfg.z = to_complex(o.z, "z");
  if (!o.t.empty()) cfg.t = to_complex(o.t, "t");
  return cfg;
}

void add_common(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--n", o.n, "Highest knot index N (newton-table accepts a list)")->delimiter(',');
  cmd->add_option("--degree", o.degree, "Monomial degree s of f(z) = z^s");
  cmd->add_option("--knots", o.knots_path, "Knot file");
  cmd->add_option("--values", o.values_path, "Value file (point, cond)");
  cmd->add_option("--equispaced", o.equispaced, "Equispaced knots on [a, b]")->expected(2);
  cmd->add_option("--random", o.random, "Uniform random knots on [a, b)")->expected(2);
  cmd->add_option("--seed", o.seed, "Seed for --random");
  cmd->add_option("--complex-segment", o.complex_segment, "Equispaced knots from a to b: reA imA reB imB")
      ->expected(4);
  cmd->add_option("--ordering", o.ordering, "asis|inc|dec|leja (newton-table accepts a list)")
      ->delimiter(',');
  cmd->add_option("--alg", o.alg, "alg1|alg2|both|oracle");
  cmd->add_option("--z", o.z, "Evaluation point: re [im]")->expected(1, 2)->allow_extra_args(false);
  cmd->add_option("--t", o.t, "Homotopy parameter: re [im]")->expected(1, 2)->allow_extra_args(false);
  cmd->add_option("--eval-grid", o.eval_grid, "Evaluation grid: a b count")->expected(3);
  cmd->add_option("--out", o.out, "Output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable evaluation of interpolating polynomials and Newton coefficients"};
  app.require_subcommand(1);

  RawOptions opts;
  const std::pair<const char*, Mode> modes[] = {
      {"newton-table", Mode::NewtonTable},
      {"figure-sweep", Mode::FigureSweep},
      {"point", Mode::SinglePoint},
      {"cond", Mode::Cond}};
  const char* descriptions[] = {
      "error1/error2 of Newton coefficients for f(z) = z^s",
      "error3 of interpolant values over an evaluation grid",
      "p_0..p_N at (z, t) plus condition number, L and k_N",
      "condition number, L and k_N at (z, t)"};
  std::vector<std::pair<CLI::App*, Mode>> commands;
  for (std::size_t i = 0; i < 4; ++i) {
    auto* cmd = app.add_subcommand(modes[i].first, descriptions[i]);
    add_common(cmd, opts);
    commands.emplace_back(cmd, modes[i].second);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    Mode mode = Mode::SinglePoint;
    for (const auto& [cmd, m] : commands) {
      if (cmd->parsed()) mode = m;
    }
    const std::string csv = run_experiment(build_config(mode, opts));
    if (opts.out.empty()) {
      std::cout << csv;
    } else {
      std::ofstream out(opts.out, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << opts.out << "\n";
        return 1;
      }
      out << csv;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: --" << e.what() << "\n";
    return 2;
  } catch (const InputFormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
