#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stabinterp/experiment.hpp"

using namespace stabinterp;
using Vec = std::vector<double>;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("stabinterp_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::vector<std::string> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  }
  return rows;
}

std::string config_field(const ExperimentConfig& cfg) {
  try {
    run_experiment(cfg);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST(Knots, Generators) {
  EXPECT_EQ(equispaced_knots(Equispaced{-1, 1}, 4), (Vec{-1, -0.5, 0, 0.5, 1}));
  EXPECT_EQ(equispaced_knots(Equispaced{2, 3}, 0), (Vec{2}));
  EXPECT_THROW(equispaced_knots(Equispaced{1, 1}, 3), ConfigError);
  const auto r = random_knots(RandomUniform{0, 1, 42}, 50);
  EXPECT_EQ(r.size(), 51u);
  for (double x : r) {
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_EQ(r, random_knots(RandomUniform{0, 1, 42}, 50));
  EXPECT_NE(r, random_knots(RandomUniform{0, 1, 43}, 50));
  const auto c = segment_knots(ComplexSegment{{0, 0}, {2, 2}}, 2);
  EXPECT_EQ(c[1], Complex(1, 1));
}

TEST(Io, ParsesRealAndComplexLines) {
  std::istringstream in("# header\n1.5\n\n  -2 3e-1  # trailing\n+4\n");
  const auto v = read_scalars(in);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], Complex(1.5, 0));
  EXPECT_EQ(v[1], Complex(-2, 0.3));
  EXPECT_EQ(v[2], Complex(4, 0));
}

TEST(Io, ReportsLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_scalars(in);
    } catch (const InputFormatError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1\n2\nabc\n"), 3u);
  EXPECT_EQ(line_of("1 2 3\n"), 1u);
  EXPECT_EQ(line_of("1\n\n1e999\n"), 3u);
  EXPECT_EQ(line_of("1\n2x\n"), 2u);
  EXPECT_THROW(read_scalar_file("/nonexistent/stabinterp"), Error);
}

TEST(Io, FormatIsFixedWidthScientific) {
  EXPECT_EQ(format_real(9.0), "9.000000000000000e+00");
  EXPECT_EQ(format_real(-0.1), "-1.000000000000000e-01");
}

TEST(Experiment, PointModeOnFileData) {
  ExperimentConfig cfg;
  cfg.mode = Mode::SinglePoint;
  cfg.knots = KnotFile{write_temp("knots", "0\n1\n2\n")};
  cfg.values_path = write_temp("values", "0\n1\n4\n");
  cfg.z = 3;
  cfg.t = 1;
  const auto rows = data_rows(run_experiment(cfg));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "n,alg1,alg2");
  EXPECT_EQ(rows[1], "0,0.000000000000000e+00,0.000000000000000e+00");
  EXPECT_EQ(rows[2], "1,3.000000000000000e+00,3.000000000000000e+00");
  EXPECT_EQ(rows[3], "2,9.000000000000000e+00,9.000000000000000e+00");
}

TEST(Experiment, PointModeGenericT) {
  ExperimentConfig cfg;
  cfg.mode = Mode::SinglePoint;
  cfg.knots = KnotFile{write_temp("knots2", "0\n1\n")};
  cfg.values_path = write_temp("values2", "1\n3\n");
  cfg.algorithm = AlgorithmSelection::Oracle;
  cfg.z = 1;
  cfg.t = 0.5;
  const auto rows = data_rows(run_experiment(cfg));
  EXPECT_EQ(rows.back(), "1,2.500000000000000e+00");
}

TEST(Experiment, ComplexDataSwitchesArithmetic) {
  ExperimentConfig cfg;
  cfg.mode = Mode::SinglePoint;
  cfg.n_values = {4};
  cfg.knots = ComplexSegment{{-1, -1}, {1, 1}};
  cfg.s = 2;
  cfg.z = Complex(0, 0.5);
  cfg.t = 1;
  const auto out = run_experiment(cfg);
  EXPECT_NE(out.find("# arithmetic=complex"), std::string::npos);
  EXPECT_NE(out.find("n,alg1_re,alg1_im,alg2_re,alg2_im"), std::string::npos);
  // p_N(i/2) = (i/2)^2 = -1/4
  std::istringstream last(data_rows(out).back());
  std::vector<double> cells;
  for (std::string cell; std::getline(last, cell, ',');) cells.push_back(std::stod(cell));
  EXPECT_EQ(cells, (Vec{4, -0.25, 0, -0.25, 0}));
}

TEST(Experiment, NewtonTableRowsAndHeader) {
  ExperimentConfig cfg;
  cfg.mode = Mode::NewtonTable;
  cfg.n_values = {20, 30};
  cfg.knots = RandomUniform{0, 1, 5};
  cfg.orderings = {OrderingStrategy::Increasing, OrderingStrategy::Leja};
  const auto out = run_experiment(cfg);
  EXPECT_NE(out.find("# seed=5"), std::string::npos);
  EXPECT_NE(out.find("# rng="), std::string::npos);
  EXPECT_NE(out.find("# eps_M=2.220446049250313e-16"), std::string::npos);
  const auto rows = data_rows(out);
  ASSERT_EQ(rows.size(), 1u + 2 * 2 * 2);
  EXPECT_EQ(rows[0], "N,ordering,algorithm,error1,error2");
  EXPECT_EQ(rows[1].rfind("20,inc,alg1,", 0), 0u);
  EXPECT_EQ(rows[8].rfind("30,leja,alg2,", 0), 0u);
  EXPECT_EQ(out, run_experiment(cfg));
}

TEST(Experiment, FigureSweepColumns) {
  ExperimentConfig cfg;
  cfg.mode = Mode::FigureSweep;
  cfg.n_values = {15};
  cfg.knots = Equispaced{-1, 1};
  cfg.orderings = {OrderingStrategy::Leja};
  cfg.eval_grid = EvalGrid{-0.5, 0.5, 3};
  const auto rows = data_rows(run_experiment(cfg));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "z,error3_alg1,error3_alg2");
  EXPECT_EQ(rows[2].rfind("0.000000000000000e+00,", 0), 0u);
}

TEST(Experiment, ConfigErrorsNameTheField) {
  ExperimentConfig cfg;
  cfg.mode = Mode::NewtonTable;
  cfg.n_values = {5};
  cfg.knots = Equispaced{0, 1};
  EXPECT_EQ(config_field(cfg), "n");
  cfg.n_values = {};
  EXPECT_EQ(config_field(cfg), "n");
  cfg.n_values = {12};
  cfg.knots = Equispaced{1, 1};
  EXPECT_EQ(config_field(cfg), "equispaced");
  cfg.knots = ComplexSegment{{0, 0}, {1, 1}};
  cfg.orderings = {OrderingStrategy::Increasing};
  EXPECT_EQ(config_field(cfg), "ordering");
  cfg.knots = KnotFile{write_temp("dup", "0\n1\n0\n")};
  cfg.mode = Mode::Cond;
  cfg.orderings = {OrderingStrategy::AsGiven};
  EXPECT_EQ(config_field(cfg), "knots");

  ExperimentConfig sweep;
  sweep.mode = Mode::FigureSweep;
  sweep.n_values = {12};
  EXPECT_EQ(config_field(sweep), "eval-grid");
  sweep.s = -1;
  EXPECT_EQ(config_field(sweep), "degree");

  ExperimentConfig point;
  point.knots = KnotFile{write_temp("k3", "0\n1\n2\n")};
  point.values_path = write_temp("v2", "0\n1\n");
  EXPECT_EQ(config_field(point), "values");
}

TEST(Experiment, MalformedFileKeepsLineNumber) {
  ExperimentConfig cfg;
  cfg.knots = KnotFile{write_temp("bad", "0\n1\nzz\n")};
  try {
    run_experiment(cfg);
    FAIL();
  } catch (const InputFormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Experiment, CondReport) {
  ExperimentConfig cfg;
  cfg.mode = Mode::Cond;
  cfg.n_values = {10};
  cfg.knots = Equispaced{-1, 1};
  const auto rows = data_rows(run_experiment(cfg));
  ASSERT_GE(rows.size(), 5u);
  EXPECT_EQ(rows[0], "quantity,value");
  EXPECT_EQ(rows[2], "L,1.000000000000000e+00");
  EXPECT_EQ(rows[3], "kN_alg2,5.500000000000000e+01");
}
