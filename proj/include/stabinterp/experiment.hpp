#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "stabinterp/analysis.hpp"
#include "stabinterp/io.hpp"
#include "stabinterp/knots.hpp"
#include "stabinterp/newton.hpp"
#include "stabinterp/ordering.hpp"

namespace stabinterp {

enum class Mode { NewtonTable, FigureSweep, SinglePoint, Cond };

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::NewtonTable: return "newton-table";
    case Mode::FigureSweep: return "figure-sweep";
    case Mode::SinglePoint: return "point";
    case Mode::Cond: return "cond";
  }
  return "?";
}

enum class AlgorithmSelection { Alg1, Alg2, Both, Oracle };

inline const char* to_string(AlgorithmSelection a) {
  switch (a) {
    case AlgorithmSelection::Alg1: return "alg1";
    case AlgorithmSelection::Alg2: return "alg2";
    case AlgorithmSelection::Both: return "both";
    case AlgorithmSelection::Oracle: return "oracle";
  }
  return "?";
}

inline std::vector<AlgorithmChoice> expand(AlgorithmSelection a) {
  switch (a) {
    case AlgorithmSelection::Alg1: return {AlgorithmChoice::Alg1};
    case AlgorithmSelection::Alg2: return {AlgorithmChoice::Alg2};
    case AlgorithmSelection::Both: return {AlgorithmChoice::Alg1, AlgorithmChoice::Alg2};
    case AlgorithmSelection::Oracle: return {AlgorithmChoice::Oracle};
  }
  return {};
}

/// count points a + k (b - a) / (count - 1), k = 0..count-1.
struct EvalGrid {
  double a = -1.0;
  double b = 1.0;
  std::size_t count = 0;
};

struct ExperimentConfig {
  Mode mode = Mode::SinglePoint;
  std::vector<int> n_values;  // N; newton-table runs every entry
  int s = 7;
  KnotSource knots = Equispaced{};
  std::optional<std::string> values_path;
  std::vector<OrderingStrategy> orderings{OrderingStrategy::AsGiven};
  AlgorithmSelection algorithm = AlgorithmSelection::Both;
  std::optional<EvalGrid> eval_grid;
  Complex z{1.0, 0.0};
  Complex t{0.0, 0.0};
};

namespace detail {

inline std::string describe(const KnotSource& src) {
  std::ostringstream os;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Equispaced>) {
          os << "equispaced[" << format_real(k.a) << "," << format_real(k.b) << "]";
        } else if constexpr (std::is_same_v<K, RandomUniform>) {
          os << "random[" << format_real(k.a) << "," << format_real(k.b) << ")";
        } else if constexpr (std::is_same_v<K, ComplexSegment>) {
          os << "complex-segment[(" << format_real(k.a.real()) << "," << format_real(k.a.imag())
             << "),(" << format_real(k.b.real()) << "," << format_real(k.b.imag()) << ")]";
        } else {
          os << "file:" << k.path;
        }
      },
      src);
  return os.str();
}

template <class Seq, class F>
std::string join(const Seq& seq, F&& fmt) {
  std::string out;
  for (const auto& x : seq) {
    if (!out.empty()) out += ",";
    out += fmt(x);
  }
  return out;
}

inline std::vector<Complex> widen(const std::vector<double>& x) {
  return {x.begin(), x.end()};
}

/// Knots for one N. File knots ignore N.
inline std::vector<Complex> load_knots(const KnotSource& src, std::size_t N) {
  return std::visit(
      [&](const auto& k) -> std::vector<Complex> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Equispaced>) {
          return widen(equispaced_knots(k, N));
        } else if constexpr (std::is_same_v<K, RandomUniform>) {
          return widen(random_knots(k, N));
        } else if constexpr (std::is_same_v<K, ComplexSegment>) {
          return segment_knots(k, N);
        } else {
          try {
            auto z = read_scalar_file(k.path);
            if (z.empty()) throw ConfigError("knots", k.path + " holds no knots");
            return z;
          } catch (const InputFormatError& e) {
            throw InputFormatError(e.line(), k.path + ": " + e.what());
          }
        }
      },
      src);
}

inline bool any_complex(const std::vector<Complex>& v) {
  for (const auto& x : v) {
    if (x.imag() != 0.0) return true;
  }
  return false;
}

template <Scalar T>
std::vector<T> narrow(const std::vector<Complex>& v) {
  if constexpr (is_complex_v<T>) {
    return v;
  } else {
    std::vector<double> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(x.real());
    return r;
  }
}

template <Scalar T>
T narrow(const Complex& x) {
  if constexpr (is_complex_v<T>) {
    return x;
  } else {
    return x.real();
  }
}

template <Scalar T>
InterpProblem<T> make_problem(std::vector<T> knots, std::vector<T> values) {
  try {
    return InterpProblem<T>(std::move(knots), std::move(values));
  } catch (const DistinctnessViolation& e) {
    throw ConfigError("knots", e.what());
  } catch (const ShapeError& e) {
    throw ConfigError("values", e.what());
  }
}

template <Scalar T>
OrderedProblem<T> reorder(const InterpProblem<T>& p, OrderingStrategy s) {
  try {
    return order_knots(p, s);
  } catch (const OrderingDomainError& e) {
    throw ConfigError("ordering", e.what());
  }
}

inline std::size_t checked_n(const ExperimentConfig& cfg, bool single) {
  if (std::holds_alternative<KnotFile>(cfg.knots)) return 0;
  if (cfg.n_values.empty()) throw ConfigError("n", "missing");
  if (single && cfg.n_values.size() != 1) throw ConfigError("n", "expects a single value");
  for (int n : cfg.n_values) {
    if (n < 1) throw ConfigError("n", "N must be at least 1");
  }
  return static_cast<std::size_t>(cfg.n_values.front());
}

inline void check_common(const ExperimentConfig& cfg) {
  if (cfg.s < 0) throw ConfigError("degree", "must be nonnegative");
  if (cfg.orderings.empty()) throw ConfigError("ordering", "missing");
}

inline std::string header(const ExperimentConfig& cfg, const std::string& n_text,
                          ArithmeticCase arith) {
  std::ostringstream os;
  os << "# mode=" << to_string(cfg.mode) << "\n";
  os << "# N=" << n_text << "\n";
  os << "# s=" << cfg.s << "\n";
  os << "# knots=" << describe(cfg.knots) << "\n";
  if (const auto* r = std::get_if<RandomUniform>(&cfg.knots)) {
    os << "# seed=" << r->seed << "\n";
    os << "# rng=" << kRngName << "\n";
  }
  if (cfg.values_path) os << "# values=file:" << *cfg.values_path << "\n";
  os << "# ordering=" << join(cfg.orderings, [](auto o) { return std::string(to_string(o)); })
     << "\n";
  os << "# algorithm=" << to_string(cfg.algorithm) << "\n";
  if (cfg.eval_grid) {
    os << "# eval_grid=" << format_real(cfg.eval_grid->a) << "," << format_real(cfg.eval_grid->b)
       << "," << cfg.eval_grid->count << "\n";
  }
  if (cfg.mode == Mode::SinglePoint || cfg.mode == Mode::Cond) {
    os << "# z=" << format_real(cfg.z.real()) << "," << format_real(cfg.z.imag()) << "\n";
    os << "# t=" << format_real(cfg.t.real()) << "," << format_real(cfg.t.imag()) << "\n";
  }
  os << "# arithmetic=" << to_string(arith) << "\n";
  os << "# eps_M=" << format_real(unit_roundoff()) << "\n";
  return os.str();
}

template <Scalar T>
std::string format_scalar(const T& x) {
  if constexpr (is_complex_v<T>) {
    return format_real(x.real()) + "," + format_real(x.imag());
  } else {
    return format_real(x);
  }
}

template <Scalar T>
std::string newton_table_rows(const ExperimentConfig& cfg) {
  std::ostringstream os;
  const auto algs = expand(cfg.algorithm);
  const bool from_file = std::holds_alternative<KnotFile>(cfg.knots);
  const std::vector<int> ns = from_file ? std::vector<int>{-1} : cfg.n_values;
  for (int n : ns) {
    const auto raw = narrow<T>(load_knots(cfg.knots, static_cast<std::size_t>(n < 0 ? 0 : n)));
    if (raw.size() < static_cast<std::size_t>(cfg.s) + 3) {
      throw ConfigError("n", "N = " + std::to_string(raw.size() - 1) +
                                 " must be at least s + 2 = " + std::to_string(cfg.s + 2));
    }
    const auto base = make_problem<T>(raw, monomial_samples<T>(raw, cfg.s));
    for (const auto ordering : cfg.orderings) {
      const auto problem = reorder(base, ordering).problem;
      for (const auto alg : algs) {
        PrefixResults<T> c;
        switch (alg) {
          case AlgorithmChoice::Alg1: c = divided_differences(problem, Route::Classical); break;
          case AlgorithmChoice::Alg2: c = divided_differences(problem, Route::Stable); break;
          case AlgorithmChoice::Oracle:
            c = oracle_prefix_values(problem, EvalSpec<T>::newton_coefficients());
            break;
        }
        os << problem.degree() << "," << to_string(ordering) << "," << to_string(alg) << ","
           << format_real(error1<T>(c, problem, cfg.s)) << ","
           << format_real(error2<T>(c, problem, cfg.s)) << "\n";
      }
    }
  }
  return os.str();
}

template <Scalar T>
std::string figure_sweep_rows(const ExperimentConfig& cfg, std::size_t N) {
  const auto raw = narrow<T>(load_knots(cfg.knots, N));
  const auto base = make_problem<T>(raw, monomial_samples<T>(raw, cfg.s));
  const auto problem = reorder(base, cfg.orderings.front()).problem;

  const auto& g = *cfg.eval_grid;
  std::vector<T> zs(g.count);
  for (std::size_t k = 0; k < g.count; ++k) {
    const double x =
        g.count == 1 ? g.a
                     : g.a + static_cast<double>(k) * (g.b - g.a) / static_cast<double>(g.count - 1);
    zs[k] = T{x};
  }
  const auto algs = expand(cfg.algorithm);
  const auto table = error3_table<T>(problem, zs, algs, cfg.s);

  std::ostringstream os;
  os << "z";
  for (const auto a : algs) os << ",error3_" << to_string(a);
  os << "\n";
  for (std::size_t k = 0; k < zs.size(); ++k) {
    os << format_real(real_part(zs[k]));
    for (double v : table[k]) os << "," << format_real(v);
    os << "\n";
  }
  return os.str();
}

template <Scalar T>
InterpProblem<T> point_problem(const ExperimentConfig& cfg, std::size_t N) {
  const auto raw = narrow<T>(load_knots(cfg.knots, N));
  std::vector<T> values;
  if (cfg.values_path) {
    try {
      values = narrow<T>(read_scalar_file(*cfg.values_path));
    } catch (const InputFormatError& e) {
      throw InputFormatError(e.line(), *cfg.values_path + ": " + e.what());
    }
  } else {
    values = monomial_samples<T>(raw, cfg.s);
  }
  const auto base = make_problem<T>(raw, std::move(values));
  return reorder(base, cfg.orderings.front()).problem;
}

/// One "key<sep>value" line per stability quantity, each preceded by `prefix`.
template <Scalar T>
std::string report_lines(const InterpProblem<T>& problem, const EvalSpec<T>& spec,
                         const std::string& prefix = "", char sep = ',') {
  std::ostringstream os;
  const double L = growth_constant_L(problem.knots());
  const auto b = stability_bounds(problem.degree(), arithmetic_case_v<T>, L);
  std::string cond;
  try {
    cond = format_real(condition_number(problem, spec));
  } catch (const DegenerateConditioning&) {
    cond = "degenerate";
  }
  os << prefix << "cond" << sep << cond << "\n";
  os << prefix << "L" << sep << format_real(L) << "\n";
  os << prefix << "kN_alg2" << sep << format_real(b.kN_alg2) << "\n";
  os << prefix << "kN_alg1_general" << sep << format_real(b.kN_alg1_general) << "\n";
  if (b.kN_alg1_monotone) {
    os << prefix << "kN_alg1_monotone" << sep << format_real(*b.kN_alg1_monotone) << "\n";
  }
  return os.str();
}

template <Scalar T>
std::string single_point_body(const ExperimentConfig& cfg, std::size_t N) {
  const auto problem = point_problem<T>(cfg, N);
  const EvalSpec<T> spec(narrow<T>(cfg.z), narrow<T>(cfg.t));
  const auto algs = expand(cfg.algorithm);
  std::vector<PrefixResults<T>> results;
  for (const auto a : algs) {
    switch (a) {
      case AlgorithmChoice::Alg1: results.push_back(algorithm1_prefix(problem, spec).p); break;
      case AlgorithmChoice::Alg2: results.push_back(algorithm2_prefix(problem, spec)); break;
      case AlgorithmChoice::Oracle: results.push_back(oracle_prefix_values(problem, spec)); break;
    }
  }
  std::ostringstream os;
  os << report_lines(problem, spec, "# ", '=');
  os << "n";
  for (const auto a : algs) {
    if constexpr (is_complex_v<T>) {
      os << "," << to_string(a) << "_re," << to_string(a) << "_im";
    } else {
      os << "," << to_string(a);
    }
  }
  os << "\n";
  for (std::size_t n = 0; n < problem.size(); ++n) {
    os << n;
    for (const auto& r : results) os << "," << format_scalar(r[n]);
    os << "\n";
  }
  return os.str();
}

/// Dispatches to the real or complex instantiation.
template <class F>
std::string with_arithmetic(bool complex_data, F&& f) {
  if (complex_data) return f.template operator()<Complex>();
  return f.template operator()<double>();
}

inline bool config_is_complex(const ExperimentConfig& cfg, const std::vector<Complex>& knots) {
  if (any_complex(knots)) return true;
  if (cfg.mode == Mode::SinglePoint || cfg.mode == Mode::Cond) {
    if (cfg.z.imag() != 0.0 || cfg.t.imag() != 0.0) return true;
    if (cfg.values_path && any_complex(read_scalar_file(*cfg.values_path))) return true;
  }
  return false;
}

}  // namespace detail

/// error1 and error2 of computed Newton coefficients for f(z) = z^s, one row
/// per (N, ordering, algorithm). Alg1 is the divided-difference scheme.
inline std::string run_newton_table(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::NewtonTable) throw ConfigError("mode", "expected newton-table");
  detail::check_common(cfg);
  detail::checked_n(cfg, false);
  if (cfg.values_path) throw ConfigError("values", "newton-table samples f(z) = z^s");
  for (int n : cfg.n_values) {
    if (n < cfg.s + 2) {
      throw ConfigError("n", "N = " + std::to_string(n) + " must be at least s + 2 = " +
                                 std::to_string(cfg.s + 2));
    }
  }
  const auto probe = detail::load_knots(cfg.knots, cfg.n_values.empty() ? 1 : cfg.n_values[0]);
  const bool cplx = detail::config_is_complex(cfg, probe);
  const std::string n_text = std::holds_alternative<KnotFile>(cfg.knots)
                                 ? std::to_string(probe.size() - 1)
                                 : detail::join(cfg.n_values, [](int n) { return std::to_string(n); });
  std::string out = detail::header(cfg, n_text, cplx ? ArithmeticCase::Complex : ArithmeticCase::Real);
  out += "N,ordering,algorithm,error1,error2\n";
  out += detail::with_arithmetic(cplx, [&]<Scalar T>() { return detail::newton_table_rows<T>(cfg); });
  return out;
}

/// error3 of p_N(z;1) against z^s over an evaluation grid.
inline std::string run_figure_sweep(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::FigureSweep) throw ConfigError("mode", "expected figure-sweep");
  detail::check_common(cfg);
  const std::size_t N = detail::checked_n(cfg, true);
  if (cfg.orderings.size() != 1) throw ConfigError("ordering", "figure-sweep takes one ordering");
  if (!cfg.eval_grid) throw ConfigError("eval-grid", "missing");
  if (cfg.eval_grid->count == 0) throw ConfigError("eval-grid", "count must be positive");
  if (cfg.values_path) throw ConfigError("values", "figure-sweep samples f(z) = z^s");
  const auto probe = detail::load_knots(cfg.knots, N);
  const bool cplx = detail::config_is_complex(cfg, probe);
  std::string out = detail::header(cfg, std::to_string(probe.size() - 1),
                                   cplx ? ArithmeticCase::Complex : ArithmeticCase::Real);
  out += detail::with_arithmetic(cplx, [&]<Scalar T>() { return detail::figure_sweep_rows<T>(cfg, N); });
  return out;
}

/// p_0..p_N from the selected algorithm(s) plus condition number, L and k_N.
inline std::string run_single_point(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::SinglePoint) throw ConfigError("mode", "expected point");
  detail::check_common(cfg);
  const std::size_t N = detail::checked_n(cfg, true);
  const auto probe = detail::load_knots(cfg.knots, N);
  const bool cplx = detail::config_is_complex(cfg, probe);
  std::string out = detail::header(cfg, std::to_string(probe.size() - 1),
                                   cplx ? ArithmeticCase::Complex : ArithmeticCase::Real);
  out += detail::with_arithmetic(cplx, [&]<Scalar T>() { return detail::single_point_body<T>(cfg, N); });
  return out;
}

/// Condition number, L and the k_N constants for one (z, t).
inline std::string run_cond(const ExperimentConfig& cfg) {
  if (cfg.mode != Mode::Cond) throw ConfigError("mode", "expected cond");
  detail::check_common(cfg);
  const std::size_t N = detail::checked_n(cfg, true);
  const auto probe = detail::load_knots(cfg.knots, N);
  const bool cplx = detail::config_is_complex(cfg, probe);
  std::string out = detail::header(cfg, std::to_string(probe.size() - 1),
                                   cplx ? ArithmeticCase::Complex : ArithmeticCase::Real);
  out += "quantity,value\n";
  out += detail::with_arithmetic(cplx, [&]<Scalar T>() {
    const auto problem = detail::point_problem<T>(cfg, N);
    return detail::report_lines(problem,
                                EvalSpec<T>(detail::narrow<T>(cfg.z), detail::narrow<T>(cfg.t)));
  });
  return out;
}

inline std::string run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.mode) {
    case Mode::NewtonTable: return run_newton_table(cfg);
    case Mode::FigureSweep: return run_figure_sweep(cfg);
    case Mode::SinglePoint: return run_single_point(cfg);
    case Mode::Cond: return run_cond(cfg);
  }
  return {};
}

}  // namespace stabinterp
