#include "hadamard/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hadamard/errors.hpp"
#include "hadamard/expansion.hpp"
#include "hadamard/fde_solver.hpp"
#include "hadamard/reference_operators.hpp"
#include "hadamard/series_table.hpp"

namespace hadamard::cli {
namespace {

// Raised for flag combinations that parse but make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OperatorFlags {
  std::string kind = "integral";
  std::string side = "left";
  double alpha = 0.5;
  double a = 1.0;
  double b = 10.0;
  int n = 2;
  int N = 3;
  std::string fn = "one";
  std::string table;
  int points = 200;
  int panels = 64;
  int nodes = 8;
  int bound_samples = kDefaultBoundSamples;
  std::string out;
};

struct CompareFlags {
  std::string reference = "auto";
  bool self_compare = false;
};

struct SweepFlags {
  std::vector<int> n_list;
  std::vector<int> N_list;
};

struct FdeFlags {
  int N = 2;
  int steps = 10000;
  double delta = 1e-4;
  double t_end = 3.0;
  bool dump_states = false;
  std::string out;
};

void add_operator_flags(CLI::App* cmd, OperatorFlags& f) {
  cmd->add_option("--kind", f.kind, "integral | derivative")
      ->check(CLI::IsMember({"integral", "derivative"}));
  cmd->add_option("--side", f.side, "left | right")->check(CLI::IsMember({"left", "right"}));
  cmd->add_option("--alpha", f.alpha, "operator order");
  cmd->add_option("--a", f.a, "left end of the interval");
  cmd->add_option("--b", f.b, "right end of the interval");
  cmd->add_option("--n", f.n, "expansion depth");
  cmd->add_option("--N", f.N, "truncation order (>= n+1)");
  auto* fn = cmd->add_option("--fn", f.fn, "builtin function: one | ln | pow4 | pow9 | zero");
  auto* table = cmd->add_option("--table", f.table, "two-column CSV (t, x) sampled input");
  fn->excludes(table);
  cmd->add_option("--points", f.points, "grid points (anchor excluded)");
  cmd->add_option("--panels", f.panels, "quadrature panels");
  cmd->add_option("--nodes", f.nodes, "Gauss-Legendre nodes per panel");
  cmd->add_option("--bound-samples", f.bound_samples, "grid size for the L_n estimate");
  cmd->add_option("--out", f.out, "write CSV to this file instead of stdout");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FunctionSpec load_function(const OperatorFlags& f, std::ostream& err) {
  if (f.table.empty()) {
    try {
      return FunctionSpec::builtin(f.fn);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  std::string text = read_file(f.table);
  // Header row is optional.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos) {
    const char c = text[first];
    const bool numeric = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
    if (numeric) text.insert(0, "t,x\n");
  }
  SeriesTable samples;
  try {
    samples = parse_csv(text);
    if (samples.columns.size() != 2) throw GridError("table must have two columns (t, x)");
    samples.validate();
  } catch (const Error& e) {
    throw UsageError(std::string("--table: ") + e.what());
  }
  err << "note: --table derivatives come from finite differences; bounds are estimates\n";
  return FunctionSpec::from_table(f.table, samples.columns[0], samples.columns[1]);
}

OperatorSpec operator_spec(const OperatorFlags& f) {
  OperatorSpec spec;
  spec.kind = f.kind == "integral" ? OperatorKind::integral : OperatorKind::derivative;
  spec.side = f.side == "left" ? Side::left : Side::right;
  spec.alpha = f.alpha;
  spec.interval = {f.a, f.b};
  return spec;
}

ExpansionConfig expansion_config(const OperatorFlags& f) {
  ExpansionConfig cfg;
  cfg.n = f.n;
  cfg.N = f.N;
  cfg.quad.panels = f.panels;
  cfg.quad.nodes_per_panel = f.nodes;
  cfg.bound_samples = f.bound_samples;
  return cfg;
}

// Flag-level validation; every failure here is a usage error.
void validate_flags(const OperatorSpec& spec, const ExpansionConfig& cfg, int points) {
  try {
    validate_order(spec.kind, spec.alpha);
    validate_interval(spec.interval);
    validate_depth(spec.kind, cfg.n, cfg.N);
    cfg.quad.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (points < 1) throw UsageError("--points must be at least 1");
  if (cfg.bound_samples < 2) throw UsageError("--bound-samples must be at least 2");
}

// Uniform grid on [a, b] without the anchor endpoint.
std::vector<double> make_grid(const OperatorSpec& spec, int points) {
  const double a = spec.interval.a;
  const double b = spec.interval.b;
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    const int j = spec.side == Side::left ? k + 1 : k;
    grid[static_cast<std::size_t>(k)] = j == points ? b : a + (b - a) * j / points;
  }
  return grid;
}

void emit(const SeriesTable& table, const std::string& path, std::ostream& out) {
  const std::string csv = to_csv(table);
  if (path.empty()) {
    out << csv;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << csv;
}

enum class Reference { closed, quad };

Reference choose_reference(const std::string& requested, const OperatorSpec& spec,
                           const OperatorFlags& f) {
  const bool closed_ok = f.table.empty() && catalog_applies(spec) &&
                         catalog_entry(spec.kind, f.fn).has_value();
  if (requested == "closed") {
    if (!closed_ok) {
      throw UsageError("no closed form for this function/operator (needs alpha=0.5, a=1, left)");
    }
    return Reference::closed;
  }
  if (requested == "quad") return Reference::quad;
  return closed_ok ? Reference::closed : Reference::quad;
}

std::vector<double> reference_values(Reference ref, const FunctionSpec& x,
                                     const OperatorSpec& spec, const OperatorFlags& f,
                                     const std::vector<double>& grid) {
  std::vector<double> exact(grid.size());
  QuadratureConfig quad;
  quad.panels = f.panels;
  quad.nodes_per_panel = f.nodes;
  const auto id = catalog_entry(spec.kind, f.fn);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    if (ref == Reference::closed) {
      exact[i] = closed_form(*id, t);
    } else if (spec.kind == OperatorKind::integral) {
      exact[i] = hadamard_integral_quad(x, spec.alpha, spec.interval, t, spec.side, quad);
    } else {
      exact[i] = hadamard_derivative_quad(x, spec.alpha, spec.interval, t, spec.side, quad);
    }
  }
  return exact;
}

struct Comparison {
  SeriesTable table;
  double dist = 0.0;
  std::optional<double> violation_at;
};

Comparison compare_once(const FunctionSpec& x, const OperatorSpec& spec,
                        const ExpansionConfig& cfg, const OperatorFlags& f,
                        const CompareFlags& c, std::ostream& err) {
  const auto grid = make_grid(spec, f.points);
  const SeriesTable approx = approximate_series(x, spec, cfg, grid);
  const auto& values = approx.column("approx");
  const auto& bound = approx.column("bound");
  std::vector<double> exact =
      c.self_compare ? values
                     : reference_values(choose_reference(c.reference, spec, f), x, spec, f, grid);
  std::vector<double> abs_err(grid.size());
  Comparison result;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    abs_err[i] = std::abs(exact[i] - values[i]);
    if (!result.violation_at && abs_err[i] > bound[i] + kBoundSlack) {
      result.violation_at = grid[i];
    }
  }
  result.table.add_column("t", grid);
  result.table.add_column("exact", exact);
  result.table.add_column("approx", values);
  result.table.add_column("abs_err", std::move(abs_err));
  result.table.add_column("bound", bound);
  result.table.metadata = approx.metadata;
  if (grid.size() >= 2) {
    result.dist = dist_metric({grid, exact}, {grid, values});
  } else {
    err << "note: dist needs at least two grid points\n";
  }
  return result;
}

int cmd_approx(const OperatorFlags& f, std::ostream& out, std::ostream& err) {
  const auto spec = operator_spec(f);
  const auto cfg = expansion_config(f);
  validate_flags(spec, cfg, f.points);
  const FunctionSpec x = load_function(f, err);
  emit(approximate_series(x, spec, cfg, make_grid(spec, f.points)), f.out, out);
  return kOk;
}

int cmd_compare(const OperatorFlags& f, const CompareFlags& c, std::ostream& out,
                std::ostream& err) {
  const auto spec = operator_spec(f);
  const auto cfg = expansion_config(f);
  validate_flags(spec, cfg, f.points);
  const FunctionSpec x = load_function(f, err);
  const Comparison result = compare_once(x, spec, cfg, f, c, err);
  emit(result.table, f.out, out);
  out << "dist=" << format_number(result.dist) << '\n';
  if (result.violation_at) {
    err << "error: truncation bound violated at t=" << format_number(*result.violation_at)
        << '\n';
    return kBoundViolation;
  }
  return kOk;
}

int cmd_sweep(const OperatorFlags& f, const SweepFlags& s, const CompareFlags& c,
              bool n_given, bool N_given, std::ostream& out, std::ostream& err) {
  if (!n_given && !N_given) throw UsageError("sweep needs --n-list and/or --N-list");
  if ((n_given && s.n_list.empty()) || (N_given && s.N_list.empty())) {
    throw UsageError("sweep list must not be empty");
  }
  const std::vector<int> ns = n_given ? s.n_list : std::vector<int>{f.n};
  const std::vector<int> Ns = N_given ? s.N_list : std::vector<int>{f.N};
  const auto spec = operator_spec(f);
  for (int n : ns) {
    for (int N : Ns) {
      OperatorFlags row = f;
      row.n = n;
      row.N = N;
      validate_flags(spec, expansion_config(row), f.points);
    }
  }
  if (f.points < 2) throw UsageError("sweep needs --points >= 2 for dist");
  const FunctionSpec x = load_function(f, err);

  SeriesTable table;
  std::vector<double> col_n, col_N, col_dist;
  bool violated = false;
  for (int n : ns) {
    for (int N : Ns) {
      OperatorFlags row = f;
      row.n = n;
      row.N = N;
      const Comparison r = compare_once(x, spec, expansion_config(row), row, c, err);
      violated = violated || r.violation_at.has_value();
      col_n.push_back(n);
      col_N.push_back(N);
      col_dist.push_back(r.dist);
    }
  }
  table.add_column("n", std::move(col_n));
  table.add_column("N", std::move(col_N));
  table.add_column("dist", std::move(col_dist));
  emit(table, f.out, out);
  if (violated) {
    err << "error: truncation bound violated in at least one sweep row\n";
    return kBoundViolation;
  }
  return kOk;
}

int cmd_fde(const FdeFlags& f, std::ostream& out) {
  FdeProblem problem = reference_problem(f.N, f.t_end);
  try {
    problem.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (f.steps < 1) throw UsageError("--steps must be at least 1");
  if (!(f.delta > 0.0)) throw UsageError("--delta must be positive");
  if (!(problem.a * (1.0 + f.delta) < problem.t_end)) {
    throw UsageError("--t-end must exceed the offset start a(1 + delta)");
  }
  const Trajectory traj = solve_fde(problem, f.steps, f.delta);

  const std::size_t rows = traj.t.size();
  std::vector<double> numeric(rows), exact(rows), abs_err(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    numeric[k] = traj.y[k][0];
    exact[k] = std::log(traj.t[k]);
    abs_err[k] = std::abs(numeric[k] - exact[k]);
  }
  SeriesTable table;
  table.add_column("t", traj.t);
  table.add_column("x_numeric", numeric);
  table.add_column("x_exact", exact);
  table.add_column("abs_err", std::move(abs_err));
  if (f.dump_states) {
    for (int p = 2; p <= f.N; ++p) {
      std::vector<double> v(rows);
      for (std::size_t k = 0; k < rows; ++k) v[k] = traj.y[k][static_cast<std::size_t>(p - 1)];
      table.add_column("V_" + std::to_string(p), std::move(v));
    }
  }
  emit(table, f.out, out);
  out << "dist=" << format_number(dist_metric({traj.t, exact}, {traj.t, numeric})) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hadamard fractional operators via integer-order expansions"};
  app.require_subcommand(1);

  OperatorFlags approx_flags, compare_flags, sweep_flags;
  CompareFlags compare_opts, sweep_compare_opts;
  SweepFlags sweep_lists;
  FdeFlags fde_flags;

  auto* approx = app.add_subcommand("approx", "evaluate the truncated expansion on a grid");
  add_operator_flags(approx, approx_flags);

  auto* compare = app.add_subcommand("compare", "expansion vs closed form or quadrature");
  add_operator_flags(compare, compare_flags);
  compare->add_option("--reference", compare_opts.reference, "auto | closed | quad")
      ->check(CLI::IsMember({"auto", "closed", "quad"}));
  compare->add_flag("--self-compare", compare_opts.self_compare,
                    "use the expansion itself as the reference");

  auto* sweep = app.add_subcommand("sweep", "dist over lists of n and N");
  add_operator_flags(sweep, sweep_flags);
  auto* n_list = sweep->add_option("--n-list", sweep_lists.n_list, "comma-separated depths")
                     ->delimiter(',')
                     ->allow_extra_args(false);
  auto* N_list = sweep->add_option("--N-list", sweep_lists.N_list, "comma-separated orders")
                     ->delimiter(',')
                     ->allow_extra_args(false);
  sweep->add_option("--reference", sweep_compare_opts.reference, "auto | closed | quad")
      ->check(CLI::IsMember({"auto", "closed", "quad"}));

  auto* fde = app.add_subcommand("fde", "solve the example FDE through the replaced ODE system");
  fde->add_option("--N", fde_flags.N, "truncation order (>= 2)");
  fde->add_option("--steps", fde_flags.steps, "RK4 steps");
  fde->add_option("--delta", fde_flags.delta, "relative start offset, t0 = a (1 + delta)");
  fde->add_option("--t-end", fde_flags.t_end, "final time");
  fde->add_flag("--dump-states", fde_flags.dump_states, "add V_p columns");
  fde->add_option("--out", fde_flags.out, "write CSV to this file instead of stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("hadamard");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*approx) return cmd_approx(approx_flags, out, err);
    if (*compare) return cmd_compare(compare_flags, compare_opts, out, err);
    if (*sweep) {
      // An empty --n-list "" parses to nothing; count() tells us it was given.
      return cmd_sweep(sweep_flags, sweep_lists, sweep_compare_opts, n_list->count() > 0,
                       N_list->count() > 0, out, err);
    }
    if (*fde) return cmd_fde(fde_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonFiniteState& e) {
    err << "error: " << e.what() << '\n';
    return kNonFinite;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace hadamard::cli
