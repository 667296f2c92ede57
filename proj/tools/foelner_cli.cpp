// Command-line front end: reproducible Følner-ratio, compatibility and
// spectral-approximation experiments emitting full-precision CSV.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "foelner/crossed.hpp"
#include "foelner/json_io.hpp"
#include "foelner/metrics.hpp"
#include "foelner/spectral.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;

// Precondition violations (exit 3), as opposed to malformed input (exit 2).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct RunConfig {
  std::string operator_path;
  std::string builtin;
  double theta = 0.381966;
  double lambda = 1.0;
  long k = 1;
  std::string windows_arg;
  std::string schedule_arg;
  long k_max = 6;
  std::string theta_grid_arg;
  std::string out_path;
  unsigned threads = 0;
};

std::vector<long> split_longs(const std::string& s, char sep,
                              const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse '" + tok + "' in " + what);
    }
  }
  return out;
}

std::vector<foelner::WindowSpec> parse_windows(const RunConfig& cfg) {
  std::vector<foelner::WindowSpec> out;
  if (!cfg.windows_arg.empty()) {
    std::stringstream ss(cfg.windows_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto nm = split_longs(tok, ':', "--windows");
      if (nm.size() != 2) {
        throw std::invalid_argument("--windows entries must look like n:m");
      }
      if (nm[0] < 0 || nm[1] < 0) {
        throw std::invalid_argument("--windows sizes must be non-negative");
      }
      out.push_back({nm[0], nm[1]});
    }
  }
  if (!cfg.schedule_arg.empty()) {
    const auto sfc = split_longs(cfg.schedule_arg, ':', "--schedule");
    if (sfc.size() != 3 || sfc[0] < 0 || sfc[1] < 1 || sfc[2] < 1) {
      throw std::invalid_argument("--schedule must be start:factor:count");
    }
    long n = sfc[0];
    for (long i = 0; i < sfc[2]; ++i) {
      out.push_back({n, n});
      n *= sfc[1];
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("no windows given (--windows or --schedule)");
  }
  return out;
}

std::vector<double> parse_theta_grid(const std::string& arg) {
  std::stringstream ss(arg);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() != 3) {
    throw std::invalid_argument("--theta-grid must be start:stop:steps");
  }
  double start = 0.0, stop = 0.0;
  long steps = 0;
  try {
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    steps = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse --theta-grid");
  }
  if (steps < 1) throw std::invalid_argument("--theta-grid steps must be >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) {
    grid.push_back(steps == 1 ? start
                              : start + (stop - start) * static_cast<double>(i) /
                                            static_cast<double>(steps - 1));
  }
  return grid;
}

unsigned resolve_threads(const RunConfig& cfg) {
  if (const char* env = std::getenv("FOELNER_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument("FOELNER_THREADS is not a number");
    }
  }
  if (cfg.threads != 0) return cfg.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

bool is_half_line_builtin(const RunConfig& cfg) {
  return cfg.builtin == "shift" || cfg.builtin == "cuntz";
}

foelner::CrossedSymbol resolve_symbol(const RunConfig& cfg) {
  if (!cfg.operator_path.empty()) {
    return foelner::crossed_symbol_from_file(cfg.operator_path);
  }
  if (cfg.builtin == "almost-mathieu") {
    return foelner::sym_almost_mathieu(cfg.lambda, cfg.theta);
  }
  if (cfg.builtin == "u") return foelner::sym_u(cfg.k, cfg.theta);
  if (cfg.builtin == "pi") {
    return foelner::sym_pi(foelner::TrigPoly::cosine(cfg.lambda), cfg.theta);
  }
  throw std::invalid_argument("unknown builtin operator '" + cfg.builtin + "'");
}

// Atomic output: rows land in a temp file, renamed onto the target on success.
void write_csv(const std::string& out_path, const std::string& header,
               const std::vector<std::string>& rows) {
  namespace fs = std::filesystem;
  const fs::path target(out_path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      throw std::invalid_argument("cannot open output file '" + tmp.string() +
                                  "'");
    }
    out << header << '\n';
    for (const auto& row : rows) out << row << '\n';
    if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string report_row(const foelner::RatioReport& r) {
  std::ostringstream row;
  row << r.window.n << ',' << r.window.m << ',' << r.dim << ','
      << g17(r.r_comm_2) << ',' << g17(r.r_comm_1) << ',' << g17(r.r_corner_2)
      << ',' << g17(r.r_corner_1) << ',' << g17(r.qd_norm);
  return row.str();
}

void cmd_ratios(const RunConfig& cfg) {
  const auto windows = parse_windows(cfg);
  std::vector<std::string> rows;
  if (is_half_line_builtin(cfg)) {
    for (const auto& w : windows) {
      rows.push_back(report_row(cfg.builtin == "shift"
                                    ? foelner::shift_report(w.n, cfg.k)
                                    : foelner::cuntz_report(w.n)));
    }
  } else {
    const auto sym = resolve_symbol(cfg);
    for (const auto& w : windows) {
      rows.push_back(report_row(foelner::foelner_ratios(sym, w)));
    }
  }
  write_csv(cfg.out_path,
            "n,m,dim,r_comm_2,r_comm_1,r_corner_2,r_corner_1,qd_norm", rows);
}

void cmd_compat(const RunConfig& cfg) {
  if (is_half_line_builtin(cfg) || cfg.builtin == "u") {
    throw std::invalid_argument("compat needs a pi-type operator");
  }
  const auto sym = resolve_symbol(cfg);
  if (sym.group_bandwidth() != 0) {
    throw std::invalid_argument(
        "compat needs a pi-type operator (group support {0})");
  }
  const foelner::TrigPoly g = sym.term(0);
  std::vector<std::string> rows;
  for (const auto& w : parse_windows(cfg)) {
    const auto rep = foelner::compatibility_max_ratio(g, sym.theta(), w);
    std::ostringstream row;
    row << w.n << ',' << w.m << ',' << g17(rep.max_ratio) << ','
        << g17(rep.k0_ratio) << ','
        << g17(std::abs(rep.max_ratio - rep.k0_ratio));
    rows.push_back(row.str());
  }
  write_csv(cfg.out_path, "n,m,max_ratio,k0_ratio,abs_diff", rows);
}

foelner::CrossedSymbol resolve_selfadjoint(const RunConfig& cfg) {
  if (is_half_line_builtin(cfg)) {
    throw PreconditionError("operator '" + cfg.builtin +
                            "' is not a self-adjoint crossed-product symbol");
  }
  auto sym = resolve_symbol(cfg);
  if (!foelner::is_selfadjoint(sym)) {
    throw PreconditionError("operator is not self-adjoint");
  }
  return sym;
}

void cmd_spectrum(const RunConfig& cfg) {
  const auto sym = resolve_selfadjoint(cfg);
  std::vector<std::string> rows;
  for (const auto& w : parse_windows(cfg)) {
    const auto mu = foelner::empirical_measure(sym, w);
    for (long i = 0; i < mu.dim(); ++i) {
      std::ostringstream row;
      row << g17(sym.theta()) << ',' << g17(cfg.lambda) << ',' << w.n << ','
          << w.m << ',' << i << ','
          << g17(mu.eigenvalues[static_cast<std::size_t>(i)]);
      rows.push_back(row.str());
    }
  }
  write_csv(cfg.out_path, "theta,lambda,n,m,index,eigenvalue", rows);
}

void cmd_moments(const RunConfig& cfg) {
  const auto sym = resolve_selfadjoint(cfg);
  std::vector<std::string> rows;
  for (const auto& r :
       foelner::moment_convergence_table(sym, cfg.k_max, parse_windows(cfg))) {
    std::ostringstream row;
    row << r.window.n << ',' << r.window.m << ',' << r.k << ','
        << g17(r.empirical) << ',' << g17(r.oracle) << ',' << g17(r.abs_error);
    rows.push_back(row.str());
  }
  write_csv(cfg.out_path, "n,m,k,empirical,oracle,abs_error", rows);
}

void cmd_butterfly(const RunConfig& cfg) {
  if (cfg.theta_grid_arg.empty()) {
    throw std::invalid_argument("butterfly requires --theta-grid");
  }
  const auto windows = parse_windows(cfg);
  if (windows.size() != 1) {
    throw std::invalid_argument("butterfly takes exactly one window");
  }
  const auto grid = parse_theta_grid(cfg.theta_grid_arg);
  const auto rows_data = foelner::butterfly(grid, cfg.lambda, windows.front(),
                                            resolve_threads(cfg));
  std::vector<std::string> rows;
  rows.reserve(rows_data.size());
  for (const auto& r : rows_data) {
    std::ostringstream row;
    row << g17(r.theta) << ',' << g17(r.lambda) << ',' << r.n << ',' << r.m
        << ',' << r.index << ',' << g17(r.eigenvalue);
    rows.push_back(row.str());
  }
  write_csv(cfg.out_path, "theta,lambda,n,m,index,eigenvalue", rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Følner projection nets and spectral approximation for "
               "crossed products over Z"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string command;
  for (const auto& name :
       {"ratios", "compat", "spectrum", "moments", "butterfly"}) {
    CLI::App* sub = app.add_subcommand(name);
    auto* op = sub->add_option("--operator", cfg.operator_path,
                               "operator JSON file (CrossedSymbol schema)");
    auto* builtin = sub->add_option(
        "--builtin", cfg.builtin,
        "builtin operator: almost-mathieu|shift|cuntz|u|pi");
    op->excludes(builtin);
    builtin->excludes(op);
    sub->add_option("--theta", cfg.theta, "rotation angle in turns");
    sub->add_option("--lambda", cfg.lambda, "almost Mathieu coupling");
    sub->add_option("--k", cfg.k, "power for builtin u / shift");
    sub->add_option("--windows", cfg.windows_arg, "window list n1:m1,n2:m2,...");
    sub->add_option("--schedule", cfg.schedule_arg,
                    "geometric n=m schedule start:factor:count");
    sub->add_option("--kmax", cfg.k_max, "highest moment order");
    sub->add_option("--theta-grid", cfg.theta_grid_arg,
                    "theta sweep start:stop:steps");
    sub->add_option("--out", cfg.out_path, "output CSV path")->required();
    sub->add_option("--threads", cfg.threads, "thread cap for the sweep");
    sub->callback([&command, name]() { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInput;
  }

  try {
    if (cfg.operator_path.empty() && cfg.builtin.empty()) {
      throw std::invalid_argument("exactly one of --operator/--builtin required");
    }
    if (command == "ratios") {
      cmd_ratios(cfg);
    } else if (command == "compat") {
      cmd_compat(cfg);
    } else if (command == "spectrum") {
      cmd_spectrum(cfg);
    } else if (command == "moments") {
      cmd_moments(cfg);
    } else {
      cmd_butterfly(cfg);
    }
  } catch (const PreconditionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
