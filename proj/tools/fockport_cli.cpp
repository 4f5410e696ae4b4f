// Command-line driver for the fockport C API.
//
//   fockport resource      coefficients of the beam-splitter resource
//   fockport distribution  P(q) and F(q) over the number-sum support
//   fockport fidelity      average fidelity, classical level, optional F(q)
//   fockport sweep         average-fidelity density map over (m, beta)
//   fockport phase-map     argmax joint-phase map over (m, beta)
//   fockport oracle-check  resource coefficients against the sector unitary
//
// Every subcommand accepts --config FILE with flat `key = value` lines; flags
// on the command line win over the file.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fockport.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitOracleFailure = 2;
constexpr int kExitIo = 3;

constexpr double kPi = std::numbers::pi;

struct TargetOptions {
  std::string kind = "cat";
  double alpha = 3.0;
  int k = 0;
  int cutoff = -1;  // -1: smallest cutoff meeting the truncation tolerance
};

struct ResourceOptions {
  int n_in = 1;
  int m_in = 1;
  double beta = kPi / 2.0;
};

struct AxisOptions {
  int total = 100;
  int beta_steps = 101;
  std::string m_range;  // empty: 0..N
  unsigned threads = 0;
};

// Failure raised by the CLI itself, carrying the exit code.
struct CliFailure {
  int code;
  std::string message;
};

[[noreturn]] void raise(fp_status status, const std::string& context) {
  const int code = status == FP_ERR_IO ? kExitIo : kExitUsage;
  throw CliFailure{code, context + ": " + fp_last_error()};
}

void check(fp_status status, const std::string& context) {
  if (status != FP_OK) raise(status, context);
}

struct TargetDeleter {
  void operator()(fp_target* t) const { fp_target_free(t); }
};
struct ResourceDeleter {
  void operator()(fp_resource* r) const { fp_resource_free(r); }
};
struct GridDeleter {
  void operator()(fp_grid* g) const { fp_grid_free(g); }
};
using TargetPtr = std::unique_ptr<fp_target, TargetDeleter>;
using ResourcePtr = std::unique_ptr<fp_resource, ResourceDeleter>;
using GridPtr = std::unique_ptr<fp_grid, GridDeleter>;

void add_target_options(CLI::App* app, TargetOptions& t) {
  app->add_option("--target", t.kind, "Target state: cat, fock or coherent")
      ->check(CLI::IsMember({"cat", "fock", "coherent"}))
      ->capture_default_str();
  app->add_option("--alpha", t.alpha, "Coherent amplitude (real, >= 0)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--k", t.k, "Fock photon number for --target fock")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--cutoff", t.cutoff,
                  "Fock truncation of the target (default: automatic)")
      ->check(CLI::NonNegativeNumber);
}

void add_resource_options(CLI::App* app, ResourceOptions& r) {
  app->add_option("--n-in", r.n_in, "Photons entering mode A")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--m-in", r.m_in, "Photons entering mode B")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--beta", r.beta, "Beam-splitter angle in [0, pi]")
      ->check(CLI::Range(0.0, kPi))
      ->capture_default_str();
}

void add_axis_options(CLI::App* app, AxisOptions& a) {
  app->add_option("--total", a.total, "Total photon number 2N")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app->add_option("--beta-steps", a.beta_steps,
                  "Number of beta samples strictly inside (0, pi)")
      ->check(CLI::Range(2, 1 << 20))
      ->capture_default_str();
  app->add_option("--m-range", a.m_range,
                  "m axis as first:last[:step], half-integers allowed "
                  "(default 0:N)");
  app->add_option("--threads", a.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

TargetPtr make_target(const TargetOptions& t) {
  int cutoff = t.cutoff;
  if (cutoff < 0) {
    if (t.kind == "fock") {
      cutoff = t.k;
    } else {
      check(fp_minimal_cutoff(t.alpha, t.kind == "cat", &cutoff), "--cutoff");
    }
  }
  fp_target* raw = nullptr;
  fp_status status = FP_OK;
  if (t.kind == "cat") {
    status = fp_target_cat(t.alpha, 0.0, cutoff, &raw);
  } else if (t.kind == "coherent") {
    status = fp_target_coherent(t.alpha, 0.0, cutoff, &raw);
  } else {
    status = fp_target_fock(t.k, cutoff, &raw);
  }
  check(status, t.kind == "fock" ? "--k" : "--cutoff");
  return TargetPtr(raw);
}

ResourcePtr make_resource(const ResourceOptions& r) {
  fp_resource* raw = nullptr;
  check(fp_resource_create(r.n_in, r.m_in, r.beta, &raw), "--n-in/--m-in");
  return ResourcePtr(raw);
}

int parse_twice(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  const double twice = 2.0 * v;
  if (used != text.size() || std::abs(twice - std::round(twice)) > 1e-9) {
    throw CliFailure{kExitUsage,
                     "--m-range: '" + text + "' is not a multiple of 1/2"};
  }
  return static_cast<int>(std::lround(twice));
}

std::vector<int> m_axis(const AxisOptions& a) {
  std::string spec = a.m_range.empty()
                         ? "0:" + std::to_string(a.total / 2)
                         : a.m_range;
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3) {
    throw CliFailure{kExitUsage, "--m-range: expected first:last[:step]"};
  }
  const int first = parse_twice(parts[0]);
  const int last = parse_twice(parts[1]);
  const int step = parts.size() == 3 ? parse_twice(parts[2]) : 2;
  if (step <= 0 || last < first) {
    throw CliFailure{kExitUsage, "--m-range: empty or non-increasing range"};
  }
  std::vector<int> axis;
  for (int v = first; v <= last; v += step) axis.push_back(v);
  return axis;
}

std::vector<double> beta_axis(const AxisOptions& a) {
  std::vector<double> axis(static_cast<std::size_t>(a.beta_steps));
  check(fp_interior_beta_axis(a.beta_steps, axis.data()), "--beta-steps");
  return axis;
}

void warn_invalid_rows(int total, const std::vector<int>& twice_m) {
  for (int tm : twice_m) {
    const bool ok = std::abs(tm) <= total && (total + tm) % 2 == 0;
    if (!ok) {
      std::cerr << "warning: m = " << tm / 2.0 << " has no integer Fock inputs"
                << " at total " << total << "; row written as NaN\n";
    }
  }
}

std::string format17(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  check(fp_write_file_atomic(path.c_str(), text.data(), text.size()), path);
}

void write_grid(const fp_grid* grid, const std::string& csv,
                const std::string& pgm) {
  check(fp_grid_write_csv(grid, csv.c_str()), csv);
  check(fp_grid_write_pgm(grid, pgm.c_str()), pgm);
}

std::vector<double> parse_betas(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    double v = 0.0;
    if (item == "pi/2") {
      v = kPi / 2.0;
    } else {
      try {
        std::size_t used = 0;
        v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw CliFailure{kExitUsage, "--betas: cannot parse '" + item + "'"};
      }
    }
    if (!(v >= 0.0 && v <= kPi)) {
      throw CliFailure{kExitUsage, "--betas: " + item + " outside [0, pi]"};
    }
    out.push_back(v);
  }
  return out;
}

// CLI11 reads config files only at the top level; bare keys are routed to
// whichever subcommand was selected.
class SubcommandConfig : public CLI::ConfigINI {
 public:
  explicit SubcommandConfig(const CLI::App* app) : app_(app) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    const auto selected = app_->get_subcommands();
    if (selected.empty()) return items;
    for (auto& item : items) {
      if (item.parents.empty() || item.parents.front() == "default") {
        item.parents = {selected.front()->get_name()};
      }
    }
    return items;
  }

 private:
  const CLI::App* app_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-state beam-splitter teleportation simulator"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key = value file; flags win over it");
  app.config_formatter(std::make_shared<SubcommandConfig>(&app));
  app.set_version_flag("--version", std::string(fp_version()));

  TargetOptions target;
  ResourceOptions resource;
  AxisOptions axes;

  // resource
  auto* cmd_resource =
      app.add_subcommand("resource", "Resource coefficients d_{n-N} as CSV");
  add_resource_options(cmd_resource, resource);
  std::string resource_csv;
  cmd_resource->add_option("--csv", resource_csv, "Output path (default stdout)");

  // distribution
  auto* cmd_dist = app.add_subcommand(
      "distribution", "Number-sum probabilities and per-outcome fidelities");
  add_target_options(cmd_dist, target);
  add_resource_options(cmd_dist, resource);
  std::string dist_csv;
  cmd_dist->add_option("--csv", dist_csv, "Output path (default stdout)");

  // fidelity
  auto* cmd_fid = app.add_subcommand(
      "fidelity", "Average fidelity and classical level for one resource");
  add_target_options(cmd_fid, target);
  add_resource_options(cmd_fid, resource);
  int query_q = -1;
  cmd_fid->add_option("--q", query_q, "Also report P(q) and F(q)")
      ->check(CLI::NonNegativeNumber);

  // sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Average fidelity over (m, beta) at fixed total photon number");
  add_target_options(cmd_sweep, target);
  add_axis_options(cmd_sweep, axes);
  std::string sweep_csv = "fidelity_sweep.csv";
  std::string sweep_pgm = "fidelity_sweep.pgm";
  cmd_sweep->add_option("--csv", sweep_csv, "CSV output")->capture_default_str();
  cmd_sweep->add_option("--pgm", sweep_pgm, "PGM output")->capture_default_str();

  // phase-map
  auto* cmd_phase = app.add_subcommand(
      "phase-map", "Phase difference maximizing the joint phase probability");
  add_axis_options(cmd_phase, axes);
  int phi_grid = 4096;
  cmd_phase->add_option("--phi-grid", phi_grid, "Phase samples over [0, 2pi)")
      ->check(CLI::Range(16, 1 << 24))
      ->capture_default_str();
  std::string phase_csv = "phase_map.csv";
  std::string phase_pgm = "phase_map.pgm";
  cmd_phase->add_option("--csv", phase_csv, "CSV output")->capture_default_str();
  cmd_phase->add_option("--pgm", phase_pgm, "PGM output")->capture_default_str();

  // oracle-check
  auto* cmd_oracle = app.add_subcommand(
      "oracle-check", "Resource coefficients against the sector unitary");
  int max_total = 40;
  std::string betas_text = "0.1,0.5,pi/2,2.5,3.0";
  bool quiet = false;
  cmd_oracle->add_option("--max-total", max_total,
                         "Check every (n_in, m_in) with n_in + m_in <= this")
      ->check(CLI::Range(0, 60))
      ->capture_default_str();
  cmd_oracle->add_option("--betas", betas_text, "Comma-separated angles")
      ->capture_default_str();
  cmd_oracle->add_flag("--quiet", quiet, "Only print failures and the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_resource) {
      auto r = make_resource(resource);
      std::string text = "index,real,imag\n";
      for (std::size_t n = 0; n < fp_resource_size(r.get()); ++n) {
        double re = 0.0, im = 0.0;
        check(fp_resource_coeff(r.get(), n, &re, &im), "resource");
        text += std::to_string(n) + "," + format17(re) + "," + format17(im) + "\n";
      }
      emit(resource_csv, text);
    } else if (*cmd_dist) {
      auto t = make_target(target);
      auto r = make_resource(resource);
      std::size_t count = 0;
      check(fp_outcome_distribution(t.get(), r.get(), nullptr, nullptr, 0, &count),
            "distribution");
      std::vector<double> p(count), f(count);
      check(fp_outcome_distribution(t.get(), r.get(), p.data(), f.data(), count,
                                    &count),
            "distribution");
      std::string text = "q,p,f\n";
      for (std::size_t q = 0; q < count; ++q) {
        text += std::to_string(q) + "," + format17(p[q]) + "," + format17(f[q]) + "\n";
      }
      emit(dist_csv, text);
    } else if (*cmd_fid) {
      auto t = make_target(target);
      auto r = make_resource(resource);
      double avg = 0.0, base = 0.0;
      check(fp_average_fidelity(t.get(), r.get(), &avg), "fidelity");
      check(fp_classical_baseline(t.get(), r.get(), &base), "fidelity");
      std::cout << "target: " << fp_target_label(t.get()) << "\n"
                << "cutoff: " << fp_target_size(t.get()) - 1 << "\n"
                << "average_fidelity: " << format17(avg) << "\n"
                << "classical_baseline: " << format17(base) << "\n";
      if (query_q >= 0) {
        double p = 0.0;
        check(fp_number_sum_prob(t.get(), r.get(), query_q, &p), "--q");
        std::cout << "P(q): " << format17(p) << "\n";
        double f = 0.0;
        if (fp_fidelity_given_q(t.get(), r.get(), query_q, &f) == FP_OK) {
          std::cout << "F(q): " << format17(f) << "\n";
        } else {
          std::cout << "F(q): undefined\n";
        }
      }
    } else if (*cmd_sweep) {
      auto t = make_target(target);
      const auto betas = beta_axis(axes);
      const auto ms = m_axis(axes);
      warn_invalid_rows(axes.total, ms);
      fp_grid* raw = nullptr;
      check(fp_fidelity_sweep(t.get(), axes.total, betas.data(), betas.size(),
                              ms.data(), ms.size(), axes.threads, &raw),
            "sweep");
      GridPtr grid(raw);
      write_grid(grid.get(), sweep_csv, sweep_pgm);
    } else if (*cmd_phase) {
      const auto betas = beta_axis(axes);
      const auto ms = m_axis(axes);
      warn_invalid_rows(axes.total, ms);
      fp_grid* raw = nullptr;
      check(fp_phase_argmax_map(axes.total, betas.data(), betas.size(),
                                ms.data(), ms.size(), phi_grid, axes.threads,
                                &raw),
            "phase-map");
      GridPtr grid(raw);
      write_grid(grid.get(), phase_csv, phase_pgm);
    } else if (*cmd_oracle) {
      const auto betas = parse_betas(betas_text);
      std::size_t checked = 0, failed = 0;
      double worst = 0.0;
      std::printf("%6s %6s %10s %12s %12s %12s %s\n", "n_in", "m_in", "beta",
                  "1-|overlap|", "max_dev", "phase", "status");
      for (int total = 0; total <= max_total; ++total) {
        for (int n_in = 0; n_in <= total; ++n_in) {
          for (double beta : betas) {
            fp_resource_check r{};
            check(fp_verify_resource(n_in, total - n_in, beta, max_total, &r),
                  "oracle-check");
            ++checked;
            if (!r.pass) ++failed;
            worst = std::max(worst, 1.0 - r.overlap_abs);
            if (!quiet || !r.pass) {
              std::printf("%6d %6d %10.6f %12.3e %12.3e %12.3e %s\n", r.n_in,
                          r.m_in, r.beta, 1.0 - r.overlap_abs, r.max_deviation,
                          r.residual_phase, r.pass ? "PASS" : "FAIL");
            }
          }
        }
      }
      std::printf("checked %zu, failed %zu, worst 1-|overlap| %.3e: %s\n",
                  checked, failed, worst, failed == 0 ? "PASS" : "FAIL");
      return failed == 0 ? kExitOk : kExitOracleFailure;
    }
  } catch (const CliFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return kExitOk;
}
