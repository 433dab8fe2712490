// wcs: bound calculators, single solves, generators, Monte-Carlo checks and
// recovery campaigns for weighted l1 minimization.
//
// Exit codes: 0 success, 2 validation error, 3 solver non-convergence
// (solve only), 4 I/O or format error, 130 interrupted campaign.

#include "campaign.hpp"
#include "config.hpp"

#include "wcs/bounds.hpp"
#include "wcs/csv.hpp"
#include "wcs/experiments.hpp"
#include "wcs/montecarlo.hpp"
#include "wcs/random.hpp"
#include "wcs/signals.hpp"
#include "wcs/solver.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace wcs;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitIo = 4;
constexpr int kExitInterrupted = 130;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

std::string fmt(double v) { return csv::format_double(v); }

// --- weights and supports from flags ---------------------------------------

struct WeightFlags {
  std::string scheme = "uniform";
  double theta = 0.2;
  double low = 1.0;
  double high = 3.0;
  double w2 = 2.0;
  std::string estimate;
  std::uint64_t seed = 0;
};

void add_weight_flags(CLI::App* app, WeightFlags& f) {
  app->add_option("--scheme", f.scheme, "uniform | polynomial | random | two-weight")
      ->check(CLI::IsMember({"uniform", "polynomial", "random", "two-weight"}));
  app->add_option("--theta", f.theta, "polynomial exponent");
  app->add_option("--low", f.low, "random weights: lower end");
  app->add_option("--high", f.high, "random weights: upper end");
  app->add_option("--w2", f.w2, "two-weight: weight off the estimate");
  app->add_option("--estimate", f.estimate, "two-weight: support estimate (first:K or 1-based list)");
  app->add_option("--weight-seed", f.seed, "seed for random weights");
}

// "first:K" or a comma-separated list of 1-based indices; empty means the empty set.
SupportSet parse_support(const std::string& text, Index n) {
  if (text.empty() || text == "none") return SupportSet({}, n);
  if (text == "all") return SupportSet::full(n);
  if (text.rfind("first:", 0) == 0) {
    const std::string count = text.substr(6);
    std::size_t pos = 0;
    long long k = -1;
    try {
      k = std::stoll(count, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != count.size() || k < 0) throw ValidationError("support: bad count in '" + text + "'");
    if (static_cast<Index>(k) > n) throw ValidationError("support: first:K needs K <= N");
    return SupportSet::first(static_cast<Index>(k), n);
  }
  std::vector<long long> idx;
  for (const auto& field : csv::split_line(text)) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(field, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (field.empty() || pos != field.size()) {
      throw ValidationError("support: '" + field + "' is not an index");
    }
    idx.push_back(v);
  }
  return SupportSet::from_one_based(idx, n);
}

WeightVector make_weights(const WeightFlags& f, Index n) {
  if (f.scheme == "uniform") return signals::gen_weights(signals::UniformWeights{}, n, f.seed);
  if (f.scheme == "polynomial") {
    return signals::gen_weights(signals::PolynomialWeights{f.theta}, n, f.seed);
  }
  if (f.scheme == "random") {
    return signals::gen_weights(signals::RandomUniformWeights{f.low, f.high}, n, f.seed);
  }
  return signals::gen_weights(signals::TwoWeights{parse_support(f.estimate, n), f.w2}, n, f.seed);
}

// --- bound -----------------------------------------------------------------

struct BoundFlags {
  std::string mode;
  Index n = 500;
  double k = 0.0;
  std::optional<double> s;
  std::optional<double> gamma;
  std::optional<double> rho;
  double alpha = 1.0;
  double beta = 1.0;
  double delta = 0.05;
  double zeta = 0.1;
  std::string support;
  std::string csv_path;
  WeightFlags weights;
};

void print_report(const std::string& mode, const bounds::SampleComplexityReport& r) {
  std::cout << "mode            " << mode << "\n"
            << "m_min           " << r.m_min << "\n"
            << "rhs             " << fmt(r.rhs) << "\n"
            << "s               " << fmt(r.s) << "\n"
            << "k               " << fmt(r.k) << "\n";
  if (r.gamma) std::cout << "gamma           " << fmt(*r.gamma) << "\n";
  std::cout << "delta           " << fmt(r.delta) << "\n"
            << "zeta            " << fmt(r.zeta) << "\n"
            << "  sqrt(k)              " << fmt(r.term_sqrt_k) << "\n"
            << "  sqrt(2 ln(1/delta))  " << fmt(r.term_confidence) << "\n"
            << "  width term           " << fmt(r.term_width) << "\n"
            << "  zeta                 " << fmt(r.zeta) << "\n";
}

void write_report_csv(const std::string& path, const std::string& mode,
                      const bounds::SampleComplexityReport& r) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "mode,m_min,rhs,s,k,gamma,delta,zeta,term_sqrt_k,term_confidence,term_width\n"
      << mode << ',' << r.m_min << ',' << fmt(r.rhs) << ',' << fmt(r.s) << ',' << fmt(r.k) << ','
      << (r.gamma ? fmt(*r.gamma) : "") << ',' << fmt(r.delta) << ',' << fmt(r.zeta) << ','
      << fmt(r.term_sqrt_k) << ',' << fmt(r.term_confidence) << ',' << fmt(r.term_width) << '\n';
  if (!out) throw IoError("write failed for " + path);
}

double require(const std::optional<double>& v, const char* flag, const std::string& mode) {
  if (!v) throw ValidationError(std::string("--mode ") + mode + " needs " + flag);
  return *v;
}

int command_bound(const BoundFlags& f) {
  bounds::SampleComplexityReport r;
  const std::string& mode = f.mode;
  if (mode == "lemma") {
    if (f.n < 1) throw ValidationError("--mode lemma needs --N");
    const WeightVector w = make_weights(f.weights, f.n);
    const SupportSet support =
        f.support.empty() ? SupportSet::first(static_cast<Index>(f.k), f.n) : parse_support(f.support, f.n);
    r = bounds::sample_complexity_lemma(w, support, f.delta, f.zeta);
  } else if (mode == "theorem") {
    r = bounds::sample_complexity_theorem(require(f.s, "--s", mode), f.k,
                                          require(f.gamma, "--gamma", mode), f.delta, f.zeta);
  } else if (mode == "uniform") {
    const double gamma = bounds::gamma_uniform(f.n, f.k);
    r = bounds::sample_complexity_theorem(f.k, f.k, gamma, f.delta, f.zeta);
  } else if (mode == "two-weight") {
    const double rho = require(f.rho, "--rho", mode);
    if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("--rho must lie in (0, 1]");
    if (!(f.alpha >= 0.0 && f.alpha <= 1.0 && f.beta >= 0.0 && f.beta <= 1.0)) {
      throw ValidationError("--alpha and --beta must lie in [0, 1]");
    }
    const double ab = f.alpha * f.beta;
    const double s = f.s ? *f.s : ab * f.k + (f.k - ab * f.k) / (rho * rho);
    const double gamma = bounds::gamma_two_weight(f.n, s, rho);
    r = bounds::sample_complexity_theorem(s, f.k, gamma, f.delta, f.zeta);
    const double mismatch = (f.beta * f.k - ab * f.k) + (f.k - ab * f.k);
    print_report(mode, r);
    std::cout << "mismatch n      " << fmt(mismatch) << "\n"
              << "(rho^2 k + n) ln(N/k)  "
              << fmt((rho * rho * f.k + mismatch) * std::log(static_cast<double>(f.n) / f.k)) << "\n";
    if (!f.csv_path.empty()) write_report_csv(f.csv_path, mode, r);
    return 0;
  } else if (mode == "known-support") {
    if (!(f.k >= 1.0) || !(static_cast<double>(f.n) > f.k)) {
      throw ValidationError("--mode known-support needs 1 <= k < N");
    }
    const double log_ratio = std::log(static_cast<double>(f.n) / f.k);
    const double rho = f.rho ? *f.rho : std::min(1.0, 1.0 / std::sqrt(log_ratio));
    if (!(rho > 0.0 && rho <= 1.0)) throw ValidationError("--rho must lie in (0, 1]");
    const double gamma = bounds::gamma_two_weight(f.n, f.k, rho);
    r = bounds::sample_complexity_theorem(f.k, f.k, gamma, f.delta, f.zeta);
    print_report(mode, r);
    std::cout << "rho             " << fmt(rho) << "\n"
              << "rho^2 ln(N/k)   " << fmt(rho * rho * log_ratio) << "\n";
    if (rho * rho * log_ratio <= 1.0 + 1e-12) {
      std::cout << "regime          support known exactly with rho^2 ln(N/k) <= 1: m = O(k) "
                   "measurements suffice\n";
    } else {
      std::cout << "regime          rho^2 ln(N/k) > 1: outside the O(k) regime\n";
    }
    if (!f.csv_path.empty()) write_report_csv(f.csv_path, mode, r);
    return 0;
  } else {
    throw ValidationError("unknown --mode '" + mode + "'");
  }
  if (mode == "uniform") std::cout << "gamma_uniform   " << fmt(*r.gamma) << "\n";
  print_report(mode, r);
  if (!f.csv_path.empty()) write_report_csv(f.csv_path, mode, r);
  return 0;
}

// --- width -----------------------------------------------------------------

struct WidthFlags {
  Index n = 0;
  std::string support;
  std::uint64_t empirical = 0;
  std::uint64_t seed = 0;
  WeightFlags weights;
};

int command_width(const WidthFlags& f) {
  if (f.n < 1) throw ValidationError("width needs --N >= 1");
  const WeightVector w = make_weights(f.weights, f.n);
  const SupportSet s = parse_support(f.support, f.n);
  const auto rep = bounds::width_bound(w, s);
  std::cout << "N               " << f.n << "\n"
            << "|S|             " << s.cardinality() << "\n"
            << "omega(S)        " << fmt(weighted_cardinality(s, w)) << "\n"
            << "width_bound     " << fmt(rep.bound) << "\n"
            << "optimal_h       " << fmt(rep.optimal_h) << "\n"
            << "  sqrt(k)       " << fmt(rep.term_sqrt_k) << "\n"
            << "  h sqrt(s)     " << fmt(rep.term_h_sqrt_s) << "\n"
            << "  tail          " << fmt(rep.term_tail) << "\n";
  if (f.empirical > 0) {
    const auto est = montecarlo::empirical_dual_width(w, s, f.empirical, f.seed);
    const bool ok = est.mean <= rep.bound + 3.0 * est.std_error;
    std::cout << "empirical       " << fmt(est.mean) << "\n"
              << "stderr          " << fmt(est.std_error) << "\n"
              << "samples         " << est.n_samples << "\n"
              << "verdict         " << (ok ? "PASS" : "FAIL")
              << " (empirical <= bound + 3 stderr)\n";
  }
  return 0;
}

// --- solve -----------------------------------------------------------------

struct SolveFlags {
  std::string a_path;
  std::string y_path;
  std::string w_path;
  std::string x_out;
  double eta = 0.0;
  bool unweighted = false;
  std::optional<int> max_iterations;
  std::optional<double> gap_tolerance;
};

template <class F>
auto read_file(const std::string& path, F&& reader) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return reader(in);
  } catch (const csv::FormatError& e) {
    throw csv::FormatError(path + ": " + e.what());
  }
}

int command_solve(const SolveFlags& f) {
  solver::SolverOptions options;
  if (f.max_iterations) options.max_iterations = *f.max_iterations;
  if (f.gap_tolerance) options.gap_tolerance = *f.gap_tolerance;
  options.validate();

  Matrix A = read_file(f.a_path, csv::read_matrix_csv);
  Vector y = read_file(f.y_path, csv::read_vector_csv);
  WeightVector w = WeightVector::ones(static_cast<Index>(A.cols()));
  if (!f.w_path.empty() && !f.unweighted) w = WeightVector(read_file(f.w_path, csv::read_vector_csv));
  const ProblemInstance inst(std::move(A), std::move(y), std::move(w), f.eta);
  inst.validate();

  solver::SolveResult r;
  try {
    r = f.unweighted ? solver::solve_l1(inst, options) : solver::solve_weighted_l1(inst, options);
  } catch (const solver::InfeasibleStall& e) {
    std::cerr << "wcs solve: " << e.what() << "\n";
    return kExitNotConverged;
  }
  Index nnz = 0;
  for (Eigen::Index j = 0; j < r.minimizer.size(); ++j) nnz += r.minimizer[j] != 0.0;
  std::cout << "objective       " << fmt(r.objective) << "\n"
            << "residual_norm   " << fmt(r.residual_norm) << "\n"
            << "iterations      " << r.iterations << "\n"
            << "converged       " << (r.converged ? "yes" : "no") << "\n"
            << "polished        " << (r.polished ? "yes" : "no") << "\n"
            << "primal_residual " << fmt(r.primal_residual) << "\n"
            << "dual_residual   " << fmt(r.dual_residual) << "\n"
            << "nonzeros        " << nnz << "\n";
  if (!f.x_out.empty()) {
    std::ofstream out(f.x_out);
    if (!out) throw IoError("cannot write " + f.x_out);
    csv::write_vector_csv(out, r.minimizer);
    if (!out) throw IoError("write failed for " + f.x_out);
  } else {
    csv::write_vector_csv(std::cout, r.minimizer);
  }
  return r.converged ? 0 : kExitNotConverged;
}

// --- gen -------------------------------------------------------------------

struct GenFlags {
  Index n = 100;
  Index m = 25;
  double s = 5.0;
  double eta = 0.0;
  double stddev = 1.0;
  std::uint64_t seed = 0;
  std::string out;
  WeightFlags weights;
};

int command_gen(const GenFlags& f) {
  if (f.out.empty()) throw ValidationError("gen needs --out");
  if (f.m < 1 || f.n < 1) throw ValidationError("gen needs N >= 1 and m >= 1");
  WeightFlags wf = f.weights;
  wf.seed = stream_seed(f.seed, Stream::weights);
  const WeightVector w = make_weights(wf, f.n);
  const signals::SignalModelConfig sc{f.n, f.s, w, f.stddev, stream_seed(f.seed, Stream::signal)};
  sc.validate();
  const auto sampled = signals::sample_weighted_sparse_signal(sc);
  const Matrix A = signals::gen_gaussian_matrix(f.m, f.n, stream_seed(f.seed, Stream::matrix));
  const Vector y = signals::add_noise(A * sampled.signal.values(), f.eta,
                                      stream_seed(f.seed, Stream::noise));

  fs::create_directories(f.out);
  auto write = [&](const std::string& name, auto&& body) {
    const fs::path p = fs::path(f.out) / name;
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    body(out);
    if (!out) throw IoError("write failed for " + p.string());
  };
  write("A.csv", [&](std::ostream& o) { csv::write_matrix_csv(o, A); });
  write("y.csv", [&](std::ostream& o) { csv::write_vector_csv(o, y); });
  write("weights.csv", [&](std::ostream& o) { csv::write_vector_csv(o, w.values()); });
  write("x.csv", [&](std::ostream& o) { csv::write_vector_csv(o, sampled.signal.values()); });

  std::cout << "N               " << f.n << "\n"
            << "m               " << f.m << "\n"
            << "k               " << sampled.signal.support().cardinality() << "\n"
            << "omega(S)        " << fmt(weighted_cardinality(sampled.signal.support(), w)) << "\n"
            << "capped          " << (sampled.capped ? "yes" : "no") << "\n"
            << "written to      " << f.out << "\n";
  return 0;
}

// --- campaigns -------------------------------------------------------------

struct CampaignFlags {
  std::string config_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::optional<int> trials;
  std::optional<Index> n;
  std::optional<Index> m;
  std::optional<double> eta;
  bool force = false;
};

cli::RunConfig resolve(const CampaignFlags& f, fs::path& out_dir) {
  cli::RunConfig config = f.config_path.empty() ? cli::default_config() : cli::load_config(f.config_path);
  if (f.seed) config.seed = *f.seed;
  if (f.jobs) config.jobs = *f.jobs;
  if (config.jobs < 1) throw ValidationError("--jobs must be >= 1");
  cli::propagate(config);
  if (!f.out.empty()) {
    out_dir = f.out;
  } else if (config.output_dir) {
    out_dir = *config.output_dir;
  } else if (const char* env = std::getenv("WCS_OUTPUT_DIR"); env && *env) {
    out_dir = env;
  } else {
    out_dir = "wcs_out";
  }
  return config;
}

template <class Run>
int run_campaign(cli::CampaignStore& store, Run&& run) {
  g_stop.store(false);
  auto previous = std::signal(SIGINT, on_sigint);
  store.write_manifest("running");
  try {
    run(store.hooks(g_stop));
  } catch (const experiments::Interrupted&) {
    std::signal(SIGINT, previous);
    store.write_manifest("partial");
    std::cerr << "wcs: interrupted; completed cells are checkpointed in " << store.dir().string()
              << ", rerun the same command to resume\n";
    return kExitInterrupted;
  }
  std::signal(SIGINT, previous);
  store.write_manifest("complete");
  return 0;
}

std::string render_trials(const experiments::PhaseGrid& grid) {
  std::ostringstream out;
  csv::write_trials_csv(out, grid.trials);
  return out.str();
}

std::string render_errors(const experiments::PhaseGrid& grid) {
  std::ostringstream out;
  csv::write_errors_csv(out, experiments::compute_relative_errors(grid));
  return out.str();
}

void print_grid(const experiments::PhaseGrid& grid, const std::string& row_label) {
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    std::cout << row_label << ' '
              << (grid.alphas.empty() ? std::to_string(grid.m_values[r]) : fmt(grid.alphas[r]))
              << ':';
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      std::cout << ' ' << fmt(grid.prob(r, c, experiments::Method::weighted)) << '/'
                << fmt(grid.prob(r, c, experiments::Method::unweighted));
    }
    std::cout << "\n";
  }
}

int command_phase(const CampaignFlags& f) {
  fs::path out_dir;
  cli::RunConfig config = resolve(f, out_dir);
  auto& pc = config.phase;
  if (f.trials) pc.trials = *f.trials;
  if (f.n) pc.n = *f.n;
  if (f.eta) pc.eta = *f.eta;
  if (f.m) throw ValidationError("phase takes m from the m_over_N grid; --m applies to prior");
  pc.validate();

  cli::CampaignStore store(out_dir, "phase", cli::phase_to_json(pc),
                           pc.m_over_n.size() * pc.s_over_m.size(), f.force);
  experiments::PhaseGrid grid;
  const int rc = run_campaign(store, [&](const experiments::CampaignHooks& hooks) {
    grid = experiments::run_phase_transition(pc, config.jobs, hooks);
  });
  if (rc != 0) return rc;
  std::ostringstream phase;
  csv::write_phase_csv(phase, grid);
  store.write_file("phase.csv", phase.str());
  store.write_file("trials.csv", render_trials(grid));
  store.write_file("errors.csv", render_errors(grid));
  std::cout << "success probability WL1/L1 per row (m) and s/m column\n";
  print_grid(grid, "m");
  std::cout << "resumed cells   " << store.resumed() << "\n"
            << "written to      " << out_dir.string() << "\n";
  return 0;
}

int command_prior(const CampaignFlags& f) {
  fs::path out_dir;
  cli::RunConfig config = resolve(f, out_dir);
  auto& pc = config.prior;
  if (f.trials) pc.trials = *f.trials;
  if (f.n) pc.n = *f.n;
  if (f.m) pc.m = *f.m;
  if (f.eta) pc.eta = *f.eta;
  pc.validate();

  cli::CampaignStore store(out_dir, "prior", cli::prior_to_json(pc),
                           pc.alphas.size() * pc.s_over_m_std.size(), f.force);
  experiments::PhaseGrid grid;
  const int rc = run_campaign(store, [&](const experiments::CampaignHooks& hooks) {
    grid = experiments::run_prior_support(pc, config.jobs, hooks);
  });
  if (rc != 0) return rc;
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    std::ostringstream phase;
    csv::write_phase_csv(phase, grid, r);
    store.write_file("phase_alpha" + std::to_string(r) + ".csv", phase.str());
  }
  store.write_file("trials.csv", render_trials(grid));
  store.write_file("errors.csv", render_errors(grid));
  std::cout << "success probability WL1/L1 per row (alpha) and standardized s/m column\n";
  print_grid(grid, "alpha");
  std::cout << "resumed cells   " << store.resumed() << "\n"
            << "written to      " << out_dir.string() << "\n";
  return 0;
}

void add_campaign_flags(CLI::App* app, CampaignFlags& f) {
  app->add_option("--config", f.config_path, "JSON config file")->check(CLI::ExistingFile);
  app->add_option("--out", f.out, "output directory (default: config, then $WCS_OUTPUT_DIR)");
  app->add_option("--seed", f.seed, "master seed");
  app->add_option("--jobs", f.jobs, "worker threads");
  app->add_option("--trials", f.trials, "trials per cell");
  app->add_option("--N", f.n, "signal dimension");
  app->add_option("--eta", f.eta, "noise level");
  app->add_flag("--force", f.force, "replace a different campaign in the output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted sparse recovery toolkit"};
  app.require_subcommand(1);

  BoundFlags bound;
  auto* cmd_bound = app.add_subcommand("bound", "sample-complexity bounds");
  cmd_bound->add_option("--mode", bound.mode, "lemma | theorem | uniform | two-weight | known-support")
      ->required()
      ->check(CLI::IsMember({"lemma", "theorem", "uniform", "two-weight", "known-support"}));
  cmd_bound->add_option("--N", bound.n, "signal dimension (default 500)");
  cmd_bound->add_option("--k", bound.k, "support size");
  cmd_bound->add_option("--s", bound.s, "weighted sparsity");
  cmd_bound->add_option("--gamma", bound.gamma, "weight growth parameter");
  cmd_bound->add_option("--rho", bound.rho, "two-weight ratio w1 / w2 in (0, 1]");
  cmd_bound->add_option("--alpha", bound.alpha, "fraction of the estimate inside the support");
  cmd_bound->add_option("--beta", bound.beta, "estimate size relative to the support");
  cmd_bound->add_option("--delta", bound.delta, "failure probability");
  cmd_bound->add_option("--zeta", bound.zeta, "margin");
  cmd_bound->add_option("--support", bound.support, "lemma: support (first:K or 1-based list)");
  cmd_bound->add_option("--csv", bound.csv_path, "also write the report as CSV");
  add_weight_flags(cmd_bound, bound.weights);

  WidthFlags width;
  auto* cmd_width = app.add_subcommand("width", "closed-form width bound and Monte-Carlo check");
  cmd_width->add_option("--N", width.n, "signal dimension")->required();
  cmd_width->add_option("--support", width.support, "first:K, all, none or a 1-based list");
  cmd_width->add_option("--empirical", width.empirical, "Monte-Carlo samples");
  cmd_width->add_option("--seed", width.seed, "Monte-Carlo seed");
  add_weight_flags(cmd_width, width.weights);

  SolveFlags solve;
  auto* cmd_solve = app.add_subcommand("solve", "solve one instance from CSV files");
  cmd_solve->add_option("--A", solve.a_path, "matrix CSV (m rows of N values)")->required();
  cmd_solve->add_option("--y", solve.y_path, "measurement vector CSV")->required();
  cmd_solve->add_option("--weights", solve.w_path, "weight vector CSV (default: all ones)");
  cmd_solve->add_option("--eta", solve.eta, "noise level");
  cmd_solve->add_flag("--unweighted", solve.unweighted, "ignore weights and solve plain l1");
  cmd_solve->add_option("--x-out", solve.x_out, "write the minimizer here instead of stdout");
  cmd_solve->add_option("--max-iterations", solve.max_iterations, "iteration cap");
  cmd_solve->add_option("--gap-tolerance", solve.gap_tolerance, "relative duality gap");

  GenFlags gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate a seeded instance");
  cmd_gen->add_option("--N", gen.n, "signal dimension");
  cmd_gen->add_option("--m", gen.m, "measurements");
  cmd_gen->add_option("--s", gen.s, "target weighted sparsity");
  cmd_gen->add_option("--eta", gen.eta, "noise level");
  cmd_gen->add_option("--stddev", gen.stddev, "signal value standard deviation");
  cmd_gen->add_option("--seed", gen.seed, "seed");
  cmd_gen->add_option("--out", gen.out, "output directory")->required();
  add_weight_flags(cmd_gen, gen.weights);

  CampaignFlags phase;
  auto* cmd_phase = app.add_subcommand("phase", "weighted vs. unweighted phase transition");
  add_campaign_flags(cmd_phase, phase);

  CampaignFlags prior;
  auto* cmd_prior = app.add_subcommand("prior", "prior support estimate study");
  add_campaign_flags(cmd_prior, prior);
  cmd_prior->add_option("--m", prior.m, "measurements");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*cmd_bound) return command_bound(bound);
    if (*cmd_width) return command_width(width);
    if (*cmd_solve) return command_solve(solve);
    if (*cmd_gen) return command_gen(gen);
    if (*cmd_phase) return command_phase(phase);
    if (*cmd_prior) return command_prior(prior);
  } catch (const ValidationError& e) {
    std::cerr << "wcs: " << e.what() << "\n";
    return kExitValidation;
  } catch (const csv::FormatError& e) {
    std::cerr << "wcs: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "wcs: " << e.what() << "\n";
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "wcs: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "wcs: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitValidation;
}
