#pragma once

// Recovery campaigns: weighted vs. unweighted phase transitions, prior support
// estimates, relative-error tables and the noisy error-bound audit.
//
// Every trial draws its randomness from trial_base_seed(master, row, col, trial),
// so results do not depend on the number of workers or the order cells finish.

#include "wcs/core.hpp"
#include "wcs/signals.hpp"
#include "wcs/solver.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcs::experiments {

enum class Method { weighted, unweighted };

/// "wl1" or "l1"; the inverse throws ValidationError.
std::string method_name(Method m);
Method method_from_name(const std::string& name);

/// Evenly spaced grid from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct PhaseConfig {
  Index n = 100;
  std::vector<double> m_over_n;
  std::vector<double> s_over_m;
  int trials = 20;
  double eta = 1e-6;
  double success_threshold = 1e-5;
  signals::WeightScheme weights = signals::PolynomialWeights{0.2};
  double value_stddev = 1.0;
  solver::SolverOptions solver;
  std::uint64_t master_seed = 0;
  bool record_wall_time = false;

  /// Grids nonempty and strictly increasing, m/N in (0, 1], trials >= 1.
  void validate() const;

  /// round(m/N * N), at least 1.
  Index m_at(std::size_t row) const;
};

struct PriorSupportConfig {
  Index n = 100;
  Index m = 25;
  std::vector<double> alphas{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  double beta = 1.0;
  /// Column positions on the standardized axis, increasing within [0, 1].
  /// Row alpha spans s/m from s_over_m_min to alpha beta + w2^2 (1 - alpha beta).
  std::vector<double> s_over_m_std{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  /// Defaults to 1 / (0.05 N) when unset.
  std::optional<double> s_over_m_min;
  int trials = 20;
  double eta = 1e-6;
  double success_threshold = 1e-5;
  double value_stddev = 1.0;
  /// Stand-in for w2 = 1/(1 - alpha) at alpha = 1; far above the solver's
  /// hard_weight_cap so those coordinates are eliminated.
  double infinite_weight = 1e12;
  solver::SolverOptions solver;
  std::uint64_t master_seed = 0;
  bool record_wall_time = false;

  void validate() const;

  /// 1 / (1 - alpha), or infinite_weight at alpha = 1.
  double w2_at(std::size_t alpha_index) const;

  double s_over_m_lo() const;
  /// alpha beta + w2^2 (1 - alpha beta); the w2 term is dropped at alpha beta = 1.
  double s_over_m_hi(std::size_t alpha_index) const;
  double s_over_m_at(std::size_t alpha_index, std::size_t col) const;
};

struct TrialRecord {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t trial = 0;
  Method method = Method::weighted;
  std::uint64_t seed = 0;  // trial_base_seed of the trial
  Index n = 0;
  Index m = 0;
  double s = 0.0;          // prescribed weighted sparsity
  Index k = 0;             // realized |S|
  double omega_s = 0.0;    // realized omega(S)
  double signal_norm = 0.0;
  double l2_error = 0.0;
  double weighted_l1_error = 0.0;
  bool success = false;
  bool converged = false;
  bool capped = false;     // some inclusion probability was clipped at 1
  int iterations = 0;
  double wall_time = 0.0;  // seconds; 0 unless record_wall_time is set
};

struct CellSummary {
  std::size_t row = 0;
  std::size_t col = 0;
  Method method = Method::weighted;
  Index m = 0;
  double s = 0.0;
  int trials = 0;
  int successes = 0;
  int unconverged = 0;
  double prob = 0.0;
  double mean_k = 0.0;
  Index max_k = 0;
  double mean_omega_s = 0.0;
  double stderr_omega_s = 0.0;
};

/// Rows are m values for phase campaigns and alpha values for prior-support
/// campaigns.
struct PhaseGrid {
  Index n = 0;
  std::vector<Index> m_values;   // per row
  std::vector<double> m_over_n;  // per row
  std::vector<double> s_over_m;  // per column, raw; phase campaigns only
  std::vector<std::vector<double>> s_over_m_rows;  // per row and column; prior-support only
  std::vector<double> s_over_m_std;
  std::vector<double> alphas;     // per row; prior-support grids only
  std::optional<double> beta;
  std::vector<TrialRecord> trials;  // sorted by (row, col, trial, method)
  std::vector<CellSummary> cells;   // sorted by (row, col, method)

  std::size_t rows() const { return m_values.size(); }
  std::size_t cols() const { return s_over_m_std.size(); }
  double s_over_m_at(std::size_t row, std::size_t col) const {
    return s_over_m_rows.empty() ? s_over_m.at(col) : s_over_m_rows.at(row).at(col);
  }
  const CellSummary& cell(std::size_t row, std::size_t col, Method method) const;
  double prob(std::size_t row, std::size_t col, Method method) const {
    return cell(row, col, method).prob;
  }
};

/// Thrown when should_stop() asked the campaign to end early. Completed cells
/// were already reported through on_cell_done.
class Interrupted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checkpoint and cancellation hooks. Hooks may be called from worker
/// threads, one call at a time.
struct CampaignHooks {
  std::function<bool()> should_stop;
  std::function<std::optional<std::vector<TrialRecord>>(std::size_t row, std::size_t col)>
      load_cell;
  std::function<void(std::size_t row, std::size_t col, const std::vector<TrialRecord>&)>
      on_cell_done;
};

/// One trial of a phase campaign: both methods on the same signal, matrix and noise.
std::vector<TrialRecord> run_phase_trial(const PhaseConfig& config, std::size_t row,
                                         std::size_t col, std::size_t trial);

PhaseGrid run_phase_transition(const PhaseConfig& config, unsigned jobs = 1,
                               const CampaignHooks& hooks = {});

/// Signal with prescribed |S| = k and an estimate with |S~| = round(beta k) and
/// |S cap S~| = round(alpha |S~|), each drawn uniformly.
struct PriorSupportDraw {
  SparseSignal signal;
  SupportSet estimate;
};
PriorSupportDraw draw_prior_support(Index n, Index k, double alpha, double beta, double stddev,
                                    std::uint64_t seed);

std::vector<TrialRecord> run_prior_trial(const PriorSupportConfig& config, std::size_t alpha_index,
                                         std::size_t col, std::size_t trial);

/// One row per alpha, all at the same m.
PhaseGrid run_prior_support(const PriorSupportConfig& config, unsigned jobs = 1,
                            const CampaignHooks& hooks = {});

/// Affine map of the values onto [0, 1]; a single distinct value maps to 0.
std::vector<double> standardize_axis(const std::vector<double>& values);

/// Groups records into per-cell summaries sorted by (row, col, method).
std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records);

struct ErrorRow {
  std::size_t row = 0;
  std::size_t col = 0;
  Method method = Method::weighted;
  Index n = 0;
  Index m = 0;
  std::optional<double> alpha;
  std::optional<double> beta;
  double s = 0.0;
  double s_over_m_std = 0.0;
  int used = 0;
  int skipped = 0;  // records with a zero signal
  double mean_xi_l2 = 0.0;
  double median_xi_l2 = 0.0;
  double mean_xi_w1 = 0.0;
  double median_xi_w1 = 0.0;
};

/// Relative errors ||x^ - x||_2 / ||x||_2 and ||x^ - x||_{w,1} / ||x||_2 per
/// cell and method. Cells where every record has a zero signal report NaN.
std::vector<ErrorRow> compute_relative_errors(const PhaseGrid& grid);

struct AuditConfig {
  Index n = 100;
  Index m = 80;
  Index k = 3;  // the support is the k indices with the smallest weights
  signals::WeightScheme weights = signals::PolynomialWeights{0.2};
  int trials = 100;
  double eta = 1e-3;
  double delta = 0.1;
  double value_stddev = 1.0;
  solver::SolverOptions solver;
  std::uint64_t master_seed = 0;

  void validate() const;
};

struct AuditTrial {
  std::uint64_t seed = 0;
  double l2_error = 0.0;
  double weighted_l1_error = 0.0;
  bool converged = false;
  bool l2_holds = false;
  bool w1_holds = false;
};

struct AuditReport {
  SupportSet support;
  double s = 0.0;      // omega(S)
  double width = 0.0;  // closed-form width bound
  double zeta = 0.0;
  double l2_bound = 0.0;  // 2 eta / zeta
  double w1_bound = 0.0;  // 4 sqrt(s) eta / zeta
  std::vector<AuditTrial> trials;

  int both_hold() const;
};

/// Noisy recovery on a fixed support, comparing errors with the bounds
/// 2 eta / zeta and 4 sqrt(s) eta / zeta. Throws ValidationError when zeta <= 0.
AuditReport run_error_bound_audit(const AuditConfig& config);

}  // namespace wcs::experiments
