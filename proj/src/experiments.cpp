#include "wcs/experiments.hpp"

#include "wcs/bounds.hpp"
#include "wcs/montecarlo.hpp"
#include "wcs/random.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

namespace wcs::experiments {

namespace {

void require_increasing(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) throw ValidationError(std::string(what) + ": grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw ValidationError(std::string(what) + ": non-finite entry");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ValidationError(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_of(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

// Solves one method and fills the error columns of `rec`.
void solve_into(TrialRecord& rec, const ProblemInstance& inst, const solver::SolverOptions& opts,
                double threshold, bool timed) {
  const auto t0 = std::chrono::steady_clock::now();
  const Vector& x = inst.truth->values();
  try {
    const solver::SolveResult r = rec.method == Method::weighted
                                      ? solver::solve_weighted_l1(inst, opts)
                                      : solver::solve_l1(inst, opts);
    const Vector diff = r.minimizer - x;
    rec.l2_error = diff.norm();
    rec.weighted_l1_error = weighted_l1_norm(diff, inst.weights);
    rec.converged = r.converged;
    rec.iterations = r.iterations;
  } catch (const solver::InfeasibleStall&) {
    rec.l2_error = std::numeric_limits<double>::quiet_NaN();
    rec.weighted_l1_error = std::numeric_limits<double>::quiet_NaN();
    rec.converged = false;
  }
  rec.success = rec.converged && rec.l2_error < threshold;
  if (timed) {
    rec.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
}

std::vector<TrialRecord> paired_records(const TrialRecord& base, const ProblemInstance& inst,
                                        const solver::SolverOptions& opts, double threshold,
                                        bool timed) {
  std::vector<TrialRecord> out;
  for (Method method : {Method::weighted, Method::unweighted}) {
    TrialRecord rec = base;
    rec.method = method;
    solve_into(rec, inst, opts, threshold, timed);
    out.push_back(rec);
  }
  return out;
}

using CellTask = std::function<std::vector<TrialRecord>(std::size_t, std::size_t)>;

// Runs every (row, col) cell on a pool of workers and returns the records in
// (row, col, trial, method) order.
std::vector<TrialRecord> run_cells(std::size_t rows, std::size_t cols, unsigned jobs,
                                   const CampaignHooks& hooks, const CellTask& task) {
  const std::size_t total = rows * cols;
  std::vector<std::optional<std::vector<TrialRecord>>> slots(total);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex hook_mutex;
  std::exception_ptr failure;

  auto worker = [&]() {
    for (;;) {
      if (stop.load()) return;
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      const std::size_t row = idx / cols;
      const std::size_t col = idx % cols;
      try {
        std::optional<std::vector<TrialRecord>> loaded;
        {
          std::lock_guard<std::mutex> lock(hook_mutex);
          if (hooks.should_stop && hooks.should_stop()) {
            stop.store(true);
            return;
          }
          if (hooks.load_cell) loaded = hooks.load_cell(row, col);
        }
        std::vector<TrialRecord> records = loaded ? std::move(*loaded) : task(row, col);
        if (!loaded && hooks.on_cell_done) {
          std::lock_guard<std::mutex> lock(hook_mutex);
          hooks.on_cell_done(row, col, records);
        }
        slots[idx] = std::move(records);
      } catch (...) {
        std::lock_guard<std::mutex> lock(hook_mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), total));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TrialRecord> all;
  std::size_t done = 0;
  for (auto& slot : slots) {
    if (!slot) continue;
    ++done;
    all.insert(all.end(), slot->begin(), slot->end());
  }
  if (done < total) {
    throw Interrupted("campaign stopped after " + std::to_string(done) + " of " +
                      std::to_string(total) + " cells");
  }
  std::stable_sort(all.begin(), all.end(), [](const TrialRecord& a, const TrialRecord& b) {
    return std::tie(a.row, a.col, a.trial, a.method) < std::tie(b.row, b.col, b.trial, b.method);
  });
  return all;
}

}  // namespace

std::string method_name(Method m) { return m == Method::weighted ? "wl1" : "l1"; }

Method method_from_name(const std::string& name) {
  if (name == "wl1") return Method::weighted;
  if (name == "l1") return Method::unweighted;
  throw ValidationError("unknown method '" + name + "'");
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw ValidationError("linspace: count must be >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

void PhaseConfig::validate() const {
  if (n < 1) throw ValidationError("PhaseConfig: N must be >= 1");
  require_increasing(m_over_n, "PhaseConfig.m_over_N");
  require_increasing(s_over_m, "PhaseConfig.s_over_m");
  if (!(m_over_n.front() > 0.0) || m_over_n.back() > 1.0) {
    throw ValidationError("PhaseConfig: m/N values must lie in (0, 1]");
  }
  if (!(s_over_m.front() > 0.0)) throw ValidationError("PhaseConfig: s/m values must be positive");
  if (trials < 1) throw ValidationError("PhaseConfig: trials must be >= 1");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw ValidationError("PhaseConfig: eta must be >= 0");
  if (!(success_threshold > 0.0)) {
    throw ValidationError("PhaseConfig: success_threshold must be positive");
  }
  if (!(value_stddev > 0.0)) throw ValidationError("PhaseConfig: value_stddev must be positive");
  solver.validate();
}

Index PhaseConfig::m_at(std::size_t row) const {
  const double m = std::round(m_over_n.at(row) * static_cast<double>(n));
  return std::max<Index>(1, static_cast<Index>(m));
}

void PriorSupportConfig::validate() const {
  if (n < 1) throw ValidationError("PriorSupportConfig: N must be >= 1");
  if (m < 1 || m > n) throw ValidationError("PriorSupportConfig: m must lie in [1, N]");
  if (alphas.empty()) throw ValidationError("PriorSupportConfig: alpha list is empty");
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw ValidationError("PriorSupportConfig: alpha must lie in [0, 1]");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw ValidationError("PriorSupportConfig: beta must lie in [0, 1]");
  require_increasing(s_over_m_std, "PriorSupportConfig.s_over_m_std");
  if (!(s_over_m_std.front() >= 0.0 && s_over_m_std.back() <= 1.0)) {
    throw ValidationError("PriorSupportConfig: standardized s/m values must lie in [0, 1]");
  }
  if (s_over_m_min && !(*s_over_m_min > 0.0 && std::isfinite(*s_over_m_min))) {
    throw ValidationError("PriorSupportConfig: s_over_m_min must be positive");
  }
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    if (!(s_over_m_hi(a) > s_over_m_lo())) {
      throw ValidationError("PriorSupportConfig: s_over_m_min must lie below the upper end of every alpha row");
    }
  }
  if (trials < 1) throw ValidationError("PriorSupportConfig: trials must be >= 1");
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw ValidationError("PriorSupportConfig: eta must be >= 0");
  }
  if (!(success_threshold > 0.0)) {
    throw ValidationError("PriorSupportConfig: success_threshold must be positive");
  }
  if (!(value_stddev > 0.0)) {
    throw ValidationError("PriorSupportConfig: value_stddev must be positive");
  }
  if (!(infinite_weight > solver.hard_weight_cap)) {
    throw ValidationError("PriorSupportConfig: infinite_weight must exceed the solver's hard_weight_cap");
  }
  solver.validate();
}

double PriorSupportConfig::w2_at(std::size_t alpha_index) const {
  const double a = alphas.at(alpha_index);
  if (a >= 1.0) return infinite_weight;
  return std::min(infinite_weight, 1.0 / (1.0 - a));
}

double PriorSupportConfig::s_over_m_lo() const {
  return s_over_m_min ? *s_over_m_min : 1.0 / (0.05 * static_cast<double>(n));
}

double PriorSupportConfig::s_over_m_hi(std::size_t alpha_index) const {
  const double ab = alphas.at(alpha_index) * beta;
  if (ab >= 1.0) return 1.0;
  const double w2 = w2_at(alpha_index);
  return ab + w2 * w2 * (1.0 - ab);
}

double PriorSupportConfig::s_over_m_at(std::size_t alpha_index, std::size_t col) const {
  const double lo = s_over_m_lo();
  return lo + s_over_m_std.at(col) * (s_over_m_hi(alpha_index) - lo);
}

std::vector<TrialRecord> run_phase_trial(const PhaseConfig& config, std::size_t row,
                                         std::size_t col, std::size_t trial) {
  const std::uint64_t base = trial_base_seed(config.master_seed, row, col, trial);
  const Index m = config.m_at(row);
  const double s = config.s_over_m.at(col) * static_cast<double>(m);

  WeightVector w = signals::gen_weights(config.weights, config.n, stream_seed(base, Stream::weights));
  signals::SignalModelConfig model;
  model.n = config.n;
  model.target_weighted_sparsity = s;
  model.weights = w;
  model.value_stddev = config.value_stddev;
  model.seed = stream_seed(base, Stream::signal);
  signals::SampledSignal sampled = signals::sample_weighted_sparse_signal(model);

  Matrix A = signals::gen_gaussian_matrix(m, config.n, stream_seed(base, Stream::matrix));
  Vector y = signals::add_noise(A * sampled.signal.values(), config.eta,
                                stream_seed(base, Stream::noise));

  TrialRecord rec;
  rec.row = row;
  rec.col = col;
  rec.trial = trial;
  rec.seed = base;
  rec.n = config.n;
  rec.m = m;
  rec.s = s;
  rec.k = sampled.signal.support().cardinality();
  rec.omega_s = weighted_cardinality(sampled.signal.support(), w);
  rec.signal_norm = sampled.signal.values().norm();
  rec.capped = sampled.capped;

  const ProblemInstance inst(std::move(A), std::move(y), std::move(w), config.eta,
                             std::move(sampled.signal), base);
  return paired_records(rec, inst, config.solver, config.success_threshold,
                        config.record_wall_time);
}

PhaseGrid run_phase_transition(const PhaseConfig& config, unsigned jobs,
                               const CampaignHooks& hooks) {
  config.validate();
  const std::size_t rows = config.m_over_n.size();
  const std::size_t cols = config.s_over_m.size();

  PhaseGrid grid;
  grid.n = config.n;
  grid.m_over_n = config.m_over_n;
  for (std::size_t r = 0; r < rows; ++r) grid.m_values.push_back(config.m_at(r));
  grid.s_over_m = config.s_over_m;
  grid.s_over_m_std = standardize_axis(config.s_over_m);

  grid.trials = run_cells(rows, cols, jobs, hooks, [&](std::size_t row, std::size_t col) {
    std::vector<TrialRecord> out;
    for (int t = 0; t < config.trials; ++t) {
      auto pair = run_phase_trial(config, row, col, static_cast<std::size_t>(t));
      out.insert(out.end(), pair.begin(), pair.end());
    }
    return out;
  });
  grid.cells = summarize(grid.trials);
  return grid;
}

PriorSupportDraw draw_prior_support(Index n, Index k, double alpha, double beta, double stddev,
                                    std::uint64_t seed) {
  if (k > n) throw ValidationError("draw_prior_support: k exceeds N");
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw ValidationError("draw_prior_support: alpha and beta must lie in [0, 1]");
  }
  const auto t = static_cast<Index>(std::llround(beta * static_cast<double>(k)));
  const auto overlap = static_cast<Index>(std::llround(alpha * static_cast<double>(t)));
  if (t - overlap > n - k) {
    throw ValidationError("draw_prior_support: not enough indices outside the support");
  }

  Rng rng(seed);
  // Partial Fisher-Yates: the first k entries of perm form S.
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  auto pick = [&](std::size_t from, std::size_t count, std::size_t end) {
    for (std::size_t i = from; i < from + count; ++i) {
      std::uniform_int_distribution<std::size_t> dist(i, end - 1);
      std::swap(perm[i], perm[dist(rng)]);
    }
  };
  pick(0, k, n);
  // S~ takes `overlap` indices from S and the rest from S^c.
  pick(0, overlap, k);
  pick(k, t - overlap, n);

  std::vector<Index> support(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Index> estimate(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(overlap));
  estimate.insert(estimate.end(), perm.begin() + static_cast<std::ptrdiff_t>(k),
                  perm.begin() + static_cast<std::ptrdiff_t>(k + t - overlap));

  SupportSet s(std::move(support), n);
  return {signals::signal_on_support(s, stddev, derive_seed({seed, 0x76616c7565ULL})),
          SupportSet(std::move(estimate), n)};
}

std::vector<TrialRecord> run_prior_trial(const PriorSupportConfig& config, std::size_t alpha_index,
                                         std::size_t col, std::size_t trial) {
  const std::uint64_t base = trial_base_seed(config.master_seed, alpha_index, col, trial);
  const double alpha = config.alphas.at(alpha_index);
  const double w2 = config.w2_at(alpha_index);
  const double s = config.s_over_m_at(alpha_index, col) * static_cast<double>(config.m);
  const std::uint64_t k_wide = bounds::generic_sparsity_from_weighted(s, alpha, config.beta, w2);
  if (k_wide > config.n) throw ValidationError("run_prior_trial: generic sparsity exceeds N");
  const auto k = static_cast<Index>(k_wide);

  PriorSupportDraw draw = draw_prior_support(config.n, k, alpha, config.beta, config.value_stddev,
                                             stream_seed(base, Stream::prior_support));
  WeightVector w = signals::gen_weights(signals::TwoWeights{draw.estimate, w2}, config.n, 0);

  Matrix A = signals::gen_gaussian_matrix(config.m, config.n, stream_seed(base, Stream::matrix));
  Vector y =
      signals::add_noise(A * draw.signal.values(), config.eta, stream_seed(base, Stream::noise));

  TrialRecord rec;
  rec.row = alpha_index;
  rec.col = col;
  rec.trial = trial;
  rec.seed = base;
  rec.n = config.n;
  rec.m = config.m;
  rec.s = s;
  rec.k = k;
  rec.omega_s = weighted_cardinality(draw.signal.support(), w);
  rec.signal_norm = draw.signal.values().norm();

  const ProblemInstance inst(std::move(A), std::move(y), std::move(w), config.eta,
                             std::move(draw.signal), base);
  return paired_records(rec, inst, config.solver, config.success_threshold,
                        config.record_wall_time);
}

PhaseGrid run_prior_support(const PriorSupportConfig& config, unsigned jobs,
                            const CampaignHooks& hooks) {
  config.validate();
  const std::size_t rows = config.alphas.size();
  const std::size_t cols = config.s_over_m_std.size();

  PhaseGrid grid;
  grid.n = config.n;
  grid.m_values.assign(rows, config.m);
  grid.m_over_n.assign(rows, static_cast<double>(config.m) / static_cast<double>(config.n));
  for (std::size_t row = 0; row < rows; ++row) {
    std::vector<double> line(cols);
    for (std::size_t col = 0; col < cols; ++col) line[col] = config.s_over_m_at(row, col);
    grid.s_over_m_rows.push_back(std::move(line));
  }
  grid.s_over_m_std = config.s_over_m_std;
  grid.alphas = config.alphas;
  grid.beta = config.beta;

  grid.trials = run_cells(rows, cols, jobs, hooks, [&](std::size_t row, std::size_t col) {
    std::vector<TrialRecord> out;
    for (int t = 0; t < config.trials; ++t) {
      auto pair = run_prior_trial(config, row, col, static_cast<std::size_t>(t));
      out.insert(out.end(), pair.begin(), pair.end());
    }
    return out;
  });
  grid.cells = summarize(grid.trials);
  return grid;
}

std::vector<double> standardize_axis(const std::vector<double>& values) {
  if (values.empty()) throw ValidationError("standardize_axis: empty input");
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double span = *hi_it - lo;
  std::vector<double> out(values.size(), 0.0);
  if (!(span > 0.0)) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / span;
  return out;
}

std::vector<CellSummary> summarize(const std::vector<TrialRecord>& records) {
  std::map<std::tuple<std::size_t, std::size_t, Method>, std::vector<const TrialRecord*>> groups;
  for (const auto& r : records) groups[{r.row, r.col, r.method}].push_back(&r);

  std::vector<CellSummary> out;
  out.reserve(groups.size());
  for (const auto& [key, recs] : groups) {
    CellSummary c;
    std::tie(c.row, c.col, c.method) = key;
    c.m = recs.front()->m;
    c.s = recs.front()->s;
    c.trials = static_cast<int>(recs.size());
    double k_sum = 0.0;
    std::vector<double> omegas;
    for (const TrialRecord* r : recs) {
      if (r->success) ++c.successes;
      if (!r->converged) ++c.unconverged;
      k_sum += static_cast<double>(r->k);
      c.max_k = std::max(c.max_k, r->k);
      omegas.push_back(r->omega_s);
    }
    const double n = static_cast<double>(recs.size());
    c.prob = static_cast<double>(c.successes) / n;
    c.mean_k = k_sum / n;
    c.mean_omega_s = mean_of(omegas);
    if (omegas.size() > 1) {
      double ss = 0.0;
      for (double v : omegas) ss += (v - c.mean_omega_s) * (v - c.mean_omega_s);
      c.stderr_omega_s = std::sqrt(ss / (n - 1.0) / n);
    }
    out.push_back(c);
  }
  return out;
}

const CellSummary& PhaseGrid::cell(std::size_t row, std::size_t col, Method method) const {
  // cells are sorted by (row, col, method)
  const auto key = std::make_tuple(row, col, method);
  const auto it = std::lower_bound(cells.begin(), cells.end(), key,
                                   [](const CellSummary& c, const auto& k) {
                                     return std::make_tuple(c.row, c.col, c.method) < k;
                                   });
  if (it == cells.end() || it->row != row || it->col != col || it->method != method) {
    throw ValidationError("PhaseGrid::cell: no such cell");
  }
  return *it;
}

std::vector<ErrorRow> compute_relative_errors(const PhaseGrid& grid) {
  std::map<std::tuple<std::size_t, std::size_t, Method>, std::vector<const TrialRecord*>> groups;
  for (const auto& r : grid.trials) groups[{r.row, r.col, r.method}].push_back(&r);

  std::vector<ErrorRow> out;
  for (const auto& [key, recs] : groups) {
    ErrorRow e;
    std::tie(e.row, e.col, e.method) = key;
    e.n = grid.n;
    e.m = recs.front()->m;
    e.s = recs.front()->s;
    e.s_over_m_std = e.col < grid.s_over_m_std.size() ? grid.s_over_m_std[e.col] : 0.0;
    if (e.row < grid.alphas.size()) e.alpha = grid.alphas[e.row];
    e.beta = grid.beta;
    std::vector<double> xi_l2;
    std::vector<double> xi_w1;
    for (const TrialRecord* r : recs) {
      if (!(r->signal_norm > 0.0)) {
        ++e.skipped;
        continue;
      }
      xi_l2.push_back(r->l2_error / r->signal_norm);
      xi_w1.push_back(r->weighted_l1_error / r->signal_norm);
    }
    e.used = static_cast<int>(xi_l2.size());
    if (xi_l2.empty()) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      e.mean_xi_l2 = e.median_xi_l2 = e.mean_xi_w1 = e.median_xi_w1 = nan;
    } else {
      e.mean_xi_l2 = mean_of(xi_l2);
      e.median_xi_l2 = median_of(xi_l2);
      e.mean_xi_w1 = mean_of(xi_w1);
      e.median_xi_w1 = median_of(xi_w1);
    }
    out.push_back(e);
  }
  return out;
}

void AuditConfig::validate() const {
  if (n < 1 || m < 1) throw ValidationError("AuditConfig: N and m must be >= 1");
  if (k > n) throw ValidationError("AuditConfig: k exceeds N");
  if (trials < 1) throw ValidationError("AuditConfig: trials must be >= 1");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw ValidationError("AuditConfig: eta must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("AuditConfig: delta must lie in (0, 1)");
  if (!(value_stddev > 0.0)) throw ValidationError("AuditConfig: value_stddev must be positive");
  solver.validate();
}

int AuditReport::both_hold() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const AuditTrial& t) {
    return t.l2_holds && t.w1_holds;
  }));
}

AuditReport run_error_bound_audit(const AuditConfig& config) {
  config.validate();
  AuditReport report;
  const WeightVector w = signals::gen_weights(config.weights, config.n,
                                              derive_seed({config.master_seed, 0x77ULL}));

  std::vector<Index> order(config.n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return w[a] < w[b]; });
  order.resize(config.k);
  report.support = SupportSet(std::move(order), config.n);
  report.s = weighted_cardinality(report.support, w);
  report.width = bounds::width_bound(w, report.support).bound;
  report.zeta = montecarlo::zeta_lower_bound(config.m, config.delta, report.width);
  if (!(report.zeta > 0.0)) {
    throw ValidationError("run_error_bound_audit: zeta is not positive for this configuration");
  }
  report.l2_bound = 2.0 * config.eta / report.zeta;
  report.w1_bound = 4.0 * std::sqrt(report.s) * config.eta / report.zeta;

  for (int t = 0; t < config.trials; ++t) {
    const std::uint64_t base = trial_base_seed(config.master_seed, 0, 0, static_cast<std::uint64_t>(t));
    SparseSignal x = signals::signal_on_support(report.support, config.value_stddev,
                                                stream_seed(base, Stream::signal));
    Matrix A = signals::gen_gaussian_matrix(config.m, config.n, stream_seed(base, Stream::matrix));
    Vector y = signals::add_noise(A * x.values(), config.eta, stream_seed(base, Stream::noise));
    const Vector truth = x.values();
    const ProblemInstance inst(std::move(A), std::move(y), w, config.eta, std::move(x), base);

    AuditTrial at;
    at.seed = base;
    const solver::SolveResult r = solver::solve_weighted_l1(inst, config.solver);
    const Vector diff = r.minimizer - truth;
    at.l2_error = diff.norm();
    at.weighted_l1_error = weighted_l1_norm(diff, w);
    at.converged = r.converged;
    at.l2_holds = at.converged && at.l2_error <= report.l2_bound;
    at.w1_holds = at.converged && at.weighted_l1_error <= report.w1_bound;
    report.trials.push_back(at);
  }
  return report;
}

}  // namespace wcs::experiments
