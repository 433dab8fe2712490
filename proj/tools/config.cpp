#include "config.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace wcs::cli {

using nlohmann::json;

namespace {

// Strict view of one JSON object: every key must be consumed before finish().
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ValidationError(path_ + ": expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  const json* take(const std::string& key) {
    seen_.insert(key);
    const auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) throw ValidationError(where(key) + ": expected a number");
      out = v->get<double>();
    }
  }

  void optional_number(const std::string& key, std::optional<double>& out) {
    if (const json* v = take(key)) {
      if (v->is_null()) {
        out.reset();
        return;
      }
      if (!v->is_number()) throw ValidationError(where(key) + ": expected a number or null");
      out = v->get<double>();
    }
  }

  template <class Int>
  void integer(const std::string& key, Int& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_integer()) throw ValidationError(where(key) + ": expected an integer");
      const auto raw = v->get<long long>();
      if (raw < 0) throw ValidationError(where(key) + ": must be >= 0");
      out = static_cast<Int>(raw);
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = take(key)) {
      if (!v->is_boolean()) throw ValidationError(where(key) + ": expected true or false");
      out = v->get<bool>();
    }
  }

  void string(const std::string& key, std::optional<std::string>& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) throw ValidationError(where(key) + ": expected a string");
      out = v->get<std::string>();
    }
  }

  void grid(const std::string& key, std::vector<double>& out) {
    const json* v = take(key);
    if (!v) return;
    if (v->is_array()) {
      std::vector<double> values;
      for (const auto& e : *v) {
        if (!e.is_number()) throw ValidationError(where(key) + ": grid entries must be numbers");
        values.push_back(e.get<double>());
      }
      out = std::move(values);
      return;
    }
    if (v->is_object()) {
      Section range(*v, where(key));
      const json* ls = range.take("linspace");
      range.finish();
      if (!ls || !ls->is_array() || ls->size() != 3 || !(*ls)[0].is_number() ||
          !(*ls)[1].is_number() || !(*ls)[2].is_number_integer() || (*ls)[2].get<long long>() < 1) {
        throw ValidationError(where(key) + ": expected {\"linspace\": [lo, hi, count]}");
      }
      out = experiments::linspace((*ls)[0].get<double>(), (*ls)[1].get<double>(),
                                  static_cast<std::size_t>((*ls)[2].get<long long>()));
      return;
    }
    throw ValidationError(where(key) + ": expected an array or a linspace object");
  }

  std::string where(const std::string& key) const { return path_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ValidationError(path_ + ": unknown key '" + it.key() + "'");
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

signals::WeightScheme parse_scheme(const json& j, const std::string& path) {
  Section sec(j, path);
  std::optional<std::string> name;
  sec.string("scheme", name);
  if (!name) throw ValidationError(path + ": missing 'scheme'");
  signals::WeightScheme out;
  if (*name == "uniform") {
    out = signals::UniformWeights{};
  } else if (*name == "polynomial") {
    signals::PolynomialWeights p;
    sec.number("theta", p.theta);
    if (!(p.theta >= 0.0)) throw ValidationError(path + ".theta: must be >= 0");
    out = p;
  } else if (*name == "random") {
    signals::RandomUniformWeights r;
    sec.number("low", r.low);
    sec.number("high", r.high);
    if (!(r.low > 0.0 && r.high >= r.low)) {
      throw ValidationError(path + ": random weights need 0 < low <= high");
    }
    out = r;
  } else {
    throw ValidationError(path + ".scheme: expected uniform, polynomial or random, got '" +
                          *name + "'");
  }
  sec.finish();
  return out;
}

void parse_solver(const json& j, solver::SolverOptions& o) {
  Section sec(j, "solver");
  sec.integer("max_iterations", o.max_iterations);
  sec.number("primal_tolerance", o.primal_tolerance);
  sec.number("dual_tolerance", o.dual_tolerance);
  sec.number("penalty_parameter", o.penalty_parameter);
  sec.boolean("penalty_adaptation", o.penalty_adaptation);
  sec.number("gap_tolerance", o.gap_tolerance);
  sec.boolean("polish", o.polish);
  sec.number("hard_weight_cap", o.hard_weight_cap);
  sec.finish();
}

void parse_phase(const json& j, experiments::PhaseConfig& c) {
  Section sec(j, "phase");
  sec.integer("N", c.n);
  sec.grid("m_over_N", c.m_over_n);
  sec.grid("s_over_m", c.s_over_m);
  sec.integer("trials", c.trials);
  sec.number("eta", c.eta);
  sec.number("success_threshold", c.success_threshold);
  if (const json* w = sec.take("weights")) c.weights = parse_scheme(*w, "phase.weights");
  sec.number("value_stddev", c.value_stddev);
  sec.boolean("record_wall_time", c.record_wall_time);
  sec.finish();
}

void parse_prior(const json& j, experiments::PriorSupportConfig& c) {
  Section sec(j, "prior");
  sec.integer("N", c.n);
  sec.integer("m", c.m);
  sec.grid("alphas", c.alphas);
  sec.number("beta", c.beta);
  sec.grid("s_over_m_std", c.s_over_m_std);
  sec.optional_number("s_over_m_min", c.s_over_m_min);
  sec.integer("trials", c.trials);
  sec.number("eta", c.eta);
  sec.number("success_threshold", c.success_threshold);
  sec.number("value_stddev", c.value_stddev);
  sec.number("infinite_weight", c.infinite_weight);
  sec.boolean("record_wall_time", c.record_wall_time);
  sec.finish();
}

}  // namespace

RunConfig default_config() {
  RunConfig c;
  c.phase.n = 100;
  c.phase.m_over_n = experiments::linspace(0.05, 0.5, 6);
  c.phase.s_over_m = experiments::linspace(0.2, 2.5, 6);
  c.phase.trials = 20;
  return c;
}

RunConfig parse_config(const json& doc) {
  RunConfig c = default_config();
  Section top(doc, "config");
  top.string("output_dir", c.output_dir);
  top.integer("seed", c.seed);
  top.integer("jobs", c.jobs);
  if (const json* s = top.take("solver")) parse_solver(*s, c.solver);
  if (const json* p = top.take("phase")) parse_phase(*p, c.phase);
  if (const json* p = top.take("prior")) parse_prior(*p, c.prior);
  top.finish();
  if (c.jobs < 1) throw ValidationError("config.jobs: must be >= 1");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config file '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

void propagate(RunConfig& config) {
  config.phase.solver = config.solver;
  config.phase.master_seed = config.seed;
  config.prior.solver = config.solver;
  config.prior.master_seed = config.seed;
}

json solver_to_json(const solver::SolverOptions& o) {
  return json{{"max_iterations", o.max_iterations},
              {"primal_tolerance", o.primal_tolerance},
              {"dual_tolerance", o.dual_tolerance},
              {"penalty_parameter", o.penalty_parameter},
              {"penalty_adaptation", o.penalty_adaptation},
              {"gap_tolerance", o.gap_tolerance},
              {"polish", o.polish},
              {"hard_weight_cap", o.hard_weight_cap}};
}

json scheme_to_json(const signals::WeightScheme& scheme) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, signals::UniformWeights>) {
          return json{{"scheme", "uniform"}};
        } else if constexpr (std::is_same_v<T, signals::PolynomialWeights>) {
          return json{{"scheme", "polynomial"}, {"theta", s.theta}};
        } else if constexpr (std::is_same_v<T, signals::RandomUniformWeights>) {
          return json{{"scheme", "random"}, {"low", s.low}, {"high", s.high}};
        } else {
          return json{{"scheme", "two-weight"}, {"w2", s.w2},
                      {"estimate", s.estimate.to_one_based()}};
        }
      },
      scheme);
}

json phase_to_json(const experiments::PhaseConfig& c) {
  return json{{"N", c.n},
              {"m_over_N", c.m_over_n},
              {"s_over_m", c.s_over_m},
              {"trials", c.trials},
              {"eta", c.eta},
              {"success_threshold", c.success_threshold},
              {"weights", scheme_to_json(c.weights)},
              {"value_stddev", c.value_stddev},
              {"record_wall_time", c.record_wall_time},
              {"master_seed", c.master_seed},
              {"solver", solver_to_json(c.solver)}};
}

json prior_to_json(const experiments::PriorSupportConfig& c) {
  return json{{"N", c.n},
              {"m", c.m},
              {"alphas", c.alphas},
              {"beta", c.beta},
              {"s_over_m_std", c.s_over_m_std},
              {"s_over_m_min", c.s_over_m_lo()},
              {"trials", c.trials},
              {"eta", c.eta},
              {"success_threshold", c.success_threshold},
              {"value_stddev", c.value_stddev},
              {"infinite_weight", c.infinite_weight},
              {"record_wall_time", c.record_wall_time},
              {"master_seed", c.master_seed},
              {"solver", solver_to_json(c.solver)}};
}

}  // namespace wcs::cli
