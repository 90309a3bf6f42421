#pragma once

// Run configuration (strict JSON) and the subcommand runner behind the
// `abelmix` executable. Kept in the library so the runner can be exercised
// without spawning processes.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelmix/bounds.hpp"
#include "abelmix/corpus.hpp"
#include "abelmix/families.hpp"
#include "abelmix/mixing.hpp"
#include "abelmix/montecarlo.hpp"
#include "abelmix/spectral.hpp"

namespace abelmix {

struct RunConfig {
  std::optional<WalkDescription> walk;
  std::optional<FamilyPreset> family;
  bool corpus = false;
  Epsilon epsilon;
  std::optional<std::int64_t> t_cap;
  std::optional<double> kappa;
  std::optional<double> floor;          // mix: stop once d < floor
  std::vector<double> levels;           // thresholds: distance levels
  std::vector<std::int64_t> times;      // bounds-check: sandwich / chain times
  std::optional<SimConfig> simulate;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

enum class Subcommand { spectrum, mix, thresholds, bounds_check, family, simulate };

inline Subcommand subcommand_from_string(const std::string& s) {
  if (s == "spectrum") return Subcommand::spectrum;
  if (s == "mix") return Subcommand::mix;
  if (s == "thresholds") return Subcommand::thresholds;
  if (s == "bounds-check") return Subcommand::bounds_check;
  if (s == "family") return Subcommand::family;
  if (s == "simulate") return Subcommand::simulate;
  throw Error(ErrorKind::config, "unknown subcommand '" + s + "'");
}

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw Error(ErrorKind::config, where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw Error(ErrorKind::config, where + "." + key + ": unknown field");
  }
}

inline const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) throw Error(ErrorKind::config, where + "." + key + ": missing required field");
  return obj.at(key);
}

inline std::int64_t as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw Error(ErrorKind::config, field + ": expected an integer");
  return v.get<std::int64_t>();
}

inline double as_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw Error(ErrorKind::config, field + ": expected a number");
  return v.get<double>();
}

inline std::vector<std::int64_t> as_int_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw Error(ErrorKind::config, field + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& e : v) out.push_back(as_int(e, field));
  return out;
}

inline WalkDescription parse_walk(const json& j, const std::string& where) {
  reject_unknown(j, where, {"moduli", "generators", "require_type"});
  WalkDescription d;
  d.moduli = as_int_list(require(j, where, "moduli"), where + ".moduli");
  const auto& gens = require(j, where, "generators");
  if (!gens.is_array()) throw Error(ErrorKind::config, where + ".generators: expected an array of arrays");
  for (const auto& g : gens) d.generators.push_back(as_int_list(g, where + ".generators"));
  if (j.contains("require_type")) {
    if (!j["require_type"].is_boolean()) throw Error(ErrorKind::config, where + ".require_type: expected a boolean");
    d.require_type = j["require_type"].get<bool>();
  }
  return d;
}

inline json walk_to_json(const WalkDescription& d) {
  return json{{"moduli", d.moduli}, {"generators", d.generators}, {"require_type", d.require_type}};
}

inline FamilyPreset parse_family(const json& j) {
  reject_unknown(j, "family", {"kind", "sizes", "pair_rule", "instances"});
  FamilyPreset p;
  const auto& kind = require(j, "family", "kind");
  if (!kind.is_string()) throw Error(ErrorKind::config, "family.kind: expected a string");
  try {
    p.kind = family_kind_from_string(kind.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::config, std::string("family.kind: ") + e.what());
  }
  if (p.kind == FamilyKind::custom) {
    const auto& inst = require(j, "family", "instances");
    if (!inst.is_array()) throw Error(ErrorKind::config, "family.instances: expected an array");
    for (const auto& w : inst) p.instances.push_back(parse_walk(w, "family.instances[]"));
  } else {
    p.sizes = as_int_list(require(j, "family", "sizes"), "family.sizes");
  }
  if (j.contains("sizes") && p.kind == FamilyKind::custom) p.sizes = as_int_list(j["sizes"], "family.sizes");
  if (j.contains("pair_rule")) {
    if (!j["pair_rule"].is_string()) throw Error(ErrorKind::config, "family.pair_rule: expected a string");
    p.pair_rule = j["pair_rule"].get<std::string>();
  }
  if (p.kind == FamilyKind::cycle_pair && p.pair_rule.empty()) {
    throw Error(ErrorKind::config, "family.pair_rule: missing required field for cycle_pair");
  }
  return p;
}

inline json family_to_json(const FamilyPreset& p) {
  json j{{"kind", to_string(p.kind)}, {"sizes", p.sizes}};
  if (!p.pair_rule.empty()) j["pair_rule"] = p.pair_rule;
  if (p.kind == FamilyKind::custom) {
    json inst = json::array();
    for (const auto& w : p.instances) inst.push_back(walk_to_json(w));
    j["instances"] = inst;
  }
  return j;
}

}  // namespace detail

/// Parses and validates a JSON run configuration. Unknown fields are errors.
inline RunConfig parse_config(const nlohmann::json& j) {
  using detail::as_int;
  using detail::as_number;
  detail::reject_unknown(j, "config", {"walk", "family", "corpus", "epsilon", "t_cap", "kappa", "floor", "levels",
                                       "times", "simulate"});
  RunConfig cfg;
  if (j.contains("walk")) cfg.walk = detail::parse_walk(j["walk"], "walk");
  if (j.contains("family")) cfg.family = detail::parse_family(j["family"]);
  if (j.contains("corpus")) {
    if (!j["corpus"].is_boolean()) throw Error(ErrorKind::config, "corpus: expected a boolean");
    cfg.corpus = j["corpus"].get<bool>();
  }
  if (j.contains("epsilon")) {
    try {
      cfg.epsilon = epsilon_from_json(j["epsilon"]);
    } catch (const Error&) {
      throw Error(ErrorKind::config, "epsilon: expected a number or {\"exp\": x}");
    }
    if (!(cfg.epsilon.value > 0.0) || !(cfg.epsilon.value < 1.0)) {
      throw Error(ErrorKind::config, "epsilon: must lie in (0, 1)");
    }
  }
  if (j.contains("t_cap")) {
    cfg.t_cap = as_int(j["t_cap"], "t_cap");
    if (*cfg.t_cap < 1) throw Error(ErrorKind::config, "t_cap: must be positive");
  }
  if (j.contains("kappa")) {
    cfg.kappa = as_number(j["kappa"], "kappa");
    if (!(*cfg.kappa > 0.0)) throw Error(ErrorKind::config, "kappa: must be positive");
  }
  if (j.contains("floor")) {
    cfg.floor = as_number(j["floor"], "floor");
    if (!(*cfg.floor >= 0.0)) throw Error(ErrorKind::config, "floor: must be non-negative");
  }
  if (j.contains("levels")) {
    if (!j["levels"].is_array()) throw Error(ErrorKind::config, "levels: expected an array of numbers");
    for (const auto& v : j["levels"]) cfg.levels.push_back(as_number(v, "levels"));
  }
  if (j.contains("times")) {
    cfg.times = detail::as_int_list(j["times"], "times");
    for (auto t : cfg.times) {
      if (t < 0) throw Error(ErrorKind::config, "times: entries must be non-negative");
    }
  }
  if (j.contains("simulate")) {
    const auto& s = j["simulate"];
    detail::reject_unknown(s, "simulate", {"t", "samples", "seed"});
    SimConfig sc;
    sc.t = as_int(detail::require(s, "simulate", "t"), "simulate.t");
    sc.samples = as_int(detail::require(s, "simulate", "samples"), "simulate.samples");
    const auto& seed = detail::require(s, "simulate", "seed");
    if (!seed.is_number_integer()) throw Error(ErrorKind::config, "simulate.seed: expected an integer");
    sc.seed = seed.is_number_unsigned() ? seed.get<std::uint64_t>()
                                        : static_cast<std::uint64_t>(seed.get<std::int64_t>());
    if (sc.t < 0) throw Error(ErrorKind::config, "simulate.t: must be non-negative");
    if (sc.samples < 1) throw Error(ErrorKind::config, "simulate.samples: must be positive");
    cfg.simulate = sc;
  }
  return cfg;
}

inline RunConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::config, std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

inline RunConfig parse_config(const char* text) { return parse_config(std::string(text)); }

inline nlohmann::json config_to_json(const RunConfig& cfg) {
  nlohmann::json j = nlohmann::json::object();
  if (cfg.walk) j["walk"] = detail::walk_to_json(*cfg.walk);
  if (cfg.family) j["family"] = detail::family_to_json(*cfg.family);
  if (cfg.corpus) j["corpus"] = true;
  j["epsilon"] = to_json(cfg.epsilon);
  if (cfg.t_cap) j["t_cap"] = *cfg.t_cap;
  if (cfg.kappa) j["kappa"] = *cfg.kappa;
  if (cfg.floor) j["floor"] = *cfg.floor;
  if (!cfg.levels.empty()) j["levels"] = cfg.levels;
  if (!cfg.times.empty()) j["times"] = cfg.times;
  if (cfg.simulate) {
    j["simulate"] = {{"t", cfg.simulate->t}, {"samples", cfg.simulate->samples}, {"seed", cfg.simulate->seed}};
  }
  return j;
}

/// One row of the bounds harness. Informational rows never affect the exit status.
struct CheckRow {
  std::string check;
  std::string instance;
  double lhs;
  double rhs;
  bool holds;
  bool informational = false;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void add_global_checks(std::vector<CheckRow>& rows) {
  using std::numbers::pi;
  // Trigonometric comparisons on 4001-point grids; report the worst slack.
  auto worst_trig = [](double lo, double hi, bool upper) {
    CheckRow row{upper ? "trig_upper" : "trig_lower", "grid", 0.0, 0.0, true};
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 4000; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / 4000.0;
      const auto b = trig_bounds(x);
      const double slack = upper ? b.upper_slack() : b.lower_slack();
      if (slack < worst) {
        worst = slack;
        row.lhs = upper ? b.cos_x : b.lower;
        row.rhs = upper ? b.upper : b.cos_x;
      }
    }
    row.holds = worst >= -1e-15;
    return row;
  };
  rows.push_back(worst_trig(-1.5 * pi, 1.5 * pi, true));
  rows.push_back(worst_trig(-1.0, 1.0, false));

  std::mt19937_64 rng(20240607);
  auto pairs = [&](double half_width, bool right) {
    std::uniform_real_distribution<double> u(-half_width, half_width);
    CheckRow row{right ? "concavity_right" : "concavity_left", "random", 0.0, 0.0, true};
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100000; ++i) {
      const double a = u(rng);
      const double b = u(rng);
      const auto p = concavity_pair(a, b);
      const double lhs = right ? p.mean : p.geometric;
      const double rhs = right ? p.midpoint : p.mean;
      if (rhs - lhs < worst) {
        worst = rhs - lhs;
        row.lhs = lhs;
        row.rhs = rhs;
      }
      row.holds = row.holds && (right ? p.right_ok.value_or(false) : p.left_ok);
    }
    return row;
  };
  rows.push_back(pairs(10.0, false));
  rows.push_back(pairs(std::numbers::sqrt2 / 2.0, true));
}

inline void add_walk_checks(std::vector<CheckRow>& rows, const WalkSpec& walk, const RunConfig& cfg) {
  const DistanceEvaluator eval(walk);
  const auto& spec = eval.spectrum_values();
  const std::string name = walk.describe();
  const std::vector<std::int64_t> times = cfg.times.empty() ? std::vector<std::int64_t>{1, 10, 100, 500} : cfg.times;

  for (auto t : times) {
    const auto s = lemma2_sandwich(eval, t);
    const std::string at = "@" + std::to_string(t);
    rows.push_back({"sandwich_lower" + at, name, s.lower, s.exact_sq, s.lower <= s.exact_sq + kSlack});
    rows.push_back({"sandwich_upper" + at, name, s.exact_sq, s.upper, s.exact_sq <= s.upper + kSlack});
  }

  CheckRow eig{"eigen_exp", name, 0.0, 0.0, true};
  double worst = std::numeric_limits<double>::infinity();
  for (std::int64_t k = 1; k < walk.group().order(); ++k) {
    const auto e = eigen_exp_bound(walk, k);
    if (e.bound - e.lambda < worst) {
      worst = e.bound - e.lambda;
      eig.lhs = e.lambda;
      eig.rhs = e.bound;
    }
    eig.holds = eig.holds && e.holds;
  }
  rows.push_back(eig);

  if (!walk.group().is_cyclic()) return;

  const auto sm = short_mode(walk);
  rows.push_back({"pigeonhole", name, sm.linf, 1.0 / (2.0 * std::numbers::pi), sm.within_pigeonhole, true});
  if (sm.within_pigeonhole) {
    const auto lb = lambda_lower_bound(walk, spec);
    rows.push_back({"lambda_lower", name, lb.lambda_m_abs, lb.bound, lb.holds});
  }

  std::optional<double> kappa = cfg.kappa;
  if (!kappa && walk.rank() == 1) kappa = 2.0;
  if (!kappa) return;

  const auto lat = walk_lattice(walk);
  for (double scale : {0.25, 1.0, 4.0, 16.0}) {
    const double c = scale / lat.mu_sq();
    const auto l3 = lemma3_check(lat, c, *kappa);
    std::ostringstream label;
    label << "lemma3@" << scale << "/mu^2";
    rows.push_back({label.str(), name, l3.theta + l3.tail_bound, std::max(l3.bound1, l3.bound_r), l3.holds});
  }
  for (auto t : times) {
    if (t < 1) continue;
    const auto ch = chain_check(eval, t, *kappa);
    const std::string at = "@" + std::to_string(t);
    rows.push_back({"chain_sandwich" + at, name, ch.d_sq, ch.mode_sum, ch.sandwich_ok});
    rows.push_back({"chain_modes_theta" + at, name, ch.mode_sum, ch.theta_excess + ch.theta_tail, ch.modes_theta_ok});
    rows.push_back({"chain_lemma3" + at, name, ch.theta_excess + ch.theta_tail, ch.lattice_bound, ch.lemma3_ok});
    if (ch.vacuous) {
      rows.push_back({"chain_spectral" + at, name, ch.lattice_bound, ch.spectral_bound, true, true});
    } else {
      rows.push_back({"chain_spectral" + at, name, ch.lattice_bound, ch.spectral_bound, *ch.spectral_ok});
      rows.push_back({"chain_overall" + at, name, ch.d_sq, ch.spectral_bound, *ch.overall_ok});
    }
  }
}

inline std::vector<WalkSpec> config_walks(const RunConfig& cfg) {
  std::vector<WalkSpec> out;
  if (cfg.walk) out.push_back(instantiate(*cfg.walk));
  if (cfg.family) {
    for (auto& w : build_family(*cfg.family)) out.push_back(std::move(w));
  }
  if (cfg.corpus) {
    for (const auto& d : standard_corpus()) out.push_back(instantiate(d));
  }
  return out;
}

inline const WalkSpec require_walk(const RunConfig& cfg, const char* sub) {
  if (!cfg.walk) throw Error(ErrorKind::config, std::string("walk: missing required field for ") + sub);
  return instantiate(*cfg.walk);
}

}  // namespace detail

inline std::vector<CheckRow> bounds_harness(const RunConfig& cfg) {
  std::vector<CheckRow> rows;
  detail::add_global_checks(rows);
  for (const auto& w : detail::config_walks(cfg)) detail::add_walk_checks(rows, w, cfg);
  return rows;
}

/// Executes one subcommand. Machine-readable output goes to `out`, the human
/// summary and all diagnostics to `diag`. Returns the process exit status:
/// 0 success, 1 validation or runtime error, 2 a genuine bound violation.
inline int run(const RunConfig& cfg, Subcommand sub, ReportFormat format, std::ostream& out, std::ostream& diag) {
  using nlohmann::json;
  try {
    switch (sub) {
      case Subcommand::spectrum: {
        const auto walk = detail::require_walk(cfg, "spectrum");
        const auto spec = spectrum(walk);
        if (format == ReportFormat::csv) {
          out << "k,lambda\n";
          for (std::size_t k = 0; k < spec.values.size(); ++k) out << k << ',' << format_double(spec.values[k]) << '\n';
        } else {
          json vals = json::array();
          for (std::size_t k = 0; k < spec.values.size(); ++k) {
            vals.push_back({{"k", k},
                            {"coords", walk.group().element(static_cast<std::int64_t>(k)).coords},
                            {"lambda", spec.values[k]}});
          }
          out << json{{"values", vals},
                      {"dominant", {{"k", spec.dominant_flat}, {"lambda", spec.dominant_value}}},
                      {"gap", spec.gap}}
                     .dump(2)
              << '\n';
        }
        diag << walk.describe() << ": N=" << walk.group().order() << " r=" << walk.rank()
             << " lambda_m=" << format_double(spec.dominant_value) << " (k=" << spec.dominant_flat
             << ") gap=" << format_double(spec.gap) << '\n';
        return 0;
      }
      case Subcommand::mix: {
        const auto walk = detail::require_walk(cfg, "mix");
        const DistanceEvaluator eval(walk);
        const auto curve = mixing_curve(eval, cfg.t_cap.value_or(default_t_cap(walk)), cfg.floor.value_or(0.0));
        if (format == ReportFormat::csv) {
          out << "t,d_l1,d_tv\n";
          for (std::size_t t = 0; t < curve.d_values.size(); ++t) {
            out << t << ',' << format_double(curve.d_values[t]) << ',' << format_double(curve.tv(t)) << '\n';
          }
        } else {
          json rows = json::array();
          for (std::size_t t = 0; t < curve.d_values.size(); ++t) {
            rows.push_back({{"t", t}, {"d_l1", curve.d_values[t]}, {"d_tv", curve.tv(t)}});
          }
          out << json{{"curve", rows}, {"stopped_early", curve.stopped_early}}.dump(2) << '\n';
        }
        diag << walk.describe() << ": " << curve.d_values.size() << " points, final d_l1="
             << format_double(curve.d_values.back()) << (curve.stopped_early ? " (floor reached)" : "") << '\n';
        return 0;
      }
      case Subcommand::thresholds: {
        const auto walk = detail::require_walk(cfg, "thresholds");
        const DistanceEvaluator eval(walk);
        const auto cap = cfg.t_cap.value_or(default_t_cap(walk));
        auto levels = cfg.levels;
        if (levels.empty()) levels = {cfg.epsilon.value, 0.5, 1.0 - cfg.epsilon.value};
        json rows = json::array();
        if (format == ReportFormat::csv) out << "d,t\n";
        for (double d : levels) {
          std::optional<std::int64_t> t;
          try {
            t = threshold(eval, d, cap);
          } catch (const Error& e) {
            if (e.kind() == ErrorKind::invalid_argument) throw;
            diag << e.what() << '\n';
          }
          if (format == ReportFormat::csv) {
            out << format_double(d) << ',' << (t ? std::to_string(*t) : std::string()) << '\n';
          } else {
            rows.push_back({{"d", d}, {"t", t ? json(*t) : json(nullptr)}});
          }
          diag << "t(" << format_double(d) << ") = " << (t ? std::to_string(*t) : "undefined") << '\n';
        }
        if (format == ReportFormat::json) out << json{{"thresholds", rows}}.dump(2) << '\n';
        return 0;
      }
      case Subcommand::bounds_check: {
        if (!cfg.walk && !cfg.family && !cfg.corpus) {
          throw Error(ErrorKind::config, "bounds-check needs one of walk, family or corpus");
        }
        const auto rows = bounds_harness(cfg);
        std::size_t violations = 0;
        std::size_t informational_fail = 0;
        if (format == ReportFormat::csv) out << "check,instance,lhs,rhs,holds\n";
        json arr = json::array();
        for (const auto& r : rows) {
          if (!r.holds && !r.informational) ++violations;
          if (!r.holds && r.informational) ++informational_fail;
          if (format == ReportFormat::csv) {
            out << detail::csv_field(r.check) << ',' << detail::csv_field(r.instance) << ',' << format_double(r.lhs)
                << ',' << format_double(r.rhs) << ',' << (r.holds ? "true" : "false") << '\n';
          } else {
            arr.push_back({{"check", r.check},
                           {"instance", r.instance},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"holds", r.holds},
                           {"informational", r.informational}});
          }
        }
        if (format == ReportFormat::json) out << json{{"checks", arr}, {"violations", violations}}.dump(2) << '\n';
        diag << rows.size() << " checks, " << violations << " violations, " << informational_fail
             << " informational misses\n";
        for (const auto& r : rows) {
          if (!r.holds) {
            diag << (r.informational ? "  info: " : "  VIOLATION: ") << r.check << " on " << r.instance
                 << " lhs=" << format_double(r.lhs) << " rhs=" << format_double(r.rhs) << '\n';
          }
        }
        return violations == 0 ? 0 : 2;
      }
      case Subcommand::family: {
        if (!cfg.family) throw Error(ErrorKind::config, "family: missing required field for family");
        const auto report = family_profile(*cfg.family, cfg.epsilon, cfg.t_cap, cfg.kappa);
        out << export_report(report, format);
        diag << report.family << (report.contrast_only ? " (contrast only)" : "") << ", eps="
             << format_double(cfg.epsilon.value) << '\n';
        for (const auto& r : report.rows) {
          diag << "  N=" << r.n << " r=" << r.r << " t_eps=" << r.t_eps << " t_1meps=" << r.t_1meps
               << " ratio=" << (r.ratio ? format_double(*r.ratio) : "undefined") << '\n';
        }
        return 0;
      }
      case Subcommand::simulate: {
        const auto walk = detail::require_walk(cfg, "simulate");
        if (!cfg.simulate) throw Error(ErrorKind::config, "simulate: missing required field for simulate");
        const DistanceEvaluator eval(walk);
        const auto& sc = *cfg.simulate;
        std::vector<std::int64_t> counts;
        std::vector<double> freq;
        std::vector<double> exact;
        std::vector<double> band;
        std::optional<EmpiricalCheck> check;
        if (sc.samples >= kMinCheckSamples) {
          check = empirical_check(eval, sc);
          counts = check->empirical.counts;
          freq = check->empirical.dist.mass;
          exact = check->exact;
          band = check->band;
        } else {
          const auto emp = empirical_distribution(walk, sc);
          counts = emp.counts;
          freq = emp.dist.mass;
          const auto field = eval.deviation(sc.t);
          for (double v : field.dev) exact.push_back(1.0 / static_cast<double>(field.dev.size()) + v);
        }
        if (format == ReportFormat::csv) {
          out << "x,count,freq,exact" << (check ? ",band" : "") << '\n';
          for (std::size_t x = 0; x < counts.size(); ++x) {
            out << x << ',' << counts[x] << ',' << format_double(freq[x]) << ',' << format_double(exact[x]);
            if (check) out << ',' << format_double(band[x]);
            out << '\n';
          }
        } else {
          json j{{"counts", counts}, {"freq", freq}, {"exact", exact}};
          if (check) {
            j["band"] = band;
            j["max_abs_dev"] = check->max_abs_dev;
            j["violations"] = check->violations;
          }
          out << j.dump(2) << '\n';
        }
        diag << walk.describe() << ": t=" << sc.t << " samples=" << sc.samples << " seed=" << sc.seed;
        if (check) diag << " max_abs_dev=" << format_double(check->max_abs_dev) << " violations=" << check->violations;
        diag << '\n';
        return 0;
      }
    }
  } catch (const Error& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace abelmix
