#pragma once

// Parametrised walk families, per-instance cutoff diagnostics, and the CSV /
// JSON report formats.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abelmix/bounds.hpp"
#include "abelmix/group.hpp"
#include "abelmix/mixing.hpp"

namespace abelmix {

/// A level in (0, 1), optionally carried as -ln(eps) so that regimes like
/// eps = e^{-240} survive serialisation exactly.
struct Epsilon {
  double value = 0.05;
  std::optional<double> neg_log;

  static Epsilon decimal(double v) { return Epsilon{v, std::nullopt}; }
  static Epsilon from_exp(double x) { return Epsilon{std::exp(-x), x}; }

  double neg_log_value() const { return neg_log ? *neg_log : -std::log(value); }

  friend bool operator==(const Epsilon&, const Epsilon&) = default;
};

enum class FamilyKind { cycle_single, cycle_pair, cycle_sqrt, hypercube, custom };

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::cycle_single: return "cycle_single";
    case FamilyKind::cycle_pair: return "cycle_pair";
    case FamilyKind::cycle_sqrt: return "cycle_sqrt";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

inline FamilyKind family_kind_from_string(const std::string& s) {
  for (auto k : {FamilyKind::cycle_single, FamilyKind::cycle_pair, FamilyKind::cycle_sqrt, FamilyKind::hypercube,
                 FamilyKind::custom}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::invalid_argument, "unknown family kind '" + s + "'");
}

struct WalkDescription {
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::int64_t>> generators;
  bool require_type = false;

  friend bool operator==(const WalkDescription&, const WalkDescription&) = default;
};

inline WalkSpec instantiate(const WalkDescription& d) {
  AbelianGroup g(d.moduli);
  std::vector<GroupElement> gens;
  for (const auto& c : d.generators) {
    if (c.size() != g.factors()) {
      throw Error(ErrorKind::invalid_argument, "generator arity does not match the number of moduli");
    }
    gens.push_back(GroupElement{c});
  }
  return make_walk(std::move(g), std::move(gens), d.require_type);
}

struct FamilyPreset {
  FamilyKind kind = FamilyKind::cycle_single;
  std::vector<std::int64_t> sizes;  // n for cycles, d for hypercubes
  std::string pair_rule;            // cycle_pair: "sqrt", "const:G" or "mul:P/Q"
  std::vector<WalkDescription> instances;  // custom only

  friend bool operator==(const FamilyPreset&, const FamilyPreset&) = default;
};

namespace detail {

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) throw Error(ErrorKind::invalid_argument, "bad integer in " + what + ": '" + s + "'");
  return v;
}

inline std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline std::int64_t apply_pair_rule(const std::string& rule, std::int64_t n) {
  if (rule == "sqrt") return isqrt(n);
  if (rule.rfind("const:", 0) == 0) return parse_int(rule.substr(6), "pair_rule");
  if (rule.rfind("mul:", 0) == 0) {
    const auto body = rule.substr(4);
    const auto slash = body.find('/');
    if (slash == std::string::npos) throw Error(ErrorKind::invalid_argument, "pair_rule mul needs P/Q");
    const auto p = parse_int(body.substr(0, slash), "pair_rule");
    const auto q = parse_int(body.substr(slash + 1), "pair_rule");
    if (q <= 0) throw Error(ErrorKind::invalid_argument, "pair_rule mul needs Q > 0");
    return p * n / q;
  }
  throw Error(ErrorKind::invalid_argument, "unknown pair_rule '" + rule + "'");
}

inline WalkSpec build_instance(const WalkDescription& d, const std::string& label) {
  try {
    return instantiate(d);
  } catch (const Error& e) {
    throw Error(e.kind(), label + ": " + e.what());
  }
}

}  // namespace detail

inline WalkDescription cycle_description(std::int64_t n, std::vector<std::int64_t> gens) {
  WalkDescription d{{n}, {}, false};
  for (auto a : gens) d.generators.push_back({((a % n) + n) % n});
  return d;
}

inline WalkDescription hypercube_description(std::int64_t dim) {
  WalkDescription d{std::vector<std::int64_t>(static_cast<std::size_t>(dim), 2), {}, false};
  for (std::int64_t i = 0; i < dim; ++i) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(dim), 0);
    e[static_cast<std::size_t>(i)] = 1;
    d.generators.push_back(std::move(e));
  }
  return d;
}

inline std::vector<WalkDescription> family_descriptions(const FamilyPreset& preset) {
  std::vector<WalkDescription> out;
  if (preset.kind == FamilyKind::custom) return preset.instances;
  for (std::size_t i = 1; i < preset.sizes.size(); ++i) {
    if (preset.sizes[i] <= preset.sizes[i - 1]) {
      throw Error(ErrorKind::invalid_argument, "family sizes must be strictly increasing");
    }
  }
  for (auto n : preset.sizes) {
    switch (preset.kind) {
      case FamilyKind::cycle_single: out.push_back(cycle_description(n, {1})); break;
      case FamilyKind::cycle_pair:
        out.push_back(cycle_description(n, {1, detail::apply_pair_rule(preset.pair_rule, n)}));
        break;
      case FamilyKind::cycle_sqrt: out.push_back(cycle_description(n, {1, detail::isqrt(n)})); break;
      case FamilyKind::hypercube: out.push_back(hypercube_description(n)); break;
      case FamilyKind::custom: break;
    }
  }
  return out;
}

inline std::vector<WalkSpec> build_family(const FamilyPreset& preset) {
  std::vector<WalkSpec> out;
  const auto descs = family_descriptions(preset);
  for (std::size_t i = 0; i < descs.size(); ++i) {
    std::string label = to_string(preset.kind) + " instance " + std::to_string(i);
    if (i < preset.sizes.size()) label += " (size " + std::to_string(preset.sizes[i]) + ")";
    out.push_back(detail::build_instance(descs[i], label));
  }
  return out;
}

/// (Z/2)^d with the unit vectors as generators.
inline bool is_hypercube(const WalkSpec& walk) {
  const auto& g = walk.group();
  if (g.factors() != walk.rank()) return false;
  for (auto n : g.moduli()) {
    if (n != 2) return false;
  }
  for (std::size_t i = 0; i < walk.rank(); ++i) {
    for (std::size_t j = 0; j < g.factors(); ++j) {
      if (walk.generators()[i].coords[j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

/// 10 N^2 in general, 10 d (ln d + 3) for hypercubes.
inline std::int64_t default_t_cap(const WalkSpec& walk) {
  if (is_hypercube(walk)) {
    const auto d = static_cast<double>(walk.rank());
    return static_cast<std::int64_t>(std::ceil(10.0 * d * (std::log(d) + 3.0)));
  }
  const std::int64_t n = walk.group().order();
  return 10 * n * n;
}

struct FamilyRow {
  std::int64_t n = 0;
  std::int64_t r = 0;
  double lambda_m = 0.0;
  double gap = 0.0;
  std::int64_t t_eps = 0;
  std::int64_t t_1meps = 0;
  std::optional<double> ratio;
  double gap_product = 0.0;
  double log_product = 0.0;
  std::optional<double> ratio_floor;

  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

struct FamilyReport {
  std::string family;  // kind label
  bool contrast_only = false;  // r grows along the family
  Epsilon epsilon;
  std::optional<double> kappa;
  std::vector<FamilyRow> rows;

  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

inline FamilyRow profile_instance(const WalkSpec& walk, const Epsilon& eps, std::optional<std::int64_t> t_cap,
                                  std::optional<double> kappa) {
  const DistanceEvaluator eval(walk);
  const std::int64_t cap = t_cap.value_or(default_t_cap(walk));
  FamilyRow row;
  row.n = walk.group().order();
  row.r = static_cast<std::int64_t>(walk.rank());
  const auto& spec = eval.spectrum_values();
  row.lambda_m = spec.dominant_value;
  row.gap = spec.gap;
  try {
    row.t_eps = threshold(eval, eps.value, cap);
    row.t_1meps = threshold(eval, 1.0 - eps.value, cap);
    if (row.t_1meps > 0) row.ratio = static_cast<double>(row.t_eps) / static_cast<double>(row.t_1meps);
    const auto peres = peres_products(eval, cap);
    row.gap_product = peres.gap_product;
    row.log_product = peres.log_product;
  } catch (const Error& e) {
    throw Error(e.kind(), walk.describe() + ": " + e.what());
  }
  if (row.r == 1 && kappa) row.ratio_floor = ratio_floor_from_log(1, *kappa, eps.neg_log_value()).floor;
  return row;
}

inline FamilyReport family_profile(const std::vector<WalkSpec>& family, const Epsilon& eps,
                                   std::optional<std::int64_t> t_cap, std::optional<double> kappa,
                                   std::string label = "custom") {
  if (!(eps.value > 0.0) || !(eps.value < 0.5)) throw Error(ErrorKind::invalid_argument, "epsilon must lie in (0, 1/2)");
  FamilyReport report;
  report.family = std::move(label);
  report.epsilon = eps;
  report.kappa = kappa;
  std::size_t first_rank = family.empty() ? 0 : family.front().rank();
  for (const auto& w : family) {
    report.rows.push_back(profile_instance(w, eps, t_cap, kappa));
    if (w.rank() != first_rank) report.contrast_only = true;
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const FamilyRow& a, const FamilyRow& b) { return a.n < b.n; });
  return report;
}

inline FamilyReport family_profile(const FamilyPreset& preset, const Epsilon& eps, std::optional<std::int64_t> t_cap,
                                   std::optional<double> kappa) {
  auto report = family_profile(build_family(preset), eps, t_cap, kappa, to_string(preset.kind));
  if (preset.kind == FamilyKind::hypercube) report.contrast_only = true;
  return report;
}

inline constexpr const char* kFamilyCsvHeader =
    "N,r,lambda_m,gap,t_eps,t_1meps,ratio,gap_product,log_product,ratio_floor";

/// 17 significant digits, C locale.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

enum class ReportFormat { csv, json };

inline nlohmann::json to_json(const Epsilon& e) {
  if (e.neg_log) return nlohmann::json{{"exp", *e.neg_log}};
  return e.value;
}

inline Epsilon epsilon_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Epsilon::decimal(j.get<double>());
  if (j.is_object() && j.size() == 1 && j.contains("exp") && j["exp"].is_number()) {
    return Epsilon::from_exp(j["exp"].get<double>());
  }
  throw Error(ErrorKind::config, "epsilon must be a number or {\"exp\": x}");
}

inline nlohmann::json report_to_json(const FamilyReport& report) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back(json{{"N", r.n},
                        {"r", r.r},
                        {"lambda_m", r.lambda_m},
                        {"gap", r.gap},
                        {"t_eps", r.t_eps},
                        {"t_1meps", r.t_1meps},
                        {"ratio", opt(r.ratio)},
                        {"gap_product", r.gap_product},
                        {"log_product", r.log_product},
                        {"ratio_floor", opt(r.ratio_floor)}});
  }
  return json{{"family", report.family},
              {"contrast_only", report.contrast_only},
              {"epsilon", to_json(report.epsilon)},
              {"kappa", opt(report.kappa)},
              {"rows", rows}};
}

inline FamilyReport report_from_json(const nlohmann::json& j) {
  auto opt = [](const nlohmann::json& v) -> std::optional<double> {
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
  };
  FamilyReport report;
  report.family = j.at("family").get<std::string>();
  report.contrast_only = j.at("contrast_only").get<bool>();
  report.epsilon = epsilon_from_json(j.at("epsilon"));
  report.kappa = opt(j.at("kappa"));
  for (const auto& r : j.at("rows")) {
    FamilyRow row;
    row.n = r.at("N").get<std::int64_t>();
    row.r = r.at("r").get<std::int64_t>();
    row.lambda_m = r.at("lambda_m").get<double>();
    row.gap = r.at("gap").get<double>();
    row.t_eps = r.at("t_eps").get<std::int64_t>();
    row.t_1meps = r.at("t_1meps").get<std::int64_t>();
    row.ratio = opt(r.at("ratio"));
    row.gap_product = r.at("gap_product").get<double>();
    row.log_product = r.at("log_product").get<double>();
    row.ratio_floor = opt(r.at("ratio_floor"));
    report.rows.push_back(row);
  }
  return report;
}

inline std::string export_report(const FamilyReport& report, ReportFormat format) {
  if (format == ReportFormat::json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream os;
  os << kFamilyCsvHeader << '\n';
  for (const auto& r : report.rows) {
    os << r.n << ',' << r.r << ',' << format_double(r.lambda_m) << ',' << format_double(r.gap) << ',' << r.t_eps << ','
       << r.t_1meps << ',' << format_optional(r.ratio) << ',' << format_double(r.gap_product) << ','
       << format_double(r.log_product) << ',' << format_optional(r.ratio_floor) << '\n';
  }
  return os.str();
}

}  // namespace abelmix
