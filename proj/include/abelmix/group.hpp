#pragma once

// Finite Abelian groups Z/n_1 x ... x Z/n_s, lazy symmetric walks on them,
// and the direct-convolution evolution used as a brute-force reference.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "abelmix/error.hpp"

namespace abelmix {

/// Largest group order the library accepts. Everything downstream is dense in N.
inline constexpr std::int64_t kMaxGroupOrder = std::int64_t{1} << 26;

struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline std::string to_string(const GroupElement& g) {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < g.coords.size(); ++j) {
    if (j) os << ',';
    os << g.coords[j];
  }
  os << ')';
  return os.str();
}

/// Elements are indexed in mixed radix with the first modulus most significant:
/// index = (...((c_0 * n_1 + c_1) * n_2 + c_2)...).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw Error(ErrorKind::invalid_group, "empty list of moduli");
    order_ = 1;
    for (auto n : moduli_) {
      if (n < 2) {
        throw Error(ErrorKind::invalid_group, "modulus " + std::to_string(n) + " is below 2");
      }
      if (order_ > kMaxGroupOrder / n) {
        throw Error(ErrorKind::invalid_group, "group order exceeds supported maximum");
      }
      order_ *= n;
    }
    strides_.assign(moduli_.size(), 1);
    for (std::size_t j = moduli_.size() - 1; j > 0; --j) strides_[j - 1] = strides_[j] * moduli_[j];
  }

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t factors() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }
  std::int64_t stride(std::size_t j) const { return strides_[j]; }
  bool is_cyclic() const { return moduli_.size() == 1; }

  bool is_reduced(const GroupElement& g) const {
    if (g.coords.size() != moduli_.size()) return false;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      if (g.coords[j] < 0 || g.coords[j] >= moduli_[j]) return false;
    }
    return true;
  }

  /// Reduces arbitrary integer coordinates into [0, n_j).
  GroupElement reduce(std::vector<std::int64_t> coords) const {
    if (coords.size() != moduli_.size()) {
      throw Error(ErrorKind::invalid_argument, "element has " + std::to_string(coords.size()) +
                                                   " coordinates, group has " +
                                                   std::to_string(moduli_.size()) + " factors");
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
      coords[j] %= moduli_[j];
      if (coords[j] < 0) coords[j] += moduli_[j];
    }
    return GroupElement{std::move(coords)};
  }

  GroupElement identity() const { return GroupElement{std::vector<std::int64_t>(moduli_.size(), 0)}; }

  GroupElement add(const GroupElement& a, const GroupElement& b) const {
    GroupElement out = a;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      out.coords[j] += b.coords[j];
      if (out.coords[j] >= moduli_[j]) out.coords[j] -= moduli_[j];
    }
    return out;
  }

  GroupElement negate(const GroupElement& a) const {
    GroupElement out = a;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      if (out.coords[j] != 0) out.coords[j] = moduli_[j] - out.coords[j];
    }
    return out;
  }

  std::int64_t index_of(const GroupElement& g) const {
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) idx = idx * moduli_[j] + g.coords[j];
    return idx;
  }

  GroupElement element(std::int64_t index) const {
    GroupElement g{std::vector<std::int64_t>(moduli_.size(), 0)};
    for (std::size_t j = moduli_.size(); j-- > 0;) {
      g.coords[j] = index % moduli_[j];
      index /= moduli_[j];
    }
    return g;
  }

  std::int64_t add_index(std::int64_t a, std::int64_t b) const {
    std::int64_t out = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      const std::int64_t n = moduli_[j];
      std::int64_t c = (a / strides_[j]) % n + (b / strides_[j]) % n;
      if (c >= n) c -= n;
      out += c * strides_[j];
    }
    return out;
  }

  std::int64_t negate_index(std::int64_t a) const {
    std::int64_t out = 0;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      const std::int64_t n = moduli_[j];
      const std::int64_t c = (a / strides_[j]) % n;
      out += (c == 0 ? 0 : n - c) * strides_[j];
    }
    return out;
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<std::int64_t> moduli_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

inline AbelianGroup make_group(std::vector<std::int64_t> moduli) { return AbelianGroup(std::move(moduli)); }

/// Dense probability vector indexed by element index.
struct Distribution {
  std::vector<double> mass;

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

inline Distribution point_mass(const AbelianGroup& group, std::int64_t index = 0) {
  Distribution d{std::vector<double>(static_cast<std::size_t>(group.order()), 0.0)};
  d.mass[static_cast<std::size_t>(index)] = 1.0;
  return d;
}

inline Distribution uniform_distribution(const AbelianGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  return Distribution{std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

/// Support point of the one-step law: element index with its accumulated mass.
struct StepMass {
  std::int64_t index;
  std::int64_t symbols;  // how many of the 2r+1 symbols land here
  double mass;
};

/// A lazy symmetric walk: each step applies one of the 2r+1 symbols
/// {+a_1, -a_1, ..., +a_r, -a_r, 0} with probability 1/(2r+1).
/// Coincident symbols (2-torsion generators, repeated generators) pool their mass.
class WalkSpec {
 public:
  const AbelianGroup& group() const { return group_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  std::size_t rank() const { return generators_.size(); }
  std::int64_t symbol_count() const { return 2 * static_cast<std::int64_t>(generators_.size()) + 1; }
  double hold_prob() const { return 1.0 / static_cast<double>(symbol_count()); }
  /// |G| >= pi^r.
  bool type_valid() const { return type_valid_; }
  /// Sparse one-step law, ascending by element index.
  const std::vector<StepMass>& step() const { return step_; }

  /// Element indices of the 2r+1 symbols, in the order 0, +a_1, -a_1, +a_2, ...
  std::vector<std::int64_t> symbol_indices() const {
    std::vector<std::int64_t> out{0};
    for (const auto& a : generators_) {
      out.push_back(group_.index_of(a));
      out.push_back(group_.index_of(group_.negate(a)));
    }
    return out;
  }

  std::string describe() const {
    std::ostringstream os;
    os << "Z/";
    for (std::size_t j = 0; j < group_.moduli().size(); ++j) {
      if (j) os << " x Z/";
      os << group_.moduli()[j];
    }
    os << " {";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) os << ',';
      if (group_.is_cyclic()) {
        os << generators_[i].coords[0];
      } else {
        os << to_string(generators_[i]);
      }
    }
    os << '}';
    return os.str();
  }

 private:
  friend WalkSpec make_walk(AbelianGroup group, std::vector<GroupElement> generators, bool require_type);

  WalkSpec(AbelianGroup group, std::vector<GroupElement> generators)
      : group_(std::move(group)), generators_(std::move(generators)) {}

  AbelianGroup group_;
  std::vector<GroupElement> generators_;
  std::vector<StepMass> step_;
  bool type_valid_ = false;
};

inline WalkSpec make_walk(AbelianGroup group, std::vector<GroupElement> generators, bool require_type = false) {
  if (generators.empty()) throw Error(ErrorKind::invalid_argument, "a walk needs at least one generator");
  for (const auto& a : generators) {
    if (!group.is_reduced(a)) {
      throw Error(ErrorKind::invalid_argument, "generator " + to_string(a) + " is not a reduced element");
    }
  }

  WalkSpec walk(std::move(group), std::move(generators));
  const AbelianGroup& g = walk.group_;
  const std::int64_t n = g.order();
  const auto symbols = walk.symbol_indices();

  // Closure of the generated subgroup, breadth first from the identity.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<std::int64_t> frontier{0};
  seen[0] = 1;
  std::int64_t reached = 1;
  while (!frontier.empty()) {
    const std::int64_t x = frontier.front();
    frontier.pop_front();
    for (std::size_t s = 1; s < symbols.size(); ++s) {
      const std::int64_t y = g.add_index(x, symbols[s]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        frontier.push_back(y);
      }
    }
  }
  if (reached != n) {
    throw Error(ErrorKind::not_irreducible, walk.describe() + " generates a subgroup of order " +
                                                std::to_string(reached) + ", not " + std::to_string(n));
  }

  const auto r = static_cast<double>(walk.rank());
  walk.type_valid_ = static_cast<double>(n) >= std::pow(std::numbers::pi, r);
  if (require_type && !walk.type_valid_) {
    throw Error(ErrorKind::type_violation,
                walk.describe() + ": group order " + std::to_string(n) + " is below pi^" + std::to_string(walk.rank()));
  }

  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (auto s : symbols) ++counts[static_cast<std::size_t>(s)];
  const auto denom = static_cast<double>(walk.symbol_count());
  for (std::int64_t x = 0; x < n; ++x) {
    const auto c = counts[static_cast<std::size_t>(x)];
    if (c) walk.step_.push_back(StepMass{x, c, static_cast<double>(c) / denom});
  }
  return walk;
}

inline Distribution step_distribution(const WalkSpec& walk) {
  Distribution d{std::vector<double>(static_cast<std::size_t>(walk.group().order()), 0.0)};
  for (const auto& s : walk.step()) d.mass[static_cast<std::size_t>(s.index)] = s.mass;
  return d;
}

/// t-fold convolution with the step law by direct summation.
inline Distribution evolve(const WalkSpec& walk, const Distribution& dist, std::int64_t t) {
  if (t < 0) throw Error(ErrorKind::invalid_argument, "negative step count");
  const AbelianGroup& g = walk.group();
  const auto n = static_cast<std::size_t>(g.order());
  if (dist.mass.size() != n) throw Error(ErrorKind::invalid_argument, "distribution size does not match group order");

  const auto& step = walk.step();
  std::vector<std::vector<std::size_t>> shift(step.size(), std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < step.size(); ++s) {
    for (std::size_t x = 0; x < n; ++x) {
      shift[s][x] = static_cast<std::size_t>(g.add_index(static_cast<std::int64_t>(x), step[s].index));
    }
  }

  std::vector<double> cur = dist.mass;
  std::vector<double> next(n);
  for (std::int64_t step_no = 0; step_no < t; ++step_no) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < step.size(); ++s) {
      const double p = step[s].mass;
      const auto& sh = shift[s];
      for (std::size_t x = 0; x < n; ++x) next[sh[x]] += p * cur[x];
    }
    cur.swap(next);
  }
  return Distribution{std::move(cur)};
}

}  // namespace abelmix
