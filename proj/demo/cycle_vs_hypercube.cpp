// Prints t(eps)/t(1-eps) for growing cycles next to growing hypercubes.
// The cycle ratio settles near 9.6; the hypercube ratio keeps falling.

#include <cstdio>

#include "abelmix/families.hpp"

int main() {
  using namespace abelmix;
  const auto eps = Epsilon::decimal(0.05);

  const FamilyPreset cycles{FamilyKind::cycle_single, {16, 32, 64, 128, 256}, "", {}};
  const FamilyPreset cubes{FamilyKind::hypercube, {4, 6, 8, 10, 12}, "", {}};

  for (const auto* preset : {&cycles, &cubes}) {
    const auto report = family_profile(*preset, eps, std::nullopt, std::nullopt);
    std::printf("%s\n", report.family.c_str());
    for (const auto& row : report.rows) {
      std::printf("  N=%-6lld t_eps=%-8lld t_1meps=%-6lld ratio=%.4f\n", static_cast<long long>(row.n),
                  static_cast<long long>(row.t_eps), static_cast<long long>(row.t_1meps), row.ratio.value_or(0.0));
    }
  }
  return 0;
}
