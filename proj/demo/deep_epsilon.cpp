// Distances far below double-precision cancellation, and the ratio floor
// at eps = e^-240 where the lower bound on t(eps)/t(1-eps) exceeds 1.

#include <cstdio>

#include "abelmix/bounds.hpp"
#include "abelmix/families.hpp"
#include "abelmix/mixing.hpp"

int main() {
  using namespace abelmix;
  const auto walk = instantiate(cycle_description(16, {1}));
  const DistanceEvaluator eval(walk);
  for (std::int64_t t : {100, 1000, 2000, 4000}) std::printf("d(%lld) = %.6e\n", static_cast<long long>(t), eval.l1(t));

  const auto eps = Epsilon::from_exp(240.0);
  const auto t_eps = threshold(eval, eps.value, 100000);
  const auto t_1meps = threshold(eval, 1.0 - eps.value, 100000);
  std::printf("t(e^-240) = %lld, t(1 - e^-240) = %lld\n", static_cast<long long>(t_eps),
              static_cast<long long>(t_1meps));

  const auto floor = ratio_floor_from_log(1, 2.0, 240.0);
  std::printf("ratio floor (kappa = 2) = %.6f, applicable = %s\n", floor.floor, floor.applicable ? "yes" : "no");
  return 0;
}
