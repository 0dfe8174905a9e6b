#include "activesum/sweep.hpp"

#include "activesum/cellularity.hpp"
#include "activesum/homomorphism.hpp"

namespace activesum {

SweepResult divisor_sweep(const SweepConfig &config) {
  SweepResult result;
  auto catalog = sweep_catalog(config.max_order);
  std::erase_if(catalog, [&](const NamedGroup &entry) {
    return entry.group.order() < config.min_order;
  });

  for (const NamedGroup &source : catalog) {
    for (const NamedGroup &target : catalog) {
      ++result.pairs;
      auto homs = enumerate_homs(source.group, target.group,
                                 config.source_cutoff, config.target_cutoff);
      result.homs += homs.size();
      for (std::size_t hi = 0; hi < homs.size(); ++hi) {
        const Homomorphism &f = homs[hi];
        for (std::uint64_t n : config.n_values) {
          if (!is_cn_equivalence(f, n))
            continue;
          ++result.equivalences;
          auto a = torsion_bijection_check(f, n);
          for (const auto &check : a.divisors) {
            ++result.implications;
            if (!check.bijective) {
              ++result.violations;
              result.violation_details.push_back(
                  "torsion-bijection: hom " + std::to_string(hi) + " " + source.name +
                  " -> " + target.name + " n=" + std::to_string(n) +
                  " m=" + std::to_string(check.m));
            }
          }
          for (std::uint64_t m : divisors_of(n)) {
            auto b = level_implication_check(f, n, m);
            ++result.implications;
            if (!b.implication_holds) {
              ++result.violations;
              result.violation_details.push_back(
                  "level-implication: hom " + std::to_string(hi) + " " + source.name +
                  " -> " + target.name + " n=" + std::to_string(n) +
                  " m=" + std::to_string(m));
            }
          }
        }
      }
    }
  }
  return result;
}

} // namespace activesum
