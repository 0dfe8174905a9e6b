#ifndef ACTIVESUM_SWEEP_HPP
#define ACTIVESUM_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "activesum/catalog.hpp"

namespace activesum {

struct SweepConfig {
  std::uint64_t min_order = 1;
  std::uint64_t max_order = 16;
  std::vector<std::uint64_t> n_values = {2, 3, 4, 6, 8, 12};
  std::size_t source_cutoff = 100;
  std::size_t target_cutoff = 2000;
};

struct SweepResult {
  std::uint64_t pairs = 0;
  std::uint64_t homs = 0;
  std::uint64_t equivalences = 0;
  std::uint64_t implications = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> violation_details;
};

// Exhaustive divisor-level check over all homomorphisms between
// catalog groups: every C_n-equivalence must restrict to a bijection on the
// m-torsion and be a C_m-equivalence, for every divisor m of n.
SweepResult divisor_sweep(const SweepConfig &config = {});

} // namespace activesum

#endif
