#ifndef ACTIVESUM_CELLULARITY_HPP
#define ACTIVESUM_CELLULARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "activesum/homomorphism.hpp"

namespace activesum {

// The predicates below decide the Hom(C_n, -) conditions through torsion
// sets: homomorphisms C_n -> G correspond to elements of G_n by evaluating
// at a generator, so f induces a bijection on Hom sets exactly when it
// restricts to a bijection X_n -> Y_n.

bool is_cn_equivalence(const Homomorphism &f, std::uint64_t n,
                       std::size_t cutoff = 100000);

bool is_cn_injection(const Homomorphism &f, std::uint64_t n,
                     std::size_t cutoff = 100000);

bool is_cn_trivial(const Homomorphism &f, std::uint64_t n,
                   std::size_t cutoff = 100000);

// <G_n> = G; for finite G this characterizes C_n-generation, since a
// homomorphism out of G is C_n-trivial exactly when it kills <G_n>.
bool is_cn_generated(const PermGroup &G, std::uint64_t n,
                     std::size_t cutoff = 100000);

std::vector<std::uint64_t> divisors_of(std::uint64_t n);

struct DivisorCheck {
  std::uint64_t m = 1;
  bool bijective = false;
};

struct TorsionBijectionReport {
  bool applicable = false; // f was a C_n-equivalence to begin with
  std::vector<DivisorCheck> divisors;

  bool all_pass() const {
    for (const auto &d : divisors)
      if (!d.bijective)
        return false;
    return true;
  }
};

// For a C_n-equivalence, checks the induced bijection X_m -> Y_m for every
// divisor m of n. Not applicable when f is not a C_n-equivalence.
TorsionBijectionReport torsion_bijection_check(const Homomorphism &f, std::uint64_t n,
                            std::size_t cutoff = 100000);

struct LevelImplicationReport {
  std::uint64_t n = 1, m = 1;
  bool hypothesis = false; // is_cn_equivalence(f, n)
  bool conclusion = false; // is_cn_equivalence(f, m)
  bool implication_holds = false;
};

// Checks the implication "C_n-equivalence implies C_m-equivalence" for the
// divisor m of n; throws DivisibilityError otherwise.
LevelImplicationReport level_implication_check(const Homomorphism &f, std::uint64_t n,
                            std::uint64_t m, std::size_t cutoff = 100000);

} // namespace activesum

#endif
