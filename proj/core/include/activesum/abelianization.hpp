#ifndef ACTIVESUM_ABELIANIZATION_HPP
#define ACTIVESUM_ABELIANIZATION_HPP

#include <cstdint>
#include <vector>

#include "activesum/presentation.hpp"

namespace activesum {

struct Abelianization {
  std::vector<std::uint64_t> invariant_factors; // entries > 1, divisibility chain
  std::size_t free_rank = 0;

  bool finite() const { return free_rank == 0; }
  std::uint64_t order() const; // product of invariant factors; finite() only
};

// Diagonal of the Smith normal form (nonnegative, d1 | d2 | ...), including
// zero entries for the kernel directions.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m);

// Smith normal form of the relator-exponent-sum matrix.
Abelianization abelianization(const Presentation &p);

} // namespace activesum

#endif
