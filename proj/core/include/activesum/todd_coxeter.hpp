#ifndef ACTIVESUM_TODD_COXETER_HPP
#define ACTIVESUM_TODD_COXETER_HPP

#include <cstdint>
#include <vector>

#include "activesum/errors.hpp"
#include "activesum/perm.hpp"
#include "activesum/presentation.hpp"

namespace activesum {

enum class TcStrategy { Hlt, Felsch };

struct TcOptions {
  std::uint64_t max_cosets = 1000000; // live-coset budget
  TcStrategy strategy = TcStrategy::Hlt;
};

// Complete closed coset table. Row 0 is the coset of the enumeration
// subgroup; every generator acts on the live cosets as a permutation.
class CosetTable {
public:
  std::size_t coset_count() const { return count_; }
  std::size_t rank() const { return rank_; }
  const EnumerationStats &stats() const { return stats_; }

  Point apply(Point coset, int letter) const; // letter as in Word
  Perm generator_action(std::size_t gen) const;

  // Re-checks the defining properties: total table, every relator acting
  // trivially, action transitive from coset 0.
  bool validate(const Presentation &p) const;

private:
  friend CosetTable todd_coxeter(const Presentation &, const std::vector<Word> &,
                                 const TcOptions &);

  std::size_t count_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::int32_t> table_; // count_ x 2*rank_, fully defined
  EnumerationStats stats_;
};

// Coset enumeration for the subgroup generated by `subgroup_words`. With no
// subgroup words the live-coset count of the closed table is the order of
// the presented group. Deterministic for a fixed strategy. Throws
// BudgetExceeded (carrying statistics) when the live-coset budget is hit.
CosetTable todd_coxeter(const Presentation &p,
                        const std::vector<Word> &subgroup_words,
                        const TcOptions &options = {});

} // namespace activesum

#endif
