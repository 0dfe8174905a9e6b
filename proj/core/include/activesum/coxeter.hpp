#ifndef ACTIVESUM_COXETER_HPP
#define ACTIVESUM_COXETER_HPP

#include <string>
#include <vector>

#include "activesum/family.hpp"
#include "activesum/presentation.hpp"
#include "activesum/todd_coxeter.hpp"

namespace activesum {

// Symmetric matrix of bond orders: diagonal 1, off-diagonal >= 2 or 0 for
// an infinite bond.
class CoxeterMatrix {
public:
  static CoxeterMatrix from_entries(std::vector<std::vector<unsigned>> entries);

  // File format: a line "rank r", then one line per row i holding the
  // upper-triangle entries m(i, i+1) ... m(i, r-1); 0 denotes infinity.
  static CoxeterMatrix parse(const std::string &text);
  std::string to_text() const;

  // Named types used as fixtures.
  static CoxeterMatrix type_a(unsigned rank);      // (x_i x_{i+1})^3
  static CoxeterMatrix type_b(unsigned rank);      // one bond of order 4
  static CoxeterMatrix type_i2(unsigned m);        // rank 2, bond m
  static CoxeterMatrix type_h3();                  // bonds 5, 3

  unsigned rank() const { return static_cast<unsigned>(entries_.size()); }
  unsigned entry(unsigned i, unsigned j) const { return entries_[i][j]; }

  // <x_1..x_r | x_i^2, (x_i x_j)^m_ij>; infinite bonds contribute no
  // relator.
  Presentation presentation() const;

private:
  std::vector<std::vector<unsigned>> entries_;
};

struct CoxeterRealization {
  PermGroup group;                    // regular action from coset enumeration
  std::vector<Perm> generator_images; // image of each Coxeter generator
  SubgroupFamily family;              // conjugation closure of the <x_i>
  EnumerationStats stats;
};

// Realizes the Coxeter group of M by coset enumeration over the trivial
// subgroup and returns it with its reflection family (conjugates of the
// standard generators). Throws BudgetExceeded when W is infinite or larger
// than the budget.
CoxeterRealization coxeter_reflection_family(const CoxeterMatrix &M,
                                             const TcOptions &options = {});

} // namespace activesum

#endif
