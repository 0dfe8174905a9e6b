#ifndef ACTIVESUM_SL_HPP
#define ACTIVESUM_SL_HPP

#include <string>

#include "activesum/perm_group.hpp"

namespace activesum {

struct SlResult {
  PermGroup group;       // action on the q^n - 1 nonzero row vectors
  std::uint64_t order;   // |SL(n, q)| from the product formula
  std::string generator_note; // records the generator choice
};

// Faithful permutation action of SL(n, q) on the nonzero vectors of
// GF(q)^n, generated by a transvection and a cyclic-type matrix. The BSGS
// order is checked against the order formula; parameter combinations for
// which the two standard generators do not generate (SL(2, q) with q a
// non-prime power) are rejected with UnsupportedParameters.
SlResult sl_to_perm(unsigned n, unsigned q);

std::uint64_t sl_order_formula(unsigned n, unsigned q);

} // namespace activesum

#endif
