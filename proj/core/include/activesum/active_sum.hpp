#ifndef ACTIVESUM_ACTIVE_SUM_HPP
#define ACTIVESUM_ACTIVE_SUM_HPP

#include <cstdint>

#include "activesum/family.hpp"
#include "activesum/homomorphism.hpp"
#include "activesum/presentation.hpp"
#include "activesum/todd_coxeter.hpp"

namespace activesum {

// How family members enter the presentation: `Regular` spends one generator
// per nontrivial member element and relates them by the member's full
// multiplication table; `Cyclic` spends a single generator per member and
// requires every member to be cyclic.
enum class Encoding { Regular, Cyclic };

// Cyclic when every member is cyclic, Regular otherwise.
Encoding auto_encoding(const SubgroupFamily &fam);

std::string encoding_name(Encoding enc);

// Presentation of the active sum of the family: the free product of the
// members divided by the relators h^-1 g h (g^h)^-1 over ordered member
// pairs, with g^h resolved inside the member that equals F_2^h. Identity
// choices of h or g reduce freely and are omitted. In the cyclic encoding
// only the generator-to-generator relator of each pair is emitted: the
// relators for powers are consequences, since conjugation by h^k is the
// k-th power of conjugation by h and the conjugate of a power is the power
// of the conjugate. Generator and relator order is deterministic in
// (member index, element index).
Presentation active_sum_presentation(const SubgroupFamily &fam, Encoding enc,
                                     std::size_t member_order_cutoff = 10000);

struct ActiveSumResult {
  Presentation presentation;
  PermGroup S;                 // regular representation of the active sum
  std::uint64_t order_S = 0;
  std::vector<Perm> tau_labels; // presentation generator -> element of S
  Homomorphism phi;            // S -> G on ambient labels
  std::uint64_t image_order = 0;
  std::uint64_t kernel_order = 0;
  bool generating = false; // image of phi is all of G
  bool iso = false;        // phi is an isomorphism onto G
  EnumerationStats stats;
};

// Builds the active-sum presentation, enumerates its cosets over the
// trivial subgroup, and assembles the regular representation S together
// with the canonical homomorphism phi : S -> G given by the ambient labels.
// phi is surjective exactly when the family generates; a non-generating
// family is reported through the `generating` flag, with phi still defined
// onto its image.
ActiveSumResult realize_active_sum(const PermGroup &G, const SubgroupFamily &fam,
                                   Encoding enc, const TcOptions &options = {});

} // namespace activesum

#endif
