#ifndef ACTIVESUM_FAMILY_HPP
#define ACTIVESUM_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "activesum/subgroup.hpp"

namespace activesum {

// Family of distinct subgroups of a common ambient group, closed under
// conjugation. Closure under conjugation by the ambient generators is
// verified at construction; that suffices, since conjugation by a product
// factors through the generators. Member order is part of the value (it
// fixes the generator order of active-sum presentations).
class SubgroupFamily {
public:
  SubgroupFamily(PermGroup ambient, std::vector<Subgroup> members);

  const PermGroup &ambient() const { return ambient_; }
  const std::vector<Subgroup> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  // Index of the member equal (as an element set) to `f`.
  std::optional<std::size_t> find(const Subgroup &f) const;

  SubgroupFamily reordered(const std::vector<std::size_t> &order) const;

private:
  PermGroup ambient_;
  std::vector<Subgroup> members_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash_;
};

// Smallest conjugation-closed family of distinct subgroups containing the
// seeds; orbit algorithm over the ambient generators. Throws FamilyTooLarge
// past `cap` members.
SubgroupFamily conjugation_closure(const PermGroup &G,
                                   const std::vector<Subgroup> &seeds,
                                   std::size_t cap = 10000);

// All cyclic subgroups of G of order exactly m.
SubgroupFamily cyclic_family(const PermGroup &G, std::uint64_t m,
                             std::size_t cutoff = 100000);

// Family containing G itself as its only member.
SubgroupFamily whole_group_family(const PermGroup &G);

// True iff the members together generate the ambient group.
bool is_generating(const SubgroupFamily &fam);

// True iff exponent(F) divides n for every member F.
bool exponent_divides(const SubgroupFamily &fam, std::uint64_t n);

} // namespace activesum

#endif
