#ifndef ACTIVESUM_SUBGROUP_HPP
#define ACTIVESUM_SUBGROUP_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "activesum/perm_group.hpp"

namespace activesum {

// Subgroup of an ambient permutation group.
//
// Equality is equality of element sets; up to `key_cutoff` elements the
// sorted element list is cached as a canonical key, beyond that equality
// falls back to mutual membership of generators.
class Subgroup {
public:
  Subgroup(PermGroup ambient, std::vector<Perm> generators,
           std::size_t key_cutoff = 10000);

  const PermGroup &ambient() const { return ambient_; }
  const std::vector<Perm> &generators() const { return gens_; }

  std::uint64_t order() const;
  std::uint64_t exponent() const;
  bool contains(const Perm &p) const;

  // Sorted element list; empty pointer when the subgroup exceeds the key
  // cutoff.
  std::shared_ptr<const std::vector<Perm>> key() const { return key_; }
  const std::vector<Perm> &elements() const;

  bool is_cyclic() const;
  // Minimal element of full order; deterministic across runs. Throws
  // EncodingError when the subgroup is not cyclic.
  Perm cyclic_generator() const;

  // g^-1 F g; throws MembershipError unless g lies in the ambient group.
  Subgroup conjugated_by(const Perm &g) const;

  const PermGroup &as_group() const { return group_; }

  std::size_t key_hash() const;
  bool operator==(const Subgroup &other) const;

private:
  PermGroup ambient_;
  PermGroup group_; // same generators, degree of ambient
  std::vector<Perm> gens_;
  std::size_t key_cutoff_;
  std::shared_ptr<const std::vector<Perm>> key_;
};

} // namespace activesum

#endif
