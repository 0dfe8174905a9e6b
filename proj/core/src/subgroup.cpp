#include "activesum/subgroup.hpp"

#include <algorithm>

#include "activesum/errors.hpp"

namespace activesum {

Subgroup::Subgroup(PermGroup ambient, std::vector<Perm> generators,
                   std::size_t key_cutoff)
    : ambient_(std::move(ambient)), gens_(std::move(generators)),
      key_cutoff_(key_cutoff) {
  for (const Perm &g : gens_)
    if (!ambient_.contains(g))
      throw MembershipError("subgroup generator " + g.to_cycle_string() +
                            " lies outside the ambient group");
  group_ = PermGroup(ambient_.degree(), gens_);
  if (group_.order() <= key_cutoff_) {
    auto sorted = group_.elements(key_cutoff_);
    std::sort(sorted.begin(), sorted.end());
    key_ = std::make_shared<const std::vector<Perm>>(std::move(sorted));
  }
}

std::uint64_t Subgroup::order() const { return group_.order(); }

std::uint64_t Subgroup::exponent() const {
  return activesum::exponent(group_, key_cutoff_);
}

bool Subgroup::contains(const Perm &p) const { return group_.contains(p); }

const std::vector<Perm> &Subgroup::elements() const {
  if (!key_)
    throw CutoffExceeded("subgroup exceeds the element-set key cutoff");
  return *key_;
}

bool Subgroup::is_cyclic() const {
  std::uint64_t n = order();
  for (const Perm &x : elements())
    if (x.order() == n)
      return true;
  return false;
}

Perm Subgroup::cyclic_generator() const {
  std::uint64_t n = order();
  for (const Perm &x : elements()) // sorted, so the first hit is minimal
    if (x.order() == n)
      return x;
  throw EncodingError("subgroup of order " + std::to_string(n) +
                      " is not cyclic");
}

Subgroup Subgroup::conjugated_by(const Perm &g) const {
  if (!ambient_.contains(g))
    throw MembershipError("conjugating element " + g.to_cycle_string() +
                          " lies outside the ambient group");
  std::vector<Perm> conj;
  conj.reserve(gens_.size());
  for (const Perm &x : gens_)
    conj.push_back(x.conjugated_by(g));
  return Subgroup(ambient_, std::move(conj), key_cutoff_);
}

std::size_t Subgroup::key_hash() const {
  if (!key_) {
    // No element-set key; hash by order and let operator== resolve.
    return static_cast<std::size_t>(order());
  }
  std::uint64_t h = 1469598103934665603ull;
  for (const Perm &p : *key_) {
    h ^= p.hash();
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool Subgroup::operator==(const Subgroup &other) const {
  if (ambient_.degree() != other.ambient_.degree())
    return false;
  if (order() != other.order())
    return false;
  if (key_ && other.key_)
    return *key_ == *other.key_;
  // Large subgroups: mutual membership of generators.
  for (const Perm &g : other.gens_)
    if (!group_.contains(g))
      return false;
  for (const Perm &g : gens_)
    if (!other.group_.contains(g))
      return false;
  return true;
}

} // namespace activesum
