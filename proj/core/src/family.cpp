#include "activesum/family.hpp"

#include "activesum/errors.hpp"

namespace activesum {

SubgroupFamily::SubgroupFamily(PermGroup ambient, std::vector<Subgroup> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    by_hash_[members_[i].key_hash()].push_back(i);
    if (members_[i].ambient().degree() != ambient_.degree())
      throw MembershipError("family member ambient degree mismatch");
  }
  // Distinctness.
  for (const auto &[hash, indices] : by_hash_) {
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t b = a + 1; b < indices.size(); ++b)
        if (members_[indices[a]] == members_[indices[b]])
          throw MembershipError("family members " + std::to_string(indices[a]) +
                                " and " + std::to_string(indices[b]) +
                                " coincide as element sets");
  }
  // Closure under conjugation by ambient generators.
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (const Perm &g : ambient_.generators())
      if (!find(members_[i].conjugated_by(g)))
        throw MembershipError("family is not closed under conjugation: member " +
                              std::to_string(i) + " conjugated by " +
                              g.to_cycle_string() + " is missing");
}

std::optional<std::size_t> SubgroupFamily::find(const Subgroup &f) const {
  auto it = by_hash_.find(f.key_hash());
  if (it == by_hash_.end())
    return std::nullopt;
  for (std::size_t idx : it->second)
    if (members_[idx] == f)
      return idx;
  return std::nullopt;
}

SubgroupFamily SubgroupFamily::reordered(const std::vector<std::size_t> &order) const {
  if (order.size() != members_.size())
    throw MembershipError("reorder permutation has wrong length");
  std::vector<Subgroup> shuffled;
  shuffled.reserve(members_.size());
  for (std::size_t idx : order)
    shuffled.push_back(members_.at(idx));
  return SubgroupFamily(ambient_, std::move(shuffled));
}

namespace {

// Hash-bucketed membership test over an append-only member list.
class MemberSet {
public:
  explicit MemberSet(std::vector<Subgroup> &members) : members_(members) {}

  bool known(const Subgroup &f) const {
    auto it = buckets_.find(f.key_hash());
    if (it == buckets_.end())
      return false;
    for (std::size_t idx : it->second)
      if (members_[idx] == f)
        return true;
    return false;
  }

  void add(Subgroup f) {
    buckets_[f.key_hash()].push_back(members_.size());
    members_.push_back(std::move(f));
  }

private:
  std::vector<Subgroup> &members_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

} // namespace

SubgroupFamily conjugation_closure(const PermGroup &G,
                                   const std::vector<Subgroup> &seeds,
                                   std::size_t cap) {
  std::vector<Subgroup> members;
  MemberSet set(members);
  for (const Subgroup &seed : seeds)
    if (!set.known(seed))
      set.add(seed);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const Perm &g : G.generators()) {
      Subgroup conj = members[i].conjugated_by(g);
      if (!set.known(conj)) {
        if (members.size() >= cap)
          throw FamilyTooLarge("conjugation closure exceeds " +
                               std::to_string(cap) + " members");
        set.add(std::move(conj));
      }
    }
  }
  return SubgroupFamily(G, std::move(members));
}

SubgroupFamily cyclic_family(const PermGroup &G, std::uint64_t m,
                             std::size_t cutoff) {
  std::vector<Subgroup> members;
  MemberSet set(members);
  for (const Perm &x : G.elements(cutoff)) {
    if (x.order() != m)
      continue;
    Subgroup candidate(G, {x});
    if (!set.known(candidate))
      set.add(std::move(candidate));
  }
  return SubgroupFamily(G, std::move(members));
}

SubgroupFamily whole_group_family(const PermGroup &G) {
  return SubgroupFamily(G, {Subgroup(G, G.generators())});
}

bool is_generating(const SubgroupFamily &fam) {
  std::vector<Perm> span;
  for (const Subgroup &f : fam.members())
    for (const Perm &g : f.generators())
      span.push_back(g);
  return generated_subgroup(fam.ambient().degree(), span).order() ==
         fam.ambient().order();
}

bool exponent_divides(const SubgroupFamily &fam, std::uint64_t n) {
  for (const Subgroup &f : fam.members())
    if (n % f.exponent() != 0)
      return false;
  return true;
}

} // namespace activesum
