#ifndef ACTIVESUM_PERM_GROUP_HPP
#define ACTIVESUM_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "activesum/perm.hpp"

namespace activesum {

struct Bsgs;

// Exhaustive element listing of a group, with one factorization word
// (sequence of generator indices) per element. elements[0] is the identity.
struct ElementIndex {
  std::vector<Perm> elements; // BFS order over right multiplication
  std::unordered_map<Perm, std::uint32_t, PermHash> position;
  std::vector<std::vector<std::uint32_t>> words;

  bool contains(const Perm &p) const { return position.count(p) > 0; }
};

// Finite permutation group given by generators.
//
// Order and membership queries go through a base-and-strong-generating-set
// index built on first use. The index and the element listing are cached
// behind shared pointers, so copies of a PermGroup share them. Lazy
// construction mutates the cache; build eagerly (call order()) before
// querying one instance from several threads.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(Point degree, std::vector<Perm> generators);

  Point degree() const { return degree_; }
  const std::vector<Perm> &generators() const { return gens_; }

  std::uint64_t order() const;
  bool contains(const Perm &p) const;
  bool is_trivial() const { return order() == 1; }

  // BFS closure over right multiplication by generators. Deterministic
  // order; throws CutoffExceeded past `cutoff` elements.
  std::shared_ptr<const ElementIndex> element_index(std::size_t cutoff) const;
  std::vector<Perm> elements(std::size_t cutoff) const;

  // lcm of element orders. Requires |G| <= cutoff.
  std::uint64_t exponent(std::size_t cutoff = 100000) const;

  bool operator==(const PermGroup &other) const {
    return degree_ == other.degree_ && gens_ == other.gens_;
  }

private:
  const Bsgs &bsgs() const;

  Point degree_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<const Bsgs> bsgs_cache_;
  mutable std::shared_ptr<const ElementIndex> index_cache_;
};

// Torsion set G_n = { x in G | x^n = 1 }.
struct TorsionSet {
  std::uint64_t n = 1;
  std::vector<Perm> elements;

  std::size_t size() const { return elements.size(); }
};

// Least k >= 1 with x^k = 1; throws MembershipError if x is not in G.
std::uint64_t element_order(const PermGroup &G, const Perm &x);

std::uint64_t exponent(const PermGroup &G, std::size_t cutoff = 100000);

TorsionSet torsion_set(const PermGroup &G, std::uint64_t n,
                       std::size_t cutoff = 100000);

// |Hom(C_n, G)|; equals |G_n| since a homomorphism is determined by the
// image of the generator, which can be any element with x^n = 1.
std::uint64_t hom_set_size(std::uint64_t n, const PermGroup &G,
                           std::size_t cutoff = 100000);

// Subgroup of the symmetric group on `degree` points generated by those
// elements of `span` not already reachable; generators are filtered
// incrementally so the result carries a small generating set.
PermGroup generated_subgroup(Point degree, const std::vector<Perm> &span);

} // namespace activesum

#endif
