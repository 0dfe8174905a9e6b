#ifndef ACTIVESUM_HOMOMORPHISM_HPP
#define ACTIVESUM_HOMOMORPHISM_HPP

#include <memory>
#include <vector>

#include "activesum/perm_group.hpp"
#include "activesum/presentation.hpp"

namespace activesum {

// Homomorphism between permutation groups, given by generator images and
// verified at construction: either by an exhaustive check over the source
// multiplication structure (small source), or against a presentation of
// the source (every relator must map to the identity).
class Homomorphism {
public:
  static Homomorphism checked_by_table(PermGroup source, PermGroup target,
                                       std::vector<Perm> images,
                                       std::size_t source_cutoff = 2000);

  static Homomorphism checked_by_presentation(PermGroup source, PermGroup target,
                                              std::vector<Perm> images,
                                              const Presentation &presentation);

  const PermGroup &source() const { return source_; }
  const PermGroup &target() const { return target_; }
  const std::vector<Perm> &generator_images() const { return images_; }

  // Image of an arbitrary source element; factorizes x through the source
  // element index (throws CutoffExceeded past `cutoff` source elements,
  // MembershipError if x is not in the source).
  Perm evaluate(const Perm &x, std::size_t cutoff = 100000) const;

  // Image subgroup of the target generated by the generator images.
  PermGroup image() const;

  bool is_trivial() const;

  bool operator==(const Homomorphism &other) const {
    return source_ == other.source_ && target_ == other.target_ &&
           images_ == other.images_;
  }

private:
  Homomorphism(PermGroup source, PermGroup target, std::vector<Perm> images);

  friend std::vector<Homomorphism> enumerate_homs(const PermGroup &,
                                                  const PermGroup &, std::size_t,
                                                  std::size_t);

  PermGroup source_;
  PermGroup target_;
  std::vector<Perm> images_;
};

// All homomorphisms source -> target, by exhaustive assignment of target
// elements to source generators, filtered through the source multiplication
// structure. Candidate images of a generator of order d are restricted to
// the target torsion set T_d.
std::vector<Homomorphism> enumerate_homs(const PermGroup &source,
                                         const PermGroup &target,
                                         std::size_t source_cutoff = 100,
                                         std::size_t target_cutoff = 2000);

} // namespace activesum

#endif
