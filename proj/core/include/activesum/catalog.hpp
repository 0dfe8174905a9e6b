#ifndef ACTIVESUM_CATALOG_HPP
#define ACTIVESUM_CATALOG_HPP

#include <string>
#include <vector>

#include "activesum/perm_group.hpp"

namespace activesum {

PermGroup symmetric_group(unsigned k);
PermGroup alternating_group(unsigned k);
PermGroup cyclic_group(unsigned k);
PermGroup dihedral_group(unsigned k); // order 2k
PermGroup klein_four_group();
PermGroup quaternion_group();

// Acts on the disjoint union of the point sets.
PermGroup direct_product(const PermGroup &a, const PermGroup &b);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

// Small groups driving the exhaustive Hom-set sweeps; one entry per
// isomorphism type, every order <= max_order.
std::vector<NamedGroup> sweep_catalog(std::uint64_t max_order = 16);

// The named fixture corpus: symmetric/alternating/dihedral series, the
// finite Coxeter groups shipped as matrices, and the small special linear
// groups. Built once, on first use.
const std::vector<NamedGroup> &named_fixtures();

} // namespace activesum

#endif
