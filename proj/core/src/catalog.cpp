#include "activesum/catalog.hpp"

#include "activesum/coxeter.hpp"
#include "activesum/errors.hpp"
#include "activesum/sl.hpp"

namespace activesum {

PermGroup symmetric_group(unsigned k) {
  if (k <= 1)
    return PermGroup(std::max(k, 1u), {});
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles("(0 1)", k));
  if (k >= 3) {
    std::vector<Point> cycle(k);
    for (unsigned i = 0; i < k; ++i)
      cycle[i] = (i + 1) % k;
    gens.push_back(Perm::from_images(std::move(cycle)));
  }
  return PermGroup(k, std::move(gens));
}

PermGroup alternating_group(unsigned k) {
  if (k <= 2)
    return PermGroup(std::max(k, 1u), {});
  // Consecutive 3-cycles.
  std::vector<Perm> gens;
  for (unsigned i = 0; i + 2 < k; ++i)
    gens.push_back(Perm::from_cycles("(" + std::to_string(i) + " " +
                                         std::to_string(i + 1) + " " +
                                         std::to_string(i + 2) + ")",
                                     k));
  return PermGroup(k, std::move(gens));
}

PermGroup cyclic_group(unsigned k) {
  if (k <= 1)
    return PermGroup(1, {});
  std::vector<Point> cycle(k);
  for (unsigned i = 0; i < k; ++i)
    cycle[i] = (i + 1) % k;
  return PermGroup(k, {Perm::from_images(std::move(cycle))});
}

PermGroup dihedral_group(unsigned k) {
  if (k == 0)
    throw UnsupportedParameters("dihedral group needs k >= 1");
  if (k == 1)
    return cyclic_group(2);
  if (k == 2)
    return klein_four_group();
  std::vector<Point> rotation(k), reflection(k);
  for (unsigned i = 0; i < k; ++i) {
    rotation[i] = (i + 1) % k;
    reflection[i] = (k - i) % k;
  }
  return PermGroup(k, {Perm::from_images(std::move(rotation)),
                       Perm::from_images(std::move(reflection))});
}

PermGroup klein_four_group() {
  return PermGroup(4, {Perm::from_cycles("(0 1)", 4), Perm::from_cycles("(2 3)", 4)});
}

PermGroup quaternion_group() {
  // Elements of Q8 indexed as basis*2 + sign with basis 1, i, j, k; the
  // generators act by right multiplication.
  struct Q {
    int sign;
    unsigned basis;
  };
  static const int sign_table[4][4] = {
      {+1, +1, +1, +1},
      {+1, -1, +1, -1},
      {+1, -1, -1, +1},
      {+1, +1, -1, -1},
  };
  static const unsigned basis_table[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  auto mul = [](Q a, Q b) {
    return Q{a.sign * b.sign * sign_table[a.basis][b.basis],
             basis_table[a.basis][b.basis]};
  };
  auto index = [](Q a) { return a.basis * 2 + (a.sign < 0 ? 1u : 0u); };
  auto element = [](unsigned idx) { return Q{idx % 2 ? -1 : +1, idx / 2}; };

  std::vector<Perm> gens;
  for (unsigned gen_basis : {1u, 2u}) { // i and j
    std::vector<Point> images(8);
    for (unsigned e = 0; e < 8; ++e)
      images[e] = index(mul(element(e), Q{+1, gen_basis}));
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup(8, std::move(gens));
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b) {
  Point degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &g : a.generators())
    gens.push_back(pad_to_degree(g, degree));
  for (const Perm &g : b.generators()) {
    std::vector<Point> images(degree);
    for (Point i = 0; i < a.degree(); ++i)
      images[i] = i;
    for (Point i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = a.degree() + g[i];
    gens.push_back(Perm::from_images(std::move(images)));
  }
  return PermGroup(degree, std::move(gens));
}

std::vector<NamedGroup> sweep_catalog(std::uint64_t max_order) {
  std::vector<NamedGroup> all;
  for (unsigned k = 1; k <= 16; ++k)
    all.push_back({"cyclic" + std::to_string(k), cyclic_group(k)});
  all.push_back({"klein", klein_four_group()});
  all.push_back({"c2xc4", direct_product(cyclic_group(2), cyclic_group(4))});
  all.push_back({"c2xc6", direct_product(cyclic_group(2), cyclic_group(6))});
  all.push_back({"c2xc8", direct_product(cyclic_group(2), cyclic_group(8))});
  all.push_back({"c2xc2xc2",
                 direct_product(cyclic_group(2), klein_four_group())});
  all.push_back({"c3xc3", direct_product(cyclic_group(3), cyclic_group(3))});
  all.push_back({"c4xc4", direct_product(cyclic_group(4), cyclic_group(4))});
  for (unsigned k = 3; k <= 8; ++k)
    all.push_back({"dihedral" + std::to_string(k), dihedral_group(k)});
  all.push_back({"q8", quaternion_group()});
  all.push_back({"alt4", alternating_group(4)});

  std::vector<NamedGroup> filtered;
  for (auto &entry : all)
    if (entry.group.order() <= max_order)
      filtered.push_back(std::move(entry));
  return filtered;
}

const std::vector<NamedGroup> &named_fixtures() {
  static const std::vector<NamedGroup> fixtures = [] {
    std::vector<NamedGroup> list;
    for (unsigned k = 2; k <= 5; ++k)
      list.push_back({"sym" + std::to_string(k), symmetric_group(k)});
    for (unsigned k = 3; k <= 5; ++k)
      list.push_back({"alt" + std::to_string(k), alternating_group(k)});
    for (unsigned k = 3; k <= 8; ++k)
      list.push_back({"dihedral" + std::to_string(k), dihedral_group(k)});

    TcOptions budget;
    budget.max_cosets = 100000;
    auto coxeter = [&](const std::string &name, const CoxeterMatrix &m) {
      list.push_back({name, coxeter_reflection_family(m, budget).group});
    };
    coxeter("a1", CoxeterMatrix::type_a(1));
    coxeter("a2", CoxeterMatrix::type_a(2));
    coxeter("a3", CoxeterMatrix::type_a(3));
    coxeter("b2", CoxeterMatrix::type_b(2));
    coxeter("b3", CoxeterMatrix::type_b(3));
    for (unsigned m = 2; m <= 6; ++m)
      coxeter("i2_" + std::to_string(m), CoxeterMatrix::type_i2(m));
    coxeter("h3", CoxeterMatrix::type_h3());

    list.push_back({"sl2_2", sl_to_perm(2, 2).group});
    list.push_back({"sl2_3", sl_to_perm(2, 3).group});
    list.push_back({"sl3_2", sl_to_perm(3, 2).group});
    return list;
  }();
  return fixtures;
}

} // namespace activesum
