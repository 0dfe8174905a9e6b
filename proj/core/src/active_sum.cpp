#include "activesum/active_sum.hpp"

#include <algorithm>

#include "activesum/errors.hpp"

namespace activesum {

Encoding auto_encoding(const SubgroupFamily &fam) {
  for (const Subgroup &f : fam.members())
    if (f.order() > 1 && !f.is_cyclic())
      return Encoding::Regular;
  return Encoding::Cyclic;
}

std::string encoding_name(Encoding enc) {
  return enc == Encoding::Regular ? "regular" : "cyclic";
}

namespace {

// Resolves the member of the family equal to F^h; the family invariant
// guarantees existence, so a miss is a hard validation error.
std::size_t conjugate_member(const SubgroupFamily &fam, std::size_t member,
                             const Perm &h) {
  Subgroup conj = fam.members()[member].conjugated_by(h);
  auto idx = fam.find(conj);
  if (!idx)
    throw MembershipError("family is not conjugation-closed: member " +
                          std::to_string(member) + " conjugated by " +
                          h.to_cycle_string() + " is not a member");
  return *idx;
}

Presentation regular_presentation(const SubgroupFamily &fam) {
  // One generator per nontrivial element of each member.
  std::vector<std::string> names;
  std::vector<GeneratorLabel> labels;
  // (member, element position in sorted key) -> letter
  std::vector<std::vector<int>> letter_of(fam.size());
  std::vector<std::vector<Perm>> elems(fam.size());

  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    const Subgroup &f = fam.members()[mi];
    letter_of[mi].assign(f.elements().size(), 0);
    for (std::size_t ei = 0; ei < f.elements().size(); ++ei) {
      const Perm &x = f.elements()[ei];
      if (x.is_identity())
        continue;
      names.push_back("g" + std::to_string(mi) + "_" + std::to_string(ei));
      labels.push_back({mi, x});
      elems[mi].push_back(x);
      letter_of[mi][ei] = static_cast<int>(names.size()); // 1-based letter
    }
  }

  auto letter = [&](std::size_t mi, const Perm &x) {
    const auto &key = fam.members()[mi].elements();
    auto it = std::lower_bound(key.begin(), key.end(), x);
    if (it == key.end() || *it != x)
      throw MembershipError("conjugate fell outside its member");
    return letter_of[mi][static_cast<std::size_t>(it - key.begin())];
  };

  std::vector<Word> relators;
  // Multiplication tables.
  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    for (const Perm &x : elems[mi]) {
      for (const Perm &y : elems[mi]) {
        Perm z = x * y;
        Word w{letter(mi, x), letter(mi, y)};
        if (!z.is_identity())
          w.push_back(-letter(mi, z));
        relators.push_back(std::move(w));
      }
    }
  }
  // Conjugation relators over ordered member pairs.
  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    for (std::size_t mj = 0; mj < fam.size(); ++mj) {
      for (const Perm &h : elems[mi]) {
        std::size_t mk = conjugate_member(fam, mj, h);
        for (const Perm &g : elems[mj]) {
          Perm gh = g.conjugated_by(h);
          int lh = letter(mi, h);
          int lg = letter(mj, g);
          relators.push_back({-lh, lg, lh, -letter(mk, gh)});
        }
      }
    }
  }

  Presentation p(std::move(names), std::move(relators));
  p.set_labels(std::move(labels));
  return p;
}

Presentation cyclic_presentation(const SubgroupFamily &fam) {
  std::vector<std::string> names;
  std::vector<GeneratorLabel> labels;
  std::vector<int> letter_of_member(fam.size(), 0);
  std::vector<Perm> gen_of_member(fam.size());
  std::vector<std::uint64_t> order_of_member(fam.size(), 1);

  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    const Subgroup &f = fam.members()[mi];
    if (f.order() == 1)
      continue;
    if (!f.is_cyclic())
      throw EncodingError("cyclic encoding requires cyclic members; member " +
                          std::to_string(mi) + " has order " +
                          std::to_string(f.order()) + " and is not cyclic");
    Perm gen = f.cyclic_generator();
    names.push_back("c" + std::to_string(mi));
    labels.push_back({mi, gen});
    letter_of_member[mi] = static_cast<int>(names.size());
    gen_of_member[mi] = gen;
    order_of_member[mi] = f.order();
  }

  std::vector<Word> relators;
  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    if (letter_of_member[mi] == 0)
      continue;
    Word power(order_of_member[mi], letter_of_member[mi]);
    relators.push_back(std::move(power));
  }
  for (std::size_t mi = 0; mi < fam.size(); ++mi) {
    if (letter_of_member[mi] == 0)
      continue;
    const Perm &h = gen_of_member[mi];
    for (std::size_t mj = 0; mj < fam.size(); ++mj) {
      if (letter_of_member[mj] == 0)
        continue;
      std::size_t mk = conjugate_member(fam, mj, h);
      Perm gh = gen_of_member[mj].conjugated_by(h);
      // gh generates F_j^h, so it is a power of that member's generator.
      std::uint64_t e = 0;
      Perm acc(h.degree());
      for (std::uint64_t k = 1; k < order_of_member[mk]; ++k) {
        acc = acc * gen_of_member[mk];
        if (acc == gh) {
          e = k;
          break;
        }
      }
      if (e == 0)
        throw MembershipError("conjugate of a cyclic generator is not a power "
                              "of the target member's generator");
      Word w{-letter_of_member[mi], letter_of_member[mj], letter_of_member[mi]};
      for (std::uint64_t k = 0; k < e; ++k)
        w.push_back(-letter_of_member[mk]);
      relators.push_back(std::move(w));
    }
  }

  Presentation p(std::move(names), std::move(relators));
  p.set_labels(std::move(labels));
  return p;
}

} // namespace

Presentation active_sum_presentation(const SubgroupFamily &fam, Encoding enc,
                                     std::size_t member_order_cutoff) {
  for (const Subgroup &f : fam.members())
    if (f.order() > member_order_cutoff)
      throw CutoffExceeded("family member of order " + std::to_string(f.order()) +
                           " exceeds the member cutoff " +
                           std::to_string(member_order_cutoff));
  return enc == Encoding::Regular ? regular_presentation(fam)
                                  : cyclic_presentation(fam);
}

ActiveSumResult realize_active_sum(const PermGroup &G, const SubgroupFamily &fam,
                                   Encoding enc, const TcOptions &options) {
  Presentation p = active_sum_presentation(fam, enc);
  CosetTable table = todd_coxeter(p, {}, options);

  std::vector<Perm> s_gens;
  std::vector<Perm> ambient_labels;
  s_gens.reserve(p.rank());
  ambient_labels.reserve(p.rank());
  for (std::size_t gi = 0; gi < p.rank(); ++gi) {
    Perm action = table.generator_action(gi);
    if (action.is_identity())
      throw MembershipError(
          "presentation generator " + p.generator_names()[gi] +
          " acts trivially on the cosets; labels would misalign");
    s_gens.push_back(std::move(action));
    ambient_labels.push_back(p.labels()[gi].element);
  }

  PermGroup S(static_cast<Point>(table.coset_count()), s_gens);

  Homomorphism phi =
      Homomorphism::checked_by_presentation(S, G, ambient_labels, p);

  PermGroup image = phi.image();
  std::uint64_t image_order = image.order();
  std::uint64_t order_S = table.coset_count();
  if (image_order == 0 || order_S % image_order != 0)
    throw MembershipError("image order does not divide the active-sum order");

  ActiveSumResult result{std::move(p),
                         std::move(S),
                         order_S,
                         std::move(s_gens),
                         std::move(phi),
                         image_order,
                         order_S / image_order,
                         image_order == G.order(),
                         false,
                         table.stats()};
  result.iso = result.generating && order_S == G.order();
  return result;
}

} // namespace activesum
