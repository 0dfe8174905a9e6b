#include "activesum/homomorphism.hpp"

#include <optional>

#include "activesum/errors.hpp"

namespace activesum {

namespace {

// f respects the whole multiplication structure iff f(x*g) = f(x)*f(g) for
// every element x and generator g, with f read off factorization words.
// Returns the element images on success.
std::optional<std::vector<Perm>> table_check(const PermGroup &source,
                                             const PermGroup &target,
                                             const std::vector<Perm> &gen_images,
                                             const ElementIndex &idx) {
  std::vector<Perm> element_images;
  element_images.reserve(idx.elements.size());
  for (const auto &word : idx.words) {
    Perm im(target.degree());
    for (std::uint32_t gi : word)
      im = im * gen_images[gi];
    element_images.push_back(std::move(im));
  }
  for (std::size_t i = 0; i < idx.elements.size(); ++i) {
    for (std::size_t gi = 0; gi < source.generators().size(); ++gi) {
      const Perm &product = idx.elements[i] * source.generators()[gi];
      std::uint32_t pi = idx.position.at(product);
      if (element_images[pi] != element_images[i] * gen_images[gi])
        return std::nullopt;
    }
  }
  return element_images;
}

} // namespace

Homomorphism::Homomorphism(PermGroup source, PermGroup target,
                           std::vector<Perm> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {}

Homomorphism Homomorphism::checked_by_table(PermGroup source, PermGroup target,
                                            std::vector<Perm> images,
                                            std::size_t source_cutoff) {
  if (images.size() != source.generators().size())
    throw MembershipError("image count does not match source generator count");
  for (const Perm &im : images)
    if (!target.contains(im))
      throw MembershipError("image " + im.to_cycle_string() +
                            " lies outside the target group");
  auto idx = source.element_index(source_cutoff);
  if (!table_check(source, target, images, *idx))
    throw MembershipError("generator images do not define a homomorphism");
  return Homomorphism(std::move(source), std::move(target), std::move(images));
}

Homomorphism Homomorphism::checked_by_presentation(PermGroup source,
                                                   PermGroup target,
                                                   std::vector<Perm> images,
                                                   const Presentation &presentation) {
  if (images.size() != source.generators().size() ||
      images.size() != presentation.rank())
    throw MembershipError("image count does not match presentation rank");
  for (const Perm &im : images)
    if (!target.contains(im))
      throw MembershipError("image " + im.to_cycle_string() +
                            " lies outside the target group");
  for (const Word &r : presentation.relators()) {
    if (!evaluate_word(r, images, target.degree()).is_identity())
      throw MembershipError("relator " + presentation.word_to_text(r) +
                            " does not map to the identity");
  }
  return Homomorphism(std::move(source), std::move(target), std::move(images));
}

Perm Homomorphism::evaluate(const Perm &x, std::size_t cutoff) const {
  auto idx = source_.element_index(cutoff);
  auto it = idx->position.find(x);
  if (it == idx->position.end())
    throw MembershipError("element " + x.to_cycle_string() +
                          " is not in the source group");
  Perm im(target_.degree());
  for (std::uint32_t gi : idx->words[it->second])
    im = im * images_[gi];
  return im;
}

PermGroup Homomorphism::image() const {
  return generated_subgroup(target_.degree(), images_);
}

bool Homomorphism::is_trivial() const {
  for (const Perm &im : images_)
    if (!im.is_identity())
      return false;
  return true;
}

std::vector<Homomorphism> enumerate_homs(const PermGroup &source,
                                         const PermGroup &target,
                                         std::size_t source_cutoff,
                                         std::size_t target_cutoff) {
  auto idx = source.element_index(source_cutoff);
  auto target_elements = target.elements(target_cutoff);

  std::size_t ngens = source.generators().size();
  // Candidate images of generator i must satisfy y^d = 1 for d = order of
  // the generator.
  std::vector<std::vector<Perm>> candidates(ngens);
  for (std::size_t gi = 0; gi < ngens; ++gi) {
    std::uint64_t d = source.generators()[gi].order();
    for (const Perm &y : target_elements)
      if (d % y.order() == 0)
        candidates[gi].push_back(y);
  }

  std::vector<Homomorphism> result;
  std::vector<Perm> assignment(ngens, Perm(target.degree()));

  auto assign = [&](auto &&self, std::size_t gi) -> void {
    if (gi == ngens) {
      if (table_check(source, target, assignment, *idx))
        result.push_back(Homomorphism(source, target, assignment));
      return;
    }
    for (const Perm &y : candidates[gi]) {
      assignment[gi] = y;
      self(self, gi + 1);
    }
  };
  if (ngens == 0) {
    // Trivial source: exactly the trivial homomorphism.
    result.push_back(Homomorphism(source, target, {}));
  } else {
    assign(assign, 0);
  }
  return result;
}

} // namespace activesum
