#include "activesum/cellularity.hpp"

#include <algorithm>

#include "activesum/errors.hpp"

namespace activesum {

namespace {

std::vector<Perm> image_of_torsion(const Homomorphism &f, std::uint64_t n,
                                   std::size_t cutoff) {
  std::vector<Perm> images;
  for (const Perm &x : torsion_set(f.source(), n, cutoff).elements)
    images.push_back(f.evaluate(x, cutoff));
  return images;
}

bool restricts_to_bijection(const Homomorphism &f, std::uint64_t n,
                            std::size_t cutoff) {
  auto images = image_of_torsion(f, n, cutoff);
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    return false; // not injective on X_n
  auto target = torsion_set(f.target(), n, cutoff).elements;
  std::sort(target.begin(), target.end());
  return images == target;
}

} // namespace

bool is_cn_equivalence(const Homomorphism &f, std::uint64_t n, std::size_t cutoff) {
  return restricts_to_bijection(f, n, cutoff);
}

bool is_cn_injection(const Homomorphism &f, std::uint64_t n, std::size_t cutoff) {
  auto images = image_of_torsion(f, n, cutoff);
  std::sort(images.begin(), images.end());
  return std::adjacent_find(images.begin(), images.end()) == images.end();
}

bool is_cn_trivial(const Homomorphism &f, std::uint64_t n, std::size_t cutoff) {
  for (const Perm &im : image_of_torsion(f, n, cutoff))
    if (!im.is_identity())
      return false;
  return true;
}

bool is_cn_generated(const PermGroup &G, std::uint64_t n, std::size_t cutoff) {
  auto torsion = torsion_set(G, n, cutoff);
  return generated_subgroup(G.degree(), torsion.elements).order() == G.order();
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    small.push_back(d);
    if (d != n / d)
      large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small; // ascending
}

TorsionBijectionReport torsion_bijection_check(const Homomorphism &f, std::uint64_t n,
                            std::size_t cutoff) {
  TorsionBijectionReport report;
  report.applicable = is_cn_equivalence(f, n, cutoff);
  if (!report.applicable)
    return report;
  for (std::uint64_t m : divisors_of(n))
    report.divisors.push_back({m, restricts_to_bijection(f, m, cutoff)});
  return report;
}

LevelImplicationReport level_implication_check(const Homomorphism &f, std::uint64_t n,
                            std::uint64_t m, std::size_t cutoff) {
  if (m == 0 || n % m != 0)
    throw DivisibilityError(std::to_string(m) + " does not divide " +
                            std::to_string(n));
  LevelImplicationReport report;
  report.n = n;
  report.m = m;
  report.hypothesis = is_cn_equivalence(f, n, cutoff);
  report.conclusion = is_cn_equivalence(f, m, cutoff);
  report.implication_holds = !report.hypothesis || report.conclusion;
  return report;
}

} // namespace activesum
