#ifndef ACTIVESUM_PERM_HPP
#define ACTIVESUM_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace activesum {

using Point = unsigned;

// Permutation of {0, ..., degree-1}, stored as its image array.
//
// Composition is left to right: (a * b)(p) = b(a(p)), i.e. a acts first.
// Conjugation x.conjugated_by(g) is g^-1 * x * g, so that
// x.conjugated_by(g).conjugated_by(h) == x.conjugated_by(g * h).
class Perm {
public:
  Perm() = default;

  // Identity on `degree` points.
  explicit Perm(Point degree);

  // Takes ownership of an image array; throws if it is not a bijection.
  static Perm from_images(std::vector<Point> images);

  // Parses disjoint-cycle notation, e.g. "(0 1)(2 3)" or "()" for the
  // identity. Points not mentioned are fixed.
  static Perm from_cycles(const std::string &text, Point degree);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point p) const { return images_[p]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;

  Perm operator*(const Perm &other) const; // this first, then other
  Perm inverse() const;
  Perm conjugated_by(const Perm &g) const;
  Perm power(long long e) const;

  // Least k >= 1 with p^k = identity; lcm of cycle lengths.
  std::uint64_t order() const;

  std::vector<std::vector<Point>> cycles() const; // nontrivial cycles only
  std::string to_cycle_string() const;

  std::size_t hash() const;

  auto operator<=>(const Perm &) const = default;

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const { return p.hash(); }
};

// Extends p to a larger degree, fixing the new points.
Perm pad_to_degree(const Perm &p, Point degree);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

} // namespace activesum

#endif
