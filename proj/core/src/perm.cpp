#include "activesum/perm.hpp"

#include <algorithm>
#include <sstream>

#include "activesum/errors.hpp"

namespace activesum {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return a / gcd_u64(a, b) * b;
}

Perm::Perm(Point degree) {
  images_.resize(degree);
  for (Point i = 0; i < degree; ++i)
    images_[i] = i;
}

Perm Perm::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point im : images) {
    if (im >= images.size() || seen[im])
      throw ParseError("image array is not a bijection", 0);
    seen[im] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::from_cycles(const std::string &text, Point degree) {
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i)
    images[i] = i;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation: " + text, 0);
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point in cycle notation: " + text, 0);
      Point value = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<Point>(text[pos] - '0');
        ++pos;
      }
      if (value >= degree)
        throw ParseError("point " + std::to_string(value) +
                             " out of range for degree " + std::to_string(degree),
                         0);
      cycle.push_back(value);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size())
      throw ParseError("unterminated cycle: " + text, 0);
    ++pos; // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (images[from] != from)
        throw ParseError("cycles are not disjoint: " + text, 0);
      if (cycle.size() > 1)
        images[from] = to;
    }
    skip_ws();
  }
  return from_images(std::move(images));
}

bool Perm::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::operator*(const Perm &other) const {
  Perm r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i)
    r.images_[i] = other.images_[images_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i)
    r.images_[images_[i]] = i;
  return r;
}

Perm Perm::conjugated_by(const Perm &g) const {
  return g.inverse() * (*this) * g;
}

Perm Perm::power(long long e) const {
  Perm base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Perm acc(degree());
  while (e > 0) {
    if (e & 1)
      acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    Point j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    result = lcm_u64(result, len);
  }
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);
  for (Point i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<Point> cycle;
    Point j = i;
    while (!seen[j]) {
      seen[j] = true;
      cycle.push_back(j);
      j = images_[j];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Perm::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0)
        out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  return out.str();
}

std::size_t Perm::hash() const {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ull;
  for (Point im : images_) {
    h ^= im;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm pad_to_degree(const Perm &p, Point degree) {
  if (p.degree() >= degree)
    return p;
  std::vector<Point> images(degree);
  for (Point i = 0; i < degree; ++i)
    images[i] = i < p.degree() ? p[i] : i;
  return Perm::from_images(std::move(images));
}

} // namespace activesum
