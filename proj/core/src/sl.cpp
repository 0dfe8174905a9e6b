#include "activesum/sl.hpp"

#include <sstream>

#include "activesum/errors.hpp"
#include "activesum/gf.hpp"

namespace activesum {

std::uint64_t sl_order_formula(unsigned n, unsigned q) {
  // q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1)
  std::uint64_t order = 1;
  for (unsigned e = 0; e < n * (n - 1) / 2; ++e)
    order *= q;
  std::uint64_t qpow = q;
  for (unsigned i = 2; i <= n; ++i) {
    qpow *= q;
    order *= qpow - 1;
  }
  return order;
}

namespace {

using Matrix = std::vector<std::vector<unsigned>>; // row-major over GF(q)

// Vectors are rows acting by v -> v * M; indexing is base-q over the
// coordinates, with vector index 1..q^n-1 shifted down by one to skip zero.
Perm matrix_to_perm(const Matrix &m, const GF &field, unsigned n) {
  unsigned q = field.q();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i)
    total *= q;
  std::vector<Point> images(total - 1);
  std::vector<unsigned> v(n), w(n);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t rest = code;
    for (unsigned i = 0; i < n; ++i) {
      v[i] = static_cast<unsigned>(rest % q);
      rest /= q;
    }
    for (unsigned j = 0; j < n; ++j) {
      unsigned acc = 0;
      for (unsigned i = 0; i < n; ++i)
        acc = field.add(acc, field.mul(v[i], m[i][j]));
      w[j] = acc;
    }
    std::uint64_t image_code = 0;
    for (unsigned i = n; i-- > 0;)
      image_code = image_code * q + w[i];
    images[code - 1] = static_cast<Point>(image_code - 1);
  }
  return Perm::from_images(std::move(images));
}

} // namespace

SlResult sl_to_perm(unsigned n, unsigned q) {
  if (n < 2 || n > 4)
    throw UnsupportedParameters("SL(n, q): n must be 2, 3 or 4");
  if (!GF::is_prime_power(q) || q > 8)
    throw UnsupportedParameters("SL(n, q): q must be a prime power <= 8");
  std::uint64_t degree = 1;
  for (unsigned i = 0; i < n; ++i)
    degree *= q;
  degree -= 1;
  if (degree > 1000)
    throw UnsupportedParameters("SL(n, q): q^n - 1 exceeds 1000 points");
  if (n == 2 && !GF::is_prime(q))
    throw UnsupportedParameters(
        "SL(2, q) with q a non-prime prime power is not generated by the "
        "standard transvection/cycle pair");

  GF field(q);
  // Transvection entry: 1 over a prime field, a primitive element otherwise
  // (powers of the transvection then reach only the prime subfield, but for
  // n >= 3 commutators recover the rest).
  unsigned alpha = GF::is_prime(q) ? 1 : field.primitive_element();

  Matrix transvection(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i < n; ++i)
    transvection[i][i] = 1;
  transvection[0][1] = alpha;

  // Cyclic matrix e_i -> e_{i+1}, e_{n-1} -> (-1)^(n-1) e_0; the sign makes
  // the determinant 1.
  Matrix cycle(n, std::vector<unsigned>(n, 0));
  for (unsigned i = 0; i + 1 < n; ++i)
    cycle[i][i + 1] = 1;
  cycle[n - 1][0] = (n % 2 == 1) ? 1u : field.neg(1);

  std::vector<Perm> gens;
  gens.push_back(matrix_to_perm(transvection, field, n));
  gens.push_back(matrix_to_perm(cycle, field, n));

  SlResult result;
  result.group = PermGroup(static_cast<Point>(degree), std::move(gens));
  result.order = sl_order_formula(n, q);

  if (result.group.order() != result.order)
    throw UnsupportedParameters(
        "SL(" + std::to_string(n) + ", " + std::to_string(q) +
        "): standard generator pair generates a proper subgroup");

  std::ostringstream note;
  note << "transvection I + " << alpha << "*E(0,1) and cyclic matrix with "
       << ((n % 2 == 1) ? "+1" : "-1") << " corner over GF(" << q << ")";
  result.generator_note = note.str();
  return result;
}

} // namespace activesum
