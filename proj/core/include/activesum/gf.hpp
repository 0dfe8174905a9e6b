#ifndef ACTIVESUM_GF_HPP
#define ACTIVESUM_GF_HPP

#include <cstdint>
#include <vector>

namespace activesum {

// Finite field GF(q) for q a prime power <= 8, with elements 0..q-1 and
// tabulated arithmetic. Non-prime fields use a polynomial basis over GF(p);
// an element's index encodes its coefficient vector in base p.
class GF {
public:
  explicit GF(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }

  // A generator of the multiplicative group (1 when q = 2).
  unsigned primitive_element() const { return primitive_; }

  static bool is_prime_power(unsigned q);
  static bool is_prime(unsigned q);

private:
  unsigned q_, p_;
  unsigned primitive_;
  std::vector<unsigned> add_, mul_, neg_;
};

} // namespace activesum

#endif
