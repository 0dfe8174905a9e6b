#include "activesum/gf.hpp"

#include "activesum/errors.hpp"

namespace activesum {

namespace {

// Irreducible polynomials over GF(p) for the supported extension fields,
// as coefficient arrays of x^k: x^2 + x + 1 over GF(2), x^3 + x + 1 over
// GF(2). Reduction uses x^k = -(lower terms).
struct Extension {
  unsigned q, p, k;
  std::vector<unsigned> modulus_tail; // coefficients of 1, x, ..., x^(k-1)
};

const Extension *extension_for(unsigned q) {
  static const std::vector<Extension> table = {
      {4, 2, 2, {1, 1}},
      {8, 2, 3, {1, 1, 0}},
  };
  for (const auto &e : table)
    if (e.q == q)
      return &e;
  return nullptr;
}

} // namespace

bool GF::is_prime(unsigned q) {
  if (q < 2)
    return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

bool GF::is_prime_power(unsigned q) {
  if (q < 2)
    return false;
  unsigned p = q;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  while (q % p == 0)
    q /= p;
  return q == 1;
}

GF::GF(unsigned q) : q_(q) {
  if (q < 2 || q > 8 || !is_prime_power(q))
    throw UnsupportedParameters("GF(" + std::to_string(q) +
                                "): need a prime power between 2 and 8");

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);

  if (is_prime(q)) {
    p_ = q;
    for (unsigned a = 0; a < q; ++a) {
      neg_[a] = (q - a) % q;
      for (unsigned b = 0; b < q; ++b) {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  } else {
    const Extension *ext = extension_for(q);
    if (!ext)
      throw UnsupportedParameters("GF(" + std::to_string(q) +
                                  "): no polynomial basis tabulated");
    p_ = ext->p;
    unsigned k = ext->k;
    auto digits = [&](unsigned a) {
      std::vector<unsigned> d(k);
      for (unsigned i = 0; i < k; ++i) {
        d[i] = a % p_;
        a /= p_;
      }
      return d;
    };
    auto index = [&](const std::vector<unsigned> &d) {
      unsigned a = 0;
      for (unsigned i = k; i-- > 0;)
        a = a * p_ + d[i];
      return a;
    };
    for (unsigned a = 0; a < q; ++a) {
      auto da = digits(a);
      std::vector<unsigned> dn(k);
      for (unsigned i = 0; i < k; ++i)
        dn[i] = (p_ - da[i]) % p_;
      neg_[a] = index(dn);
      for (unsigned b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<unsigned> sum(k);
        for (unsigned i = 0; i < k; ++i)
          sum[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = index(sum);

        // Polynomial product reduced by the modulus.
        std::vector<unsigned> prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i)
          for (unsigned j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (unsigned deg = 2 * k - 2; deg >= k; --deg) {
          unsigned c = prod[deg];
          if (c == 0)
            continue;
          prod[deg] = 0;
          for (unsigned i = 0; i < k; ++i)
            prod[deg - k + i] =
                (prod[deg - k + i] + c * (p_ - ext->modulus_tail[i] % p_)) % p_;
        }
        std::vector<unsigned> red(prod.begin(), prod.begin() + k);
        mul_[a * q + b] = index(red);
      }
    }
  }

  // Find a multiplicative generator.
  primitive_ = 1;
  for (unsigned a = 1; a < q; ++a) {
    unsigned x = a, count = 1;
    while (x != 1) {
      x = mul(x, a);
      ++count;
    }
    if (count == q - 1) {
      primitive_ = a;
      break;
    }
  }
}

} // namespace activesum
