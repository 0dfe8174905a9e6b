#include "activesum/abelianization.hpp"

#include <algorithm>
#include <cstdlib>

#include "activesum/errors.hpp"

namespace activesum {

std::uint64_t Abelianization::order() const {
  if (!finite())
    throw CutoffExceeded("abelianization is infinite");
  std::uint64_t n = 1;
  for (std::uint64_t f : invariant_factors)
    n *= f;
  return n;
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  std::vector<std::int64_t> diag;

  while (t < rows && t < cols) {
    // Pivot: nonzero entry of minimal absolute value in the submatrix.
    std::size_t pr = t, pc = t;
    std::int64_t best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (best == 0 || std::abs(m[i][j]) < std::abs(best))) {
          best = m[i][j];
          pr = i;
          pc = j;
        }
    if (best == 0)
      break; // submatrix is zero
    std::swap(m[t], m[pr]);
    for (std::size_t i = t; i < rows; ++i)
      std::swap(m[i][t], m[i][pc]);

    bool reduced = false;
    while (!reduced) {
      reduced = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0)
          continue;
        std::int64_t q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j)
          m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]); // remainder is smaller; iterate
          reduced = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0)
          continue;
        std::int64_t q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i)
          m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (std::size_t i = t; i < rows; ++i)
            std::swap(m[i][t], m[i][j]);
          reduced = false;
        }
      }
    }
    diag.push_back(std::abs(m[t][t]));
    ++t;
  }
  while (diag.size() < std::min(rows, cols))
    diag.push_back(0);
  // Pad for wide/tall shapes so callers can read the kernel rank off cols.
  while (diag.size() < cols)
    diag.push_back(0);

  // Enforce the divisibility chain: replace pairs by (gcd, lcm).
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] == 0)
        continue;
      if (diag[i] == 0) {
        std::swap(diag[i], diag[j]);
        continue;
      }
      if (diag[j] % diag[i] != 0) {
        std::int64_t g = static_cast<std::int64_t>(
            gcd_u64(static_cast<std::uint64_t>(diag[i]),
                    static_cast<std::uint64_t>(diag[j])));
        std::int64_t l = diag[i] / g * diag[j];
        diag[i] = g;
        diag[j] = l;
      }
    }
  // Zeros belong at the end; the gcd/lcm pass may have left them mixed.
  std::stable_partition(diag.begin(), diag.end(),
                        [](std::int64_t d) { return d != 0; });
  return diag;
}

Abelianization abelianization(const Presentation &p) {
  std::vector<std::vector<std::int64_t>> m(
      p.relators().size(), std::vector<std::int64_t>(p.rank(), 0));
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (int letter : p.relators()[r]) {
      std::size_t gi = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      m[r][gi] += letter > 0 ? 1 : -1;
    }

  auto diag = smith_diagonal(std::move(m));
  Abelianization result;
  std::size_t nonzero = 0;
  for (std::int64_t d : diag) {
    if (d == 0)
      continue;
    ++nonzero;
    if (d > 1)
      result.invariant_factors.push_back(static_cast<std::uint64_t>(d));
  }
  result.free_rank = p.rank() - nonzero;
  return result;
}

} // namespace activesum
