#pragma once
// Slow, independent reference implementations. None of these call into the
// library except to read matrix entries, so agreement with the fast paths is
// meaningful.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "selmer/gf2.hpp"

namespace oracle {

// Legendre symbol by listing the squares mod p.
inline int legendre(std::int64_t a, std::uint64_t p) {
  const auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                            static_cast<std::int64_t>(p));
  if (r == 0) return 0;
  for (std::uint64_t x = 1; x < p; ++x)
    if (x * x % p == r) return 1;
  return -1;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Plain sieve over [0, x], byte per entry.
inline std::vector<char> sieve(std::uint64_t x) {
  std::vector<char> composite(x + 1, 0);
  for (std::uint64_t i = 2; i * i <= x; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = 1;
  return composite;
}

inline std::uint64_t prime_pi(std::uint64_t x) {
  if (x < 2) return 0;
  const auto composite = sieve(x);
  std::uint64_t count = 0;
  for (std::uint64_t i = 2; i <= x; ++i) count += composite[i] == 0;
  return count;
}

// Prime factors with multiplicity, by trial division.
inline std::vector<std::uint64_t> factor(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool squarefree(std::uint64_t n) {
  const auto f = factor(n);
  return std::adjacent_find(f.begin(), f.end()) == f.end();
}

// Number of distinct vectors spanned by the rows.
inline std::size_t row_space_size(const selmer::F2Matrix& m) {
  std::set<std::vector<bool>> seen;
  const std::size_t r = m.rows();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<bool> v(m.cols(), false);
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1U)
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = v[j] != m.get(i, j);
    seen.insert(v);
  }
  return seen.size();
}

inline std::size_t rank_by_enumeration(const selmer::F2Matrix& m) {
  std::size_t size = row_space_size(m);
  std::size_t log = 0;
  while (size > 1) {
    size >>= 1;
    ++log;
  }
  return log;
}

// Leibniz expansion mod 2 (the permanent and determinant agree over F2).
inline int det_leibniz(const selmer::F2Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  int acc = 0;
  do {
    bool term = true;
    for (std::size_t i = 0; i < perm.size() && term; ++i) term = m.get(i, perm[i]);
    acc ^= term ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

using IntMatrix = std::vector<std::vector<int>>;

inline std::size_t rank_mod2(IntMatrix a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] % 2 == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && a[r][c] % 2 != 0)
        for (std::size_t k = 0; k < cols; ++k) a[r][k] = (a[r][k] + a[rank][k]) % 2;
    ++rank;
  }
  return rank;
}

inline int bit(int symbol) { return symbol == -1 ? 1 : 0; }

// The 2m x 2m Monsky matrix written out entry by entry, primes in the given order.
inline IntMatrix monsky(bool even, const std::vector<std::uint64_t>& ps) {
  const std::size_t m = ps.size();
  IntMatrix e(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    int sum = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) {
        e[i][j] = bit(legendre(static_cast<std::int64_t>(ps[j]), ps[i]));
        sum += e[i][j];
      }
    e[i][i] = sum % 2;
  }
  auto d = [&](int l, std::size_t i) { return bit(legendre(l, ps[i])); };
  IntMatrix out(2 * m, std::vector<int>(2 * m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int diag = i == j;
      out[i][j] = diag * d(2, i);
      out[i][m + j] = (e[i][j] + diag * d(2, i)) % 2;
      if (even) {
        out[m + i][j] = (e[j][i] + diag * d(2, i)) % 2;
        out[m + i][m + j] = diag * d(-1, i);
      } else {
        out[m + i][j] = (e[i][j] + diag * d(-2, i)) % 2;
        out[m + i][m + j] = diag * d(2, i);
      }
    }
  return out;
}

// 2-Selmer rank of a square-free n from scratch.
inline std::size_t selmer_rank(std::uint64_t n) {
  std::vector<std::uint64_t> odd;
  bool even = false;
  for (std::uint64_t p : factor(n)) {
    if (p == 2)
      even = true;
    else
      odd.push_back(p);
  }
  return 2 * odd.size() - rank_mod2(monsky(even, odd));
}

}  // namespace oracle
