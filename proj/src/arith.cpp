#include "selmer/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

// Odd-only primality table for n < kTableLimit.
const std::vector<bool>& small_prime_table() {
  static const std::vector<bool> table = [] {
    std::vector<bool> prime(kTableLimit / 2, true);
    prime[0] = false;  // 1
    for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) < kTableLimit; ++i) {
      if (!prime[i]) continue;
      const std::uint64_t p = 2 * i + 1;
      for (std::uint64_t j = p * p; j < kTableLimit; j += 2 * p) prime[j / 2] = false;
    }
    return prime;
  }();
  return table;
}

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's variant of Pollard rho; n must be an odd composite.
std::uint64_t rho_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t batch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, abs_diff(x, y), n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(abs_diff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_cofactor(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho_divisor(n);
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int jacobi(std::int64_t a, std::uint64_t m) {
  if (m == 0 || m % 2 == 0) {
    throw InvalidArgument("jacobi: modulus must be odd and positive, got " + std::to_string(m));
  }
  std::uint64_t x;
  if (a >= 0) {
    x = static_cast<std::uint64_t>(a) % m;
  } else {
    // -(a) may not fit in int64 for INT64_MIN; go through unsigned negation.
    std::uint64_t mag = ~static_cast<std::uint64_t>(a) + 1;
    x = (m - mag % m) % m;
  }
  int t = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      std::uint64_t r = m % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) t = -t;
    x %= m;
  }
  return m == 1 ? t : 0;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw InvalidArgument("legendre: modulus " + std::to_string(p) + " is not an odd prime");
  }
  int s = jacobi(a, p);
  if (s == 0) throw DivisibilityError(a, p);
  return s;
}

int phi_bit(int symbol) {
  if (symbol == 1) return 0;
  if (symbol == -1) return 1;
  throw InvalidArgument("phi_bit: symbol must be +1 or -1, got " + std::to_string(symbol));
}

bool is_prime(std::uint64_t n) {
  static constexpr std::array<std::uint64_t, 12> bases = {2,  3,  5,  7,  11, 13,
                                                          17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  if (n < kTableLimit) return n == 2 || (n % 2 == 1 && small_prime_table()[n / 2]);
  for (std::uint64_t p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // The first twelve prime bases are a proven witness set below 3.3e24.
  return std::all_of(bases.begin(), bases.end(),
                     [&](std::uint64_t a) { return miller_rabin_round(n, a, d, s); });
}

SquareFreeFactorization factor_squarefree(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factor_squarefree: n must be positive");
  SquareFreeFactorization f;
  f.n = n;
  std::uint64_t rest = n;
  if (rest % 2 == 0) {
    rest /= 2;
    if (rest % 2 == 0) throw NotSquareFree(n, 2);
    f.delta = 1;
  }
  for (std::uint64_t d = 3; d <= kTrialLimit && d * d <= rest; d += 2) {
    if (rest % d != 0) continue;
    rest /= d;
    if (rest % d == 0) throw NotSquareFree(n, d);
    f.odd_primes.push_back(d);
  }
  if (rest > 1) {
    std::vector<std::uint64_t> big;
    split_cofactor(rest, big);
    std::sort(big.begin(), big.end());
    auto dup = std::adjacent_find(big.begin(), big.end());
    if (dup != big.end()) throw NotSquareFree(n, *dup);
    f.odd_primes.insert(f.odd_primes.end(), big.begin(), big.end());
  }
  return f;
}

std::uint64_t product(int delta, const std::vector<std::uint64_t>& odd_primes) {
  std::uint64_t n = delta ? 2 : 1;
  for (std::uint64_t p : odd_primes) {
    if (__builtin_mul_overflow(n, p, &n)) {
      throw OverflowError("product of primes exceeds 64 bits");
    }
  }
  return n;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  primes.push_back(2);
  // composite[i] describes the odd number 2i + 1.
  std::vector<bool> composite(bound / 2 + 1, false);
  for (std::uint64_t i = 1; 2 * i + 1 <= bound; ++i) {
    if (composite[i]) continue;
    std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t j = p * p; j <= bound; j += 2 * p) composite[j / 2] = true;
  }
  return primes;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t bound, unsigned residue) {
  if (residue % 2 == 0 || residue > 7) {
    throw InvalidArgument("primes_in_class: residue must be 1, 3, 5 or 7 (mod 8), got " +
                          std::to_string(residue));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (p % 8 == residue) out.push_back(p);
  }
  return out;
}

}  // namespace selmer
