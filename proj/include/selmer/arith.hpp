#pragma once

// Integer substrate: quadratic symbols, 64-bit primality, square-free
// factorization and prime sieves.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace selmer {

// n = 2^delta * p_1 * ... * p_m with odd primes p_1 < ... < p_m.
struct SquareFreeFactorization {
  std::uint64_t n = 1;
  int delta = 0;
  std::vector<std::uint64_t> odd_primes;

  std::size_t m() const noexcept { return odd_primes.size(); }
  friend bool operator==(const SquareFreeFactorization&,
                         const SquareFreeFactorization&) = default;
};

/// Jacobi symbol (a / m) for odd m >= 1, in {-1, 0, +1}.
/// Throws InvalidArgument for even or zero modulus.
int jacobi(std::int64_t a, std::uint64_t m);

/// Legendre symbol (a / p). p must be an odd prime not dividing a.
int legendre(std::int64_t a, std::uint64_t p);

/// The map (-1)^e -> e taking a nonzero symbol to an F2 bit.
int phi_bit(int symbol);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Throws NotSquareFree naming the repeated prime, InvalidArgument for n = 0.
SquareFreeFactorization factor_squarefree(std::uint64_t n);

/// Reassembles n from a factorization; throws OverflowError past 64 bits.
std::uint64_t product(int delta, const std::vector<std::uint64_t>& odd_primes);

/// All primes <= bound, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Primes p <= bound with p = residue (mod 8); residue must be 1, 3, 5 or 7.
std::vector<std::uint64_t> primes_in_class(std::uint64_t bound, unsigned residue);

/// (a * b) mod m without overflow.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace selmer
