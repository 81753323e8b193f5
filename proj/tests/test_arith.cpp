#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "selmer/arith.hpp"
#include "selmer/errors.hpp"

using namespace selmer;

TEST_CASE("jacobi examples") {
  CHECK(jacobi(2, 7) == oracle::legendre(2, 7));
  CHECK(jacobi(2, 7) == 1);
  for (std::uint64_t m : {1ULL, 3ULL, 9ULL, 15ULL, 999'999ULL}) CHECK(jacobi(1, m) == 1);
  CHECK(oracle::legendre(89, 13) == -1);
  CHECK(jacobi(89, 13) == -1);
  CHECK(jacobi(-1, 1) == 1);
  CHECK(jacobi(0, 1) == 1);
  CHECK(jacobi(3, 9) == 0);
  CHECK(jacobi(2, 15) == 1);  // (2/3)(2/5) = (-1)(-1)
}

TEST_CASE("jacobi rejects even or zero modulus") {
  CHECK_THROWS_AS(jacobi(3, 0), InvalidArgument);
  CHECK_THROWS_AS(jacobi(3, 8), InvalidArgument);
}

TEST_CASE("legendre examples and errors") {
  CHECK(legendre(-1, 3) == -1);
  CHECK(legendre(2, 3) == -1);
  for (std::uint64_t p : primes_up_to(400)) {
    if (p % 8 == 3 || p % 8 == 5) CHECK(legendre(2, p) == -1);
    if (p % 8 == 1 || p % 8 == 7) CHECK(legendre(2, p) == 1);
  }
  CHECK(legendre(4, 7) == 1);
  CHECK_THROWS_AS(legendre(6, 3), DivisibilityError);
  CHECK_THROWS_AS(legendre(0, 5), DivisibilityError);
  CHECK_THROWS_AS(legendre(2, 9), InvalidArgument);
  CHECK_THROWS_AS(legendre(2, 2), InvalidArgument);
  CHECK_THROWS_AS(legendre(2, 1), InvalidArgument);
  try {
    legendre(10, 5);
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    CHECK(e.prime() == 5);
    CHECK(e.numerator() == 10);
  }
}

TEST_CASE("phi_bit") {
  CHECK(phi_bit(1) == 0);
  CHECK(phi_bit(-1) == 1);
  CHECK(phi_bit(legendre(2, 3)) == 1);
  CHECK_THROWS_AS(phi_bit(0), InvalidArgument);
  CHECK_THROWS_AS(phi_bit(2), InvalidArgument);
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(1051));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(15));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const std::uint64_t n = rng() % 10'000'000'000ULL;
    REQUIRE(is_prime(n) == oracle::is_prime(n));
  }
}

TEST_CASE("is_prime at the top of the 64-bit range") {
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(4294967291ULL * 4294967279ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to the first nine prime bases
  CHECK(is_prime(4294967291ULL));
}

TEST_CASE("factor_squarefree examples") {
  const auto f = factor_squarefree(26611);
  CHECK(f.delta == 0);
  CHECK(f.odd_primes == std::vector<std::uint64_t>{13, 23, 89});
  CHECK(f.m() == 3);

  const auto two = factor_squarefree(2);
  CHECK(two.delta == 1);
  CHECK(two.odd_primes.empty());

  const auto one = factor_squarefree(1);
  CHECK(one.delta == 0);
  CHECK(one.m() == 0);

  try {
    factor_squarefree(12);
    FAIL("expected NotSquareFree");
  } catch (const NotSquareFree& e) {
    CHECK(e.prime() == 2);
    CHECK(e.value() == 12);
  }
  CHECK_THROWS_AS(factor_squarefree(0), InvalidArgument);
}

TEST_CASE("factor_squarefree names the repeated prime") {
  for (auto [n, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {9, 3}, {50, 5}, {2 * 3 * 49, 7}, {1'000'003ULL * 1'000'003ULL, 1'000'003ULL}}) {
    try {
      factor_squarefree(n);
      FAIL("expected NotSquareFree for " << n);
    } catch (const NotSquareFree& e) {
      CHECK(e.prime() == p);
    }
  }
}

TEST_CASE("factor_squarefree handles large prime cofactors") {
  const std::uint64_t a = 4294967291ULL, b = 4294967279ULL;
  const auto f = factor_squarefree(a * b);
  CHECK(f.odd_primes == std::vector<std::uint64_t>{b, a});
  const auto g = factor_squarefree(2 * 1'000'003ULL * 1'000'033ULL * 1'000'037ULL);
  CHECK(g.delta == 1);
  CHECK(g.odd_primes == std::vector<std::uint64_t>{1'000'003ULL, 1'000'033ULL, 1'000'037ULL});
  CHECK(factor_squarefree(18446744073709551557ULL).odd_primes ==
        std::vector<std::uint64_t>{18446744073709551557ULL});
}

TEST_CASE("factor_squarefree round trip up to 1e5") {
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    if (!oracle::squarefree(n)) {
      REQUIRE_THROWS_AS(factor_squarefree(n), NotSquareFree);
      continue;
    }
    const auto f = factor_squarefree(n);
    REQUIRE(product(f.delta, f.odd_primes) == n);
    REQUIRE(std::is_sorted(f.odd_primes.begin(), f.odd_primes.end()));
    for (auto p : f.odd_primes) REQUIRE((p % 2 == 1 && oracle::is_prime(p)));
  }
}

TEST_CASE("product rejects overflow") {
  CHECK(product(1, {3, 5}) == 30);
  CHECK(product(0, {}) == 1);
  CHECK_THROWS_AS(product(0, {4294967291ULL, 4294967279ULL, 3}), OverflowError);
}

TEST_CASE("primes_in_class examples") {
  CHECK(primes_in_class(25, 1) == std::vector<std::uint64_t>{17});
  CHECK(primes_in_class(25, 5) == std::vector<std::uint64_t>{5, 13});
  for (unsigned r : {1U, 3U, 5U, 7U}) CHECK(primes_in_class(2, r).empty());
  CHECK_THROWS_AS(primes_in_class(100, 2), InvalidArgument);
  CHECK_THROWS_AS(primes_in_class(100, 9), InvalidArgument);
}

TEST_CASE("primes_in_class agrees with trial division") {
  for (unsigned r : {1U, 3U, 5U, 7U}) {
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= 5000; ++n)
      if (n % 8 == r && oracle::is_prime(n)) expected.push_back(n);
    CHECK(primes_in_class(5000, r) == expected);
  }
  CHECK(primes_up_to(100).size() == 25);
}

TEST_CASE("jacobi is multiplicative in the numerator") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20000; ++k) {
    const std::uint64_t m = 2 * (rng() % 5000) + 1;
    const auto a = static_cast<std::int64_t>(rng() % 200000) - 100000;
    const auto b = static_cast<std::int64_t>(rng() % 200000) - 100000;
    REQUIRE(jacobi(a * b, m) == jacobi(a, m) * jacobi(b, m));
  }
}

TEST_CASE("legendre matches exhaustive residues and reciprocity up to 500") {
  const auto primes = primes_up_to(500);
  for (std::uint64_t p : primes) {
    if (p == 2) continue;
    for (std::uint64_t q : primes) {
      if (q == 2 || q == p) continue;
      const int pq = legendre(static_cast<std::int64_t>(p), q);
      REQUIRE(pq == oracle::legendre(static_cast<std::int64_t>(p), q));
      const int qp = legendre(static_cast<std::int64_t>(q), p);
      if (p % 4 == 3 && q % 4 == 3)
        REQUIRE(pq == -qp);
      else
        REQUIRE(pq == qp);
    }
  }
}
