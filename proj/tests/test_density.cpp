#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "selmer/density.hpp"
#include "selmer/errors.hpp"
#include "selmer/monsky.hpp"

using namespace selmer;

namespace {

FamilySpec t157(int t = 1, int alpha = 1) {
  FamilySpec s;
  s.theorem = Theorem::T157;
  s.t = t;
  s.alpha = alpha;
  return s;
}

std::uint64_t count_k_by_factoring(std::uint64_t x, unsigned k) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    const auto f = oracle::factor(n);
    count += f.size() == k && std::adjacent_find(f.begin(), f.end()) == f.end();
  }
  return count;
}

// n = pqr <= x with (p, q, r) = (1, 5, 7) mod 8 and (p/q) = (p/r) = -1.
std::vector<std::uint64_t> members_157_by_scan(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 17; p * 5 * 7 <= x; p += 8) {
    if (!oracle::is_prime(p)) continue;
    for (std::uint64_t q = 5; p * q * 7 <= x; q += 8) {
      if (!oracle::is_prime(q) || oracle::legendre(static_cast<std::int64_t>(p), q) != -1) continue;
      for (std::uint64_t r = 7; p * q * r <= x; r += 8)
        if (oracle::is_prime(r) && oracle::legendre(static_cast<std::int64_t>(p), r) == -1) out.push_back(p * q * r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("count_squarefree_k_primes examples") {
  CHECK(count_squarefree_k_primes(100, 1) == 25);
  CHECK(oracle::prime_pi(100) == 25);
  CHECK(count_squarefree_k_primes(30, 2) == 7);
  CHECK(count_k_by_factoring(30, 2) == 7);
  CHECK(count_squarefree_k_primes(5, 3) == 0);
  CHECK(count_squarefree_k_primes(30, 3) == 1);
  CHECK(count_squarefree_k_primes(2, 1) == 1);
}

TEST_CASE("count_squarefree_k_primes errors") {
  CHECK_THROWS_AS(count_squarefree_k_primes(1, 1), InvalidArgument);
  CHECK_THROWS_AS(count_squarefree_k_primes(100, 0), InvalidArgument);
  CHECK_THROWS_AS(count_squarefree_k_primes(kMaxDensityX + 1, 1), ResourceError);
}

TEST_CASE("count_squarefree_k_primes agrees with factoring") {
  for (std::uint64_t x : {2ULL, 3ULL, 29ULL, 30ULL, 210ULL, 1000ULL, 5000ULL})
    for (unsigned k = 1; k <= 5; ++k) REQUIRE(count_squarefree_k_primes(x, k) == count_k_by_factoring(x, k));
}

TEST_CASE("prime counts against an independent sieve") {
  for (std::uint64_t x : {10ULL, 1000ULL, 65536ULL, 1'000'000ULL})
    CHECK(count_squarefree_k_primes(x, 1) == oracle::prime_pi(x));
  CHECK(count_squarefree_k_primes(1'000'000, 1) == 78498);
}

TEST_CASE("counts are monotone in x") {
  for (unsigned k = 1; k <= 3; ++k) {
    std::uint64_t prev = 0;
    for (std::uint64_t x = 2; x <= 3000; x += 37) {
      const auto c = count_squarefree_k_primes(x, k);
      REQUIRE(c >= prev);
      prev = c;
    }
  }
  std::uint64_t prev = 0;
  for (std::uint64_t x = 500; x <= 60000; x += 2500) {
    const auto c = count_family(x, t157());
    REQUIRE(c >= prev);
    prev = c;
  }
}

TEST_CASE("landau_asymptotic") {
  for (double x : {16.0, 1e3, 1e6, 1e9}) CHECK(landau_asymptotic(x, 1) == doctest::Approx(x / std::log(x)));
  CHECK(landau_asymptotic(1e6, 1) == doctest::Approx(72382.4).epsilon(1e-6));
  CHECK(landau_asymptotic(1e6, 2) == doctest::Approx(190061.15651385117).epsilon(1e-12));
  CHECK_THROWS_AS(landau_asymptotic(2.0, 1), DomainError);
  CHECK_THROWS_AS(landau_asymptotic(std::exp(1.0), 2), DomainError);
  CHECK_THROWS_AS(landau_asymptotic(1e6, 0), InvalidArgument);
}

TEST_CASE("family_asymptotic") {
  for (double x : {1e4, 1e6, 1e8}) {
    const double lx = std::log(x), llx = std::log(lx);
    CHECK(family_asymptotic(x, 1) == doctest::Approx(x * llx * llx / (2.0 * lx) / 256.0));
    CHECK(family_asymptotic(x, 1) / landau_asymptotic(x, 3) == doctest::Approx(1.0 / 256));
    CHECK(family_asymptotic(x, 2) / landau_asymptotic(x, 6) == doctest::Approx(std::ldexp(1.0, -25)));
  }
  CHECK_THROWS_AS(family_asymptotic(1e6, 0), InvalidArgument);
  CHECK_THROWS_AS(family_asymptotic(2.0, 1), DomainError);
}

TEST_CASE("count_family examples") {
  const auto members = family_members(595, t157());
  CHECK(count_family(595, t157()) >= 1);
  CHECK(std::find(members.begin(), members.end(), 595) != members.end());
  CHECK(count_family(29, t157()) == 0);
  const auto upto = family_members(26611, t157());
  CHECK(std::find(upto.begin(), upto.end(), 26611) != upto.end());
}

TEST_CASE("family members match an exhaustive scan") {
  for (std::uint64_t x : {595ULL, 10'000ULL, 200'000ULL}) CHECK(family_members(x, t157()) == members_157_by_scan(x));
  CHECK(family_members(200'000, t157(), 4) == members_157_by_scan(200'000));
}

TEST_CASE("family members are distinct and certify") {
  FamilySpec s355;
  s355.theorem = Theorem::T355;
  const auto members = family_members(100'000, s355);
  CHECK(std::adjacent_find(members.begin(), members.end()) == members.end());
  CHECK(std::count(members.begin(), members.end(), 1515) == 1);
  for (auto n : members) REQUIRE(certify(n).certified_noncongruent);
  for (auto n : family_members(300'000, t157())) REQUIRE(certify(n).certified_noncongruent);
}

TEST_CASE("density reports") {
  const auto k2 = k_prime_density(1'000'000, 2);
  CHECK(k2.x == 1'000'000);
  CHECK(k2.subject == "k=2");
  CHECK(k2.exact_count == count_squarefree_k_primes(1'000'000, 2));
  REQUIRE(k2.asymptotic_value);
  CHECK(*k2.asymptotic_value == doctest::Approx(190061.15651385117));
  REQUIRE(k2.ratio);
  CHECK(*k2.ratio == doctest::Approx(static_cast<double>(k2.exact_count) / *k2.asymptotic_value));

  const auto fam = family_density(100'000, t157());
  CHECK(fam.exact_count == count_family(100'000, t157()));
  CHECK(fam.asymptotic_value);
  CHECK(fam.subject.find("157") != std::string::npos);

  FamilySpec s1357;
  s1357.theorem = Theorem::T1357;
  const auto other = family_density(100'000, s1357);
  CHECK_FALSE(other.asymptotic_value);
  CHECK_FALSE(other.ratio);
}
