#include "selmer/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "selmer/arith.hpp"
#include "selmer/errors.hpp"

namespace selmer {

namespace {

void require_x(std::uint64_t x) {
  if (x > kMaxDensityX) {
    throw ResourceError("x = " + std::to_string(x) + " exceeds the sieve cap " + std::to_string(kMaxDensityX));
  }
}

double log_log(double x) {
  if (!(x > std::numbers::e)) throw DomainError("log log x needs x > e, got " + std::to_string(x));
  return std::log(std::log(x));
}

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

// Smallest member of each residue class used for the lower product bounds.
std::uint64_t smallest_in_class(unsigned residue) {
  switch (residue) {
    case 1: return 17;
    case 3: return 3;
    case 5: return 5;
    case 7: return 7;
  }
  return 1;
}

}  // namespace

std::uint64_t count_squarefree_k_primes(std::uint64_t x, unsigned k) {
  if (x < 2 || k < 1) throw InvalidArgument("count_squarefree_k_primes needs x >= 2 and k >= 1");
  require_x(x);
  // omega[n] counts distinct prime divisors; squareful marks n with p^2 | n.
  std::vector<std::uint8_t> omega(x + 1, 0);
  std::vector<bool> squareful(x + 1, false);
  for (std::uint64_t p : primes_up_to(x)) {
    for (std::uint64_t m = p; m <= x; m += p) ++omega[m];
    if (p <= x / p) {
      for (std::uint64_t m = p * p; m <= x; m += p * p) squareful[m] = true;
    }
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    if (omega[n] == k && !squareful[n]) ++count;
  }
  return count;
}

double landau_asymptotic(double x, unsigned k) {
  if (k < 1) throw InvalidArgument("landau_asymptotic needs k >= 1");
  const double ll = log_log(x);
  return x * std::pow(ll, static_cast<double>(k - 1)) / (factorial(k - 1) * std::log(x));
}

double family_asymptotic(double x, unsigned t) {
  if (t < 1) throw InvalidArgument("family_asymptotic needs t >= 1");
  const double exponent = (9.0 * t * t + 7.0 * t) / 2.0;
  return std::exp2(-exponent) * landau_asymptotic(x, 3 * t);
}

std::vector<std::uint64_t> family_members(std::uint64_t x, const FamilySpec& spec, unsigned workers) {
  require_x(x);
  spec.validate();
  // Each prime is at most x divided by the smallest possible cofactor.
  std::vector<std::uint64_t> minima;
  for (Role r : roles_of(spec.theorem)) {
    const std::size_t copies = (spec.theorem == Theorem::T377 && r != Role::R) ? 1 : static_cast<std::size_t>(spec.t);
    minima.insert(minima.end(), copies, smallest_in_class(role_residue(spec.theorem, r)));
  }
  std::uint64_t floor_product = (spec.theorem == Theorem::T533 || spec.theorem == Theorem::T2x1357) ? 2 : 1;
  for (std::uint64_t v : minima) {
    if (__builtin_mul_overflow(floor_product, v, &floor_product) || floor_product > x) return {};
  }
  std::uint64_t prime_bound = 0;
  for (std::uint64_t v : minima) {
    prime_bound = std::max(prime_bound, x / (floor_product / v));
  }
  if (prime_bound < 3) return {};

  SearchOptions options;
  options.prime_bound = prime_bound;
  options.max_n = x;
  options.workers = workers;
  std::vector<std::uint64_t> members;
  for (const PrimeTuple& tuple : search(spec, options)) {
    const std::uint64_t n = assemble_n(spec, tuple);
    if (n <= x) members.push_back(n);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

std::uint64_t count_family(std::uint64_t x, const FamilySpec& spec, unsigned workers) {
  return family_members(x, spec, workers).size();
}

DensityReport k_prime_density(std::uint64_t x, unsigned k) {
  DensityReport r;
  r.x = x;
  r.subject = "k=" + std::to_string(k);
  r.exact_count = count_squarefree_k_primes(x, k);
  r.asymptotic_value = landau_asymptotic(static_cast<double>(x), k);
  r.ratio = static_cast<double>(r.exact_count) / *r.asymptotic_value;
  return r;
}

DensityReport family_density(std::uint64_t x, const FamilySpec& spec, unsigned workers) {
  DensityReport r;
  r.x = x;
  r.subject = "theorem=" + std::string(theorem_name(spec.theorem)) + " t=" + std::to_string(spec.t);
  if (const std::string params = spec.params_string(); !params.empty()) r.subject += " " + params;
  r.exact_count = count_family(x, spec, workers);
  if (spec.theorem == Theorem::T157 && x >= 16) {
    r.asymptotic_value = family_asymptotic(static_cast<double>(x), static_cast<unsigned>(spec.t));
    r.ratio = static_cast<double>(r.exact_count) / *r.asymptotic_value;
  }
  return r;
}

}  // namespace selmer
