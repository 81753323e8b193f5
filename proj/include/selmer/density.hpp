#pragma once

// Exact counts of family members and of square-free k-prime integers up to x,
// next to the asymptotic formulas they are expected to follow.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "selmer/families.hpp"

namespace selmer {

inline constexpr std::uint64_t kMaxDensityX = 100'000'000;

struct DensityReport {
  std::uint64_t x = 0;
  std::string subject;  // "k=2" or "theorem=157 t=1 alpha=1"
  std::uint64_t exact_count = 0;
  // Absent when no asymptotic constant is known for the subject.
  std::optional<double> asymptotic_value;
  std::optional<double> ratio;  // exact / asymptotic
};

/// Integers n <= x that are products of exactly k distinct primes.
/// Throws InvalidArgument (x < 2, k < 1) or ResourceError (x > kMaxDensityX).
std::uint64_t count_squarefree_k_primes(std::uint64_t x, unsigned k);

/// x (log log x)^(k-1) / ((k-1)! log x). Throws DomainError for x <= e.
double landau_asymptotic(double x, unsigned k);

/// Distinct members n <= x of the family, ascending.
std::vector<std::uint64_t> family_members(std::uint64_t x, const FamilySpec& spec, unsigned workers = 1);
std::uint64_t count_family(std::uint64_t x, const FamilySpec& spec, unsigned workers = 1);

/// 2^-((9t^2 + 7t)/2) * x (log log x)^(3t-1) / ((3t-1)! log x); the constant
/// is only known for the (1,5,7) family.
double family_asymptotic(double x, unsigned t);

DensityReport k_prime_density(std::uint64_t x, unsigned k);
/// Asymptotic fields are filled for the (1,5,7) family only.
DensityReport family_density(std::uint64_t x, const FamilySpec& spec, unsigned workers = 1);

}  // namespace selmer
