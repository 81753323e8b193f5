#pragma once

// Monsky matrices of a square-free n and the 2-Selmer rank they determine.
//
// For n = 2^delta p_1...p_m the rank is s(n) = 2m - rank(M), with M the 2m x 2m
// matrix
//
//   odd n:  [ D2       E + D2 ]      even n:  [ D2       E + D2 ]
//           [ E + D-2  D2     ]               [ E' + D2  D-1    ]
//
// where D_l is diagonal with phi((l / p_i)) and E(i, j) = phi((p_j / p_i)) off
// the diagonal, E(i, i) being the row sum. s(n) = 0 forces the Mordell-Weil
// rank to vanish, so n is not congruent.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "selmer/arith.hpp"
#include "selmer/gf2.hpp"

namespace selmer {

enum class MonskyKind { Odd, Even };

/// "M_o" or "M_e".
std::string_view kind_name(MonskyKind kind);
/// Inverse of kind_name; throws InvalidArgument.
MonskyKind parse_kind(std::string_view name);

struct MonskyMatrix {
  MonskyKind kind = MonskyKind::Odd;
  std::size_t m = 0;
  F2Matrix matrix;
  // Constituent blocks, kept for audit.
  F2Matrix d2;
  F2Matrix d_neg1;
  F2Matrix d_neg2;
  F2Matrix e;
};

/// Diagonal D_l for l in {-1, 2, -2}.
F2Matrix build_D(int l, std::span<const std::uint64_t> primes);
F2Matrix build_E(std::span<const std::uint64_t> primes);

/// Primes are used in the order given; any order yields the same rank.
MonskyMatrix build_monsky(int delta, std::span<const std::uint64_t> odd_primes);
MonskyMatrix build_monsky(const SquareFreeFactorization& fact);

struct Certificate {
  std::uint64_t n = 1;
  SquareFreeFactorization factorization;
  MonskyKind kind = MonskyKind::Odd;
  F2Matrix matrix;
  std::size_t rank = 0;
  std::size_t selmer_rank = 0;
  bool certified_noncongruent = true;
  // Mordell-Weil rank computed elsewhere; never derived here.
  std::optional<int> external_mw_rank;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::size_t selmer_rank(std::uint64_t n);

/// Never claims congruence: s(n) > 0 only means "not certified".
/// Throws Contradiction if external_mw_rank exceeds s(n).
Certificate certify(std::uint64_t n, std::optional<int> external_mw_rank = std::nullopt);
/// Same, for a factorization already known; it is validated, not trusted.
Certificate certify(const SquareFreeFactorization& fact,
                    std::optional<int> external_mw_rank = std::nullopt);

/// Re-checks the certificate invariants; throws Contradiction on failure.
void check_certificate(const Certificate& cert);

}  // namespace selmer
