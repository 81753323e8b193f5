#pragma once

// Structured t x t matrices used when reasoning about Monsky matrices in block
// form, plus a finite-range checker for the identities they satisfy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "selmer/gf2.hpp"

namespace selmer {

/// All-ones matrix.
F2Matrix mat_N(long long t);
F2Matrix mat_N(std::size_t rows, std::size_t cols);
/// Upper triangular: diagonal (t - i) + f for 1-based i, ones strictly above.
F2Matrix mat_U(long long t, long long f);
/// Lower triangular: diagonal f + (i - 1) for 1-based i, ones strictly below.
F2Matrix mat_L(long long t, long long f);

// Common value of the symbols (l_i / l_j) over i < j.
enum class Orientation { AllMinus, AllPlus };

// Strict requires every l_i = 3 (mod 4). Relaxed only demands that the
// pairwise symbols agree, which is how primes = 1 (mod 4) get used too.
enum class Strictness { Strict, Relaxed };

class CoherentPrimeList {
 public:
  /// Throws InvalidArgument for non-prime, even or repeated entries (and for
  /// l_i = 1 mod 4 under Strict), CoherenceError for a pair whose symbol
  /// disagrees with (l_1 / l_2).
  static CoherentPrimeList make(std::vector<std::uint64_t> primes,
                                Strictness strictness = Strictness::Strict);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  /// A single prime has no pairs; it reports AllPlus.
  Orientation orientation() const noexcept { return orientation_; }

 private:
  CoherentPrimeList(std::vector<std::uint64_t> primes, Orientation o)
      : primes_(std::move(primes)), orientation_(o) {}

  std::vector<std::uint64_t> primes_;
  Orientation orientation_;
};

/// L_f when the list is oriented AllMinus, U_f when AllPlus.
F2Matrix mat_T(const CoherentPrimeList& primes, long long f);

/// Diagonal matrix with entry i equal to phi((k_i / l_i)).
F2Matrix mat_D_lk(std::span<const std::uint64_t> l_primes, std::span<const std::uint64_t> k_primes);

struct LemmaCheck {
  std::string identity;
  std::string variant;  // "U", "L", or "-" when no triangular matrix is involved
  bool asserted = true;  // false when the identity does not apply at this size
  bool passed = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;  // first bad entry
};

struct LemmaReport {
  std::size_t t = 0;
  std::vector<LemmaCheck> checks;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Evaluates every identity at size t for both triangular orientations.
/// Throws InvalidArgument for t < 1.
LemmaReport verify_lemma_identities(long long t);

}  // namespace selmer
