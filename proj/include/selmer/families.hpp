#pragma once

// The six families of non-congruent numbers built from prime triples or
// quadruples: their Legendre-symbol hypotheses, a bounded search for members,
// and cross-validation of each member through its Monsky matrix.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selmer/monsky.hpp"

namespace selmer {

// Named by residue pattern mod 8 of the primes involved.
enum class Theorem { T157, T355, T377, T533, T1357, T2x1357 };

/// "157", "355", "377", "533", "1357", "2x1357".
std::string_view theorem_name(Theorem th);
Theorem parse_theorem(std::string_view name);

// Admissible sub-cases of the (5,3,3) family; A needs alpha = 1, B alpha = -1.
// (i) needs mu = alpha, (ii) mu = -alpha.
enum class Case533 { AI, AII, BI, BII };

std::string_view case_name(Case533 c);  // "A(i)", ...
Case533 parse_case(std::string_view name);  // accepts "A(i)", "Ai", "ai", ...

// How to read the (ii) clause "mu1 = mu2 and (t = 1 or t even), or mu1 != mu2".
// Conservative admits mu1 != mu2 at every t; Strict applies the size
// restriction to mu1 != mu2 as well.
enum class Reading533 { Conservative, Strict };

struct FamilySpec {
  Theorem theorem = Theorem::T157;
  int t = 1;
  int alpha = 1;
  int mu = 1;
  int mu1 = 1;
  int mu2 = 1;
  std::optional<Case533> case533;
  Reading533 reading = Reading533::Conservative;

  /// Throws InvalidArgument: t < 1, parameters outside {-1, 1}, even t for
  /// the 377 and 2x1357 families, a missing or inconsistent 533 case.
  void validate() const;
  bool uses_alpha() const;
  bool uses_mu() const;
  bool uses_mu12() const;
  /// "alpha=-1 mu=1"-style listing of the parameters this theorem reads.
  std::string params_string() const;
};

enum class Role { P, Q, R, S };
char role_letter(Role r);

class PrimeTuple {
 public:
  /// For the 377 family p and q hold one prime each. Throws InvalidArgument on
  /// arity, primality, distinctness or residue-class violations.
  static PrimeTuple make(Theorem th, std::vector<std::uint64_t> p, std::vector<std::uint64_t> q,
                         std::vector<std::uint64_t> r, std::vector<std::uint64_t> s = {});

  Theorem theorem() const noexcept { return theorem_; }
  std::size_t t() const noexcept { return r_.size(); }
  const std::vector<std::uint64_t>& role(Role r) const;
  /// Role-grouped: all p, then q, r, s.
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const PrimeTuple&, const PrimeTuple&) = default;

 private:
  PrimeTuple() = default;

  Theorem theorem_ = Theorem::T157;
  std::vector<std::uint64_t> p_, q_, r_, s_;
};

/// Residue mod 8 each role must have, 0 for roles the theorem does not use.
unsigned role_residue(Theorem th, Role role);
std::vector<Role> roles_of(Theorem th);

struct Violation {
  std::string label;    // "(a)", "(b)", "(c)", "case"
  std::string symbol;   // e.g. "(r_1/r_2)", 1-based indices
  std::size_t i = 0;
  std::size_t j = 0;
  int expected = 0;
  int actual = 0;
};

struct ConditionReport {
  bool satisfied = true;
  std::vector<Violation> violations;
};

/// Every Legendre hypothesis of the theorem, evaluated literally in the
/// tuple's index order. Throws InvalidArgument on a theorem or size mismatch.
ConditionReport check_conditions(const FamilySpec& spec, const PrimeTuple& tuple);

/// Product of all primes, doubled for the 533 and 2x1357 families.
std::uint64_t assemble_n(const FamilySpec& spec, const PrimeTuple& tuple);

struct SearchOptions {
  std::uint64_t prime_bound = 0;
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  std::optional<std::uint64_t> max_n;  // prune members above this
  unsigned workers = 1;
};

/// Tuples satisfying every hypothesis, in lexicographic order of the prime
/// placements (per index: p, q, r, s; for 377: p, q, then each r). Indices
/// are canonicalised by requiring the leading role (p, or r for 377) to
/// increase. Only members whose n fits 64 bits are produced. Output is
/// independent of the worker count.
std::vector<PrimeTuple> search(const FamilySpec& spec, const SearchOptions& options);
/// Streams the same members in the same order without collecting them; runs
/// on the calling thread and stops early when `visit` returns false.
void search_each(const FamilySpec& spec, const SearchOptions& options,
                 const std::function<bool(PrimeTuple&&)>& visit);
std::vector<PrimeTuple> search(const FamilySpec& spec, std::uint64_t prime_bound,
                               std::size_t limit = std::numeric_limits<std::size_t>::max());

/// Certifies a member. Throws PreconditionError if the hypotheses fail and
/// Contradiction if the member does not have 2-Selmer rank zero.
Certificate cross_validate(const FamilySpec& spec, const PrimeTuple& tuple,
                           std::optional<int> external_mw_rank = std::nullopt);

/// Every admissible parameter combination for a theorem at size t (both
/// readings of the 533 clause collapse to the conservative one here).
std::vector<FamilySpec> parameter_grid(Theorem th, int t);

}  // namespace selmer
