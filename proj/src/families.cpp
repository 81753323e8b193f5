#include "selmer/families.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "selmer/arith.hpp"
#include "selmer/errors.hpp"

namespace selmer {

namespace {

enum class Pairing {
  Same,      // i = j
  Less,      // i < j
  Distinct,  // i != j
  Every,     // all (i, j); used with the scalar roles of the 377 family
};

enum class Param { One, MinusOne, Alpha, Mu, Mu1, Mu2 };

// (top_i / bottom_j) must equal `value` for every index pair selected by `pairing`.
struct Condition {
  const char* label;
  Role top;
  Role bottom;
  Pairing pairing;
  Param value;
};

using enum Role;
using enum Pairing;
using enum Param;

constexpr Condition kT157[] = {
    {"(a)", P, Q, Same, MinusOne}, {"(a)", P, R, Same, MinusOne},
    {"(b)", P, P, Less, One},      {"(b)", Q, Q, Less, One},
    {"(b)", R, R, Less, Alpha},    {"(c)", P, Q, Distinct, One},
    {"(c)", P, R, Distinct, One},  {"(c)", Q, R, Distinct, One},
};

constexpr Condition kT355[] = {
    {"(a)", P, Q, Same, MinusOne}, {"(a)", P, R, Same, MinusOne},
    {"(b)", Q, Q, Less, One},      {"(b)", R, R, Less, One},
    {"(b)", P, P, Less, Alpha},    {"(c)", P, Q, Distinct, One},
    {"(c)", P, R, Distinct, One},  {"(c)", Q, R, Distinct, One},
};

constexpr Condition kT377[] = {
    {"(a)", P, Q, Same, Alpha},
    {"(a)", Q, R, Every, Alpha},
    {"(a)", R, P, Every, Alpha},
    {"(b)", R, R, Less, Mu},
};

constexpr Condition kT533[] = {
    {"(a)", P, Q, Same, Alpha},   {"(a)", P, R, Same, Alpha},   {"(a)", Q, R, Same, Mu},
    {"(b)", P, P, Less, One},     {"(b)", Q, Q, Less, Mu1},     {"(b)", R, R, Less, Mu2},
    {"(c)", P, Q, Distinct, One}, {"(c)", P, R, Distinct, One}, {"(c)", Q, R, Distinct, One},
};

constexpr Condition kT1357[] = {
    {"(a)", P, Q, Same, MinusOne}, {"(a)", R, S, Same, MinusOne}, {"(a)", P, R, Same, One},
    {"(a)", P, S, Same, One},      {"(a)", Q, R, Same, One},      {"(a)", Q, S, Same, One},
    // every ordered pair of distinct roles except (s, q)
    {"(b)", P, Q, Distinct, One},  {"(b)", P, R, Distinct, One},  {"(b)", P, S, Distinct, One},
    {"(b)", Q, P, Distinct, One},  {"(b)", Q, R, Distinct, One},  {"(b)", Q, S, Distinct, One},
    {"(b)", R, P, Distinct, One},  {"(b)", R, Q, Distinct, One},  {"(b)", R, S, Distinct, One},
    {"(b)", S, P, Distinct, One},  {"(b)", S, R, Distinct, One},
    {"(c)", S, S, Less, Mu1},      {"(c)", Q, Q, Less, Mu2},      {"(c)", P, P, Distinct, One},
    {"(c)", R, R, Distinct, One},
};

constexpr Condition kT2x1357[] = {
    {"(a)", P, Q, Same, MinusOne}, {"(a)", R, S, Same, MinusOne}, {"(a)", P, S, Same, One},
    {"(a)", P, R, Same, One},      {"(a)", Q, R, Same, One},      {"(a)", Q, S, Same, One},
    {"(b)", P, Q, Distinct, One},  {"(b)", P, R, Distinct, One},  {"(b)", P, S, Distinct, One},
    {"(b)", Q, R, Distinct, One},  {"(b)", Q, S, Distinct, One},  {"(b)", R, S, Distinct, One},
    {"(c)", S, S, Less, Mu},       {"(c)", R, R, Less, Mu},       {"(c)", P, P, Distinct, One},
    {"(c)", Q, Q, Distinct, One},
};

std::span<const Condition> conditions_of(Theorem th) {
  switch (th) {
    case Theorem::T157: return kT157;
    case Theorem::T355: return kT355;
    case Theorem::T377: return kT377;
    case Theorem::T533: return kT533;
    case Theorem::T1357: return kT1357;
    case Theorem::T2x1357: return kT2x1357;
  }
  return {};
}

int resolve(Param p, const FamilySpec& spec) {
  switch (p) {
    case One: return 1;
    case MinusOne: return -1;
    case Alpha: return spec.alpha;
    case Mu: return spec.mu;
    case Mu1: return spec.mu1;
    case Mu2: return spec.mu2;
  }
  return 0;
}

bool selected(Pairing pairing, std::size_t i, std::size_t j) {
  switch (pairing) {
    case Same: return i == j;
    case Less: return i < j;
    case Distinct: return i != j;
    case Every: return true;
  }
  return false;
}

bool doubled(Theorem th) { return th == Theorem::T533 || th == Theorem::T2x1357; }

bool is_pm1(int v) { return v == 1 || v == -1; }

std::string symbol_text(Role top, std::size_t i, Role bottom, std::size_t j) {
  std::ostringstream os;
  os << '(' << role_letter(top) << '_' << (i + 1) << '/' << role_letter(bottom) << '_' << (j + 1) << ')';
  return os.str();
}

// The size restriction attached to sub-case (ii) of the 533 family.
std::optional<Violation> case_violation(const FamilySpec& spec) {
  if (spec.theorem != Theorem::T533 || !spec.case533) return std::nullopt;
  if (*spec.case533 != Case533::AII && *spec.case533 != Case533::BII) return std::nullopt;
  const bool small_or_even = spec.t == 1 || spec.t % 2 == 0;
  if (small_or_even) return std::nullopt;
  if (spec.mu1 != spec.mu2 && spec.reading == Reading533::Conservative) return std::nullopt;
  Violation v;
  v.label = "case";
  v.symbol = spec.mu1 == spec.mu2 ? "mu1 = mu2 requires t = 1 or t even"
                                  : "strict reading: (ii) requires t = 1 or t even";
  return v;
}

// Products that overflow saturate, so they compare above any 64-bit bound.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  return __builtin_mul_overflow(a, b, &out) ? std::numeric_limits<std::uint64_t>::max() : out;
}

// Depth-first placement of primes, one position at a time, checking each
// hypothesis as soon as both of its primes are placed.
class Searcher {
 public:
  Searcher(const FamilySpec& spec, const SearchOptions& options) : spec_(spec), options_(options) {
    const auto t = static_cast<std::size_t>(spec.t);
    const Theorem th = spec.theorem;
    std::array<std::size_t, 4> sizes{};
    for (Role r : roles_of(th)) {
      sizes[static_cast<std::size_t>(r)] = (th == Theorem::T377 && (r == P || r == Q)) ? 1 : t;
    }
    if (th == Theorem::T377) {
      push(P, 0);
      push(Q, 0);
      for (std::size_t i = 0; i < t; ++i) push(R, i);
      lead_ = R;
    } else {
      for (std::size_t i = 0; i < t; ++i)
        for (Role r : roles_of(th)) push(r, i);
      lead_ = P;
    }
    checks_.resize(positions_.size());
    for (const Condition& c : conditions_of(th)) {
      const int expected = resolve(c.value, spec);
      for (std::size_t i = 0; i < sizes[static_cast<std::size_t>(c.top)]; ++i) {
        for (std::size_t j = 0; j < sizes[static_cast<std::size_t>(c.bottom)]; ++j) {
          if (!selected(c.pairing, i, j)) continue;
          std::size_t a = position_of(c.top, i);
          std::size_t b = position_of(c.bottom, j);
          std::size_t later = std::max(a, b);
          checks_[later].push_back({std::min(a, b), later == a, expected});
        }
      }
    }
    std::map<unsigned, std::vector<std::uint64_t>> by_class;
    for (Role r : roles_of(th)) {
      unsigned res = role_residue(th, r);
      if (!by_class.count(res)) by_class[res] = primes_in_class(options.prime_bound, res);
    }
    for (const auto& [res, primes] : by_class) prime_.insert(prime_.end(), primes.begin(), primes.end());
    std::sort(prime_.begin(), prime_.end());
    for (const auto& [role, index] : positions_) {
      std::vector<std::size_t> ids;
      for (std::uint64_t p : by_class[role_residue(th, role)]) {
        ids.push_back(static_cast<std::size_t>(std::lower_bound(prime_.begin(), prime_.end(), p) - prime_.begin()));
      }
      pools_.push_back(std::move(ids));
    }
    if (prime_.size() <= kMaxTable) {
      const std::size_t u = prime_.size();
      table_.resize(u * u);
      for (std::size_t a = 0; a < u; ++a)
        for (std::size_t b = 0; b < u; ++b)
          table_[a * u + b] = static_cast<std::int8_t>(a == b ? 0 : jacobi(static_cast<std::int64_t>(prime_[a]), prime_[b]));
    }

    // Lower bound on the product of everything placed from position k on.
    min_rest_.assign(positions_.size() + 1, 1);
    for (std::size_t k = positions_.size(); k-- > 0;) {
      std::uint64_t smallest = pools_[k].empty() ? std::numeric_limits<std::uint64_t>::max() : prime_[pools_[k].front()];
      min_rest_[k] = saturating_mul(min_rest_[k + 1], smallest);
    }
  }

  using Visit = std::function<bool(PrimeTuple&&)>;

  // Serial walk in canonical order; stops once `visit` returns false.
  void each(const Visit& visit) const {
    if (!runnable()) return;
    std::vector<std::size_t> placed(positions_.size());
    std::size_t remaining = options_.limit;
    for (std::size_t c = 0; c < pools_[0].size() && remaining > 0; ++c) {
      if (place(0, pools_[0][c], placed, initial_product())) {
        descend(1, placed, saturating_mul(initial_product(), prime_[pools_[0][c]]), remaining, visit);
      }
    }
  }

  std::vector<PrimeTuple> run() const {
    if (!runnable()) return {};
    const std::size_t first_count = pools_[0].size();
    std::vector<std::vector<PrimeTuple>> per_first(first_count);
    const unsigned workers = std::max(1U, std::min<unsigned>(options_.workers,
                                                              static_cast<unsigned>(first_count)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      std::vector<std::size_t> placed(positions_.size());
      for (std::size_t c = next++; c < first_count; c = next++) {
        if (!place(0, pools_[0][c], placed, initial_product())) continue;
        auto& chunk = per_first[c];
        std::size_t remaining = options_.limit;
        descend(1, placed, saturating_mul(initial_product(), prime_[pools_[0][c]]), remaining,
                [&](PrimeTuple&& tuple) {
                  chunk.push_back(std::move(tuple));
                  return true;
                });
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
      for (auto& th : threads) th.join();
    }
    std::vector<PrimeTuple> out;
    for (auto& chunk : per_first) {
      for (auto& tuple : chunk) {
        if (out.size() == options_.limit) return out;
        out.push_back(std::move(tuple));
      }
    }
    return out;
  }

 private:
  struct Check {
    std::size_t other;
    bool new_is_top;
    int expected;
  };

  static constexpr std::size_t kMaxTable = 2048;

  bool runnable() const { return !case_violation(spec_) && !positions_.empty() && !pools_[0].empty(); }

  void push(Role r, std::size_t i) { positions_.emplace_back(r, i); }

  std::size_t position_of(Role r, std::size_t i) const {
    for (std::size_t k = 0; k < positions_.size(); ++k)
      if (positions_[k].first == r && positions_[k].second == i) return k;
    throw InvalidArgument("search: role index out of range");
  }

  std::uint64_t initial_product() const { return doubled(spec_.theorem) ? 2 : 1; }

  // (prime_[a] / prime_[b]), from the table when there is one.
  int symbol(std::size_t a, std::size_t b) const {
    if (!table_.empty()) return table_[a * prime_.size() + b];
    return jacobi(static_cast<std::int64_t>(prime_[a]), prime_[b]);
  }

  // Members must have n < 2^64 - 1 and, if requested, n <= max_n.
  bool too_large(std::uint64_t product, std::uint64_t prime, std::size_t k) const {
    const std::uint64_t least = saturating_mul(product, saturating_mul(prime, min_rest_[k + 1]));
    return least == std::numeric_limits<std::uint64_t>::max() || (options_.max_n && least > *options_.max_n);
  }

  // Feasibility of putting prime index `id` at position k given positions < k.
  bool place(std::size_t k, std::size_t id, std::vector<std::size_t>& placed,
             std::uint64_t product) const {
    if (too_large(product, prime_[id], k)) return false;
    for (std::size_t e = 0; e < k; ++e)
      if (placed[e] == id) return false;
    for (const Check& c : checks_[k]) {
      const std::size_t other = placed[c.other];
      const int s = c.new_is_top ? symbol(id, other) : symbol(other, id);
      if (s != c.expected) return false;
    }
    placed[k] = id;
    return true;
  }

  template <typename Sink>
  void descend(std::size_t k, std::vector<std::size_t>& placed, std::uint64_t product,
               std::size_t& remaining, const Sink& sink) const {
    if (remaining == 0) return;
    if (k == positions_.size()) {
      --remaining;
      if (!sink(assemble(placed))) remaining = 0;
      return;
    }
    const auto& pool = pools_[k];
    auto begin = pool.begin();
    const auto [role, index] = positions_[k];
    if (role == lead_ && index > 0) {
      // Prime ids are ascending with the primes themselves.
      begin = std::upper_bound(pool.begin(), pool.end(), placed[position_of(lead_, index - 1)]);
    }
    for (auto it = begin; it != pool.end(); ++it) {
      if (too_large(product, prime_[*it], k)) break;  // pool is ascending
      if (!place(k, *it, placed, product)) continue;
      descend(k + 1, placed, saturating_mul(product, prime_[*it]), remaining, sink);
      if (remaining == 0) return;
    }
  }

  PrimeTuple assemble(const std::vector<std::size_t>& placed) const {
    std::array<std::vector<std::uint64_t>, 4> roles;
    for (std::size_t k = 0; k < positions_.size(); ++k) {
      auto& dst = roles[static_cast<std::size_t>(positions_[k].first)];
      if (dst.size() <= positions_[k].second) dst.resize(positions_[k].second + 1);
      dst[positions_[k].second] = prime_[placed[k]];
    }
    return PrimeTuple::make(spec_.theorem, roles[0], roles[1], roles[2], roles[3]);
  }

  const FamilySpec& spec_;
  const SearchOptions& options_;
  Role lead_ = P;
  std::vector<std::pair<Role, std::size_t>> positions_;
  std::vector<std::vector<Check>> checks_;
  std::vector<std::uint64_t> prime_;           // every candidate, ascending
  std::vector<std::vector<std::size_t>> pools_;  // per position, ids into prime_
  std::vector<std::int8_t> table_;
  std::vector<std::uint64_t> min_rest_;
};

}  // namespace

std::string_view theorem_name(Theorem th) {
  switch (th) {
    case Theorem::T157: return "157";
    case Theorem::T355: return "355";
    case Theorem::T377: return "377";
    case Theorem::T533: return "533";
    case Theorem::T1357: return "1357";
    case Theorem::T2x1357: return "2x1357";
  }
  return "?";
}

Theorem parse_theorem(std::string_view name) {
  for (Theorem th : {Theorem::T157, Theorem::T355, Theorem::T377, Theorem::T533, Theorem::T1357,
                     Theorem::T2x1357}) {
    if (name == theorem_name(th)) return th;
  }
  throw InvalidArgument("unknown theorem '" + std::string(name) +
                        "' (expected 157, 355, 377, 533, 1357 or 2x1357)");
}

std::string_view case_name(Case533 c) {
  switch (c) {
    case Case533::AI: return "A(i)";
    case Case533::AII: return "A(ii)";
    case Case533::BI: return "B(i)";
    case Case533::BII: return "B(ii)";
  }
  return "?";
}

Case533 parse_case(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (key == "ai") return Case533::AI;
  if (key == "aii") return Case533::AII;
  if (key == "bi") return Case533::BI;
  if (key == "bii") return Case533::BII;
  throw InvalidArgument("unknown 533 case '" + std::string(name) + "' (expected A(i), A(ii), B(i), B(ii))");
}

bool FamilySpec::uses_alpha() const {
  return theorem == Theorem::T157 || theorem == Theorem::T355 || theorem == Theorem::T377 ||
         theorem == Theorem::T533;
}

bool FamilySpec::uses_mu() const {
  return theorem == Theorem::T377 || theorem == Theorem::T533 || theorem == Theorem::T2x1357;
}

bool FamilySpec::uses_mu12() const { return theorem == Theorem::T533 || theorem == Theorem::T1357; }

void FamilySpec::validate() const {
  if (t < 1) throw InvalidArgument("family size t must be >= 1, got " + std::to_string(t));
  if (!is_pm1(alpha) || !is_pm1(mu) || !is_pm1(mu1) || !is_pm1(mu2)) {
    throw InvalidArgument("alpha, mu, mu1, mu2 must each be 1 or -1");
  }
  if ((theorem == Theorem::T377 || theorem == Theorem::T2x1357) && t % 2 == 0) {
    throw InvalidArgument("theorem " + std::string(theorem_name(theorem)) + " requires odd t");
  }
  if (theorem == Theorem::T533) {
    if (!case533) throw InvalidArgument("theorem 533 requires an explicit case");
    const bool case_a = *case533 == Case533::AI || *case533 == Case533::AII;
    const bool case_i = *case533 == Case533::AI || *case533 == Case533::BI;
    const int want_alpha = case_a ? 1 : -1;
    const int want_mu = case_i ? want_alpha : -want_alpha;
    if (alpha != want_alpha || mu != want_mu) {
      throw InvalidArgument("case " + std::string(case_name(*case533)) + " needs alpha=" +
                            std::to_string(want_alpha) + " and mu=" + std::to_string(want_mu));
    }
  } else if (case533) {
    throw InvalidArgument("a case only applies to theorem 533");
  }
}

std::string FamilySpec::params_string() const {
  std::ostringstream os;
  const char* sep = "";
  auto put = [&](const char* key, int value) {
    os << sep << key << '=' << value;
    sep = " ";
  };
  if (case533) {
    os << "case=" << case_name(*case533);
    sep = " ";
  }
  if (uses_alpha()) put("alpha", alpha);
  if (uses_mu()) put("mu", mu);
  if (uses_mu12()) {
    put("mu1", mu1);
    put("mu2", mu2);
  }
  return os.str();
}

char role_letter(Role r) {
  static constexpr char letters[] = {'p', 'q', 'r', 's'};
  return letters[static_cast<std::size_t>(r)];
}

unsigned role_residue(Theorem th, Role role) {
  static constexpr unsigned table[6][4] = {
      {1, 5, 7, 0},  // 157
      {3, 5, 5, 0},  // 355
      {7, 7, 3, 0},  // 377
      {5, 3, 3, 0},  // 533
      {1, 3, 5, 7},  // 1357
      {1, 5, 3, 7},  // 2x1357
  };
  return table[static_cast<std::size_t>(th)][static_cast<std::size_t>(role)];
}

std::vector<Role> roles_of(Theorem th) {
  if (th == Theorem::T1357 || th == Theorem::T2x1357) return {P, Q, R, S};
  return {P, Q, R};
}

PrimeTuple PrimeTuple::make(Theorem th, std::vector<std::uint64_t> p, std::vector<std::uint64_t> q,
                            std::vector<std::uint64_t> r, std::vector<std::uint64_t> s) {
  const std::size_t t = r.size();
  const std::string name(theorem_name(th));
  if (t == 0) throw InvalidArgument("theorem " + name + ": empty tuple");
  const bool quad = th == Theorem::T1357 || th == Theorem::T2x1357;
  const std::size_t pq_size = th == Theorem::T377 ? 1 : t;
  if (p.size() != pq_size || q.size() != pq_size || s.size() != (quad ? t : 0)) {
    throw InvalidArgument("theorem " + name + ": role sizes do not match t=" + std::to_string(t));
  }
  PrimeTuple tuple;
  tuple.theorem_ = th;
  tuple.p_ = std::move(p);
  tuple.q_ = std::move(q);
  tuple.r_ = std::move(r);
  tuple.s_ = std::move(s);

  for (Role role : roles_of(th)) {
    const unsigned want = role_residue(th, role);
    for (std::uint64_t prime : tuple.role(role)) {
      if (!is_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
      if (prime % 8 != want) {
        throw InvalidArgument("theorem " + name + ": " + role_letter(role) + " prime " +
                              std::to_string(prime) + " is " + std::to_string(prime % 8) +
                              " mod 8, expected " + std::to_string(want));
      }
    }
  }
  std::vector<std::uint64_t> all = tuple.primes();
  std::sort(all.begin(), all.end());
  auto dup = std::adjacent_find(all.begin(), all.end());
  if (dup != all.end()) throw InvalidArgument("theorem " + name + ": repeated prime " + std::to_string(*dup));
  return tuple;
}

const std::vector<std::uint64_t>& PrimeTuple::role(Role r) const {
  switch (r) {
    case P: return p_;
    case Q: return q_;
    case R: return r_;
    case S: return s_;
  }
  return s_;
}

std::vector<std::uint64_t> PrimeTuple::primes() const {
  std::vector<std::uint64_t> all;
  for (const auto* v : {&p_, &q_, &r_, &s_}) all.insert(all.end(), v->begin(), v->end());
  return all;
}

ConditionReport check_conditions(const FamilySpec& spec, const PrimeTuple& tuple) {
  spec.validate();
  if (spec.theorem != tuple.theorem()) {
    throw InvalidArgument("check_conditions: spec is theorem " + std::string(theorem_name(spec.theorem)) +
                          " but tuple is theorem " + std::string(theorem_name(tuple.theorem())));
  }
  if (static_cast<std::size_t>(spec.t) != tuple.t()) {
    throw InvalidArgument("check_conditions: spec has t=" + std::to_string(spec.t) +
                          " but tuple has t=" + std::to_string(tuple.t()));
  }
  ConditionReport report;
  if (auto v = case_violation(spec)) report.violations.push_back(*v);
  for (const Condition& c : conditions_of(spec.theorem)) {
    const auto& tops = tuple.role(c.top);
    const auto& bottoms = tuple.role(c.bottom);
    const int expected = resolve(c.value, spec);
    for (std::size_t i = 0; i < tops.size(); ++i) {
      for (std::size_t j = 0; j < bottoms.size(); ++j) {
        if (!selected(c.pairing, i, j)) continue;
        const int actual = legendre(static_cast<std::int64_t>(tops[i]), bottoms[j]);
        if (actual != expected) {
          report.violations.push_back({c.label, symbol_text(c.top, i, c.bottom, j), i, j, expected, actual});
        }
      }
    }
  }
  report.satisfied = report.violations.empty();
  return report;
}

std::uint64_t assemble_n(const FamilySpec& spec, const PrimeTuple& tuple) {
  if (spec.theorem != tuple.theorem()) throw InvalidArgument("assemble_n: theorem mismatch");
  return product(doubled(spec.theorem) ? 1 : 0, tuple.primes());
}

std::vector<PrimeTuple> search(const FamilySpec& spec, const SearchOptions& options) {
  spec.validate();
  if (options.limit == 0) return {};
  return Searcher(spec, options).run();
}

void search_each(const FamilySpec& spec, const SearchOptions& options,
                 const std::function<bool(PrimeTuple&&)>& visit) {
  spec.validate();
  if (options.limit == 0) return;
  Searcher(spec, options).each(visit);
}

std::vector<PrimeTuple> search(const FamilySpec& spec, std::uint64_t prime_bound, std::size_t limit) {
  SearchOptions options;
  options.prime_bound = prime_bound;
  options.limit = limit;
  return search(spec, options);
}

Certificate cross_validate(const FamilySpec& spec, const PrimeTuple& tuple,
                           std::optional<int> external_mw_rank) {
  const ConditionReport report = check_conditions(spec, tuple);
  if (!report.satisfied) {
    const Violation& v = report.violations.front();
    throw PreconditionError("theorem " + std::string(theorem_name(spec.theorem)) +
                            " hypothesis " + v.label + " fails: " + v.symbol + " is " +
                            std::to_string(v.actual) + ", expected " + std::to_string(v.expected));
  }
  SquareFreeFactorization fact;
  fact.n = assemble_n(spec, tuple);
  fact.delta = doubled(spec.theorem) ? 1 : 0;
  fact.odd_primes = tuple.primes();
  std::sort(fact.odd_primes.begin(), fact.odd_primes.end());
  const std::uint64_t n = fact.n;
  Certificate cert = certify(fact, external_mw_rank);
  if (!cert.certified_noncongruent) {
    throw Contradiction("THEOREM-CONTRADICTION: theorem " + std::string(theorem_name(spec.theorem)) +
                        " member n=" + std::to_string(n) + " (" + spec.params_string() +
                        ") has 2-Selmer rank " + std::to_string(cert.selmer_rank));
  }
  return cert;
}

std::vector<FamilySpec> parameter_grid(Theorem th, int t) {
  std::vector<FamilySpec> grid;
  const int signs[] = {1, -1};
  FamilySpec base;
  base.theorem = th;
  base.t = t;
  switch (th) {
    case Theorem::T157:
    case Theorem::T355:
      for (int a : signs) {
        FamilySpec s = base;
        s.alpha = a;
        grid.push_back(s);
      }
      break;
    case Theorem::T377:
      for (int a : signs)
        for (int m : signs) {
          FamilySpec s = base;
          s.alpha = a;
          s.mu = m;
          grid.push_back(s);
        }
      break;
    case Theorem::T533:
      for (Case533 c : {Case533::AI, Case533::AII, Case533::BI, Case533::BII})
        for (int m1 : signs)
          for (int m2 : signs) {
            FamilySpec s = base;
            s.case533 = c;
            const bool case_a = c == Case533::AI || c == Case533::AII;
            const bool case_i = c == Case533::AI || c == Case533::BI;
            s.alpha = case_a ? 1 : -1;
            s.mu = case_i ? s.alpha : -s.alpha;
            s.mu1 = m1;
            s.mu2 = m2;
            if (!case_violation(s)) grid.push_back(s);
          }
      break;
    case Theorem::T1357:
      for (int m1 : signs)
        for (int m2 : signs) {
          FamilySpec s = base;
          s.mu1 = m1;
          s.mu2 = m2;
          grid.push_back(s);
        }
      break;
    case Theorem::T2x1357:
      for (int m : signs) {
        FamilySpec s = base;
        s.mu = m;
        grid.push_back(s);
      }
      break;
  }
  return grid;
}

}  // namespace selmer
