#include "selmer/structured.hpp"

#include <algorithm>
#include <functional>

#include "selmer/arith.hpp"
#include "selmer/errors.hpp"

namespace selmer {

namespace {

void require_size(long long t) {
  if (t < 1) throw InvalidArgument("structured matrix size must be >= 1, got " + std::to_string(t));
}

bool odd(long long v) { return (v % 2) != 0; }

// Exact integer matrix, only used to check identities before reduction mod 2.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<long long> a;

  explicit IntMatrix(std::size_t size) : n(size), a(size * size, 0) {}
  long long& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  long long at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  IntMatrix transposed() const {
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.at(j, i) = at(i, j);
    return out;
  }
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
      for (std::size_t k = 0; k < x.n; ++k)
        for (std::size_t j = 0; j < x.n; ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    return out;
  }
  F2Matrix reduced() const {
    F2Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i, j, odd(at(i, j)));
    return out;
  }
};

// Unreduced U_0 and L_0 with 1-based diagonal formulas t - i and i - 1.
IntMatrix int_U0(std::size_t t) {
  IntMatrix u(t);
  for (std::size_t i = 0; i < t; ++i) {
    u.at(i, i) = static_cast<long long>(t) - static_cast<long long>(i + 1);
    for (std::size_t j = i + 1; j < t; ++j) u.at(i, j) = 1;
  }
  return u;
}

IntMatrix int_L0(std::size_t t) {
  IntMatrix l(t);
  for (std::size_t i = 0; i < t; ++i) {
    l.at(i, i) = static_cast<long long>(i);
    for (std::size_t j = 0; j < i; ++j) l.at(i, j) = 1;
  }
  return l;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const F2Matrix& a,
                                                                     const F2Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.get(i, j) != b.get(i, j)) return std::pair{i, j};
  return std::nullopt;
}

LemmaCheck compare(std::string identity, std::string variant, const F2Matrix& lhs,
                   const F2Matrix& rhs) {
  LemmaCheck c;
  c.identity = std::move(identity);
  c.variant = std::move(variant);
  c.counterexample = first_difference(lhs, rhs);
  c.passed = !c.counterexample.has_value();
  return c;
}

// Exact integer comparison of a product against an entry formula, then the
// same product taken over F2 against the reduced formula.
LemmaCheck compare_exact(std::string identity, const IntMatrix& product, const F2Matrix& f2_product,
                         const std::function<long long(long long, long long)>& formula) {
  LemmaCheck c;
  c.identity = std::move(identity);
  c.variant = "-";
  const std::size_t n = product.n;
  for (std::size_t i = 0; i < n && c.passed; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long long expected = formula(static_cast<long long>(i + 1), static_cast<long long>(j + 1));
      if (product.at(i, j) != expected || f2_product.get(i, j) != odd(expected)) {
        c.passed = false;
        c.counterexample = std::pair{i, j};
        break;
      }
    }
  }
  return c;
}

}  // namespace

F2Matrix mat_N(long long t) {
  require_size(t);
  return F2Matrix::ones(static_cast<std::size_t>(t), static_cast<std::size_t>(t));
}

F2Matrix mat_N(std::size_t rows, std::size_t cols) { return F2Matrix::ones(rows, cols); }

F2Matrix mat_U(long long t, long long f) {
  require_size(t);
  const auto n = static_cast<std::size_t>(t);
  F2Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u.set(i, i, odd(t - static_cast<long long>(i + 1) + f));
    for (std::size_t j = i + 1; j < n; ++j) u.set(i, j, true);
  }
  return u;
}

F2Matrix mat_L(long long t, long long f) {
  require_size(t);
  const auto n = static_cast<std::size_t>(t);
  F2Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l.set(i, i, odd(f + static_cast<long long>(i)));
    for (std::size_t j = 0; j < i; ++j) l.set(i, j, true);
  }
  return l;
}

CoherentPrimeList CoherentPrimeList::make(std::vector<std::uint64_t> primes, Strictness strictness) {
  if (primes.empty()) throw InvalidArgument("coherent prime list must not be empty");
  for (std::uint64_t p : primes) {
    if (p % 2 == 0 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
    if (strictness == Strictness::Strict && p % 4 != 3) {
      throw InvalidArgument(std::to_string(p) + " is not 3 mod 4");
    }
  }
  std::vector<std::uint64_t> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("coherent prime list has a repeated prime");
  }
  if (primes.size() == 1) return {std::move(primes), Orientation::AllPlus};
  const int expected = legendre(static_cast<std::int64_t>(primes[0]), primes[1]);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      int s = legendre(static_cast<std::int64_t>(primes[i]), primes[j]);
      if (s != expected) throw CoherenceError(i, j, expected, s);
    }
  }
  return {std::move(primes), expected == 1 ? Orientation::AllPlus : Orientation::AllMinus};
}

F2Matrix mat_T(const CoherentPrimeList& primes, long long f) {
  const auto t = static_cast<long long>(primes.size());
  return primes.orientation() == Orientation::AllMinus ? mat_L(t, f) : mat_U(t, f);
}

F2Matrix mat_D_lk(std::span<const std::uint64_t> l_primes, std::span<const std::uint64_t> k_primes) {
  if (l_primes.size() != k_primes.size()) {
    throw InvalidArgument("mat_D_lk: prime lists differ in length (" +
                          std::to_string(l_primes.size()) + " vs " +
                          std::to_string(k_primes.size()) + ")");
  }
  F2Matrix d(l_primes.size(), l_primes.size());
  for (std::size_t i = 0; i < l_primes.size(); ++i) {
    d.set(i, i, phi_bit(legendre(static_cast<std::int64_t>(k_primes[i]), l_primes[i])) == 1);
  }
  return d;
}

std::size_t LemmaReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const LemmaCheck& c) {
    return c.asserted && !c.passed;
  }));
}

LemmaReport verify_lemma_identities(long long t) {
  require_size(t);
  const auto n = static_cast<std::size_t>(t);
  LemmaReport report;
  report.t = n;

  const F2Matrix N = mat_N(t);
  const F2Matrix I = F2Matrix::identity(n);
  const F2Matrix O = F2Matrix::zeros(n, n);
  const F2Matrix row_ones = mat_N(1, n);
  const F2Matrix col_ones = mat_N(n, 1);

  report.checks.push_back(compare("N^2 = tN", "-", N * N, scale(t, N)));

  struct Variant {
    const char* name;
    F2Matrix t0;
    F2Matrix tt;
  };
  const Variant variants[] = {{"U", mat_U(t, 0), mat_U(t, t)}, {"L", mat_L(t, 0), mat_L(t, t)}};
  for (const auto& v : variants) {
    const F2Matrix& T = v.t0;
    const F2Matrix Tt = transpose(T);
    report.checks.push_back(compare("T0' + T0 = N + I", v.name, Tt + T, N + I));
    report.checks.push_back(compare("T0' T0 = (t-1)N", v.name, Tt * T, scale(t - 1, N)));
    report.checks.push_back(compare("T0 T0' = O", v.name, T * Tt, O));
    report.checks.push_back(compare("Tt' Tt = N", v.name, transpose(v.tt) * v.tt, N));
    report.checks.push_back(compare("T0' N = (t-1)N", v.name, Tt * N, scale(t - 1, N)));
    report.checks.push_back(compare("T0 N = O", v.name, T * N, O));
    report.checks.push_back(compare("T0^2 = T0", v.name, T * T, T));
    for (auto check : {compare("1xt ones * T0 = 0", v.name, row_ones * T, F2Matrix::zeros(1, n)),
                       compare("T0 * tx1 ones = 0", v.name, T * col_ones, F2Matrix::zeros(n, 1))}) {
      check.asserted = odd(t);
      report.checks.push_back(std::move(check));
    }
  }

  const IntMatrix U0 = int_U0(n);
  const IntMatrix L0 = int_L0(n);
  const F2Matrix fU0 = mat_U(t, 0);
  const F2Matrix fL0 = mat_L(t, 0);
  const auto diag = [t](long long i) { return (t - i) * (i - 1); };
  report.checks.push_back(compare_exact("L0' U0 upper: diag (t-i)(i-1), above t-2",
                                        L0.transposed() * U0, transpose(fL0) * fU0,
                                        [&](long long i, long long j) {
                                          return i > j ? 0 : (i == j ? diag(i) : t - 2);
                                        }));
  report.checks.push_back(compare_exact("U0' L0 lower: diag (t-i)(i-1), below t-2",
                                        U0.transposed() * L0, transpose(fU0) * fL0,
                                        [&](long long i, long long j) {
                                          return i < j ? 0 : (i == j ? diag(i) : t - 2);
                                        }));
  report.checks.push_back(compare("U0' + L0 = (t+1)I", "-", transpose(fU0) + fL0, scale(t + 1, I)));
  report.checks.push_back(compare("L0' + U0 = (t+1)I", "-", transpose(fL0) + fU0, scale(t + 1, I)));
  return report;
}

}  // namespace selmer
