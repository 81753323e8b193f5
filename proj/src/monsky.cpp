#include "selmer/monsky.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "selmer/errors.hpp"

namespace selmer {

namespace {

void require_distinct_odd_primes(std::span<const std::uint64_t> primes) {
  for (std::uint64_t p : primes) {
    if (p % 2 == 0 || !is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
  }
  std::vector<std::uint64_t> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InvalidArgument("repeated prime " + std::to_string(*dup));
}

F2Matrix diagonal_of(int l, std::span<const std::uint64_t> primes) {
  F2Matrix d(primes.size(), primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) d.set(i, i, jacobi(l, primes[i]) == -1);
  return d;
}

F2Matrix e_of(std::span<const std::uint64_t> primes) {
  const std::size_t m = primes.size();
  F2Matrix e(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    bool diag = false;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      bool bit = jacobi(static_cast<std::int64_t>(primes[j]), primes[i]) == -1;
      e.set(i, j, bit);
      diag ^= bit;
    }
    e.set(i, i, diag);
  }
  return e;
}

}  // namespace

std::string_view kind_name(MonskyKind kind) { return kind == MonskyKind::Odd ? "M_o" : "M_e"; }

MonskyKind parse_kind(std::string_view name) {
  if (name == "M_o") return MonskyKind::Odd;
  if (name == "M_e") return MonskyKind::Even;
  throw InvalidArgument("unknown Monsky matrix kind '" + std::string(name) + "'");
}

F2Matrix build_D(int l, std::span<const std::uint64_t> primes) {
  if (l != -1 && l != 2 && l != -2) {
    throw InvalidArgument("build_D: l must be -1, 2 or -2, got " + std::to_string(l));
  }
  require_distinct_odd_primes(primes);
  return diagonal_of(l, primes);
}

F2Matrix build_E(std::span<const std::uint64_t> primes) {
  require_distinct_odd_primes(primes);
  return e_of(primes);
}

MonskyMatrix build_monsky(int delta, std::span<const std::uint64_t> odd_primes) {
  if (delta != 0 && delta != 1) throw InvalidArgument("delta must be 0 or 1");
  require_distinct_odd_primes(odd_primes);
  MonskyMatrix mm;
  mm.kind = delta ? MonskyKind::Even : MonskyKind::Odd;
  mm.m = odd_primes.size();
  mm.d2 = diagonal_of(2, odd_primes);
  mm.d_neg1 = diagonal_of(-1, odd_primes);
  mm.d_neg2 = diagonal_of(-2, odd_primes);
  mm.e = e_of(odd_primes);

  BlockLayout layout;
  if (mm.kind == MonskyKind::Odd) {
    layout.grid = {{mm.d2, mm.e + mm.d2}, {mm.e + mm.d_neg2, mm.d2}};
  } else {
    layout.grid = {{mm.d2, mm.e + mm.d2}, {transpose(mm.e) + mm.d2, mm.d_neg1}};
  }
  mm.matrix = block_compose(layout);
  return mm;
}

MonskyMatrix build_monsky(const SquareFreeFactorization& fact) {
  return build_monsky(fact.delta, fact.odd_primes);
}

std::size_t selmer_rank(std::uint64_t n) {
  const MonskyMatrix mm = build_monsky(factor_squarefree(n));
  return 2 * mm.m - rank(mm.matrix);
}

Certificate certify(std::uint64_t n, std::optional<int> external_mw_rank) {
  return certify(factor_squarefree(n), external_mw_rank);
}

Certificate certify(const SquareFreeFactorization& fact, std::optional<int> external_mw_rank) {
  if (external_mw_rank && *external_mw_rank < 0) {
    throw InvalidArgument("external Mordell-Weil rank must be nonnegative");
  }
  if (!std::is_sorted(fact.odd_primes.begin(), fact.odd_primes.end())) {
    throw InvalidArgument("factorization primes must be ascending");
  }
  Certificate cert;
  cert.n = fact.n;
  cert.factorization = fact;
  MonskyMatrix mm = build_monsky(cert.factorization);
  cert.kind = mm.kind;
  cert.rank = rank(mm.matrix);
  cert.selmer_rank = 2 * mm.m - cert.rank;
  cert.certified_noncongruent = cert.selmer_rank == 0;
  cert.matrix = std::move(mm.matrix);
  cert.external_mw_rank = external_mw_rank;
  check_certificate(cert);
  return cert;
}

void check_certificate(const Certificate& cert) {
  const std::size_t m = cert.factorization.m();
  auto fail = [&](const std::string& what) {
    throw Contradiction("certificate for " + std::to_string(cert.n) + ": " + what);
  };
  if (product(cert.factorization.delta, cert.factorization.odd_primes) != cert.n) {
    fail("factorization does not reconstruct n");
  }
  if ((cert.kind == MonskyKind::Even) != (cert.factorization.delta == 1)) fail("kind disagrees with parity");
  if (cert.matrix.rows() != 2 * m || cert.matrix.cols() != 2 * m) fail("matrix is not 2m x 2m");
  if (cert.rank > 2 * m || cert.selmer_rank != 2 * m - cert.rank) fail("selmer_rank != 2m - rank");
  if (cert.certified_noncongruent != (cert.selmer_rank == 0)) fail("certified flag disagrees with s(n)");
  if (cert.external_mw_rank &&
      static_cast<std::size_t>(*cert.external_mw_rank) > cert.selmer_rank) {
    fail("external Mordell-Weil rank " + std::to_string(*cert.external_mw_rank) +
         " exceeds 2-Selmer rank " + std::to_string(cert.selmer_rank));
  }
}

}  // namespace selmer
