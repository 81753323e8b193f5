#include "selmer/table.hpp"

#include "selmer/errors.hpp"

namespace selmer {

namespace {

FamilySpec make_spec(Theorem th, int t, int alpha = 1, int mu = 1, int mu1 = 1, int mu2 = 1,
                     std::optional<Case533> c = std::nullopt) {
  FamilySpec s;
  s.theorem = th;
  s.t = t;
  s.alpha = alpha;
  s.mu = mu;
  s.mu1 = mu1;
  s.mu2 = mu2;
  s.case533 = c;
  return s;
}

std::vector<TableRow> build_rows() {
  using T = Theorem;
  std::vector<TableRow> rows;
  rows.push_back({make_spec(T::T157, 1), PrimeTuple::make(T::T157, {89}, {13}, {23}), 26611, 0});
  rows.push_back({make_spec(T::T157, 2, -1),
                  PrimeTuple::make(T::T157, {17, 281}, {5, 389}, {7, 151}),
                  17ULL * 5 * 7 * 281 * 389 * 151, 0});
  rows.push_back({make_spec(T::T355, 1), PrimeTuple::make(T::T355, {3}, {5}, {101}), 1515, 0});
  // Printed as "mu=1"; the only parameter of this family is alpha = (p_1/p_2).
  rows.push_back({make_spec(T::T355, 2, 1),
                  PrimeTuple::make(T::T355, {3, 59}, {5, 109}, {29, 349}),
                  3ULL * 5 * 29 * 59 * 109 * 349, 0});
  rows.push_back({make_spec(T::T377, 1, -1), PrimeTuple::make(T::T377, {7}, {23}, {3}), 483, 0});
  rows.push_back({make_spec(T::T377, 3, 1, 1),
                  PrimeTuple::make(T::T377, {7}, {31}, {11, 43, 347}),
                  7ULL * 31 * 11 * 43 * 347, 0});
  rows.push_back({make_spec(T::T533, 1, -1, -1, 1, 1, Case533::BI),
                  PrimeTuple::make(T::T533, {5}, {3}, {43}), 1290, 0});
  // mu1 = (11/491) = 1 and mu2 = (19/1051) = -1 are not printed.
  rows.push_back({make_spec(T::T533, 2, 1, 1, 1, -1, Case533::AI),
                  PrimeTuple::make(T::T533, {5, 229}, {11, 491}, {19, 1051}),
                  2ULL * 5 * 11 * 19 * 229 * 491 * 1051, 0});
  rows.push_back({make_spec(T::T1357, 1), PrimeTuple::make(T::T1357, {17}, {3}, {13}, {47}), 31161, 0});
  rows.push_back({make_spec(T::T2x1357, 1), PrimeTuple::make(T::T2x1357, {17}, {5}, {19}, {191}),
                  616930, 0});
  return rows;
}

}  // namespace

const std::vector<TableRow>& published_examples() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

std::vector<TableRowResult> verify_table() {
  std::vector<TableRowResult> out;
  for (const TableRow& row : published_examples()) {
    TableRowResult r;
    r.label = std::string(theorem_name(row.spec.theorem)) + " t=" + std::to_string(row.spec.t);
    if (const std::string p = row.spec.params_string(); !p.empty()) r.label += " " + p;
    r.n = row.n;
    try {
      r.n_matches = assemble_n(row.spec, row.tuple) == row.n;
      r.conditions_hold = check_conditions(row.spec, row.tuple).satisfied;
      const Certificate cert = certify(row.n, row.mw_rank);
      r.selmer_rank = cert.selmer_rank;
      r.certified = cert.certified_noncongruent;
      r.mw_consistent = cert.external_mw_rank && *cert.external_mw_rank <= static_cast<int>(cert.selmer_rank);
    } catch (const Error& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace selmer
