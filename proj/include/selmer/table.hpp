#pragma once

// Published examples of family members, each annotated with a Mordell-Weil
// rank of 0 obtained by an independent computer-algebra computation.

#include <cstdint>
#include <string>
#include <vector>

#include "selmer/families.hpp"

namespace selmer {

struct TableRow {
  FamilySpec spec;
  PrimeTuple tuple;
  std::uint64_t n;          // as printed
  int mw_rank;              // external annotation
};

const std::vector<TableRow>& published_examples();

struct TableRowResult {
  std::string label;  // "157 t=1", ...
  std::uint64_t n = 0;
  bool n_matches = false;
  bool conditions_hold = false;
  std::size_t selmer_rank = 0;
  bool certified = false;
  bool mw_consistent = false;
  std::string error;  // non-empty when a step threw

  bool passed() const {
    return error.empty() && n_matches && conditions_hold && certified && mw_consistent;
  }
};

/// Reconstructs, checks and certifies every published example.
std::vector<TableRowResult> verify_table();

}  // namespace selmer
