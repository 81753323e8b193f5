#pragma once

// Serialization of certificates, search hits and density reports.

#include <string>

#include <nlohmann/json.hpp>

#include "selmer/density.hpp"
#include "selmer/families.hpp"
#include "selmer/monsky.hpp"

namespace selmer {

using Json = nlohmann::ordered_json;

/// Fields, in order: n, delta, primes, kind, matrix, rank, selmer_rank,
/// certified_noncongruent, external_mw_rank.
Json to_json(const Certificate& cert);
/// Throws InvalidArgument on missing or mistyped fields, Contradiction if
/// the decoded certificate is internally inconsistent.
Certificate certificate_from_json(const Json& j);

Json to_json(const DensityReport& report);

/// One search hit; `cert` is included when the hit was cross-validated.
Json search_hit_json(const FamilySpec& spec, const PrimeTuple& tuple, std::uint64_t n,
                     const Certificate* cert);

/// theorem,t,params,primes,n,selmer_rank
std::string search_csv_header();
/// Primes are grouped by role: roles separated by ';', primes in a role by ' '.
std::string search_csv_row(const FamilySpec& spec, const PrimeTuple& tuple, std::uint64_t n,
                           const Certificate* cert);

}  // namespace selmer
