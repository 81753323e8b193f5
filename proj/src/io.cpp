#include "selmer/io.hpp"

#include <sstream>

#include "selmer/errors.hpp"

namespace selmer {

Json to_json(const Certificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["delta"] = cert.factorization.delta;
  j["primes"] = cert.factorization.odd_primes;
  j["kind"] = std::string(kind_name(cert.kind));
  j["matrix"] = cert.matrix.row_strings();
  j["rank"] = cert.rank;
  j["selmer_rank"] = cert.selmer_rank;
  j["certified_noncongruent"] = cert.certified_noncongruent;
  j["external_mw_rank"] = cert.external_mw_rank ? Json(*cert.external_mw_rank) : Json(nullptr);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  try {
    cert.n = j.at("n").get<std::uint64_t>();
    cert.factorization.n = cert.n;
    cert.factorization.delta = j.at("delta").get<int>();
    cert.factorization.odd_primes = j.at("primes").get<std::vector<std::uint64_t>>();
    cert.kind = parse_kind(j.at("kind").get<std::string>());
    const auto rows = j.at("matrix").get<std::vector<std::string>>();
    const std::size_t width = 2 * cert.factorization.m();
    cert.matrix = rows.empty() ? F2Matrix(0, width) : F2Matrix::from_rows(rows);
    cert.rank = j.at("rank").get<std::size_t>();
    cert.selmer_rank = j.at("selmer_rank").get<std::size_t>();
    cert.certified_noncongruent = j.at("certified_noncongruent").get<bool>();
    const Json& mw = j.at("external_mw_rank");
    if (!mw.is_null()) cert.external_mw_rank = mw.get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate: ") + e.what());
  }
  check_certificate(cert);
  return cert;
}

Json to_json(const DensityReport& report) {
  Json j;
  j["x"] = report.x;
  j["subject"] = report.subject;
  j["exact_count"] = report.exact_count;
  j["asymptotic_value"] = report.asymptotic_value ? Json(*report.asymptotic_value) : Json(nullptr);
  j["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
  return j;
}

Json search_hit_json(const FamilySpec& spec, const PrimeTuple& tuple, std::uint64_t n,
                     const Certificate* cert) {
  Json j;
  j["theorem"] = std::string(theorem_name(spec.theorem));
  j["t"] = spec.t;
  j["params"] = spec.params_string();
  Json roles = Json::object();
  for (Role r : roles_of(spec.theorem)) roles[std::string(1, role_letter(r))] = tuple.role(r);
  j["primes"] = roles;
  j["n"] = n;
  j["selmer_rank"] = cert ? Json(cert->selmer_rank) : Json(nullptr);
  return j;
}

std::string search_csv_header() { return "theorem,t,params,primes,n,selmer_rank"; }

std::string search_csv_row(const FamilySpec& spec, const PrimeTuple& tuple, std::uint64_t n,
                           const Certificate* cert) {
  std::ostringstream os;
  os << theorem_name(spec.theorem) << ',' << spec.t << ',' << spec.params_string() << ',';
  const char* role_sep = "";
  for (Role r : roles_of(spec.theorem)) {
    os << role_sep;
    role_sep = ";";
    const char* sep = "";
    for (std::uint64_t p : tuple.role(r)) {
      os << sep << p;
      sep = " ";
    }
  }
  os << ',' << n << ',';
  if (cert) os << cert->selmer_rank;
  return os.str();
}

}  // namespace selmer
