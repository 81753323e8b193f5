#include <doctest.h>

#include "oracles.hpp"
#include "selmer/batch.hpp"
#include "selmer/errors.hpp"
#include "selmer/io.hpp"
#include "selmer/table.hpp"

using namespace selmer;

TEST_CASE("certificate JSON fields and order") {
  const Json j = to_json(certify(26611, 0));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "delta", "primes", "kind", "matrix", "rank", "selmer_rank",
                                         "certified_noncongruent", "external_mw_rank"});
  CHECK(j.dump() ==
        R"({"n":26611,"delta":0,"primes":[13,23,89],"kind":"M_o","matrix":)" +
            Json(certify(26611).matrix.row_strings()).dump() +
            R"(,"rank":6,"selmer_rank":0,"certified_noncongruent":true,"external_mw_rank":0})");
  CHECK(to_json(certify(5))["external_mw_rank"].is_null());
  CHECK(to_json(certify(2))["matrix"] == Json::array());
}

TEST_CASE("certificates round trip through JSON") {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    if (!oracle::squarefree(n)) continue;
    const auto cert = certify(n);
    REQUIRE(certificate_from_json(Json::parse(to_json(cert).dump())) == cert);
  }
  const auto annotated = certify(1290, 0);
  CHECK(certificate_from_json(to_json(annotated)) == annotated);
}

TEST_CASE("malformed certificates are rejected") {
  Json j = to_json(certify(34));
  Json missing = j;
  missing.erase("rank");
  CHECK_THROWS_AS(certificate_from_json(missing), InvalidArgument);
  Json mistyped = j;
  mistyped["n"] = "34";
  CHECK_THROWS_AS(certificate_from_json(mistyped), InvalidArgument);
  Json bad_kind = j;
  bad_kind["kind"] = "M_x";
  CHECK_THROWS_AS(certificate_from_json(bad_kind), InvalidArgument);
  Json bad_row = j;
  bad_row["matrix"] = Json::array({"01", "2"});
  CHECK_THROWS_AS(certificate_from_json(bad_row), Error);
  Json lying = j;
  lying["selmer_rank"] = 0;
  CHECK_THROWS_AS(certificate_from_json(lying), Contradiction);
  Json over = j;
  over["external_mw_rank"] = 3;
  CHECK_THROWS_AS(certificate_from_json(over), Contradiction);
}

TEST_CASE("density report JSON") {
  DensityReport r;
  r.x = 100;
  r.subject = "k=1";
  r.exact_count = 25;
  CHECK(to_json(r).dump() == R"({"x":100,"subject":"k=1","exact_count":25,"asymptotic_value":null,"ratio":null})");
  r.asymptotic_value = 2.5;
  r.ratio = 10.0;
  CHECK(to_json(r)["ratio"] == 10.0);
}

TEST_CASE("search hit CSV and JSON") {
  FamilySpec spec;
  spec.theorem = Theorem::T1357;
  spec.mu1 = -1;
  const auto tuple = PrimeTuple::make(Theorem::T1357, {17}, {3}, {13}, {47});
  CHECK(search_csv_header() == "theorem,t,params,primes,n,selmer_rank");
  CHECK(search_csv_row(spec, tuple, 31161, nullptr) == "1357,1,mu1=-1 mu2=1,17;3;13;47,31161,");
  const auto cert = certify(31161);
  CHECK(search_csv_row(spec, tuple, 31161, &cert) == "1357,1,mu1=-1 mu2=1,17;3;13;47,31161,0");

  FamilySpec s157;
  s157.t = 2;
  s157.alpha = -1;
  const auto t2 = PrimeTuple::make(Theorem::T157, {17, 281}, {5, 389}, {7, 151});
  const std::uint64_t n = 17ULL * 281 * 5 * 389 * 7 * 151;
  CHECK(search_csv_row(s157, t2, n, nullptr) == "157,2,alpha=-1,17 281;5 389;7 151," + std::to_string(n) + ",");
  const Json j = search_hit_json(s157, t2, n, nullptr);
  CHECK(j["theorem"] == "157");
  CHECK(j["primes"].dump() == R"({"p":[17,281],"q":[5,389],"r":[7,151]})");
  CHECK(j["selmer_rank"].is_null());
}

TEST_CASE("batch certify keeps input order and reports bad lines") {
  const std::vector<std::string> inputs{"26611", " 5 ", "12", "abc", "0", "34", "", "18446744073709551616"};
  const auto r = certify_batch(inputs, 1);
  REQUIRE(r.lines.size() == inputs.size());
  CHECK(r.errors == 5);
  CHECK(Json::parse(r.lines[0])["n"] == 26611);
  CHECK(Json::parse(r.lines[1])["selmer_rank"] == 1);
  const Json e = Json::parse(r.lines[2]);
  CHECK(e["input"] == "12");
  CHECK(e["error"].get<std::string>().find("not square-free") != std::string::npos);
  CHECK(Json::parse(r.lines[3]).contains("error"));
  CHECK(Json::parse(r.lines[5])["selmer_rank"] == 2);
  CHECK(Json::parse(r.lines[7]).contains("error"));
}

TEST_CASE("batch certify output is independent of the worker count") {
  std::vector<std::string> inputs;
  for (int n = 1; n <= 3000; ++n) inputs.push_back(std::to_string(n));
  const auto one = certify_batch(inputs, 1);
  for (unsigned w : {2U, 4U, 16U}) {
    const auto many = certify_batch(inputs, w);
    CHECK(many.lines == one.lines);
    CHECK(many.errors == one.errors);
  }
  CHECK(certify_batch({}, 4).lines.empty());
}

TEST_CASE("table verification") {
  const auto results = verify_table();
  REQUIRE(results.size() == 10);
  const std::vector<std::uint64_t> expected{26611,
                                            17ULL * 5 * 7 * 281 * 389 * 151,
                                            1515,
                                            3ULL * 5 * 29 * 59 * 109 * 349,
                                            483,
                                            7ULL * 31 * 11 * 43 * 347,
                                            1290,
                                            2ULL * 5 * 11 * 19 * 229 * 491 * 1051,
                                            31161,
                                            616930};
  for (std::size_t i = 0; i < results.size(); ++i) {
    INFO(results[i].label);
    CHECK(results[i].n == expected[i]);
    CHECK(results[i].passed());
    CHECK(results[i].selmer_rank == 0);
  }
}
