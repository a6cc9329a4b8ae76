#include <cstring>
#include <string>

#include "doctest.h"

#include "json.hpp"
#include "syzlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  syz_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("single cell through the C surface") {
  syz_options* o = syz_options_new();
  syz_options_set_field(o, 0);  // rationals
  int64_t v = 0;
  CHECK(syz_kpq(o, 1, 1, 3, 1, 0, &v) == SYZ_OK);
  CHECK(v == 3);
  CHECK(syz_kpq(o, 2, 0, 3, 7, 2, &v) == SYZ_OK);
  CHECK(v == 1);
  syz_options_free(o);
}

TEST_CASE("invalid parameters surface as usage errors with a message") {
  int64_t v = 0;
  CHECK(syz_kpq(nullptr, 0, 0, 3, 1, 1, &v) == SYZ_ERR_USAGE);
  CHECK(std::strlen(syz_error_message()) > 0);
  CHECK(syz_brute_kpq(1, 0, 1, 1, 1, 1, &v) == SYZ_ERR_USAGE);
}

TEST_CASE("budget overruns surface as budget errors") {
  syz_options* o = syz_options_new();
  syz_options_set_budget(o, 5);
  int64_t v = 0;
  CHECK(syz_kpq(o, 2, 0, 3, 3, 1, &v) == SYZ_ERR_BUDGET);
  syz_options_free(o);
}

TEST_CASE("table rendering and the diagram dash convention") {
  char* out = nullptr;
  REQUIRE(syz_betti_table(nullptr, 1, 1, 3, SYZ_FORMAT_DIAGRAM, &out) == SYZ_OK);
  auto diagram = take(out);
  CHECK(diagram.find('2') != std::string::npos);
  CHECK(diagram.find('-') != std::string::npos);
  REQUIRE(syz_betti_table(nullptr, 1, 1, 3, SYZ_FORMAT_CSV, &out) == SYZ_OK);
  CHECK(take(out).rfind("p,q,value,field,method", 0) == 0);
}

TEST_CASE("external cells render and feed the watch") {
  nlohmann::json cells = nlohmann::json::array();
  cells.push_back({{"p", 7}, {"q", 2}, {"value", 1}, {"computed", true}});
  cells.push_back({{"p", 3}, {"q", 2}, {"value", 0}, {"computed", false}});
  char* out = nullptr;
  REQUIRE(syz_table_render(2, 0, 3, "GF(32003)", cells.dump().c_str(),
                           SYZ_FORMAT_DIAGRAM, &out) == SYZ_OK);
  auto diagram = take(out);
  CHECK(diagram.find('?') != std::string::npos);  // uncomputed cell

  REQUIRE(syz_table_watch(2, 0, 3, cells.dump().c_str(), &out) == SYZ_OK);
  CHECK(take(out) == "[]");  // k_{7,2} = 1 sits inside the guaranteed range

  cells.push_back({{"p", 2}, {"q", 2}, {"value", 5}, {"computed", true}});
  REQUIRE(syz_table_watch(2, 0, 3, cells.dump().c_str(), &out) == SYZ_OK);
  auto hits = nlohmann::json::parse(take(out));
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]["p"] == 2);
  CHECK(hits[0]["value"] == 5);
}

TEST_CASE("certificates through the C surface") {
  char* cert = nullptr;
  REQUIRE(syz_certificate_build(2, 0, 4, 2, nullptr, 0, &cert) == SYZ_OK);
  auto cert_json = take(cert);
  char* report = nullptr;
  REQUIRE(syz_certificate_verify(cert_json.c_str(), 0, &report) == SYZ_OK);
  auto rep = nlohmann::json::parse(take(report));
  CHECK(rep["valid"] == true);
  CHECK(rep["linalg_ran"] == false);
  CHECK(syz_certificate_verify("not json", 1, &report) == SYZ_ERR_USAGE);
}

TEST_CASE("formula surface") {
  char* out = nullptr;
  REQUIRE(syz_curve_kp1(0, 3, 1, &out) == SYZ_OK);
  CHECK(take(out) == "3");
  int64_t lo = 0, hi = 0;
  CHECK(syz_veronese_range(2, 0, 4, 2, &lo, &hi) == SYZ_OK);
  CHECK(lo == 10);
  CHECK(hi == 12);
  double g = 0;
  CHECK(syz_curve_gaussian(0, 300, 0.0, &g) == SYZ_OK);
  CHECK(g == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Boij-Soderberg surface round trip") {
  char* out = nullptr;
  REQUIRE(syz_bs_pure(1, 2, &out) == SYZ_OK);
  auto pure = nlohmann::json::parse(take(out));
  CHECK(pure["betti"].size() == 3);
  REQUIRE(syz_bs_synthesize("1,0,1/2", 3, &out) == SYZ_OK);
  auto csv = take(out);
  REQUIRE(syz_bs_decompose(csv.c_str(), &out) == SYZ_OK);
  auto dec = nlohmann::json::parse(take(out));
  CHECK(dec["coefficients"][0] == "1");
  CHECK(dec["coefficients"][2] == "1/2");
  CHECK(syz_bs_synthesize("1,2", 3, &out) == SYZ_ERR_USAGE);  // wrong length
}

TEST_CASE("hilbert and reindex checks through the C surface") {
  int pass = 0;
  char* detail = nullptr;
  REQUIRE(syz_hilbert_check(nullptr, 1, 1, 3, &pass, &detail) == SYZ_OK);
  take(detail);
  CHECK(pass == 1);
  REQUIRE(syz_reindex_check(nullptr, 1, 0, 3, 2, 1, &pass) == SYZ_OK);
  CHECK(pass == 1);
}

TEST_CASE("version string present") {
  CHECK(std::strlen(syz_version()) > 0);
}
