#include <doctest.h>

#include "zh/report.hpp"

using namespace zh;

TEST_CASE("report of the virtual trefoil") {
  ReportOptions opt;
  opt.quandles = {make_dihedral(4), make_alexander(7, 3)};
  opt.cocycle = cocycle_from_name("cjkls");
  InvariantReport r = compute_report(parse_gauss_code(diagrams::kVirtualTrefoil), opt);
  CHECK(r.inconsistencies.empty());
  CHECK_FALSE(r.numerable);
  CHECK(r.writhe == 2);
  CHECK(r.dkm_bracket.to_string() == "A^2 + K1 - A^-4*K1");
  CHECK(r.as_set == std::set<int>{0, 1});
  REQUIRE(r.quandles.size() == 2);
  CHECK(r.quandles[0].colorings == 4);
  CHECK(r.quandles[0].extended_colorings == 16);
  REQUIRE(r.quandles[0].cocycle);
  CHECK(r.quandles[0].cocycle_value->to_string() == "4");
  CHECK_FALSE(r.quandles[1].cocycle);
  CHECK(r.quandles[1].extended_colorings == 7);

  nlohmann::json j = r.to_json();
  CHECK(j["dkm_bracket"] == "A^2 + K1 - A^-4*K1");
  CHECK(j["as_set"] == nlohmann::json::array({0, 1}));
  CHECK(j["quandles"][1]["extended_colorings"] == 7);
  CHECK(r.to_text().find("as set: {0, 1}") != std::string::npos);
}

TEST_CASE("report of the unknot is trivial") {
  ReportOptions opt;
  opt.quandles = {make_dihedral(3)};
  InvariantReport r = compute_report(GaussCode(), opt);
  CHECK(r.numerable);
  CHECK(r.dkm.to_string() == "1");
  CHECK(r.jones.to_string() == "1");
  CHECK(r.as_set == std::set<int>{0});
  CHECK(r.quandles[0].colorings == 3);
  CHECK(r.quandles[0].extended_colorings == 9);
  CHECK(r.inconsistencies.empty());
}

TEST_CASE("registry leaves out writhe and raw brackets") {
  InvariantReport r = compute_report(parse_gauss_code(diagrams::kTrefoil));
  auto reg = invariant_registry(r);
  CHECK(reg.count("numerable") == 1);
  CHECK(reg.count("dkm polynomial") == 1);
  CHECK(reg.count("writhe") == 0);
  CHECK_FALSE(cocycle_from_name("nope"));
}
