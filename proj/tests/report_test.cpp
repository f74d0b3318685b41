#include "racg/report.hpp"

#include "doctest.h"
#include "racg/formats.hpp"
#include "racg/generators.hpp"

using namespace racg;

TEST_CASE("verdict JSON has a fixed shape") {
  Graph c5 = gen_cycle(5);
  Json j = verdict_json(c5, check_tran_condition(c5));
  CHECK(j.dump() ==
        R"({"all_burst":false,"truncated":false,"counts":{"5":1},"non_burst_cycles":[["v1","v2","v3","v4","v5"]],)"
        R"("witnesses":[{"cycle":0,"length":5,"nonadjacent_pairs_checked":5}],"non_burst_total":1,"max_len":5})");

  Graph q3 = gen_hypercube(3);
  Json jq = verdict_json(q3, check_tran_condition(q3));
  CHECK(jq["all_burst"] == true);
  CHECK(jq["counts"] == Json::parse(R"({"4":6,"6":4})"));
  CHECK(jq["non_burst_cycles"].empty());
}

TEST_CASE("cycle listings") {
  Json q3 = cycles_json(gen_hypercube(3), 4, 8);
  CHECK(q3["total"] == 10);
  CHECK(q3["burst"] == 10);
  CHECK(q3["counts"] == Json::parse(R"({"4":6,"6":4})"));
  CHECK(q3["cycles"][0]["vertices"] == Json::parse(R"(["000","001","011","010"])"));
  CHECK(q3["cycles"][0]["witness"]["pair"] == Json::parse(R"(["000","011"])"));

  Json c4 = cycles_json(gen_cycle(4), 3, 4);
  CHECK(c4["total"] == 1);
  CHECK(c4["cycles"][0]["burst"] == true);

  CHECK(cycles_json(gen_complete(5), 4, 5)["total"] == 0);
}

TEST_CASE("double JSON carries the origin map") {
  Graph c5 = gen_cycle(5);
  Json j = double_json(c5, star_double_minus(c5, 0));
  CHECK(j["center"] == "v1");
  CHECK(j["base_order"] == 5);
  CHECK(j["graph"]["order"] == 6);
  CHECK(j["origin"]["v3#2"] == Json::parse(R"({"copy":"copy2","original":"v3"})"));
  CHECK(j["origin"]["v5"] == Json::parse(R"({"copy":"shared","original":"v5"})"));
  CHECK(parse_graph6(j["graph"]["graph6"].get<std::string>()).size() == 6);
}

TEST_CASE("iterated double JSON") {
  IterateOptions opts;
  Json j = iterate_json(iterate_doubles(gen_cycle(5), opts));
  REQUIRE(j.size() == 6);
  CHECK(j[0]["path"].empty());
  CHECK(j[1]["path"] == Json::parse(R"([{"vertex":"v1","order":6}])"));
  CHECK(j[1]["duplicate_of"].is_null());
  CHECK(j[2]["duplicate_of"] == 1);
  CHECK(j[2]["verdict"]["all_burst"] == false);
}
