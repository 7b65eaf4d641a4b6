#include "hecke/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hecke::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("envelope") {
  auto r = run({"elliptic", "g2"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["schema_version"] == "1.0");
  CHECK(j["command"] == "elliptic");
  CHECK(j["result"]["elliptic_class_count"] == 3);
  CHECK(j["result"]["group_order"] == 12);
  CHECK(j["warnings"].empty());
}

TEST_CASE("per-subsystem elliptic counts") {
  auto j = Json::parse(run({"elliptic", "f4", "--per-subsystem"}).out);
  CHECK(j["result"]["per_subsystem_total"] == 19);
  CHECK(j["result"]["per_subsystem"]["B4"] == 5);
}

TEST_CASE("table reconcile ledger") {
  auto r = run({"table", "f4", "--reconcile"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["reconcile"]["ledger_equation"] == "9+5+3+1+1 = 19");
  CHECK(j["result"]["reconcile"]["bijection"] == true);
  CHECK(j["warnings"].size() == 1);
}

TEST_CASE("table csv columns") {
  auto r = run({"table", "g2", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("label,s,coords,d_b,G2,E6_in_E8,3E6\n", 0) == 0);
  CHECK(r.out.find("b5,A_2,\"[k1, -k1]\",1/3,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"root", "nosuch"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"mass", "g2", "--b", "b9", "--at", "k1=1,k2=1"}).code == 1);
  CHECK(run({"mass", "g2", "--b", "b2", "--at", "k1=1"}).code == 2);
  CHECK(run({"reeder", "f4", "--b", "b11"}).code == 2);
  CHECK(run({"cn", "--n", "2", "--csv", "--md"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mass and sign") {
  auto j = Json::parse(run({"mass", "f4", "--b", "b11", "--at", "k1=1,k2=1"}).out);
  CHECK(j["result"]["value"] == "0");
  CHECK(j["result"]["vanishing_order"].get<int>() > 0);
  auto s = Json::parse(run({"sign", "g2", "--b", "b2", "--at", "k1=1,k2=1"}).out);
  CHECK(s["result"]["sign"] == -1);
  auto only = Json::parse(run({"mass", "g2", "--b", "b2", "--at", "k1=1,k2=1", "--sign-only"}).out);
  CHECK_FALSE(only["result"].contains("value"));
}

TEST_CASE("root system document") {
  auto j = Json::parse(run({"root", "cn-datum", "--rank", "2"}).out);
  CHECK(j["result"]["roots"].size() == 8);
  CHECK(j["result"]["simple_roots"].size() == 2);
  CHECK(j["result"]["simple_roots"][0][1] == "-1");
}

TEST_CASE("cn") {
  auto j = Json::parse(run({"cn", "--n", "3", "--params", "1000,2,2", "--ds"}).out);
  CHECK(j["result"]["modules"].size() == 10);
  for (const auto& m : j["result"]["modules"]) CHECK(m["discrete_series"] == true);
  auto one = Json::parse(run({"cn", "--bp", "1|", "--params", "1/4,2,2", "--ds", "--cc"}).out);
  CHECK(one["result"]["modules"][0]["discrete_series"] == false);
  CHECK(one["result"]["modules"][0]["central_character"][0] == "-v^(2m_minus)");
}

TEST_CASE("identical arguments give identical bytes") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"residual", "f4", "--md"}, {"reeder", "g2", "--b", "b3"}})
    CHECK(run(args).out == run(args).out);
}
