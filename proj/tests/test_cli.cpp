#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "tlrc/cli.hpp"
#include "tlrc/errors.hpp"

using tlrc::parse_braid_word;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tlrc::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const std::vector<std::string>& args) {
  const Result r = call(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("braid word parsing") {
  const auto w = parse_braid_word("1,-2,1");
  CHECK(w.letters == std::vector<int>{1, -2, 1});
  CHECK(w.strands == 3);
  CHECK(parse_braid_word(" 3 ").strands == 4);
  CHECK(parse_braid_word("").letters.empty());
  CHECK(parse_braid_word("").strands == 1);
  CHECK_THROWS_AS(parse_braid_word("1,0"), tlrc::ParseError);
  CHECK_THROWS_AS(parse_braid_word("1,,2"), tlrc::ParseError);
  CHECK_THROWS_AS(parse_braid_word("a"), tlrc::ParseError);
  CHECK_THROWS_AS(parse_braid_word("1.5"), tlrc::ParseError);
}

TEST_CASE("scalar commands") {
  auto j = json_of({"qint", "3", "--generic"});
  CHECK(j["quantity"] == "qint");
  CHECK(j["labels"] == nlohmann::json::parse("[3]"));
  CHECK(j["r"].is_null());
  CHECK(j["value"]["coeffs"] == nlohmann::json::parse(R"([[-4,"1"],[0,"1"],[4,"1"]])"));

  j = json_of({"qint", "3", "--r", "5"});
  CHECK(j["r"] == 5);
  CHECK(j["value"][0].get<double>() == doctest::Approx((1 + std::sqrt(5.0)) / 2));

  j = json_of({"tet", "1", "1", "2", "1", "1", "2", "--generic"});
  CHECK(j["value"].contains("num"));
  CHECK(json_of({"delta", "2", "--r", "4"})["value"][0].get<double>() == doctest::Approx(1.0));
  CHECK(json_of({"theta", "1", "1", "2", "--generic"})["quantity"] == "theta");
  CHECK(json_of({"sixj", "1", "1", "0", "1", "1", "2", "--r", "5"})["value"][0].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("matrix commands") {
  auto j = json_of({"fmatrix", "2", "2", "2", "2", "--r", "5"});
  CHECK(j["rows"] == nlohmann::json::parse("[0,2]"));
  CHECK(j["entries"][0][0].get<double>() == doctest::Approx(0.6180339887).epsilon(1e-9));

  j = json_of({"rphase", "1", "1", "--generic"});
  CHECK(j.dump().find("coeffs") != std::string::npos);
  json_of({"rphase", "2", "2", "--r", "5"});

  j = json_of({"basis", "4", "1", "0", "--r", "5"});
  CHECK(j["basis"] == nlohmann::json::parse("[[0,1,0],[2,1,0]]"));
  CHECK(j["dimension"] == 2);

  j = json_of({"compile", "3", "1", "1", "--r", "5", "--word", "1,2,-1"});
  CHECK(j["matrix"].size() == 2);
  j = json_of({"compile", "3", "1", "1", "--generic", "--word", "1"});
  CHECK(j["r"].is_null());
}

TEST_CASE("bracket command") {
  auto j = json_of({"bracket", "--generic", "--word", "1,1"});
  CHECK(j["normalized"]["coeffs"] == nlohmann::json::parse(R"([[-4,"-1"],[4,"-1"]])"));
  j = json_of({"bracket", "--r", "5", "--word", "1,1,1"});
  CHECK(j["raw"].is_array());
  j = json_of({"bracket", "--generic", "--word", "", "--strands", "2"});
  CHECK(j.contains("raw"));
}

TEST_CASE("check commands") {
  const auto j = json_of({"check", "orthogonality", "--r", "5"});
  REQUIRE(j.is_array());
  for (const auto& e : j) CHECK(e["deviation"].get<double>() < 1e-9);
  CHECK(call({"check", "pentagon", "--r", "4"}).code == 0);
  CHECK(call({"check", "hexagon", "--r", "4"}).code == 0);
  CHECK(call({"check", "braid", "--r", "5", "--max-strands", "4"}).code == 0);
  CHECK(call({"check", "oracle", "--generic", "--max-label", "1", "--max-strands", "3"}).code == 0);
}

TEST_CASE("injected sign bug is detected") {
  const Result r = call({"check", "orthogonality", "--r", "5", "--inject-sign-bug"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  bool has_violation = false;
  for (const auto& e : j) has_violation |= e["labels"].size() == 5 && e["deviation"].get<double>() > 1e-9;
  CHECK(has_violation);
  CHECK(call({"check", "pentagon", "--r", "5", "--inject-sign-bug"}).code == 2);
}

TEST_CASE("bad input exits 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"qint", "3"}).code == 1);                             // neither --r nor --generic
  CHECK(call({"qint", "3", "--r", "5", "--generic"}).code == 1);    // both
  CHECK(call({"qint", "3", "--r", "2"}).code == 1);
  CHECK(call({"theta", "1", "1", "1", "--generic"}).code == 1);
  CHECK(call({"fmatrix", "1", "1", "1", "1", "--generic"}).code == 1);
  CHECK(call({"fmatrix", "9", "1", "1", "1", "--r", "5"}).code == 1);
  CHECK(call({"compile", "3", "1", "1", "--r", "5"}).code == 1);
  CHECK(call({"compile", "3", "1", "1", "--r", "5", "--word", "3"}).code == 1);
  CHECK(call({"bracket", "--generic", "--word", "1,0"}).code == 1);
  CHECK(call({"check", "nothing", "--r", "5"}).code == 1);
  CHECK(call({"check", "oracle", "--r", "5"}).code == 1);
  CHECK(call({"qint", "3", "--r", "5", "--json", "--csv"}).code == 1);
  CHECK(call({"sixj", "1", "1", "0", "1", "1", "2", "--r", "3"}).code == 1);
  const Result r = call({"qint", "x", "--generic"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("help exits 0") {
  const Result r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fmatrix") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"check", "braid", "--r", "5", "--max-strands", "4"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> c{"compile", "4", "1", "0", "--r", "7", "--word", "1,2,3,-2"};
  CHECK(call(c).out == call(c).out);
}

TEST_CASE("csv output") {
  Result r = call({"fmatrix", "1", "1", "1", "1", "--r", "5", "--csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find(',') != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
  r = call({"compile", "3", "1", "1", "--r", "5", "--word", "1", "--csv"});
  CHECK(r.out.rfind("row,col,re,im", 0) == 0);
  r = call({"check", "hexagon", "--r", "4", "--csv"});
  CHECK(r.out.rfind("check,labels,deviation", 0) == 0);
  r = call({"basis", "3", "1", "1", "--generic", "--csv"});
  CHECK(r.out == "x1,x2\n0,1\n2,1\n");
}
