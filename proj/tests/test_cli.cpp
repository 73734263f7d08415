#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wzw/cli.hpp"

using json = nlohmann::json;
using wzw::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text) {
  std::vector<json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    out.push_back(json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("genus") {
  const Result r = call({"genus", "--prime", "7"});
  CHECK(r.code == 0);
  const json j = records(r.out).at(0);
  CHECK(j["genus"] == 601);
  CHECK(j["forms_agree"] == true);
  CHECK(call({"genus", "--prime", "13"}).code == 2);
}

TEST_CASE("eval of S at level 1") {
  const Result r = call({"eval", "--level", "1", "--matrix", "[[0,-1],[1,0]]"});
  CHECK(r.code == 0);
  const json j = records(r.out).at(0);
  const double h = 1.0 / std::sqrt(2.0);
  const double signs[2][2] = {{1, 1}, {1, -1}};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const json& e = j["matrix"][a][b];
      CHECK(e["approx"][0].get<double>() == doctest::Approx(signs[a][b] * h).epsilon(1e-12));
      CHECK(e["order"] == 24);
      CHECK(e.contains("coeffs"));
    }
  }
  for (const char* path : {"closed", "word", "theorem1"}) {
    const Result p =
        call({"eval", "--level", "1", "--matrix", "[[0,-1],[1,0]]", "--path", path});
    CHECK(records(p.out).at(0)["matrix"] == j["matrix"]);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"eval", "--level", "1"}).code == 2);
  CHECK(call({"eval", "--level", "0", "--matrix", "[[1,0],[0,1]]"}).code == 2);
  CHECK(call({"eval", "--level", "1", "--matrix", "[[1,1],[1,1]]"}).code == 2);
  CHECK(call({"eval", "--level", "1", "--matrix", "[[1,0],[0,1]]", "--format", "xml"}).code == 2);
  CHECK(call({"characters", "--level", "1", "--terms", "3", "--numeric", "0.5-0.5i"}).code == 2);
  CHECK(call({"kernel", "--level", "11", "--bound", "100"}).code == 2);
}

TEST_CASE("kernel reports") {
  const Result ok = call({"kernel", "--level", "3", "--check-lists", "--list"});
  CHECK(ok.code == 0);
  const json j = records(ok.out).at(0);
  CHECK(j["kernel_order"] == 16);
  CHECK(j["matches_list"] == true);
  CHECK(j["kernel"].size() == 16);
  // n = 4 has elements beyond the listed ones
  const Result extra = call({"kernel", "--level", "2", "--check-lists"});
  CHECK(extra.code == 1);
  CHECK(records(extra.out).at(0)["extra"].size() == 4);
  const Result img = call({"image-order", "--level", "1"});
  CHECK(records(img.out).at(0)["image_order"] == 144);
}

TEST_CASE("characters and identities") {
  const Result r = call({"characters", "--level", "1", "--terms", "9", "--numeric", "0.1+0.9i"});
  CHECK(r.code == 0);
  const auto recs = records(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["series"]["coeffs"] ==
        json::array({"1", "3", "4", "7", "13", "19", "29", "43", "62", "90"}));
  CHECK(recs[0]["series"]["denominator"] == 72);
  CHECK(recs[0]["tau"] == json::array({0.1, 0.9}));
  CHECK(call({"verify-identities", "--level", "1", "--terms", "30"}).code == 0);
}

TEST_CASE("st-matrices formats") {
  const auto exact = records(call({"st-matrices", "--level", "2", "--format", "exact"}).out);
  REQUIRE(exact.size() == 2);
  CHECK_FALSE(exact[0]["matrix"][0][0].contains("approx"));
  const auto flt = records(call({"st-matrices", "--level", "2", "--format", "float"}).out);
  CHECK_FALSE(flt[1]["matrix"][0][0].contains("coeffs"));
}

TEST_CASE("verify-all is deterministic and passes") {
  const std::vector<std::string> args{"verify-all", "--level", "3", "--samples", "100", "--seed", "42"};
  const Result a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(records(a.out).back()["summary"] == "pass");
}

TEST_CASE("--out writes to a file") {
  const std::string path = "wzw_cli_test_out.jsonl";
  const Result r = call({"genus", "--prime", "11", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(json::parse(line)["genus"] == 2461);
  std::remove(path.c_str());
}
