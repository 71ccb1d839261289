#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = t2sum::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDisplayedP4 = "0 0 1 1\n0 0 1 0\n1 1 0 0\n1 0 0 0\n";

} // namespace

TEST_CASE("cli: product of K2 and K2 is a labeled member") {
  const Run product = run({"product", "complete:2", "complete:2"});
  REQUIRE(product.code == 0);
  const std::string g6 = product.out.substr(0, product.out.find('\n'));
  const Run member = run({"member", "--p", "2", "--q", "2", "--verify", g6});
  CHECK(member.code == 0);
  CHECK(nlohmann::json::parse(member.out)["verdict"] == "member");
}

TEST_CASE("cli: displayed P4 passes the partial transpose but is not a member") {
  CHECK(run({"ppt-check", "--p", "2", "-"}, kDisplayedP4).code == 0);
  const Run rec = run({"recognize", "--p", "2", "--q", "2", "--verify", "-"}, kDisplayedP4);
  CHECK(rec.code == 1);
  CHECK(nlohmann::json::parse(rec.out)["witness"]["reason"] == "odd-edge-count");
}

TEST_CASE("cli: census") {
  const Run listing = run({"census", "--p", "2", "--q", "2"});
  CHECK(listing.code == 0);
  CHECK(std::count(listing.out.begin(), listing.out.end(), '\n') == 2);
  const Run stats = run({"census", "--p", "3", "--q", "3", "--stats"});
  CHECK(nlohmann::json::parse(stats.out)["count"] == 512);
}

TEST_CASE("cli: certificates round-trip through verify") {
  const Run rec = run({"recognize", "--p", "3", "--q", "3", "complete:9"});
  CHECK(rec.code == 1);
  CHECK(run({"verify", "-"}, rec.out).code == 0);
  auto doc = nlohmann::json::parse(rec.out);
  doc["witness"]["reason"] = "odd-edge-count";
  CHECK(run({"verify", "-"}, doc.dump()).code == 1);
}

TEST_CASE("cli: t2 and decompose") {
  const std::string k33 =
      run({"product", "complete:3", "complete:3"}).out.substr(0, std::string::npos);
  const Run t2 = run({"t2", "--p", "3", "--q", "3", "--oracle", "-"}, k33);
  REQUIRE(t2.code == 0);
  const auto doc = nlohmann::json::parse(t2.out);
  CHECK(doc["t2"] == 1);
  CHECK(doc["oracle"] == 1);
  const Run dec = run({"decompose", "--p", "3", "--q", "3", "-"}, k33);
  CHECK(nlohmann::json::parse(dec.out)["count"] == 9);
}

TEST_CASE("cli: build-ppt emits a member of K(n,n)") {
  const Run built = run({"build-ppt", "cycle:5"});
  REQUIRE(built.code == 0);
  const auto json_start = built.out.find('{');
  const auto doc = nlohmann::json::parse(built.out.substr(json_start));
  CHECK(doc["components"]["verified"] == true);
  CHECK(doc["shape"]["p"] == 5);
}

TEST_CASE("cli: errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"member", "--p", "2", "complete:4"}).code == 2);
  CHECK(run({"member", "--p", "2", "--q", "2", "not a graph!"}).code == 2);
  CHECK(run({"recognize", "--p", "5", "--q", "5", "complete:25"}).code == 2);
  CHECK(run({"census", "--p", "5", "--q", "5"}).code == 2);
  CHECK(run({"ppt-check", "--p", "3", "complete:4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
