#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"

using namespace dyadisc;
using namespace dyadisc::cli;

namespace {

struct Outcome {
  int status = 0;
  std::string text;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "dyadisc");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream help;
  const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), help);
  REQUIRE(config.has_value());
  std::ostringstream out;
  Outcome outcome;
  outcome.status = run(*config, out);
  outcome.text = out.str();
  return outcome;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

} // namespace

TEST_CASE("gen") {
  const auto out = invoke({"gen", "--family", "symmetrized", "--n", "1", "--sigma", "identity"});
  const auto rows = lines(out.text);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0] == "num_x,num_y,den");
  CHECK(rows[1] == "0,0,2");
  CHECK(invoke({"gen", "--family", "hammersley", "--n", "5"}).text.size() > 0);
  CHECK(lines(invoke({"gen", "--family", "davenport", "--n", "3"}).text).size() == 17);
}

TEST_CASE("reruns are byte identical") {
  const std::vector<std::string> args{"sweep", "--family", "symmetrized", "--n", "3", "--n-max", "6",
                                      "--p", "1,2", "--q", "2,inf", "--r", "0.2"};
  CHECK(invoke(args).text == invoke(args).text);
  const std::vector<std::string> random{"gen", "--n", "6", "--sigma", "random", "--seed", "99"};
  CHECK(invoke(random).text == invoke(random).text);
  CHECK(invoke(random).text != invoke({"gen", "--n", "6", "--sigma", "random", "--seed", "98"}).text);
}

TEST_CASE("json mirrors csv") {
  const std::vector<std::string> base{"norm", "--family", "davenport", "--n", "4", "--p", "2", "--q", "2", "--r", "-0.3"};
  auto json_args = base;
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto csv = lines(invoke(base).text);
  const auto parsed = nlohmann::ordered_json::parse(invoke(json_args).text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == csv.size() - 1);
  std::string header;
  for (const auto& [key, value] : parsed[0].items()) {
    header += (header.empty() ? "" : ",") + key;
  }
  CHECK(header == csv[0]);
  CHECK(parsed[0]["family"] == "davenport");
  CHECK(parsed[0]["n"] == 4);
}

TEST_CASE("norm modes") {
  const auto exact = nlohmann::json::parse(invoke({"norm", "--n", "3", "--r", "-0.2", "--format", "json"}).text);
  const auto truncated = nlohmann::json::parse(
      invoke({"norm", "--n", "3", "--r", "-0.2", "--mode", "truncated", "--format", "json"}).text);
  const double a = exact[0]["total"];
  const double b = truncated[0]["total"];
  CHECK(std::fabs(a - b) <= 1e-9 * a);
  CHECK(truncated[0]["j_max"] == 43);
  CHECK(truncated[0]["tail"] == 0.0);
}

TEST_CASE("coeffs") {
  const auto rows = lines(invoke({"coeffs", "--n", "2", "--jmax", "3"}).text);
  CHECK(rows[0] == "j1,j2,m1,m2,mantissa,exponent,value");
  CHECK(rows[1] == "-1,-1,0,0,0,0,0");
  const auto dense = lines(invoke({"coeffs", "--n", "2", "--jmin", "3", "--jmax", "3", "--dense"}).text);
  CHECK(dense.size() == 1 + 64);
  const auto sparse = lines(invoke({"coeffs", "--n", "2", "--jmin", "3", "--jmax", "3"}).text);
  CHECK(sparse.size() < dense.size());
}

TEST_CASE("classic") {
  const auto star = nlohmann::json::parse(invoke({"classic", "--n", "2", "--p", "inf", "--format", "json"}).text);
  CHECK(star[0]["method"] == "star");
  const auto l2 = nlohmann::json::parse(invoke({"classic", "--n", "2", "--p", "2", "--format", "json"}).text);
  CHECK(l2[0]["method"] == "exact");
  const auto l3 = nlohmann::json::parse(invoke({"classic", "--n", "2", "--p", "3", "--format", "json"}).text);
  CHECK(l3[0]["method"] == "numeric-midpoint-16");
}

TEST_CASE("verify") {
  const auto ok = invoke({"verify", "--n", "1", "--n-max", "5", "--sigma", "all"});
  CHECK(ok.status == 0);
  // header, then three suites per (n, preset)
  CHECK(lines(ok.text).size() == 1 + 5 * 4 * 3);
}

TEST_CASE("sweep") {
  const auto rows = lines(invoke({"sweep", "--family", "symmetrized", "--n", "4", "--n-max", "14",
                                  "--p", "2", "--q", "2", "--r", "-0.3"}).text);
  CHECK(rows.size() == 12);
  // inadmissible grid points are skipped
  const auto mixed = lines(invoke({"sweep", "--n", "3", "--n-max", "4", "--p", "1,2", "--q", "2", "--r", "-0.3"}).text);
  CHECK(mixed.size() == 3);
}

TEST_CASE("qmc") {
  const auto rows = lines(invoke({"qmc", "--family", "davenport", "--n", "2", "--n-max", "6",
                                  "--integrand", "one-minus:1,1"}).text);
  REQUIRE(rows.size() == 6);
  CHECK(rows[1] == "davenport,identity,\"one-minus:1,1\",2,8,0.0625,1/16,");
}

TEST_CASE("errors") {
  std::ostringstream out;
  const char* bad_family[] = {"dyadisc", "gen", "--family", "sobol"};
  CHECK_THROWS(parse_args(4, bad_family, out));
  const char* no_sub[] = {"dyadisc"};
  CHECK_THROWS(parse_args(1, no_sub, out));
  RunConfig config;
  config.subcommand = Subcommand::Norm;
  config.r = {0.7};
  CHECK_THROWS_AS(run(config, out), std::invalid_argument);
}
