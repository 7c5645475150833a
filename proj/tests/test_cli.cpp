#include <gtest/gtest.h>

#include <sstream>

#include "rubbertaut/cli.hpp"
#include "rubbertaut/errors.hpp"
#include "rubbertaut/json_io.hpp"

using namespace rubbertaut;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, HurwitzExample) {
  const Result r = run({"hurwitz", "--alpha", "2", "--beta", "1,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("value"), "1");
  EXPECT_EQ(j.at("alpha"), Json::array({2}));
  EXPECT_EQ(j.at("beta"), Json::array({1, 1}));
  EXPECT_FALSE(j.at("provenance").get<std::string>().empty());
}

TEST(Cli, SeriesExample) {
  const Result r = run({"series", "--log-sine", "--d", "1", "--order", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("coefficient"), "1/24");
  EXPECT_EQ(series_from_json(j.at("series_data")), series_log_sine(1, 2));
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"hurwitz", "--alpha", "2"}).code, 1);
  EXPECT_EQ(run({"hurwitz", "--alpha", "2", "--beta", "1"}).code, 1);
  EXPECT_EQ(run({"hurwitz", "--alpha", "x", "--beta", "1"}).code, 1);
  EXPECT_EQ(run({"series", "--order", "3"}).code, 1);
  EXPECT_EQ(run({"hain", "--g", "2", "--k", "1,1"}).code, 1);
  EXPECT_EQ(run({"pclass", "--T", "2"}).code, 1);
  EXPECT_EQ(run({"localize", "--d", "4", "--golden"}).code, 1);
  EXPECT_EQ(run({"pclass", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LocalizeGoldenJson) {
  const Result r = run({"localize", "--d", "3", "--golden", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("graphs").size(), 19u);
  for (const auto& row : j.at("graphs")) {
    EXPECT_TRUE(row.at("golden_match").get<bool>()) << row.dump();
    EXPECT_TRUE(row.contains("prefactor") && row.contains("factors") && row.contains("one_over_t_coeff"));
  }
  EXPECT_EQ(j.at("vanishing_rows"), Json::array({2, 5, 6}));
}

TEST(Cli, LocalizeCsvHasOneLinePerGraph) {
  const Result r = run({"localize", "--d", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
  EXPECT_EQ(r.out.rfind("graph,prefactor,factors,one_over_t_coeff\n", 0), 0u);
}

TEST(Cli, PclassAndHain) {
  const Result p = run({"pclass", "--T", "4", "--format", "json"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(Json::parse(p.out).at("coefficients").size(), 6u);  // 3 squares + 3 mixed
  EXPECT_EQ(run({"pclass", "--T", "3", "--format", "latex"}).code, 0);

  const Result h = run({"hain", "--g", "2", "--k", "1,-1"});
  ASSERT_EQ(h.code, 0) << h.err;
  bool found = false;
  const Json hj = Json::parse(h.out);
  for (const auto& t : hj.at("terms"))
    if (t.at("monomial") == "psi1+^2") {
      EXPECT_EQ(t.at("coeff"), "1/8");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, InterpMatches) {
  const Result r = run({"interp", "--T", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out).at("match").get<bool>());
}

TEST(Cli, VerifyAllPassesAndIsDeterministic) {
  const Result a = run({"verify-all", "--g-max", "3", "--d-max", "5"});
  const Result b = run({"verify-all", "--g-max", "3", "--d-max", "5"});
  EXPECT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
  const Result j = run({"verify-all", "--g-max", "2", "--d-max", "4", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(Json::parse(j.out).at("ok").get<bool>());
  EXPECT_EQ(run({"verify-all", "--g-max", "0"}).code, 1);
}

TEST(Cli, EveryCommandIsDeterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"hurwitz", "--alpha", "3", "--beta", "1,1,1"}, {"series", "--tau", "--order", "6"},
      {"localize", "--setup", "length-two", "--g", "2", "--d", "4", "--format", "json"},
      {"pclass", "--T", "5"}, {"hain", "--g", "3", "--k", "1/2,-3,5/2"}, {"interp", "--T", "3"}};
  for (const auto& c : cmds) {
    const Result a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << c.front() << " " << a.err;
    EXPECT_EQ(a.out, b.out) << c.front();
  }
}

TEST(JsonIo, RoundTrips) {
  const TautClass c = TautClass(Generator::psi1(), Rational(3, 2)) - TautClass(Generator::boundary({2}, {1, 3}));
  EXPECT_EQ(taut_class_from_json(to_json(c)), c);
  EXPECT_EQ(to_json(c).at("psi1"), "3/2");
  EXPECT_EQ(partition_from_json(to_json(Partition({1, 3, 1}))), Partition({3, 1, 1}));
  EXPECT_EQ(rational_from_json(to_json(Rational(-7, 12))), Rational(-7, 12));
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json(0.5)), InvalidArgument);
  EXPECT_THROW(partition_from_json(Json("3")), InvalidArgument);
  const PowerSeries f = series_tau(5);
  EXPECT_EQ(series_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f).at("order"), 5);
  Json bad = to_json(f);
  bad["order"] = 4;
  EXPECT_THROW(series_from_json(bad), InvalidArgument);
}
