#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

using namespace linklab;
using namespace linklab::testing;

namespace {

std::string fixture(const char *name) { return std::string(LINKLAB_DATA_DIR) + "/" + name; }

std::string slurp(const std::string &path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string error_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const InputError &e) {
    return e.what();
  }
  return "";
}

Json parse(const std::string &s) { return Json::parse(s); }

} // namespace

TEST(Parse, MomentFixture) {
  const auto doc = parse_document(slurp(fixture("moment_k6.json")));
  ASSERT_TRUE(std::holds_alternative<EmbeddedK6>(doc));
  EXPECT_EQ(std::get<EmbeddedK6>(doc), moment_curve_k6());
}

TEST(Parse, PositionedErrors) {
  const auto zero = error_of(R"({"schemaVersion":"1","kind":"embedded-k6",
      "vertices":[["1","1","1"],["2","4","8"],["3","9","27"],["4","16","64"],["5","25","125"],["1/0","0","0"]]})");
  EXPECT_NE(zero.find("zero denominator"), std::string::npos) << zero;
  EXPECT_NE(zero.find("vertices[5][0]"), std::string::npos) << zero;

  auto doc = parse(emit_document(sigma6(moment_curve_k6(), {0, 0, 0}, {0, 0, 0})));
  doc["faces"][4] = Json::array({0, 1, 9});
  const auto range = error_of(doc.dump());
  EXPECT_NE(range.find("out of range"), std::string::npos) << range;
  EXPECT_NE(range.find("faces[4][2]"), std::string::npos) << range;

  EXPECT_NE(error_of("{\"schemaVersion\": \"1\",\n \"kind\": }").find("line 2"), std::string::npos);
  EXPECT_NE(error_of(R"({"schemaVersion":"9","kind":"graph"})").find("schema version"), std::string::npos);
  EXPECT_NE(error_of(R"({"schemaVersion":"1","kind":"graph","vertexCount":3,"edges":[[0,1.5]]})").find("integer"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schemaVersion":"1","kind":"embedded-k6","vertices":[[0.5,0,0]]})").find("non-rational"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schemaVersion":"1","kind":"graph","vertexCount":3,"edges":[[0,1],[1,0]]})")
                .find("duplicate"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"schemaVersion":"1","kind":"graph"})").find("vertexCount"), std::string::npos);
}

TEST(Parse, AcceptsReversedFaceKeys) {
  const auto s = sigma6(moment_curve_k6(), {0, 0, 0}, {0, 0, 0});
  auto doc = parse(emit_document(s));
  // A face written against its stored orientation, with its single triangle
  // in that same reversed order.
  const auto f = EmbeddedSuspension::complex().faces()[0].v;
  doc["triangulations"].push_back(Json{{"face", {f[0], f[2], f[1]}}, {"triangles", {{f[0], f[2], f[1]}}}});
  const auto parsed = std::get<EmbeddedSuspension>(parse_document(doc.dump()));
  ASSERT_TRUE(parsed.triangulations.contains(f));
  EXPECT_EQ(parsed.triangulations.at(f), (std::vector<std::array<std::size_t, 3>>{{f[0], f[1], f[2]}}));
  EXPECT_TRUE(verify_embedding4(parsed).valid());
}

TEST(RoundTrip, AllDocumentKinds) {
  Rng rng(4);
  std::vector<Document> docs{k6(), petersen_graph(), suspension(k6()), moment_curve_k6(),
                             sigma6(moment_curve_k6(), {0, 0, 0}, {0, 0, 0})};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto e = random_generic_k6(seed, 100);
    if (auto bent = reroute_edge(e, {1, 4}, rng))
      e = *bent;
    docs.push_back(e);
    docs.push_back(sigma6(e, {Rational(1, 3), 2, -5}, {7, Rational(-9, 4), 0}));
  }
  for (const auto &d : docs) {
    const auto text = emit_document(d);
    const auto back = parse_document(text);
    EXPECT_EQ(back, d) << document_kind(d);
    EXPECT_EQ(emit_document(back), text);
  }
}

TEST(RoundTrip, Reports) {
  const auto l = lambda(moment_curve_k6(), 12);
  const auto text = emit(to_json(l));
  EXPECT_EQ(parse_report(text), l);
  EXPECT_EQ(emit(to_json(parse_report(text))), text);

  auto b = big_lambda(sigma6(moment_curve_k6(), {0, 0, 0}, {0, 0, 0}), 3);
  EXPECT_EQ(parse_report(emit(to_json(b))), b);
  const auto j = to_json(b);
  // Pair 5 is {0,2,4}/{1,3,5}, the only linked one.
  EXPECT_EQ(j["pairs"][5]["term"], "1");
  EXPECT_EQ(j["pairs"][4]["term"], "0");

  // A report with an anomaly carries no value.
  b.parity_anomaly = true;
  b.value.reset();
  const auto anomalous = to_json(b);
  EXPECT_FALSE(anomalous.contains("value"));
  EXPECT_EQ(parse_report(emit(anomalous)), b);
  auto broken = anomalous;
  broken["value"] = 1;
  EXPECT_THROW(parse_report(broken.dump()), InputError);
}

TEST(Cli, Pairs) {
  const auto r = run({"pairs"});
  EXPECT_EQ(r.status, 0);
  const auto j = parse(r.out);
  ASSERT_EQ(j["pairs"].size(), 10u);
  std::set<std::vector<int>> triangles;
  for (const auto &p : j["pairs"]) {
    triangles.insert(p["t"].get<std::vector<int>>());
    triangles.insert(p["tBar"].get<std::vector<int>>());
  }
  EXPECT_EQ(triangles.size(), 20u);
}

TEST(Cli, Sigma6PipesIntoBigLambda) {
  const auto s = run({"sigma6", "--base", "moment"});
  ASSERT_EQ(s.status, 0) << s.err;
  const auto r = run({"biglambda", "-", "--seed", "5"}, s.out);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = parse(r.out);
  EXPECT_EQ(j["value"], 1);
  EXPECT_EQ(j["invariant"], "Lambda");
  EXPECT_EQ(j["seed"], 5);
  EXPECT_EQ(j["diagnostics"]["parityAnomaly"], false);
}

TEST(Cli, LambdaOnFixture) {
  const auto r = run({"lambda", fixture("moment_k6.json"), "--seed", "1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(parse(r.out)["value"], 1);
}

TEST(Cli, Minor) {
  const auto p = run({"minor", fixture("petersen.json")});
  EXPECT_EQ(p.status, 0);
  EXPECT_EQ(parse(p.out), Json::parse(R"({"hasK6Minor": false})"));
  const auto k = run({"minor", fixture("k6.json")});
  EXPECT_EQ(parse(k.out)["hasK6Minor"], true);
}

TEST(Cli, SuspendAndLemma32) {
  const auto s = run({"suspend", fixture("k6.json")});
  ASSERT_EQ(s.status, 0);
  EXPECT_EQ(std::get<TwoComplex>(parse_document(s.out)), suspension(k6()));
  const auto l = run({"lemma32"});
  EXPECT_EQ(l.status, 0);
  EXPECT_EQ(parse(l.out)["count"], 20);
  EXPECT_EQ(parse(l.out)["matchesDualTriangles"], true);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", fixture("moment_k6.json")}).status, 0);
  EXPECT_EQ(run({"verify", fixture("sigma6_moment.json")}).status, 0);
  const auto bad = run({"verify", fixture("planar_k6.json")});
  EXPECT_EQ(bad.status, 1);
  EXPECT_EQ(parse(bad.out)["valid"], false);
  EXPECT_EQ(run({"lambda", fixture("planar_k6.json")}).status, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"lambda", "/nonexistent/file.json"}).status, 2);
  EXPECT_EQ(run({"lambda", "-"}, "{not json").status, 2);
  EXPECT_EQ(run({"lambda", fixture("petersen.json")}).status, 2);
  EXPECT_EQ(run({"nosuchcommand"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"fuzz", "--trials", "0"}).status, 2);
  EXPECT_EQ(run({"lambda", fixture("moment_k6.json"), "--seed", "abc"}).status, 2);
}

TEST(Cli, OutputFileAndDeterminism) {
  const auto path = std::filesystem::temp_directory_path() / "linklab_sigma6_test.json";
  const auto a = run({"sigma6", "--base", "random", "--seed", "9", "-o", path.string()});
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_TRUE(a.out.empty());
  const auto written = slurp(path.string());
  EXPECT_EQ(written, run({"sigma6", "--base", "random", "--seed", "9"}).out);
  const auto l1 = run({"biglambda", path.string(), "--seed", "4"});
  const auto l2 = run({"biglambda", path.string(), "--seed", "4"});
  EXPECT_EQ(l1.status, 0) << l1.err;
  EXPECT_EQ(l1.out, l2.out);
  std::filesystem::remove(path);
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("LINKLAB_SEED", "31", 1);
  const auto r = run({"lambda", fixture("moment_k6.json")});
  ::unsetenv("LINKLAB_SEED");
  EXPECT_EQ(parse(r.out)["seed"], 31);
  EXPECT_EQ(parse(run({"lambda", fixture("moment_k6.json")}).out)["seed"], 0);
}

TEST(Cli, Fuzz) {
  const auto a = run({"fuzz", "--trials", "3", "--seed", "8", "--jobs", "2"});
  const auto b = run({"fuzz", "--trials", "3", "--seed", "8", "--jobs", "1"});
  EXPECT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(parse(a.out)["LambdaOnes"], 3);
}
