#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qstrat/cli.hpp"
#include "qstrat/error.hpp"
#include "qstrat/spectrum.hpp"

using namespace qstrat;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string error_kind(const Run& r) { return json::parse(r.err).at("error").at("kind").get<std::string>(); }

}  // namespace

TEST(Cli, HelpExitsZero) {
  auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"spectrum", "strata", "subgroups", "weyl", "double-cosets", "coequalize", "drinfeld-check", "verify"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  auto s = cli({"spectrum", "--help"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("--prime-bound"), std::string::npos);
  EXPECT_NE(s.out.find("default 19"), std::string::npos);
}

TEST(Cli, UnknownFlagsAndCommandsAreParseErrors) {
  auto r = cli({"spectrum", "--group", "cyclic:2", "--theory", "ku", "--frobnicate"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_EQ(error_kind(r), "parse");
  EXPECT_EQ(cli({"nonsense"}).code, kExitParse);
  EXPECT_EQ(cli({}).code, kExitParse);
  EXPECT_EQ(cli({"spectrum", "--group", "cyclic:2"}).code, kExitParse);  // missing theory
  EXPECT_EQ(cli({"spectrum", "--group", "cyclic:2", "--theory", "ku", "--format", "svg"}).code, kExitParse);
}

TEST(Cli, MalformedGroupAndTheory) {
  auto r = cli({"spectrum", "--group", "cyclic:", "--theory", "ku"});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_EQ(error_kind(r), "parse");
  EXPECT_EQ(cli({"spectrum", "--group", "cyclic:2", "--theory", "height1:p=4"}).code, kExitParse);
}

TEST(Cli, DomainErrorsExitTwoWithJson) {
  auto r = cli({"spectrum", "--group", "sym:3", "--theory", "hz:p=3"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(error_kind(r), "unsupported");
  EXPECT_TRUE(r.out.empty());

  auto b = cli({"spectrum", "--group", "cyclic:2", "--theory", "ku", "--prime-bound", "5000"});
  EXPECT_EQ(b.code, kExitDomain);
  EXPECT_EQ(error_kind(b), "bound");

  auto w = cli({"spectrum", "--group", "elem-abelian:2^2", "--theory", "modp:q=2", "--mode", "weak"});
  EXPECT_EQ(w.code, kExitDomain);
}

TEST(Cli, SpectrumDotMatchesLibrary) {
  auto r = cli({"spectrum", "--group", "cyclic:4", "--theory", "height1:p=2", "--format", "dot"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = assemble_strong(TheorySpec::parse("height1:p=2"), build_group("cyclic:4"), "cyclic:4");
  EXPECT_EQ(r.out, to_dot(s));
  EXPECT_NE(r.out.find("Q_2(zeta_4)"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '>'), 3);
}

TEST(Cli, SpectrumJsonRoundTripsAndIsDeterministic) {
  std::vector<std::string> args{"spectrum", "--group", "cyclic:2", "--theory", "ku", "--prime-bound", "19"};
  auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto s = from_json(a.out);
  EXPECT_EQ(s.meta.prime_bound, 19u);
  EXPECT_EQ(s.points.size(), 2u + 1u + 2u * 7u);  // two minimal, one over 2, two over each odd prime <= 19
}

TEST(Cli, BoundOverridesTheory) {
  auto r = cli({"spectrum", "--group", "cyclic:2", "--theory", "ku:bound=19", "--prime-bound", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(from_json(r.out).meta.prime_bound, 3u);
}

TEST(Cli, WeakModeAgreesWithStrongForHeightOne) {
  auto s = cli({"spectrum", "--group", "sym:3", "--theory", "height1:p=3"});
  auto w = cli({"spectrum", "--group", "sym:3", "--theory", "height1:p=3", "--mode", "weak"});
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(check_agreement(from_json(s.out), from_json(w.out)).isomorphic);
}

TEST(Cli, TableFormat) {
  auto r = cli({"spectrum", "--group", "cyclic:2", "--theory", "kr", "--format", "table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("closed"), std::string::npos);
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "qstrat_cli_test.json";
  auto r = cli({"subgroups", "--group", "sym:3", "-o", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  json j = json::parse(f);
  EXPECT_EQ(j.at("classes").size(), 4u);
  std::filesystem::remove(path);
}

TEST(Cli, SubgroupsWithFamily) {
  auto r = cli({"subgroups", "--group", "sym:3", "--family", "cyclic-p(3)"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j.at("classes").size(), 2u);
  EXPECT_EQ(j["classes"][1]["order"], 3);
}

TEST(Cli, StrataShowsTrivialActionForS3) {
  auto r = cli({"strata", "--group", "sym:3", "--theory", "height1:p=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  const auto& c3 = j.at("strata").at(1);
  EXPECT_EQ(c3["order"], 3);
  EXPECT_EQ(c3["weyl"]["order"], 2);
  EXPECT_TRUE(c3["action_trivial"].get<bool>());
}

TEST(Cli, DoubleCosetsA3) {
  auto r = cli({"double-cosets", "--group", "sym:3", "--h", "A3", "--k", "A3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["count"], 2);
  EXPECT_TRUE(j["mackey"]["holds"].get<bool>());
}

TEST(Cli, WeylKinds) {
  auto r = cli({"weyl", "--group", "sym:3", "--h", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  ASSERT_EQ(j["weyl"].size(), 3u);
  // C3 is self-centralizing in S3, so all three quotients are N/C3
  for (const auto& w : j["weyl"]) EXPECT_EQ(w["order"], 2) << w.dump();
}

TEST(Cli, DrinfeldCheck) {
  auto r = cli({"drinfeld-check", "--p", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["equal"].get<bool>());
  EXPECT_TRUE(j["P_divides_Q"].get<bool>());
  EXPECT_EQ(j["quotient"], "1");
  EXPECT_TRUE(j["separable_char0"].get<bool>());
  EXPECT_FALSE(j["separable_mod_p"].get<bool>());
  EXPECT_EQ(cli({"drinfeld-check", "--p", "4"}).code, kExitDomain);
}

TEST(Cli, CoequalizeFromStdin) {
  json d = {{"objects", {"a", "b"}},
            {"points", {{"x", "y"}, {"z"}}},
            {"arrows", {{{"source", 0}, {"target", 1}, {"map", {0, 0}}}}}};
  auto r = cli({"coequalize"}, d.dump());
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["class_count"], 1);
  EXPECT_EQ(j["projection"], json({{0, 0}, {0}}));
}

TEST(Cli, CoequalizeErrors) {
  EXPECT_EQ(cli({"coequalize"}, "{not json").code, kExitParse);
  EXPECT_EQ(cli({"coequalize"}, R"({"objects":["a"]})").code, kExitParse);
  auto r = cli({"coequalize", "-"},
               R"({"objects":["a"],"points":[["x","y"]],"arrows":[{"source":0,"target":0,"map":[1,0],"identity":true}]})");
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(error_kind(r), "functoriality");
}

TEST(Cli, Verify) {
  auto l = cli({"verify", "--list"});
  ASSERT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("groups/mackey"), std::string::npos);
  auto r = cli({"verify", "--suite", "groups/mackey"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--suite", "nope"}).code, kExitParse);
}

TEST(SelectSubgroup, Forms) {
  PermGroup G = build_group("sym:4");
  auto classes = subgroups_up_to_conjugacy(G);
  EXPECT_EQ(select_subgroup(G, classes, "1").order(), 1u);
  EXPECT_EQ(select_subgroup(G, classes, "24").order(), 24u);
  const auto& a = select_subgroup(G, classes, "2.1");
  const auto& b = select_subgroup(G, classes, "2.2");
  EXPECT_EQ(a.order(), 2u);
  EXPECT_EQ(b.order(), 2u);
  EXPECT_NE(a.index, b.index);
  EXPECT_EQ(select_subgroup(G, classes, "gens:(0 1)").index, select_subgroup(G, classes, "gens:(2 3)").index);
  EXPECT_NE(select_subgroup(G, classes, "gens:(0 1)").index, select_subgroup(G, classes, "gens:(0 1)(2 3)").index);
  EXPECT_EQ(select_subgroup(G, classes, "gens:(0 1);(2 3)").order(), 4u);
  EXPECT_EQ(select_subgroup(G, classes, "A4").order(), 12u);
  EXPECT_EQ(select_subgroup(G, classes, "S3").order(), 6u);
  EXPECT_EQ(select_subgroup(G, classes, "gens:()").order(), 1u);
  EXPECT_EQ(select_subgroup(G, classes, a.key).index, a.index);
  EXPECT_THROW(select_subgroup(G, classes, "5"), DomainError);
  EXPECT_THROW(select_subgroup(G, classes, "2.9"), DomainError);
  EXPECT_THROW(select_subgroup(G, classes, "S5"), DomainError);
  EXPECT_THROW(select_subgroup(G, classes, "gens:(0 1 2 3 4)"), DomainError);
  EXPECT_THROW(select_subgroup(G, classes, "no-such"), DomainError);
  EXPECT_THROW(select_subgroup(G, classes, "2.x"), ParseError);
}
