#include <gtest/gtest.h>

#include "cli_runner.hpp"

namespace softtop {
namespace {

using test::fixture_arg;
using test::run_cli;

struct Verdicts {
  const char* file;
  bool continuous;
  bool open;
  bool closed;
};

class GoldenExamples : public ::testing::TestWithParam<Verdicts> {};

TEST_P(GoldenExamples, ExitCodesMatchVerdicts) {
  const Verdicts& v = GetParam();
  const std::string f = fixture_arg(v.file);
  const auto c = run_cli("check-continuous " + f);
  EXPECT_EQ(c.exit_code, v.continuous ? 0 : 1) << c.out;
  EXPECT_NE(c.out.find(std::string("soft continuous: ") + (v.continuous ? "true" : "false")), std::string::npos)
      << c.out;
  const auto o = run_cli("check-open " + f);
  EXPECT_EQ(o.exit_code, v.open ? 0 : 1) << o.out;
  const auto cl = run_cli("check-closed " + f);
  EXPECT_EQ(cl.exit_code, v.closed ? 0 : 1) << cl.out;
}

INSTANTIATE_TEST_SUITE_P(Fixtures, GoldenExamples,
                         ::testing::Values(Verdicts{"example1.soft", true, false, false},
                                           Verdicts{"example2.soft", false, false, false},
                                           Verdicts{"example3.soft", false, false, false},
                                           Verdicts{"example4.soft", false, true, true},
                                           Verdicts{"example5.soft", true, false, false},
                                           Verdicts{"example6.soft", false, true, false},
                                           Verdicts{"example7.soft", false, false, true}),
                         [](const auto& info) {
                           std::string n = info.param.file;
                           return n.substr(0, n.find('.'));
                         });

TEST(Cli, ContinuousReportLine) {
  const auto r = run_cli("check-continuous " + fixture_arg("example1.soft"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "soft continuous: true; conditions (1)..(6): true");
}

TEST(Cli, InducedMapsOfExampleThree) {
  const auto r = run_cli("check-continuous " + fixture_arg("example3.soft"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("conditions (1)..(6): false"), std::string::npos);
  EXPECT_NE(r.out.find("induced map at e1 continuous: true"), std::string::npos);
  EXPECT_NE(r.out.find("induced map at e2 continuous: true"), std::string::npos);
}

TEST(Cli, OpenMapWitness) {
  const auto r = run_cli("check-open " + fixture_arg("example7.soft"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("open: {e1↦{h3}, e2↦{h2}}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("image: {e1↦{b}, e2↦{a}}"), std::string::npos) << r.out;
}

TEST(Cli, ClosureOfPoint) {
  const auto r = run_cli("closure " + fixture_arg("example1.soft") + " --set P --point h3@e1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("soft closure of P in tau: {e1↦{h3}, e2↦{h1,h2}}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("parameterwise closure: {e1↦{h3}, e2↦∅}"), std::string::npos) << r.out;
}

TEST(Cli, InteriorAndParamTopology) {
  const auto i = run_cli("interior " + fixture_arg("example1.soft") + " --set F1");
  EXPECT_EQ(i.exit_code, 0);
  EXPECT_NE(i.out.find("{e1↦{h1,h2}, e2↦{h3}}"), std::string::npos) << i.out;
  const auto p = run_cli("param-topology " + fixture_arg("example3.soft") + " --param e2");
  EXPECT_EQ(p.exit_code, 0);
  EXPECT_NE(p.out.find("tau at e2: {} {x1} {x1,x3} {x1,x2,x3}"), std::string::npos) << p.out;
}

TEST(Cli, CheckTopology) {
  EXPECT_EQ(run_cli("check-topology " + fixture_arg("example1.soft")).exit_code, 0);
  const auto bad = run_cli("check-topology " + fixture_arg("example2_bad_topology.soft"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("union: {e1↦{h2,h3}, e2↦{h1,h2}}"), std::string::npos) << bad.out;
  EXPECT_EQ(run_cli("closure " + fixture_arg("example2_bad_topology.soft") + " --set F1").exit_code, 2);
}

TEST(Cli, Homeomorphism) {
  const auto r = run_cli("check-homeo " + fixture_arg("example4.soft"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("agree: true"), std::string::npos) << r.out;
  EXPECT_EQ(run_cli("check-homeo " + fixture_arg("example1.soft")).exit_code, 1);
}

TEST(Cli, SweepAndEnumerate) {
  const auto s = run_cli("sweep THM1 --max-x 2 --max-y 2 --max-e 1");
  EXPECT_EQ(s.exit_code, 0) << s.out;
  EXPECT_NE(s.out.find("THM1: holds"), std::string::npos) << s.out;
  const auto c = run_cli("sweep THM2_CONVERSE " + fixture_arg("example3.soft") + " --max-x 1 --max-y 1 --max-e 1");
  EXPECT_EQ(c.exit_code, 1);
  EXPECT_NE(c.out.find("violations=1)"), std::string::npos) << c.out;
  const auto e = run_cli("enumerate --universe-size 2 --parameter-count 2");
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.out.find("soft topologies: 355"), std::string::npos) << e.out;
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run_cli("sweep THM9").exit_code, 2);
  EXPECT_EQ(run_cli("closure " + fixture_arg("missing.soft") + " --set A").exit_code, 2);
  EXPECT_EQ(run_cli("closure " + fixture_arg("example1.soft") + " --set NOPE").exit_code, 2);
  EXPECT_EQ(run_cli("closure " + fixture_arg("example1.soft") + " --point h9@e1").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("--budget 4 check-continuous " + fixture_arg("example1.soft") + " --json").exit_code, 0);
}

TEST(Cli, JsonIsDeterministic) {
  const std::string args = "--json check-continuous " + fixture_arg("example3.soft");
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.front(), '{');
}

}  // namespace
}  // namespace softtop
