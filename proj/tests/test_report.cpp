#include <string>

#include "gtest/gtest.h"
#include "spinparity/report.hpp"

namespace sp = spinparity;

namespace {

sp::SweepReport failing_report() {
  sp::SweepReport r;
  r.check = "conjecture";
  r.config.k_min = 3;
  r.config.k_max = 9;
  r.config.workers = 4;
  r.checks_run = 12;
  r.counterexamples.push_back({"conjecture", 5, 2, 0, 1});
  r.counterexamples.push_back({"conjecture", 9, 7, 1, 0});
  r.elapsed_ms = 17;
  return r;
}

}  // namespace

TEST(Report, VerdictFollowsCounterexamples) {
  sp::SweepReport r;
  EXPECT_EQ(r.verdict(), sp::Verdict::kPass);
  EXPECT_EQ(failing_report().verdict(), sp::Verdict::kFail);
}

TEST(Report, CsvIsExactAndTimingFree) {
  EXPECT_EQ(sp::render_csv(failing_report()),
            "check,k,n,observed,expected\n"
            "conjecture,5,2,0,1\n"
            "conjecture,9,7,1,0\n");
  sp::SweepReport pass;
  EXPECT_EQ(sp::render_csv(pass), "check,k,n,observed,expected\n");
}

TEST(Report, JsonLayout) {
  const auto doc = sp::to_json(failing_report());
  EXPECT_EQ(doc["verdict"], "FAIL");
  EXPECT_EQ(doc["checks_run"], 12);
  EXPECT_EQ(doc["config"]["n_policy"], "COPRIME_PAIRS");
  EXPECT_EQ(doc["config"]["method"], "identity");
  EXPECT_EQ(doc["counterexamples"][1]["n"], 7);
  EXPECT_EQ(doc["timing"]["elapsed_ms"], 17);
  EXPECT_EQ(doc["timing"]["workers"], 4);
  EXPECT_FALSE(sp::to_json(failing_report(), false).contains("timing"));
}

TEST(Report, JsonRoundTrip) {
  const std::string text = sp::to_json(failing_report()).dump();
  EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(), text);
}

TEST(Report, PlainTimingIsLastLine) {
  const std::string with = sp::render_plain(failing_report());
  const std::string without = sp::render_plain(failing_report(), false);
  EXPECT_EQ(with, without + "elapsed_ms: 17 (workers: 4)\n");
  EXPECT_NE(without.find("verdict: FAIL"), std::string::npos);
  EXPECT_NE(without.find("conjecture k=9 n=7 observed=1 expected=0"),
            std::string::npos);
}

TEST(Report, SpinSummary) {
  const sp::Signature sig(sp::OddModulus{15}, {6, 2, -38}, 0);
  const auto s = sp::summarize(sig);
  EXPECT_EQ(s.n_k, 1);
  EXPECT_EQ(s.parity_class, 1);
  EXPECT_EQ(sp::render_csv(s),
            "k,genus,mu,rotation,n_k,parity_class\n15,0,\"6,2,-38\",,1,1\n");
  EXPECT_EQ(sp::to_json(s).dump(),
            R"({"k":15,"genus":0,"mu":[6,2,-38],"rotation":null,"n_k":1,"parity_class":1})");
  EXPECT_EQ(sp::render_plain(s),
            "k: 15\ngenus: 0\nmu: 6,2,-38\nn_k: 1\nparity_class: 1\n");
}
