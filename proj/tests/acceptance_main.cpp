// Acceptance gate: one line per criterion, [PASS] or [FAIL], with timings.
// Exit code is the number of failed criteria.
//
// Criterion 5 is expected to fail: truthful invitation is not a dominant
// strategy for the invitation-aware mechanism, and the suite finds genuine
// improving deviations (see README, "Known property boundary", and the
// `invitation_ring` unit test). The criterion is run exactly as stated and
// reported honestly rather than weakened to pass.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "barternet/report.hpp"
#include "barternet/verification.hpp"

using namespace barternet;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string what)
      : number_(number), what_(std::move(what)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      ok_ = false;
      details_.push_back(detail);
    }
  }

  void note(const std::string& line) { details_.push_back(line); }

  void finish(double budget_seconds) {
    double sec = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start_).count();
    if (sec > budget_seconds) {
      ok_ = false;
      details_.push_back("runtime " + std::to_string(sec) + "s exceeds " +
                         std::to_string(budget_seconds) + "s");
    }
    for (const std::string& d : details_) std::printf("       - %s\n", d.c_str());
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok_ ? "PASS" : "FAIL",
                number_, what_.c_str(), sec);
    if (!ok_) ++g_failures;
  }

 private:
  int number_;
  std::string what_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> details_;
};

std::string show(const std::map<AgentId, GoodId>& m) {
  std::string out;
  for (auto [i, g] : m)
    out += (out.empty() ? "" : " ") + std::to_string(i) + ":g" + std::to_string(g);
  return out;
}

void criterion_1() {
  Criterion c(1, "worked seven-agent run (fig6_table2): trace, matching, "
                 "available sets");
  Scenario s = fixture("fig6_table2");
  SocialNetwork net = s.to_network();
  ActionProfile acts = truthful_profile(net);
  GeneratedGraph g = build_generated_graph(net, acts);
  Matching m = run_ttci(g, acts);

  std::vector<std::vector<std::vector<AgentId>>> want_rounds{
      {{3, 7, 5}}, {{6}}, {{1, 4}}, {{2}}};
  c.require(m.trace.size() == want_rounds.size(), "expected four rounds");
  for (std::size_t r = 0; r < m.trace.size() && r < want_rounds.size(); ++r) {
    std::vector<TradeCycle> want;
    for (const auto& cyc : want_rounds[r]) want.push_back(TradeCycle{cyc});
    c.require(m.trace[r].cycles == want,
              "round " + std::to_string(r + 1) + " cycles differ");
  }

  std::map<AgentId, GoodId> want_match{{1, 4}, {2, 2}, {3, 7}, {4, 1},
                                       {5, 3}, {6, 6}, {7, 5}};
  c.require(m.assignment == want_match,
            "matching is " + show(m.assignment) + ", expected " +
                show(want_match));

  std::map<AgentId, std::vector<GoodId>> want_avail{
      {1, {1, 2, 3, 4, 5, 6, 7}}, {2, {1, 2, 3}},
      {3, {1, 2, 3, 4, 5, 6, 7}}, {4, {1, 3, 4}},
      {5, {3, 5, 7}},             {6, {3, 6, 7}},
      {7, {5, 6, 7}}};
  for (const auto& [i, want] : want_avail)
    c.require(available_set(g, i, AvailableMode::ttci) == want,
              "available set of agent " + std::to_string(i) + " differs");
  c.finish(1.0);
}

void criterion_2() {
  Criterion c(2, "naive baseline failures on fig2_line: withholding and "
                 "submarket witnesses");
  LineFailureReport r = demonstrate_line_failure(fixture("fig2_line"));
  c.require(r.truthful_good_2 == 2 && r.withhold_good_2 == 1 && r.ic_violated,
            "withholding agent 3 should move agent 2 from g2 to g1");
  c.require(!r.sweep_2.truthful_optimal() &&
                r.sweep_2.best_deviation_good == 1,
            "exhaustive sweep should find the witness");
  c.require(!r.ir_2.holds && r.ir_2.market_good == 2 && r.ir_2.local_good == 3,
            "agent 2's own submarket should yield g3 over the market's g2");
  c.require(r.ttci_ic_clean && r.ttci_ir_clean,
            "the invitation-aware mechanism should be clean on this instance");
  c.finish(1.0);
}

void criterion_3() {
  Criterion c(3, "efficiency/incentive impossibility on fig3_table1: "
                 "120-matching scan plus both deviation cases");
  ImpossibilityReport r = demonstrate_impossibility(fixture("fig3_table1"));
  c.require(r.matchings_scanned == 120, "expected a scan of all 120 matchings");

  std::map<AgentId, GoodId> alloc_b{{1, 5}, {2, 1}, {3, 4}, {4, 3}, {5, 2}};
  std::map<AgentId, GoodId> alloc_c{{1, 4}, {2, 2}, {3, 3}, {4, 1}, {5, 5}};
  auto optimal = [&](const std::map<AgentId, GoodId>& m) {
    for (const auto& p : r.pareto_optimal)
      if (p == m) return true;
    return false;
  };
  c.require(optimal(alloc_b), "allocation " + show(alloc_b) + " not optimal");
  c.require(optimal(alloc_c), "allocation " + show(alloc_c) + " not optimal");

  c.require(r.case_one.deviator == 1 && r.case_one.withheld == 3 &&
                r.case_one.optimal_allocation == alloc_b &&
                r.case_one.allocation_good == 5 &&
                r.case_one.deviation_good == 4 && r.case_one.improves,
            "agent 1 should improve g5 -> g4 by withholding agent 3");
  c.require(r.case_two.deviator == 2 && r.case_two.withheld == 4 &&
                r.case_two.optimal_allocation == alloc_c &&
                r.case_two.allocation_good == 2 &&
                r.case_two.deviation_good == 1 && r.case_two.improves,
            "agent 2 should improve g2 -> g1 by withholding agent 4");
  c.finish(5.0);
}

void criterion_4() {
  Criterion c(4, "individual rationality: 1000 instances, up to 8 agents, "
                 "zero violations");
  SuiteResult r = run_ir_suite({1000, 1, 8, 1004}, GraphMechanism::ttci);
  for (const std::string& f : r.failures) c.note(f);
  c.require(r.passed(), std::to_string(r.failures.size()) + " violations in " +
                            std::to_string(r.checks) + " checks");
  c.finish(120.0);
}

void criterion_5() {
  Criterion c(5, "incentive compatibility: exhaustive sweeps on 200 "
                 "instances (n <= 5) plus 50 sampled deviations per agent on "
                 "500 instances (n <= 8), truthful and random environments, "
                 "zero witnesses");
  DeviationBudget exhaustive;
  SuiteResult a = run_ic_suite({200, 1, 5, 1005}, GraphMechanism::ttci,
                               exhaustive, /*randomize_others=*/true);
  DeviationBudget sampled;
  sampled.mode = EnumerationMode::sampled;
  sampled.samples = 50;
  sampled.seed = 1015;
  SuiteResult b = run_ic_suite({500, 1, 8, 1015}, GraphMechanism::ttci,
                               sampled, /*randomize_others=*/true);

  for (const std::string& f : a.failures) c.note("witness (exhaustive): " + f);
  for (const std::string& f : b.failures) c.note("witness (sampled): " + f);
  std::size_t witnesses = a.failures.size() + b.failures.size();
  if (witnesses > 0)
    c.note("note: these are genuine improving invitation deviations — "
           "withholding invitations can make the deviator's good newly "
           "reachable for upstream agents and reroute their trades in her "
           "favour. See README \"Known property boundary\".");
  c.require(witnesses == 0,
            std::to_string(witnesses) + " witnesses across " +
                std::to_string(a.checks + b.checks) + " checked deviations");
  c.finish(300.0);
}

void criterion_6() {
  Criterion c(6, "Pareto optimality: exhaustive dominance scan on 500 "
                 "instances, up to 7 agents, zero dominators");
  SuiteResult r = run_po_suite({500, 1, 7, 1006}, GraphMechanism::ttci);
  for (const std::string& f : r.failures) c.note(f);
  c.require(r.passed(), std::to_string(r.failures.size()) + " dominated outcomes");
  c.finish(120.0);
}

void criterion_7() {
  Criterion c(7, "complete-network equivalence with classic top trading "
                 "cycles on 200 instances");
  SuiteResult r = run_equivalence_suite({200, 1, 8, 1007});
  for (const std::string& f : r.failures) c.note(f);
  c.require(r.passed(), std::to_string(r.failures.size()) + " divergences");
  c.finish(60.0);
}

void criterion_8() {
  Criterion c(8, "structural oracles: articulation-point descendants vs "
                 "removal oracle on 1000 graphs; cycle-order invariance on "
                 "200 instances");
  SuiteResult r = run_structural_suite({1000, 1, 8, 1008});
  for (const std::string& f : r.failures) c.note(f);
  c.require(r.passed(), std::to_string(r.failures.size()) + " oracle mismatches");
  c.finish(120.0);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures;
}
