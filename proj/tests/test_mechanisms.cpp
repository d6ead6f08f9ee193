#include <map>
#include <stdexcept>
#include <vector>

#include "barternet/mechanisms.hpp"
#include "barternet/scenarios.hpp"
#include "doctest.h"

using namespace barternet;

namespace {

std::vector<TradeCycle> cycles(std::vector<std::vector<AgentId>> raw) {
  std::vector<TradeCycle> out;
  for (auto& c : raw) out.push_back(TradeCycle{std::move(c)});
  return out;
}

struct Prepared {
  SocialNetwork net;
  ActionProfile acts;
  GeneratedGraph graph;
};

Prepared prepare(const std::string& name) {
  Scenario s = fixture(name);
  SocialNetwork net = s.to_network();
  ActionProfile acts = truthful_profile(net);
  GeneratedGraph g = build_generated_graph(net, acts);
  return {std::move(net), std::move(acts), std::move(g)};
}

}  // namespace

TEST_SUITE("mechanisms") {

TEST_CASE("cycle detection on functional pointer graphs") {
  CHECK(find_cycles({{1, 2}, {2, 1}, {3, 3}}) == cycles({{1, 2}, {3}}));
  // Tails feeding a cycle are not part of it.
  CHECK(find_cycles({{1, 2}, {2, 3}, {3, 2}}) == cycles({{2, 3}}));
  // Canonical rotation starts at the smallest agent.
  CHECK(find_cycles({{4, 2}, {2, 4}}) == cycles({{2, 4}}));
  CHECK(find_cycles({{5, 5}}) == cycles({{5}}));
}

TEST_CASE("pointer graph points at top remaining choices") {
  std::map<AgentId, std::vector<GoodId>> avail{
      {1, {1, 2}}, {2, {1, 2, 3}}, {3, {2, 3}}};
  std::map<AgentId, PreferenceOrder> orders{
      {1, PreferenceOrder({3, 2, 1})},
      {2, PreferenceOrder({1, 3, 2})},
      {3, PreferenceOrder({1, 2, 3})}};
  PointerGraph p = build_pointer_graph({1, 2, 3}, avail, orders);
  CHECK(p == PointerGraph{{1, 2}, {2, 1}, {3, 2}});
  // Once 1 and 2 have left, 3's best remaining available good is her own.
  CHECK(build_pointer_graph({3}, avail, orders) == PointerGraph{{3, 3}});
}

TEST_CASE("pointer graph rejects malformed availability") {
  std::map<AgentId, PreferenceOrder> orders{{1, PreferenceOrder({1, 2})}};
  std::map<AgentId, std::vector<GoodId>> missing_own{{1, {2}}};
  CHECK_THROWS_AS(build_pointer_graph({1}, missing_own, orders),
                  std::invalid_argument);
  std::map<AgentId, std::vector<GoodId>> no_entry;
  CHECK_THROWS_AS(build_pointer_graph({1}, no_entry, orders),
                  std::invalid_argument);
}

TEST_CASE("classic full-visibility trading") {
  Scenario s = fixture("fig3_table1");
  std::map<AgentId, PreferenceOrder> orders = s.true_orders;
  Matching m = run_ttc({1, 2, 3, 4, 5}, orders);
  REQUIRE(m.trace.size() == 2);
  CHECK(m.trace[0].cycles == cycles({{3, 4}}));
  CHECK(m.trace[1].cycles == cycles({{1, 5, 2}}));
  CHECK(m.assignment ==
        std::map<AgentId, GoodId>{{1, 5}, {2, 1}, {3, 4}, {4, 3}, {5, 2}});
}

TEST_CASE("line fixture across the three graph mechanisms") {
  Prepared p = prepare("fig2_line");

  Matching naive = run_network_ttc(p.graph, p.acts);
  CHECK(naive.trace[0].cycles == cycles({{1, 3}}));
  CHECK(naive.assignment ==
        std::map<AgentId, GoodId>{{1, 3}, {2, 2}, {3, 1}});

  Matching neighbor = run_starter(p.graph, p.acts);
  CHECK(neighbor.trace[0].cycles == cycles({{1, 2}}));
  CHECK(neighbor.assignment ==
        std::map<AgentId, GoodId>{{1, 2}, {2, 1}, {3, 3}});

  Matching inv = run_ttci(p.graph, p.acts);
  REQUIRE(inv.trace.size() == 1);
  CHECK(inv.trace[0].cycles == cycles({{1, 3, 2}}));
  CHECK(inv.assignment == std::map<AgentId, GoodId>{{1, 3}, {2, 1}, {3, 2}});
}

TEST_CASE("worked seven-agent run") {
  Prepared p = prepare("fig6_table2");
  Matching m = run_ttci(p.graph, p.acts);
  REQUIRE(m.trace.size() == 4);
  CHECK(m.trace[0].cycles == cycles({{3, 7, 5}}));
  CHECK(m.trace[1].cycles == cycles({{6}}));
  CHECK(m.trace[2].cycles == cycles({{1, 4}}));
  CHECK(m.trace[3].cycles == cycles({{2}}));
  CHECK(m.assignment == std::map<AgentId, GoodId>{{1, 4}, {2, 2}, {3, 7},
                                                  {4, 1}, {5, 3}, {6, 6},
                                                  {7, 5}});
  // Pointer snapshots carry every active agent each round.
  CHECK(m.trace[0].pointers.size() == 7);
  CHECK(m.trace[0].pointers.at(3) == 7);
  CHECK(m.trace[3].pointers == std::map<AgentId, AgentId>{{2, 2}});
}

TEST_CASE("excluded agents do not trade") {
  Scenario s = fixture("fig2_line");
  SocialNetwork net = s.to_network();
  ActionProfile acts = truthful_profile(net);
  acts[2] = Action{net.type_of(2).preference, {1}};  // 3 never invited
  GeneratedGraph g = build_generated_graph(net, acts);
  Matching m = run_ttci(g, acts);
  CHECK_FALSE(m.contains(3));
  CHECK(m.assignment == std::map<AgentId, GoodId>{{1, 2}, {2, 1}});
}

TEST_CASE("cycle processing order does not change the matching") {
  for (const std::string& name : fixture_names()) {
    Prepared p = prepare(name);
    Matching all = run_ttci(p.graph, p.acts);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      Matching one =
          run_ttci(p.graph, p.acts, CycleSelection::single_random(seed));
      CHECK(one.assignment == all.assignment);
    }
  }
}

TEST_CASE("single-cycle rounds process one cycle each") {
  Prepared p = prepare("fig2_line");
  Matching naive_all = run_network_ttc(p.graph, p.acts);
  Matching naive_one =
      run_network_ttc(p.graph, p.acts, CycleSelection::single_random(9));
  CHECK(naive_one.assignment == naive_all.assignment);
  for (const TradeRound& r : naive_one.trace) CHECK(r.cycles.size() == 1);
}

TEST_CASE("mechanism dispatch and names") {
  Prepared p = prepare("fig2_line");
  CHECK(run_graph_mechanism(GraphMechanism::ttci, p.graph, p.acts).assignment ==
        run_ttci(p.graph, p.acts).assignment);
  CHECK(run_graph_mechanism(GraphMechanism::starter, p.graph, p.acts)
            .assignment == run_starter(p.graph, p.acts).assignment);
  CHECK(run_graph_mechanism(GraphMechanism::network_ttc, p.graph, p.acts)
            .assignment == run_network_ttc(p.graph, p.acts).assignment);
  CHECK(std::string(to_string(GraphMechanism::network_ttc)) == "naive-ttc");
  CHECK(std::string(to_string(GraphMechanism::starter)) == "starter");
  CHECK(std::string(to_string(GraphMechanism::ttci)) == "ttci");
}

TEST_CASE("starter trades only along market edges") {
  Prepared p = prepare("fig6_table2");
  Matching m = run_starter(p.graph, p.acts);
  for (const TradeRound& r : m.trace)
    for (const TradeCycle& c : r.cycles)
      for (std::size_t k = 0; k < c.agents.size(); ++k) {
        AgentId a = c.agents[k];
        AgentId b = c.agents[(k + 1) % c.agents.size()];
        if (a != b)
          CHECK(detail::sorted_contains(p.graph.market_neighbors_of(a), b));
      }
}

}  // TEST_SUITE
