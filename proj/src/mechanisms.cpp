#include "barternet/mechanisms.hpp"

#include <stdexcept>

namespace barternet {

PointerGraph build_pointer_graph(
    const std::vector<AgentId>& active,
    const std::map<AgentId, std::vector<GoodId>>& available,
    const std::map<AgentId, PreferenceOrder>& orders) {
  PointerGraph pointers;
  for (AgentId i : active) {
    auto ait = available.find(i);
    if (ait == available.end())
      throw std::invalid_argument("no available set for agent " + std::to_string(i));
    if (!detail::sorted_contains(ait->second, good_of(i)))
      throw std::invalid_argument("available set of agent " + std::to_string(i) +
                                  " must contain her own good");
    auto oit = orders.find(i);
    if (oit == orders.end())
      throw std::invalid_argument("no reported order for agent " + std::to_string(i));
    // Goods still in the market are exactly those of the active agents.
    std::vector<GoodId> menu = detail::sorted_intersection(ait->second, active);
    pointers[i] = owner_of(oit->second.top_choice(menu));
  }
  return pointers;
}

std::vector<TradeCycle> find_cycles(const PointerGraph& pointers) {
  for (const auto& [i, j] : pointers)
    if (!pointers.count(j))
      throw std::invalid_argument("pointer target " + std::to_string(j) +
                                  " of agent " + std::to_string(i) +
                                  " is not itself pointing");

  std::map<AgentId, int> state;  // 0 new, 1 on current walk, 2 finished
  std::vector<TradeCycle> cycles;
  for (const auto& [start, _] : pointers) {
    if (state[start] != 0) continue;
    std::vector<AgentId> walk;
    AgentId u = start;
    while (state[u] == 0) {
      state[u] = 1;
      walk.push_back(u);
      u = pointers.at(u);
    }
    if (state[u] == 1) {  // closed a fresh cycle at u
      auto it = std::find(walk.begin(), walk.end(), u);
      std::vector<AgentId> cycle(it, walk.end());
      auto min_it = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), min_it, cycle.end());
      cycles.push_back(TradeCycle{std::move(cycle)});
    }
    for (AgentId v : walk) state[v] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const TradeCycle& a, const TradeCycle& b) {
              return a.agents.front() < b.agents.front();
            });
  return cycles;
}

Matching run_trading_rounds(const TradingProblem& problem,
                            CycleSelection selection) {
  std::vector<AgentId> active = detail::sorted_unique(problem.participants);
  SplitMix64 rng(selection.seed());
  Matching m;
  while (!active.empty()) {
    PointerGraph pointers =
        build_pointer_graph(active, problem.available, problem.orders);
    std::vector<TradeCycle> cycles = find_cycles(pointers);
    if (cycles.empty())
      throw std::logic_error("pointer graph without a cycle");  // unreachable
    TradeRound round;
    round.pointers = std::move(pointers);
    if (selection.trade_all()) {
      round.cycles = std::move(cycles);
    } else {
      round.cycles.push_back(cycles[rng.below(cycles.size())]);
    }
    for (const TradeCycle& c : round.cycles) {
      const auto& a = c.agents;
      for (std::size_t k = 0; k < a.size(); ++k)
        m.assignment[a[k]] = good_of(a[(k + 1) % a.size()]);
      for (AgentId i : a) detail::sorted_erase(active, i);
    }
    m.trace.push_back(std::move(round));
  }
  return m;
}

Matching run_ttc(const std::vector<AgentId>& agents,
                 const std::map<AgentId, PreferenceOrder>& orders,
                 CycleSelection selection) {
  TradingProblem problem;
  problem.participants = detail::sorted_unique(agents);
  problem.orders = orders;
  for (AgentId i : problem.participants)
    problem.available[i] = problem.participants;  // full visibility
  return run_trading_rounds(problem, selection);
}

namespace {

std::map<AgentId, PreferenceOrder> reported_orders(const GeneratedGraph& g,
                                                   const ActionProfile& actions) {
  std::map<AgentId, PreferenceOrder> orders;
  for (AgentId i : g.participants()) {
    auto it = actions.find(i);
    if (it == actions.end() || !it->second.has_value())
      throw std::invalid_argument("participant " + std::to_string(i) +
                                  " has no reported order in the profile");
    orders.emplace(i, it->second->reported);
  }
  return orders;
}

Matching run_with_mode(const GeneratedGraph& g, const ActionProfile& actions,
                       AvailableMode mode, CycleSelection selection) {
  TradingProblem problem;
  problem.participants = g.participants();
  problem.orders = reported_orders(g, actions);
  for (AgentId i : problem.participants)
    problem.available[i] = available_set(g, i, mode);
  return run_trading_rounds(problem, selection);
}

}  // namespace

Matching run_network_ttc(const GeneratedGraph& g, const ActionProfile& actions,
                         CycleSelection selection) {
  return run_ttc(g.participants(), reported_orders(g, actions), selection);
}

Matching run_starter(const GeneratedGraph& g, const ActionProfile& actions,
                     CycleSelection selection) {
  return run_with_mode(g, actions, AvailableMode::starter, selection);
}

Matching run_ttci(const GeneratedGraph& g, const ActionProfile& actions,
                  CycleSelection selection) {
  return run_with_mode(g, actions, AvailableMode::ttci, selection);
}

Matching run_graph_mechanism(GraphMechanism mech, const GeneratedGraph& g,
                             const ActionProfile& actions,
                             CycleSelection selection) {
  switch (mech) {
    case GraphMechanism::network_ttc:
      return run_network_ttc(g, actions, selection);
    case GraphMechanism::starter:
      return run_starter(g, actions, selection);
    case GraphMechanism::ttci:
      return run_ttci(g, actions, selection);
  }
  throw std::invalid_argument("unknown mechanism");
}

const char* to_string(GraphMechanism mech) {
  switch (mech) {
    case GraphMechanism::network_ttc:
      return "naive-ttc";
    case GraphMechanism::starter:
      return "starter";
    case GraphMechanism::ttci:
      return "ttci";
  }
  return "?";
}

}  // namespace barternet
