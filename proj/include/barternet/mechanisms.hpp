#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "barternet/generated_graph.hpp"
#include "barternet/model.hpp"
#include "barternet/rng.hpp"
#include "barternet/types.hpp"

namespace barternet {

/// Out-degree-one pointer map: each active agent points at the owner of her
/// most preferred remaining available good.
using PointerGraph = std::map<AgentId, AgentId>;

/// Pointer snapshot for one round. `active` agents each pick their top choice
/// among their available goods still held by active agents; every agent's own
/// good must be available to her, so the map is total on `active`.
PointerGraph build_pointer_graph(
    const std::vector<AgentId>& active,
    const std::map<AgentId, std::vector<GoodId>>& available,
    const std::map<AgentId, PreferenceOrder>& orders);

/// All cycles of an out-degree-one pointer graph (at least one always
/// exists). Each cycle is rotated to start at its smallest agent; cycles are
/// sorted by that agent.
std::vector<TradeCycle> find_cycles(const PointerGraph& pointers);

/// Which cycles leave the market each round. Trading everything at once is
/// the default; resolving one random cycle at a time is equivalent for the
/// final matching (the pointer graph is functional), which the test suite
/// exercises.
class CycleSelection {
 public:
  static CycleSelection all() { return CycleSelection(true, 0); }
  static CycleSelection single_random(std::uint64_t seed) {
    return CycleSelection(false, seed);
  }

  bool trade_all() const { return all_; }
  std::uint64_t seed() const { return seed_; }

 private:
  CycleSelection(bool all, std::uint64_t seed) : all_(all), seed_(seed) {}
  bool all_;
  std::uint64_t seed_;
};

/// A trading-rounds instance: who trades, what each agent can point at, and
/// the reported orders that drive the pointing. Every agent's available set
/// must contain her own good and every order must rank all her available
/// goods.
struct TradingProblem {
  std::vector<AgentId> participants;  // sorted
  std::map<AgentId, PreferenceOrder> orders;
  std::map<AgentId, std::vector<GoodId>> available;
};

/// Runs top-trading-cycles rounds until everyone has traded. Agents whose
/// entire available set has left the market point at (and receive) their own
/// good.
Matching run_trading_rounds(const TradingProblem& problem,
                            CycleSelection selection = CycleSelection::all());

/// Classic full-visibility TTC among `agents`: every good of the group is
/// available to every member.
Matching run_ttc(const std::vector<AgentId>& agents,
                 const std::map<AgentId, PreferenceOrder>& orders,
                 CycleSelection selection = CycleSelection::all());

/// TTC run on the generated graph's participants with full visibility — the
/// naive port of the classic mechanism to the network setting. Kept as the
/// baseline whose incentive failures motivate the other two mechanisms.
Matching run_network_ttc(const GeneratedGraph& g, const ActionProfile& actions,
                         CycleSelection selection = CycleSelection::all());

/// Neighbor-only mechanism: each participant sees her own good plus her
/// market neighbors' goods. Every resulting trade cycle is a cycle of the
/// generated graph.
Matching run_starter(const GeneratedGraph& g, const ActionProfile& actions,
                     CycleSelection selection = CycleSelection::all());

/// Invitation-aware mechanism: each participant sees the goods of her
/// descendants and her direct market neighbors.
Matching run_ttci(const GeneratedGraph& g, const ActionProfile& actions,
                  CycleSelection selection = CycleSelection::all());

/// The graph-based mechanisms, for call sites parametrized by name.
enum class GraphMechanism { network_ttc, starter, ttci };

Matching run_graph_mechanism(GraphMechanism mech, const GeneratedGraph& g,
                             const ActionProfile& actions,
                             CycleSelection selection = CycleSelection::all());

const char* to_string(GraphMechanism mech);

}  // namespace barternet
