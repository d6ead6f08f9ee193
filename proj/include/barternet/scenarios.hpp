#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "barternet/model.hpp"
#include "barternet/types.hpp"

namespace barternet {

/// A self-contained instance: the ground network, every agent's true order,
/// and optional overrides describing how agents deviate from truthful
/// behaviour (misreported orders, partial invitations, or declining
/// outright). Scenarios serialize to a line-based text format; see
/// docs/scenario_format.md.
struct Scenario {
  std::string name;
  int agent_count = 0;
  // Undirected contact edges, each listed once as (lo, hi), sorted; endpoint
  // 0 is the organizer.
  std::vector<std::pair<AgentId, AgentId>> edges;
  std::map<AgentId, PreferenceOrder> true_orders;

  std::map<AgentId, PreferenceOrder> reported_overrides;
  std::map<AgentId, std::vector<AgentId>> invited_overrides;
  std::set<AgentId> nil_overrides;

  SocialNetwork to_network() const;

  /// Complete profile: truthful defaults with the overrides applied.
  ActionProfile to_actions() const;

  std::vector<AgentId> neighbors_of(AgentId v) const;

  bool operator==(const Scenario& o) const;
};

/// Built-in instances used throughout the tests and docs:
///   fig2_line   — 3 agents on a line o-1-2-3; the misreport/withhold
///                 playground for the naive mechanism's failures.
///   fig3_table1 — 5 agents, two of them reachable only through an inviter;
///                 the impossibility instance.
///   fig6_table2 — 7 agents over a 2-connected core; the worked TTCI run.
Scenario fixture(const std::string& name);

std::vector<std::string> fixture_names();

enum class Topology { tree, erdos_renyi, complete };

/// Deterministic random instance: a uniform random spanning tree over
/// {organizer, 1..n} (guaranteeing everyone is reachable), plus extra edges
/// by topology (none for tree; each remaining pair independently with
/// probability p for erdos_renyi; all pairs for complete), plus uniform
/// random master orders. Identical (n, topology, p, seed) give an identical
/// scenario. p must lie in [0, 1].
Scenario generate_random(int n, Topology topology, double p,
                         std::uint64_t seed);

Scenario parse_scenario(std::string_view text,
                        std::string_view origin = "<string>");
std::string serialize_scenario(const Scenario& s);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

}  // namespace barternet
