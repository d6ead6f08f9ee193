#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barternet/preference.hpp"
#include "barternet/types.hpp"

namespace barternet {

/// An agent's ground truth: her master preference order over all goods and
/// her contact list (which may include the organizer, never herself).
struct AgentType {
  PreferenceOrder preference;
  std::vector<AgentId> neighbors;  // sorted, duplicate-free
};

/// What an agent reports when reached: a (possibly misstated) master order
/// plus the subset of her contacts she passes the invitation to.
struct Action {
  PreferenceOrder reported;
  std::vector<AgentId> invited;  // sorted subset of her true neighbors

  bool operator==(const Action& o) const {
    return reported == o.reported && invited == o.invited;
  }
};

/// nullopt is the nil action: the agent was never reached, or declines and
/// relays nothing.
using AgentAction = std::optional<Action>;

/// One action per agent (complete: every agent id 1..n has an entry).
using ActionProfile = std::map<AgentId, AgentAction>;

/// The ground barter market: the organizer's contacts plus every agent's type.
/// Agent ids must be exactly 1..n.
class SocialNetwork {
 public:
  SocialNetwork(std::vector<AgentId> organizer_contacts,
                std::map<AgentId, AgentType> agents);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  const std::vector<AgentId>& organizer_contacts() const {
    return organizer_contacts_;
  }
  const AgentType& type_of(AgentId i) const;

  std::vector<AgentId> agent_ids() const;  // 1..n
  std::vector<GoodId> all_goods() const;   // 1..n

 private:
  std::vector<AgentId> organizer_contacts_;
  std::map<AgentId, AgentType> agents_;
};

/// The profile in which every agent reports her true order and invites all
/// of her contacts.
ActionProfile truthful_profile(const SocialNetwork& net);

/// Structural checks on a network plus profile. Returns one message per
/// violation (empty means valid):
///   - neighbor symmetry (i lists j iff j lists i, organizer included),
///   - master orders rank exactly the n goods,
///   - every agent has an entry in the profile,
///   - non-nil actions invite only true neighbors and report complete orders.
std::vector<std::string> validate_instance(const SocialNetwork& net,
                                           const ActionProfile& actions);

/// A trade cycle: agents[k] receives the good of agents[(k+1) % size].
/// Canonical form starts at the smallest agent id.
struct TradeCycle {
  std::vector<AgentId> agents;

  bool operator==(const TradeCycle& o) const { return agents == o.agents; }
};

/// One round of a trading mechanism: the full pointer snapshot (each active
/// agent points at the owner of her current top choice) and the cycles that
/// traded and left.
struct TradeRound {
  std::map<AgentId, AgentId> pointers;
  std::vector<TradeCycle> cycles;
};

/// Mechanism output: final assignment plus the per-round trace.
struct Matching {
  std::map<AgentId, GoodId> assignment;
  std::vector<TradeRound> trace;

  GoodId at(AgentId i) const;
  bool contains(AgentId i) const { return assignment.count(i) != 0; }
};

}  // namespace barternet
