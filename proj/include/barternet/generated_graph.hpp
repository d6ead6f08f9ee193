#pragma once

#include <map>
#include <vector>

#include "barternet/model.hpp"
#include "barternet/types.hpp"

namespace barternet {

/// The market graph generated by an action profile.
///
/// Vertices are the invitation closure: the root plus every non-nil agent
/// reached by a chain of invitations. Edges require mutual listing (i and j
/// each name the other; an organizer edge needs the organizer to have
/// contacted i and i to list the organizer back). The *market* is the
/// connected component of the root: only those agents trade, and structural
/// queries (descendants, ancestors, available sets) are defined for them.
///
/// For a full market the root is the organizer; for the submarket an agent
/// could run herself (see induced_subgraph) the root is that agent, who then
/// participates and owns a good like everyone else.
class GeneratedGraph {
 public:
  AgentId root() const { return root_; }

  /// All vertices of the generated graph, sorted, root included.
  const std::vector<AgentId>& vertices() const { return vertices_; }

  /// Agents in the root's component (sorted). Excludes the organizer;
  /// includes the root when the root is an agent.
  const std::vector<AgentId>& participants() const { return participants_; }

  bool participates(AgentId i) const {
    return detail::sorted_contains(participants_, i);
  }

  /// Scenario agents that are not in the market at all (never reached,
  /// declined, or reached without any mutual link back). Sorted.
  const std::vector<AgentId>& excluded_agents() const { return excluded_; }

  /// Sorted adjacency of a vertex (may contain the organizer).
  const std::vector<AgentId>& neighbors_of(AgentId v) const;

  /// Adjacent market participants (adjacency with the organizer dropped).
  std::vector<AgentId> market_neighbors_of(AgentId i) const;

  std::size_t edge_count() const;

 private:
  friend GeneratedGraph build_generated_graph(const SocialNetwork&,
                                              const ActionProfile&,
                                              const std::vector<AgentId>&);
  friend GeneratedGraph induced_subgraph(const GeneratedGraph&, AgentId);
  friend std::vector<AgentId> descendants(const GeneratedGraph&, AgentId);
  friend std::vector<AgentId> ancestors(const GeneratedGraph&, AgentId);

  void compute_structure();  // fills desc_/anc_ by the removal oracle

  AgentId root_ = kOrganizer;
  std::vector<AgentId> vertices_;
  std::vector<AgentId> participants_;
  std::vector<AgentId> excluded_;
  std::map<AgentId, std::vector<AgentId>> adj_;
  std::map<AgentId, std::vector<AgentId>> desc_;
  std::map<AgentId, std::vector<AgentId>> anc_;
};

/// Builds the generated graph for a complete action profile. `invites`
/// restricts which of the organizer's contacts are invited (defaults to all).
/// The profile must have an entry for every agent (actions validated
/// beforehand; see validate_instance).
GeneratedGraph build_generated_graph(
    const SocialNetwork& net, const ActionProfile& actions,
    const std::vector<AgentId>& invites = {});

/// Descendants of participant i: i plus every participant unreachable from
/// the root once i is removed (i.e. everyone whose invitation chain must pass
/// through i). Throws for non-participants.
std::vector<AgentId> descendants(const GeneratedGraph& g, AgentId i);

/// Ancestors of participant i: the participants j != i with i in
/// descendants(j) (the cut vertices separating i from the root).
std::vector<AgentId> ancestors(const GeneratedGraph& g, AgentId i);

/// The market agent i could organize herself: vertex set descendants(g, i)
/// rooted at i, with the edges among them.
GeneratedGraph induced_subgraph(const GeneratedGraph& g, AgentId i);

enum class AvailableMode {
  starter,  // own good plus the goods of direct market neighbors
  ttci,     // goods of descendants and direct market neighbors
};

/// The set of goods mode-visible to participant i, sorted.
std::vector<GoodId> available_set(const GeneratedGraph& g, AgentId i,
                                  AvailableMode mode);

/// Descendant sets for every participant via one DFS (articulation points /
/// lowlink): j is in D_i iff i = j or i is a cut vertex whose removal
/// separates j from the root. Independent of the removal-and-reachability
/// oracle inside GeneratedGraph; used to cross-check it.
std::map<AgentId, std::vector<AgentId>> descendant_sets_by_articulation(
    const GeneratedGraph& g);

}  // namespace barternet
