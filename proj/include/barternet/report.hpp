#pragma once

#include <map>
#include <string>
#include <vector>

#include "barternet/generated_graph.hpp"
#include "barternet/mechanisms.hpp"
#include "barternet/model.hpp"
#include "barternet/scenarios.hpp"

namespace barternet {

/// A mechanism run bundled with everything a reader needs to judge it: the
/// trace, the final assignment, and each participant's 1-based rank of the
/// received good under her *true* master order.
struct RunReport {
  std::string scenario;
  std::string mechanism;
  int agent_count = 0;
  std::vector<AgentId> participants;
  std::vector<AgentId> excluded;  // agents outside the market
  Matching matching;
  std::map<AgentId, int> true_rank;
};

RunReport make_run_report(const Scenario& s, const std::string& mechanism,
                          const Matching& m,
                          const std::vector<AgentId>& participants,
                          const std::vector<AgentId>& excluded);

/// Human-readable summary ("agent 2 keeps g2 (rank 3)").
std::string to_text(const RunReport& r);

/// Stable line-per-fact form for scripting and golden tests.
std::string to_structured(const RunReport& r);

/// Graphviz view of the generated graph; participants carry their descendant
/// sets, the organizer is boxed.
std::string generated_graph_dot(const GeneratedGraph& g);

/// Graphviz view of one trading round's pointer graph (1-based index);
/// edges of cycles that traded in that round are bold. Throws
/// std::out_of_range past the trace.
std::string pointer_round_dot(const Matching& m, std::size_t round);

}  // namespace barternet
