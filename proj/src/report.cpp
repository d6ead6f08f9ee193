#include "barternet/report.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace barternet {

RunReport make_run_report(const Scenario& s, const std::string& mechanism,
                          const Matching& m,
                          const std::vector<AgentId>& participants,
                          const std::vector<AgentId>& excluded) {
  RunReport r;
  r.scenario = s.name;
  r.mechanism = mechanism;
  r.agent_count = s.agent_count;
  r.participants = participants;
  r.excluded = excluded;
  r.matching = m;
  for (const auto& [i, g] : m.assignment)
    r.true_rank[i] = s.true_orders.at(i).rank_of(g) + 1;
  return r;
}

namespace {

std::string cycle_body(const TradeCycle& c) { return detail::join_ids(c.agents); }

}  // namespace

std::string to_text(const RunReport& r) {
  std::ostringstream out;
  out << "scenario: " << r.scenario << "\n";
  out << "mechanism: " << r.mechanism << "\n";
  out << "agents: " << r.agent_count << "\n";
  out << "participants: " << detail::join_ids(r.participants) << "\n";
  if (!r.excluded.empty())
    out << "excluded: " << detail::join_ids(r.excluded) << "\n";
  for (std::size_t k = 0; k < r.matching.trace.size(); ++k) {
    out << "round " << k + 1 << ":";
    for (const TradeCycle& c : r.matching.trace[k].cycles)
      out << " (" << cycle_body(c) << ")";
    out << "\n";
  }
  for (const auto& [i, g] : r.matching.assignment) {
    out << "agent " << i << (g == good_of(i) ? " keeps g" : " receives g") << g
        << " (rank " << r.true_rank.at(i) << ")\n";
  }
  return out.str();
}

std::string to_structured(const RunReport& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << "\n";
  out << "mechanism " << r.mechanism << "\n";
  out << "agents " << r.agent_count << "\n";
  out << "participants " << detail::join_ids(r.participants) << "\n";
  if (!r.excluded.empty())
    out << "excluded " << detail::join_ids(r.excluded) << "\n";
  for (std::size_t k = 0; k < r.matching.trace.size(); ++k)
    for (const TradeCycle& c : r.matching.trace[k].cycles)
      out << "round " << k + 1 << " cycle " << cycle_body(c) << "\n";
  for (const auto& [i, g] : r.matching.assignment)
    out << "assign " << i << " g" << g << " rank " << r.true_rank.at(i) << "\n";
  return out.str();
}

std::string generated_graph_dot(const GeneratedGraph& g) {
  std::ostringstream out;
  out << "graph market {\n";
  for (AgentId v : g.vertices()) {
    if (v == kOrganizer) {
      out << "  o [shape=box];\n";
      continue;
    }
    out << "  " << v;
    if (g.participates(v))
      out << " [label=\"" << v << "\\nD={"
          << detail::join_ids(descendants(g, v), ",") << "}\"]";
    out << ";\n";
  }
  for (AgentId v : g.vertices()) {
    for (AgentId u : g.neighbors_of(v)) {
      if (u < v) continue;  // each edge once, smaller endpoint first
      if (v == kOrganizer)
        out << "  o -- " << u << ";\n";
      else
        out << "  " << v << " -- " << u << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string pointer_round_dot(const Matching& m, std::size_t round) {
  if (round < 1 || round > m.trace.size())
    throw std::out_of_range("round " + std::to_string(round) +
                            " out of range; the trace has " +
                            std::to_string(m.trace.size()) + " round(s)");
  const TradeRound& tr = m.trace[round - 1];

  // Agents on cycles that traded this round get bold pointer edges.
  std::set<AgentId> traded;
  for (const TradeCycle& c : tr.cycles)
    traded.insert(c.agents.begin(), c.agents.end());

  std::ostringstream out;
  out << "digraph round_" << round << " {\n";
  for (const auto& [i, j] : tr.pointers) {
    out << "  " << i << " -> " << j;
    if (traded.count(i)) out << " [style=bold]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace barternet
