#include "barternet/generated_graph.hpp"

#include <deque>
#include <stdexcept>

namespace barternet {

namespace {

const AgentAction& action_of(const ActionProfile& actions, AgentId i) {
  auto it = actions.find(i);
  if (it == actions.end())
    throw std::invalid_argument("action profile has no entry for agent " +
                                std::to_string(i));
  return it->second;
}

}  // namespace

const std::vector<AgentId>& GeneratedGraph::neighbors_of(AgentId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end())
    throw std::invalid_argument("generated graph: " + std::to_string(v) +
                                " is not a vertex");
  return it->second;
}

std::vector<AgentId> GeneratedGraph::market_neighbors_of(AgentId i) const {
  if (!participates(i))
    throw std::invalid_argument("generated graph: agent " + std::to_string(i) +
                                " is not in the market");
  return detail::sorted_intersection(neighbors_of(i), participants_);
}

std::size_t GeneratedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, nb] : adj_) twice += nb.size();
  return twice / 2;
}

void GeneratedGraph::compute_structure() {
  // Removal-and-reachability oracle: j descends from i when deleting i cuts
  // every invitation chain from the root to j.
  for (AgentId p : participants_) {
    std::map<AgentId, char> reached;
    if (p != root_) {
      std::deque<AgentId> queue{root_};
      reached[root_] = 1;
      while (!queue.empty()) {
        AgentId v = queue.front();
        queue.pop_front();
        for (AgentId u : adj_.at(v)) {
          if (u == p || reached.count(u)) continue;
          reached[u] = 1;
          queue.push_back(u);
        }
      }
    }
    std::vector<AgentId> d{p};
    for (AgentId j : participants_)
      if (j != p && !reached.count(j)) d.push_back(j);
    desc_[p] = detail::sorted_unique(std::move(d));
  }
  for (AgentId i : participants_) anc_[i] = {};
  for (AgentId j : participants_)
    for (AgentId i : desc_.at(j))
      if (i != j) anc_[i].push_back(j);  // j's descendants have j as ancestor
  for (auto& [i, a] : anc_) a = detail::sorted_unique(std::move(a));
}

GeneratedGraph build_generated_graph(const SocialNetwork& net,
                                     const ActionProfile& actions,
                                     const std::vector<AgentId>& invites) {
  const int n = net.agent_count();
  std::vector<AgentId> organizer_invites =
      invites.empty() ? net.organizer_contacts() : detail::sorted_unique(invites);
  for (AgentId j : organizer_invites)
    if (!detail::sorted_contains(net.organizer_contacts(), j))
      throw std::invalid_argument("organizer cannot invite " + std::to_string(j) +
                                  ", who is not a contact");

  // Invitation closure: an agent joins when a member reaches her and she does
  // not decline; members relay their own invitations.
  std::vector<char> informed(n + 1, 0), member(n + 1, 0);
  std::deque<AgentId> queue;
  auto reach = [&](AgentId j) {
    if (j >= 1 && j <= n && !informed[j]) {
      informed[j] = 1;
      queue.push_back(j);
    }
  };
  for (AgentId j : organizer_invites) reach(j);
  while (!queue.empty()) {
    AgentId j = queue.front();
    queue.pop_front();
    const AgentAction& a = action_of(actions, j);
    if (!a.has_value()) continue;  // nil: no vertex, relays nothing
    member[j] = 1;
    for (AgentId k : a->invited)
      if (k != kOrganizer) reach(k);
  }

  GeneratedGraph g;
  g.root_ = kOrganizer;
  g.vertices_.push_back(kOrganizer);
  for (AgentId i = 1; i <= n; ++i)
    if (member[i]) g.vertices_.push_back(i);
  for (AgentId v : g.vertices_) g.adj_[v];

  // Edges need mutual listing; the organizer's side is her invite list.
  for (AgentId i = 1; i <= n; ++i) {
    if (!member[i]) continue;
    const Action& ai = *action_of(actions, i);
    for (AgentId j : ai.invited) {
      bool linked = false;
      if (j == kOrganizer) {
        linked = detail::sorted_contains(organizer_invites, i);
      } else if (j > i && j <= n && member[j]) {
        linked = detail::sorted_contains(action_of(actions, j)->invited, i);
      }
      if (linked) {
        detail::sorted_insert(g.adj_[i], j);
        detail::sorted_insert(g.adj_[j], i);
      }
    }
  }

  // The market is the root's component; informed agents without a mutual
  // link back to it own their goods but cannot trade.
  std::map<AgentId, char> comp;
  std::deque<AgentId> bfs{kOrganizer};
  comp[kOrganizer] = 1;
  while (!bfs.empty()) {
    AgentId v = bfs.front();
    bfs.pop_front();
    for (AgentId u : g.adj_.at(v))
      if (!comp.count(u)) {
        comp[u] = 1;
        bfs.push_back(u);
      }
  }
  for (AgentId v : g.vertices_)
    if (v != kOrganizer && comp.count(v)) g.participants_.push_back(v);
  for (AgentId i = 1; i <= n; ++i)
    if (!detail::sorted_contains(g.participants_, i)) g.excluded_.push_back(i);

  g.compute_structure();
  return g;
}

std::vector<AgentId> descendants(const GeneratedGraph& g, AgentId i) {
  auto it = g.desc_.find(i);
  if (it == g.desc_.end())
    throw std::invalid_argument("descendants: agent " + std::to_string(i) +
                                " is not in the market");
  return it->second;
}

std::vector<AgentId> ancestors(const GeneratedGraph& g, AgentId i) {
  auto it = g.anc_.find(i);
  if (it == g.anc_.end())
    throw std::invalid_argument("ancestors: agent " + std::to_string(i) +
                                " is not in the market");
  return it->second;
}

GeneratedGraph induced_subgraph(const GeneratedGraph& g, AgentId i) {
  std::vector<AgentId> d = descendants(g, i);  // throws for non-participants

  GeneratedGraph s;
  s.root_ = i;
  s.vertices_ = d;
  s.participants_ = d;
  s.excluded_ = detail::sorted_union(
      g.excluded_, detail::sorted_difference(g.participants_, d));
  for (AgentId v : d)
    s.adj_[v] = detail::sorted_intersection(g.adj_.at(v), d);
  s.compute_structure();
  return s;
}

std::vector<GoodId> available_set(const GeneratedGraph& g, AgentId i,
                                  AvailableMode mode) {
  std::vector<AgentId> owners = g.market_neighbors_of(i);  // throws if outside
  if (mode == AvailableMode::starter) {
    detail::sorted_insert(owners, i);
  } else {
    owners = detail::sorted_union(owners, descendants(g, i));
  }
  return owners;  // agent ids coincide with their goods' ids
}

std::map<AgentId, std::vector<AgentId>> descendant_sets_by_articulation(
    const GeneratedGraph& g) {
  std::map<AgentId, std::vector<AgentId>> result;
  if (g.participants().empty()) return result;

  // One DFS from the root; entry times are dense, so tin doubles as an index
  // into the entry-ordered vertex list and subtrees are tin ranges.
  std::map<AgentId, int> tin, low, tout;
  std::map<AgentId, AgentId> parent;
  std::vector<AgentId> by_tin;
  int timer = 0;

  struct Frame {
    AgentId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  const AgentId root = g.root();
  tin[root] = low[root] = timer++;
  by_tin.push_back(root);
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors_of(f.v);
    if (f.next < nb.size()) {
      AgentId u = nb[f.next++];
      auto pit = parent.find(f.v);
      if (pit != parent.end() && pit->second == u) continue;
      auto tit = tin.find(u);
      if (tit != tin.end()) {
        low[f.v] = std::min(low[f.v], tit->second);
      } else {
        parent[u] = f.v;
        tin[u] = low[u] = timer++;
        by_tin.push_back(u);
        stack.push_back({u, 0});
      }
    } else {
      tout[f.v] = timer;
      stack.pop_back();
      auto pit = parent.find(f.v);
      if (pit != parent.end())
        low[pit->second] = std::min(low[pit->second], low[f.v]);
    }
  }

  std::map<AgentId, std::vector<AgentId>> children;
  for (const auto& [c, p] : parent) children[p].push_back(c);

  for (AgentId v : g.participants()) {
    if (v == root) {
      result[v] = g.participants();  // removing the root strands everyone
      continue;
    }
    std::vector<AgentId> d{v};
    auto cit = children.find(v);
    if (cit != children.end()) {
      for (AgentId c : cit->second) {
        if (low.at(c) < tin.at(v)) continue;  // child escapes around v
        for (int t = tin.at(c); t < tout.at(c); ++t) d.push_back(by_tin[t]);
      }
    }
    result[v] = detail::sorted_unique(std::move(d));
  }
  return result;
}

}  // namespace barternet
