#include "barternet/scenarios.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "barternet/rng.hpp"

namespace barternet {

SocialNetwork Scenario::to_network() const {
  std::map<AgentId, std::vector<AgentId>> contacts;
  for (AgentId i = 1; i <= agent_count; ++i) contacts[i];
  std::vector<AgentId> organizer;
  for (const auto& [u, v] : edges) {
    if (u == kOrganizer)
      organizer.push_back(v);
    else
      contacts[u].push_back(v);
    if (v == kOrganizer)
      organizer.push_back(u);
    else
      contacts[v].push_back(u);
  }
  std::map<AgentId, AgentType> agents;
  for (AgentId i = 1; i <= agent_count; ++i) {
    auto oit = true_orders.find(i);
    if (oit == true_orders.end())
      throw std::invalid_argument("scenario " + name + ": agent " +
                                  std::to_string(i) + " has no true order");
    agents[i] = AgentType{oit->second, detail::sorted_unique(contacts[i])};
  }
  return SocialNetwork(detail::sorted_unique(organizer), std::move(agents));
}

ActionProfile Scenario::to_actions() const {
  ActionProfile profile;
  for (AgentId i = 1; i <= agent_count; ++i) {
    if (nil_overrides.count(i)) {
      profile[i] = std::nullopt;
      continue;
    }
    auto rit = reported_overrides.find(i);
    auto iit = invited_overrides.find(i);
    profile[i] = Action{
        rit != reported_overrides.end() ? rit->second : true_orders.at(i),
        iit != invited_overrides.end() ? iit->second : neighbors_of(i)};
  }
  return profile;
}

std::vector<AgentId> Scenario::neighbors_of(AgentId v) const {
  std::vector<AgentId> nb;
  for (const auto& [a, b] : edges) {
    if (a == v) nb.push_back(b);
    if (b == v) nb.push_back(a);
  }
  return detail::sorted_unique(std::move(nb));
}

bool Scenario::operator==(const Scenario& o) const {
  return name == o.name && agent_count == o.agent_count && edges == o.edges &&
         true_orders == o.true_orders &&
         reported_overrides == o.reported_overrides &&
         invited_overrides == o.invited_overrides &&
         nil_overrides == o.nil_overrides;
}

namespace {

PreferenceOrder order_of(std::initializer_list<GoodId> goods) {
  return PreferenceOrder(std::vector<GoodId>(goods));
}

}  // namespace

Scenario fixture(const std::string& name) {
  Scenario s;
  s.name = name;
  if (name == "fig2_line") {
    s.agent_count = 3;
    s.edges = {{0, 1}, {1, 2}, {2, 3}};
    s.true_orders = {{1, order_of({3, 2, 1})},
                     {2, order_of({1, 3, 2})},
                     {3, order_of({1, 2, 3})}};
  } else if (name == "fig3_table1") {
    s.agent_count = 5;
    s.edges = {{0, 1}, {0, 2}, {0, 5}, {1, 3}, {2, 4}};
    s.true_orders = {{1, order_of({4, 5, 1, 2, 3})},
                     {2, order_of({1, 2, 3, 4, 5})},
                     {3, order_of({4, 3, 1, 2, 5})},
                     {4, order_of({3, 1, 4, 2, 5})},
                     {5, order_of({2, 5, 1, 3, 4})}};
  } else if (name == "fig6_table2") {
    s.agent_count = 7;
    s.edges = {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
               {3, 4}, {3, 5}, {3, 6}, {5, 7}, {6, 7}};
    s.true_orders = {{1, order_of({7, 6, 4, 2, 5, 1, 3})},
                     {2, order_of({3, 1, 2, 4, 5, 6, 7})},
                     {3, order_of({7, 3, 6, 5, 4, 2, 1})},
                     {4, order_of({3, 1, 4, 2, 5, 6, 7})},
                     {5, order_of({3, 7, 5, 1, 2, 4, 6})},
                     {6, order_of({7, 6, 3, 1, 2, 4, 5})},
                     {7, order_of({5, 6, 7, 1, 2, 3, 4})}};
  } else {
    throw std::invalid_argument("unknown fixture \"" + name +
                                "\" (available: fig2_line, fig3_table1, fig6_table2)");
  }
  return s;
}

std::vector<std::string> fixture_names() {
  return {"fig2_line", "fig3_table1", "fig6_table2"};
}

Scenario generate_random(int n, Topology topology, double p,
                         std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_random: need at least one agent");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("generate_random: edge probability must lie in [0, 1]");

  SplitMix64 rng(seed);
  Scenario s;
  s.agent_count = n;

  // Uniform random spanning tree over {organizer, 1..n}: every agent is
  // reachable, so a truthful run never strands anyone.
  std::set<std::pair<AgentId, AgentId>> edges;
  for (AgentId i = 1; i <= n; ++i)
    edges.insert({static_cast<AgentId>(rng.below(static_cast<std::uint64_t>(i))), i});

  if (topology == Topology::erdos_renyi) {
    for (AgentId u = 0; u <= n; ++u)
      for (AgentId v = u + 1; v <= n; ++v)
        if (!edges.count({u, v}) && rng.bernoulli(p)) edges.insert({u, v});
  } else if (topology == Topology::complete) {
    for (AgentId u = 0; u <= n; ++u)
      for (AgentId v = u + 1; v <= n; ++v) edges.insert({u, v});
  }
  s.edges.assign(edges.begin(), edges.end());

  std::vector<GoodId> goods;
  for (GoodId g = 1; g <= n; ++g) goods.push_back(g);
  for (AgentId i = 1; i <= n; ++i) {
    std::vector<GoodId> perm = goods;
    rng.shuffle(perm);
    s.true_orders.emplace(i, PreferenceOrder(std::move(perm)));
  }

  const char* topo = topology == Topology::tree        ? "tree"
                     : topology == Topology::erdos_renyi ? "er"
                                                         : "complete";
  char buf[96];
  if (topology == Topology::erdos_renyi)
    std::snprintf(buf, sizeof buf, "random-%s-p%02d-n%d-s%llu", topo,
                  static_cast<int>(p * 100.0 + 0.5), n,
                  static_cast<unsigned long long>(seed));
  else
    std::snprintf(buf, sizeof buf, "random-%s-n%d-s%llu", topo, n,
                  static_cast<unsigned long long>(seed));
  s.name = buf;
  return s;
}

// ---------------------------------------------------------------------------
// Text format (see docs/scenario_format.md)

namespace {

struct Parser {
  std::string origin;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(origin + ":" + std::to_string(line_no) + ": " + msg);
  }

  int to_int(const std::string& tok, const char* what) const {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(std::string(what) + " \"" + tok + "\" is not a number");
    }
    if (used != tok.size())
      fail(std::string(what) + " \"" + tok + "\" is not a number");
    return value;
  }

  int agent_id(const std::string& tok, int n, bool allow_organizer) const {
    int id = to_int(tok, "agent id");
    int lo = allow_organizer ? 0 : 1;
    if (id < lo || id > n)
      fail("agent id " + tok + " out of range (" + std::to_string(lo) + ".." +
           std::to_string(n) + ")");
    return id;
  }
};

}  // namespace

Scenario parse_scenario(std::string_view text, std::string_view origin) {
  Scenario s;
  Parser ctx{std::string(origin)};
  bool have_name = false, have_agents = false;
  std::set<std::pair<AgentId, AgentId>> seen_edges;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++ctx.line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;

    const std::string& kind = tok[0];
    if (kind == "scenario") {
      if (have_name) ctx.fail("duplicate scenario line");
      if (tok.size() != 2) ctx.fail("expected: scenario <name>");
      s.name = tok[1];
      have_name = true;
      continue;
    }
    if (kind == "agents") {
      if (have_agents) ctx.fail("duplicate agents line");
      if (tok.size() != 2) ctx.fail("expected: agents <n>");
      s.agent_count = ctx.to_int(tok[1], "agent count");
      if (s.agent_count < 1) ctx.fail("agent count must be positive");
      have_agents = true;
      continue;
    }
    if (!have_agents)
      ctx.fail("\"" + kind + "\" before the agents line");

    const int n = s.agent_count;
    if (kind == "edge") {
      if (tok.size() != 3) ctx.fail("expected: edge <u> <v>");
      AgentId u = ctx.agent_id(tok[1], n, true);
      AgentId v = ctx.agent_id(tok[2], n, true);
      if (u == v) ctx.fail("self-contact edge " + tok[1] + " " + tok[2]);
      if (u > v) std::swap(u, v);
      if (!seen_edges.insert({u, v}).second)
        ctx.fail("edge " + std::to_string(u) + " " + std::to_string(v) +
                 " listed twice (each contact pair appears once)");
      s.edges.emplace_back(u, v);
      continue;
    }
    if (kind == "order" || kind == "report") {
      if (tok.size() < 2) ctx.fail("expected: " + kind + " <agent> <goods...>");
      AgentId i = ctx.agent_id(tok[1], n, false);
      std::vector<GoodId> goods;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        int g = ctx.to_int(tok[k], "good id");
        if (g < 1 || g > n)
          ctx.fail("good id " + tok[k] + " out of range (1.." + std::to_string(n) + ")");
        goods.push_back(g);
      }
      if (goods.size() != static_cast<std::size_t>(n))
        ctx.fail(kind + " for agent " + std::to_string(i) + " ranks " +
                 std::to_string(goods.size()) + " goods, expected all " +
                 std::to_string(n));
      PreferenceOrder order;
      try {
        order = PreferenceOrder(std::move(goods));
      } catch (const std::invalid_argument& e) {
        ctx.fail(e.what());
      }
      auto& dest = kind == "order" ? s.true_orders : s.reported_overrides;
      if (!dest.emplace(i, std::move(order)).second)
        ctx.fail("duplicate " + kind + " for agent " + std::to_string(i));
      continue;
    }
    if (kind == "invite") {
      if (tok.size() < 2) ctx.fail("expected: invite <agent> [contacts...]");
      AgentId i = ctx.agent_id(tok[1], n, false);
      std::vector<AgentId> invited;
      for (std::size_t k = 2; k < tok.size(); ++k) {
        AgentId j = ctx.agent_id(tok[k], n, true);
        if (j == i) ctx.fail("agent " + std::to_string(i) + " invites herself");
        invited.push_back(j);
      }
      auto unique = detail::sorted_unique(invited);
      if (unique.size() != invited.size())
        ctx.fail("duplicate invitee in invite line for agent " + std::to_string(i));
      if (!s.invited_overrides.emplace(i, std::move(unique)).second)
        ctx.fail("duplicate invite line for agent " + std::to_string(i));
      continue;
    }
    if (kind == "nil") {
      if (tok.size() != 2) ctx.fail("expected: nil <agent>");
      AgentId i = ctx.agent_id(tok[1], n, false);
      if (!s.nil_overrides.insert(i).second)
        ctx.fail("duplicate nil line for agent " + std::to_string(i));
      continue;
    }
    ctx.fail("unknown directive \"" + kind + "\"");
  }

  auto fail_at_end = [&](const std::string& msg) {
    throw ParseError(std::string(origin) + ": " + msg);
  };
  if (!have_name) fail_at_end("missing scenario line");
  if (!have_agents) fail_at_end("missing agents line");
  for (AgentId i = 1; i <= s.agent_count; ++i)
    if (!s.true_orders.count(i))
      fail_at_end("agent " + std::to_string(i) + " has no order line");
  for (const auto& [i, invited] : s.invited_overrides) {
    auto nb = s.neighbors_of(i);
    for (AgentId j : invited)
      if (!detail::sorted_contains(nb, j))
        fail_at_end("agent " + std::to_string(i) + " invites " +
                    std::to_string(j) + ", who is not a contact");
  }
  for (AgentId i : s.nil_overrides) {
    if (s.reported_overrides.count(i) || s.invited_overrides.count(i))
      fail_at_end("agent " + std::to_string(i) +
                  " is nil but also has report/invite overrides");
  }
  return s;
}

std::string serialize_scenario(const Scenario& s) {
  if (s.name.empty() ||
      s.name.find_first_of(" \t\r\n#") != std::string::npos)
    throw std::invalid_argument("scenario name must be a single word");
  std::ostringstream out;
  out << "scenario " << s.name << "\n";
  out << "agents " << s.agent_count << "\n";
  auto edges = s.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << "edge " << u << " " << v << "\n";
  for (const auto& [i, order] : s.true_orders)
    out << "order " << i << " " << detail::join_ids(order.goods()) << "\n";
  for (const auto& [i, order] : s.reported_overrides)
    out << "report " << i << " " << detail::join_ids(order.goods()) << "\n";
  for (const auto& [i, invited] : s.invited_overrides) {
    out << "invite " << i;
    for (AgentId j : invited) out << " " << j;
    out << "\n";
  }
  for (AgentId i : s.nil_overrides) out << "nil " << i << "\n";
  return out.str();
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.string());
}

void save_scenario(const Scenario& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << serialize_scenario(s);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace barternet
