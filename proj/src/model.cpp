#include "barternet/model.hpp"

#include <stdexcept>

namespace barternet {

SocialNetwork::SocialNetwork(std::vector<AgentId> organizer_contacts,
                             std::map<AgentId, AgentType> agents)
    : organizer_contacts_(detail::sorted_unique(std::move(organizer_contacts))),
      agents_(std::move(agents)) {
  const int n = static_cast<int>(agents_.size());
  AgentId expected = 1;
  for (const auto& [id, type] : agents_) {
    if (id != expected)
      throw std::invalid_argument("social network: agent ids must be exactly 1.." +
                                  std::to_string(n) + ", got " + std::to_string(id));
    ++expected;
    for (AgentId j : type.neighbors) {
      if (j == id)
        throw std::invalid_argument("social network: agent " + std::to_string(id) +
                                    " lists herself as a contact");
      if (j < 0 || j > n)
        throw std::invalid_argument("social network: agent " + std::to_string(id) +
                                    " lists unknown contact " + std::to_string(j));
    }
  }
  for (AgentId j : organizer_contacts_) {
    if (j < 1 || j > n)
      throw std::invalid_argument("social network: organizer lists unknown contact " +
                                  std::to_string(j));
  }
}

const AgentType& SocialNetwork::type_of(AgentId i) const {
  auto it = agents_.find(i);
  if (it == agents_.end())
    throw std::invalid_argument("social network: unknown agent " + std::to_string(i));
  return it->second;
}

std::vector<AgentId> SocialNetwork::agent_ids() const {
  std::vector<AgentId> ids;
  ids.reserve(agents_.size());
  for (const auto& [id, _] : agents_) ids.push_back(id);
  return ids;
}

std::vector<GoodId> SocialNetwork::all_goods() const { return agent_ids(); }

ActionProfile truthful_profile(const SocialNetwork& net) {
  ActionProfile profile;
  for (AgentId i : net.agent_ids()) {
    const AgentType& t = net.type_of(i);
    profile[i] = Action{t.preference, t.neighbors};
  }
  return profile;
}

namespace {

bool lists(const std::vector<AgentId>& contacts, AgentId j) {
  return detail::sorted_contains(contacts, j);
}

}  // namespace

std::vector<std::string> validate_instance(const SocialNetwork& net,
                                           const ActionProfile& actions) {
  std::vector<std::string> problems;
  const int n = net.agent_count();
  const auto goods = net.all_goods();

  // Neighbor symmetry, organizer included.
  for (AgentId i = 1; i <= n; ++i) {
    const AgentType& t = net.type_of(i);
    for (AgentId j : t.neighbors) {
      const auto& back =
          j == kOrganizer ? net.organizer_contacts() : net.type_of(j).neighbors;
      if (!lists(back, i))
        problems.push_back("agents " + std::to_string(i) + " and " +
                           std::to_string(j) + " have asymmetric contact lists (" +
                           std::to_string(i) + " lists " + std::to_string(j) +
                           ", not vice versa)");
    }
  }
  for (AgentId j : net.organizer_contacts()) {
    if (!lists(net.type_of(j).neighbors, kOrganizer))
      problems.push_back("agents 0 and " + std::to_string(j) +
                         " have asymmetric contact lists (organizer lists " +
                         std::to_string(j) + ", not vice versa)");
  }

  auto check_order = [&](AgentId i, const PreferenceOrder& order,
                         const char* what) {
    if (order.size() != goods.size()) {
      problems.push_back("agent " + std::to_string(i) + ": " + what + " ranks " +
                         std::to_string(order.size()) + " goods, expected " +
                         std::to_string(goods.size()));
      return;
    }
    for (GoodId g : goods)
      if (!order.ranks(g)) {
        problems.push_back("agent " + std::to_string(i) + ": " + what +
                           " does not rank good g" + std::to_string(g));
        return;
      }
  };

  for (AgentId i = 1; i <= n; ++i)
    check_order(i, net.type_of(i).preference, "true order");

  for (AgentId i = 1; i <= n; ++i) {
    auto it = actions.find(i);
    if (it == actions.end()) {
      problems.push_back("agent " + std::to_string(i) +
                         ": no action in the profile");
      continue;
    }
    if (!it->second.has_value()) continue;  // nil
    const Action& a = *it->second;
    check_order(i, a.reported, "reported order");
    for (AgentId j : a.invited)
      if (!lists(net.type_of(i).neighbors, j))
        problems.push_back("agent " + std::to_string(i) + ": invites " +
                           std::to_string(j) + ", who is not a contact");
  }
  for (const auto& [i, _] : actions)
    if (i < 1 || i > n)
      problems.push_back("action profile names unknown agent " + std::to_string(i));

  return problems;
}

GoodId Matching::at(AgentId i) const {
  auto it = assignment.find(i);
  if (it == assignment.end())
    throw std::invalid_argument("matching: agent " + std::to_string(i) +
                                " was not matched");
  return it->second;
}

}  // namespace barternet
