#include "barternet/verification.hpp"

#include <set>
#include <stdexcept>

namespace barternet {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t factorial_saturating(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f = saturating_mul(f, k);
  return f;
}

std::uint64_t power_of_two_saturating(std::size_t n) {
  return n >= 64 ? UINT64_MAX : (std::uint64_t{1} << n);
}

}  // namespace

// ---------------------------------------------------------------------------
// Pareto optimality

ParetoResult check_pareto_optimal(const std::map<AgentId, GoodId>& matching,
                                  const std::map<AgentId, PreferenceOrder>& orders,
                                  std::size_t guard) {
  const std::size_t n = matching.size();
  if (n > guard)
    throw SizeGuardError("pareto scan over " + std::to_string(n) +
                         " agents exceeds the guard of " + std::to_string(guard));
  ParetoResult res;
  res.optimal = true;
  if (n == 0) return res;

  std::vector<AgentId> agents;
  std::vector<int> base_rank;
  std::vector<GoodId> goods;
  for (const auto& [i, g] : matching) {
    auto oit = orders.find(i);
    if (oit == orders.end())
      throw std::invalid_argument("pareto check: no order for agent " +
                                  std::to_string(i));
    agents.push_back(i);
    base_rank.push_back(oit->second.rank_of(g));  // matched good must be ranked
    goods.push_back(g);
  }
  std::sort(goods.begin(), goods.end());
  if (std::adjacent_find(goods.begin(), goods.end()) != goods.end())
    throw std::invalid_argument("pareto check: matching assigns a good twice");

  std::vector<GoodId> perm = goods;
  do {
    ++res.scanned;
    bool weakly = true, strictly = false;
    for (std::size_t k = 0; k < n; ++k) {
      const PreferenceOrder& ord = orders.at(agents[k]);
      // A good the agent's order does not rank is incomparable for her, so
      // the candidate cannot weakly improve on what she holds.
      if (!ord.ranks(perm[k])) {
        weakly = false;
        break;
      }
      int r = ord.rank_of(perm[k]);
      if (r > base_rank[k]) {
        weakly = false;
        break;
      }
      if (r < base_rank[k]) strictly = true;
    }
    if (weakly && strictly) {
      res.optimal = false;
      std::map<AgentId, GoodId> dom;
      for (std::size_t k = 0; k < n; ++k) dom[agents[k]] = perm[k];
      res.dominator = std::move(dom);
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

std::map<AgentId, PreferenceOrder> market_preferences(const SocialNetwork& net,
                                                      const GeneratedGraph& g,
                                                      AvailableMode mode) {
  std::map<AgentId, PreferenceOrder> prefs;
  for (AgentId i : g.participants())
    prefs.emplace(i, net.type_of(i).preference.restricted_to(
                         available_set(g, i, mode)));
  return prefs;
}

// ---------------------------------------------------------------------------
// Individual rationality

IrReport check_ir(const SocialNetwork& net, const ActionProfile& actions,
                  AgentId i, GraphMechanism mech) {
  const AgentType& t = net.type_of(i);
  ActionProfile profile = actions;
  auto it = profile.find(i);
  Action own = (it != profile.end() && it->second.has_value())
                   ? *it->second
                   : Action{t.preference, t.neighbors};
  own.reported = t.preference;  // rationality is judged against her true order
  profile[i] = std::move(own);

  GeneratedGraph market = build_generated_graph(net, profile);
  if (!market.participates(i))
    throw std::invalid_argument("agent " + std::to_string(i) +
                                " is outside the market; nothing to compare");

  Matching full = run_graph_mechanism(mech, market, profile);
  GeneratedGraph own_market = induced_subgraph(market, i);
  Matching local = run_graph_mechanism(mech, own_market, profile);

  IrReport r;
  r.agent = i;
  r.market_good = full.at(i);
  r.local_good = local.at(i);
  r.holds = t.preference.weakly_prefers(r.market_good, r.local_good);
  return r;
}

// ---------------------------------------------------------------------------
// Incentive compatibility

std::vector<Action> enumerate_deviations(const SocialNetwork& net,
                                         const ActionProfile& others,
                                         AgentId i,
                                         const DeviationBudget& budget) {
  const AgentType& t = net.type_of(i);
  ActionProfile profile = others;
  profile[i] = Action{t.preference, t.neighbors};
  GeneratedGraph ref = build_generated_graph(net, profile);
  if (!ref.participates(i))
    throw std::invalid_argument("agent " + std::to_string(i) +
                                " is outside the market even when fully "
                                "truthful; no deviations to enumerate");

  // Orders permute the goods present in the reference market; goods no report
  // can pull in are appended in a fixed tail to complete the master order.
  std::vector<GoodId> rankable = ref.participants();
  std::vector<GoodId> tail =
      detail::sorted_difference(net.all_goods(), rankable);

  // Invitations toward the root (ancestors, the organizer) and toward agents
  // who decline anyway stay fixed; every other contact may be dropped.
  std::vector<AgentId> anc = ancestors(ref, i);
  std::vector<AgentId> optional, mandatory;
  for (AgentId j : t.neighbors) {
    bool declines = false;
    if (j != kOrganizer) {
      auto oit = others.find(j);
      declines = oit != others.end() && !oit->second.has_value();
    }
    if (j != kOrganizer && !declines && !detail::sorted_contains(anc, j))
      optional.push_back(j);
    else
      mandatory.push_back(j);
  }

  const std::uint64_t subsets = power_of_two_saturating(optional.size());
  const std::uint64_t space =
      saturating_mul(factorial_saturating(rankable.size()), subsets);

  auto make_action = [&](const std::vector<GoodId>& head, std::uint64_t mask) {
    std::vector<GoodId> full = head;
    full.insert(full.end(), tail.begin(), tail.end());
    std::vector<AgentId> invited = mandatory;
    for (std::size_t b = 0; b < optional.size(); ++b)
      if (mask >> b & 1) invited.push_back(optional[b]);
    return Action{PreferenceOrder(std::move(full)),
                  detail::sorted_unique(std::move(invited))};
  };

  std::vector<Action> out;
  if (budget.mode == EnumerationMode::exhaustive ||
      space <= budget.samples) {
    if (budget.mode == EnumerationMode::exhaustive && space > budget.cap)
      throw CapExceededError(
          "agent " + std::to_string(i) + " has " + std::to_string(space) +
          " deviations, above the cap of " + std::to_string(budget.cap) +
          "; use sampled mode");
    std::vector<GoodId> head = rankable;  // sorted = lexicographic start
    do {
      for (std::uint64_t mask = 0; mask < subsets; ++mask)
        out.push_back(make_action(head, mask));
    } while (std::next_permutation(head.begin(), head.end()));
    return out;
  }

  // Sampled: exactly `samples` distinct actions, reproducible from the seed.
  SplitMix64 rng(budget.seed);
  std::set<std::pair<std::vector<GoodId>, std::uint64_t>> seen;
  while (out.size() < budget.samples) {
    std::vector<GoodId> head = rankable;
    rng.shuffle(head);
    std::uint64_t mask = optional.empty() ? 0 : rng.below(subsets);
    if (!seen.insert({head, mask}).second) continue;
    out.push_back(make_action(head, mask));
  }
  return out;
}

DeviationVerdict check_ic(const SocialNetwork& net,
                          const ActionProfile& others, AgentId i,
                          GraphMechanism mech, const DeviationBudget& budget) {
  const PreferenceOrder& true_order = net.type_of(i).preference;
  ActionProfile profile = others;
  profile[i] = Action{true_order, net.type_of(i).neighbors};
  GeneratedGraph ref = build_generated_graph(net, profile);
  if (!ref.participates(i))
    throw std::invalid_argument("agent " + std::to_string(i) +
                                " is outside the market even when fully "
                                "truthful; nothing to check");

  DeviationVerdict v;
  v.agent = i;
  v.truthful_good = run_graph_mechanism(mech, ref, profile).at(i);

  // The generated graph depends on the invited set only, so deviations that
  // differ just in the reported order share one graph.
  std::map<std::vector<AgentId>, GeneratedGraph> by_invited;
  GoodId best = 0;
  for (const Action& a : enumerate_deviations(net, others, i, budget)) {
    ++v.deviations_checked;
    profile[i] = a;
    auto [git, fresh] = by_invited.try_emplace(a.invited);
    if (fresh) git->second = build_generated_graph(net, profile);
    const GeneratedGraph& g = git->second;
    GoodId outcome = g.participates(i)
                         ? run_graph_mechanism(mech, g, profile).at(i)
                         : good_of(i);  // dropped out: keeps her own good
    if (best == 0 || true_order.prefers(outcome, best)) {
      best = outcome;
      if (true_order.prefers(outcome, v.truthful_good))
        v.witness = a;
    }
  }
  v.best_deviation_good = best == 0 ? v.truthful_good : best;
  return v;
}

// ---------------------------------------------------------------------------
// Named demonstrations

LineFailureReport demonstrate_line_failure(const Scenario& line) {
  const SocialNetwork net = line.to_network();
  const ActionProfile truthful = truthful_profile(net);
  LineFailureReport rep;

  GeneratedGraph g = build_generated_graph(net, truthful);
  rep.truthful_good_2 = run_network_ttc(g, truthful).at(2);

  ActionProfile withhold = truthful;
  withhold[2] = Action{net.type_of(2).preference, {1}};  // drops agent 3
  GeneratedGraph g2 = build_generated_graph(net, withhold);
  rep.withhold_good_2 = run_network_ttc(g2, withhold).at(2);
  rep.ic_violated =
      net.type_of(2).preference.prefers(rep.withhold_good_2, rep.truthful_good_2);

  DeviationBudget exhaustive;
  rep.sweep_2 = check_ic(net, truthful, 2, GraphMechanism::network_ttc, exhaustive);
  rep.ir_2 = check_ir(net, truthful, 2, GraphMechanism::network_ttc);

  rep.ttci_ic_clean = true;
  rep.ttci_ir_clean = true;
  for (AgentId i : g.participants()) {
    rep.ttci_ic_clean &=
        check_ic(net, truthful, i, GraphMechanism::ttci, exhaustive)
            .truthful_optimal();
    rep.ttci_ir_clean &= check_ir(net, truthful, i, GraphMechanism::ttci).holds;
  }
  return rep;
}

namespace {

ImpossibilityCase impossibility_case(const SocialNetwork& net,
                                     const ActionProfile& truthful,
                                     AgentId deviator, AgentId withheld,
                                     std::map<AgentId, GoodId> optimal) {
  ImpossibilityCase c;
  c.deviator = deviator;
  c.withheld = withheld;
  c.optimal_allocation = std::move(optimal);
  c.allocation_good = c.optimal_allocation.at(deviator);

  ActionProfile profile = truthful;
  std::vector<AgentId> invited = net.type_of(deviator).neighbors;
  detail::sorted_erase(invited, withheld);
  profile[deviator] = Action{net.type_of(deviator).preference, invited};

  GeneratedGraph g = build_generated_graph(net, profile);
  c.residual_participants = g.participants();
  Matching residual = run_network_ttc(g, profile);
  c.residual_outcome = residual.assignment;
  c.deviation_good = residual.at(deviator);
  c.improves = net.type_of(deviator).preference.prefers(c.deviation_good,
                                                        c.allocation_good);
  return c;
}

}  // namespace

ImpossibilityReport demonstrate_impossibility(const Scenario& instance) {
  const SocialNetwork net = instance.to_network();
  const ActionProfile truthful = truthful_profile(net);
  ImpossibilityReport rep;

  // Scan every assignment of the five goods for Pareto optimality under the
  // true (full) orders.
  std::map<AgentId, PreferenceOrder> orders;
  std::vector<AgentId> agents = net.agent_ids();
  for (AgentId i : agents) orders.emplace(i, net.type_of(i).preference);

  std::vector<GoodId> perm = net.all_goods();
  do {
    std::map<AgentId, GoodId> candidate;
    for (std::size_t k = 0; k < agents.size(); ++k) candidate[agents[k]] = perm[k];
    ++rep.matchings_scanned;
    if (check_pareto_optimal(candidate, orders).optimal)
      rep.pareto_optimal.push_back(std::move(candidate));
  } while (std::next_permutation(perm.begin(), perm.end()));

  rep.case_one = impossibility_case(net, truthful, 1, 3,
                                    {{1, 5}, {2, 1}, {3, 4}, {4, 3}, {5, 2}});
  rep.case_two = impossibility_case(net, truthful, 2, 4,
                                    {{1, 4}, {2, 2}, {3, 3}, {4, 1}, {5, 5}});
  return rep;
}

// ---------------------------------------------------------------------------
// Randomized suites

Scenario suite_instance(const SuiteConfig& cfg, std::size_t index) {
  SplitMix64 pick(SplitMix64::derive(cfg.seed, index));
  int span = cfg.max_agents - cfg.min_agents + 1;
  if (span < 1)
    throw std::invalid_argument("suite config: empty agent range");
  int n = cfg.min_agents + static_cast<int>(pick.below(span));
  Topology topo;
  double p = 0.0;
  switch (index % 4) {
    case 0: topo = Topology::tree; break;
    case 1: topo = Topology::erdos_renyi, p = 0.25; break;
    case 2: topo = Topology::erdos_renyi, p = 0.6; break;
    default: topo = Topology::complete; break;
  }
  return generate_random(n, topo, p, pick.next());
}

namespace {

/// Non-nil random actions for everyone: arbitrary full reported orders and
/// arbitrary invitation subsets.
ActionProfile random_profile(const SocialNetwork& net, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ActionProfile profile;
  for (AgentId i : net.agent_ids()) {
    std::vector<GoodId> order = net.all_goods();
    rng.shuffle(order);
    std::vector<AgentId> invited;
    for (AgentId j : net.type_of(i).neighbors)
      if (rng.below(2)) invited.push_back(j);
    profile[i] = Action{PreferenceOrder(std::move(order)), std::move(invited)};
  }
  return profile;
}

bool truthful_reference_participates(const SocialNetwork& net,
                                     const ActionProfile& others, AgentId i) {
  ActionProfile profile = others;
  profile[i] = Action{net.type_of(i).preference, net.type_of(i).neighbors};
  return build_generated_graph(net, profile).participates(i);
}

std::string describe(const Scenario& s, const std::string& what) {
  return s.name + ": " + what;
}

}  // namespace

SuiteResult run_ir_suite(const SuiteConfig& cfg, GraphMechanism mech) {
  SuiteResult res;
  res.name = "ir";
  res.instances = cfg.instances;
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    Scenario s = suite_instance(cfg, k);
    SocialNetwork net = s.to_network();
    ActionProfile truthful = truthful_profile(net);
    GeneratedGraph g = build_generated_graph(net, truthful);
    for (AgentId i : g.participants()) {
      IrReport r = check_ir(net, truthful, i, mech);
      ++res.checks;
      if (!r.holds)
        res.failures.push_back(describe(
            s, "agent " + std::to_string(i) + " gets g" +
                   std::to_string(r.market_good) + " in the market but g" +
                   std::to_string(r.local_good) + " on her own"));
    }
  }
  return res;
}

SuiteResult run_ic_suite(const SuiteConfig& cfg, GraphMechanism mech,
                         const DeviationBudget& budget, bool randomize_others) {
  SuiteResult res;
  res.name = "ic";
  res.instances = cfg.instances;
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    Scenario s = suite_instance(cfg, k);
    SocialNetwork net = s.to_network();

    std::vector<ActionProfile> environments{truthful_profile(net)};
    if (randomize_others)
      environments.push_back(
          random_profile(net, SplitMix64::derive(cfg.seed ^ 0xa5a5a5a5, k)));

    for (std::size_t e = 0; e < environments.size(); ++e) {
      for (AgentId i : net.agent_ids()) {
        if (!truthful_reference_participates(net, environments[e], i))
          continue;  // she is out of the market no matter what she reports
        DeviationBudget b = budget;
        b.seed = SplitMix64::derive(budget.seed,
                                    (k * 64 + static_cast<std::size_t>(i)) * 2 + e);
        DeviationVerdict v = check_ic(net, environments[e], i, mech, b);
        res.checks += v.deviations_checked;
        if (!v.truthful_optimal())
          res.failures.push_back(describe(
              s, "agent " + std::to_string(i) + " improves g" +
                     std::to_string(v.truthful_good) + " -> g" +
                     std::to_string(v.best_deviation_good) +
                     (e == 0 ? " (truthful others)" : " (random others)")));
      }
    }
  }
  return res;
}

SuiteResult run_po_suite(const SuiteConfig& cfg, GraphMechanism mech) {
  SuiteResult res;
  res.name = "po";
  res.instances = cfg.instances;
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    Scenario s = suite_instance(cfg, k);
    SocialNetwork net = s.to_network();
    ActionProfile truthful = truthful_profile(net);
    GeneratedGraph g = build_generated_graph(net, truthful);
    Matching m = run_graph_mechanism(mech, g, truthful);

    std::map<AgentId, PreferenceOrder> orders;
    if (mech == GraphMechanism::network_ttc) {
      // Full visibility: judge against true orders over the market's goods.
      for (AgentId i : g.participants())
        orders.emplace(i, net.type_of(i).preference.restricted_to(g.participants()));
    } else {
      orders = market_preferences(net, g,
                                  mech == GraphMechanism::starter
                                      ? AvailableMode::starter
                                      : AvailableMode::ttci);
    }
    ParetoResult pr = check_pareto_optimal(m.assignment, orders);
    res.checks += pr.scanned;
    if (!pr.optimal)
      res.failures.push_back(describe(s, "outcome is dominated"));
  }
  return res;
}

SuiteResult run_equivalence_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "equiv";
  res.instances = cfg.instances;
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    SplitMix64 pick(SplitMix64::derive(cfg.seed, k));
    int span = cfg.max_agents - cfg.min_agents + 1;
    int n = cfg.min_agents + static_cast<int>(pick.below(span));
    Scenario s = generate_random(n, Topology::complete, 0.0, pick.next());
    SocialNetwork net = s.to_network();
    ActionProfile truthful = truthful_profile(net);
    GeneratedGraph g = build_generated_graph(net, truthful);

    ++res.checks;
    if (g.participants() != net.agent_ids()) {
      res.failures.push_back(describe(s, "market misses agents"));
      continue;
    }
    for (AgentId i : g.participants())
      if (descendants(g, i) != std::vector<AgentId>{i})
        res.failures.push_back(
            describe(s, "agent " + std::to_string(i) +
                            " has descendants on a complete network"));

    std::map<AgentId, PreferenceOrder> orders;
    for (AgentId i : net.agent_ids()) orders.emplace(i, net.type_of(i).preference);
    Matching via_graph = run_ttci(g, truthful);
    Matching classic = run_ttc(net.agent_ids(), orders);
    if (via_graph.assignment != classic.assignment)
      res.failures.push_back(describe(s, "graph mechanism diverges from classic run"));
  }
  return res;
}

SuiteResult run_structural_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.name = "structure";
  res.instances = cfg.instances;
  for (std::size_t k = 0; k < cfg.instances; ++k) {
    Scenario s = suite_instance(cfg, k);
    SocialNetwork net = s.to_network();
    ActionProfile truthful = truthful_profile(net);
    GeneratedGraph g = build_generated_graph(net, truthful);

    auto fast = descendant_sets_by_articulation(g);
    for (AgentId i : g.participants()) {
      auto oracle = descendants(g, i);
      ++res.checks;
      if (fast.at(i) != oracle)
        res.failures.push_back(describe(
            s, "articulation descendants of " + std::to_string(i) +
                   " differ from the removal oracle"));
      for (AgentId j : oracle) {
        if (j == i) continue;
        auto inner = descendants(g, j);
        if (!std::includes(oracle.begin(), oracle.end(), inner.begin(),
                           inner.end()))
          res.failures.push_back(describe(s, "descendant nesting broken"));
      }
    }
    // Duality: j in D_i exactly when i in A_j.
    for (AgentId i : g.participants()) {
      auto d = descendants(g, i);
      for (AgentId j : g.participants()) {
        bool in_d = detail::sorted_contains(d, j);
        bool in_a = j == i ? in_d : detail::sorted_contains(ancestors(g, j), i);
        ++res.checks;
        if (j != i && in_d != in_a)
          res.failures.push_back(describe(s, "descendant/ancestor duality broken"));
      }
    }
    // Availability: both modes include the own good; the invitation-aware
    // set contains the neighbor-only set.
    for (AgentId i : g.participants()) {
      auto st = available_set(g, i, AvailableMode::starter);
      auto tt = available_set(g, i, AvailableMode::ttci);
      ++res.checks;
      if (!detail::sorted_contains(st, i) || !detail::sorted_contains(tt, i) ||
          !std::includes(tt.begin(), tt.end(), st.begin(), st.end()))
        res.failures.push_back(describe(s, "available sets inconsistent"));
    }
    // Every fifth instance: the matching must not depend on the order in
    // which cycles are resolved.
    if (k % 5 == 0) {
      std::uint64_t seed = SplitMix64::derive(cfg.seed ^ 0x5ee5, k);
      for (GraphMechanism mech :
           {GraphMechanism::ttci, GraphMechanism::starter}) {
        Matching all = run_graph_mechanism(mech, g, truthful);
        Matching one = run_graph_mechanism(mech, g, truthful,
                                           CycleSelection::single_random(seed));
        ++res.checks;
        if (all.assignment != one.assignment)
          res.failures.push_back(
              describe(s, std::string(to_string(mech)) +
                              " depends on cycle-resolution order"));
      }
    }
  }
  return res;
}

}  // namespace barternet
