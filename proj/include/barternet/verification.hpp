#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barternet/generated_graph.hpp"
#include "barternet/mechanisms.hpp"
#include "barternet/model.hpp"
#include "barternet/scenarios.hpp"
#include "barternet/types.hpp"

namespace barternet {

// ---------------------------------------------------------------------------
// Pareto optimality

inline constexpr std::size_t kParetoGuard = 8;

struct ParetoResult {
  bool optimal = false;
  // A dominating reassignment of the same goods, if one exists.
  std::optional<std::map<AgentId, GoodId>> dominator;
  std::uint64_t scanned = 0;  // permutations examined
};

/// Exhaustively scans every permutation of the matched goods for a candidate
/// that every agent weakly prefers and some agent strictly prefers. An agent
/// weakly prefers a candidate good only if her supplied order ranks it; goods
/// outside the order are incomparable and cannot dominate. Pass orders
/// restricted to each agent's visible set to test optimality relative to
/// what agents can actually compare. Throws SizeGuardError above `guard`
/// agents.
ParetoResult check_pareto_optimal(const std::map<AgentId, GoodId>& matching,
                                  const std::map<AgentId, PreferenceOrder>& orders,
                                  std::size_t guard = kParetoGuard);

/// True orders restricted to each participant's available set under `mode` —
/// the preference relation against which the graph mechanisms' outcomes are
/// judged.
std::map<AgentId, PreferenceOrder> market_preferences(
    const SocialNetwork& net, const GeneratedGraph& g, AvailableMode mode);

// ---------------------------------------------------------------------------
// Individual rationality

struct IrReport {
  AgentId agent = 0;
  GoodId market_good = 0;  // outcome when she joins the full market
  GoodId local_good = 0;   // outcome when she organizes her own submarket
  bool holds = false;      // market_good weakly above local_good in her true order
};

/// Compares agent i's outcome in the full market against the submarket she
/// could run herself (induced_subgraph over her descendants), holding the
/// rest of the profile fixed and forcing i's reported order truthful. i must
/// participate under the given profile.
IrReport check_ir(const SocialNetwork& net, const ActionProfile& actions,
                  AgentId i, GraphMechanism mech);

// ---------------------------------------------------------------------------
// Incentive compatibility

enum class EnumerationMode { exhaustive, sampled };

inline constexpr std::uint64_t kDefaultDeviationCap = 100000;

struct DeviationBudget {
  EnumerationMode mode = EnumerationMode::exhaustive;
  std::uint64_t cap = kDefaultDeviationCap;  // exhaustive-mode ceiling
  std::size_t samples = 0;                   // sampled-mode draw count
  std::uint64_t seed = 0;
};

/// The misreport space of agent i against the fixed rest-profile `others`:
/// every permutation of the goods present in the reference market (the one
/// generated when i reports truthfully and invites everyone), completed to a
/// master order, crossed with every invitation subset over i's optional
/// contacts. Contacts that keep i connected upward (her ancestors and the
/// organizer) are always invited; dropping a contact that is not an ancestor
/// can remove whole branches of the market, and those deviations are
/// included. Exhaustive mode throws CapExceededError if the space exceeds
/// budget.cap; sampled mode returns exactly min(samples, space) distinct
/// actions, reproducible from budget.seed.
std::vector<Action> enumerate_deviations(const SocialNetwork& net,
                                         const ActionProfile& others,
                                         AgentId i,
                                         const DeviationBudget& budget);

struct DeviationVerdict {
  AgentId agent = 0;
  GoodId truthful_good = 0;
  GoodId best_deviation_good = 0;
  std::optional<Action> witness;  // set iff some deviation strictly improves
  std::uint64_t deviations_checked = 0;

  bool truthful_optimal() const { return !witness.has_value(); }
};

/// Runs `mech` once with i truthful and once per enumerated deviation
/// (deviations that drop i out of the market leave her with her own good),
/// comparing outcomes under i's true master order. A witness deviation, if
/// any, certifies an incentive violation.
DeviationVerdict check_ic(const SocialNetwork& net,
                          const ActionProfile& others, AgentId i,
                          GraphMechanism mech, const DeviationBudget& budget);

// ---------------------------------------------------------------------------
// Named demonstrations

/// The naive mechanism's double failure on the 3-agent line, contrasted with
/// the invitation-aware mechanism on the same instance.
struct LineFailureReport {
  GoodId truthful_good_2 = 0;   // what agent 2 gets for inviting everyone
  GoodId withhold_good_2 = 0;   // what she gets after dropping agent 3
  bool ic_violated = false;     // withhold_good_2 strictly better
  DeviationVerdict sweep_2;     // exhaustive deviation sweep for agent 2
  IrReport ir_2;                // market outcome vs her own 2-3 submarket
  bool ttci_ic_clean = false;   // no agent gains by deviating under ttci
  bool ttci_ir_clean = false;   // ttci outcome beats every submarket
};

LineFailureReport demonstrate_line_failure(const Scenario& line);

/// No mechanism can be efficient and invitation-proof at once: on the
/// 5-agent instance, every Pareto-optimal allocation either pays agent 1 too
/// little (she gains by not inviting 3) or pays agent 2 too little (she gains
/// by not inviting 4). Exhibits both deviations against the two canonical
/// optimal allocations.
struct ImpossibilityCase {
  AgentId deviator = 0;
  AgentId withheld = 0;
  std::map<AgentId, GoodId> optimal_allocation;   // the allocation deviated against
  std::vector<AgentId> residual_participants;     // market after withholding
  std::map<AgentId, GoodId> residual_outcome;     // full-visibility TTC there
  GoodId allocation_good = 0;  // deviator's good under the optimal allocation
  GoodId deviation_good = 0;   // deviator's good after withholding
  bool improves = false;       // deviation_good strictly better (true order)
};

struct ImpossibilityReport {
  std::uint64_t matchings_scanned = 0;  // 5! = 120
  std::vector<std::map<AgentId, GoodId>> pareto_optimal;  // lexicographic
  ImpossibilityCase case_one;  // agent 1 withholds 3
  ImpossibilityCase case_two;  // agent 2 withholds 4
};

ImpossibilityReport demonstrate_impossibility(const Scenario& instance);

// ---------------------------------------------------------------------------
// Randomized suites

struct SuiteConfig {
  std::size_t instances = 0;
  int min_agents = 1;
  int max_agents = 8;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Mixed-topology instance stream shared by the suites: index k of a config
/// yields a deterministic scenario (topology cycles through tree, sparse and
/// dense erdos_renyi, complete; n uniform in [min_agents, max_agents]).
Scenario suite_instance(const SuiteConfig& cfg, std::size_t index);

/// Every participant of every instance: market outcome vs own-submarket
/// outcome under `mech`.
SuiteResult run_ir_suite(const SuiteConfig& cfg, GraphMechanism mech);

/// Every agent of every instance: deviation sweep per `budget` under `mech`,
/// against the truthful rest-profile and, when `randomize_others`, a seeded
/// random rest-profile as well.
SuiteResult run_ic_suite(const SuiteConfig& cfg, GraphMechanism mech,
                         const DeviationBudget& budget, bool randomize_others);

/// Exhaustive Pareto scan of the mechanism's outcome on every instance,
/// relative to available-set-restricted true orders.
SuiteResult run_po_suite(const SuiteConfig& cfg, GraphMechanism mech);

/// On complete contact networks the invitation-aware mechanism must coincide
/// with classic TTC exactly (assignments and descendant sets collapse).
SuiteResult run_equivalence_suite(const SuiteConfig& cfg);

/// Structural oracles: articulation-point descendant sets equal the
/// removal-and-reachability oracle; descendant nesting and ancestor duality
/// hold; matchings are invariant under randomized cycle-processing order.
SuiteResult run_structural_suite(const SuiteConfig& cfg);

}  // namespace barternet
