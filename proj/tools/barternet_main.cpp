// barternet — trade cycles over invitation-built barter markets.
//
// Subcommands:
//   run     run a mechanism on a scenario and print the outcome
//   verify  check incentive / rationality / efficiency properties
//   export  Graphviz views of the market graph or a trading round
//   gen     write a seeded random scenario
//
// Exit codes: 0 success (or an expected violation found), 1 a property
// violation (or, with --expect-violation, none), 2 usage or input errors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "barternet/report.hpp"
#include "barternet/verification.hpp"

namespace bn = barternet;

namespace {

bn::Scenario resolve_scenario(const std::string& ref) {
  for (const std::string& f : bn::fixture_names())
    if (ref == f) return bn::fixture(ref);
  return bn::load_scenario(ref);
}

bn::GraphMechanism mechanism_from(const std::string& name) {
  if (name == "naive-ttc") return bn::GraphMechanism::network_ttc;
  if (name == "starter") return bn::GraphMechanism::starter;
  if (name == "ttci") return bn::GraphMechanism::ttci;
  throw CLI::ValidationError("--mechanism", "unknown mechanism: " + name);
}

bn::Topology topology_from(const std::string& name) {
  if (name == "tree") return bn::Topology::tree;
  if (name == "er") return bn::Topology::erdos_renyi;
  if (name == "complete") return bn::Topology::complete;
  throw CLI::ValidationError("--topology", "unknown topology: " + name);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
  out << text;
}

struct RunArgs {
  std::string scenario;
  std::string mechanism = "ttci";
  std::string format = "text";
  std::string output;
};

int cmd_run(const RunArgs& a) {
  bn::Scenario s = resolve_scenario(a.scenario);
  bn::SocialNetwork net = s.to_network();
  bn::ActionProfile actions = s.to_actions();

  auto problems = bn::validate_instance(net, actions);
  if (!problems.empty()) throw std::invalid_argument(problems.front());

  bn::Matching m;
  std::vector<bn::AgentId> participants, excluded;
  bn::GeneratedGraph g = bn::build_generated_graph(net, actions);
  if (a.mechanism == "ttc") {
    // Full visibility: the classic mechanism over every agent, no network.
    std::map<bn::AgentId, bn::PreferenceOrder> orders;
    for (bn::AgentId i : net.agent_ids()) {
      const auto& action = actions.at(i);
      orders.emplace(i, action ? action->reported : net.type_of(i).preference);
    }
    m = bn::run_ttc(net.agent_ids(), orders);
    participants = net.agent_ids();
  } else {
    bn::GraphMechanism mech = mechanism_from(a.mechanism);
    m = bn::run_graph_mechanism(mech, g, actions);
    participants = g.participants();
    excluded = g.excluded_agents();
  }

  if (a.format == "dot") {
    emit(bn::generated_graph_dot(g), a.output);
    return 0;
  }
  bn::RunReport report = bn::make_run_report(s, a.mechanism, m, participants, excluded);
  emit(a.format == "structured" ? bn::to_structured(report) : bn::to_text(report),
       a.output);
  return 0;
}

struct VerifyArgs {
  std::string scenario;
  bool random = false;
  std::string mechanism = "ttci";
  std::string properties = "ir,ic,po";
  std::size_t instances = 100;
  int min_agents = 1;
  int max_agents = 6;
  std::uint64_t seed = 1;
  std::size_t samples = 0;  // 0 = exhaustive
  std::uint64_t cap = bn::kDefaultDeviationCap;
  bool expect_violation = false;
};

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_verify(const VerifyArgs& a) {
  bn::GraphMechanism mech = mechanism_from(a.mechanism);
  bn::DeviationBudget budget;
  budget.cap = a.cap;
  budget.seed = a.seed;
  if (a.samples > 0) {
    budget.mode = bn::EnumerationMode::sampled;
    budget.samples = a.samples;
  }

  std::uint64_t checks = 0, violations = 0;

  if (a.random) {
    bn::SuiteConfig cfg{a.instances, a.min_agents, a.max_agents, a.seed};
    for (const std::string& prop : split_csv(a.properties)) {
      bn::SuiteResult r;
      if (prop == "ir") {
        r = bn::run_ir_suite(cfg, mech);
      } else if (prop == "ic") {
        r = bn::run_ic_suite(cfg, mech, budget, /*randomize_others=*/true);
      } else if (prop == "po") {
        r = bn::run_po_suite(cfg, mech);
      } else if (prop == "equiv") {
        r = bn::run_equivalence_suite(cfg);
      } else if (prop == "structure") {
        r = bn::run_structural_suite(cfg);
      } else {
        throw CLI::ValidationError("--properties", "unknown property: " + prop);
      }
      checks += r.checks;
      violations += r.failures.size();
      std::cout << "suite " << r.name << " instances " << r.instances
                << " checks " << r.checks << " failures " << r.failures.size()
                << "\n";
      for (const std::string& f : r.failures) std::cout << "  " << f << "\n";
    }
  } else {
    bn::Scenario s = resolve_scenario(a.scenario);
    bn::SocialNetwork net = s.to_network();
    bn::ActionProfile actions = s.to_actions();
    auto problems = bn::validate_instance(net, actions);
    if (!problems.empty()) throw std::invalid_argument(problems.front());
    bn::GeneratedGraph g = bn::build_generated_graph(net, actions);

    for (const std::string& prop : split_csv(a.properties)) {
      if (prop == "ir") {
        for (bn::AgentId i : g.participants()) {
          bn::IrReport r = bn::check_ir(net, actions, i, mech);
          ++checks;
          if (!r.holds) ++violations;
          std::cout << "check ir mechanism " << a.mechanism << " agent " << i
                    << " market g" << r.market_good << " local g" << r.local_good
                    << " -> " << (r.holds ? "ok" : "violation") << "\n";
        }
      } else if (prop == "ic") {
        for (bn::AgentId i : net.agent_ids()) {
          bn::ActionProfile ref = actions;
          ref[i] = bn::Action{net.type_of(i).preference, net.type_of(i).neighbors};
          if (!bn::build_generated_graph(net, ref).participates(i)) continue;
          bn::DeviationVerdict v = bn::check_ic(net, actions, i, mech, budget);
          ++checks;
          std::cout << "check ic mechanism " << a.mechanism << " agent " << i
                    << " truthful g" << v.truthful_good << " best g"
                    << v.best_deviation_good << " deviations "
                    << v.deviations_checked << " -> "
                    << (v.truthful_optimal() ? "ok" : "violation");
          if (v.witness) {
            std::cout << " witness order";
            for (bn::GoodId good : v.witness->reported.goods())
              std::cout << " " << good;
            std::cout << " invite";
            for (bn::AgentId j : v.witness->invited) std::cout << " " << j;
            ++violations;
          }
          std::cout << "\n";
        }
      } else if (prop == "po") {
        bn::Matching m = bn::run_graph_mechanism(mech, g, actions);
        std::map<bn::AgentId, bn::PreferenceOrder> orders;
        if (mech == bn::GraphMechanism::network_ttc) {
          for (bn::AgentId i : g.participants())
            orders.emplace(i, net.type_of(i).preference.restricted_to(
                                  g.participants()));
        } else {
          orders = bn::market_preferences(
              net, g,
              mech == bn::GraphMechanism::starter ? bn::AvailableMode::starter
                                                  : bn::AvailableMode::ttci);
        }
        bn::ParetoResult pr = bn::check_pareto_optimal(m.assignment, orders);
        ++checks;
        if (!pr.optimal) ++violations;
        std::cout << "check po mechanism " << a.mechanism << " scanned "
                  << pr.scanned << " -> " << (pr.optimal ? "ok" : "violation");
        if (pr.dominator) {
          std::cout << " dominator";
          for (const auto& [i, good] : *pr.dominator)
            std::cout << " " << i << ":g" << good;
        }
        std::cout << "\n";
      } else if (prop == "equiv") {
        bool complete = true;
        for (bn::AgentId i : g.participants())
          if (bn::available_set(g, i, bn::AvailableMode::starter).size() !=
              g.participants().size())
            complete = false;
        if (!complete || g.participants() != net.agent_ids()) {
          std::cout << "check equiv -> skipped (market is not complete)\n";
        } else {
          std::map<bn::AgentId, bn::PreferenceOrder> orders;
          for (bn::AgentId i : net.agent_ids())
            orders.emplace(i, actions.at(i) ? actions.at(i)->reported
                                            : net.type_of(i).preference);
          bool same = bn::run_ttci(g, actions).assignment ==
                      bn::run_ttc(net.agent_ids(), orders).assignment;
          ++checks;
          if (!same) ++violations;
          std::cout << "check equiv -> " << (same ? "ok" : "violation") << "\n";
        }
      } else {
        throw CLI::ValidationError("--properties", "unknown property: " + prop);
      }
    }
  }

  std::cout << "summary checks " << checks << " violations " << violations
            << "\n";
  bool bad = a.expect_violation ? violations == 0 : violations > 0;
  return bad ? 1 : 0;
}

struct ExportArgs {
  std::string scenario;
  std::string what = "generated-graph";
  std::size_t round = 1;
  std::string mechanism = "ttci";
  std::string output;
};

int cmd_export(const ExportArgs& a) {
  bn::Scenario s = resolve_scenario(a.scenario);
  bn::SocialNetwork net = s.to_network();
  bn::ActionProfile actions = s.to_actions();
  bn::GeneratedGraph g = bn::build_generated_graph(net, actions);

  if (a.what == "generated-graph") {
    emit(bn::generated_graph_dot(g), a.output);
    return 0;
  }
  if (a.what == "pointer-round") {
    bn::Matching m =
        bn::run_graph_mechanism(mechanism_from(a.mechanism), g, actions);
    emit(bn::pointer_round_dot(m, a.round), a.output);
    return 0;
  }
  throw CLI::ValidationError("--what", "unknown export: " + a.what);
}

struct GenArgs {
  int agents = 5;
  std::string topology = "tree";
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  bn::Scenario s = bn::generate_random(a.agents, topology_from(a.topology),
                                       a.p, a.seed);
  emit(bn::serialize_scenario(s), a.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trade cycles over invitation-built barter markets"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run a mechanism on a scenario");
  run->add_option("scenario", run_args.scenario,
                  "scenario file or built-in fixture name")
      ->required();
  run->add_option("-m,--mechanism", run_args.mechanism,
                  "ttc | naive-ttc | starter | ttci")
      ->check(CLI::IsMember({"ttc", "naive-ttc", "starter", "ttci"}));
  run->add_option("-f,--format", run_args.format, "text | structured | dot")
      ->check(CLI::IsMember({"text", "structured", "dot"}));
  run->add_option("-o,--output", run_args.output, "write here instead of stdout");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "check mechanism properties");
  verify->add_option("scenario", verify_args.scenario,
                     "scenario file or fixture name");
  verify->add_flag("--random", verify_args.random,
                   "verify randomized instance suites instead of one scenario");
  verify->add_option("-m,--mechanism", verify_args.mechanism,
                     "naive-ttc | starter | ttci")
      ->check(CLI::IsMember({"naive-ttc", "starter", "ttci"}));
  verify->add_option("-p,--properties", verify_args.properties,
                     "comma list: ir,ic,po,equiv,structure");
  verify->add_option("--instances", verify_args.instances,
                     "random mode: number of instances");
  verify->add_option("--min-agents", verify_args.min_agents,
                     "random mode: smallest instance");
  verify->add_option("--agents", verify_args.max_agents,
                     "random mode: largest instance");
  verify->add_option("--seed", verify_args.seed, "random mode / sampling seed");
  verify->add_option("--samples", verify_args.samples,
                     "sample this many deviations per agent (0 = exhaustive)");
  verify->add_option("--cap", verify_args.cap,
                     "exhaustive deviation ceiling before bailing out");
  verify->add_flag("--expect-violation", verify_args.expect_violation,
                   "succeed only if a violation is found");

  ExportArgs export_args;
  CLI::App* exp = app.add_subcommand("export", "Graphviz views");
  exp->add_option("scenario", export_args.scenario,
                  "scenario file or fixture name")
      ->required();
  exp->add_option("--what", export_args.what, "generated-graph | pointer-round")
      ->check(CLI::IsMember({"generated-graph", "pointer-round"}));
  exp->add_option("--round", export_args.round, "1-based trading round");
  exp->add_option("-m,--mechanism", export_args.mechanism,
                  "mechanism for the pointer trace")
      ->check(CLI::IsMember({"naive-ttc", "starter", "ttci"}));
  exp->add_option("-o,--output", export_args.output,
                  "write here instead of stdout");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a random scenario");
  gen->add_option("-n,--agents", gen_args.agents, "number of agents")
      ->required();
  gen->add_option("-t,--topology", gen_args.topology, "tree | er | complete")
      ->check(CLI::IsMember({"tree", "er", "complete"}));
  gen->add_option("-p,--probability", gen_args.p,
                  "extra-edge probability for er");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("-o,--output", gen_args.output,
                  "write here instead of stdout");

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_args);
    if (verify->parsed()) {
      if (!verify_args.random && verify_args.scenario.empty())
        throw CLI::ValidationError("verify",
                                   "give a scenario or pass --random");
      return cmd_verify(verify_args);
    }
    if (exp->parsed()) return cmd_export(export_args);
    if (gen->parsed()) return cmd_gen(gen_args);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
