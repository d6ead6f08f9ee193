#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "barternet/generated_graph.hpp"
#include "barternet/scenarios.hpp"
#include "doctest.h"

using namespace barternet;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& stem) {
  return fs::temp_directory_path() / (stem + ".scn");
}

}  // namespace

TEST_SUITE("scenarios") {

TEST_CASE("built-in fixtures") {
  CHECK(fixture_names() ==
        std::vector<std::string>{"fig2_line", "fig3_table1", "fig6_table2"});
  CHECK_THROWS_AS(fixture("nope"), std::invalid_argument);

  Scenario line = fixture("fig2_line");
  CHECK(line.agent_count == 3);
  CHECK(line.edges == std::vector<std::pair<AgentId, AgentId>>{
                          {0, 1}, {1, 2}, {2, 3}});
  CHECK(line.true_orders.at(2) == PreferenceOrder({1, 3, 2}));
  CHECK(line.neighbors_of(2) == std::vector<AgentId>{1, 3});
  CHECK(line.neighbors_of(0) == std::vector<AgentId>{1});

  Scenario table = fixture("fig3_table1");
  CHECK(table.agent_count == 5);
  CHECK(table.true_orders.at(4) == PreferenceOrder({3, 1, 4, 2, 5}));

  Scenario worked = fixture("fig6_table2");
  CHECK(worked.agent_count == 7);
  CHECK(worked.edges.size() == 10);
}

TEST_CASE("random generation is deterministic and connected") {
  Scenario a = generate_random(6, Topology::erdos_renyi, 0.25, 42);
  Scenario b = generate_random(6, Topology::erdos_renyi, 0.25, 42);
  CHECK(a == b);
  CHECK(serialize_scenario(a) == serialize_scenario(b));
  CHECK(a.name == "random-er-p25-n6-s42");
  CHECK(generate_random(6, Topology::erdos_renyi, 0.25, 43) != b);

  // The spanning-tree base keeps every agent reachable under truth-telling.
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    Scenario s = generate_random(7, Topology::tree, 0.0, seed);
    SocialNetwork net = s.to_network();
    GeneratedGraph g = build_generated_graph(net, truthful_profile(net));
    CHECK(g.participants() == net.agent_ids());
    CHECK(g.edge_count() == 7);  // a tree over o plus seven agents
  }

  Scenario one = generate_random(1, Topology::tree, 0.0, 9);
  CHECK(one.agent_count == 1);
  CHECK(one.edges == std::vector<std::pair<AgentId, AgentId>>{{0, 1}});

  Scenario full = generate_random(4, Topology::complete, 0.0, 9);
  CHECK(full.edges.size() == 10);  // C(5,2) pairs including the organizer

  CHECK_THROWS_AS(generate_random(0, Topology::tree, 0.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_random(3, Topology::erdos_renyi, 1.5, 1),
                  std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
  for (const std::string& name : fixture_names()) {
    Scenario s = fixture(name);
    Scenario back = parse_scenario(serialize_scenario(s));
    CHECK(back == s);
  }

  Scenario s = generate_random(5, Topology::erdos_renyi, 0.4, 7);
  s.reported_overrides.emplace(2, PreferenceOrder({5, 4, 3, 2, 1}));
  s.invited_overrides.emplace(3, s.neighbors_of(3).empty()
                                     ? std::vector<AgentId>{}
                                     : std::vector<AgentId>{s.neighbors_of(3).front()});
  s.nil_overrides.insert(4);
  Scenario back = parse_scenario(serialize_scenario(s));
  CHECK(back == s);

  fs::path p = temp_file("roundtrip");
  save_scenario(s, p);
  CHECK(load_scenario(p) == s);
  fs::remove(p);
}

TEST_CASE("overrides shape the action profile") {
  Scenario s = fixture("fig2_line");
  s.reported_overrides.emplace(1, PreferenceOrder({1, 2, 3}));
  s.invited_overrides.emplace(2, std::vector<AgentId>{1});
  s.nil_overrides.insert(3);
  ActionProfile acts = s.to_actions();
  CHECK(acts.at(1)->reported == PreferenceOrder({1, 2, 3}));
  CHECK(acts.at(1)->invited == std::vector<AgentId>{0, 2});  // truthful
  CHECK(acts.at(2)->reported == PreferenceOrder({1, 3, 2}));  // truthful
  CHECK(acts.at(2)->invited == std::vector<AgentId>{1});
  CHECK_FALSE(acts.at(3).has_value());
}

TEST_CASE("parse errors carry origin and line") {
  auto parse_fails = [](const std::string& text, const std::string& needle) {
    try {
      parse_scenario(text, "test.scn");
      FAIL_CHECK("expected ParseError for: " << needle);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  parse_fails("scenario x\nagents 2\nbogus 1\n", "test.scn:3");
  parse_fails("agents 2\n", "scenario");                // name required
  parse_fails("scenario x\nedge 0 1\n", "agents");      // count first
  parse_fails("scenario x\nagents 2\nedge 1 1\n", "self-contact");
  parse_fails("scenario x\nagents 2\nedge 0 3\n", "out of range");
  parse_fails(
      "scenario x\nagents 2\nedge 0 1\nedge 1 2\nedge 0 1\n", "listed twice");
  parse_fails(
      "scenario x\nagents 2\nedge 0 1\nedge 1 2\nedge 1 0\n", "listed twice");
  parse_fails("scenario x\nagents 2\nedge 0 1\nedge 1 2\norder 1 1 2\n",
              "no order");  // agent 2's order missing
  parse_fails(
      "scenario x\nagents 2\nedge 0 1\nedge 1 2\norder 1 1 2\norder 2 1\n",
      "expected all 2");  // incomplete ranking
  parse_fails(
      "scenario x\nagents 2\nedge 0 1\nedge 1 2\norder 1 1 2\norder 2 2 1\n"
      "invite 2 0\n",
      "not a contact");  // the organizer is not 2's contact
}

TEST_CASE("loading a missing file fails cleanly") {
  CHECK_THROWS_AS(load_scenario("does-not-exist.scn"), ParseError);
}

TEST_CASE("shipped scenario files match the built-in fixtures") {
  fs::path dir = BARTERNET_DATA_DIR;
  for (const std::string& name : fixture_names()) {
    fs::path file = dir / (name + ".scn");
    REQUIRE_MESSAGE(fs::exists(file), file.string());
    CHECK(load_scenario(file) == fixture(name));
    // Canonical bytes: the shipped file is exactly the serializer's output.
    std::ifstream in(file, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    CHECK(bytes == serialize_scenario(fixture(name)));
  }
}

}  // TEST_SUITE
