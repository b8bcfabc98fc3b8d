#include <doctest.h>

#include <sstream>
#include <thread>

#include "common/support.hpp"
#include "recore/answer.hpp"
#include "recore/oracle.hpp"
#include "recore/reach.hpp"

using namespace recore;
using namespace recore::encode;

namespace {

SolveConfig config_with(HintSet hints, bool prove = true) {
  SolveConfig cfg;
  cfg.hints = hints;
  cfg.prove_unreachable = prove;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("reach");

TEST_CASE("the fixture instance reaches its goal in two steps") {
  Instance inst = test::demo_instance_tj();
  ReconfigResult r = solve_reachability(inst, config_with({Hint::T1, Hint::T2, Hint::T3}));
  CHECK(r.verdict == Verdict::Reachable);
  CHECK(r.length == 2);
  REQUIRE(r.sequence.size() == 3);
  CHECK(r.sequence[0] == inst.start);
  CHECK(r.sequence[2] == inst.goal);
  CHECK(validate_sequence(inst, r.sequence).valid());
  CHECK(r.depths.size() == 3);
}

TEST_CASE("equal endpoints answer at depth zero") {
  Graph g = test::demo_graph();
  Instance inst =
      make_instance(g, test::nodes(6, {2, 5}), test::nodes(6, {2, 5}), Rule::TokenJumping);
  ReconfigResult r = solve_reachability(inst, config_with({}));
  CHECK(r.verdict == Verdict::Reachable);
  CHECK(r.length == 0);
  CHECK(r.sequence.size() == 1);
}

TEST_CASE("the two-token cycle instance is unreachable at a shallow depth") {
  Graph g = test::cycle_graph(6);
  Instance inst =
      make_instance(g, test::nodes(6, {1, 4}), test::nodes(6, {2, 5}), Rule::TokenJumping);
  ReconfigResult r = solve_reachability(inst, config_with(HintSet::all()));
  CHECK(r.verdict == Verdict::Unreachable);
  CHECK(r.depths.back().depth <= 2);
  CHECK(r.sequence.empty());
}

TEST_CASE("the fixture under token addition-removal needs four steps") {
  Instance inst = test::demo_instance_tar(3);
  for (HintSet hints : {HintSet{}, HintSet::all()}) {
    ReconfigResult r = solve_reachability(inst, config_with(hints));
    CHECK(r.verdict == Verdict::Reachable);
    CHECK(r.length == 4);
    CHECK(validate_sequence(inst, r.sequence).valid());
  }
}

TEST_CASE("a tight threshold makes the tar fixture unreachable") {
  Instance inst = test::demo_instance_tar(2);
  ReconfigResult r = solve_reachability(inst, config_with(HintSet::all()));
  // with threshold 2 every move must keep two tokens, and single
  // addition/removal steps cannot: only removals to one token then
  // additions are available
  OracleAnswer oracle = oracle_reachability(inst);
  CHECK(to_string(r.verdict) == to_string(oracle.verdict));
  if (oracle.verdict == Verdict::Reachable) CHECK(r.length == *oracle.shortest);
}

TEST_CASE("max_steps exhaustion yields unknown without a sequence") {
  Graph g = test::cycle_graph(6);
  Instance inst =
      make_instance(g, test::nodes(6, {1, 4}), test::nodes(6, {2, 5}), Rule::TokenJumping);
  SolveConfig cfg = config_with({}, /*prove=*/false);
  cfg.max_steps = 3;
  ReconfigResult r = solve_reachability(inst, cfg);
  CHECK(r.verdict == Verdict::Unknown);
  CHECK(r.sequence.empty());
  CHECK(r.depths.size() == 4);
}

TEST_CASE("a tiny timeout yields unknown") {
  Graph g = test::hub_gadget_union(6, 12);
  StateSet start(g.node_count()), goal(g.node_count());
  for (int gi = 0; gi < 6; ++gi) {
    start.insert(gi * 12);
    goal.insert(gi * 12 + 1);
  }
  Instance inst = make_instance(g, start, goal, Rule::TokenJumping);
  SolveConfig cfg = config_with({});
  cfg.timeout_seconds = 1e-4;
  ReconfigResult r = solve_reachability(inst, cfg);
  CHECK(r.verdict == Verdict::Unknown);
}

TEST_CASE("an external stop flag yields unknown") {
  Instance inst = test::demo_instance_tj();
  std::atomic<bool> stop{true};
  SolveConfig cfg = config_with({});
  cfg.stop = &stop;
  ReconfigResult r = solve_reachability(inst, cfg);
  CHECK(r.verdict == Verdict::Unknown);
}

TEST_CASE("degenerate zero-node instance is reachable at length zero") {
  Graph g(0, {});
  Instance inst = make_instance(g, StateSet(0), StateSet(0), Rule::TokenJumping);
  CHECK(inst.token_count == 0);
  ReconfigResult r = solve_reachability(inst, config_with(HintSet::all()));
  CHECK(r.verdict == Verdict::Reachable);
  CHECK(r.length == 0);
}

TEST_CASE("verdict and stats are deterministic across runs") {
  Instance inst = test::demo_instance_tj();
  SolveConfig cfg = config_with(HintSet::all());
  ReconfigResult a = solve_reachability(inst, cfg);
  ReconfigResult b = solve_reachability(inst, cfg);
  CHECK(a.verdict == b.verdict);
  CHECK(a.length == b.length);
  REQUIRE(a.depths.size() == b.depths.size());
  for (size_t i = 0; i < a.depths.size(); ++i) {
    CHECK(a.depths[i].conflicts == b.depths[i].conflicts);
    CHECK(a.depths[i].decisions == b.depths[i].decisions);
    CHECK(a.depths[i].propagations == b.depths[i].propagations);
    CHECK(a.depths[i].clauses == b.depths[i].clauses);
  }
  CHECK(answer_to_string(a) == answer_to_string(b));
}

TEST_CASE("retired checks stay retired after extension") {
  Instance inst = test::demo_instance_tj();
  SolveConfig cfg = config_with({});
  ReachSession session(inst, cfg);
  CHECK(session.solve_current() == sat::SolveResult::Unsat);
  session.extend();
  CHECK(session.depth() == 1);
  // the depth-0 check was disabled by a permanent unit: assuming its query
  // now fails with exactly that assumption as the core
  CHECK(session.solve_assuming_query(0) == sat::SolveResult::Unsat);
  auto core = session.solver().unsat_core();
  REQUIRE(core.size() == 1);
  CHECK(core[0] == session.vars().query_lit(0));
  // the session still solves the instance at depth 2
  session.extend();
  CHECK(session.solve_current() == sat::SolveResult::Sat);
}

TEST_CASE("validate_sequence accepts the fixture witness and rejects tampering") {
  Instance inst = test::demo_instance_tj();
  std::vector<StateSet> good = {test::nodes(6, {2, 5}), test::nodes(6, {4, 5}),
                                test::nodes(6, {3, 4})};
  CHECK(validate_sequence(inst, good).valid());

  std::vector<StateSet> jump2 = {test::nodes(6, {2, 5}), test::nodes(6, {3, 4})};
  ValidationIssue issue = validate_sequence(inst, jump2);
  CHECK(issue.kind == ValidationIssue::Kind::BadTransition);
  CHECK(issue.index == 0);
  CHECK(issue.to_string() == "invalid pair 0: two tokens moved");

  std::vector<StateSet> undominated = {test::nodes(6, {2, 5}), test::nodes(6, {4, 5}),
                                       test::nodes(6, {4, 6})};
  issue = validate_sequence(inst, undominated);
  CHECK(issue.kind == ValidationIssue::Kind::GoalMismatch);

  // replace the goal so the endpoint matches but the state is undominated
  Instance tampered = make_instance(inst.graph, test::nodes(6, {2, 5}),
                                    test::nodes(6, {3, 4}), Rule::TokenJumping);
  std::vector<StateSet> bad_mid = {test::nodes(6, {2, 5}), test::nodes(6, {4, 6}),
                                   test::nodes(6, {3, 4})};
  issue = validate_sequence(tampered, bad_mid);
  CHECK(issue.kind == ValidationIssue::Kind::NotDominating);
  CHECK(issue.index == 1);
  CHECK(issue.to_string() == "invalid state 1: not dominating");

  CHECK(validate_sequence(inst, {}).kind == ValidationIssue::Kind::EmptySequence);
}

TEST_CASE("validate_sequence enforces the tar threshold") {
  std::vector<StateSet> seq = {test::nodes(6, {2, 5}), test::nodes(6, {2, 4, 5}),
                               test::nodes(6, {4, 5}), test::nodes(6, {3, 4, 5}),
                               test::nodes(6, {3, 4})};
  Instance loose = test::demo_instance_tar(3);
  CHECK(validate_sequence(loose, seq).valid());
  // the same witness under threshold 2 fails on its first overweight pair
  Instance tight = test::demo_instance_tar(2);
  ValidationIssue issue = validate_sequence(tight, seq);
  CHECK(issue.kind == ValidationIssue::Kind::BadTransition);
  CHECK(issue.index == 0);
  CHECK(issue.detail == "token count exceeds threshold");
}

TEST_CASE("answer streams parse back") {
  Instance inst = test::demo_instance_tj();
  ReconfigResult r = solve_reachability(inst, config_with({}));
  std::string text = answer_to_string(r);
  CHECK(text == "a 2 5\na 4 5\na 3 4\ns REACHABLE\n");
  ParsedAnswer parsed = parse_answer(text, 6);
  CHECK(parsed.verdict == Verdict::Reachable);
  REQUIRE(parsed.states.size() == 3);
  CHECK(parsed.states[0] == inst.start);
  CHECK(parsed.states[2] == inst.goal);

  CHECK(parse_answer("c note\ns UNKNOWN\n", 6).verdict == Verdict::Unknown);
  CHECK_THROWS_AS(parse_answer("a 1 2\n", 6), ParseError);        // missing s line
  CHECK_THROWS_AS(parse_answer("s MAYBE\n", 6), ParseError);      // bad verdict
  CHECK_THROWS_AS(parse_answer("a 9\ns UNKNOWN\n", 6), ParseError);
}

TEST_CASE("stats renderers cover both formats") {
  Instance inst = test::demo_instance_tj();
  ReconfigResult r = solve_reachability(inst, config_with(HintSet::all()));
  std::ostringstream comments;
  write_stats_comments(comments, r);
  CHECK(comments.str().find("c verdict REACHABLE length 2") != std::string::npos);
  std::string json = stats_to_json(r);
  CHECK(json.find("\"verdict\":\"REACHABLE\"") != std::string::npos);
  CHECK(json.find("\"depths\"") != std::string::npos);
}

TEST_CASE("independent drivers run concurrently and honor per-driver stop flags") {
  std::atomic<bool> stop_third{true};
  Instance demo = test::demo_instance_tj();
  Graph c6 = test::cycle_graph(6);
  Instance cyc =
      make_instance(c6, test::nodes(6, {1, 4}), test::nodes(6, {2, 5}), Rule::TokenJumping);
  ReconfigResult r_demo, r_cyc, r_stopped;
  std::thread a([&] { r_demo = solve_reachability(demo, config_with(HintSet::all())); });
  std::thread b([&] { r_cyc = solve_reachability(cyc, config_with(HintSet::all())); });
  std::thread c([&] {
    SolveConfig cfg = config_with({});
    cfg.stop = &stop_third;
    r_stopped = solve_reachability(demo, cfg);
  });
  a.join();
  b.join();
  c.join();
  CHECK(r_demo.verdict == Verdict::Reachable);
  CHECK(r_demo.length == 2);
  CHECK(r_cyc.verdict == Verdict::Unreachable);
  CHECK(r_stopped.verdict == Verdict::Unknown);
}

TEST_CASE("hint subsets preserve verdict and minimal length on random instances") {
  test::Rng rng(777);
  const std::vector<HintSet> subsets = {
      HintSet{},
      HintSet{Hint::T3},
      HintSet{Hint::T1, Hint::T2},
      HintSet{Hint::T1, Hint::T2, Hint::T3},
      HintSet{Hint::D1, Hint::D2},
      HintSet::all()};
  int solved = 0;
  for (int iter = 0; iter < 25; ++iter) {
    Graph g = test::random_connected_graph(rng, test::rand_int(rng, 4, 9), 0.3);
    int k = test::bf_min_dominating_size(g);
    auto states = test::bf_dominating_sets(g, k);
    if (states.size() < 2) continue;
    const StateSet& start = states[rng() % states.size()];
    const StateSet& goal = states[rng() % states.size()];
    Instance inst = make_instance(g, start, goal, Rule::TokenJumping);
    auto expected = test::bf_reconfig_distance(inst);
    for (const HintSet& hints : subsets) {
      ReconfigResult r = solve_reachability(inst, config_with(hints));
      if (expected.has_value()) {
        CHECK(r.verdict == Verdict::Reachable);
        CHECK(r.length == *expected);
        CHECK(validate_sequence(inst, r.sequence).valid());
      } else {
        CHECK(r.verdict == Verdict::Unreachable);
      }
    }
    ++solved;
  }
  CHECK(solved > 10);
}

TEST_SUITE_END();
