#include "hyplan/error.hpp"
#include "hyplan/hysst.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

namespace hyplan {
namespace {

using test::vec;

SolutionPair line_edge(const Motion& from, double to, double dt) {
  return SolutionPair({Sample{from.time, from.state, vec({0.0})},
                       Sample{{from.time.t + dt, from.time.j}, vec({to}), vec({0.0})}});
}

MotionId attach(SearchTree& tree, MotionId parent, double to, double cost) {
  const Motion& p = tree.at(parent);
  const SolutionPair e = line_edge(p, to, 0.1);
  const MotionId id = tree.add_vertex(vec({to}), e.back().time, cost);
  tree.add_edge(parent, id, e, vec({0.0}));
  return id;
}

TEST(BestNear, PicksCheapestInBallElseNearest) {
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.0}));
  const MotionId a = attach(tree, r, 0.05, 1.0);
  const MotionId b = attach(tree, r, 0.5, 0.5);
  const MotionId c = attach(tree, r, 0.02, 3.0);
  EXPECT_EQ(best_near_selection(tree, vec({0.03}), 0.1, euclidean_distance), r);
  tree.at(r).inactive = true;
  EXPECT_EQ(best_near_selection(tree, vec({0.03}), 0.1, euclidean_distance), a);
  // eps_bn = 0: nearest active vertex.
  EXPECT_EQ(best_near_selection(tree, vec({0.03}), 0.0, euclidean_distance), c);
  // Empty ball: nearest.
  EXPECT_EQ(best_near_selection(tree, vec({0.3}), 0.1, euclidean_distance), b);
  // Constraint.
  EXPECT_EQ(best_near_selection(tree, vec({0.03}), 0.1, euclidean_distance,
                                [](const Motion& m) { return m.state[0] > 0.3; }),
            b);
}

TEST(BestNear, NoActiveVertex) {
  SearchTree tree;
  tree.at(tree.add_root(vec({0.0}))).inactive = true;
  try {
    best_near_selection(tree, vec({0.0}), 1.0, euclidean_distance);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoActiveVertex);
  }
}

TEST(BestNear, MatchesBruteForce) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::uniform_real_distribution<double> cost(0.0, 10.0);
  std::bernoulli_distribution off(0.2);
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.5, 0.5}));
  for (int i = 0; i < 300; ++i) {
    const Vector x = vec({coord(gen), coord(gen)});
    SolutionPair e({Sample{{0, 0}, tree.at(r).state, vec({0.0})}, Sample{{1, 0}, x, vec({0.0})}});
    const MotionId id = tree.add_vertex(x, {1, 0}, cost(gen));
    tree.add_edge(r, id, e, vec({0.0}));
    tree.at(id).inactive = off(gen);
  }
  for (int q = 0; q < 200; ++q) {
    const Vector x = vec({coord(gen), coord(gen)});
    const double eps = q % 3 == 0 ? 0.0 : 0.08;
    std::optional<MotionId> in_ball, nearest;
    double best_cost = std::numeric_limits<double>::infinity();
    double best_d = std::numeric_limits<double>::infinity();
    tree.for_each([&](const Motion& m) {
      if (m.inactive) return;
      const double d = (m.state - x).norm();
      if (d <= eps && m.acc_cost < best_cost) {
        best_cost = m.acc_cost;
        in_ball = m.id;
      }
      if (d < best_d) {
        best_d = d;
        nearest = m.id;
      }
    });
    EXPECT_EQ(best_near_selection(tree, x, eps, euclidean_distance), in_ball ? *in_ball : *nearest);
  }
}

TEST(Locality, WitnessLifecycle) {
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.0}));
  const MotionId a = attach(tree, r, 0.5, 1.0);
  WitnessSet witnesses;

  LocalityResult res = is_vertex_locally_the_best(vec({0.5}), 1.0, witnesses, 0.1, euclidean_distance, tree);
  EXPECT_TRUE(res.best);
  ASSERT_EQ(witnesses.size(), 1U);
  EXPECT_FALSE(witnesses[0].rep);
  witnesses[0].rep = a;

  res = is_vertex_locally_the_best(vec({0.55}), 0.9, witnesses, 0.1, euclidean_distance, tree);
  EXPECT_TRUE(res.best);
  EXPECT_EQ(res.witness, 0U);
  res = is_vertex_locally_the_best(vec({0.55}), 1.0, witnesses, 0.1, euclidean_distance, tree);
  EXPECT_FALSE(res.best);
  res = is_vertex_locally_the_best(vec({0.45}), 2.0, witnesses, 0.1, euclidean_distance, tree);
  EXPECT_FALSE(res.best);
  EXPECT_EQ(witnesses.size(), 1U);

  res = is_vertex_locally_the_best(vec({0.8}), 5.0, witnesses, 0.1, euclidean_distance, tree);
  EXPECT_TRUE(res.best);
  EXPECT_EQ(res.witness, 1U);
  EXPECT_TRUE(same_vector(witnesses[1].state, vec({0.8})));
}

TEST(Prune, RemovesInactiveChainUpToActiveAncestor) {
  // r -> a -> b -> c, with a and b already dominated; c is the witness rep.
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.0}));
  const MotionId a = attach(tree, r, 0.1, 1.0);
  const MotionId b = attach(tree, a, 0.2, 2.0);
  const MotionId c = attach(tree, b, 0.3, 3.0);
  tree.at(a).inactive = true;
  tree.at(b).inactive = true;
  WitnessSet witnesses{{vec({0.3}), c}};
  const MotionId v = attach(tree, r, 0.3, 1.0);

  prune_dominated_vertices(v, 0, witnesses, tree);
  EXPECT_EQ(*witnesses[0].rep, v);
  EXPECT_FALSE(tree.contains(a));
  EXPECT_FALSE(tree.contains(b));
  EXPECT_FALSE(tree.contains(c));
  EXPECT_TRUE(tree.contains(r));
  EXPECT_EQ(tree.size(), 2U);
  EXPECT_EQ(tree.at(r).num_children, 1);
  EXPECT_TRUE(tree.check_invariants());
}

TEST(Prune, KeepsDominatedVertexWithChildren) {
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.0}));
  const MotionId a = attach(tree, r, 0.1, 1.0);
  const MotionId b = attach(tree, a, 0.2, 2.0);
  WitnessSet witnesses{{vec({0.1}), a}};
  const MotionId v = attach(tree, r, 0.1, 0.5);
  prune_dominated_vertices(v, 0, witnesses, tree);
  ASSERT_TRUE(tree.contains(a));
  EXPECT_TRUE(tree.at(a).inactive);
  EXPECT_TRUE(tree.contains(b));
  EXPECT_FALSE(tree.at(b).inactive);
  EXPECT_EQ(tree.size(), 4U);
}

TEST(Prune, FirstRepAndPinnedRep) {
  SearchTree tree;
  const MotionId r = tree.add_root(vec({0.0}));
  const MotionId a = attach(tree, r, 0.1, 1.0);
  WitnessSet witnesses{{vec({0.1}), std::nullopt}};
  prune_dominated_vertices(a, 0, witnesses, tree);
  EXPECT_EQ(*witnesses[0].rep, a);
  EXPECT_EQ(tree.size(), 2U);

  const MotionId v = attach(tree, r, 0.1, 0.5);
  prune_dominated_vertices(v, 0, witnesses, tree, {a});
  EXPECT_EQ(*witnesses[0].rep, v);
  EXPECT_TRUE(tree.contains(a));
  EXPECT_FALSE(tree.at(a).inactive);
}

HysstParams bb_params() {
  HysstParams params;
  params.K = 20000;
  params.flow = {0.5, 0.001};
  params.eps_bn = 0.1;
  params.eps_s = 0.05;
  return params;
}

TEST(Hysst, InitialStateInGoal) {
  PlannerProblem problem = test::bouncing_ball_apex_problem();
  problem.in_goal = [](const Vector& x) { return x[0] > 0.9; };
  RngStream rng(1);
  const HysstResult r = hysst_solve(problem, bb_params(), rng);
  ASSERT_TRUE(r.solved());
  EXPECT_EQ(r.stats.iterations, 0U);
  EXPECT_EQ(r.plan->size(), 1U);
  EXPECT_EQ(r.cost, 0.0);
}

TEST(Hysst, UnreachableGoal) {
  PlannerProblem problem = test::bouncing_ball_apex_problem();
  problem.in_goal = [](const Vector& x) { return x[0] > 5.0; };
  HysstParams params = bb_params();
  params.K = 500;
  RngStream rng(1);
  const HysstResult r = hysst_solve(problem, params, rng);
  EXPECT_FALSE(r.solved());
  EXPECT_EQ(r.stats.iterations, 500U);
  EXPECT_LE(r.tree.size(), 501U);
}

TEST(Hysst, TreeInvariantsAndCosts) {
  const PlannerProblem problem = test::bouncing_ball_apex_problem();
  HysstParams params = bb_params();
  params.instrumented = true;
  params.batch_size = 3;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RngStream rng(seed);
    const HysstResult r = hysst_solve(problem, params, rng);
    ASSERT_TRUE(r.solved());
    EXPECT_EQ(r.stats.invariant_violations, 0U);
    std::string why;
    EXPECT_TRUE(r.tree.check_invariants(&why)) << why;
    r.tree.for_each([&](const Motion& m) {
      if (!m.parent) {
        EXPECT_EQ(m.acc_cost, 0.0);
        return;
      }
      EXPECT_NEAR(m.acc_cost, r.tree.at(*m.parent).acc_cost + hybrid_time_cost(m.edge), 1e-12);
      // An inactive vertex only survives while it has descendants.
      if (m.inactive) {
        EXPECT_GT(m.num_children, 0);
      }
    });
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      for (std::size_t k = i + 1; k < r.witnesses.size(); ++k) {
        EXPECT_GT((r.witnesses[i].state - r.witnesses[k].state).norm(), params.eps_s);
      }
      if (r.witnesses[i].rep) {
        ASSERT_TRUE(r.tree.contains(*r.witnesses[i].rep));
        EXPECT_FALSE(r.tree.at(*r.witnesses[i].rep).inactive);
      }
    }
    const HybridTime end = r.plan->back().time;
    EXPECT_NEAR(r.cost, end.t + end.j, 1e-9);
    EXPECT_TRUE(check_motion_plan(*r.plan, problem).passed());
  }
}

TEST(Hysst, ZeroRadiiMatchHyrrtVertexCount) {
  const PlannerProblem problem = test::multicopter_problem(5.5, 0.5, 0.0);
  HysstParams params;
  params.K = 300;
  params.eps_bn = 0.0;
  params.eps_s = 0.0;
  RngStream a(3), b(3);
  const HysstResult sst = hysst_solve(problem, params, a);
  const PlannerResult rrt = hyrrt_solve(problem, params, b);
  EXPECT_FALSE(sst.solved());
  EXPECT_EQ(sst.tree.size(), rrt.tree.size());
  EXPECT_EQ(sst.stats.witness_count, sst.tree.size());
}

TEST(Hysst, LargerBatchNeverCostsMore) {
  const PlannerProblem problem = test::bouncing_ball_apex_problem();
  double sum1 = 0.0, sum5 = 0.0;
  int better_or_equal = 0;
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    HysstParams params = bb_params();
    params.batch_size = 1;
    RngStream r1(seed);
    const HysstResult one = hysst_solve(problem, params, r1);
    params.batch_size = 5;
    RngStream r5(seed);
    const HysstResult five = hysst_solve(problem, params, r5);
    ASSERT_TRUE(one.solved() && five.solved()) << "seed " << seed;
    sum1 += one.cost;
    sum5 += five.cost;
    if (five.cost <= one.cost) ++better_or_equal;
  }
  EXPECT_GE(better_or_equal, 12);
  EXPECT_LT(sum5, sum1);
}

TEST(Hysst, PinballPlansValidate) {
  const PlannerProblem problem = test::pinball_floor_problem();
  HysstParams params;
  params.K = 20000;
  params.flow = {1.0, 0.01};
  params.eps_bn = 0.8;
  params.eps_s = 0.2;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    RngStream rng(seed);
    const HysstResult r = hysst_solve(problem, params, rng);
    ASSERT_TRUE(r.solved()) << "seed " << seed;
    const MotionPlanCheck c = check_motion_plan(*r.plan, problem);
    EXPECT_TRUE(c.passed()) << c.describe();
  }
}

TEST(Hysst, RejectsBadParameters) {
  const PlannerProblem problem = test::bouncing_ball_apex_problem();
  RngStream rng(1);
  HysstParams params = bb_params();
  params.eps_s = -1.0;
  EXPECT_THROW(hysst_solve(problem, params, rng), Error);
  params = bb_params();
  params.batch_size = 0;
  EXPECT_THROW(hysst_solve(problem, params, rng), Error);
  params = bb_params();
  params.cost = nullptr;
  EXPECT_THROW(hysst_solve(problem, params, rng), Error);
}

}  // namespace
}  // namespace hyplan
