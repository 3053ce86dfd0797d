#include "hyplan/hysst.hpp"
#include "hyplan/planner_common.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace hyplan;

SearchTree random_tree(int n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  SearchTree tree;
  const Vector origin = Vector::Zero(6);
  const MotionId root = tree.add_root(origin);
  for (int i = 1; i < n; ++i) {
    Vector x(6);
    for (int k = 0; k < 6; ++k) x[k] = coord(gen);
    SolutionPair edge({Sample{{0, 0}, origin, Vector::Zero(2)}, Sample{{1, 0}, x, Vector::Zero(2)}});
    const MotionId id = tree.add_vertex(x, {1, 0}, coord(gen) + 1.0);
    tree.add_edge(root, id, edge, Vector::Zero(2));
  }
  return tree;
}

void BM_NearestNeighbor(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const SearchTree tree = random_tree(static_cast<int>(state.range(0)), gen);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Vector q(6);
  for (auto _ : state) {
    for (int k = 0; k < 6; ++k) q[k] = coord(gen);
    benchmark::DoNotOptimize(nearest_neighbor(tree, q, euclidean_distance));
  }
}
BENCHMARK(BM_NearestNeighbor)->Arg(100)->Arg(1000)->Arg(10000);

void BM_BestNearSelection(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const SearchTree tree = random_tree(static_cast<int>(state.range(0)), gen);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  Vector q(6);
  for (auto _ : state) {
    for (int k = 0; k < 6; ++k) q[k] = coord(gen);
    benchmark::DoNotOptimize(best_near_selection(tree, q, 0.5, euclidean_distance));
  }
}
BENCHMARK(BM_BestNearSelection)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace
