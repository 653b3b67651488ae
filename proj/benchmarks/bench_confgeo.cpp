#include <benchmark/benchmark.h>

#include <confgeo/family.hpp>
#include <confgeo/geometry.hpp>
#include <confgeo/minkowski.hpp>

#include <vector>

namespace {

std::vector<confgeo::HalfSpace> cube_halfspaces() {
  std::vector<confgeo::HalfSpace> hs;
  for (int k = 0; k < 3; ++k)
    for (double s : {1.0, -1.0}) {
      confgeo::Vec3 n{0, 0, 0};
      (k == 0 ? n.x : k == 1 ? n.y : n.z) = s;
      hs.push_back({confgeo::UnitVector::normalized(n), 0.5});
    }
  return hs;
}

void BM_IntersectCube(benchmark::State& state) {
  const auto hs = cube_halfspaces();
  for (auto _ : state) {
    benchmark::DoNotOptimize(confgeo::intersect_halfspaces(hs));
  }
}
BENCHMARK(BM_IntersectCube);

void BM_BuildFamilyPolytope(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(confgeo::build_polytope({1.0, 2.0}));
  }
}
BENCHMARK(BM_BuildFamilyPolytope);

void BM_Classify(benchmark::State& state) {
  const confgeo::PerimeterVector L = confgeo::perimeters_from_xy({1.0, 2.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(confgeo::classify(L));
  }
}
BENCHMARK(BM_Classify);

void BM_MinkowskiSolveBox(benchmark::State& state) {
  std::vector<confgeo::UnitVector> normals;
  for (const confgeo::HalfSpace& h : cube_halfspaces()) normals.push_back(h.normal);
  const std::vector<double> areas = {2.0, 2.0, 3.0, 3.0, 6.0, 6.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(confgeo::solve_minkowski({normals, areas}));
  }
}
BENCHMARK(BM_MinkowskiSolveBox);

}  // namespace

BENCHMARK_MAIN();
