#include <doctest.h>

#include <confgeo/family.hpp>
#include <confgeo/geometry.hpp>
#include <confgeo/minkowski.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace confgeo;

namespace {

UnitVector axis(int k, double s) {
  Vec3 n{0, 0, 0};
  (k == 0 ? n.x : k == 1 ? n.y : n.z) = s;
  return UnitVector::normalized(n);
}

std::vector<UnitVector> cube_normals() {
  std::vector<UnitVector> n;
  for (int k = 0; k < 3; ++k)
    for (double s : {1.0, -1.0}) n.push_back(axis(k, s));
  return n;
}

std::vector<UnitVector> family_normal_vec() {
  const auto n = canonical_normals();
  return {n.begin(), n.end()};
}

// Face areas of a roof body, via the kernel, in halfspace order.
std::vector<double> family_areas(double x, double y) {
  const Polytope p = build_polytope({x, y});
  std::vector<double> areas(5, 0.0);
  for (std::size_t f = 0; f < p.faces.size(); ++f)
    areas[p.face_halfspace[f]] = p.faces[f].area;
  return areas;
}

std::vector<double> family_support(double x, double y) {
  const double r = 1.0 / std::numbers::sqrt2;
  return {0.0, y * r, y * r, x * r, x * r};
}

double max_rel_area_error(const std::vector<double>& got,
                          const std::vector<double>& want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k)
    worst = std::max(worst, std::abs(got[k] - want[k]) / want[k]);
  return worst;
}

}  // namespace

TEST_CASE("condition report for well-posed and defective inputs") {
  const ConditionReport cube = check_conditions({cube_normals(), std::vector<double>(6, 1.0)});
  CHECK(cube.normals_ok);
  CHECK(cube.areas_positive);
  CHECK(cube.closure_ok);
  CHECK(cube.closure_residual == 0.0);
  CHECK(cube.all_ok());

  const ConditionReport fam = check_conditions({family_normal_vec(), family_areas(1.0, 2.0)});
  CHECK(fam.all_ok());

  // Equal areas on the family normals leave a nonzero resultant.
  const ConditionReport open =
      check_conditions({family_normal_vec(), std::vector<double>(5, 1.0)});
  CHECK(open.normals_ok);
  CHECK(open.areas_positive);
  CHECK_FALSE(open.closure_ok);
  CHECK(open.closure_residual ==
        doctest::Approx(9.0 - 4.0 * std::numbers::sqrt2).epsilon(1e-12));

  // Duplicate direction.
  auto dup = cube_normals();
  dup[1] = dup[0];
  CHECK_FALSE(check_conditions({dup, std::vector<double>(6, 1.0)}).normals_ok);

  // All normals in one plane can never close a 3-dimensional body.
  const std::vector<UnitVector> flat = {axis(0, 1.0), axis(0, -1.0), axis(1, 1.0),
                                        axis(1, -1.0)};
  CHECK_FALSE(check_conditions({flat, std::vector<double>(4, 1.0)}).normals_ok);

  // Nonpositive area.
  auto bad_areas = std::vector<double>(6, 1.0);
  bad_areas[2] = -1.0;
  CHECK_FALSE(check_conditions({cube_normals(), bad_areas}).areas_positive);

  // Too few halfspaces to bound anything.
  const std::vector<UnitVector> three = {axis(0, 1.0), axis(1, 1.0), axis(2, 1.0)};
  CHECK_FALSE(check_conditions({three, std::vector<double>(3, 1.0)}).normals_ok);
}

TEST_CASE("areas_from_support measures the cube and the roof") {
  const std::vector<double> cube =
      areas_from_support(cube_normals(), std::vector<double>(6, 0.5));
  for (double a : cube) CHECK(a == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> fam =
      areas_from_support(family_normal_vec(), family_support(1.0, 2.0));
  const double s2 = std::numbers::sqrt2;
  CHECK(fam[0] == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(fam[1] == doctest::Approx(s2).epsilon(1e-9));
  CHECK(fam[2] == doctest::Approx(s2).epsilon(1e-9));
  CHECK(fam[3] == doctest::Approx(3.0 * s2).epsilon(1e-9));
  CHECK(fam[4] == doctest::Approx(3.0 * s2).epsilon(1e-9));
}

TEST_CASE("areas_from_support reports zero for inactive halfspaces") {
  auto normals = cube_normals();
  normals.push_back(UnitVector::normalized({1.0, 1.0, 1.0}));
  std::vector<double> support(7, 0.5);
  support[6] = 2.0;  // far outside the unit cube
  const std::vector<double> areas = areas_from_support(normals, support);
  for (int k = 0; k < 6; ++k) CHECK(areas[k] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(areas[6] == 0.0);
}

TEST_CASE("areas_from_support propagates kernel failures") {
  // A slab is unbounded.
  const std::vector<UnitVector> slab = {axis(2, 1.0), axis(2, -1.0)};
  CHECK_THROWS_AS(areas_from_support(slab, {1.0, 1.0}), UnboundedError);
  // Contradictory halfspaces are infeasible.
  auto normals = cube_normals();
  std::vector<double> support(6, 0.5);
  support[1] = -1.0;
  CHECK_THROWS_AS(areas_from_support(normals, support), InfeasibleError);
}

TEST_CASE("prescribed cube areas recover a unit cube") {
  const MinkowskiSolution sol = solve_minkowski({cube_normals(), std::vector<double>(6, 1.0)});
  CHECK(sol.area_residual <= 1e-6);
  CHECK(sol.iterations <= 1000);
  const Polytope want = intersect_halfspaces({{axis(0, 1.0), 0.5},
                                              {axis(0, -1.0), 0.5},
                                              {axis(1, 1.0), 0.5},
                                              {axis(1, -1.0), 0.5},
                                              {axis(2, 1.0), 0.5},
                                              {axis(2, -1.0), 0.5}});
  CHECK(equal_up_to_translation(sol.polytope, want, 1e-5));
  for (double h : sol.support) CHECK(h == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("prescribed box areas recover the right edge lengths") {
  // Areas (2,2,3,3,6,6) on the axis pairs force edges 3, 2, 1 (up to order).
  const MinkowskiProblem problem{cube_normals(), {2.0, 2.0, 3.0, 3.0, 6.0, 6.0}};
  const MinkowskiSolution sol = solve_minkowski(problem, 1e-7);
  CHECK(sol.area_residual <= 1e-7);
  REQUIRE(sol.support.size() == 6);
  const double ex = sol.support[0] + sol.support[1];
  const double ey = sol.support[2] + sol.support[3];
  const double ez = sol.support[4] + sol.support[5];
  CHECK(ex == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(ey == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(ez == doctest::Approx(1.0).epsilon(1e-6));

  // Substituting the solution back reproduces the prescribed areas.
  const std::vector<double> got = areas_from_support(problem.normals, sol.support);
  CHECK(max_rel_area_error(got, problem.areas) <= 1e-6);
}

TEST_CASE("prescribed roof areas recover the roof body") {
  const std::vector<double> target = family_areas(1.0, 2.0);
  const MinkowskiSolution sol = solve_minkowski({family_normal_vec(), target});
  const Polytope want = build_polytope({1.0, 2.0});
  CHECK(sol.area_residual <= 1e-6);
  CHECK(equal_up_to_translation(sol.polytope, want, 1e-5 * want.diameter()));
}

TEST_CASE("solver rejects data that cannot close") {
  try {
    solve_minkowski({family_normal_vec(), std::vector<double>(5, 1.0)});
    FAIL("expected ConditionsViolatedError");
  } catch (const ConditionsViolatedError& e) {
    CHECK(e.report.normals_ok);
    CHECK(e.report.areas_positive);
    CHECK_FALSE(e.report.closure_ok);
  }
}

TEST_CASE("iteration budget is enforced") {
  const MinkowskiProblem problem{cube_normals(), {2.0, 2.0, 3.0, 3.0, 6.0, 6.0}};
  try {
    solve_minkowski(problem, 1e-7, 1);
    FAIL("expected NonConvergenceError");
  } catch (const NonConvergenceError& e) {
    CHECK(e.iterations == 1);
    CHECK(e.residual > 1e-7);
  }
}

TEST_CASE("solution scales like the prescription") {
  // Scaling areas by s^2 must scale the recovered body by s.
  const std::vector<double> base = family_areas(1.0, 2.0);
  const double s = 2.5;
  std::vector<double> scaled = base;
  for (double& a : scaled) a *= s * s;
  const MinkowskiSolution sol1 = solve_minkowski({family_normal_vec(), base}, 1e-7);
  const MinkowskiSolution sol2 = solve_minkowski({family_normal_vec(), scaled}, 1e-7);
  const double d1 = sol1.polytope.diameter();
  const double d2 = sol2.polytope.diameter();
  CHECK(d2 / d1 == doctest::Approx(s).epsilon(1e-5));
}

TEST_CASE("round trips through random roof bodies") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double x = std::pow(10.0, u(rng));
    const double y = std::pow(10.0, u(rng));
    const std::vector<double> target = family_areas(x, y);
    const MinkowskiSolution sol = solve_minkowski({family_normal_vec(), target});
    const Polytope want = build_polytope({x, y});
    CHECK(equal_up_to_translation(sol.polytope, want, 1e-4 * want.diameter()));
    const std::vector<double> got = areas_from_support(family_normal_vec(), sol.support);
    CHECK(max_rel_area_error(got, target) <= 2e-6);
  }
}

TEST_CASE("round trips through random simplicial prescriptions") {
  // Random normals, areas measured from an actual bounded body, solved back.
  std::mt19937 rng(31415);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> uoff(0.8, 1.2);
  int done = 0;
  int attempts = 0;
  while (done < 20) {
    REQUIRE(++attempts < 2000);
    const int m = 6 + static_cast<int>(rng() % 5);
    std::vector<HalfSpace> halfspaces;
    for (int k = 0; k < m; ++k) {
      Vec3 n{gauss(rng), gauss(rng), gauss(rng)};
      if (norm(n) < 1e-3) continue;
      halfspaces.push_back({UnitVector::normalized(n), uoff(rng)});
    }
    if (static_cast<int>(halfspaces.size()) != m) continue;

    std::vector<UnitVector> normals;
    for (const HalfSpace& h : halfspaces) normals.push_back(h.normal);
    std::vector<double> support;
    for (const HalfSpace& h : halfspaces) support.push_back(h.offset);

    std::vector<double> areas;
    try {
      areas = areas_from_support(normals, support);
    } catch (const GeometryError&) {
      continue;  // unbounded draw; try again
    }

    // Keep only instances where every halfspace is active and the face areas
    // are not wildly unbalanced, so the gradient never drops under rounding.
    const double amax = *std::max_element(areas.begin(), areas.end());
    const double amin = *std::min_element(areas.begin(), areas.end());
    if (amin <= 0.05 * amax) continue;

    const MinkowskiSolution sol = solve_minkowski({normals, areas}, 1e-6, 20000);
    CHECK(sol.area_residual <= 1e-6);
    const std::vector<double> got = areas_from_support(normals, sol.support);
    CHECK(max_rel_area_error(got, areas) <= 2e-6);
    ++done;
  }
}

TEST_CASE("face areas are the volume gradient in the support values") {
  // Central differences of the volume in each offset equal the face areas,
  // at jiggled supports so no symmetry hides an error.
  std::mt19937 rng(5050);
  std::uniform_real_distribution<double> jiggle(-0.05, 0.05);

  auto check_gradient = [&](const std::vector<UnitVector>& normals,
                            std::vector<double> support, double scale) {
    const std::vector<double> areas = areas_from_support(normals, support);
    const double delta = 1e-5 * scale;
    for (std::size_t k = 0; k < normals.size(); ++k) {
      std::vector<HalfSpace> plus, minus;
      for (std::size_t j = 0; j < normals.size(); ++j) {
        const double dj = j == k ? delta : 0.0;
        plus.push_back({normals[j], support[j] + dj});
        minus.push_back({normals[j], support[j] - dj});
      }
      const double fd =
          (volume(intersect_halfspaces(plus)) - volume(intersect_halfspaces(minus))) /
          (2.0 * delta);
      CHECK(fd == doctest::Approx(areas[k]).epsilon(1e-5));
    }
  };

  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> s(6, 0.5);
    for (double& h : s) h += jiggle(rng);
    check_gradient(cube_normals(), s, 1.0);
  }
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> s = family_support(1.0, 2.0);
    for (double& h : s) h += 0.2 * jiggle(rng);
    check_gradient(family_normal_vec(), s, 1.0);
  }
}
