#pragma once

#include <stdexcept>
#include <vector>

#include "confgeo/geometry.hpp"

namespace confgeo {

// Relative tolerance for the area-closure identity sum_k F_k n_k = 0.
inline constexpr double kClosureTol = 1e-9;

// Prescribed face data: recover a polytope whose face normal to normals[k]
// has area areas[k].
struct MinkowskiProblem {
  std::vector<UnitVector> normals;
  std::vector<double> areas;
};

struct ConditionReport {
  bool normals_ok = false;     // distinct directions, not all coplanar
  bool areas_positive = false; // every prescribed area > 0
  bool closure_ok = false;     // area-weighted normals cancel
  double closure_residual = 0.0;

  bool all_ok() const { return normals_ok && areas_positive && closure_ok; }
};

struct MinkowskiSolution {
  std::vector<double> support;  // offsets h_k of the recovered polytope
  Polytope polytope;
  double area_residual = 0.0;   // max_k |area_k(h) - F_k| / F_k
  int iterations = 0;
};

struct ConditionsViolatedError : std::runtime_error {
  ConditionsViolatedError(const std::string& what, ConditionReport rep)
      : std::runtime_error(what), report(rep) {}
  ConditionReport report;
};

struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& what, double res, int iters)
      : std::runtime_error(what), residual(res), iterations(iters) {}
  double residual;
  int iterations;
};

ConditionReport check_conditions(const MinkowskiProblem& problem);

// Face areas of the intersection of {<p, n_k> <= h_k}, indexed like the
// normals; a normal whose halfspace is inactive contributes 0.
std::vector<double> areas_from_support(const std::vector<UnitVector>& normals,
                                       const std::vector<double>& support);

// Existence-proof construction made effective: maximize volume over the
// affine slice <F, h> = 1 by projected gradient ascent (the volume gradient
// in h is the area vector), then rescale so the areas match exactly in the
// limit. Throws ConditionsViolatedError or NonConvergenceError.
MinkowskiSolution solve_minkowski(const MinkowskiProblem& problem,
                                  double tolerance = 1e-6, int max_iterations = 10000);

}  // namespace confgeo
