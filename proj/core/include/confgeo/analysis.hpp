#pragma once

#include <stdexcept>
#include <vector>

#include "confgeo/family.hpp"
#include "confgeo/geometry.hpp"

namespace confgeo {

// Relative singular-value threshold for numerical rank decisions on the small
// basis matrices handled here.
inline constexpr double kRankTol = 1e-10;

// Linearly independent spanning set of a subspace of R^5.
struct SubspaceBasis {
  std::vector<PerimeterVector> vectors;
  int dim = 0;
};

struct ProbeSample {
  double t = 0.0;
  FamilyClassification verdict;
};

// Maximal run of consecutive member samples on one side of t = 0.
struct BranchInterval {
  double t_lo = 0.0;
  double t_hi = 0.0;
  int sign = 0;  // -1 or +1
};

// Result of classifying points along the line center + t * direction.
// half_branch_count counts the sides of t = 0 whose innermost sample is a
// member: half-branches are a germ notion, so only behavior adjacent to the
// center matters.
struct ProbeReport {
  PerimeterVector center;
  PerimeterVector direction;
  std::vector<ProbeSample> samples;
  int half_branch_count = 0;
  std::vector<BranchInterval> branch_intervals;
};

struct ConvexityWitness {
  PerimeterVector p1;
  PerimeterVector p2;
  PerimeterVector mid;
  FamilyClassification verdict_p1;
  FamilyClassification verdict_p2;
  FamilyClassification verdict_mid;
};

struct DegenerateDirectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Validated basis: throws std::invalid_argument if the vectors fail the
// kRankTol independence test.
SubspaceBasis make_subspace_basis(std::vector<PerimeterVector> vectors);

// Basis of span(a) intersected with span(b), computed from the null space of
// the stacked coefficient system. A zero intersection returns dim 0 with an
// empty basis.
SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b);

// Determinant of the 3x3 submatrix of rows (vI, vII, vIII) on columns 1, 3, 5.
// Nonzero iff the three basis vectors are linearly independent.
double minor_check();

// Classify 2*steps points t = +-j*radius/steps, j = 1..steps, so the innermost
// sample on each side sits at |t| = radius/steps.
ProbeReport probe_line(const PerimeterVector& center, const PerimeterVector& direction,
                       double radius, int steps);

// Fixed midpoint construction: two members whose midpoint is not a member.
ConvexityWitness convexity_witness();

// Value of the closure polynomial ||sum_k F_k n_k||^2; zero exactly when the
// area-weighted normals cancel.
double area_closure_residual(const std::vector<UnitVector>& normals,
                             const std::vector<double>& areas);

}  // namespace confgeo
