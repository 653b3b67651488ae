#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "confgeo/geometry.hpp"

namespace confgeo {

// Relative tolerance for the family membership equalities. Strict
// inequalities must clear this band as a margin; points inside the band
// classify as the boundary type (Type II).
inline constexpr double kClassTol = 1e-9;

// A point (L1,...,L5) of face perimeters, treated as a vector in R^5.
struct PerimeterVector {
  std::array<double, 5> values{};

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
};

inline PerimeterVector operator+(const PerimeterVector& a, const PerimeterVector& b) {
  PerimeterVector r;
  for (std::size_t i = 0; i < 5; ++i) r[i] = a[i] + b[i];
  return r;
}
inline PerimeterVector operator-(const PerimeterVector& a, const PerimeterVector& b) {
  PerimeterVector r;
  for (std::size_t i = 0; i < 5; ++i) r[i] = a[i] - b[i];
  return r;
}
inline PerimeterVector operator*(double s, const PerimeterVector& a) {
  PerimeterVector r;
  for (std::size_t i = 0; i < 5; ++i) r[i] = s * a[i];
  return r;
}
inline double dot(const PerimeterVector& a, const PerimeterVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 5; ++i) s += a[i] * b[i];
  return s;
}
inline double norm(const PerimeterVector& a) { return std::sqrt(dot(a, a)); }

// Construction parameters of the five-normal family: the base rectangle has
// edge lengths 2x (along e2) and 2y (along e1) and sits in the plane through
// base_center orthogonal to e3.
struct FamilyParams {
  double x = 0.0;
  double y = 0.0;
  Vec3 base_center{0.0, 0.0, 0.0};
};

// Combinatorial shape of a family member: Type I has its roof ridge parallel
// to the long base edge (x < y), Type II is the pyramid (x = y), Type III has
// the ridge rotated a quarter turn (x > y).
enum class FamilyType { TypeI, TypeII, TypeIII, NotMember };

// Classification verdict. For Type I, coeffs = (alpha, beta) with
// L = alpha*vI + beta*vII; for Type II, coeffs = (gamma, 0) with L = gamma*vII;
// for Type III, coeffs = (delta, epsilon) with L = delta*vIII + epsilon*vII.
// residual is the worst equality violation scaled by max(|L_k|, 1); for
// NotMember it is the minimum such residual over the three candidate types.
struct FamilyClassification {
  FamilyType verdict = FamilyType::NotMember;
  std::optional<std::pair<double, double>> coeffs;
  double residual = 0.0;
};

struct BasisVectors {
  PerimeterVector vI;
  PerimeterVector vII;
  PerimeterVector vIII;
};

enum class LambdaPlane { LambdaI, LambdaIII };

struct InvalidParamsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInPlaneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The five outward unit normals of the family, in canonical order: straight
// down, then the four roof directions at 45 degrees.
std::array<UnitVector, 5> canonical_normals();

// The two roof planes through the short base edges, the two through the long
// ones and the base plane, intersected into the (6- or 5-vertex) roof body.
Polytope build_polytope(const FamilyParams& p);

// Closed-form face perimeters. For x > y the construction is the x < y one
// rotated a quarter turn about e3, which swaps the roles of (L2, L3) and
// (L4, L5) along with x and y.
PerimeterVector perimeters_from_xy(const FamilyParams& p);

// Inverse of perimeters_from_xy on the membership set. Throws NotInFamilyError
// if L does not classify.
FamilyParams xy_from_perimeters(const PerimeterVector& L);

// Same inversion for a verdict already in hand (e.g. classified at a custom
// tolerance); trusts the verdict instead of re-classifying.
FamilyParams xy_from_perimeters(const PerimeterVector& L, FamilyType verdict);

// Decide membership and type. Type II is tested first so that points within
// the tolerance band of the shared boundary ray classify as the boundary type.
FamilyClassification classify(const PerimeterVector& L, double tol = kClassTol);

// Coordinates of L in the orthogonal basis (vI, vII) or (vIII, vII) of the
// requested plane. Throws NotInPlaneError if the reconstruction residual
// exceeds the class tolerance.
std::pair<double, double> decompose(const PerimeterVector& L, LambdaPlane plane);

BasisVectors basis_vectors();

const char* family_type_name(FamilyType t);     // "TypeI", ..., "NotMember"
const char* family_type_display(FamilyType t);  // "Type I", ..., "not a member"

}  // namespace confgeo
