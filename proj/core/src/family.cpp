#include "confgeo/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace confgeo {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

double abs_scale(const PerimeterVector& L) {
  double s = 1.0;
  for (std::size_t i = 0; i < 5; ++i) s = std::max(s, std::abs(L[i]));
  return s;
}

// Projection coefficients onto an orthogonal pair, no membership check.
std::pair<double, double> project_pair(const PerimeterVector& L, const PerimeterVector& b1,
                                       const PerimeterVector& b2) {
  return {dot(L, b1) / dot(b1, b1), dot(L, b2) / dot(b2, b2)};
}

}  // namespace

std::array<UnitVector, 5> canonical_normals() {
  const double r = 1.0 / kSqrt2;
  return {
      UnitVector(Vec3{0.0, 0.0, -1.0}),
      UnitVector(Vec3{r, 0.0, r}),
      UnitVector(Vec3{-r, 0.0, r}),
      UnitVector(Vec3{0.0, r, r}),
      UnitVector(Vec3{0.0, -r, r}),
  };
}

Polytope build_polytope(const FamilyParams& p) {
  if (!(p.x > 0.0) || !(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
    throw InvalidParamsError("build_polytope: x > 0 and y > 0 required");
  const auto n = canonical_normals();
  const Vec3 c = p.base_center;
  // Base in the plane z = c.z; the four roof planes pass through the base
  // edges at x-extent +-y and y-extent +-x.
  const std::vector<HalfSpace> hs = {
      {n[0], -c.z},
      {n[1], (c.x + p.y + c.z) / kSqrt2},
      {n[2], (p.y - c.x + c.z) / kSqrt2},
      {n[3], (c.y + p.x + c.z) / kSqrt2},
      {n[4], (p.x - c.y + c.z) / kSqrt2},
  };
  return intersect_halfspaces(hs);
}

PerimeterVector perimeters_from_xy(const FamilyParams& p) {
  if (!(p.x > 0.0) || !(p.y > 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y))
    throw InvalidParamsError("perimeters_from_xy: x > 0 and y > 0 required");
  const double x = std::min(p.x, p.y);
  const double y = std::max(p.x, p.y);
  const double base = 4.0 * x + 4.0 * y;
  const double tri = 2.0 * (1.0 + kSqrt3) * x;         // short-edge faces, x <= y
  const double trap = 2.0 * (kSqrt3 - 1.0) * x + 4.0 * y;  // long-edge faces, x <= y
  if (p.x <= p.y) return PerimeterVector{{base, tri, tri, trap, trap}};
  return PerimeterVector{{base, trap, trap, tri, tri}};
}

FamilyParams xy_from_perimeters(const PerimeterVector& L) {
  return xy_from_perimeters(L, classify(L).verdict);
}

FamilyParams xy_from_perimeters(const PerimeterVector& L, FamilyType verdict) {
  if (verdict == FamilyType::NotMember)
    throw NotInFamilyError("xy_from_perimeters: perimeters are not realizable by the family");
  if (verdict == FamilyType::TypeIII) {
    // Quarter-turn reduction: components (2,3) <-> (4,5) and x <-> y.
    const double y = L[3] * (kSqrt3 - 1.0) / 4.0;
    const double x = L[3] * (kSqrt3 - 2.0) / 4.0 + L[1] / 4.0;
    return FamilyParams{x, y};
  }
  const double x = L[1] * (kSqrt3 - 1.0) / 4.0;
  const double y = L[1] * (kSqrt3 - 2.0) / 4.0 + L[3] / 4.0;
  return FamilyParams{x, y};
}

FamilyClassification classify(const PerimeterVector& L, double tol) {
  const BasisVectors b = basis_vectors();
  const double scale = abs_scale(L);

  // Equality residuals of the three condition sets, scaled by max(|L_k|, 1).
  const double eq_pairs = std::max(std::abs(L[1] - L[2]), std::abs(L[3] - L[4]));
  const double res_ii = std::max({std::abs(L[0] - 2.0 * (kSqrt3 - 1.0) * L[1]), eq_pairs,
                                  std::abs(L[1] - L[3])}) /
                        scale;
  const double res_i =
      std::max(std::abs(L[0] - (2.0 * kSqrt3 - 3.0) * L[1] - L[3]), eq_pairs) / scale;
  const double res_iii =
      std::max(std::abs(L[0] - L[1] - (2.0 * kSqrt3 - 3.0) * L[3]), eq_pairs) / scale;

  // Type II first: the boundary ray must win ties against the open angles
  // glued to it on either side.
  if (res_ii <= tol && L[1] > tol * scale) {
    const double gamma = dot(L, b.vII) / dot(b.vII, b.vII);
    return {FamilyType::TypeII, std::make_pair(gamma, 0.0), res_ii};
  }
  if (res_i <= tol && L[3] - L[1] > tol * scale && L[1] > tol * scale)
    return {FamilyType::TypeI, project_pair(L, b.vI, b.vII), res_i};
  if (res_iii <= tol && L[1] - L[3] > tol * scale && L[3] > tol * scale)
    return {FamilyType::TypeIII, project_pair(L, b.vIII, b.vII), res_iii};
  return {FamilyType::NotMember, std::nullopt, std::min({res_i, res_ii, res_iii})};
}

std::pair<double, double> decompose(const PerimeterVector& L, LambdaPlane plane) {
  const BasisVectors b = basis_vectors();
  const PerimeterVector& b1 = (plane == LambdaPlane::LambdaI) ? b.vI : b.vIII;
  const auto [c1, c2] = project_pair(L, b1, b.vII);
  const PerimeterVector recon = c1 * b1 + c2 * b.vII;
  if (norm(L - recon) > kClassTol * std::max(1.0, norm(L)))
    throw NotInPlaneError("decompose: point does not lie in the requested plane");
  return {c1, c2};
}

BasisVectors basis_vectors() {
  const double a = 3.0 + 2.0 * kSqrt3;
  return BasisVectors{
      PerimeterVector{{2.0, -a, -a, 5.0, 5.0}},
      PerimeterVector{{2.0 * (kSqrt3 - 1.0), 1.0, 1.0, 1.0, 1.0}},
      PerimeterVector{{2.0, 5.0, 5.0, -a, -a}},
  };
}

const char* family_type_name(FamilyType t) {
  switch (t) {
    case FamilyType::TypeI: return "TypeI";
    case FamilyType::TypeII: return "TypeII";
    case FamilyType::TypeIII: return "TypeIII";
    default: return "NotMember";
  }
}

const char* family_type_display(FamilyType t) {
  switch (t) {
    case FamilyType::TypeI: return "Type I";
    case FamilyType::TypeII: return "Type II";
    case FamilyType::TypeIII: return "Type III";
    default: return "not a member";
  }
}

}  // namespace confgeo
