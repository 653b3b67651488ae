#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace confgeo {

// Base tolerance for geometric predicates on unit-scale data. Every
// comparison against it is scaled by the relevant extent (max offset,
// polytope diameter) so that large and small bodies behave alike.
inline constexpr double kGeomTol = 1e-9;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

// A direction of unit length. The constructor rejects vectors whose length
// deviates from 1 by more than 1e-12; use normalized() to rescale first.
class UnitVector {
 public:
  explicit UnitVector(const Vec3& v) : v_(v) {
    if (!is_finite(v) || std::abs(norm(v) - 1.0) > 1e-12)
      throw std::invalid_argument("UnitVector: length must be 1 within 1e-12");
  }
  static UnitVector normalized(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("UnitVector::normalized: zero or non-finite vector");
    return UnitVector(Vec3{v.x / n, v.y / n, v.z / n});
  }
  const Vec3& vec() const { return v_; }

 private:
  Vec3 v_;
};

// Halfspace { p : <p, normal> <= offset }. The offset is the signed support
// value of the bounding plane in the normal direction.
struct HalfSpace {
  UnitVector normal;
  double offset = 0.0;
};

// Planar face of a polytope. The vertex cycle runs counterclockwise when the
// face is viewed from outside the body (looking along -normal), starting at
// the smallest vertex index. vertex_indices points into Polytope::vertices
// and runs parallel to vertices.
struct Face {
  UnitVector normal;
  std::vector<Vec3> vertices;
  std::vector<std::size_t> vertex_indices;
  double perimeter = 0.0;
  double area = 0.0;
};

// Bounded 3D convex body in H-representation plus the derived V-data.
// Faces are stored in halfspace order; face_halfspace[i] is the index of the
// halfspace whose plane carries faces[i]. Redundant halfspaces (touching the
// body in less than a 2-face) carry no face.
struct Polytope {
  std::vector<HalfSpace> halfspaces;
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
  std::vector<std::size_t> face_halfspace;

  Vec3 vertex_centroid() const;
  double diameter() const;
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Empty intersection.
struct InfeasibleError : GeometryError {
  using GeometryError::GeometryError;
};
// A nonzero recession direction exists (normals do not positively span R^3).
struct UnboundedError : GeometryError {
  using GeometryError::GeometryError;
};
// Intersection has affine dimension < 3.
struct DegenerateError : GeometryError {
  using GeometryError::GeometryError;
};

// Intersect halfspaces into a bounded polytope: vertices are deduplicated
// solutions of 3x3 systems from normal triples satisfying all inequalities,
// faces are grouped per halfspace with angle-ordered vertex cycles.
// Throws UnboundedError, InfeasibleError or DegenerateError.
Polytope intersect_halfspaces(const std::vector<HalfSpace>& halfspaces);

// Sum of Euclidean edge lengths of the vertex cycle.
double face_perimeter(const Face& f);

// Planar polygon area of the vertex cycle (positive for the stored
// counterclockwise orientation).
double face_area(const Face& f);

// Normals that attain a 2-dimensional face, in face order.
std::vector<UnitVector> face_normal_set(const Polytope& p);

// Dimension (0, 1 or 2) of the subset of the polytope touching its support
// plane in direction n: vertex, edge or face.
int support_touch_dimension(const Polytope& p, const UnitVector& n);

// True iff translating q by (centroid(p) - centroid(q)) matches the vertex
// sets pairwise within tol.
bool equal_up_to_translation(const Polytope& p, const Polytope& q, double tol);

// Volume via fan decomposition from the vertex centroid.
double volume(const Polytope& p);

}  // namespace confgeo
