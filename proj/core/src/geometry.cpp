#include "confgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace confgeo {

namespace {

// Rank of the set of normals, judged against unit scale.
int direction_rank(const std::vector<HalfSpace>& hs, double tol) {
  if (hs.empty()) return 0;
  const Vec3 first = hs[0].normal.vec();
  std::size_t i1 = hs.size();
  for (std::size_t i = 1; i < hs.size(); ++i) {
    if (norm(cross(first, hs[i].normal.vec())) > tol) {
      i1 = i;
      break;
    }
  }
  if (i1 == hs.size()) return 1;
  const Vec3 plane_normal = cross(first, hs[i1].normal.vec());
  for (std::size_t i = i1 + 1; i < hs.size(); ++i) {
    if (std::abs(dot(plane_normal, hs[i].normal.vec())) > tol * norm(plane_normal)) return 3;
  }
  return 2;
}

// The intersection is bounded iff the recession cone {d : <n_k,d> <= 0} is
// trivial, i.e. the normals positively span R^3 (0 lies in the interior of
// their convex hull). For rank-3 normal sets a nonzero recession cone always
// contains a ray cut out by two of the constraints, so scanning the pairwise
// cross products is an exact test at this scale.
bool positively_spans(const std::vector<HalfSpace>& hs, double tol) {
  if (direction_rank(hs, tol) < 3) return false;
  const std::size_t m = hs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec3 d = cross(hs[i].normal.vec(), hs[j].normal.vec());
      const double len = norm(d);
      if (len <= tol) continue;
      d = (1.0 / len) * d;
      for (const Vec3 ray : {d, -d}) {
        bool recession = true;
        for (std::size_t k = 0; k < m; ++k) {
          if (dot(hs[k].normal.vec(), ray) > tol) {
            recession = false;
            break;
          }
        }
        if (recession) return false;
      }
    }
  }
  return true;
}

// Orthonormal in-plane basis (u, v) with u x v = n.
void plane_basis(const Vec3& n, Vec3& u, Vec3& v) {
  const Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  u = cross(seed, n);
  u = (1.0 / norm(u)) * u;
  v = cross(n, u);
}

struct VertexCluster {
  Vec3 sum{};
  int count = 0;
  Vec3 mean() const { return (1.0 / count) * sum; }
};

int affine_dimension(const std::vector<Vec3>& pts, double tol) {
  if (pts.size() <= 1) return 0;
  Vec3 d1{};
  std::size_t i1 = pts.size();
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (norm(pts[i] - pts[0]) > tol) {
      d1 = pts[i] - pts[0];
      i1 = i;
      break;
    }
  }
  if (i1 == pts.size()) return 0;
  Vec3 n{};
  std::size_t i2 = pts.size();
  for (std::size_t i = i1 + 1; i < pts.size(); ++i) {
    const Vec3 c = cross(d1, pts[i] - pts[0]);
    if (norm(c) > tol * norm(d1)) {
      n = c;
      i2 = i;
      break;
    }
  }
  if (i2 == pts.size()) return 1;
  for (std::size_t i = i2 + 1; i < pts.size(); ++i) {
    if (std::abs(dot(n, pts[i] - pts[0])) > tol * norm(n)) return 3;
  }
  return 2;
}

}  // namespace

Vec3 Polytope::vertex_centroid() const {
  Vec3 c{};
  for (const Vec3& v : vertices) c = c + v;
  return vertices.empty() ? c : (1.0 / static_cast<double>(vertices.size())) * c;
}

double Polytope::diameter() const {
  double d2 = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const Vec3 d = vertices[i] - vertices[j];
      d2 = std::max(d2, dot(d, d));
    }
  return std::sqrt(d2);
}

Polytope intersect_halfspaces(const std::vector<HalfSpace>& halfspaces) {
  for (const HalfSpace& h : halfspaces) {
    if (!std::isfinite(h.offset)) throw std::invalid_argument("intersect_halfspaces: non-finite offset");
  }
  if (!positively_spans(halfspaces, 1e-12))
    throw UnboundedError("intersect_halfspaces: normals do not positively span R^3");

  const std::size_t m = halfspaces.size();
  double offset_scale = 1.0;
  for (const HalfSpace& h : halfspaces) offset_scale = std::max(offset_scale, std::abs(h.offset));
  const double feas_tol = kGeomTol * offset_scale;

  // Brute-force vertex enumeration over normal triples. m stays small
  // throughout, so O(m^3) triples beat any pivoting scheme here.
  std::vector<Vec3> candidates;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vec3 ni = halfspaces[i].normal.vec();
        const Vec3 nj = halfspaces[j].normal.vec();
        const Vec3 nk = halfspaces[k].normal.vec();
        const double det = dot(ni, cross(nj, nk));
        if (std::abs(det) < 1e-10) continue;
        const Vec3 p = (1.0 / det) * (halfspaces[i].offset * cross(nj, nk) +
                                      halfspaces[j].offset * cross(nk, ni) +
                                      halfspaces[k].offset * cross(ni, nj));
        bool feasible = true;
        for (std::size_t l = 0; l < m; ++l) {
          if (dot(halfspaces[l].normal.vec(), p) > halfspaces[l].offset + feas_tol) {
            feasible = false;
            break;
          }
        }
        if (feasible) candidates.push_back(p);
      }
    }
  }
  if (candidates.empty()) throw InfeasibleError("intersect_halfspaces: empty intersection");

  double diam2 = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Vec3 d = candidates[i] - candidates[j];
      diam2 = std::max(diam2, dot(d, d));
    }
  const double extent = std::max(1.0, std::sqrt(diam2));
  const double merge_tol = kGeomTol * extent;

  // Coincident triple intersections (e.g. a 4-valent apex) must merge into a
  // single vertex; cluster means keep the merged point centered.
  std::vector<VertexCluster> clusters;
  for (const Vec3& p : candidates) {
    bool merged = false;
    for (VertexCluster& c : clusters) {
      if (norm(p - c.mean()) <= merge_tol) {
        c.sum = c.sum + p;
        ++c.count;
        merged = true;
        break;
      }
    }
    if (!merged) clusters.push_back(VertexCluster{p, 1});
  }

  Polytope poly;
  poly.halfspaces = halfspaces;
  poly.vertices.reserve(clusters.size());
  for (const VertexCluster& c : clusters) poly.vertices.push_back(c.mean());
  std::sort(poly.vertices.begin(), poly.vertices.end(), [](const Vec3& a, const Vec3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });

  if (poly.vertices.size() < 4 || affine_dimension(poly.vertices, merge_tol) < 3)
    throw DegenerateError("intersect_halfspaces: intersection has affine dimension < 3");

  const double face_tol = kGeomTol * extent;
  for (std::size_t k = 0; k < m; ++k) {
    const Vec3 n = halfspaces[k].normal.vec();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
      if (halfspaces[k].offset - dot(n, poly.vertices[i]) <= face_tol) active.push_back(i);
    }
    if (active.size() < 3) continue;
    std::vector<Vec3> pts;
    pts.reserve(active.size());
    for (std::size_t i : active) pts.push_back(poly.vertices[i]);
    if (affine_dimension(pts, face_tol) < 2) continue;  // touches only an edge

    // Order the cycle by winding angle; counterclockwise around +n means
    // counterclockwise as seen from outside.
    Vec3 u, v;
    plane_basis(n, u, v);
    Vec3 center{};
    for (const Vec3& p : pts) center = center + p;
    center = (1.0 / static_cast<double>(pts.size())) * center;
    std::vector<std::pair<double, std::size_t>> order;
    order.reserve(active.size());
    for (std::size_t i : active) {
      const Vec3 r = poly.vertices[i] - center;
      order.emplace_back(std::atan2(dot(r, v), dot(r, u)), i);
    }
    std::sort(order.begin(), order.end());

    // Canonical start: rotate so the cycle begins at the smallest index.
    std::size_t start = 0;
    for (std::size_t i = 1; i < order.size(); ++i)
      if (order[i].second < order[start].second) start = i;

    Face face{halfspaces[k].normal, {}, {}, 0.0, 0.0};
    face.vertices.reserve(order.size());
    face.vertex_indices.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const std::size_t idx = order[(start + i) % order.size()].second;
      face.vertices.push_back(poly.vertices[idx]);
      face.vertex_indices.push_back(idx);
    }
    face.perimeter = face_perimeter(face);
    face.area = face_area(face);
    poly.faces.push_back(std::move(face));
    poly.face_halfspace.push_back(k);
  }

  return poly;
}

double face_perimeter(const Face& f) {
  double sum = 0.0;
  const std::size_t n = f.vertices.size();
  for (std::size_t i = 0; i < n; ++i) sum += norm(f.vertices[(i + 1) % n] - f.vertices[i]);
  return sum;
}

double face_area(const Face& f) {
  Vec3 u, v;
  plane_basis(f.normal.vec(), u, v);
  const std::size_t n = f.vertices.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = f.vertices[i];
    const Vec3& b = f.vertices[(i + 1) % n];
    twice += dot(a, u) * dot(b, v) - dot(b, u) * dot(a, v);
  }
  return 0.5 * std::abs(twice);
}

std::vector<UnitVector> face_normal_set(const Polytope& p) {
  std::vector<UnitVector> normals;
  normals.reserve(p.faces.size());
  for (const Face& f : p.faces) normals.push_back(f.normal);
  return normals;
}

int support_touch_dimension(const Polytope& p, const UnitVector& n) {
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec3& v : p.vertices) best = std::max(best, dot(v, n.vec()));
  const double tol = kGeomTol * std::max(1.0, p.diameter());
  std::vector<Vec3> touching;
  for (const Vec3& v : p.vertices)
    if (dot(v, n.vec()) >= best - tol) touching.push_back(v);
  return affine_dimension(touching, tol);
}

bool equal_up_to_translation(const Polytope& p, const Polytope& q, double tol) {
  if (p.vertices.size() != q.vertices.size()) return false;
  const Vec3 shift = p.vertex_centroid() - q.vertex_centroid();
  std::vector<bool> used(q.vertices.size(), false);
  for (const Vec3& vp : p.vertices) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = q.vertices.size();
    for (std::size_t j = 0; j < q.vertices.size(); ++j) {
      if (used[j]) continue;
      const double d = norm(vp - (q.vertices[j] + shift));
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j == q.vertices.size() || best > tol) return false;
    used[best_j] = true;
  }
  return true;
}

double volume(const Polytope& p) {
  const Vec3 c = p.vertex_centroid();
  double vol = 0.0;
  for (const Face& f : p.faces) {
    const double height = dot(f.normal.vec(), f.vertices.front()) - dot(f.normal.vec(), c);
    vol += f.area * height / 3.0;
  }
  return vol;
}

}  // namespace confgeo
