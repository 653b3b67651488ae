#include "confgeo/minkowski.hpp"

#include "confgeo/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace confgeo {

namespace {

double dot5n(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

int normal_rank(const std::vector<UnitVector>& normals) {
  Eigen::MatrixXd m(3, static_cast<Eigen::Index>(normals.size()));
  for (std::size_t j = 0; j < normals.size(); ++j) {
    const Vec3 n = normals[j].vec();
    m(0, static_cast<Eigen::Index>(j)) = n.x;
    m(1, static_cast<Eigen::Index>(j)) = n.y;
    m(2, static_cast<Eigen::Index>(j)) = n.z;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) {
    return 0;
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > 1e-10 * sv(0)) {
      ++rank;
    }
  }
  return rank;
}

Polytope build_from_support(const std::vector<UnitVector>& normals,
                            const std::vector<double>& support) {
  std::vector<HalfSpace> halfspaces;
  halfspaces.reserve(normals.size());
  for (std::size_t k = 0; k < normals.size(); ++k) {
    halfspaces.push_back({normals[k], support[k]});
  }
  return intersect_halfspaces(halfspaces);
}

std::vector<double> face_areas(const Polytope& poly, std::size_t count) {
  std::vector<double> areas(count, 0.0);
  for (std::size_t f = 0; f < poly.faces.size(); ++f) {
    areas[poly.face_halfspace[f]] = poly.faces[f].area;
  }
  return areas;
}

std::vector<double> face_perimeters(const Polytope& poly, std::size_t count) {
  std::vector<double> perimeters(count, 0.0);
  for (std::size_t f = 0; f < poly.faces.size(); ++f) {
    perimeters[poly.face_halfspace[f]] = poly.faces[f].perimeter;
  }
  return perimeters;
}

double relative_area_residual(const std::vector<double>& areas,
                              const std::vector<double>& target) {
  double worst = 0.0;
  for (std::size_t k = 0; k < areas.size(); ++k) {
    worst = std::max(worst, std::abs(areas[k] - target[k]) / target[k]);
  }
  return worst;
}

}  // namespace

ConditionReport check_conditions(const MinkowskiProblem& problem) {
  ConditionReport report;
  const std::size_t m = problem.normals.size();

  bool distinct = m >= 4 && problem.areas.size() == m;
  for (std::size_t i = 0; i < m && distinct; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (norm(problem.normals[i].vec() - problem.normals[j].vec()) <= 1e-8) {
        distinct = false;
        break;
      }
    }
  }
  report.normals_ok = distinct && normal_rank(problem.normals) == 3;

  report.areas_positive =
      problem.areas.size() == m && !problem.areas.empty() &&
      std::all_of(problem.areas.begin(), problem.areas.end(),
                  [](double a) { return a > 0.0; });

  if (problem.areas.size() == m) {
    report.closure_residual = area_closure_residual(problem.normals, problem.areas);
    const double total = std::accumulate(problem.areas.begin(), problem.areas.end(), 0.0);
    report.closure_ok = report.closure_residual <= kClosureTol * total * total;
  }
  return report;
}

std::vector<double> areas_from_support(const std::vector<UnitVector>& normals,
                                       const std::vector<double>& support) {
  const Polytope poly = build_from_support(normals, support);
  return face_areas(poly, normals.size());
}

MinkowskiSolution solve_minkowski(const MinkowskiProblem& problem, double tolerance,
                                  int max_iterations) {
  const ConditionReport report = check_conditions(problem);
  if (!report.all_ok()) {
    throw ConditionsViolatedError("prescribed face data violates the existence conditions",
                                  report);
  }
  if (!(tolerance > 0.0) || max_iterations < 0) {
    throw std::invalid_argument("solve_minkowski: bad tolerance or iteration budget");
  }

  const std::vector<UnitVector>& normals = problem.normals;
  const std::vector<double>& target = problem.areas;
  const std::size_t m = normals.size();
  const double total_area = std::accumulate(target.begin(), target.end(), 0.0);
  const double ff = dot5n(target, target);

  // Start on the constraint slice <F, h> = 1 with the uniform support vector,
  // which contains the origin strictly and is bounded because the closure
  // identity forces the normals to span every halfspace boundary.
  std::vector<double> h(m, 1.0 / total_area);

  Polytope poly = build_from_support(normals, h);
  std::vector<double> areas = face_areas(poly, m);
  double lambda = dot5n(areas, target) / ff;
  auto slice_residual = [&]() {
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      worst = std::max(worst, std::abs(areas[k] - lambda * target[k]) /
                                  (lambda * target[k]));
    }
    return worst;
  };
  double residual = slice_residual();

  int iterations = 0;
  while (residual > tolerance) {
    if (iterations >= max_iterations) {
      throw NonConvergenceError("projected gradient ascent exhausted its iteration budget",
                                residual, iterations);
    }

    // The volume gradient in h is the area vector, so the slice gradient is
    // A - lambda F. Faces of very different sizes make that direction badly
    // conditioned; dividing each component by the face perimeter (the natural
    // scale of dA_k/dh_k) equalizes the per-face rates. Faces currently
    // absent from the body fall back to the mean perimeter.
    const std::vector<double> perimeters = face_perimeters(poly, m);
    double mean_perimeter = 0.0;
    int present = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (perimeters[k] > 0.0) {
        mean_perimeter += perimeters[k];
        ++present;
      }
    }
    mean_perimeter /= present;
    std::vector<double> direction(m);
    for (std::size_t k = 0; k < m; ++k) {
      const double scale = perimeters[k] > 0.0 ? perimeters[k] : mean_perimeter;
      direction[k] = (areas[k] - lambda * target[k]) / scale;
    }

    const double volume_before = volume(poly);
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-18) {
      std::vector<double> candidate(m);
      for (std::size_t k = 0; k < m; ++k) {
        candidate[k] = h[k] + step * direction[k];
      }
      const double constraint = dot5n(candidate, target);
      if (constraint > 0.0) {
        for (double& hk : candidate) {
          hk /= constraint;
        }
        try {
          Polytope trial = build_from_support(normals, candidate);
          const double trial_volume = volume(trial);
          bool take = trial_volume > volume_before;
          if (!take && trial_volume >= volume_before * (1.0 - 1e-13)) {
            // The true volume increment has dropped below the rounding noise
            // of the fan decomposition. The residual still contracts along
            // the gradient, so accept on a clear residual decrease instead.
            const std::vector<double> trial_areas = face_areas(trial, m);
            const double trial_lambda = dot5n(trial_areas, target) / ff;
            double trial_residual = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
              trial_residual = std::max(trial_residual,
                                        std::abs(trial_areas[k] - trial_lambda * target[k]) /
                                            (trial_lambda * target[k]));
            }
            take = trial_residual <= (1.0 - 1e-4) * residual;
          }
          if (take) {
            h = std::move(candidate);
            poly = std::move(trial);
            accepted = true;
            break;
          }
        } catch (const GeometryError&) {
          // Step left the feasible region; shrink and retry.
        }
      }
      step *= 0.5;
    }
    ++iterations;
    if (!accepted) {
      throw NonConvergenceError("line search stalled before reaching the tolerance",
                                residual, iterations);
    }

    areas = face_areas(poly, m);
    lambda = dot5n(areas, target) / ff;
    residual = slice_residual();
  }

  // On the slice the areas equal lambda * F; support vectors scale areas
  // quadratically, so 1/sqrt(lambda) restores the prescribed magnitudes.
  const double scale = 1.0 / std::sqrt(lambda);
  for (double& hk : h) {
    hk *= scale;
  }
  poly = build_from_support(normals, h);

  // Fix the translation freedom: move the vertex centroid to the origin.
  const Vec3 c = poly.vertex_centroid();
  for (std::size_t k = 0; k < m; ++k) {
    h[k] -= dot(normals[k].vec(), c);
  }
  poly = build_from_support(normals, h);

  MinkowskiSolution solution;
  solution.support = h;
  solution.area_residual = relative_area_residual(face_areas(poly, m), target);
  solution.polytope = std::move(poly);
  solution.iterations = iterations;
  return solution;
}

}  // namespace confgeo
