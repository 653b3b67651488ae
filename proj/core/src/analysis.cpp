#include "confgeo/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace confgeo {

namespace {

Eigen::MatrixXd columns_matrix(const std::vector<PerimeterVector>& vectors) {
  Eigen::MatrixXd m(5, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    for (int i = 0; i < 5; ++i) {
      m(i, static_cast<Eigen::Index>(j)) = vectors[j][i];
    }
  }
  return m;
}

int numerical_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) {
    return 0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) {
    return 0;
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankTol * sv(0)) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace

SubspaceBasis make_subspace_basis(std::vector<PerimeterVector> vectors) {
  if (vectors.empty()) {
    return SubspaceBasis{{}, 0};
  }
  if (vectors.size() > 5) {
    throw std::invalid_argument("subspace basis: more than 5 vectors in R^5");
  }
  const Eigen::MatrixXd m = columns_matrix(vectors);
  const int rank = numerical_rank(m);
  if (rank != static_cast<int>(vectors.size())) {
    throw std::invalid_argument("subspace basis: vectors are linearly dependent");
  }
  SubspaceBasis basis;
  basis.vectors = std::move(vectors);
  basis.dim = rank;
  return basis;
}

SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.dim == 0 || b.dim == 0) {
    return SubspaceBasis{{}, 0};
  }
  // Solve A c = B d: the null space of [A | -B] parameterizes all coincident
  // combinations, and mapping each null vector through A yields a basis of
  // the intersection (the images are independent because A has full column
  // rank and distinct null vectors differ in their c-part).
  const Eigen::MatrixXd ma = columns_matrix(a.vectors);
  const Eigen::MatrixXd mb = columns_matrix(b.vectors);
  Eigen::MatrixXd stacked(5, ma.cols() + mb.cols());
  stacked << ma, -mb;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;

  SubspaceBasis result;
  for (Eigen::Index j = 0; j < svd.matrixV().cols(); ++j) {
    const bool in_null_space =
        j >= sv.size() || sv(j) <= kRankTol * std::max(scale, 1.0);
    if (!in_null_space) {
      continue;
    }
    const Eigen::VectorXd c = svd.matrixV().col(j).head(ma.cols());
    const Eigen::VectorXd mapped = ma * c;
    PerimeterVector v;
    for (int i = 0; i < 5; ++i) {
      v[i] = mapped(i);
    }
    result.vectors.push_back(v);
  }
  result.dim = static_cast<int>(result.vectors.size());
  return result;
}

double minor_check() {
  const BasisVectors basis = basis_vectors();
  const PerimeterVector& r0 = basis.vI;
  const PerimeterVector& r1 = basis.vII;
  const PerimeterVector& r2 = basis.vIII;
  // 3x3 determinant on columns 0, 2, 4 (expansion along the first row).
  const double a = r0[0], b = r0[2], c = r0[4];
  const double d = r1[0], e = r1[2], f = r1[4];
  const double g = r2[0], h = r2[2], i = r2[4];
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

ProbeReport probe_line(const PerimeterVector& center, const PerimeterVector& direction,
                       double radius, int steps) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("probe_line: radius must be positive");
  }
  if (steps < 8) {
    throw std::invalid_argument("probe_line: need at least 8 steps per side");
  }
  if (norm(direction) < 1e-12) {
    throw DegenerateDirectionError("probe_line: direction is numerically zero");
  }

  ProbeReport report;
  report.center = center;
  report.direction = direction;
  report.samples.reserve(static_cast<std::size_t>(2 * steps));

  // Ascending t, skipping t = 0 so every sample lies strictly on one side.
  for (int j = steps; j >= 1; --j) {
    const double t = -static_cast<double>(j) * radius / steps;
    report.samples.push_back({t, classify(center + t * direction)});
  }
  for (int j = 1; j <= steps; ++j) {
    const double t = static_cast<double>(j) * radius / steps;
    report.samples.push_back({t, classify(center + t * direction)});
  }

  // Group consecutive member samples into intervals, per side.
  const auto is_member = [](const ProbeSample& s) {
    return s.verdict.verdict != FamilyType::NotMember;
  };
  std::size_t run_start = 0;
  bool in_run = false;
  for (std::size_t i = 0; i <= report.samples.size(); ++i) {
    const bool member_here = i < report.samples.size() && is_member(report.samples[i]);
    const bool same_side =
        in_run && i < report.samples.size() &&
        (report.samples[i].t > 0.0) == (report.samples[run_start].t > 0.0);
    if (member_here && (!in_run || same_side)) {
      if (!in_run) {
        run_start = i;
        in_run = true;
      }
      continue;
    }
    if (in_run) {
      const std::size_t last = i - 1;
      report.branch_intervals.push_back({report.samples[run_start].t,
                                         report.samples[last].t,
                                         report.samples[run_start].t > 0.0 ? 1 : -1});
      in_run = false;
    }
    if (member_here) {
      run_start = i;
      in_run = true;
    }
  }

  // Innermost samples sit at indices steps-1 (t = -radius/steps) and steps.
  const std::size_t inner_neg = static_cast<std::size_t>(steps - 1);
  const std::size_t inner_pos = static_cast<std::size_t>(steps);
  report.half_branch_count = (is_member(report.samples[inner_neg]) ? 1 : 0) +
                             (is_member(report.samples[inner_pos]) ? 1 : 0);
  return report;
}

ConvexityWitness convexity_witness() {
  const BasisVectors basis = basis_vectors();
  const double s = 0.1;
  ConvexityWitness w;
  w.p1 = basis.vII + s * basis.vI;
  w.p2 = basis.vII + s * basis.vIII;
  w.mid = 0.5 * (w.p1 + w.p2);
  w.verdict_p1 = classify(w.p1);
  w.verdict_p2 = classify(w.p2);
  w.verdict_mid = classify(w.mid);
  return w;
}

double area_closure_residual(const std::vector<UnitVector>& normals,
                             const std::vector<double>& areas) {
  if (normals.size() != areas.size()) {
    throw std::invalid_argument("area_closure_residual: size mismatch");
  }
  Vec3 sum{0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < normals.size(); ++k) {
    sum = sum + areas[k] * normals[k].vec();
  }
  return dot(sum, sum);
}

}  // namespace confgeo
