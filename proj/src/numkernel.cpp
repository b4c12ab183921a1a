// Copyright 2026 The qweyl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qweyl/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qweyl {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;
}  // namespace

void TolerancePolicy::validate() const {
  if (eps_unitary <= 0 || eps_rank <= 0 || eps_eig <= 0 || eps_match <= 0) {
    throw Error("tolerance policy: all tolerances must be strictly positive");
  }
  if (eps_rank <= eps_unitary) {
    throw Error("tolerance policy: eps_rank must exceed eps_unitary");
  }
}

const TolerancePolicy& default_tolerance() {
  static const TolerancePolicy policy{};
  return policy;
}

double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);  // [-pi, pi]
  if (w <= -kPi) w += kTwoPi;
  return w;
}

double unitarity_defect(const CMat& u) {
  return (u.adjoint() * u - CMat::Identity(u.rows(), u.cols()))
      .cwiseAbs()
      .maxCoeff();
}

bool is_unitary(const CMat& u, double eps) {
  return u.rows() == u.cols() && unitarity_defect(u) <= eps;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const std::array<CMat, 3>& paulis() {
  static const std::array<CMat, 3> p = [] {
    const Complex i(0, 1);
    std::array<CMat, 3> m{CMat(2, 2), CMat(2, 2), CMat(2, 2)};
    m[0] << 0, 1, 1, 0;
    m[1] << 0, -i, i, 0;
    m[2] << 1, 0, 0, -1;
    return m;
  }();
  return p;
}

SpecialUnitary special_unitarize(const CMat& u, const TolerancePolicy& tol) {
  if (!is_unitary(u, tol.eps_unitary)) {
    throw NotUnitary("special_unitarize: input is not unitary");
  }
  Complex det = u.determinant();
  // Scrub signed zeros so exactly real/imaginary determinants hit the
  // principal branch deterministically.
  if (det.real() == 0.0) det = Complex(0.0, det.imag());
  if (det.imag() == 0.0) det = Complex(det.real(), 0.0);
  const double phase = std::arg(det) / static_cast<double>(u.rows());
  return {u * std::polar(1.0, -phase), phase};
}

std::vector<double> eigenphases_unitary(const CMat& m, const TolerancePolicy& tol) {
  if (!is_unitary(m, tol.eps_unitary)) {
    throw NotUnitary("eigenphases_unitary: input is not unitary");
  }
  Eigen::ComplexEigenSolver<CMat> solver(m, /*computeEigenvectors=*/false);
  std::vector<double> phases(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    phases[static_cast<std::size_t>(k)] = wrap_angle(std::arg(solver.eigenvalues()(k)));
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

std::vector<int> cluster_phases(const std::vector<double>& phases, double eps_eig) {
  if (phases.empty()) return {};
  std::vector<int> sizes{1};
  for (std::size_t k = 1; k < phases.size(); ++k) {
    if (phases[k] - phases[k - 1] <= eps_eig) {
      ++sizes.back();
    } else {
      sizes.push_back(1);
    }
  }
  if (sizes.size() > 1) {
    const double wrap_gap = phases.front() + kTwoPi - phases.back();
    if (wrap_gap <= eps_eig) {
      sizes.front() += sizes.back();
      sizes.pop_back();
    }
  }
  return sizes;
}

namespace {

int rank_by_svd(const Eigen::VectorXd& sigma, double eps_rank) {
  if (sigma.size() == 0) return 0;
  const double thresh = std::max(eps_rank * sigma(0), kSigmaFloor);
  int rank = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > thresh) ++rank;
  }
  return rank;
}

}  // namespace

int nullity(const RMat& m, double eps_rank) {
  const int cols = static_cast<int>(m.cols());
  if (m.rows() == 0 || cols == 0) return cols;
  Eigen::JacobiSVD<RMat> svd(m);
  return cols - rank_by_svd(svd.singularValues(), eps_rank);
}

RMat kernel_basis(const RMat& m, double eps_rank) {
  const int cols = static_cast<int>(m.cols());
  if (m.rows() == 0 || cols == 0) return RMat::Identity(cols, cols);
  Eigen::JacobiSVD<RMat> svd(m, Eigen::ComputeFullV);
  const int rank = rank_by_svd(svd.singularValues(), eps_rank);
  return svd.matrixV().rightCols(cols - rank);
}

CMat expm_antihermitian(const CMat& h, const TolerancePolicy& tol) {
  if (h.rows() != h.cols() ||
      (h + h.adjoint()).cwiseAbs().maxCoeff() > tol.eps_unitary) {
    throw BadGenerator("expm_antihermitian: input is not antihermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMat> solver(Complex(0, 1) * h);
  const auto& lambda = solver.eigenvalues();  // real: iH = V diag(lambda) V†
  Eigen::VectorXcd exp_diag(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    exp_diag(k) = std::polar(1.0, -lambda(k));
  }
  return solver.eigenvectors() * exp_diag.asDiagonal() *
         solver.eigenvectors().adjoint();
}

}  // namespace qweyl
