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

#ifndef QWEYL_NUMKERNEL_HPP
#define QWEYL_NUMKERNEL_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "qweyl/errors.hpp"

namespace qweyl {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Central tolerance policy shared by all numeric decisions.
///
/// eps_unitary  unitarity check, max-norm of U†U − I
/// eps_rank     singular-value threshold, relative to the largest
/// eps_eig      eigenphase clustering width, radians
/// eps_match    invariant comparison tolerance
struct TolerancePolicy {
  double eps_unitary = 1e-9;
  double eps_rank = 1e-7;
  double eps_eig = 1e-7;
  double eps_match = 1e-8;

  /// Throws Error unless all tolerances are positive and eps_rank > eps_unitary.
  void validate() const;
};

/// Process-wide default policy, read-only after startup.
const TolerancePolicy& default_tolerance();

/// Absolute floor under the relative singular-value threshold.
inline constexpr double kSigmaFloor = 1e-12;

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

/// Max-norm of U†U − I.
double unitarity_defect(const CMat& u);

bool is_unitary(const CMat& u, double eps);

/// Kronecker product, first factor on the most significant index.
CMat kron(const CMat& a, const CMat& b);

/// The three Pauli matrices, indexed x=0, y=1, z=2.
const std::array<CMat, 3>& paulis();

struct SpecialUnitary {
  CMat matrix;   // determinant 1
  double phase;  // removed global phase: input = e^{i phase} * matrix
};

/// Divides out det(U)^{1/dim} using the principal root; the argument of the
/// determinant is taken in (-pi, pi].
SpecialUnitary special_unitarize(const CMat& u,
                                 const TolerancePolicy& tol = default_tolerance());

/// Eigenphases of a unitary matrix in (-pi, pi], ascending, with algebraic
/// multiplicity.
std::vector<double> eigenphases_unitary(const CMat& m,
                                        const TolerancePolicy& tol = default_tolerance());

/// Single-linkage clustering of sorted phases on the circle (the gap between
/// -pi and pi wraps around). Returns the cluster sizes; they sum to the input
/// length.
std::vector<int> cluster_phases(const std::vector<double>& phases, double eps_eig);

/// Number of columns minus the number of singular values above
/// max(eps_rank * sigma_max, kSigmaFloor).
int nullity(const RMat& m, double eps_rank);

/// Orthonormal columns spanning ker(m); the column count equals nullity(m).
RMat kernel_basis(const RMat& m, double eps_rank);

/// exp(H) for antihermitian H, via eigendecomposition of the hermitian iH.
CMat expm_antihermitian(const CMat& h,
                        const TolerancePolicy& tol = default_tolerance());

}  // namespace qweyl

#endif  // QWEYL_NUMKERNEL_HPP
