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

#ifndef QWEYL_ETA_HPP
#define QWEYL_ETA_HPP

#include <array>
#include <optional>
#include <vector>

#include "qweyl/gates.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/numkernel.hpp"
#include "qweyl/types.hpp"

namespace qweyl {

/// Orthonormal basis of su(2^n) split into local and nonlocal generators,
/// <X,Y> = tr(X†Y).  Locals are (i/sqrt(2^n)) sigma_a on one qubit, ordered
/// [x q1, y q1, z q1, x q2, ...]; nonlocals are the weight >= 2 Pauli
/// strings in lexicographic (qubit-1-major) order.
struct GeneratorBasis {
  int n = 0;
  std::vector<CMat> locals;     // 3n
  std::vector<CMat> nonlocals;  // 4^n - 1 - 3n
};

GeneratorBasis generator_basis(int n);

/// Shared immutable basis for the given qubit count.
const GeneratorBasis& shared_basis(int n);

/// Row blocks of W_ij = tr(U X_j† U† X_i): rows i over all generators,
/// columns j over the locals.
struct WMatrix {
  RMat local_block;     // 3n x 3n
  RMat nonlocal_block;  // (4^n - 1 - 3n) x 3n
};

WMatrix w_matrix(const GateMatrix& u, const GeneratorBasis& basis,
                 const TolerancePolicy& tol = default_tolerance());

enum class EtaMethod { Numeric, Analytic, Spectral, Table };

std::string_view to_string(EtaMethod method);

/// eta = 3n - dim ker W_N + dim(ker W_L ∩ ker W_N), plus the breakdown.
struct EtaReport {
  int eta = 0;
  int dim_ker_wn = 0;
  int dim_intersection = 0;
  EtaMethod method = EtaMethod::Numeric;
  std::optional<std::array<int, 3>> block_breakdown;  // analytic only
};

/// Rank-nullity route on the numerically assembled W matrix; n in {1,2,3}.
EtaReport eta_numeric(const GateMatrix& u,
                      const TolerancePolicy& tol = default_tolerance());

/// Closed-form route via the three 2x2 nonlocal blocks of the canonical
/// gate's W matrix (two-qubit only; the triple is reduced internally).
EtaReport eta_analytic(const CanonicalParams& c,
                       const TolerancePolicy& tol = default_tolerance());

/// Spectral route: each m-fold eigenvalue of M(U) leaks m(m-1)/2 local
/// degrees of freedom.
EtaReport eta_spectral(const GateMatrix& u,
                       const TolerancePolicy& tol = default_tolerance());
EtaReport eta_spectral(const CanonicalParams& c,
                       const TolerancePolicy& tol = default_tolerance());

/// Stratum lookup.
int eta_table(WeylRegion region);

/// N_U = ceil((4^n - 3n - 1) / eta): minimum applications of a fixed
/// two-qubit gate needed for a generic n-qubit gate.  Throws UnboundedGate
/// for eta = 0.
long long gate_count_lower_bound(int n, int eta);

}  // namespace qweyl

#endif  // QWEYL_ETA_HPP
