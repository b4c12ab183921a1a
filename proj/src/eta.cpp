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

#include "qweyl/eta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qweyl {

namespace {

// tr(A B) without forming the product.
Complex trace_product(const CMat& a, const CMat& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

int pauli_weight(int code, int n) {
  int w = 0;
  for (int q = 0; q < n; ++q) {
    if ((code >> (2 * (n - 1 - q))) & 3) ++w;
  }
  return w;
}

// Pauli string for a base-4 code, digit of qubit 1 most significant;
// digit 0 is the identity, 1..3 are x, y, z.
CMat pauli_string(int code, int n) {
  const auto& sigma = paulis();
  CMat m = CMat::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    const int d = (code >> (2 * (n - 1 - q))) & 3;
    m = kron(m, d == 0 ? CMat(CMat::Identity(2, 2)) : sigma[static_cast<std::size_t>(d - 1)]);
  }
  return m;
}

}  // namespace

std::string_view to_string(EtaMethod method) {
  switch (method) {
    case EtaMethod::Numeric:
      return "numeric";
    case EtaMethod::Analytic:
      return "analytic";
    case EtaMethod::Spectral:
      return "spectral";
    case EtaMethod::Table:
      return "table";
  }
  return "?";
}

GeneratorBasis generator_basis(int n) {
  if (n < 1 || n > 3) throw BadDim("generator_basis: n must be 1, 2 or 3");
  const Complex scale(0, 1.0 / std::sqrt(static_cast<double>(1 << n)));
  GeneratorBasis basis;
  basis.n = n;
  for (int q = 0; q < n; ++q) {
    for (int axis = 1; axis <= 3; ++axis) {
      const int code = axis << (2 * (n - 1 - q));
      basis.locals.push_back(scale * pauli_string(code, n));
    }
  }
  for (int code = 1; code < (1 << (2 * n)); ++code) {
    if (pauli_weight(code, n) >= 2) {
      basis.nonlocals.push_back(scale * pauli_string(code, n));
    }
  }
  return basis;
}

const GeneratorBasis& shared_basis(int n) {
  if (n < 1 || n > 3) throw BadDim("shared_basis: n must be 1, 2 or 3");
  static const GeneratorBasis bases[3] = {generator_basis(1), generator_basis(2),
                                          generator_basis(3)};
  return bases[n - 1];
}

WMatrix w_matrix(const GateMatrix& u, const GeneratorBasis& basis,
                 const TolerancePolicy& tol) {
  (void)tol;
  if (u.n != basis.n) throw BadDim("w_matrix: gate and basis dimensions differ");
  const int nl = static_cast<int>(basis.locals.size());
  const int nn = static_cast<int>(basis.nonlocals.size());
  WMatrix w{RMat(nl, nl), RMat(nn, nl)};
  for (int j = 0; j < nl; ++j) {
    const CMat image = u.matrix * basis.locals[static_cast<std::size_t>(j)].adjoint() *
                       u.matrix.adjoint();
    auto real_entry = [&](const CMat& xi) {
      const Complex v = trace_product(image, xi);
      if (std::abs(v.imag()) > 1e-6) {
        throw ImaginaryW("w_matrix: entry has a non-negligible imaginary part");
      }
      return v.real();
    };
    for (int i = 0; i < nl; ++i) {
      w.local_block(i, j) = real_entry(basis.locals[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < nn; ++i) {
      w.nonlocal_block(i, j) = real_entry(basis.nonlocals[static_cast<std::size_t>(i)]);
    }
  }
  return w;
}

EtaReport eta_numeric(const GateMatrix& u, const TolerancePolicy& tol) {
  const GeneratorBasis& basis = shared_basis(u.n);
  const WMatrix w = w_matrix(u, basis, tol);
  const int dim_ker = nullity(w.nonlocal_block, tol.eps_rank);
  int intersection = 0;
  if (dim_ker > 0) {
    const RMat kernel = kernel_basis(w.nonlocal_block, tol.eps_rank);
    intersection = nullity(w.local_block * kernel, tol.eps_rank);
  }
  return {3 * u.n - dim_ker + intersection, dim_ker, intersection,
          EtaMethod::Numeric, std::nullopt};
}

EtaReport eta_analytic(const CanonicalParams& c_in, const TolerancePolicy& tol) {
  const CanonicalParams c = weyl_reduce(c_in, tol);
  const double eps = tol.eps_match;
  // Off-diagonal 2x2 blocks of the canonical gate's W matrix; block i couples
  // the axis-i locals of the two qubits to their nonlocal partners.
  const std::array<std::array<double, 2>, 3> blocks = {{
      {std::sin(c.c2) * std::cos(c.c3), -std::cos(c.c2) * std::sin(c.c3)},
      {-std::sin(c.c1) * std::cos(c.c3), std::cos(c.c1) * std::sin(c.c3)},
      {std::sin(c.c1) * std::cos(c.c2), -std::cos(c.c1) * std::sin(c.c2)},
  }};
  std::array<int, 3> breakdown{};
  int leaked = 0;
  for (int i = 0; i < 3; ++i) {
    const double p = blocks[static_cast<std::size_t>(i)][0];
    const double q = blocks[static_cast<std::size_t>(i)][1];
    int nullity_i = 0;
    if (std::abs(p) <= eps && std::abs(q) <= eps) {
      nullity_i = 2;
    } else if (std::abs(p * p - q * q) <= eps) {
      nullity_i = 1;
    }
    breakdown[static_cast<std::size_t>(i)] = nullity_i;
    leaked += nullity_i;
  }
  // ker W_L and ker W_N never overlap for two qubits.
  return {6 - leaked, leaked, 0, EtaMethod::Analytic, breakdown};
}

namespace {

EtaReport spectral_from_phases(const std::vector<double>& phases,
                               const TolerancePolicy& tol) {
  int leaked = 0;
  for (const int m : cluster_phases(phases, tol.eps_eig)) {
    leaked += m * (m - 1) / 2;
  }
  return {6 - leaked, leaked, 0, EtaMethod::Spectral, std::nullopt};
}

}  // namespace

EtaReport eta_spectral(const GateMatrix& u, const TolerancePolicy& tol) {
  if (u.n != 2) throw BadDim("eta_spectral: two-qubit gate required");
  const GateMatrix su{2, special_unitarize(u.matrix, tol).matrix, u.label};
  return spectral_from_phases(eigenphases_unitary(m_matrix(su), tol), tol);
}

EtaReport eta_spectral(const CanonicalParams& c, const TolerancePolicy& tol) {
  std::vector<double> phases = {
      wrap_angle(c.c1 + c.c2 - c.c3),
      wrap_angle(c.c1 - c.c2 + c.c3),
      wrap_angle(-c.c1 + c.c2 + c.c3),
      wrap_angle(-(c.c1 + c.c2 + c.c3)),
  };
  std::sort(phases.begin(), phases.end());
  return spectral_from_phases(phases, tol);
}

int eta_table(WeylRegion region) {
  switch (region) {
    case WeylRegion::VertexIdentity:
    case WeylRegion::VertexSwap:
      return 0;
    case WeylRegion::EdgeOA3:
    case WeylRegion::EdgeA1A3:
      return 3;
    case WeylRegion::EdgeOA1:
    case WeylRegion::EdgeA2A3:
      return 4;
    case WeylRegion::FaceOA1A3:
    case WeylRegion::FaceOA2A3:
    case WeylRegion::FaceA1A2A3:
      return 5;
    case WeylRegion::Generic:
      return 6;
  }
  throw Error("eta_table: invalid region");
}

long long gate_count_lower_bound(int n, int eta) {
  if (n < 2 || n > 30) throw BadDim("gate_count_lower_bound: n must be >= 2");
  if (eta < 0 || eta > 3 * n) throw Error("gate_count_lower_bound: eta out of range");
  if (eta == 0) {
    throw UnboundedGate(
        "gate_count_lower_bound: eta = 0 admits no finite bound");
  }
  const long long num = (1LL << (2 * n)) - 3LL * n - 1;
  return (num + eta - 1) / eta;
}

}  // namespace qweyl
