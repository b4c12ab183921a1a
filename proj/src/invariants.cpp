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

#include "qweyl/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>

namespace qweyl {

namespace {

constexpr double kPi = std::numbers::pi;

void require_two_qubits(const GateMatrix& u, const char* where) {
  if (u.n != 2) throw BadDim(std::string(where) + ": two-qubit gate required");
}

CMat m_matrix_raw(const CMat& u) {
  const CMat& q = magic_q();
  CMat ub = q * u * q.adjoint();
  return ub.transpose() * ub;
}

const CMat& sigma_yy() {
  static const CMat yy = kron(paulis()[1], paulis()[1]);
  return yy;
}

}  // namespace

std::string_view to_string(WeylRegion region) {
  switch (region) {
    case WeylRegion::VertexIdentity:
      return "VertexIdentity";
    case WeylRegion::VertexSwap:
      return "VertexSwap";
    case WeylRegion::EdgeOA3:
      return "EdgeOA3";
    case WeylRegion::EdgeA1A3:
      return "EdgeA1A3";
    case WeylRegion::EdgeOA1:
      return "EdgeOA1";
    case WeylRegion::EdgeA2A3:
      return "EdgeA2A3";
    case WeylRegion::FaceOA1A3:
      return "FaceOA1A3";
    case WeylRegion::FaceOA2A3:
      return "FaceOA2A3";
    case WeylRegion::FaceA1A2A3:
      return "FaceA1A2A3";
    case WeylRegion::Generic:
      return "Generic";
  }
  return "?";
}

const CMat& magic_q() {
  static const CMat q = [] {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex i(0, 1);
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = s;
    m(0, 3) = s;
    m(1, 1) = -i * s;
    m(1, 2) = -i * s;
    m(2, 1) = s;
    m(2, 2) = -s;
    m(3, 0) = -i * s;
    m(3, 3) = i * s;
    return m;
  }();
  return q;
}

CMat magic_transform(const GateMatrix& u, MagicDirection dir) {
  require_two_qubits(u, "magic_transform");
  const CMat& q = magic_q();
  if (dir == MagicDirection::Forward) return q * u.matrix * q.adjoint();
  return q.adjoint() * u.matrix * q;
}

CMat m_matrix(const GateMatrix& u) {
  require_two_qubits(u, "m_matrix");
  return m_matrix_raw(u.matrix);
}

std::vector<double> gamma2_spectrum(const GateMatrix& u, const TolerancePolicy& tol) {
  require_two_qubits(u, "gamma2_spectrum");
  const CMat& yy = sigma_yy();
  CMat gamma = u.matrix * yy * u.matrix.transpose() * yy;
  return eigenphases_unitary(gamma, tol);
}

MakhlinInvariants makhlin_from_gate(const GateMatrix& u, const TolerancePolicy& tol) {
  require_two_qubits(u, "makhlin_from_gate");
  (void)tol;
  const CMat m = m_matrix_raw(u.matrix);
  const Complex det = u.matrix.determinant();
  const Complex tr = m.trace();
  const Complex tr_sq = (m * m).trace();
  const Complex g1 = tr * tr / (16.0 * det);
  const Complex g2 = (tr * tr - tr_sq) / (4.0 * det);
  if (std::abs(g2.imag()) > 1e-6) {
    throw ImaginaryG2("makhlin_from_gate: G2 is not real (non-unitary input?)");
  }
  return {g1.real(), g1.imag(), g2.real()};
}

MakhlinInvariants makhlin_from_canonical(const CanonicalParams& c) {
  const double cc = std::cos(c.c1) * std::cos(c.c2) * std::cos(c.c3);
  const double ss = std::sin(c.c1) * std::sin(c.c2) * std::sin(c.c3);
  const double g1 = cc * cc - ss * ss;
  const double g2 = 0.25 * std::sin(2 * c.c1) * std::sin(2 * c.c2) * std::sin(2 * c.c3);
  const double g3 = 4 * cc * cc - 4 * ss * ss -
                    std::cos(2 * c.c1) * std::cos(2 * c.c2) * std::cos(2 * c.c3);
  return {g1, g2, g3};
}

bool is_reduced(const CanonicalParams& c, double eps) {
  if (c.c1 > kPi + eps || c.c3 < -eps) return false;
  if (c.c1 < c.c2 - eps || c.c2 < c.c3 - eps) return false;
  if (kPi - c.c1 < c.c2 - eps) return false;
  if (c.c3 <= eps && c.c1 > kPi / 2 + eps) return false;
  return true;
}

CanonicalParams weyl_reduce(const CanonicalParams& c_in, const TolerancePolicy& tol) {
  const double eps = tol.eps_match;
  std::array<double, 3> c = c_in.as_array();
  auto sort_desc = [&c] { std::sort(c.begin(), c.end(), std::greater<>()); };
  auto mod_pi = [](double x) {
    double r = std::fmod(x, kPi);
    if (r < 0) r += kPi;
    return r;
  };
  bool settled = false;
  for (int step = 0; step < 16 && !settled; ++step) {
    for (auto& x : c) x = mod_pi(x);
    sort_desc();
    if (c[0] + c[1] > kPi + eps) {
      // Paired sign flip plus pi shifts: (c1, c2) -> (pi - c1, pi - c2).
      c[0] = kPi - c[0];
      c[1] = kPi - c[1];
      sort_desc();
    } else {
      settled = true;
    }
  }
  if (!settled) throw ReductionDiverged("weyl_reduce: step bound exceeded");
  // Base-triangle identification on c3 = 0.
  if (c[2] <= eps && c[0] > kPi / 2 + eps) {
    c[0] = kPi - c[0];
    sort_desc();
  }
  return {c[0], c[1], c[2]};
}

CanonicalParams canonical_from_gate(const GateMatrix& u, const TolerancePolicy& tol) {
  require_two_qubits(u, "canonical_from_gate");
  const SpecialUnitary su = special_unitarize(u.matrix, tol);
  const std::vector<double> phases = eigenphases_unitary(m_matrix_raw(su.matrix), tol);
  const MakhlinInvariants target = makhlin_from_gate(u, tol);

  // The special-unitary representative is fixed only up to a fourth root of
  // unity, which flips M(U) by -1; hence the extra pi shift branch.
  for (const double shift : {0.0, kPi}) {
    std::array<double, 4> th{};
    for (int k = 0; k < 4; ++k) th[k] = wrap_angle(phases[static_cast<std::size_t>(k)] + shift);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (b == a) continue;
        for (int d = 0; d < 4; ++d) {
          if (d == a || d == b) continue;
          const CanonicalParams cand = weyl_reduce(
              {(th[a] + th[b]) / 2, (th[a] + th[d]) / 2, (th[b] + th[d]) / 2}, tol);
          const MakhlinInvariants g = makhlin_from_canonical(cand);
          if (std::abs(g.g1 - target.g1) <= tol.eps_match &&
              std::abs(g.g2 - target.g2) <= tol.eps_match &&
              std::abs(g.g3 - target.g3) <= tol.eps_match) {
            return cand;
          }
        }
      }
    }
  }
  throw NoConsistentAssignment(
      "canonical_from_gate: no eigenphase assignment matches the Makhlin "
      "invariants");
}

WeylRegion classify_region(const CanonicalParams& c, const TolerancePolicy& tol) {
  const double eps = tol.eps_match;
  if (!is_reduced(c, eps)) {
    throw NotReduced("classify_region: canonical parameters are not reduced");
  }
  const double h = kPi / 2;
  auto near = [eps](double a, double b) { return std::abs(a - b) <= eps; };
  // Lower-dimensional strata take precedence.
  if (near(c.c1, 0) && near(c.c2, 0) && near(c.c3, 0)) return WeylRegion::VertexIdentity;
  if (near(c.c1, h) && near(c.c2, h) && near(c.c3, h)) return WeylRegion::VertexSwap;
  if (near(c.c1, c.c2) && near(c.c2, c.c3)) return WeylRegion::EdgeOA3;
  if (near(c.c2, c.c3) && near(c.c1 + c.c2, kPi)) return WeylRegion::EdgeA1A3;
  if (near(c.c2, 0) && near(c.c3, 0)) return WeylRegion::EdgeOA1;
  if (near(c.c1, h) && near(c.c2, h)) return WeylRegion::EdgeA2A3;
  if (near(c.c1, c.c2)) return WeylRegion::FaceOA1A3;
  if (near(c.c2, c.c3)) return WeylRegion::FaceOA2A3;
  if (near(c.c1 + c.c2, kPi)) return WeylRegion::FaceA1A2A3;
  return WeylRegion::Generic;
}

EquivalenceEvidence locally_equivalent(const GateMatrix& a, const GateMatrix& b,
                                       double tol, const TolerancePolicy& policy) {
  require_two_qubits(a, "locally_equivalent");
  require_two_qubits(b, "locally_equivalent");
  EquivalenceEvidence ev;
  ev.g_a = makhlin_from_gate(a, policy);
  ev.g_b = makhlin_from_gate(b, policy);
  ev.equivalent = std::abs(ev.g_a.g1 - ev.g_b.g1) <= tol &&
                  std::abs(ev.g_a.g2 - ev.g_b.g2) <= tol &&
                  std::abs(ev.g_a.g3 - ev.g_b.g3) <= tol;
  ev.c_a = canonical_from_gate(a, policy);
  ev.c_b = canonical_from_gate(b, policy);
  return ev;
}

std::vector<SurfaceSample> weyl_surface_samples(int ns, int nt) {
  if (ns < 2 || nt < 2) throw Error("weyl_surface_samples: ns and nt must be >= 2");
  std::vector<SurfaceSample> samples;
  samples.reserve(static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt));
  for (int tj = 0; tj < nt; ++tj) {
    const double t = (kPi / 2) * tj / (nt - 1);
    for (int si = 0; si < ns; ++si) {
      const double s = kPi * si / (ns - 1);
      const double cs = std::cos(s), sn = std::sin(s);
      const double ct = std::cos(t), st = std::sin(t);
      const double g1 = cs * cs * ct * ct * ct * ct - sn * sn * st * st * st * st;
      const double g2 = 0.25 * std::sin(2 * s) * std::sin(2 * t) * std::sin(2 * t);
      const double g3 = 4 * g1 - std::cos(2 * s) * std::cos(2 * t) * std::cos(2 * t);
      samples.push_back({s, t, {g1, g2, g3}});
    }
  }
  return samples;
}

void write_surface_csv(const std::vector<SurfaceSample>& samples, std::ostream& out) {
  std::string text = "s,t,g1,g2,g3\n";
  char buf[224];
  for (const auto& p : samples) {
    std::snprintf(buf, sizeof buf, "%.16e,%.16e,%.16e,%.16e,%.16e\n", p.s, p.t,
                  p.g.g1, p.g.g2, p.g.g3);
    text += buf;
  }
  out << text;
}

}  // namespace qweyl
