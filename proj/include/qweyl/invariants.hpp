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

#ifndef QWEYL_INVARIANTS_HPP
#define QWEYL_INVARIANTS_HPP

#include <iosfwd>
#include <vector>

#include "qweyl/gates.hpp"
#include "qweyl/numkernel.hpp"
#include "qweyl/types.hpp"

namespace qweyl {

/// The magic-basis (Bell-basis) change matrix Q.
const CMat& magic_q();

enum class MagicDirection { Forward, Inverse };

/// Q U Q† (Forward) or Q† U Q (Inverse).  Local gates become real orthogonal
/// matrices under the forward transform.
CMat magic_transform(const GateMatrix& u, MagicDirection dir = MagicDirection::Forward);

/// M(U) = U_B^T U_B with U_B = Q U Q†; unitary and complex-symmetric.
CMat m_matrix(const GateMatrix& u);

/// Eigenphases of U (YY) U^T (YY); equals the M(U) spectrum as a multiset.
std::vector<double> gamma2_spectrum(const GateMatrix& u,
                                    const TolerancePolicy& tol = default_tolerance());

/// (Re G1, Im G1, G2) with G1 = tr^2 M / (16 det U),
/// G2 = (tr^2 M - tr M^2) / (4 det U).  Accepts U(4); the det division
/// removes the global phase.  Throws ImaginaryG2 if |Im G2| > 1e-6.
MakhlinInvariants makhlin_from_gate(const GateMatrix& u,
                                    const TolerancePolicy& tol = default_tolerance());

/// The closed-form triple as a function of the canonical parameters.
MakhlinInvariants makhlin_from_canonical(const CanonicalParams& c);

/// Whether c lies in the Weyl chamber with the base-triangle identification
/// applied: pi >= c1 >= c2 >= c3 >= 0, pi - c1 >= c2, and c1 <= pi/2 when
/// c3 = 0 (all comparisons within eps).
bool is_reduced(const CanonicalParams& c, double eps);

/// Maps any real triple into the (identified) Weyl chamber using only the
/// legal symmetries: single-coordinate pi shifts, permutations, paired sign
/// flips, and the reflection c1 -> pi - c1 on the c3 = 0 base.  Preserves the
/// Makhlin triple.
CanonicalParams weyl_reduce(const CanonicalParams& c,
                            const TolerancePolicy& tol = default_tolerance());

/// Reduced canonical parameters of a two-qubit gate.  The eigenphases of
/// M(U) are assigned to the spectral slots by brute force over the 24
/// permutations and the det^{1/4} branch shift; a candidate is accepted when
/// its closed-form Makhlin triple matches the gate's within eps_match.
CanonicalParams canonical_from_gate(const GateMatrix& u,
                                    const TolerancePolicy& tol = default_tolerance());

/// Classifies a reduced point into its Weyl-chamber stratum.  Points within
/// eps_match of a lower-dimensional stratum are assigned to that stratum.
WeylRegion classify_region(const CanonicalParams& c,
                           const TolerancePolicy& tol = default_tolerance());

struct EquivalenceEvidence {
  bool equivalent = false;
  MakhlinInvariants g_a, g_b;
  CanonicalParams c_a, c_b;
};

/// True iff the Makhlin triples agree within tol componentwise.
EquivalenceEvidence locally_equivalent(const GateMatrix& a, const GateMatrix& b,
                                       double tol,
                                       const TolerancePolicy& policy = default_tolerance());

/// A point of the two-parameter boundary surface of the gate body in
/// Makhlin coordinates.
struct SurfaceSample {
  double s = 0;  // [0, pi]
  double t = 0;  // [0, pi/2]
  MakhlinInvariants g;
};

/// Uniform (ns x nt) grid over the surface, t-major then s.
std::vector<SurfaceSample> weyl_surface_samples(int ns, int nt);

/// Delimited text with header s,t,g1,g2,g3 and 17-significant-digit values.
void write_surface_csv(const std::vector<SurfaceSample>& samples, std::ostream& out);

}  // namespace qweyl

#endif  // QWEYL_INVARIANTS_HPP
