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

#ifndef QWEYL_TYPES_HPP
#define QWEYL_TYPES_HPP

#include <array>
#include <string_view>

namespace qweyl {

/// Cartan coordinates [c1, c2, c3] of a two-qubit gate, radians.
struct CanonicalParams {
  double c1 = 0;
  double c2 = 0;
  double c3 = 0;

  std::array<double, 3> as_array() const { return {c1, c2, c3}; }
};

/// The real triple (Re G1, Im G1, G2).
struct MakhlinInvariants {
  double g1 = 0;
  double g2 = 0;
  double g3 = 0;

  std::array<double, 3> as_array() const { return {g1, g2, g3}; }
};

/// Strata of the Weyl chamber, named after the tetrahedron O A1 A2 A3
/// (O/A1 identity, A2 DCNOT, A3 SWAP, L = midpoint of OA1 = CNOT).
enum class WeylRegion {
  VertexIdentity,  // O and A1
  VertexSwap,      // A3
  EdgeOA3,
  EdgeA1A3,
  EdgeOA1,         // contains L
  EdgeA2A3,        // contains A2
  FaceOA1A3,
  FaceOA2A3,
  FaceA1A2A3,
  Generic,
};

std::string_view to_string(WeylRegion region);

}  // namespace qweyl

#endif  // QWEYL_TYPES_HPP
