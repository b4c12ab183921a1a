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

#ifndef QWEYL_GATES_HPP
#define QWEYL_GATES_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/numkernel.hpp"
#include "qweyl/types.hpp"

namespace qweyl {

/// An n-qubit gate (n in {1,2,3}). Qubit 1 is the most significant bit of
/// the basis index. Equality is up to global phase.
struct GateMatrix {
  int n = 0;
  CMat matrix;
  std::string label;

  int dim() const { return 1 << n; }
};

/// Wraps a raw matrix, inferring n from the dimension and checking unitarity.
GateMatrix make_gate(CMat matrix, std::string label = {},
                     const TolerancePolicy& tol = default_tolerance());

/// min over phi of ||a - e^{i phi} b||_max <= eps.
bool approx_equal_up_to_phase(const CMat& a, const CMat& b, double eps);

enum class GateKind {
  Identity,
  Swap,
  Cnot,
  Dcnot,
  SqrtSwap,
  InvSqrtSwap,
  B,
  ControlledU,
  Spe,
  Canonical,
  FromFile,
};

struct GateSpec {
  GateKind kind = GateKind::Identity;
  std::optional<double> alpha;       // ControlledU, Spe
  std::optional<CanonicalParams> c;  // Canonical
  std::optional<std::string> path;   // FromFile

  static GateSpec named(GateKind kind) { return {kind, {}, {}, {}}; }
  static GateSpec controlled_u(double alpha) {
    return {GateKind::ControlledU, alpha, {}, {}};
  }
  static GateSpec spe(double alpha) { return {GateKind::Spe, alpha, {}, {}}; }
  static GateSpec canonical(CanonicalParams c) {
    return {GateKind::Canonical, {}, c, {}};
  }
  static GateSpec from_file(std::string path) {
    return {GateKind::FromFile, {}, {}, std::move(path)};
  }
};

/// Catalog builder. Throws BadSpec for malformed specs.
GateMatrix build_named(const GateSpec& spec,
                       const TolerancePolicy& tol = default_tolerance());

/// exp(i/2 (c1 XX + c2 YY + c3 ZZ)); special unitary for any real triple.
GateMatrix canonical_gate(const CanonicalParams& c);

/// Tensor product of single-qubit special unitaries.
struct LocalGate {
  int n = 0;
  std::vector<CMat> factors;  // n matrices, 2x2, det 1

  GateMatrix matrix() const;
};

LocalGate tensor_local(std::vector<CMat> factors,
                       const TolerancePolicy& tol = default_tolerance());

/// Deterministic RNG: splitmix64 stream with a Box-Muller gaussian on top.
/// The same seed reproduces the same draws on a given platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0;
};

/// Haar-distributed special unitary of the given dimension (2, 4 or 8):
/// QR of a complex Ginibre matrix with the phase-of-R-diagonal correction,
/// then special-unitarized.
GateMatrix random_su(int dim, Rng& rng);
GateMatrix random_su(int dim, std::uint64_t seed);

/// n independent Haar SU(2) factors.
LocalGate random_local(int n, Rng& rng);
LocalGate random_local(int n, std::uint64_t seed);

/// Gate file format: a JSON object {"n": ..., "matrix": [[[re,im], ...], ...]}
/// with the matrix row-major and values written with 17 significant digits.
void write_gate(const GateMatrix& gate, std::ostream& out);
GateMatrix read_gate(std::istream& in,
                     const TolerancePolicy& tol = default_tolerance());
void save_gate(const GateMatrix& gate, const std::string& path);
GateMatrix load_gate(const std::string& path,
                     const TolerancePolicy& tol = default_tolerance());

}  // namespace qweyl

#endif  // QWEYL_GATES_HPP
