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

#include "qweyl/gates.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace qweyl {

namespace {

constexpr double kPi = std::numbers::pi;

int qubit_count_for_dim(Eigen::Index dim) {
  switch (dim) {
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    default:
      throw BadDim("gate dimension must be 2, 4 or 8");
  }
}

CMat cnot_1_to_2() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

CMat cnot_2_to_1() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(2, 2) = m(1, 3) = m(3, 1) = 1;
  return m;
}

CMat swap_matrix() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

// The square root of SWAP lying at canonical point [pi/4, pi/4, pi/4]
// (singlet eigenvalue -i).  Its adjoint, the principal matrix square root,
// lies at [3pi/4, pi/4, pi/4].
CMat sqrt_swap_matrix() {
  const Complex a(0.5, -0.5), b(0.5, 0.5);
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1;
  m(1, 1) = m(2, 2) = a;
  m(1, 2) = m(2, 1) = b;
  return m;
}

}  // namespace

GateMatrix make_gate(CMat matrix, std::string label, const TolerancePolicy& tol) {
  if (matrix.rows() != matrix.cols()) {
    throw BadDim("gate matrix must be square");
  }
  const int n = qubit_count_for_dim(matrix.rows());
  if (!is_unitary(matrix, tol.eps_unitary)) {
    throw NotUnitary("gate matrix is not unitary: " + label);
  }
  return {n, std::move(matrix), std::move(label)};
}

bool approx_equal_up_to_phase(const CMat& a, const CMat& b, double eps) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  // Align the phase on b's largest entry; exact when a = e^{i phi} b.
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) == 0.0) return a.cwiseAbs().maxCoeff() <= eps;
  const Complex phase = a(r, c) / b(r, c);
  const double mag = std::abs(phase);
  const Complex unit = mag == 0.0 ? Complex(1, 0) : phase / mag;
  return (a - unit * b).cwiseAbs().maxCoeff() <= eps;
}

GateMatrix canonical_gate(const CanonicalParams& c) {
  const auto& sigma = paulis();
  const Complex half_i(0, 0.5);
  CMat h = half_i * (c.c1 * kron(sigma[0], sigma[0]) +
                     c.c2 * kron(sigma[1], sigma[1]) +
                     c.c3 * kron(sigma[2], sigma[2]));
  char label[64];
  std::snprintf(label, sizeof label, "canonical[%.6g,%.6g,%.6g]", c.c1, c.c2, c.c3);
  return {2, expm_antihermitian(h), label};
}

GateMatrix build_named(const GateSpec& spec, const TolerancePolicy& tol) {
  auto need_alpha = [&]() -> double {
    if (!spec.alpha) throw BadSpec("gate spec: alpha parameter required");
    return *spec.alpha;
  };
  if (spec.alpha && spec.kind != GateKind::ControlledU && spec.kind != GateKind::Spe) {
    throw BadSpec("gate spec: alpha only applies to controlled-U and SPE");
  }
  switch (spec.kind) {
    case GateKind::Identity:
      return {2, CMat::Identity(4, 4), "identity"};
    case GateKind::Swap:
      return {2, swap_matrix(), "SWAP"};
    case GateKind::Cnot:
      return {2, cnot_1_to_2(), "CNOT"};
    case GateKind::Dcnot:
      return {2, cnot_2_to_1() * cnot_1_to_2(), "DCNOT"};
    case GateKind::SqrtSwap:
      return {2, sqrt_swap_matrix(), "sqrt-SWAP"};
    case GateKind::InvSqrtSwap:
      return {2, sqrt_swap_matrix().adjoint(), "inv-sqrt-SWAP"};
    case GateKind::B: {
      GateMatrix g = canonical_gate({kPi / 2, kPi / 4, 0});
      g.label = "B";
      return g;
    }
    case GateKind::ControlledU: {
      const double alpha = need_alpha();
      GateMatrix g = canonical_gate({alpha, 0, 0});
      char label[48];
      std::snprintf(label, sizeof label, "controlled-U(%.6g)", alpha);
      g.label = label;
      return g;
    }
    case GateKind::Spe: {
      const double alpha = need_alpha();
      GateMatrix g = canonical_gate({kPi / 2, alpha, 0});
      char label[48];
      std::snprintf(label, sizeof label, "SPE(%.6g)", alpha);
      g.label = label;
      return g;
    }
    case GateKind::Canonical:
      if (!spec.c) throw BadSpec("gate spec: canonical parameters required");
      return canonical_gate(*spec.c);
    case GateKind::FromFile:
      if (!spec.path) throw BadSpec("gate spec: file path required");
      return load_gate(*spec.path, tol);
  }
  throw BadSpec("gate spec: unknown kind");
}

GateMatrix LocalGate::matrix() const {
  CMat m = CMat::Identity(1, 1);
  for (const auto& f : factors) m = kron(m, f);
  return {n, std::move(m), "local"};
}

LocalGate tensor_local(std::vector<CMat> factors, const TolerancePolicy& tol) {
  const int n = static_cast<int>(factors.size());
  if (n < 1 || n > 3) throw BadDim("tensor_local: 1 to 3 factors supported");
  for (const auto& f : factors) {
    if (f.rows() != 2 || f.cols() != 2 || !is_unitary(f, tol.eps_unitary) ||
        std::abs(f.determinant() - Complex(1, 0)) > tol.eps_match) {
      throw BadFactor("tensor_local: factors must be 2x2 special unitaries");
    }
  }
  return {n, std::move(factors)};
}

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * kPi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

GateMatrix random_su(int dim, Rng& rng) {
  const int n = qubit_count_for_dim(dim);
  CMat ginibre(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      ginibre(i, j) = Complex(rng.gaussian(), rng.gaussian()) / std::numbers::sqrt2;
    }
  }
  Eigen::HouseholderQR<CMat> qr(ginibre);
  CMat q = qr.householderQ();
  for (int k = 0; k < dim; ++k) {
    const Complex r = qr.matrixQR()(k, k);
    const double mag = std::abs(r);
    q.col(k) *= mag == 0.0 ? Complex(1, 0) : r / mag;
  }
  char label[32];
  std::snprintf(label, sizeof label, "haar-su%d", dim);
  return {n, special_unitarize(q).matrix, label};
}

GateMatrix random_su(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_su(dim, rng);
}

LocalGate random_local(int n, Rng& rng) {
  if (n < 1 || n > 3) throw BadDim("random_local: n must be 1, 2 or 3");
  std::vector<CMat> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) factors.push_back(random_su(2, rng).matrix);
  return {n, std::move(factors)};
}

LocalGate random_local(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_local(n, rng);
}

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);  // 17 significant digits
  out += buf;
}

}  // namespace

void write_gate(const GateMatrix& gate, std::ostream& out) {
  std::string text = "{\n  \"n\": " + std::to_string(gate.n) + ",\n  \"matrix\": [\n";
  const int dim = gate.dim();
  for (int i = 0; i < dim; ++i) {
    text += "    [";
    for (int j = 0; j < dim; ++j) {
      const Complex v = gate.matrix(i, j);
      text += '[';
      append_number(text, v.real());
      text += ',';
      append_number(text, v.imag());
      text += ']';
      if (j + 1 < dim) text += ',';
    }
    text += ']';
    if (i + 1 < dim) text += ',';
    text += '\n';
  }
  text += "  ]\n}\n";
  out << text;
}

GateMatrix read_gate(std::istream& in, const TolerancePolicy& tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError(std::string("gate file: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix")) {
    throw FileFormatError("gate file: expected an object with fields n and matrix");
  }
  int n = 0;
  try {
    n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception&) {
    throw FileFormatError("gate file: n must be an integer");
  }
  if (n < 1 || n > 3) throw BadDim("gate file: n must be 1, 2 or 3");
  const int dim = 1 << n;
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw FileFormatError("gate file: matrix must have 2^n rows");
  }
  CMat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw FileFormatError("gate file: matrix rows must have 2^n entries");
    }
    for (int jj = 0; jj < dim; ++jj) {
      const auto& cell = row[static_cast<std::size_t>(jj)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw FileFormatError("gate file: entries must be [re, im] pairs");
      }
      m(i, jj) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return make_gate(std::move(m), "file", tol);
}

void save_gate(const GateMatrix& gate, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  write_gate(gate, out);
  if (!out.good()) throw Error("write failed: " + path);
}

GateMatrix load_gate(const std::string& path, const TolerancePolicy& tol) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open gate file: " + path);
  GateMatrix g = read_gate(in, tol);
  g.label = path;
  return g;
}

}  // namespace qweyl
