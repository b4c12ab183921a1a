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

#include "qweyl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qweyl/eta.hpp"
#include "qweyl/gates.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/numkernel.hpp"

namespace qweyl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kDefaultSeed = 12345;

/// Command-line misuse distinct from numeric failures; maps to exit 1.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt12(double v) {
  if (v == 0) v = 0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (static_cast<unsigned char>(ch) < 0x20) continue;
    out += ch;
  }
  return out;
}

std::string triple_json(const std::array<double, 3>& v) {
  return "[" + fmt12(v[0]) + "," + fmt12(v[1]) + "," + fmt12(v[2]) + "]";
}

TolerancePolicy policy_with_match(std::optional<double> tol) {
  TolerancePolicy policy = default_tolerance();
  if (tol) {
    policy.eps_match = *tol;
    policy.validate();
  }
  return policy;
}

GateSpec parse_gate_name(const std::string& text) {
  std::string name = text;
  std::optional<double> alpha;
  if (const auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    const std::string value = text.substr(colon + 1);
    try {
      std::size_t used = 0;
      alpha = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageFailure("invalid alpha in gate name: " + text);
    }
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  GateKind kind;
  if (name == "identity" || name == "i" || name == "id") {
    kind = GateKind::Identity;
  } else if (name == "swap") {
    kind = GateKind::Swap;
  } else if (name == "cnot" || name == "cx") {
    kind = GateKind::Cnot;
  } else if (name == "dcnot") {
    kind = GateKind::Dcnot;
  } else if (name == "sqrt-swap" || name == "sqrtswap") {
    kind = GateKind::SqrtSwap;
  } else if (name == "inv-sqrt-swap" || name == "invsqrtswap") {
    kind = GateKind::InvSqrtSwap;
  } else if (name == "b") {
    kind = GateKind::B;
  } else if (name == "cu" || name == "controlled-u" || name == "controlledu") {
    kind = GateKind::ControlledU;
  } else if (name == "spe") {
    kind = GateKind::Spe;
  } else {
    throw UsageFailure("unknown gate name: " + text);
  }
  const bool needs_alpha = kind == GateKind::ControlledU || kind == GateKind::Spe;
  if (needs_alpha && !alpha) {
    throw UsageFailure("gate " + name + " requires an angle, e.g. " + name + ":0.7853981634");
  }
  if (!needs_alpha && alpha) {
    throw UsageFailure("gate " + name + " takes no angle");
  }
  GateSpec spec = GateSpec::named(kind);
  spec.alpha = alpha;
  return spec;
}

CanonicalParams parse_c_triple(const std::string& text) {
  std::array<double, 3> v{};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', pos);
    const bool last = k == 2;
    if (last != (comma == std::string::npos)) {
      throw UsageFailure("expected three comma-separated values: " + text);
    }
    const std::string field = text.substr(pos, last ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      v[static_cast<std::size_t>(k)] = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw UsageFailure("invalid number in canonical triple: " + text);
    }
    pos = comma + 1;
  }
  return {v[0], v[1], v[2]};
}

/// Resolves the --gate/--file/--c option group (exactly one must be given).
GateMatrix resolve_gate(const std::string& gate, const std::string& file,
                        const std::string& c_text, const TolerancePolicy& tol) {
  const int given = (gate.empty() ? 0 : 1) + (file.empty() ? 0 : 1) +
                    (c_text.empty() ? 0 : 1);
  if (given != 1) {
    throw UsageFailure("give exactly one of --gate, --file, --c");
  }
  if (!gate.empty()) {
    GateSpec spec = parse_gate_name(gate);
    try {
      return build_named(spec, tol);
    } catch (const BadSpec& e) {
      throw UsageFailure(e.what());
    }
  }
  if (!file.empty()) return load_gate(file, tol);
  return canonical_gate(parse_c_triple(c_text));
}

/// Resolves an equiv positional: a canonical triple when it contains a
/// comma, a known gate name otherwise, falling back to a file path.
GateMatrix resolve_source_string(const std::string& text, const TolerancePolicy& tol) {
  if (text.find(',') != std::string::npos) {
    return canonical_gate(parse_c_triple(text));
  }
  try {
    return build_named(parse_gate_name(text), tol);
  } catch (const UsageFailure&) {
    if (std::filesystem::exists(text)) return load_gate(text, tol);
    throw;
  }
}

struct MethodSelection {
  bool numeric = false;
  bool analytic = false;
  bool spectral = false;
};

MethodSelection parse_methods(const std::string& text) {
  if (text == "all") return {true, true, true};
  if (text == "numeric") return {true, false, false};
  if (text == "analytic") return {false, true, false};
  if (text == "spectral") return {false, false, true};
  throw UsageFailure("--method must be numeric, analytic, spectral or all");
}

// ---------------------------------------------------------------------------
// invariants

struct InvariantsOptions {
  std::string gate, file, c_text;
  std::string method = "all";
  std::optional<double> tol;
  bool plain = false;
  bool degrees = false;
};

int cmd_invariants(const InvariantsOptions& opt, std::ostream& out) {
  const TolerancePolicy policy = policy_with_match(opt.tol);
  const GateMatrix gate = resolve_gate(opt.gate, opt.file, opt.c_text, policy);
  if (gate.n != 2) {
    throw UsageFailure("invariants requires a two-qubit gate");
  }
  const MethodSelection methods = parse_methods(opt.method);

  const CanonicalParams c = canonical_from_gate(gate, policy);
  const MakhlinInvariants g = makhlin_from_gate(gate, policy);
  const WeylRegion region = classify_region(c, policy);

  std::vector<std::pair<std::string, int>> etas;
  if (methods.numeric) etas.emplace_back("numeric", eta_numeric(gate, policy).eta);
  if (methods.analytic) etas.emplace_back("analytic", eta_analytic(c, policy).eta);
  if (methods.spectral) etas.emplace_back("spectral", eta_spectral(gate, policy).eta);

  std::vector<std::string> warnings;
  for (std::size_t k = 1; k < etas.size(); ++k) {
    if (etas[k].second != etas[0].second) {
      std::string msg = "eta methods disagree:";
      for (const auto& [name, value] : etas) {
        msg += " " + name + "=" + std::to_string(value);
      }
      warnings.push_back(msg);
      break;
    }
  }

  const double scale = opt.degrees ? 180.0 / kPi : 1.0;
  const std::array<double, 3> c_disp = {c.c1 * scale, c.c2 * scale, c.c3 * scale};
  const char* unit = opt.degrees ? "degrees" : "radians";

  if (opt.plain) {
    out << "gate:    " << gate.label << "\n";
    out << "c:       [" << fmt12(c_disp[0]) << ", " << fmt12(c_disp[1]) << ", "
        << fmt12(c_disp[2]) << "] " << unit << "\n";
    out << "g:       [" << fmt12(g.g1) << ", " << fmt12(g.g2) << ", "
        << fmt12(g.g3) << "]\n";
    out << "region:  " << to_string(region) << "\n";
    out << "eta:    ";
    for (const auto& [name, value] : etas) out << " " << name << "=" << value;
    out << "\n";
    for (const auto& w : warnings) out << "warning: " << w << "\n";
  } else {
    std::string json = "{\"label\":\"" + json_escape(gate.label) + "\"";
    json += ",\"angles\":\"" + std::string(unit) + "\"";
    json += ",\"c1\":" + fmt12(c_disp[0]) + ",\"c2\":" + fmt12(c_disp[1]) +
            ",\"c3\":" + fmt12(c_disp[2]);
    json += ",\"g1\":" + fmt12(g.g1) + ",\"g2\":" + fmt12(g.g2) +
            ",\"g3\":" + fmt12(g.g3);
    json += ",\"region\":\"" + std::string(to_string(region)) + "\"";
    json += ",\"eta\":{";
    for (std::size_t k = 0; k < etas.size(); ++k) {
      if (k) json += ",";
      json += "\"" + etas[k].first + "\":" + std::to_string(etas[k].second);
    }
    json += "},\"warnings\":[";
    for (std::size_t k = 0; k < warnings.size(); ++k) {
      if (k) json += ",";
      json += "\"" + json_escape(warnings[k]) + "\"";
    }
    json += "]}";
    out << json << "\n";
  }
  return warnings.empty() ? 0 : 2;
}

// ---------------------------------------------------------------------------
// verify-tables

struct VerifyCheck {
  std::string name;
  bool ok;
  std::string detail;
};

bool triple_close(const std::array<double, 3>& a, const std::array<double, 3>& b,
                  double eps) {
  return std::abs(a[0] - b[0]) <= eps && std::abs(a[1] - b[1]) <= eps &&
         std::abs(a[2] - b[2]) <= eps;
}

std::vector<VerifyCheck> run_table1_checks(const TolerancePolicy& policy) {
  constexpr double kTableEps = 1e-9;
  struct Row {
    GateSpec spec;
    std::string name;
    CanonicalParams c;
    MakhlinInvariants g;
    int eta;
  };
  std::vector<Row> rows = {
      {GateSpec::named(GateKind::Identity), "I", {0, 0, 0}, {1, 0, 3}, 0},
      {GateSpec::named(GateKind::Swap), "SWAP", {kPi / 2, kPi / 2, kPi / 2}, {-1, 0, -3}, 0},
      {GateSpec::named(GateKind::Cnot), "CNOT", {kPi / 2, 0, 0}, {0, 0, 1}, 4},
      {GateSpec::named(GateKind::Dcnot), "DCNOT", {kPi / 2, kPi / 2, 0}, {0, 0, -1}, 4},
      {GateSpec::named(GateKind::SqrtSwap), "sqrt-SWAP",
       {kPi / 4, kPi / 4, kPi / 4}, {0, 0.25, 0}, 3},
      {GateSpec::named(GateKind::InvSqrtSwap), "inv-sqrt-SWAP",
       {3 * kPi / 4, kPi / 4, kPi / 4}, {0, -0.25, 0}, 3},
      {GateSpec::named(GateKind::B), "B", {kPi / 2, kPi / 4, 0}, {0, 0, 0}, 6},
  };
  for (const double alpha : {kPi / 6, kPi / 3, 2 * kPi / 5}) {
    const double ca = std::cos(alpha);
    rows.push_back({GateSpec::controlled_u(alpha),
                    "controlled-U(" + fmt12(alpha) + ")",
                    {alpha, 0, 0},
                    {ca * ca, 0, 2 * ca * ca + 1},
                    4});
    rows.push_back({GateSpec::spe(alpha),
                    "SPE(" + fmt12(alpha) + ")",
                    {kPi / 2, alpha, 0},
                    {0, 0, std::cos(2 * alpha)},
                    6});
  }

  std::vector<VerifyCheck> checks;
  for (const auto& row : rows) {
    VerifyCheck check{"table1 " + row.name, true, {}};
    try {
      const GateMatrix gate = build_named(row.spec, policy);
      const CanonicalParams c = canonical_from_gate(gate, policy);
      const MakhlinInvariants g = makhlin_from_gate(gate, policy);
      if (!triple_close(c.as_array(), row.c.as_array(), kTableEps)) {
        check.ok = false;
        check.detail += " c=[" + fmt12(c.c1) + "," + fmt12(c.c2) + "," +
                        fmt12(c.c3) + "] want [" + fmt12(row.c.c1) + "," +
                        fmt12(row.c.c2) + "," + fmt12(row.c.c3) + "]";
      }
      if (!triple_close(g.as_array(), row.g.as_array(), kTableEps)) {
        check.ok = false;
        check.detail += " g=[" + fmt12(g.g1) + "," + fmt12(g.g2) + "," +
                        fmt12(g.g3) + "] want [" + fmt12(row.g.g1) + "," +
                        fmt12(row.g.g2) + "," + fmt12(row.g.g3) + "]";
      }
      const int en = eta_numeric(gate, policy).eta;
      const int ea = eta_analytic(c, policy).eta;
      const int es = eta_spectral(gate, policy).eta;
      if (en != row.eta || ea != row.eta || es != row.eta) {
        check.ok = false;
        check.detail += " eta=" + std::to_string(en) + "/" + std::to_string(ea) +
                        "/" + std::to_string(es) + " want " + std::to_string(row.eta);
      }
    } catch (const Error& e) {
      check.ok = false;
      check.detail = std::string(" error: ") + e.what();
    }
    checks.push_back(std::move(check));
  }
  return checks;
}

std::vector<VerifyCheck> run_table2_checks(const TolerancePolicy& policy) {
  struct Stratum {
    std::string name;
    std::array<CanonicalParams, 3> points;
    int eta;
  };
  const double h = kPi / 2;
  // Vertex strata are single points; their three samples are chamber aliases
  // of the same class.
  const std::vector<Stratum> strata = {
      {"VertexIdentity", {{{0, 0, 0}, {kPi, 0, 0}, {-kPi, 0, 0}}}, 0},
      {"VertexSwap", {{{h, h, h}, {h, h, 3 * h}, {-h, -h, h}}}, 0},
      {"EdgeOA3", {{{0.3, 0.3, 0.3}, {0.8, 0.8, 0.8}, {1.4, 1.4, 1.4}}}, 3},
      {"EdgeA1A3",
       {{{kPi - 0.3, 0.3, 0.3}, {kPi - 0.8, 0.8, 0.8}, {kPi - 1.4, 1.4, 1.4}}},
       3},
      {"EdgeOA1", {{{0.4, 0, 0}, {h, 0, 0}, {1.2, 0, 0}}}, 4},
      {"EdgeA2A3", {{{h, h, 0}, {h, h, 0.5}, {h, h, 1.2}}}, 4},
      {"FaceOA1A3", {{{0.7, 0.7, 0.3}, {1.2, 1.2, 0.4}, {1.5, 1.5, 0.0}}}, 5},
      {"FaceOA2A3", {{{1.2, 0.5, 0.5}, {0.9, 0.3, 0.3}, {2.0, 0.6, 0.6}}}, 5},
      {"FaceA1A2A3",
       {{{kPi - 0.6, 0.6, 0.2}, {kPi - 1.0, 1.0, 0.5}, {kPi - 1.3, 1.3, 0.4}}},
       5},
      {"Generic", {{{1.1, 0.7, 0.3}, {0.9, 0.4, 0.2}, {h, kPi / 4, 0}}}, 6},
  };

  std::vector<VerifyCheck> checks;
  for (const auto& stratum : strata) {
    for (const auto& point : stratum.points) {
      const CanonicalParams reduced = weyl_reduce(point, policy);
      VerifyCheck check{"table2 " + stratum.name + " [" + fmt12(point.c1) + "," +
                            fmt12(point.c2) + "," + fmt12(point.c3) + "]",
                        true,
                        {}};
      try {
        const GateMatrix gate = canonical_gate(reduced);
        const int en = eta_numeric(gate, policy).eta;
        const int ea = eta_analytic(reduced, policy).eta;
        const int es = eta_spectral(gate, policy).eta;
        const int et = eta_table(classify_region(reduced, policy));
        if (en != stratum.eta || ea != stratum.eta || es != stratum.eta ||
            et != stratum.eta) {
          check.ok = false;
          check.detail = " eta numeric/analytic/spectral/table = " +
                         std::to_string(en) + "/" + std::to_string(ea) + "/" +
                         std::to_string(es) + "/" + std::to_string(et) +
                         " want " + std::to_string(stratum.eta);
        }
      } catch (const Error& e) {
        check.ok = false;
        check.detail = std::string(" error: ") + e.what();
      }
      checks.push_back(std::move(check));
    }
  }
  return checks;
}

int cmd_verify_tables(std::optional<double> tol, std::ostream& out) {
  const TolerancePolicy policy = policy_with_match(tol);
  std::vector<VerifyCheck> checks = run_table1_checks(policy);
  std::vector<VerifyCheck> table2 = run_table2_checks(policy);
  checks.insert(checks.end(), table2.begin(), table2.end());

  int passed = 0;
  for (const auto& check : checks) {
    out << (check.ok ? "PASS " : "FAIL ") << check.name << check.detail << "\n";
    if (check.ok) ++passed;
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return passed == static_cast<int>(checks.size()) ? 0 : 2;
}

// ---------------------------------------------------------------------------
// surface / sample / bound / equiv / dump

int cmd_surface(int ns, int nt, const std::string& path, std::ostream& out) {
  if (ns < 2 || nt < 2) throw UsageFailure("--ns and --nt must be >= 2");
  const auto samples = weyl_surface_samples(ns, nt);
  std::ofstream file(path);
  if (!file) throw UsageFailure("cannot open for writing: " + path);
  write_surface_csv(samples, file);
  if (!file.good()) throw UsageFailure("write failed: " + path);
  out << samples.size() << "\n";
  return 0;
}

int cmd_sample(long long count, std::uint64_t seed, bool plain, std::ostream& out) {
  if (count < 1) throw UsageFailure("--count must be >= 1");
  Rng rng(seed);
  std::map<int, long long> histogram;
  long long eta_sum = 0;
  TolerancePolicy policy = default_tolerance();
  for (long long k = 0; k < count; ++k) {
    const GateMatrix gate = random_su(4, rng);
    const int eta = eta_numeric(gate, policy).eta;
    ++histogram[eta];
    eta_sum += eta;
  }
  const double mean = static_cast<double>(eta_sum) / static_cast<double>(count);
  if (plain) {
    out << "samples: " << count << "  seed: " << seed << "\n";
    for (const auto& [eta, n] : histogram) {
      out << "eta " << eta << ": " << n << "\n";
    }
    out << "mean eta: " << fmt12(mean) << "\n";
  } else {
    std::string json = "{\"count\":" + std::to_string(count) +
                       ",\"seed\":" + std::to_string(seed) + ",\"histogram\":{";
    bool first = true;
    for (const auto& [eta, n] : histogram) {
      if (!first) json += ",";
      first = false;
      json += "\"" + std::to_string(eta) + "\":" + std::to_string(n);
    }
    json += "},\"min\":" + std::to_string(histogram.begin()->first);
    json += ",\"max\":" + std::to_string(histogram.rbegin()->first);
    json += ",\"mean\":" + fmt12(mean) + "}";
    out << json << "\n";
  }
  return 0;
}

int cmd_bound(int n, const std::string& gate, const std::string& file,
              const std::string& c_text, std::optional<double> tol,
              std::ostream& out) {
  const TolerancePolicy policy = policy_with_match(tol);
  const GateMatrix g = resolve_gate(gate, file, c_text, policy);
  const int eta = eta_numeric(g, policy).eta;
  out << gate_count_lower_bound(n, eta) << "\n";
  return 0;
}

int cmd_equiv(const std::string& a_text, const std::string& b_text,
              std::optional<double> tol, bool plain, std::ostream& out) {
  const TolerancePolicy policy = policy_with_match(tol);
  const GateMatrix a = resolve_source_string(a_text, policy);
  const GateMatrix b = resolve_source_string(b_text, policy);
  if (a.n != 2 || b.n != 2) throw UsageFailure("equiv requires two-qubit gates");
  const double compare_tol = tol.value_or(default_tolerance().eps_match);
  const EquivalenceEvidence ev = locally_equivalent(a, b, compare_tol, policy);
  const char* verdict = ev.equivalent ? "true" : "false";
  if (plain) {
    out << "equivalent: " << verdict << "\n";
    out << "g a: [" << fmt12(ev.g_a.g1) << ", " << fmt12(ev.g_a.g2) << ", "
        << fmt12(ev.g_a.g3) << "]   c a: [" << fmt12(ev.c_a.c1) << ", "
        << fmt12(ev.c_a.c2) << ", " << fmt12(ev.c_a.c3) << "]\n";
    out << "g b: [" << fmt12(ev.g_b.g1) << ", " << fmt12(ev.g_b.g2) << ", "
        << fmt12(ev.g_b.g3) << "]   c b: [" << fmt12(ev.c_b.c1) << ", "
        << fmt12(ev.c_b.c2) << ", " << fmt12(ev.c_b.c3) << "]\n";
  } else {
    std::string json = std::string("{\"equivalent\":") + verdict;
    json += ",\"g_a\":" + triple_json(ev.g_a.as_array());
    json += ",\"g_b\":" + triple_json(ev.g_b.as_array());
    json += ",\"c_a\":" + triple_json(ev.c_a.as_array());
    json += ",\"c_b\":" + triple_json(ev.c_b.as_array());
    json += "}";
    out << json << "\n";
  }
  return 0;
}

int cmd_dump(const std::string& gate, const std::string& file,
             const std::string& c_text, const std::string& out_path,
             std::ostream& out) {
  const TolerancePolicy policy = default_tolerance();
  const GateMatrix g = resolve_gate(gate, file, c_text, policy);
  try {
    save_gate(g, out_path);
  } catch (const Error& e) {
    throw UsageFailure(e.what());
  }
  out << out_path << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"two-qubit gate local invariants, Weyl-chamber classification "
               "and gate-count lower bounds"};
  app.name("qweyl");
  app.require_subcommand(1);

  const std::string source_help_gate =
      "named gate: identity, swap, cnot, dcnot, sqrt-swap, inv-sqrt-swap, b, "
      "cu:<alpha>, spe:<alpha>";
  const std::string source_help_file = "gate file (JSON, see README)";
  const std::string source_help_c = "canonical triple c1,c2,c3 in radians";

  InvariantsOptions inv_opt;
  auto* inv = app.add_subcommand(
      "invariants", "canonical parameters, Makhlin invariants, region and eta");
  inv->add_option("--gate", inv_opt.gate, source_help_gate);
  inv->add_option("--file", inv_opt.file, source_help_file);
  inv->add_option("--c", inv_opt.c_text, source_help_c);
  inv->add_option("--method", inv_opt.method, "numeric|analytic|spectral|all");
  inv->add_option("--tol", inv_opt.tol, "invariant comparison tolerance");
  inv->add_flag("--plain", inv_opt.plain, "human-readable output");
  inv->add_flag("--degrees", inv_opt.degrees, "display angles in degrees");

  std::optional<double> verify_tol;
  auto* verify = app.add_subcommand(
      "verify-tables", "rebuild the gate catalog and stratum tables and check "
                       "every invariant and eta value");
  verify->add_option("--tol", verify_tol, "invariant comparison tolerance");

  int surf_ns = 0, surf_nt = 0;
  std::string surf_out;
  auto* surface = app.add_subcommand(
      "surface", "sample the gate-body boundary surface in Makhlin coordinates");
  surface->add_option("--ns", surf_ns, "grid points in s over [0, pi]")->required();
  surface->add_option("--nt", surf_nt, "grid points in t over [0, pi/2]")->required();
  surface->add_option("--out", surf_out, "output CSV path")->required();

  long long sample_count = 0;
  std::uint64_t sample_seed = kDefaultSeed;
  bool sample_plain = false;
  auto* sample = app.add_subcommand(
      "sample", "eta histogram over Haar-random two-qubit gates");
  sample->add_option("--count", sample_count, "number of samples")->required();
  sample->add_option("--seed", sample_seed, "RNG seed");
  sample->add_flag("--plain", sample_plain, "human-readable output");

  int bound_n = 2;
  std::string bound_gate, bound_file, bound_c;
  std::optional<double> bound_tol;
  auto* bound = app.add_subcommand(
      "bound", "gate-count lower bound for an n-qubit circuit built from the "
               "given two-qubit gate");
  bound->add_option("--n", bound_n, "target circuit width (qubits)");
  bound->add_option("--gate", bound_gate, source_help_gate);
  bound->add_option("--file", bound_file, source_help_file);
  bound->add_option("--c", bound_c, source_help_c);
  bound->add_option("--tol", bound_tol, "invariant comparison tolerance");

  std::vector<std::string> equiv_sources;
  std::optional<double> equiv_tol;
  bool equiv_plain = false;
  auto* equiv = app.add_subcommand(
      "equiv", "local equivalence of two gates (name, file path, or c-triple)");
  equiv->add_option("sources", equiv_sources, "two gate sources")
      ->expected(2)
      ->required();
  equiv->add_option("--tol", equiv_tol, "Makhlin comparison tolerance");
  equiv->add_flag("--plain", equiv_plain, "human-readable output");

  std::string dump_gate, dump_file, dump_c, dump_out;
  auto* dump = app.add_subcommand("dump", "write a gate to a gate file");
  dump->add_option("--gate", dump_gate, source_help_gate);
  dump->add_option("--file", dump_file, source_help_file);
  dump->add_option("--c", dump_c, source_help_c);
  dump->add_option("--out", dump_out, "output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_invariants(inv_opt, out);
    if (app.got_subcommand(verify)) return cmd_verify_tables(verify_tol, out);
    if (app.got_subcommand(surface)) return cmd_surface(surf_ns, surf_nt, surf_out, out);
    if (app.got_subcommand(sample)) return cmd_sample(sample_count, sample_seed, sample_plain, out);
    if (app.got_subcommand(bound)) {
      return cmd_bound(bound_n, bound_gate, bound_file, bound_c, bound_tol, out);
    }
    if (app.got_subcommand(equiv)) {
      return cmd_equiv(equiv_sources.at(0), equiv_sources.at(1), equiv_tol,
                       equiv_plain, out);
    }
    if (app.got_subcommand(dump)) {
      return cmd_dump(dump_gate, dump_file, dump_c, dump_out, out);
    }
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const FileFormatError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command given\n";
  return 1;
}

}  // namespace qweyl
