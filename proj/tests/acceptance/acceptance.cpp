// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. argv[1] is the path of the hopfq executable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hopfq/document.hpp"
#include "hopfq/entanglement.hpp"
#include "hopfq/hopf_maps.hpp"
#include "oracles.hpp"

using namespace hopfq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

oracle::Amps amps(const PureState& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

HyperComplex random_octonion(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  HyperComplex h(Level::octonion);
  for (std::size_t i = 0; i < 8; ++i) h[i] = g(rng);
  return h;
}

HyperComplex unit(int k) { return k == 0 ? HyperComplex::real(Level::octonion, 1.0) : HyperComplex::unit(Level::octonion, k); }

struct Shell {
  int code = -1;
  std::string out;
};

Shell shell(const std::string& cmd) {
  Shell r;
  FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome ghz_maximality() {
  Outcome o;
  for (int cut = 1; cut <= 3; ++cut) {
    const double e = e_hopf(PureState::ghz(), cut);
    o.require(std::abs(e - 1.0) < 1e-12, "cut " + std::to_string(cut) + ": E = " + num(e));
  }
  return o;
}

Outcome w_value() {
  Outcome o;
  for (int cut = 1; cut <= 3; ++cut) {
    const double e = e_hopf(PureState::w(), cut);
    o.require(std::abs(e - 8.0 / 9) < 1e-12, "cut " + std::to_string(cut) + ": E = " + num(e));
  }
  const BasePoint b = hopf_base(PureState::w());
  o.require(std::abs(b.x(3) - 2.0 / 3) < 1e-12 && std::abs(b.x(5) - 2.0 / 3) < 1e-12 && std::abs(b.x(9) - 1.0 / 3) < 1e-12,
            "X3, X5, X9 = " + num(b.x(3)) + ", " + num(b.x(5)) + ", " + num(b.x(9)));
  return o;
}

Outcome separability_sensitivity() {
  Outcome o;
  for (std::uint64_t i = 0; i < 10000 && o.ok; ++i) {
    const PureState s = tensor(random_state(1, trial_seed(301, i)), random_state(2, trial_seed(302, i)));
    const BasePoint b = hopf_base(s);
    double m = 0.0;
    for (std::size_t k = 3; k <= 8; ++k) m = std::max(m, std::abs(b.x(k)));
    o.require(m < 1e-10, "sample " + std::to_string(i) + ": max |X3..X8| = " + num(m));
    o.require(e_hopf(s, 1) < 1e-10, "sample " + std::to_string(i) + ": E = " + num(e_hopf(s, 1)));
  }
  return o;
}

Outcome four_det_identity() {
  Outcome o;
  for (std::uint64_t i = 0; i < 10000 && o.ok; ++i) {
    const PureState s = random_state(3, trial_seed(401, i));
    for (int cut = 1; cut <= 3; ++cut) {
      const double det = oracle::partial_trace(amps(s), cut).determinant().real();
      const double err = std::abs(e_hopf(s, cut) - 4.0 * det);
      o.require(err < 1e-10, "sample " + std::to_string(i) + " cut " + std::to_string(cut) + ": error " + num(err));
    }
  }
  return o;
}

Outcome measure_equivalence() {
  Outcome o;
  for (std::uint64_t i = 0; i < 10000 && o.ok; ++i) {
    const PureState s = random_state(3, trial_seed(501, i));
    const double err = std::abs(minor_measure(s, 2.0 / 3) - e_avg(s));
    o.require(err < 1e-10, "sample " + std::to_string(i) + ": error " + num(err));
  }
  return o;
}

Outcome algebra_suite() {
  Outcome o;
  std::mt19937_64 rng(601);
  for (int i = 0; i < 10000 && o.ok; ++i) {
    const HyperComplex a = random_octonion(rng), b = random_octonion(rng);
    const std::string at = "sample " + std::to_string(i) + ": ";
    const double rel = std::abs(norm_sq(mul(a, b)) - norm_sq(a) * norm_sq(b)) / (norm_sq(a) * norm_sq(b));
    o.require(rel < 1e-10, at + "norm multiplicativity " + num(rel));
    o.require(max_abs_diff(mul(mul(a, a), b), mul(a, mul(a, b))) < 1e-10, at + "left alternativity");
    o.require(max_abs_diff(mul(mul(a, b), a), mul(a, mul(b, a))) < 1e-10, at + "flexibility");
    o.require(max_abs_diff(mul(mul(b, a), a), mul(b, mul(a, a))) < 1e-10, at + "right alternativity");
    o.require(max_abs_diff(conj(mul(a, b)), mul(conj(b), conj(a))) < 1e-10, at + "conj anti-automorphism");
    o.require(max_abs_diff(mul(mul(a, b), inverse(b)), a) < 1e-10, at + "inverse cancellation");
  }
  const auto table = oracle::octonion_table();
  int exact = 0;
  for (int a = 1; a < 8; ++a) {
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      if (mul(unit(a), unit(b)) == static_cast<double>(table[a][b].sign) * unit(table[a][b].index)) ++exact;
    }
  }
  o.require(exact == 42, std::to_string(exact) + "/42 cycle-table products");
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (std::uint64_t i = 0; i < 1000 && o.ok; ++i) {
    const BasePoint base = hopf_base(random_state(3, trial_seed(701, i)));
    std::mt19937_64 rng(trial_seed(702, i));
    const HyperComplex f = random_octonion(rng);
    const BasePoint back = hopf_base(hopf_inverse(base, f / norm(f)));
    double err = 0.0;
    for (std::size_t k = 1; k <= 9; ++k) err = std::max(err, std::abs(back.x(k) - base.x(k)));
    o.require(err < 1e-9, "pair " + std::to_string(i) + ": base error " + num(err));
  }
  for (std::uint64_t i = 0; i < 1000 && o.ok; ++i) {
    const PureState s = random_state(3, trial_seed(703, i));
    const ExtendedValue h = h1_value(s), g = stereographic(hopf_base(s));
    o.require(!h.is_infinite() && !g.is_infinite(), "state " + std::to_string(i) + " at the pole");
    if (!o.ok) break;
    const double err = max_abs_diff(h.value(), g.value()) / std::max(1.0, norm_sq(h.value()));
    o.require(err < 1e-9, "state " + std::to_string(i) + ": ratio error " + num(err));
  }
  return o;
}

Outcome two_qubit_chapter() {
  Outcome o;
  const PureState bell = PureState::bell00();
  const double det = partial_trace_keep(bell, 1).det();
  o.require(std::abs(det - 0.25) < 1e-12, "Bell det rho1 = " + num(det));
  o.require(std::abs(separability_2qubit(bell) - 0.5) < 1e-12, "Bell residual = " + num(separability_2qubit(bell)));
  for (std::uint64_t i = 0; i < 1000 && o.ok; ++i) {
    const BasePoint b = hopf_base(tensor(random_state(1, trial_seed(801, i)), random_state(1, trial_seed(802, i))));
    o.require(std::abs(b.x(3)) < 1e-10 && std::abs(b.x(4)) < 1e-10, "product " + std::to_string(i) + ": X3, X4 = " + num(b.x(3)) + ", " + num(b.x(4)));
  }
  return o;
}

Outcome classification() {
  Outcome o;
  const EntanglementReport zb = classify(tensor(PureState::basis("0"), PureState::bell00()));
  o.require(zb.classification.to_string() == "biseparable(cut 1)", "|0> x Bell: " + zb.classification.to_string());
  o.require(std::abs(zb.e_per_cut[0]) < 1e-12 && std::abs(zb.e_per_cut[1] - 1) < 1e-12 && std::abs(zb.e_per_cut[2] - 1) < 1e-12,
            "|0> x Bell e_per_cut = " + num(zb.e_per_cut[0]) + " " + num(zb.e_per_cut[1]) + " " + num(zb.e_per_cut[2]));
  o.require(classify(PureState::ghz()).classification.to_string() == "entangled", "GHZ not entangled");
  o.require(classify(PureState::w()).classification.to_string() == "entangled", "W not entangled");
  for (std::uint64_t i = 0; i < 1000 && o.ok; ++i) {
    const PureState s = tensor(tensor(random_state(1, trial_seed(901, i)), random_state(1, trial_seed(902, i))),
                               random_state(1, trial_seed(903, i)));
    const std::string c = classify(s).classification.to_string();
    o.require(c == "fully-separable", "product " + std::to_string(i) + ": " + c);
  }
  return o;
}

Outcome cli_conformance(const std::string& exe) {
  Outcome o;
  if (exe.empty()) {
    o.require(false, "no executable given");
    return o;
  }
  const auto twice = [&](const std::string& args) {
    const Shell a = shell(exe + " " + args), b = shell(exe + " " + args);
    o.require(a.code == 0 && b.code == 0, "'" + args + "' exit " + std::to_string(a.code));
    o.require(a.out == b.out, "'" + args + "' output differs between runs");
    return a.out;
  };
  const Document ghz = parse_document(twice("analyze ghz"));
  for (double e : ghz.numbers("report", "e_per_cut")) o.require(e == 1.0, "analyze ghz: e_per_cut " + num(e));
  const Document w = parse_document(twice("analyze w"));
  for (double e : w.numbers("report", "e_per_cut")) o.require(std::abs(e - 8.0 / 9) < 1e-12, "analyze w: e_per_cut " + num(e));
  const Document c = parse_document(twice("coords w --cut 1"));
  o.require(std::abs(c.numbers("coords", "X3")[0] - 2.0 / 3) < 1e-12 && std::abs(c.numbers("coords", "X5")[0] - 2.0 / 3) < 1e-12 &&
                std::abs(c.numbers("coords", "X9")[0] - 1.0 / 3) < 1e-12,
            "coords w: wrong X3/X5/X9");
  const Shell check = shell(exe + " check --trials 10000");
  o.require(check.code == 0, "check --trials 10000 exit " + std::to_string(check.code) + "\n" + check.out);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 GHZ maximality", ghz_maximality},
      {"2 W value", w_value},
      {"3 separability sensitivity", separability_sensitivity},
      {"4 E = 4 det rho1", four_det_identity},
      {"5 minor measure = e_avg", measure_equivalence},
      {"6 algebra suite", algebra_suite},
      {"7 fibration round trip", round_trip},
      {"8 two-qubit chapter", two_qubit_chapter},
      {"9 classification", classification},
      {"10 CLI conformance", [&exe] { return cli_conformance(exe); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  criterion %-28s %.2fs%s%s\n", o.ok ? "PASS" : "FAIL", name.c_str(), secs, o.ok ? "" : "  ", o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
