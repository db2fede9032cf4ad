// Copyright 2026 The cqedsim Authors
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

// One PASS/FAIL line per criterion. `--only N` runs a single criterion.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cqed/coupling.hpp"
#include "cqed/entanglement.hpp"
#include "cqed/errors.hpp"
#include "cqed/hamiltonian.hpp"
#include "cqed/io.hpp"
#include "cqed/langevin.hpp"
#include "cqed/linalg.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/sweep.hpp"
#include "cqed/tl_modes.hpp"
#include "oracles/oracles.hpp"

using namespace cqed;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

RunConfig shipped(const std::string& name) {
  return load_config(std::string(CQED_CONFIG_DIR) + "/" + name);
}

Outcome mode_suite() {
  Timer t;
  CircuitParams p;
  double ortho = 0.0, stiff = 0.0;
  bool parity = true, nodes = true;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) ortho = std::max(ortho, orthonormality_check(m, n, p, 2048));
    stiff = std::max(stiff, stiffness_check(m, p, 2048));
    auto u = make_mode_function(m, p);
    const double sign = (m % 2) ? 1.0 : -1.0;
    for (int k = 0; k <= 200; ++k) {
      const double x = p.half_length_l * k / 200.0;
      if (std::abs(u(-x) - sign * u(x)) > 1e-12 * u.norm_const) parity = false;
    }
    int changes = 0;
    const int n = 4096;
    double prev = u(-p.half_length_l + p.half_length_l / n);
    for (int i = 2; i < 2 * n - 1; ++i) {
      const double v = u(-p.half_length_l + i * p.half_length_l / n);
      if ((v > 0) != (prev > 0)) ++changes;
      prev = v;
    }
    if (changes != m - 1) nodes = false;
  }
  const double secs = t.seconds();
  Outcome o;
  o.pass = ortho < 1e-10 && stiff < 1e-8 && parity && nodes && secs < 5.0;
  o.detail = "max orthonormality residual " + fmt("%.2e", ortho) + ", max stiffness residual " +
             fmt("%.2e", stiff) + ", parity " + (parity ? "ok" : "broken") + ", nodes " +
             (nodes ? "ok" : "wrong") + ", " + fmt("%.2f", secs) + " s";
  return o;
}

Outcome even_mode_decoupling() {
  CircuitParams p;
  const double l = p.half_length_l;
  double g1max = 0.0;
  for (int k = 0; k <= 2000; ++k) {
    const double x = -l + 2 * l * k / 2000.0;
    try {
      g1max = std::max(g1max, std::abs(gamma_coupling(1, x, p)));
    } catch (const Error&) {
    }
  }
  const double g2_center = std::abs(gamma_coupling(2, 0.0, p));
  double g2quarter = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double x = -0.25 * l + 0.5 * l * k / 1000.0;
    g2quarter = std::max(g2quarter, std::abs(gamma_coupling(2, x, p)));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  Outcome o;
  const bool center_ok = g2_center <= 4 * eps * g1max;
  const bool quarter_ok = g2quarter < 0.05 * g1max;
  o.pass = center_ok && quarter_ok;
  o.detail = "|gamma_2(0)|/max|gamma_1| = " + fmt("%.2e", g2_center / g1max) +
             ", max_{|X|<=l/4}|gamma_2| / max|gamma_1| = " + fmt("%.4f", g2quarter / g1max) +
             " (need < 0.05)";
  return o;
}

ComplexMatrix to_library(const oracle::CxMatrix& h) {
  ComplexMatrix out(h.rows(), h.cols());
  for (long i = 0; i < h.rows(); ++i) {
    for (long j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  }
  return out;
}

Outcome eigensolver_oracles() {
  Timer t;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5, 5);
  double err2 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double a = u(rng), d = u(rng);
    const Complex b(u(rng), u(rng));
    ComplexMatrix h(2, 2);
    h << a, b, std::conj(b), d;
    auto es = hermitian_eigs(h);
    auto [lo, hi] = oracle::eig2(a, b, d);
    err2 = std::max({err2, std::abs(es.values(0) - lo), std::abs(es.values(1) - hi)});
  }
  double err8 = 0.0;
  int invariant_failures = 0;
  for (int k = 0; k < 100; ++k) {
    auto ho = oracle::random_hermitian(8, rng, 3.0);
    auto h = to_library(ho);
    auto es = hermitian_eigs(h);
    auto ref = oracle::bisection_eigenvalues(ho);
    for (int i = 0; i < 8; ++i) err8 = std::max(err8, std::abs(es.values(i) - ref[i]));
    if (std::abs(es.values.sum() - h.trace().real()) > 1e-10) ++invariant_failures;
    for (int i = 0; i < 8; ++i) {
      bool inside = false;
      for (int r = 0; r < 8; ++r) {
        double rad = 0;
        for (int c = 0; c < 8; ++c) {
          if (c != r) rad += std::abs(h(r, c));
        }
        if (std::abs(es.values(i) - h(r, r).real()) <= rad + 1e-12) inside = true;
      }
      if (!inside) ++invariant_failures;
    }
  }
  const double secs = t.seconds();
  Outcome o;
  o.pass = err2 < 1e-12 && err8 < 1e-8 && invariant_failures == 0 && secs < 10.0;
  o.detail = "2x2 max error " + fmt("%.2e", err2) + ", 8x8 max error vs Sturm bisection " +
             fmt("%.2e", err8) + ", invariant failures " + std::to_string(invariant_failures) +
             ", " + fmt("%.2f", secs) + " s";
  return o;
}

Outcome decoupled_spectrum() {
  CircuitParams base;
  TruncationSpec t{2, 6, 6};
  HamiltonianOptions opt;
  opt.coupling_scale = 0.0;
  double worst = 0.0;
  int compared = 0;
  for (double ratio : {2.0, 6.8, 40.0, 80.0}) {
    for (double frac : {-0.9, 0.0, 0.45}) {
      auto p = with_ej_over_ec(base, ratio);
      const double x = frac * p.half_length_l;
      auto cc = coupling_constants_for_modes(2, x, p);
      auto levels = eigh<double>(assemble_hamiltonian_real(cc, t, p, opt)).values;
      for (int n1 = 0; n1 <= t.tl_photon_cutoff - 3; ++n1) {
        for (int n2 = 0; n2 <= t.tl_photon_cutoff - 3; ++n2) {
          for (int n = 0; n <= t.transmon_levels - 3; ++n) {
            const double e = diagonal_level_energy({n1, n2}, n, cc, p);
            double best = std::numeric_limits<double>::infinity();
            for (long k = 0; k < levels.size(); ++k) best = std::min(best, std::abs(levels(k) - e));
            worst = std::max(worst, best / std::abs(e));
            ++compared;
          }
        }
      }
    }
  }
  Outcome o;
  o.pass = worst < 1e-8;
  o.detail = std::to_string(compared) + " levels compared, max relative deviation " +
             fmt("%.2e", worst);
  return o;
}

Outcome purcell_checks() {
  CircuitParams p;
  auto cc = coupling_constants(1, 0.6 * p.half_length_l, p);
  DriveSpec d;
  d.delta_m = 0.0;
  const double g = cc.gamma_m;
  const double resonant = modified_decay(cc, d, p).kappa_n_prime;
  const double expect = p.kappa_n / 2 + 4 * g * g / p.kappa_m;
  const double rel0 = std::abs(resonant - expect) / expect;
  double even = 0.0;
  for (double dm : {1e6, 3.3e7, 2e8, 5e9}) {
    d.delta_m = dm;
    const double plus = modified_decay(cc, d, p).kappa_n_prime;
    d.delta_m = -dm;
    const double minus = modified_decay(cc, d, p).kappa_n_prime;
    even = std::max(even, std::abs(plus - minus) / plus);
  }
  d.delta_m = 4.1e7;
  auto doubled = cc;
  doubled.gamma_m *= 2;
  const double ratio = modified_decay(doubled, d, p).purcell_term / modified_decay(cc, d, p).purcell_term;
  Outcome o;
  o.pass = rel0 < 1e-12 && even == 0.0 && std::abs(ratio - 4.0) < 1e-9;
  o.detail = "resonant-limit relative error " + fmt("%.2e", rel0) + ", evenness residual " +
             fmt("%.2e", even) + ", doubling ratio " + fmt("%.12f", ratio);
  return o;
}

Outcome sde_equivalence() {
  Timer t;
  constexpr double kMHz = 2 * M_PI * 1e6;
  const double gammas[] = {0.05, 0.2, 0.5, 1.0, 1.5};
  SdeSettings s;
  s.scheme = SdeScheme::kExactGaussian;
  s.seed = 1;
  s.n_traj = 10000;
  s.dt = 1.5e-9;
  s.t_end = 6e-6;
  s.burn_in = 0.5;
  std::ostringstream detail;
  int passed = 0;
  auto agree = [](double model, double sde, double se) {
    return std::abs(model - sde) <= std::max(0.05 * std::abs(sde), 3.0 * se);
  };
  for (double g : gammas) {
    FluctuationModel m{g * kMHz, 0.5 * g * kMHz, 10 * kMHz, 1 * kMHz, 8 * kMHz, 8 * kMHz, 0.0, 0.0};
    detail << " [g=" << g << " MHz:";
    try {
      auto pn = photon_numbers(m);
      auto d = cross_correlation(m, pn.n_t);
      auto sde = sde_moment_oracle(m, s);
      const double scale = 2 * std::sqrt(m.kappa_m * m.kappa_n);
      const bool ok = agree(pn.n_tl, sde.n_tl, sde.stderr_n_tl) &&
                      agree(pn.n_t, sde.n_t, sde.stderr_n_t) &&
                      agree(std::abs(d), scale * std::abs(sde.cross), scale * sde.stderr_cross);
      passed += ok;
      detail << " n_TL " << fmt("%.4g", pn.n_tl) << " vs " << fmt("%.4g", sde.n_tl) << "+-"
             << fmt("%.1g", sde.stderr_n_tl) << ", n_T " << fmt("%.4g", pn.n_t) << " vs "
             << fmt("%.4g", sde.n_t) << "+-" << fmt("%.1g", sde.stderr_n_t) << ", |d| "
             << fmt("%.4g", std::abs(d)) << " vs " << fmt("%.4g", scale * std::abs(sde.cross))
             << "+-" << fmt("%.1g", scale * sde.stderr_cross) << (ok ? " ok]" : " MISMATCH]");
    } catch (const Error& e) {
      detail << " error " << error_name(e.code()) << "]";
    }
  }
  const double secs = t.seconds();
  Outcome o;
  o.pass = passed == 5 && secs < 120.0;
  o.detail = std::to_string(passed) + "/5 points agree," + detail.str() + ", " +
             fmt("%.1f", secs) + " s";
  return o;
}

SweepGrid entanglement_grid(const std::string& config, double* secs) {
  auto cfg = shipped(config);
  Timer t;
  auto grid = run_sweep(cfg.params, cfg.model, cfg.sweep.axes, {"epsilon_e"})[0];
  *secs = t.seconds();
  return grid;
}

Outcome entanglement_map() {
  double secs = 0;
  auto g = entanglement_grid("entangle_mode1.json", &secs);
  const auto& ya = g.axes[0];
  const auto& xa = g.axes[1];
  const double l = CircuitParams{}.half_length_l;
  const int ny = ya.count, nx = xa.count;
  auto ok = [&](int i) { return g.error_mask[i] == ErrorCode::kOk; };
  std::vector<int> component(g.size(), -1);
  int components = 0;
  bool central_component = false;
  double eps_max = 0.0;
  int outer_violations = 0;
  for (int i = 0; i < ny * nx; ++i) {
    if (!ok(i)) continue;
    eps_max = std::max(eps_max, g.values[i]);
    if (std::abs(xa.value(i % nx)) > 0.5 * l && !(g.values[i] < 1.0)) ++outer_violations;
    if (g.values[i] > 1.0 && component[i] < 0) {
      bool central = false;
      std::queue<int> q;
      q.push(i);
      component[i] = components;
      while (!q.empty()) {
        const int c = q.front();
        q.pop();
        if (std::abs(xa.value(c % nx)) < 0.1 * l) central = true;
        const int r = c / nx, col = c % nx;
        const int nbr[4][2] = {{r - 1, col}, {r + 1, col}, {r, col - 1}, {r, col + 1}};
        for (auto [rr, cc] : nbr) {
          if (rr < 0 || rr >= ny || cc < 0 || cc >= nx) continue;
          const int k = rr * nx + cc;
          if (ok(k) && g.values[k] > 1.0 && component[k] < 0) {
            component[k] = components;
            q.push(k);
          }
        }
      }
      ++components;
      central_component = central_component || central;
    }
  }
  Outcome o;
  o.pass = components == 1 && central_component && outer_violations == 0 && secs < 60.0;
  o.detail = "entangled regions " + std::to_string(components) + ", max epsilon_e " +
             fmt("%.3e", eps_max) + ", masked " + std::to_string(g.masked_count()) + "/" +
             std::to_string(g.size()) + ", violations at |X|>0.5l " +
             std::to_string(outer_violations) + ", " + fmt("%.1f", secs) + " s";
  return o;
}

Outcome even_mode_separability() {
  double secs = 0;
  auto g = entanglement_grid("entangle_mode2.json", &secs);
  int above = 0, valid = 0;
  double eps_max = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.error_mask[i] != ErrorCode::kOk) continue;
    ++valid;
    eps_max = std::max(eps_max, g.values[i]);
    if (g.values[i] > 1.0) ++above;
  }
  Outcome o;
  o.pass = valid > 0 && above == 0;
  o.detail = "unmasked points " + std::to_string(valid) + ", points with epsilon_e > 1: " +
             std::to_string(above) + ", max epsilon_e " + fmt("%.3e", eps_max);
  return o;
}

Outcome coupling_capacitance_trend() {
  auto cfg = shipped("coupling_capacitance.json");
  auto g = run_sweep(cfg.params, cfg.model, cfg.sweep.axes, {"epsilon_e"})[0];
  std::ostringstream detail;
  bool ok = g.size() == 4;
  for (std::size_t i = 0; i < g.size(); ++i) {
    detail << (i ? ", " : "") << fmt("%.0f", g.axes[0].value(i) * 1e15) << " fF: ";
    if (g.error_mask[i] != ErrorCode::kOk) {
      detail << error_name(g.error_mask[i]);
      ok = false;
    } else {
      detail << fmt("%.3e", g.values[i]);
      if (i > 0 && g.error_mask[i - 1] == ErrorCode::kOk && !(g.values[i] < g.values[i - 1])) {
        ok = false;
      }
    }
  }
  Outcome o;
  o.pass = ok;
  o.detail = "X = " + fmt("%.3f", cfg.params.x_j / cfg.params.half_length_l) + " l; " + detail.str();
  return o;
}

Outcome pulse_duration() {
  auto cfg = shipped("pulse_duration.json");
  const auto& p = cfg.params;
  const double l = p.half_length_l;
  double tau_max = 0.0;
  int masked_near = 0;
  for (int k = 1; k <= 64; ++k) {
    auto q = p;
    q.x_j = 0.05 * l * k / 64.0;
    auto v = evaluate_point(q, cfg.model, {"tau_p"})[0];
    if (v.error != ErrorCode::kOk) {
      ++masked_near;
      continue;
    }
    tau_max = std::max(tau_max, v.value);
  }
  auto g = run_sweep(p, cfg.model, cfg.sweep.axes, {"tau_p"})[0];
  const auto& xa = g.axes[0];
  double sharpest = -1.0, at = 0.0;
  for (int i = 0; i + 1 < xa.count; ++i) {
    if (g.error_mask[i] != ErrorCode::kOk || g.error_mask[i + 1] != ErrorCode::kOk) continue;
    const double slope = std::abs(g.values[i + 1] - g.values[i]) / (xa.value(i + 1) - xa.value(i));
    if (slope > sharpest) {
      sharpest = slope;
      at = 0.5 * (xa.value(i) + xa.value(i + 1));
    }
  }
  const bool range_ok = masked_near == 0 && tau_max >= 15e-12 && tau_max <= 150e-12;
  const bool sharp_ok = sharpest > 0 && std::abs(at) < 0.1 * l;
  Outcome o;
  o.pass = range_ok && sharp_ok;
  o.detail = "E_J/E_c = " + fmt("%.1f", ej_over_ec(p)) + ", max tau_p on (0, 0.05l] = " +
             fmt("%.1f", tau_max * 1e12) + " ps (need 15..150), sharpest variation at X = " +
             fmt("%.3f", at / l) + " l (need |X| < 0.1 l)";
  return o;
}

Outcome gap_sharpness() {
  CircuitParams p;
  ModelSettings s;
  s.trunc.n_tl_modes = 1;
  const double l = p.half_length_l;
  const int n = 801;
  std::vector<SweepAxis> axes{{AxisName::kXPosition, -l, l, n}};
  auto g = run_sweep(p, s, axes, {"dE_21"})[0];
  double inner = 0, outer = 0;
  int n_in = 0, n_out = 0, skipped = 0;
  for (int i = 1; i + 1 < n; ++i) {
    const double x = axes[0].value(i);
    const bool in = std::abs(x) < 0.05 * l;
    const bool out = std::abs(x) > 0.25 * l && std::abs(x) < 0.75 * l;
    if (!in && !out) continue;
    if (g.error_mask[i - 1] != ErrorCode::kOk || g.error_mask[i + 1] != ErrorCode::kOk) {
      ++skipped;
      continue;
    }
    const double d = std::abs(g.values[i + 1] - g.values[i - 1]) /
                     (axes[0].value(i + 1) - axes[0].value(i - 1));
    if (in) {
      inner += d;
      ++n_in;
    } else {
      outer += d;
      ++n_out;
    }
  }
  inner /= std::max(n_in, 1);
  outer /= std::max(n_out, 1);
  const double ratio = outer > 0 ? inner / outer : std::numeric_limits<double>::infinity();
  Outcome o;
  o.pass = n_in > 0 && n_out > 0 && ratio >= 10.0;
  o.detail = "mean |d dE_21/dX| inner " + fmt("%.3e", inner) + " GHz/m, outer " +
             fmt("%.3e", outer) + " GHz/m, ratio " + fmt("%.3f", ratio) + " (need >= 10), skipped " +
             std::to_string(skipped);
  return o;
}

int run_cli(const std::string& args, const std::string& threads) {
  const std::string cmd = "CQEDSIM_THREADS=" + threads + " " + CQEDSIM_PATH + " " + args +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome determinism() {
  auto root = fs::temp_directory_path() / "cqed_determinism";
  fs::remove_all(root);
  const std::string cfg = std::string(CQED_CONFIG_DIR) + "/entangle_mode1.json";
  const std::string obs = " -s 'sweep.observables=[\"epsilon_e\",\"tau_p\",\"dE_21\"]'";
  const int a = run_cli("sweep -c " + cfg + obs + " -o " + (root / "a").string(), "1");
  const int b = run_cli("sweep -c " + cfg + obs + " -o " + (root / "b").string(), "1");
  const int c = run_cli("sweep -c " + cfg + obs + " -o " + (root / "c").string(), "8");
  bool csv_same = a == 0 && b == 0 && c == 0;
  for (const char* f : {"epsilon_e.csv", "tau_p.csv", "dE_21.csv"}) {
    const auto ta = slurp(root / "a" / f);
    csv_same = csv_same && !ta.empty() && ta == slurp(root / "b" / f) && ta == slurp(root / "c" / f);
  }

  constexpr double kMHz = 2 * M_PI * 1e6;
  FluctuationModel m{0.5 * kMHz, 0.25 * kMHz, 10 * kMHz, 1 * kMHz, 8 * kMHz, 8 * kMHz, 0.1, 0.2};
  SdeSettings s;
  s.seed = 42;
  s.n_traj = 500;
  s.dt = 1e-9;
  s.t_end = 1e-6;
  s.threads = 1;
  auto r1 = sde_moment_oracle(m, s);
  auto r2 = sde_moment_oracle(m, s);
  s.threads = 8;
  auto r3 = sde_moment_oracle(m, s);
  auto same = [](const SdeMoments& x, const SdeMoments& y) {
    const double vx[] = {x.n_tl, x.n_t, x.cross.real(), x.cross.imag(), x.stderr_n_tl, x.stderr_cross};
    const double vy[] = {y.n_tl, y.n_t, y.cross.real(), y.cross.imag(), y.stderr_n_tl, y.stderr_cross};
    return std::memcmp(vx, vy, sizeof vx) == 0;
  };
  const bool sde_same = same(r1, r2) && same(r1, r3);
  Outcome o;
  o.pass = csv_same && sde_same;
  o.detail = std::string("sweep CSV (runs x2 at 1 thread, x1 at 8 threads) ") +
             (csv_same ? "identical" : "differ") + ", SDE moments " +
             (sde_same ? "bitwise identical" : "differ");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  const std::vector<Criterion> criteria{
      {1, "mode orthogonality suite", mode_suite},
      {2, "even-mode decoupling", even_mode_decoupling},
      {3, "eigensolver oracles", eigensolver_oracles},
      {4, "decoupled spectrum", decoupled_spectrum},
      {5, "modified decay formula", purcell_checks},
      {6, "photon numbers vs stochastic oracle", sde_equivalence},
      {7, "entanglement map, mode 1", entanglement_map},
      {8, "even-mode separability", even_mode_separability},
      {9, "coupling capacitance trend", coupling_capacitance_trend},
      {10, "pulse duration order", pulse_duration},
      {11, "energy gap sharpness", gap_sharpness},
      {12, "determinism", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d %s: %s (%s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
