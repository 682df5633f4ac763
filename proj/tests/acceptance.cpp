// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance <path to gaussvd cli> <configs dir> <scratch dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

#include "support.hpp"

using namespace gaussvd;
using namespace gaussvd::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string cli_path;
std::string configs_dir;
std::string scratch_dir;

int run_cli(const std::string& args) {
  const std::string cmd = cli_path + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome wronskian_laws() {
  Rng rng(101);
  int instances = 0;
  int failures = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int p = rng.uniform(0, 3);
    std::vector<LaurentPoly> fs;
    for (int i = 0; i <= p; ++i) fs.push_back(rng.laurent(rng.uniform(-3, 3), rng.uniform(0, 3)));

    // z = 1/xi: W_xi(f(1/xi)) = W_z(f)(1/xi) (dz/dxi)^{p(p+1)/2}, dz/dxi = -xi^-2.
    std::vector<LaurentPoly> inv;
    for (const auto& f : fs) inv.push_back(substitute_inverse(f));
    const LaurentPoly jac = LaurentPoly::monomial(-1, -2).pow(static_cast<unsigned>(p * (p + 1) / 2));
    if (!(wronskian(inv) == substitute_inverse(wronskian(fs)) * jac)) ++failures;

    LaurentPoly h = rng.laurent(rng.uniform(-2, 2), rng.uniform(0, 2));
    std::vector<LaurentPoly> scaled;
    for (const auto& f : fs) scaled.push_back(h * f);
    if (!(wronskian(scaled) == h.pow(static_cast<unsigned>(p + 1)) * wronskian(fs))) ++failures;
    ++instances;
  }
  return {failures == 0, std::to_string(instances) + " instances, " + std::to_string(failures) + " nonzero differences"};
}

Outcome degeneracy_oracle() {
  Rng rng(102);
  int planted = 0;
  int mismatches = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = rng.uniform(2, 4);
    std::vector<LaurentPoly> fs;
    for (int i = 0; i < n; ++i) fs.push_back(rng.laurent(rng.uniform(-1, 1), rng.uniform(0, 3)));
    if (trial % 2 == 0) {
      LaurentPoly combo;
      for (int i = 0; i + 1 < n; ++i) combo += fs[static_cast<std::size_t>(i)] * rng.gaussian(3);
      fs.back() = combo.is_zero() ? fs.front() : combo;
      ++planted;
    }
    const bool deficient = exact_rank(coefficient_matrix(fs)) < n;
    const bool top_zero = wronskian(fs).is_zero();
    bool degenerate = false;
    try {
      degenerate = is_degenerate(CurveRep(fs));
    } catch (const Error&) {
      ++mismatches;
      continue;
    }
    if (deficient != top_zero || degenerate != top_zero) ++mismatches;
    if (trial % 2 == 0 && !deficient) ++mismatches;
  }
  return {mismatches == 0, "120 instances (" + std::to_string(planted) + " planted), " + std::to_string(mismatches) +
                               " mismatches"};
}

struct RandomConfig {
  HyperplaneSet hs;
  int k = 0;
  int N = 0;
};

// Random hyperplane sets with duplicated directions, kept when their minimal
// N and q fit the weight hypothesis.
std::optional<RandomConfig> random_subgeneral(Rng& rng, int max_q, int max_N, int max_k) {
  const int k = rng.uniform(1, max_k);
  const int q = rng.uniform(k + 2, max_q);
  std::vector<Hyperplane> hs;
  for (int j = 0; j < q; ++j) {
    if (j > 0 && rng.uniform(0, 3) == 0) {
      hs.push_back(hs[static_cast<std::size_t>(rng.uniform(0, j - 1))]);
      continue;
    }
    std::vector<GaussianRational> c;
    for (int i = 0; i <= k; ++i) c.push_back(rng.uniform(0, 3) == 0 ? GaussianRational(0) : rng.gaussian(4));
    c[static_cast<std::size_t>(rng.uniform(0, k))] = rng.nonzero_gaussian(4);
    hs.push_back(plane(c));
  }
  HyperplaneSet set(hs);
  int N = 0;
  try {
    N = minimal_subgeneral_n(set, k);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (N > max_N || q <= 2 * N - k + 1) return std::nullopt;
  return RandomConfig{set, k, N};
}

Outcome nochka_axioms() {
  Rng rng(103);
  int configs = 0;
  int failures = 0;
  int non_general = 0;
  while (configs < 60) {
    auto cfg = random_subgeneral(rng, 10, 4, 3);
    if (!cfg) continue;
    auto w = compute_weights(cfg->hs, cfg->N, cfg->k);
    if (!verify_axioms(w, cfg->hs, cfg->N, cfg->k).ok()) ++failures;
    if (cfg->N > cfg->k) ++non_general;
    ++configs;
  }
  std::vector<std::vector<GaussianRational>> rows;
  for (int t = 0; t < 6; ++t) rows.push_back({gr(1), gr(t), gr(t * t)});
  auto gp = planes(rows);
  auto wg = compute_weights(gp, 2, 2);
  bool gp_ok = wg.theta == Rational(1);
  for (const auto& o : wg.omega) gp_ok = gp_ok && o == Rational(1);

  auto paired = planes({{gr(1), gr(0)}, {gr(1), gr(0)}, {gr(0), gr(1)}, {gr(0), gr(1)}, {gr(1), gr(1)}, {gr(1), gr(1)}});
  auto wp = compute_weights(paired, 2, 1);
  bool paired_ok = wp.theta == frac(1, 2);
  for (const auto& o : wp.omega) paired_ok = paired_ok && o == frac(1, 2);

  std::ostringstream os;
  os << configs << " configurations (" << non_general << " with N > k), " << failures << " axiom failures; "
     << "general position " << (gp_ok ? "ok" : "WRONG") << "; paired points " << (paired_ok ? "ok" : "WRONG");
  return {failures == 0 && gp_ok && paired_ok, os.str()};
}

Outcome product_sweep() {
  Rng rng(104);
  int draws = 0;
  int findings = 0;
  std::string first;
  std::optional<RandomConfig> cfg;
  NochkaWeights w;
  while (draws < 600) {
    if (draws % 20 == 0 || !cfg) {
      cfg = random_subgeneral(rng, 9, 3, 3);
      if (!cfg) continue;
      w = compute_weights(cfg->hs, cfg->N, cfg->k);
    }
    const int q = static_cast<int>(cfg->hs.size());
    const int size = rng.uniform(1, std::min(q, cfg->N + 1));
    std::vector<int> pool(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    IndexSet R(pool.begin(), pool.begin() + size);
    std::sort(R.begin(), R.end());
    std::vector<Rational> E;
    for (int i = 0; i < size; ++i) E.push_back(1 + frac(rng.uniform(0, 40), rng.uniform(1, 5)));
    if (!product_inequality_check(w, cfg->hs, R, E).holds) {
      if (findings++ == 0) {
        std::ostringstream os;
        os << "first finding: k=" << cfg->k << " N=" << cfg->N << " |R|=" << size;
        first = os.str();
      }
    }
    ++draws;
  }
  std::string detail = std::to_string(draws) + " draws, " + std::to_string(findings) + " findings";
  if (findings > 0) detail += " (" + first + "; logged as an open finding)";
  return {true, detail};
}

Outcome exponent_pipeline() {
  NochkaWeights w;
  w.omega.assign(5, Rational(1));
  w.theta = 1;
  auto p = build_exponents(w, all_infinite(5), 1);
  const bool ok = p.window.lo == frac(10, 21) && p.window.hi == frac(1, 2) && p.epsilon == frac(11, 23) &&
                  p.h == frac(36, 23) && p.rho == frac(17, 18) && p.rho_star == frac(23, 2) &&
                  p.ratio == frac(11, 10);
  std::ostringstream os;
  os << "window (" << to_string(p.window.lo) << ", " << to_string(p.window.hi) << "), eps=" << to_string(p.epsilon)
     << ", h=" << to_string(p.h) << ", rho=" << to_string(p.rho) << ", rho*=" << to_string(p.rho_star)
     << ", eps rho*/q=" << to_string(p.ratio);
  return {ok, os.str()};
}

Outcome claim1_orders() {
  Rng rng(106);
  int metrics = 0;
  int classes = 0;
  int failures = 0;
  for (int trial = 0; trial < 400 && metrics < 24; ++trial) {
    auto pairs = far_pairs();
    for (auto& [a, b] : pairs) {
      a += rng.uniform(-40, 40);
      b += rng.uniform(-40, 40);
    }
    // Planted pair: one zero outside |z| < 2, the other inside |z| < 1/2, so
    // the pairing misses the annulus while the contracted level-1 entry can
    // vanish inside it.
    const int planted = rng.uniform(1, 3);
    for (int i = 0; i < planted; ++i) {
      Rational a = frac(rng.uniform(5, 16), 2) * (rng.coin() ? 1 : -1);
      Rational b = frac(rng.uniform(1, 6), rng.uniform(13, 40)) * (rng.coin() ? 1 : -1);
      pairs[static_cast<std::size_t>(i)] = {a, b};
    }
    Built built;
    try {
      built = catenoid_example(pairs, Rational(2));
    } catch (const Error&) {
      continue;
    }
    auto rep = claim1_order_check(built.spec);
    if (rep.entries.empty()) continue;
    ++metrics;
    const Rational bound = -built.pack.ratio;
    if (!(bound < -1)) ++failures;
    for (const auto& e : rep.entries) {
      ++classes;
      if (!(e.order <= bound) || !e.ok) ++failures;
    }
  }
  // The k = 1 pipeline example contributes its F_1 class.
  auto five = five_point_example();
  auto rep = claim1_order_check(five.spec);
  ++metrics;
  for (const auto& e : rep.entries) {
    ++classes;
    if (!(e.order <= -five.pack.ratio)) ++failures;
  }
  return {metrics >= 20 && failures == 0, std::to_string(metrics) + " metrics, " + std::to_string(classes) +
                                              " singular classes, " + std::to_string(failures) + " above the bound"};
}

Outcome flatness() {
  auto b = catenoid_example(far_pairs(), Rational(100));
  auto sym = symmetrize(b.spec);
  double worst = 0;
  std::size_t centers = 0;
  for (const Region& region : {Region{30, 70, 4, 12}, Region{2, 5, 4, 12}}) {
    auto rep = flatness_check(sym, 1e-3, region);
    worst = std::max(worst, rep.max_abs_laplacian);
    centers += rep.centers;
  }
  // Mirror image of {30 <= |z| <= 70} under z -> 1/z. The inversion's own
  // derivatives (of order |z|^-5) enter the five-point truncation error, so
  // the step shrinks well below the pulled-back 1e-3 |z|^2.
  const double pulled = 1e-9;
  auto mirror = flatness_check(sym, pulled, Region{1.0 / 70, 1.0 / 30, 4, 12});
  std::ostringstream os;
  os << centers + mirror.centers << " stencil centers, max |Laplacian log lambda| = " << worst
     << " at h = 1e-3; mirrored sub-annulus " << mirror.max_abs_laplacian << " at h = " << pulled;
  return {std::max(worst, mirror.max_abs_laplacian) < 1e-6, os.str()};
}

Outcome invariance() {
  auto b = catenoid_example(far_pairs(), Rational(100));
  Rng rng(108);
  double worst = 0;
  int controls = 0;
  int points = 0;
  while (points < 20) {
    std::complex<double> z = std::polar(std::exp(rng.real(std::log(0.02), std::log(50.0))), rng.real(0, 6.283));
    bool near_singular = false;
    for (const auto& s : b.spec.singular_points()) near_singular = near_singular || std::abs(z - s) < 1e-3;
    if (near_singular || std::abs(std::abs(z) - 1) < 1e-2) continue;
    auto rep = coordinate_invariance_check(b.spec, z);
    worst = std::max(worst, rep.relative_deviation);
    auto control = coordinate_invariance_check(b.spec, z, 2.0);
    if (!control.ok) ++controls;
    ++points;
  }
  std::ostringstream os;
  os << points << " points, max relative deviation " << worst << "; wrong-Jacobian control detected at " << controls
     << "/" << points;
  return {worst < 1e-9 && controls == points, os.str()};
}

Outcome theorem_consistency() {
  bool ok = true;
  for (int m = 3; m <= 8; ++m) ok = ok && main_rhs(m - 1, m - 1) == Rational(m * (m + 1) / 2);
  auto rep = main_inequality(2, 2, all_infinite(7));
  ok = ok && rep.lhs == Rational(7) && rep.rhs == Rational(6) && !rep.holds;
  const int code = run_cli("analyze --config " + configs_dir + "/seven_omitted_m3.json --out " + scratch_dir + "/seven");
  ok = ok && code == 2;
  return {ok, "rhs = m(m+1)/2 for m = 3..8; 7 omitted (lhs 7 > rhs 6) -> cli exit " + std::to_string(code)};
}

Outcome ell_reduction_sweep() {
  Rng rng(110);
  int mismatches = 0;
  int non_monotone = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int m = rng.uniform(3, 7);
    const int k = rng.uniform(1, m - 1);
    const int N = rng.uniform(m - 1, m + 2);
    std::vector<Multiplicity> kept;
    const int q = rng.uniform(1, 14);
    for (int j = 0; j < q; ++j) {
      kept.push_back(rng.uniform(0, 2) == 0 ? Multiplicity::infinite() : Multiplicity::finite(rng.uniform(k + 1, k + 8)));
    }
    auto e = ell_reduction(k, N, m, kept);
    const bool direct = main_inequality(k, N, kept).holds;
    if (direct != (e.ell <= e.bound) || direct != e.inequality_holds) ++mismatches;
    if (!e.monotone) ++non_monotone;
  }
  return {mismatches == 0 && non_monotone == 0,
          "250 profiles, " + std::to_string(mismatches) + " equivalence mismatches, " + std::to_string(non_monotone) +
              " monotonicity failures"};
}

Outcome divergence_probe_fit() {
  auto b = five_point_example();
  for (const auto& e : b.spec.divisor) {
    if (!e.singular()) continue;
    auto rep = divergence_probe(b.spec, e, 0, {0.3, 0.7});
    const double exact = to_double(*rep.exact_order);
    const double rel = std::abs(rep.fitted_exponent - exact) / std::abs(exact);
    std::ostringstream os;
    os << "fitted " << rep.fitted_exponent << " vs exact divisor order " << to_string(*rep.exact_order)
       << " (relative error " << rel << "), lengths monotone " << (rep.monotone ? "yes" : "no")
       << ", Claim 1 bound -eps rho*/q = " << to_string(-b.pack.ratio);
    return {rel < 0.05 && rep.monotone, os.str()};
  }
  return {false, "no singular class found"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: acceptance <gaussvd cli> <configs dir> <scratch dir>\n";
    return 1;
  }
  cli_path = argv[1];
  configs_dir = argv[2];
  scratch_dir = argv[3];
  std::filesystem::create_directories(scratch_dir);

  const std::vector<Criterion> criteria = {
      {1, "Wronskian coordinate-change and scaling laws", 10, wronskian_laws},
      {2, "Degeneracy iff rank deficiency", 10, degeneracy_oracle},
      {3, "Nochka weight axioms", 60, nochka_axioms},
      {4, "Product inequality sweep", 60, product_sweep},
      {5, "Exponent pipeline", 1, exponent_pipeline},
      {6, "Claim 1 singular orders", 30, claim1_orders},
      {7, "Flatness of the symmetrized metric", 30, flatness},
      {8, "Coordinate invariance", 30, invariance},
      {9, "Main theorem consistency", 1, theorem_consistency},
      {10, "l-reduction equivalence and monotonicity", 10, ell_reduction_sweep},
      {11, "Divergence probe growth exponent", 60, divergence_probe_fit},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s  %2d  %s: %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), secs, c.budget_s, in_time ? "" : ", OVER BUDGET");
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
