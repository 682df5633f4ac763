#include "gaussvd/nochka.hpp"

#include <numeric>

#include "gaussvd/lp.hpp"

namespace gaussvd {

namespace {

struct DependentSubset {
  IndexSet r;
  int d;
};

struct SubsetScan {
  std::size_t enumerated = 0;
  std::vector<DependentSubset> dependent;
};

SubsetScan scan_subsets(const HyperplaneSet& hs, int N, std::uint64_t cap) {
  const int q = static_cast<int>(hs.size());
  SubsetScan out;
  std::uint64_t total = 0;
  for (int s = 1; s <= std::min(N + 1, q); ++s) total += binomial(q, s);
  require(total <= cap, Errc::precondition, "subset enumeration exceeds the configured cap");
  for (int s = 1; s <= std::min(N + 1, q); ++s) {
    for_each_subset(q, s, [&](const IndexSet& r) {
      ++out.enumerated;
      int d = span_dimension(hs, r);
      if (d < s) out.dependent.push_back({r, d});
      return true;
    });
  }
  return out;
}

// Variables: omega_0..omega_{q-1}, theta, and optionally t (a common lower bound on omega).
class WeightProgram {
 public:
  WeightProgram(int q, int N, int k, const SubsetScan& scan, bool with_t) : q_(q) {
    lp_.num_vars = q + 1 + (with_t ? 1 : 0);
    lp_.objective.assign(static_cast<std::size_t>(lp_.num_vars), Rational(0));
    auto [lo, hi] = theta_window(N, k);
    for (int j = 0; j < q; ++j) {
      auto a = zero();
      a[idx(j)] = 1;
      a[theta()] = -1;
      lp_.add(a, Relation::le, 0);
    }
    lp_.add(unit(theta()), Relation::le, 1);
    lp_.add(unit(theta()), Relation::ge, lo);
    lp_.add(unit(theta()), Relation::le, hi);
    auto sum = zero();
    for (int j = 0; j < q; ++j) sum[idx(j)] = 1;
    sum[theta()] = -Rational(q - 2 * N + k - 1);
    lp_.add(sum, Relation::eq, Rational(k + 1));
    for (const auto& ds : scan.dependent) {
      auto a = zero();
      for (int j : ds.r) a[idx(j)] = 1;
      lp_.add(a, Relation::le, Rational(ds.d));
    }
    if (with_t) {
      for (int j = 0; j < q; ++j) {
        auto a = zero();
        a[idx(j)] = 1;
        a[t()] = -1;
        lp_.add(a, Relation::ge, 0);
      }
    }
  }

  std::size_t idx(int j) const { return static_cast<std::size_t>(j); }
  std::size_t theta() const { return static_cast<std::size_t>(q_); }
  std::size_t t() const { return static_cast<std::size_t>(q_ + 1); }

  std::vector<Rational> zero() const { return std::vector<Rational>(static_cast<std::size_t>(lp_.num_vars)); }
  std::vector<Rational> unit(std::size_t i) const {
    auto a = zero();
    a[i] = 1;
    return a;
  }

  void fix(std::size_t var, const Rational& value) { lp_.add(unit(var), Relation::eq, value); }
  void at_least(std::size_t var, const Rational& value) { lp_.add(unit(var), Relation::ge, value); }
  void at_most(std::size_t var, const Rational& value) { lp_.add(unit(var), Relation::le, value); }

  LpResult solve(std::size_t var, bool maximize, NochkaProvenance& prov) {
    lp_.objective = zero();
    lp_.objective[var] = maximize ? -1 : 1;
    LpResult r = solve_lp(lp_);
    ++prov.lp_solves;
    prov.pivots += r.pivots;
    return r;
  }

  std::size_t constraint_count() const { return lp_.constraints.size(); }

 private:
  int q_;
  LinearProgram lp_;
};

void check_hypothesis(const HyperplaneSet& hs, int N, int k) {
  const int q = static_cast<int>(hs.size());
  require(k >= 1 && N >= k, Errc::precondition, "Nochka weights need N >= k >= 1");
  require(static_cast<int>(hs.dim()) == k + 1, Errc::precondition,
          "hyperplanes must live in P^k (expected " + std::to_string(k + 1) + " coefficients)");
  require(q > 2 * N - k + 1, Errc::hypothesis,
          "Nochka weights need q > 2N-k+1 (q=" + std::to_string(q) + ", 2N-k+1=" + std::to_string(2 * N - k + 1) + ")");
}

Rational pow(const Rational& base, unsigned long e) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

std::pair<Rational, Rational> theta_window(int N, int k) {
  require(2 * N - k + 1 > 0, Errc::precondition, "theta window needs 2N-k+1 > 0");
  Rational lo(k + 1, 2 * N - k + 1);
  Rational hi(k + 1, N + 1);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

NochkaWeights compute_weights(const HyperplaneSet& hs, int N, int k, std::uint64_t cap) {
  check_hypothesis(hs, N, k);
  const int q = static_cast<int>(hs.size());
  SubsetScan scan = scan_subsets(hs, N, cap);

  NochkaWeights out;
  auto& prov = out.provenance;
  prov.subsets_enumerated = scan.enumerated;
  prov.subset_constraints = scan.dependent.size();

  WeightProgram closed(q, N, k, scan, false);
  prov.total_constraints = closed.constraint_count();
  LpResult lowest = closed.solve(closed.theta(), false, prov);
  if (lowest.status != LpStatus::optimal) {
    throw Error(Errc::infeasible, "weight program is infeasible; check the subgeneral-position input");
  }
  Rational theta = lowest.value;

  // Strict positivity: the largest common lower bound t at this theta.
  auto max_margin = [&](const Rational& th) {
    WeightProgram p(q, N, k, scan, true);
    p.fix(p.theta(), th);
    LpResult r = p.solve(p.t(), true, prov);
    return r.status == LpStatus::optimal ? r.x[p.t()] : Rational(0);
  };
  Rational margin = max_margin(theta);
  if (margin <= 0) {
    WeightProgram upper(q, N, k, scan, false);
    LpResult highest = upper.solve(upper.theta(), true, prov);
    theta = (theta + highest.value) / 2;
    margin = max_margin(theta);
    prov.theta_minimal = false;
    if (margin <= 0) {
      throw Error(Errc::infeasible, "no weights with all omega(j) > 0 exist for this configuration");
    }
  }

  WeightProgram lex(q, N, k, scan, false);
  lex.fix(lex.theta(), theta);
  for (int j = 0; j < q; ++j) lex.at_least(lex.idx(j), margin);
  for (int j = 0; j < q; ++j) {
    LpResult r = lex.solve(lex.idx(j), false, prov);
    require(r.status == LpStatus::optimal, Errc::internal, "lexicographic stage lost feasibility");
    lex.fix(lex.idx(j), r.value);
    if (j + 1 == q) out.omega.assign(r.x.begin(), r.x.begin() + q);
  }
  out.theta = theta;
  prov.objective = prov.theta_minimal ? "min theta, then lexicographic min omega"
                                      : "interior theta, then lexicographic min omega";

  AxiomReport check = verify_axioms(out, hs, N, k, cap);
  require(check.ok(), Errc::internal,
          "computed weights fail axiom " + (check.ok() ? std::string() : std::to_string(check.violations[0].axiom)));
  return out;
}

bool AxiomReport::violates(int axiom) const {
  for (const auto& v : violations) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

AxiomReport verify_axioms(const NochkaWeights& w, const HyperplaneSet& hs, int N, int k, std::uint64_t cap) {
  const int q = static_cast<int>(hs.size());
  require(static_cast<int>(w.omega.size()) == q, Errc::invalid_argument,
          "weights have " + std::to_string(w.omega.size()) + " entries for " + std::to_string(q) + " hyperplanes");
  AxiomReport rep;
  for (int j = 0; j < q; ++j) {
    const Rational& o = w.omega[static_cast<std::size_t>(j)];
    if (!(o > 0 && o <= w.theta)) {
      rep.violations.push_back({1, "omega(" + std::to_string(j + 1) + ")=" + to_string(o) +
                                       " is not in (0, theta], theta=" + to_string(w.theta),
                                {j}});
    }
  }
  if (w.theta > 1) rep.violations.push_back({1, "theta=" + to_string(w.theta) + " exceeds 1", {}});

  Rational sum = std::accumulate(w.omega.begin(), w.omega.end(), Rational(0));
  Rational target = Rational(k + 1) + w.theta * Rational(q - 2 * N + k - 1);
  if (sum != target) {
    rep.violations.push_back({2, "sum of omega is " + to_string(sum) + ", expected " + to_string(target), {}});
  }

  auto [lo, hi] = theta_window(N, k);
  if (w.theta < lo || w.theta > hi) {
    rep.violations.push_back(
        {3, "theta=" + to_string(w.theta) + " is outside [" + to_string(lo) + ", " + to_string(hi) + "]", {}});
  }

  require(binomial(q, std::min(N + 1, q)) <= cap, Errc::precondition, "subset enumeration exceeds the configured cap");
  for (int s = 1; s <= std::min(N + 1, q); ++s) {
    for_each_subset(q, s, [&](const IndexSet& r) {
      Rational part = 0;
      for (int j : r) part += w.omega[static_cast<std::size_t>(j)];
      int d = span_dimension(hs, r);
      if (part > d) {
        rep.violations.push_back(
            {4, "sum of omega over subset is " + to_string(part) + " > d(R)=" + std::to_string(d), r});
      }
      return true;
    });
  }
  return rep;
}

bool weights_feasible_with_theta_at_most(const HyperplaneSet& hs, int N, int k, const Rational& theta_max,
                                         std::uint64_t cap) {
  check_hypothesis(hs, N, k);
  SubsetScan scan = scan_subsets(hs, N, cap);
  NochkaProvenance prov;
  WeightProgram p(static_cast<int>(hs.size()), N, k, scan, false);
  p.at_most(p.theta(), theta_max);
  return p.solve(p.theta(), false, prov).status == LpStatus::optimal;
}

ProductCheck product_inequality_check(const NochkaWeights& w, const HyperplaneSet& hs, const IndexSet& R,
                                      const std::vector<Rational>& E) {
  const std::size_t q = hs.size();
  require(!R.empty(), Errc::precondition, "product inequality needs a nonempty R");
  require(w.omega.size() == q, Errc::invalid_argument, "weights do not match the hyperplane set");
  require(E.size() == q || E.size() == R.size(), Errc::invalid_argument,
          "E must have one entry per hyperplane or per element of R");
  auto e_of = [&](std::size_t pos) -> const Rational& {
    return E.size() == q ? E[static_cast<std::size_t>(R[pos])] : E[pos];
  };
  for (std::size_t i = 0; i < R.size(); ++i) {
    require(R[i] >= 0 && static_cast<std::size_t>(R[i]) < q, Errc::invalid_argument, "index out of range in R");
    require(i == 0 || R[i - 1] < R[i], Errc::invalid_argument, "R must be strictly increasing");
    require(e_of(i) >= 1, Errc::precondition, "product inequality needs all E_j >= 1");
  }

  // Raise both sides to the common denominator D of the relevant weights.
  mpz_class D = 1;
  for (int j : R) {
    mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), w.omega[static_cast<std::size_t>(j)].get_den_mpz_t());
  }
  require(D.fits_ulong_p(), Errc::precondition, "weight denominators too large");
  const unsigned long d_exp = D.get_ui();
  Rational lhs = 1;
  for (std::size_t i = 0; i < R.size(); ++i) {
    Rational e = w.omega[static_cast<std::size_t>(R[i])] * Rational(D);
    require(e.get_den() == 1 && e >= 0 && e.get_num().fits_ulong_p(), Errc::precondition,
            "weights must be nonnegative for the product inequality");
    lhs *= pow(e_of(i), e.get_num().get_ui());
  }

  const int d = span_dimension(hs, R);
  ProductCheck out;
  for_each_subset(static_cast<int>(R.size()), d, [&](const IndexSet& pos) {
    IndexSet sub;
    for (int p : pos) sub.push_back(R[static_cast<std::size_t>(p)]);
    if (span_dimension(hs, sub) != d) return true;
    Rational rhs = 1;
    for (int p : pos) rhs *= e_of(static_cast<std::size_t>(p));
    if (lhs <= pow(rhs, d_exp)) {
      out.holds = true;
      out.witness = sub;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace gaussvd
