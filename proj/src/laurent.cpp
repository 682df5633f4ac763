#include "gaussvd/laurent.hpp"

#include <algorithm>
#include <ostream>

namespace gaussvd {

namespace {

using Dense = std::vector<GaussianRational>;

// Ordinary polynomial helpers: index == exponent, no trailing zeros.
void trim_high(Dense& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Dense to_dense0(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  require(p.order() >= 0, Errc::internal, "ordinary polynomial expected, got " + p.to_string());
  Dense out(static_cast<std::size_t>(p.order()), GaussianRational());
  out.insert(out.end(), p.dense().begin(), p.dense().end());
  return out;
}

LaurentPoly from_dense0(Dense a) { return LaurentPoly(0, std::move(a)); }

Dense make_monic(Dense a) {
  trim_high(a);
  if (a.empty()) return a;
  GaussianRational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

// a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<Dense, Dense> divmod(Dense a, const Dense& b) {
  trim_high(a);
  require(!b.empty() && !b.back().is_zero(), Errc::internal, "polynomial division by zero");
  if (a.size() < b.size()) return {Dense{}, std::move(a)};
  Dense q(a.size() - b.size() + 1);
  GaussianRational lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    GaussianRational t = a[i] * lead_inv;
    std::size_t shift = i - (b.size() - 1);
    q[shift] = t;
    if (t.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
  }
  trim_high(a);
  trim_high(q);
  return {std::move(q), std::move(a)};
}

Dense gcd_dense(Dense a, Dense b) {
  trim_high(a);
  trim_high(b);
  while (!b.empty()) {
    Dense r = divmod(std::move(a), b).second;
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

Dense derivative_dense(const Dense& a) {
  if (a.size() <= 1) return {};
  Dense out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * GaussianRational(static_cast<int>(i));
  return out;
}

Dense sub_dense(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_high(a);
  return a;
}

Dense exact_div_dense(const Dense& a, const Dense& b) {
  auto [q, r] = divmod(a, b);
  require(r.empty(), Errc::internal, "inexact polynomial division");
  return q;
}

bool is_const_dense(const Dense& a) { return a.size() <= 1; }

}  // namespace

LaurentPoly::LaurentPoly(const GaussianRational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low, std::vector<GaussianRational> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

LaurentPoly LaurentPoly::monomial(const GaussianRational& c, int power) {
  return LaurentPoly(power, {c});
}

LaurentPoly LaurentPoly::from_terms(const std::vector<Term>& terms) {
  LaurentPoly out;
  for (const auto& [power, c] : terms) out += monomial(c, power);
  return out;
}

GaussianRational LaurentPoly::coeff(int power) const {
  if (is_zero() || power < low_ || power > degree()) return {};
  return coeffs_[static_cast<std::size_t>(power - low_)];
}

std::vector<LaurentPoly::Term> LaurentPoly::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  std::vector<GaussianRational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::conj() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = c.conj();
  return out;
}

std::string LaurentPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const GaussianRational& c = coeffs_[i];
    if (c.is_zero()) continue;
    int power = low_ + static_cast<int>(i);
    std::string cs = c.to_string();
    bool negative = c.is_real() && sgn(c.re()) < 0;
    if (negative) cs.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (power == 1) {
      mono = var;
    } else if (power != 0) {
      mono = std::string(var) + "^" + std::to_string(power);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly derivative(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<GaussianRational> out(p.dense().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int power = p.order() + static_cast<int>(i);
    out[i] = p.dense()[i] * GaussianRational(power);
  }
  return LaurentPoly(p.order() - 1, std::move(out));
}

LaurentPoly derivative(const LaurentPoly& p, int l) {
  require(l >= 0, Errc::invalid_argument, "negative derivative order");
  LaurentPoly out = p;
  for (int i = 0; i < l; ++i) out = derivative(out);
  return out;
}

LaurentPoly substitute_inverse(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<GaussianRational> rev(p.dense().rbegin(), p.dense().rend());
  return LaurentPoly(-p.degree(), std::move(rev));
}

LaurentPoly substitute_scaled_inverse(const LaurentPoly& p, const Rational& c) {
  require(sgn(c) != 0, Errc::invalid_argument, "scaled inversion needs c != 0");
  LaurentPoly out;
  for (const auto& [power, coeff] : p.terms()) {
    Rational scale = 1;
    mpz_class num = c.get_num();
    mpz_class den = c.get_den();
    unsigned e = static_cast<unsigned>(power < 0 ? -power : power);
    mpz_class np, dp;
    mpz_pow_ui(np.get_mpz_t(), num.get_mpz_t(), e);
    mpz_pow_ui(dp.get_mpz_t(), den.get_mpz_t(), e);
    scale = power >= 0 ? Rational(np, dp) : Rational(dp, np);
    scale.canonicalize();
    out += LaurentPoly::monomial(coeff * GaussianRational(scale), -power);
  }
  return out;
}

UnitSplit split_unit(const LaurentPoly& p) {
  require(!p.is_zero(), Errc::invalid_argument, "unit split of the zero polynomial");
  UnitSplit out;
  out.constant = p.leading();
  out.shift = p.order();
  out.monic_part = LaurentPoly(0, p.dense()) * out.constant.inverse();
  return out;
}

LaurentPoly exact_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  require(!b.is_zero(), Errc::invalid_argument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  Dense q = exact_div_dense(Dense(a.dense()), Dense(b.dense()));
  return LaurentPoly(a.order() - b.order(), std::move(q));
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  require(!b.is_zero(), Errc::invalid_argument, "divisibility by the zero polynomial");
  if (a.is_zero()) return true;
  return divmod(Dense(a.dense()), Dense(b.dense())).second.empty();
}

LaurentPoly polynomial_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  require(!(p.is_zero() && q.is_zero()), Errc::invalid_argument, "gcd(0, 0) is undefined");
  return from_dense0(gcd_dense(to_dense0(p), to_dense0(q)));
}

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  require(!(p.is_zero() && q.is_zero()), Errc::invalid_argument, "gcd(0, 0) is undefined");
  if (p.is_zero()) return split_unit(q).monic_part;
  if (q.is_zero()) return split_unit(p).monic_part;
  return from_dense0(gcd_dense(Dense(p.dense()), Dense(q.dense())));
}

LaurentPoly SquareFreeDecomposition::reconstruct() const {
  LaurentPoly out = unit;
  for (const auto& [factor, mult] : parts) out *= factor.pow(static_cast<unsigned>(mult));
  return out;
}

int SquareFreeDecomposition::min_multiplicity() const {
  int best = 0;
  for (const auto& part : parts) {
    if (best == 0 || part.second < best) best = part.second;
  }
  return best;
}

SquareFreeDecomposition squarefree(const LaurentPoly& p) {
  require(!p.is_zero(), Errc::invalid_argument, "square-free decomposition of zero");
  SquareFreeDecomposition out;
  int unit_shift = std::min(p.order(), 0);
  out.unit = LaurentPoly::monomial(p.leading(), unit_shift);
  Dense f = make_monic(to_dense0(p.shifted(-unit_shift)));
  if (is_const_dense(f)) return out;

  // Yun's algorithm over Q(i).
  Dense df = derivative_dense(f);
  Dense b = gcd_dense(f, df);
  Dense c = exact_div_dense(f, b);
  Dense d = sub_dense(exact_div_dense(df, b), derivative_dense(c));
  int mult = 1;
  while (!is_const_dense(c)) {
    Dense a = gcd_dense(c, d);
    if (!is_const_dense(a)) out.parts.emplace_back(from_dense0(a), mult);
    c = exact_div_dense(c, a);
    d = sub_dense(exact_div_dense(d, a), derivative_dense(c));
    ++mult;
  }
  return out;
}

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.is_zero()) return false;
  if (a.span() != b.span()) return a.span() < b.span();
  if (a.order() != b.order()) return a.order() < b.order();
  for (std::size_t i = 0; i < a.dense().size(); ++i) {
    int c = compare(a.dense()[i], b.dense()[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

LaurentPoly CoprimeBasis::reconstruct(std::size_t input) const {
  LaurentPoly out = units.at(input);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    out *= basis[b].pow(static_cast<unsigned>(exponents.at(input)[b]));
  }
  return out;
}

CoprimeBasis coprime_basis(const std::vector<LaurentPoly>& ps) {
  CoprimeBasis out;
  std::vector<Dense> pool;
  std::vector<Dense> polys;
  for (const auto& p : ps) {
    require(!p.is_zero(), Errc::invalid_argument, "coprime basis input contains zero");
    int unit_shift = std::min(p.order(), 0);
    out.units.push_back(LaurentPoly::monomial(p.leading(), unit_shift));
    polys.push_back(make_monic(to_dense0(p.shifted(-unit_shift))));
    for (const auto& part : squarefree(p).parts) pool.push_back(to_dense0(part.first));
  }

  // Refine until pairwise coprime: {a, b} -> {g, a/g, b/g}; total degree drops.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
        Dense g = gcd_dense(pool[i], pool[j]);
        if (is_const_dense(g)) continue;
        Dense a = exact_div_dense(pool[i], g);
        Dense b = exact_div_dense(pool[j], g);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        pool.push_back(std::move(g));
        if (!is_const_dense(a)) pool.push_back(make_monic(std::move(a)));
        if (!is_const_dense(b)) pool.push_back(make_monic(std::move(b)));
        changed = true;
      }
    }
  }

  for (auto& d : pool) out.basis.push_back(from_dense0(std::move(d)));
  std::sort(out.basis.begin(), out.basis.end(), canonical_less);

  for (const Dense& f : polys) {
    std::vector<int> e(out.basis.size(), 0);
    Dense rest = f;
    for (std::size_t b = 0; b < out.basis.size(); ++b) {
      Dense bd = to_dense0(out.basis[b]);
      while (true) {
        auto [q, r] = divmod(rest, bd);
        if (!r.empty()) break;
        rest = std::move(q);
        ++e[b];
      }
    }
    require(is_const_dense(rest), Errc::internal, "coprime basis does not cover an input");
    out.exponents.push_back(std::move(e));
  }
  return out;
}

}  // namespace gaussvd
