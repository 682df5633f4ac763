#include "gaussvd/wronskian.hpp"

#include <unordered_map>

#include "gaussvd/numeric.hpp"

namespace gaussvd {

CurveRep::CurveRep(std::vector<LaurentPoly> comps, std::string var)
    : components(std::move(comps)), variable(std::move(var)) {
  require(!components.empty(), Errc::invalid_argument, "curve needs at least one component");
  bool nonzero = false;
  for (const auto& f : components) nonzero = nonzero || !f.is_zero();
  require(nonzero, Errc::invalid_argument, "all curve components are zero");
}

namespace {

LaurentPoly component_gcd(const std::vector<LaurentPoly>& fs) {
  LaurentPoly g;
  for (const auto& f : fs) g = gcd(g, f);
  return g;
}

}  // namespace

bool CurveRep::is_reduced() const { return component_gcd(components).is_constant(); }

CurveRep CurveRep::reduced() const {
  LaurentPoly g = component_gcd(components);
  if (g.is_constant()) return *this;
  std::vector<LaurentPoly> out;
  for (const auto& f : components) out.push_back(exact_quotient(f, g));
  return CurveRep(std::move(out), variable);
}

LaurentPoly wronskian(const std::vector<LaurentPoly>& fs) {
  require(!fs.empty(), Errc::invalid_argument, "Wronskian of an empty family");
  const std::size_t n = fs.size();
  require(n < 20, Errc::invalid_argument, "Wronskian family too large");
  std::vector<std::vector<LaurentPoly>> der(n);
  for (std::size_t i = 0; i < n; ++i) {
    der[i].push_back(fs[i]);
    for (std::size_t r = 1; r < n; ++r) der[i].push_back(derivative(der[i].back()));
  }
  // Minor on the rows in `mask` and derivative orders 0..popcount-1, expanded
  // along the highest derivative column.
  std::unordered_map<unsigned, LaurentPoly> memo;
  auto minor = [&](auto&& self, unsigned mask) -> LaurentPoly {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int size = __builtin_popcount(mask);
    LaurentPoly out;
    if (size == 1) {
      out = fs[static_cast<std::size_t>(__builtin_ctz(mask))];
    } else {
      int pos = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask & (1U << i))) continue;
        const LaurentPoly& entry = der[i][static_cast<std::size_t>(size - 1)];
        if (!entry.is_zero()) {
          LaurentPoly term = entry * self(self, mask & ~(1U << i));
          if ((pos + size - 1) % 2 == 0) {
            out += term;
          } else {
            out -= term;
          }
        }
        ++pos;
      }
    }
    memo.emplace(mask, out);
    return out;
  };
  return minor(minor, (1U << n) - 1);
}

WronskianLadder::WronskianLadder(const CurveRep& c) : curve_(c), k_(c.k()) {
  const std::size_t n = c.components.size();
  std::vector<std::vector<LaurentPoly>> der(n);
  for (std::size_t i = 0; i < n; ++i) {
    der[i].push_back(c.components[i]);
    for (std::size_t r = 1; r < n; ++r) der[i].push_back(derivative(der[i].back()));
  }
  levels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) levels_[0][{static_cast<int>(i)}] = c.components[i];
  for (int p = 1; p <= k_; ++p) {
    for_each_subset(static_cast<int>(n), p + 1, [&](const IndexSet& s) {
      LaurentPoly out;
      for (int pos = 0; pos <= p; ++pos) {
        const LaurentPoly& entry = der[static_cast<std::size_t>(s[static_cast<std::size_t>(pos)])][static_cast<std::size_t>(p)];
        if (entry.is_zero()) continue;
        IndexSet rest = s;
        rest.erase(rest.begin() + pos);
        LaurentPoly term = entry * levels_[static_cast<std::size_t>(p - 1)].at(rest);
        if ((pos + p) % 2 == 0) {
          out += term;
        } else {
          out -= term;
        }
      }
      levels_[static_cast<std::size_t>(p)][s] = std::move(out);
      return true;
    });
  }
}

const LaurentPoly& WronskianLadder::minor(const IndexSet& indices) const {
  require(!indices.empty() && static_cast<int>(indices.size()) <= k_ + 1, Errc::invalid_argument,
          "minor index set has the wrong size");
  auto& lvl = levels_[indices.size() - 1];
  auto it = lvl.find(indices);
  require(it != lvl.end(), Errc::invalid_argument, "minor index set must be strictly increasing and in range");
  return it->second;
}

const std::map<IndexSet, LaurentPoly>& WronskianLadder::level(int p) const {
  require(p >= 0 && p <= k_, Errc::invalid_argument, "ladder level out of range");
  return levels_[static_cast<std::size_t>(p)];
}

const LaurentPoly& WronskianLadder::top() const { return levels_.back().begin()->second; }

WronskianLadder ladder(const CurveRep& c) { return WronskianLadder(c); }

LaurentPoly pairing(const CurveRep& c, const Hyperplane& H) {
  require(H.dim() == c.components.size(), Errc::invalid_argument,
          "hyperplane has " + std::to_string(H.dim()) + " coefficients for a curve with " +
              std::to_string(c.components.size()) + " components");
  LaurentPoly out;
  for (std::size_t l = 0; l < H.dim(); ++l) out += H.coeffs[l].conj() * c.components[l];
  return out;
}

namespace {

void check_index_set(int k, int p, const IndexSet& I) {
  require(p >= 1 && p <= k, Errc::invalid_argument, "contracted Wronskian level must lie in [1, k]");
  require(static_cast<int>(I.size()) == p, Errc::invalid_argument, "index set must have p elements");
  for (std::size_t i = 0; i < I.size(); ++i) {
    require(I[i] >= 0 && I[i] <= k, Errc::invalid_argument, "index out of range");
    require(i == 0 || I[i - 1] < I[i], Errc::invalid_argument, "index set must be strictly increasing");
  }
}

}  // namespace

LaurentPoly contracted(const WronskianLadder& lad, const Hyperplane& H, int p, const IndexSet& I) {
  const int k = lad.k();
  check_index_set(k, p, I);
  require(static_cast<int>(H.dim()) == k + 1, Errc::invalid_argument, "hyperplane dimension mismatch");
  LaurentPoly out;
  for (int l = 0; l <= k; ++l) {
    const GaussianRational& c = H.coeffs[static_cast<std::size_t>(l)];
    if (c.is_zero()) continue;
    // W(f_l, f_I) = (-1)^{#{i in I : i < l}} W(f_{sorted(I + l)}).
    IndexSet merged;
    int before = 0;
    bool clash = false;
    for (int i : I) {
      if (i == l) clash = true;
      if (i < l) ++before;
    }
    if (clash) continue;
    merged = I;
    merged.insert(merged.begin() + before, l);
    LaurentPoly term = c.conj() * lad.minor(merged);
    if (before % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

LaurentPoly contracted(const CurveRep& c, const Hyperplane& H, int p, const IndexSet& I) {
  check_index_set(c.k(), p, I);
  require(H.dim() == c.components.size(), Errc::invalid_argument, "hyperplane dimension mismatch");
  LaurentPoly out;
  for (int l = 0; l <= c.k(); ++l) {
    const GaussianRational& cl = H.coeffs[static_cast<std::size_t>(l)];
    bool in_i = false;
    for (int i : I) in_i = in_i || i == l;
    if (in_i || cl.is_zero()) continue;
    std::vector<LaurentPoly> fs{c.components[static_cast<std::size_t>(l)]};
    for (int i : I) fs.push_back(c.components[static_cast<std::size_t>(i)]);
    out += cl.conj() * wronskian(fs);
  }
  return out;
}

PsiSelection select_psi(const CurveRep& c, const HyperplaneSet& hs) {
  require(hs.dim() == c.components.size(), Errc::invalid_argument, "hyperplane dimension mismatch");
  require(!is_degenerate(c), Errc::degenerate, "curve is linearly degenerate; no psi selection exists");
  WronskianLadder lad(c);
  const int k = c.k();
  PsiSelection out;
  for (std::size_t j = 0; j < hs.size(); ++j) {
    std::vector<PsiEntry> row;
    row.push_back({{}, pairing(c, hs[j])});
    require(!row.back().psi.is_zero(), Errc::degenerate, "curve lies in hyperplane " + hs[j].label);
    for (int p = 1; p <= k; ++p) {
      bool found = false;
      for_each_subset(k + 1, p, [&](const IndexSet& I) {
        LaurentPoly v = contracted(lad, hs[j], p, I);
        if (v.is_zero()) return true;
        row.push_back({I, std::move(v)});
        found = true;
        return false;
      });
      require(found, Errc::degenerate,
              "every contracted Wronskian vanishes for " + hs[j].label + " at level " + std::to_string(p));
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

double contact_eval(const CurveRep& c, const Hyperplane& H, int p, std::complex<double> z, unsigned precision_bits) {
  const int k = c.k();
  require(p >= 0 && p <= k, Errc::invalid_argument, "contact function level out of range");
  require(H.dim() == c.components.size(), Errc::invalid_argument, "hyperplane dimension mismatch");
  WronskianLadder lad(c);
  double denom = 0;
  for (const auto& [s, w] : lad.level(p)) denom += std::norm(eval(w, z, precision_bits));
  require(denom > 0, Errc::invalid_argument, "contact function evaluated at a zero of |F_p|");
  const double scale = H.norm();
  double num = 0;
  if (p == 0) {
    num = std::norm(eval(pairing(c, H), z, precision_bits));
  } else {
    for_each_subset(k + 1, p, [&](const IndexSet& I) {
      num += std::norm(eval(contracted(lad, H, p, I), z, precision_bits));
      return true;
    });
  }
  return num / (scale * scale) / denom;
}

bool is_degenerate(const CurveRep& c) {
  const bool wronskian_zero = WronskianLadder(c).top().is_zero();
  const bool rank_deficient = exact_rank(coefficient_matrix(c.components)) < static_cast<Eigen::Index>(c.components.size());
  require(wronskian_zero == rank_deficient, Errc::internal, "Wronskian and coefficient-rank degeneracy tests disagree");
  return wronskian_zero;
}

}  // namespace gaussvd
