#include "gaussvd/lp.hpp"

#include <optional>

#include "gaussvd/error.hpp"

namespace gaussvd {

void LinearProgram::add(std::vector<Rational> a, Relation rel, Rational b) {
  require(static_cast<int>(a.size()) == num_vars, Errc::internal, "constraint width does not match the program");
  constraints.push_back({std::move(a), rel, std::move(b)});
}

namespace {

class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<int> basis)
      : t_(std::move(rows)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return t_.empty() ? 0 : t_.front().size() - 1; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_[i][j]; }
  const Rational& rhs(std::size_t i) const { return t_[i].back(); }
  const std::vector<int>& basis() const { return basis_; }
  int pivots() const { return pivots_; }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_[r][c];
    for (auto& v : t_[r]) v *= inv;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][c] == 0) continue;
      Rational f = t_[i][c];
      for (std::size_t j = 0; j < t_[i].size(); ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = static_cast<int>(c);
    ++pivots_;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  // Runs simplex on cost vector c, considering only columns < allowed.
  // Returns false when unbounded.
  bool optimize(const std::vector<Rational>& c, std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < allowed && !enter; ++j) {
        Rational reduced = c[j];
        for (std::size_t i = 0; i < rows(); ++i) reduced -= c[static_cast<std::size_t>(basis_[i])] * t_[i][j];
        if (reduced < 0) enter = j;
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_[i][*enter] <= 0) continue;
        Rational ratio = rhs(i) / t_[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = static_cast<std::size_t>(lp.num_vars);
  const std::size_t m = lp.constraints.size();
  require(lp.objective.size() == n, Errc::internal, "objective width does not match the program");

  // Normalize to b >= 0, then count slack and artificial columns.
  std::vector<LinearConstraint> rows = lp.constraints;
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (auto& r : rows) {
    if (r.b < 0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      if (r.rel == Relation::le) {
        r.rel = Relation::ge;
      } else if (r.rel == Relation::ge) {
        r.rel = Relation::le;
      }
    }
    if (r.rel != Relation::eq) ++slacks;
    if (r.rel != Relation::le) ++artificials;
  }

  const std::size_t real_cols = n + slacks;
  const std::size_t total = real_cols + artificials;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(total + 1));
  std::vector<int> basis(m);
  std::size_t s = n;
  std::size_t a = real_cols;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = rows[i].a[j];
    t[i][total] = rows[i].b;
    switch (rows[i].rel) {
      case Relation::le:
        t[i][s] = 1;
        basis[i] = static_cast<int>(s++);
        break;
      case Relation::ge:
        t[i][s++] = -1;
        t[i][a] = 1;
        basis[i] = static_cast<int>(a++);
        break;
      case Relation::eq:
        t[i][a] = 1;
        basis[i] = static_cast<int>(a++);
        break;
    }
  }

  Tableau tab(std::move(t), std::move(basis));
  LpResult out;

  if (artificials > 0) {
    std::vector<Rational> phase1(total);
    for (std::size_t j = real_cols; j < total; ++j) phase1[j] = 1;
    tab.optimize(phase1, total);
    Rational infeas = 0;
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (static_cast<std::size_t>(tab.basis()[i]) >= real_cols) infeas += tab.rhs(i);
    }
    if (infeas > 0) {
      out.status = LpStatus::infeasible;
      out.pivots = tab.pivots();
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = tab.rows(); i-- > 0;) {
      if (static_cast<std::size_t>(tab.basis()[i]) < real_cols) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < real_cols && !col; ++j) {
        if (tab.at(i, j) != 0) col = j;
      }
      if (col) {
        tab.pivot(i, *col);
      } else {
        tab.drop_row(i);
      }
    }
  }

  std::vector<Rational> cost(total);
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!tab.optimize(cost, real_cols)) {
    out.status = LpStatus::unbounded;
    out.pivots = tab.pivots();
    return out;
  }
  out.status = LpStatus::optimal;
  out.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    auto b = static_cast<std::size_t>(tab.basis()[i]);
    if (b < n) out.x[b] = tab.rhs(i);
  }
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += lp.objective[j] * out.x[j];
  out.pivots = tab.pivots();
  return out;
}

}  // namespace gaussvd
