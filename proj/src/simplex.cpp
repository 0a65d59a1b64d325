#include "nefcone/simplex.hpp"

#include <optional>

#include "nefcone/error.hpp"

namespace nefcone {

namespace {

// Standard form: sigma_i (a_i u - a_i v - s_i) + r_i = |beta_i|,
// all variables nonnegative, x = u - v.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const std::vector<Rational>& beta, std::size_t n)
      : n_(n), m_(a.size()), width_(2 * n + 2 * a.size()) {
    rows_.assign(m_, std::vector<Rational>(width_, Rational(0)));
    rhs_.resize(m_);
    sigma_.resize(m_);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sigma_[i] = beta[i] < 0 ? -1 : 1;
      const Rational s(sigma_[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = s * a[i][j];
        rows_[i][n_ + j] = -s * a[i][j];
      }
      rows_[i][slack(i)] = -s;
      rows_[i][artificial(i)] = 1;
      rhs_[i] = s * beta[i];
      basis_[i] = artificial(i);
    }
  }

  std::size_t slack(std::size_t i) const { return 2 * n_ + i; }
  std::size_t artificial(std::size_t i) const { return 2 * n_ + m_ + i; }
  bool is_artificial(std::size_t col) const { return col >= 2 * n_ + m_; }

  // Runs Bland's rule to optimality. Returns the entering column when the
  // objective is unbounded below.
  std::optional<std::size_t> optimize(const std::vector<Rational>& cost, bool allow_artificial) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_ && !entering; ++j) {
        if (!allow_artificial && is_artificial(j)) {
          continue;
        }
        if (reduced_cost(cost, j) < 0) {
          entering = j;
        }
      }
      if (!entering) {
        return std::nullopt;
      }
      const std::size_t col = *entering;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][col] <= 0) {
          continue;
        }
        const Rational ratio = rhs_[i] / rows_[i][col];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) {
        return col;
      }
      pivot(*leave, col);
    }
  }

  Rational reduced_cost(const std::vector<Rational>& cost, std::size_t col) const {
    Rational d = cost[col];
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows_[i][col] != 0) {
        d -= cost[basis_[i]] * rows_[i][col];
      }
    }
    return d;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows_[row][col];
    for (auto& v : rows_[row]) {
      v /= p;
    }
    rhs_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) {
        continue;
      }
      const Rational f = rows_[i][col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (rows_[row][j] != 0) {
          rows_[i][j] -= f * rows_[row][j];
        }
      }
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) {
        continue;
      }
      for (std::size_t j = 0; j < 2 * n_ + m_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      v += cost[basis_[i]] * rhs_[i];
    }
    return v;
  }

  // y = sigma o (c_B^T B^{-1}); B^{-1} sits under the artificial columns.
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_, Rational(0));
    for (std::size_t k = 0; k < m_; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        acc += cost[basis_[i]] * rows_[i][artificial(k)];
      }
      y[k] = Rational(sigma_[k]) * acc;
    }
    return y;
  }

  std::vector<Rational> point() const {
    std::vector<Rational> values(width_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      values[basis_[i]] = rhs_[i];
    }
    std::vector<Rational> x(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      x[j] = values[j] - values[n_ + j];
    }
    return x;
  }

  std::vector<Rational> direction(std::size_t entering) const {
    std::vector<Rational> values(width_, Rational(0));
    values[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      values[basis_[i]] = -rows_[i][entering];
    }
    std::vector<Rational> d(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      d[j] = values[j] - values[n_ + j];
    }
    return d;
  }

  std::size_t width() const { return width_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::size_t width_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> sigma_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult minimize(const RationalMatrix& a, const std::vector<Rational>& beta,
                  const std::vector<Rational>& cost) {
  const std::size_t n = cost.size();
  if (a.size() != beta.size()) {
    throw Error(ErrorCode::InvalidArgument, "row count mismatch in minimize");
  }
  for (const auto& row : a) {
    if (row.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "column count mismatch in minimize");
    }
  }

  LpResult result;
  if (a.empty()) {
    result.point.assign(n, Rational(0));
    bool zero_cost = true;
    for (const auto& c : cost) {
      zero_cost = zero_cost && c == 0;
    }
    if (zero_cost) {
      result.status = LpResult::Status::Optimal;
      result.value = 0;
    } else {
      result.status = LpResult::Status::Unbounded;
      result.direction.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        result.direction[j] = -cost[j];
      }
    }
    return result;
  }

  Tableau t(a, beta, n);
  std::vector<Rational> phase1(t.width(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    phase1[t.artificial(i)] = 1;
  }
  t.optimize(phase1, true);
  if (t.objective(phase1) > 0) {
    result.status = LpResult::Status::Infeasible;
    result.duals = t.duals(phase1);
    return result;
  }
  t.drive_out_artificials();

  std::vector<Rational> phase2(t.width(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = cost[j];
    phase2[n + j] = -cost[j];
  }
  if (auto entering = t.optimize(phase2, false)) {
    result.status = LpResult::Status::Unbounded;
    result.point = t.point();
    result.direction = t.direction(*entering);
    return result;
  }
  result.status = LpResult::Status::Optimal;
  result.point = t.point();
  result.value = t.objective(phase2);
  result.duals = t.duals(phase2);
  return result;
}

}  // namespace nefcone
