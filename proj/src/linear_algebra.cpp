#include "nefcone/linear_algebra.hpp"

#include <numeric>

#include "nefcone/error.hpp"

namespace nefcone {

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> order;  // order[k] = input row now at position k
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free forward elimination over the first `cols` columns; any
// further columns (the augmented part) are carried along.
Echelon bareiss(std::vector<std::vector<Integer>> m, std::size_t cols) {
  Echelon e;
  e.order.resize(m.size());
  std::iota(e.order.begin(), e.order.end(), 0);
  const std::size_t width = m.empty() ? 0 : m.front().size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) {
      ++p;
    }
    if (p == m.size()) {
      continue;
    }
    std::swap(m[p], m[r]);
    std::swap(e.order[p], e.order[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < width; ++j) {
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      }
      for (std::size_t j = 0; j <= col; ++j) {
        m[i][j] = 0;
      }
    }
    prev = m[r][col];
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

std::vector<Integer> integer_row(const std::vector<Rational>& row) {
  const Integer den = common_denominator(row);
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    const Rational scaled = v * Rational(den);
    out.push_back(boost::multiprecision::numerator(scaled));
  }
  return out;
}

}  // namespace

LinearSolveResult solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::InvalidArgument, "row count mismatch in solve_exact");
  }
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<Integer>> m;
  m.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != cols) {
      throw Error(ErrorCode::InvalidArgument, "ragged matrix in solve_exact");
    }
    std::vector<Rational> row = a[i];
    row.push_back(b[i]);
    m.push_back(integer_row(row));
  }
  Echelon e = bareiss(std::move(m), cols);

  LinearSolveResult result;
  result.rank = e.pivot_cols.size();
  if (result.rank < cols) {
    result.status = LinearSolveResult::Status::RankDeficient;
    return result;
  }
  for (std::size_t k = result.rank; k < e.rows.size(); ++k) {
    if (e.rows[k][cols] != 0) {
      result.status = LinearSolveResult::Status::Inconsistent;
      result.inconsistent_row = e.order[k];
      for (std::size_t kk = k + 1; kk < e.rows.size(); ++kk) {
        if (e.rows[kk][cols] != 0 && e.order[kk] < result.inconsistent_row) {
          result.inconsistent_row = e.order[kk];
        }
      }
      return result;
    }
  }
  result.solution.assign(cols, Rational(0));
  for (std::size_t k = result.rank; k-- > 0;) {
    const std::size_t col = e.pivot_cols[k];
    Rational acc = Rational(e.rows[k][cols]);
    for (std::size_t j = col + 1; j < cols; ++j) {
      acc -= Rational(e.rows[k][j]) * result.solution[j];
    }
    result.solution[col] = acc / Rational(e.rows[k][col]);
  }
  return result;
}

std::size_t rank_of(const RationalMatrix& a) {
  if (a.empty()) {
    return 0;
  }
  std::vector<std::vector<Integer>> m;
  for (const auto& row : a) {
    m.push_back(integer_row(row));
  }
  const std::size_t cols = a.front().size();
  return bareiss(std::move(m), cols).pivot_cols.size();
}

RationalMatrix reduced_row_echelon(RationalMatrix a) {
  if (a.empty()) {
    return a;
  }
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < a.size(); ++col) {
    std::size_t p = r;
    while (p < a.size() && a[p][col] == 0) {
      ++p;
    }
    if (p == a.size()) {
      continue;
    }
    std::swap(a[p], a[r]);
    const Rational pivot = a[r][col];
    for (auto& v : a[r]) {
      v /= pivot;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) {
        continue;
      }
      const Rational factor = a[i][col];
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] -= factor * a[r][j];
      }
    }
    ++r;
  }
  a.resize(r);
  return a;
}

}  // namespace nefcone
