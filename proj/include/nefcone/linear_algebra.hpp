#pragma once

#include <cstddef>
#include <vector>

#include "nefcone/rational.hpp"

namespace nefcone {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolveResult {
  enum class Status { Unique, Inconsistent, RankDeficient };
  Status status = Status::Unique;
  std::vector<Rational> solution;
  /// First row of the input (in input order) left inconsistent after elimination.
  std::size_t inconsistent_row = 0;
  std::size_t rank = 0;
};

/// Solves A x = b exactly. Rows are scaled to integers and eliminated with
/// Bareiss' fraction-free scheme; the pivot is the first nonzero entry of
/// each column in row order. Rank deficiency is reported before
/// inconsistency.
LinearSolveResult solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

std::size_t rank_of(const RationalMatrix& a);

/// Reduced row echelon form with the zero rows dropped.
RationalMatrix reduced_row_echelon(RationalMatrix a);

}  // namespace nefcone
