#pragma once

#include <vector>

#include "nefcone/linear_algebra.hpp"

namespace nefcone {

/// Result of minimizing c.x over {x : A x >= beta}, x free.
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Optimal;
  Rational value;                   // Optimal only
  std::vector<Rational> point;      // Optimal and Unbounded: a feasible point
  std::vector<Rational> direction;  // Unbounded: A d >= 0 and c.d < 0
  /// Optimal: y >= 0 with A^T y = c and beta.y = value.
  /// Infeasible: y >= 0 with A^T y = 0 and beta.y > 0.
  std::vector<Rational> duals;
};

/// Two-phase dense tableau simplex with Bland's rule, exact throughout.
LpResult minimize(const RationalMatrix& a, const std::vector<Rational>& beta,
                  const std::vector<Rational>& cost);

}  // namespace nefcone
