#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nefcone/rational.hpp"

namespace nefcone {

/// constant + sum coeffs[k] * x_k >= 0.
struct LinearInequality {
  std::string name;
  Rational constant;
  std::vector<Rational> coeffs;

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Positive rescaling to coprime integers. The sense is never flipped.
  LinearInequality canonical() const;

  bool is_trivial() const;  // all coefficients zero
};

/// Same linear form up to a positive factor (names ignored).
bool same_halfspace(const LinearInequality& lhs, const LinearInequality& rhs);

struct HRep {
  std::vector<std::string> variables;
  std::vector<LinearInequality> inequalities;

  std::size_t dimension() const noexcept { return variables.size(); }
};

/// Vertices (rational points) and rays (primitive integer directions),
/// each sorted lexicographically. `lines` is a basis of the lineality space
/// in reduced echelon form; it is empty for pointed polyhedra, which is the
/// case for every cone slice here. When it is not empty the "vertices" are
/// one point per minimal face. An empty VRep is the empty polyhedron.
struct VRep {
  std::vector<std::vector<Rational>> vertices;
  std::vector<std::vector<Integer>> rays;
  std::vector<std::vector<Integer>> lines;

  bool empty() const noexcept { return vertices.empty(); }
  friend bool operator==(const VRep&, const VRep&) = default;
};

/// Exact minimal V-representation by the double description method on the
/// homogenized cone. Constraints are inserted in input order after the
/// homogenizing one; output is canonically sorted.
VRep h_to_v(const HRep& h);

/// Minimal H-representation of conv(vertices) + cone(rays) + span(lines).
/// Implicit equalities come out as pairs of opposite inequalities.
/// Throws InvalidArgument for a VRep without vertices.
HRep v_to_h(const VRep& v, std::vector<std::string> variables);

struct Implication {
  bool implied = false;
  /// The system has no solution, so it implies everything. `multipliers`
  /// then satisfy y >= 0, A^T y = 0, b.y < 0.
  bool system_infeasible = false;
  /// Implied: y >= 0 with coeffs = sum y_i a_i and constant = sum y_i b_i + slack.
  std::vector<Rational> multipliers;
  Rational slack;
  /// Not implied: a point satisfying the system and violating the inequality.
  std::vector<Rational> witness;
};

/// Farkas certificate or counterexample, by exact linear programming.
Implication implies(const HRep& system, const LinearInequality& inequality);

/// Checks an implication certificate against the system independently of
/// how it was produced.
bool verify_certificate(const HRep& system, const LinearInequality& inequality, const Implication& result);

struct SystemComparison {
  bool equal = false;
  std::vector<Implication> first_implies_second;  // one per inequality of the second system
  std::vector<Implication> second_implies_first;
};

/// Mutual inclusion of solution sets. Throws InvalidArgument when the
/// variable lists differ.
SystemComparison systems_equal(const HRep& first, const HRep& second);

constexpr std::size_t kBruteForceMaxDimension = 6;
constexpr std::size_t kBruteForceMaxInequalities = 25;

/// Vertices from every d-subset of bounding hyperplanes with a unique,
/// feasible solution. Returns vertices only. Throws DimensionTooLarge.
VRep brute_force_vertices(const HRep& h);

/// Fourier-Motzkin projection eliminating one variable. Duplicate and
/// trivially true rows are dropped; a contradictory constant row is kept.
HRep fm_eliminate(const HRep& h, std::string_view variable);

/// One line per inequality: `c0 c1 ... cn >= 0`.
std::string to_hrep_text(const HRep& h);

/// `V: ...`, `R: ...` and `L: ...` lines in canonical order.
std::string to_vrep_text(const VRep& v);

/// Lexicographic comparison of rational points.
bool point_less(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs);

}  // namespace nefcone
