#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nefcone/divisor.hpp"
#include "nefcone/polyhedra.hpp"

namespace nefcone {

/// B_0..B_k and B*_0..B*_k for k = [g/2].
struct ChainValues {
  std::vector<Rational> b;
  std::vector<Rational> b_star;
};

ChainValues chain_values(const MuCoordinates& m);

/// a, b_irr, b_1, ..., b_[g/2].
std::vector<std::string> mu_variables(int g);

/// The criterion for nef over the locus of curves with at most one node.
/// Rows are A_i (i = 1..k), then B_{i,i+1} (i = 0..k-1), then Bs_{i+1,i},
/// each scaled to primitive integers. Throws GenusTooSmall for g < 3.
HRep theorem_system(int g);

/// The split-by-split families PA, PB/PBs, PC/PCs, with the sign
/// conditions nonneg_* appended when `include_nonnegativity` is set.
HRep proof_system(int g, bool include_nonnegativity);

struct MembershipVerdict {
  enum class Decision { Member, NotMember };
  Decision decision = Decision::Member;
  std::vector<std::string> binding;
  std::vector<std::string> violated;

  bool is_member() const noexcept { return decision == Decision::Member; }
};

const char* decision_name(MembershipVerdict::Decision d);

MembershipVerdict is_nef_over_M1(const MuCoordinates& m);

/// Convenience: converts with to_mu_basis first.
MembershipVerdict is_nef_over_M1(const DivisorClass& d);

/// The slice {c : lambda - c_0 dirr - sum c_i d_i is nef over the
/// one-node locus} over variables c_0, c_1, ..., c_[g/2].
HRep slice_system(int g);
VRep slice_vertices(int g);

/// lambda - c_0 dirr - sum c_i d_i in mu coordinates.
MuCoordinates slice_point_to_mu(int g, const std::vector<Rational>& c);

struct Interval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
};

/// Admissible range for b_stage given the previous value (b_irr for stage 1,
/// b_{stage-1} afterwards). Throws NegativeSeed for a negative b_irr and
/// InvalidArgument for a stage outside 1..[g/2].
Interval generator_walk_bounds(int g, int stage, const Rational& previous);

/// Smallest admissible a: max b_i / (4i(g-i)).
Rational walk_min_a(const MuCoordinates& m);

/// True iff every b_i sits in its walk interval and a >= walk_min_a.
/// Throws NegativeSeed when b_irr < 0.
bool walk_check(const MuCoordinates& m);

/// One random admissible point reached by the walk from `b_irr`, on a grid
/// of `resolution` steps per interval. Draws are raw engine outputs reduced
/// modulo the grid size so the sequence is reproducible across platforms.
MuCoordinates walk_sample(int g, const Rational& b_irr, std::mt19937& rng, std::uint32_t resolution = 12);

struct PartialVerdict {
  enum class State { InnerCone, ViolatesNecessary, Indeterminate };
  enum class Reason { None, OutsideSpan, SignNotForced };
  State state = State::Indeterminate;
  Reason reason = Reason::None;
  /// Generator coefficients by name (a, b, c_irr, c_i, ...); empty when
  /// the class lies outside the generator span.
  std::vector<std::pair<std::string, Rational>> coefficients;
  std::vector<std::string> violated;
  /// Set on M_{1,1}, where the sign of c_irr decides nefness outright.
  bool complete = false;
};

const char* state_name(PartialVerdict::State s);
const char* reason_name(PartialVerdict::Reason r);

/// D on (g,{t}), g >= 1, against the generators mu, theta_1, dirr, d_i.
PartialVerdict mgn1_subcone_check(const DivisorClass& d);

enum class TwoPointVariant { Plain, Primed };

/// D on (g,{t1,t2}), g >= 2. Plain uses mu, theta_{1,2}, dirr, s_i, d_i;
/// primed uses mu', theta'_{1,2}, sigma, d_i.
PartialVerdict mgn2_subcone_check(const DivisorClass& d, TwoPointVariant variant);

}  // namespace nefcone
