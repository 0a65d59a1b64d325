#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nefcone/divisor.hpp"

namespace nefcone {

/// Gluing M_{a, T' + {t}} x M_{b, S' + {s}} -> M_{a+b, T' + S'} at t ~ s.
/// t and s live on different factors and may coincide as labels, but
/// neither may be a marking of the target.
struct AlphaMapSpec {
  Signature target;
  Signature left;
  Label left_node;
  Signature right;
  Label right_node;
};

/// Throws SpecMismatch on overlapping label sets or a node label that is
/// also a target marking; UnstableSignature propagates from the factors.
AlphaMapSpec make_alpha_spec(int left_genus, std::vector<Label> left_markings, Label left_node,
                             int right_genus, std::vector<Label> right_markings, Label right_node);

/// Self-gluing M_{g, T' + {t, t'}} -> M_{g+1, T'} at t ~ t'.
struct BetaMapSpec {
  Signature target;
  Signature source;
  Label first_node;
  Label second_node;
};

BetaMapSpec make_beta_spec(int source_genus, std::vector<Label> markings, Label first_node,
                           Label second_node);

/// Components (E on the left factor, F on the right factor) of the pullback.
std::pair<DivisorClass, DivisorClass> alpha_pullback(const AlphaMapSpec& spec, const DivisorClass& d);

DivisorClass beta_pullback(const BetaMapSpec& spec, const DivisorClass& d);

/// Unique coefficients c with sum c_k generators[k] == d. Throws
/// DependentGenerators, or NotInSpan naming the offending basis element.
std::vector<Rational> decompose(const DivisorClass& d, std::span<const DivisorClass> generators);

/// Generators (mu', theta', sigma, d_1..d_{g-1}) on M_{g-1,{1,2}}.
std::vector<DivisorClass> beta_star_generators(int g);

/// Generators (mu'_e, theta'_e, delta_irr, d_1..d_{e-1}) on M_{e,{1}}.
std::vector<DivisorClass> alpha_star_generators(int e);

struct BetaStarCoefficients {
  Rational mu_prime;
  Rational theta_prime;
  Rational sigma;
  std::vector<Rational> delta;  // d_1 .. d_{g-1}

  std::vector<Rational> flatten() const;
  friend bool operator==(const BetaStarCoefficients&, const BetaStarCoefficients&) = default;
};

enum class MuPrimeNumerator {
  /// (g-1) g (2g-1) a - 3 b_irr: agrees with the generic pullback.
  Corrected,
  /// (g-1)(g-2)(2g-1) a - 3 b_irr: the published expression.
  AsPrinted,
};

/// Coefficients of beta^*(D) for D given in mu coordinates. GenusTooSmall for g < 3.
BetaStarCoefficients beta_star_closed_form(const MuCoordinates& m,
                                           MuPrimeNumerator numerator = MuPrimeNumerator::Corrected);

struct AlphaFactorCoefficients {
  int genus = 1;
  Rational mu_prime;
  Rational theta_prime;
  Rational delta_irr;
  std::vector<Rational> delta;  // d_1 .. d_{genus-1}

  /// On M_{1,1} mu'_1 = theta'_1 = 0, so only delta_irr is compared there.
  bool matches(const AlphaFactorCoefficients& other) const;
};

/// (D_s, D_t) with alpha_{s,t}^*(D) = p^*(D_s) + q^*(D_t). Throws BadSplit.
std::pair<AlphaFactorCoefficients, AlphaFactorCoefficients> alpha_star_closed_form(
    const MuCoordinates& m, int s, int t);

/// Rewrites a class on M_{1,{t}} through lambda = psi_t = delta_irr / 12,
/// the relations of the one-dimensional Picard group there.
DivisorClass reduce_genus_one(const DivisorClass& d);

/// Decomposes a component of alpha^*(D) on (e,{t}) against
/// alpha_star_generators(e); for e = 1 it reduces through the genus-one
/// relations first and reports zero for the formal mu'_1, theta'_1 parts.
AlphaFactorCoefficients decompose_alpha_factor(const DivisorClass& component);

/// alpha_{s,t} as used for M_g: M_{s,{1}} x M_{t,{1}} -> M_{s+t}.
AlphaMapSpec alpha_split_spec(int s, int t);

/// beta as used for M_g: M_{g-1,{1,2}} -> M_g.
BetaMapSpec beta_spec_for(int g);

}  // namespace nefcone
