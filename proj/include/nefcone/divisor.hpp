#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nefcone/moduli_index.hpp"
#include "nefcone/rational.hpp"

namespace nefcone {

struct LambdaElement {
  friend bool operator==(const LambdaElement&, const LambdaElement&) = default;
  friend auto operator<=>(const LambdaElement&, const LambdaElement&) = default;
};

struct PsiElement {
  Label label = 0;
  friend bool operator==(const PsiElement&, const PsiElement&) = default;
  friend auto operator<=>(const PsiElement&, const PsiElement&) = default;
};

struct DeltaElement {
  BoundaryIndex index = BoundaryIndex::irreducible();
  friend bool operator==(const DeltaElement&, const DeltaElement&) = default;
  friend auto operator<=>(const DeltaElement&, const DeltaElement&) = default;
};

/// lambda < psi_t (by label) < delta_irr < delta_sep (canonical order).
using BasisElement = std::variant<LambdaElement, PsiElement, DeltaElement>;

inline BasisElement lambda_element() { return LambdaElement{}; }
inline BasisElement psi_element(Label t) { return PsiElement{t}; }
inline BasisElement delta_element(BoundaryIndex index) { return DeltaElement{std::move(index)}; }
inline BasisElement delta_irr_element() { return DeltaElement{BoundaryIndex::irreducible()}; }

bool is_valid_for(const BasisElement& element, const Signature& sig);
std::string to_text(const BasisElement& element, const Signature& sig);

/// Every basis element of Pic(M_{g,T}) (x) Q in canonical order.
std::vector<BasisElement> basis_of(const Signature& sig);

/// A point of the free Q-vector space on {lambda, psi_t, delta_irr, delta_v}.
/// Zero coefficients are never stored.
class DivisorClass {
 public:
  explicit DivisorClass(Signature sig) : sig_(std::move(sig)) {}

  const Signature& signature() const noexcept { return sig_; }
  const std::map<BasisElement, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const BasisElement& element) const;

  /// Adds `value` to the coordinate of `element`. Throws InvalidArgument
  /// when the element does not belong to this signature.
  DivisorClass& add(const BasisElement& element, const Rational& value);

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);

  friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) { return lhs += rhs; }
  friend DivisorClass operator-(DivisorClass lhs, const DivisorClass& rhs) { return lhs -= rhs; }
  friend DivisorClass operator*(const Rational& scalar, DivisorClass d) { return d *= scalar; }
  friend DivisorClass operator-(DivisorClass d) { return d *= Rational(-1); }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  void require_same(const DivisorClass& other) const;

  Signature sig_;
  std::map<BasisElement, Rational> terms_;
};

DivisorClass lambda_class(const Signature& sig);
DivisorClass psi_class(const Signature& sig, Label t);
DivisorClass delta_irr_class(const Signature& sig);
DivisorClass delta_class(const Signature& sig, const BoundaryIndex& index);

/// Throws SignatureMismatch when the classes live on different spaces.
/// An empty input has no signature to fall back on and is rejected.
DivisorClass linear_combine(std::span<const std::pair<Rational, DivisorClass>> terms);

/// (d + |L n I|)(d - |L n J|) with d = i |L n J| - j |L n I|.
Integer gamma_L(std::span<const Label> L, const BoundaryIndex& index);

/// 4(g-1+|L|)(g-1) sum psi_t - 12|L|^2 lambda + |L|^2 delta_irr - sum 4 gamma_L(v) delta_v.
DivisorClass theta(const Signature& sig, std::span<const Label> L);

enum class NamedClass {
  Mu,             // any signature
  Theta1,         // (g,{t}): 4g(g-1)psi - 12 lambda + delta_irr - sum 4i(i-1) d_i
  Theta12,        // (g,{t1,t2}): the two-point class, one quarter of theta(sig, T)
  MuPrime,        // (h,{t1,t2}) pulled back from genus g = h+1, sigma in place of delta_irr
  ThetaPrime,     // same home space, companion of MuPrime
  Sigma,          // (g,{t1,t2}): delta_irr + sum s_i
  MuPrimeE,       // (e,{t}): mu / (e-1), zero for e = 1
  ThetaPrimeE,    // (e,{t}): theta1 / (e-1), zero for e = 1
  MuDoublePrime,  // (g,{t1,t2}): mu with sigma in place of delta_irr + sum s_i
  Theta12DoublePrime,
};

std::optional<NamedClass> named_class_from_string(std::string_view name);
const char* named_class_name(NamedClass name);

/// Throws WrongHomeSpace when `sig` is not the class's home space.
DivisorClass named_class(NamedClass name, const Signature& sig);

/// a mu + b_irr delta_irr + sum b_i delta_i on M_g, i = 1..[g/2].
struct MuCoordinates {
  int genus = 3;
  Rational a;
  Rational b_irr;
  std::vector<Rational> b;

  /// b_{min(i, g-i)}, the coefficient shared by {i, g-i}.
  const Rational& b_pair(int i) const;

  friend bool operator==(const MuCoordinates&, const MuCoordinates&) = default;
};

/// Throws GenusTooSmall (g < 3), WrongHomeSpace (markings present) or
/// UnsupportedBasisElement (psi support).
MuCoordinates to_mu_basis(const DivisorClass& d);
DivisorClass from_mu_basis(const MuCoordinates& m);

}  // namespace nefcone
