#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "nefcone/rational.hpp"

namespace nefcone {

using Label = int;

/// A space of stable curves: genus plus a set of marking labels.
/// Labels are opaque positive integers and are kept sorted.
class Signature {
 public:
  /// Throws UnstableSignature or DuplicateLabel.
  Signature(int genus, std::vector<Label> labels);

  int genus() const noexcept { return genus_; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::size_t marking_count() const noexcept { return labels_.size(); }
  bool has_label(Label label) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  int genus_;
  std::vector<Label> labels_;
};

inline Signature validate_signature(int genus, std::vector<Label> labels) {
  return Signature(genus, std::move(labels));
}

/// A pair (i, I): genus part and a sorted subset of the marking labels.
struct GenusMarking {
  int genus = 0;
  std::vector<Label> labels;

  friend bool operator==(const GenusMarking&, const GenusMarking&) = default;
  friend auto operator<=>(const GenusMarking&, const GenusMarking&) = default;
};

/// 0 <= i <= g, I subset of T, and not one of the excluded (0, {}) / (0, {t}).
bool is_admissible(const GenusMarking& marking, const Signature& sig);

/// Either the irreducible boundary divisor or a separating pair
/// {(i,I),(j,J)} stored with first <= second.
class BoundaryIndex {
 public:
  static BoundaryIndex irreducible() { return BoundaryIndex(); }

  bool is_irreducible() const noexcept { return irreducible_; }
  const GenusMarking& first() const noexcept { return first_; }
  const GenusMarking& second() const noexcept { return second_; }

  /// The side whose label set contains `label`, and the opposite side.
  /// Only meaningful for separating indices.
  const GenusMarking& side_containing(Label label) const;
  const GenusMarking& side_without(Label label) const;

  friend bool operator==(const BoundaryIndex&, const BoundaryIndex&) = default;
  friend std::strong_ordering operator<=>(const BoundaryIndex& lhs, const BoundaryIndex& rhs);

 private:
  friend BoundaryIndex canonical_pair(GenusMarking, GenusMarking, const Signature&);
  BoundaryIndex() = default;
  BoundaryIndex(GenusMarking a, GenusMarking b);

  bool irreducible_ = true;
  GenusMarking first_;
  GenusMarking second_;
};

/// All admissible (i, I), ordered by genus and then by sorted label list.
std::vector<GenusMarking> enumerate_upsilon(const Signature& sig);

/// Irr followed by every separating index in canonical order.
std::vector<BoundaryIndex> enumerate_boundary(const Signature& sig);

/// The separating indices only.
std::vector<BoundaryIndex> separating_indices(const Signature& sig);

/// Validates {m1, m2} as a separating index of `sig`; throws InvalidPair.
BoundaryIndex canonical_pair(GenusMarking m1, GenusMarking m2, const Signature& sig);

/// 1/2 for {(1,{}),(g-1,T)}, 1 for every other index.
Rational halving_weight(const BoundaryIndex& index, const Signature& sig);

/// d<i>: {(i,{}),(g-i,T)}. Throws InvalidPair when not admissible.
BoundaryIndex delta_index(const Signature& sig, int i);

/// s<i> on a two-pointed space: {(i,{t1}),(g-i,{t2})} with t1 < t2.
BoundaryIndex sigma_index(const Signature& sig, int i);

/// `dirr`, `d<i>`, `s<i>` where a shorthand applies, else `d{(i,[..]),(j,[..])}`.
std::string to_text(const BoundaryIndex& index, const Signature& sig);

/// Always the explicit `d{(i,[..]),(j,[..])}` form (or `dirr`).
std::string to_long_text(const BoundaryIndex& index);

}  // namespace nefcone
