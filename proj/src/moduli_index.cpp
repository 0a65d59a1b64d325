#include "nefcone/moduli_index.hpp"

#include <algorithm>

#include "nefcone/error.hpp"

namespace nefcone {

Signature::Signature(int genus, std::vector<Label> labels)
    : genus_(genus), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw Error(ErrorCode::DuplicateLabel, "duplicate marking label in " + to_string());
  }
  if (genus_ < 0) {
    throw Error(ErrorCode::UnstableSignature, "negative genus");
  }
  if (2 * genus_ - 2 + static_cast<int>(labels_.size()) <= 0) {
    throw Error(ErrorCode::UnstableSignature, "unstable signature " + to_string());
  }
}

bool Signature::has_label(Label label) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

namespace {

std::string labels_text(std::span<const Label> labels) {
  std::string out = "[";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) {
      out += ",";
    }
    out += std::to_string(labels[k]);
  }
  return out + "]";
}

std::string marking_text(const GenusMarking& m) {
  return "(" + std::to_string(m.genus) + "," + labels_text(m.labels) + ")";
}

}  // namespace

std::string Signature::to_string() const {
  return "(" + std::to_string(genus_) + "," + labels_text(labels_) + ")";
}

bool is_admissible(const GenusMarking& marking, const Signature& sig) {
  if (marking.genus < 0 || marking.genus > sig.genus()) {
    return false;
  }
  if (!std::is_sorted(marking.labels.begin(), marking.labels.end()) ||
      std::adjacent_find(marking.labels.begin(), marking.labels.end()) != marking.labels.end()) {
    return false;
  }
  for (Label l : marking.labels) {
    if (!sig.has_label(l)) {
      return false;
    }
  }
  return !(marking.genus == 0 && marking.labels.size() <= 1);
}

BoundaryIndex::BoundaryIndex(GenusMarking a, GenusMarking b) : irreducible_(false) {
  if (b < a) {
    std::swap(a, b);
  }
  first_ = std::move(a);
  second_ = std::move(b);
}

std::strong_ordering operator<=>(const BoundaryIndex& lhs, const BoundaryIndex& rhs) {
  if (lhs.irreducible_ != rhs.irreducible_) {
    return lhs.irreducible_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (lhs.irreducible_) {
    return std::strong_ordering::equal;
  }
  if (auto c = lhs.first_ <=> rhs.first_; c != 0) {
    return c;
  }
  return lhs.second_ <=> rhs.second_;
}

const GenusMarking& BoundaryIndex::side_containing(Label label) const {
  if (std::binary_search(first_.labels.begin(), first_.labels.end(), label)) {
    return first_;
  }
  return second_;
}

const GenusMarking& BoundaryIndex::side_without(Label label) const {
  if (std::binary_search(first_.labels.begin(), first_.labels.end(), label)) {
    return second_;
  }
  return first_;
}

std::vector<GenusMarking> enumerate_upsilon(const Signature& sig) {
  const auto labels = sig.labels();
  const std::size_t n = labels.size();
  std::vector<std::vector<Label>> subsets;
  subsets.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> subset;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) {
        subset.push_back(labels[k]);
      }
    }
    subsets.push_back(std::move(subset));
  }
  std::sort(subsets.begin(), subsets.end());

  std::vector<GenusMarking> out;
  for (int i = 0; i <= sig.genus(); ++i) {
    for (const auto& subset : subsets) {
      GenusMarking m{i, subset};
      if (is_admissible(m, sig)) {
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

namespace {

std::vector<Label> complement(const Signature& sig, const std::vector<Label>& subset) {
  std::vector<Label> out;
  std::set_difference(sig.labels().begin(), sig.labels().end(), subset.begin(), subset.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<BoundaryIndex> separating_indices(const Signature& sig) {
  std::vector<BoundaryIndex> out;
  for (const auto& m : enumerate_upsilon(sig)) {
    GenusMarking partner{sig.genus() - m.genus, complement(sig, m.labels)};
    if (is_admissible(partner, sig) && m <= partner) {
      out.push_back(canonical_pair(m, std::move(partner), sig));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BoundaryIndex> enumerate_boundary(const Signature& sig) {
  std::vector<BoundaryIndex> out{BoundaryIndex::irreducible()};
  auto sep = separating_indices(sig);
  out.insert(out.end(), std::make_move_iterator(sep.begin()), std::make_move_iterator(sep.end()));
  return out;
}

BoundaryIndex canonical_pair(GenusMarking m1, GenusMarking m2, const Signature& sig) {
  std::sort(m1.labels.begin(), m1.labels.end());
  std::sort(m2.labels.begin(), m2.labels.end());
  const std::string shown = "{" + marking_text(m1) + "," + marking_text(m2) + "}";
  if (!is_admissible(m1, sig) || !is_admissible(m2, sig)) {
    throw Error(ErrorCode::InvalidPair, "inadmissible marking in " + shown + " on " + sig.to_string());
  }
  if (m1.genus + m2.genus != sig.genus()) {
    throw Error(ErrorCode::InvalidPair, "genus parts of " + shown + " do not sum to " +
                                            std::to_string(sig.genus()));
  }
  std::vector<Label> joined;
  std::merge(m1.labels.begin(), m1.labels.end(), m2.labels.begin(), m2.labels.end(),
             std::back_inserter(joined));
  if (!std::equal(joined.begin(), joined.end(), sig.labels().begin(), sig.labels().end())) {
    throw Error(ErrorCode::InvalidPair, "label sets of " + shown + " do not partition " +
                                            sig.to_string());
  }
  return BoundaryIndex(std::move(m1), std::move(m2));
}

Rational halving_weight(const BoundaryIndex& index, const Signature& sig) {
  if (index.is_irreducible()) {
    return 1;
  }
  const GenusMarking elliptic{1, {}};
  const GenusMarking rest{sig.genus() - 1, std::vector<Label>(sig.labels().begin(), sig.labels().end())};
  const bool distinguished = (index.first() == elliptic && index.second() == rest) ||
                             (index.first() == rest && index.second() == elliptic);
  return distinguished ? make_rational(1, 2) : Rational(1);
}

BoundaryIndex delta_index(const Signature& sig, int i) {
  return canonical_pair(GenusMarking{i, {}},
                        GenusMarking{sig.genus() - i, std::vector<Label>(sig.labels().begin(), sig.labels().end())},
                        sig);
}

BoundaryIndex sigma_index(const Signature& sig, int i) {
  if (sig.marking_count() != 2) {
    throw Error(ErrorCode::InvalidPair, "s<i> needs exactly two markings, got " + sig.to_string());
  }
  return canonical_pair(GenusMarking{i, {sig.labels()[0]}},
                        GenusMarking{sig.genus() - i, {sig.labels()[1]}}, sig);
}

std::string to_long_text(const BoundaryIndex& index) {
  if (index.is_irreducible()) {
    return "dirr";
  }
  return "d{" + marking_text(index.first()) + "," + marking_text(index.second()) + "}";
}

std::string to_text(const BoundaryIndex& index, const Signature& sig) {
  if (index.is_irreducible()) {
    return "dirr";
  }
  const auto& a = index.first();
  const auto& b = index.second();
  switch (sig.marking_count()) {
    case 0:
      return "d" + std::to_string(std::min(a.genus, b.genus));
    case 1:
      return "d" + std::to_string(a.labels.empty() ? a.genus : b.genus);
    case 2:
      if (a.labels.empty()) {
        return "d" + std::to_string(a.genus);
      }
      if (b.labels.empty()) {
        return "d" + std::to_string(b.genus);
      }
      return "s" + std::to_string(a.labels[0] == sig.labels()[0] ? a.genus : b.genus);
    default:
      return to_long_text(index);
  }
}

}  // namespace nefcone
