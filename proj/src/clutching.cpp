#include "nefcone/clutching.hpp"

#include <algorithm>

#include "nefcone/error.hpp"
#include "nefcone/linear_algebra.hpp"

namespace nefcone {

namespace {

std::vector<Label> with_label(std::vector<Label> labels, Label extra) {
  labels.push_back(extra);
  return labels;
}

std::vector<Label> sorted(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  return labels;
}

bool contains(const std::vector<Label>& sorted_labels, Label l) {
  return std::binary_search(sorted_labels.begin(), sorted_labels.end(), l);
}

std::vector<Label> set_union(const std::vector<Label>& a, const std::vector<Label>& b) {
  std::vector<Label> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Label> without(const std::vector<Label>& a, std::initializer_list<Label> drop) {
  std::vector<Label> out;
  for (Label l : a) {
    if (std::find(drop.begin(), drop.end(), l) == drop.end()) {
      out.push_back(l);
    }
  }
  return out;
}

void require_target(const Signature& expected, const DivisorClass& d) {
  if (!(d.signature() == expected)) {
    throw Error(ErrorCode::SpecMismatch, "class on " + d.signature().to_string() +
                                             " does not live on the target " + expected.to_string());
  }
}

// Shared part of one alpha component: lambda, psi and delta_irr terms, plus
// boundary surgery on the factor `own` whose gluing point is `node`.
DivisorClass alpha_component(const DivisorClass& d, const Signature& own, Label node,
                             int other_genus, const std::vector<Label>& other_markings,
                             const BoundaryIndex& glue_index) {
  const Signature& target = d.signature();
  DivisorClass out(own);
  out.add(lambda_element(), d.coefficient(lambda_element()));
  out.add(psi_element(node), -d.coefficient(delta_element(glue_index)));
  for (Label l : own.labels()) {
    if (l != node) {
      out.add(psi_element(l), d.coefficient(psi_element(l)));
    }
  }
  out.add(delta_irr_element(), d.coefficient(delta_irr_element()));
  for (const auto& index : separating_indices(own)) {
    const GenusMarking& near = index.side_without(node);
    const GenusMarking& far = index.side_containing(node);
    GenusMarking merged{far.genus + other_genus,
                        set_union(without(far.labels, {node}), other_markings)};
    const BoundaryIndex target_index = canonical_pair(near, std::move(merged), target);
    out.add(delta_element(index), d.coefficient(delta_element(target_index)));
  }
  return out;
}

}  // namespace

AlphaMapSpec make_alpha_spec(int left_genus, std::vector<Label> left_markings, Label left_node,
                             int right_genus, std::vector<Label> right_markings, Label right_node) {
  left_markings = sorted(std::move(left_markings));
  right_markings = sorted(std::move(right_markings));
  std::vector<Label> overlap;
  std::set_intersection(left_markings.begin(), left_markings.end(), right_markings.begin(),
                        right_markings.end(), std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw Error(ErrorCode::SpecMismatch, "marking sets of the two factors overlap");
  }
  const std::vector<Label> target_labels = set_union(left_markings, right_markings);
  if (contains(target_labels, left_node) || contains(target_labels, right_node)) {
    throw Error(ErrorCode::SpecMismatch, "gluing labels must not be markings of the target");
  }
  return AlphaMapSpec{Signature(left_genus + right_genus, target_labels),
                      Signature(left_genus, with_label(left_markings, left_node)), left_node,
                      Signature(right_genus, with_label(right_markings, right_node)), right_node};
}

BetaMapSpec make_beta_spec(int source_genus, std::vector<Label> markings, Label first_node,
                           Label second_node) {
  markings = sorted(std::move(markings));
  if (first_node == second_node) {
    throw Error(ErrorCode::SpecMismatch, "the two gluing labels must differ");
  }
  if (contains(markings, first_node) || contains(markings, second_node)) {
    throw Error(ErrorCode::SpecMismatch, "gluing labels must not be markings of the target");
  }
  Signature target(source_genus + 1, markings);
  markings.push_back(first_node);
  markings.push_back(second_node);
  return BetaMapSpec{std::move(target), Signature(source_genus, std::move(markings)), first_node,
                     second_node};
}

std::pair<DivisorClass, DivisorClass> alpha_pullback(const AlphaMapSpec& spec, const DivisorClass& d) {
  require_target(spec.target, d);
  const std::vector<Label> left_markings =
      without(std::vector<Label>(spec.left.labels().begin(), spec.left.labels().end()), {spec.left_node});
  const std::vector<Label> right_markings = without(
      std::vector<Label>(spec.right.labels().begin(), spec.right.labels().end()), {spec.right_node});
  const BoundaryIndex glue = canonical_pair(GenusMarking{spec.left.genus(), left_markings},
                                            GenusMarking{spec.right.genus(), right_markings}, spec.target);
  return {alpha_component(d, spec.left, spec.left_node, spec.right.genus(), right_markings, glue),
          alpha_component(d, spec.right, spec.right_node, spec.left.genus(), left_markings, glue)};
}

DivisorClass beta_pullback(const BetaMapSpec& spec, const DivisorClass& d) {
  require_target(spec.target, d);
  const Rational e_irr = d.coefficient(delta_irr_element());
  DivisorClass out(spec.source);
  out.add(lambda_element(), d.coefficient(lambda_element()));
  for (Label l : spec.source.labels()) {
    if (l == spec.first_node || l == spec.second_node) {
      out.add(psi_element(l), -e_irr);
    } else {
      out.add(psi_element(l), d.coefficient(psi_element(l)));
    }
  }
  out.add(delta_irr_element(), e_irr);
  for (const auto& index : separating_indices(spec.source)) {
    const GenusMarking& with_first = index.side_containing(spec.first_node);
    if (!contains(with_first.labels, spec.second_node)) {
      out.add(delta_element(index), e_irr);
      continue;
    }
    const GenusMarking& other = index.side_without(spec.first_node);
    GenusMarking bumped{with_first.genus + 1, without(with_first.labels, {spec.first_node, spec.second_node})};
    const BoundaryIndex target_index = canonical_pair(other, std::move(bumped), spec.target);
    out.add(delta_element(index), d.coefficient(delta_element(target_index)));
  }
  return out;
}

std::vector<Rational> decompose(const DivisorClass& d, std::span<const DivisorClass> generators) {
  for (const auto& gen : generators) {
    if (!(gen.signature() == d.signature())) {
      throw Error(ErrorCode::SignatureMismatch, "generator on " + gen.signature().to_string() +
                                                    " but class on " + d.signature().to_string());
    }
  }
  const std::vector<BasisElement> basis = basis_of(d.signature());
  RationalMatrix a;
  std::vector<Rational> rhs;
  a.reserve(basis.size());
  for (const auto& element : basis) {
    std::vector<Rational> row;
    row.reserve(generators.size());
    for (const auto& gen : generators) {
      row.push_back(gen.coefficient(element));
    }
    a.push_back(std::move(row));
    rhs.push_back(d.coefficient(element));
  }
  LinearSolveResult r = solve_exact(a, rhs);
  switch (r.status) {
    case LinearSolveResult::Status::RankDeficient:
      throw Error(ErrorCode::DependentGenerators,
                  "generators have rank " + std::to_string(r.rank) + " < " + std::to_string(generators.size()));
    case LinearSolveResult::Status::Inconsistent:
      throw Error(ErrorCode::NotInSpan, "class is not in the span; witness basis element " +
                                            to_text(basis[r.inconsistent_row], d.signature()));
    case LinearSolveResult::Status::Unique:
      break;
  }
  return r.solution;
}

std::vector<DivisorClass> beta_star_generators(int g) {
  if (g < 3) {
    throw Error(ErrorCode::GenusTooSmall, "beta generators need g >= 3");
  }
  const Signature source(g - 1, {1, 2});
  std::vector<DivisorClass> out{named_class(NamedClass::MuPrime, source),
                                named_class(NamedClass::ThetaPrime, source),
                                named_class(NamedClass::Sigma, source)};
  for (int i = 1; i <= g - 1; ++i) {
    out.push_back(delta_class(source, delta_index(source, i)));
  }
  return out;
}

std::vector<DivisorClass> alpha_star_generators(int e) {
  const Signature factor(e, {1});
  std::vector<DivisorClass> out{named_class(NamedClass::MuPrimeE, factor),
                                named_class(NamedClass::ThetaPrimeE, factor), delta_irr_class(factor)};
  for (int l = 1; l <= e - 1; ++l) {
    out.push_back(delta_class(factor, delta_index(factor, l)));
  }
  return out;
}

std::vector<Rational> BetaStarCoefficients::flatten() const {
  std::vector<Rational> out{mu_prime, theta_prime, sigma};
  out.insert(out.end(), delta.begin(), delta.end());
  return out;
}

BetaStarCoefficients beta_star_closed_form(const MuCoordinates& m, MuPrimeNumerator numerator) {
  const long g = m.genus;
  if (g < 3) {
    throw Error(ErrorCode::GenusTooSmall, "beta closed form needs g >= 3");
  }
  const long lead = numerator == MuPrimeNumerator::Corrected ? g : g - 2;
  BetaStarCoefficients c;
  c.mu_prime = ((g - 1) * lead * (2 * g - 1) * m.a - 3 * m.b_irr) / Rational(g * (g - 2) * (2 * g - 1));
  c.theta_prime = (m.a * g - m.b_irr) / Rational(g * (g - 2));
  c.sigma = Rational((g - 1) * (2 * g + 1)) * m.b_irr / Rational(g * (2 * g - 1));
  for (long i = 1; i <= g - 1; ++i) {
    c.delta.push_back(m.b_pair(static_cast<int>(i)) -
                      Rational(4 * i * (2 * i + 1)) * m.b_irr / Rational(g * (2 * g - 1)));
  }
  return c;
}

bool AlphaFactorCoefficients::matches(const AlphaFactorCoefficients& other) const {
  if (genus != other.genus || delta_irr != other.delta_irr || delta != other.delta) {
    return false;
  }
  return genus == 1 || (mu_prime == other.mu_prime && theta_prime == other.theta_prime);
}

namespace {

AlphaFactorCoefficients alpha_factor(const MuCoordinates& m, long e, long s, long t) {
  const long g = m.genus;
  const Rational& bst = m.b_pair(static_cast<int>(s));
  const Rational w = Rational(e * (2 * e + 1));
  AlphaFactorCoefficients c;
  c.genus = static_cast<int>(e);
  c.mu_prime = (Rational(4 * (g - 1)) * w * m.a - 3 * bst) / (4 * w);
  c.theta_prime = (Rational(4 * s * t) * m.a - bst) / Rational(4 * e);
  c.delta_irr = m.b_irr - bst / (4 * w);
  for (long l = 1; l <= e - 1; ++l) {
    c.delta.push_back(m.b_pair(static_cast<int>(l)) - Rational(l * (2 * l + 1)) / w * bst);
  }
  return c;
}

}  // namespace

std::pair<AlphaFactorCoefficients, AlphaFactorCoefficients> alpha_star_closed_form(
    const MuCoordinates& m, int s, int t) {
  if (m.genus < 3) {
    throw Error(ErrorCode::GenusTooSmall, "alpha closed form needs g >= 3");
  }
  if (s < 1 || t < 1 || s + t != m.genus) {
    throw Error(ErrorCode::BadSplit, "split " + std::to_string(s) + "+" + std::to_string(t) +
                                         " does not decompose g = " + std::to_string(m.genus));
  }
  return {alpha_factor(m, s, s, t), alpha_factor(m, t, s, t)};
}

DivisorClass reduce_genus_one(const DivisorClass& d) {
  const Signature& sig = d.signature();
  if (sig.genus() != 1 || sig.marking_count() != 1) {
    throw Error(ErrorCode::WrongHomeSpace, "genus-one relations apply on M_{1,1} only");
  }
  DivisorClass out(sig);
  Rational irr = d.coefficient(delta_irr_element());
  irr += d.coefficient(lambda_element()) / 12;
  irr += d.coefficient(psi_element(sig.labels()[0])) / 12;
  out.add(delta_irr_element(), irr);
  return out;
}

AlphaFactorCoefficients decompose_alpha_factor(const DivisorClass& component) {
  const Signature& sig = component.signature();
  if (sig.marking_count() != 1) {
    throw Error(ErrorCode::WrongHomeSpace, "alpha factors are one-pointed");
  }
  AlphaFactorCoefficients c;
  c.genus = sig.genus();
  if (sig.genus() == 1) {
    c.delta_irr = reduce_genus_one(component).coefficient(delta_irr_element());
    return c;
  }
  // Relabel to {1} so the generators can be shared.
  const Signature unit(sig.genus(), {1});
  DivisorClass relabeled(unit);
  for (const auto& [element, value] : component.terms()) {
    if (std::holds_alternative<PsiElement>(element)) {
      relabeled.add(psi_element(1), value);
    } else if (const auto* delta = std::get_if<DeltaElement>(&element);
               delta != nullptr && !delta->index.is_irreducible()) {
      const GenusMarking& bare = delta->index.first().labels.empty() ? delta->index.first()
                                                                     : delta->index.second();
      relabeled.add(delta_element(delta_index(unit, bare.genus)), value);
    } else {
      relabeled.add(element, value);
    }
  }
  const auto generators = alpha_star_generators(sig.genus());
  const auto coeffs = decompose(relabeled, generators);
  c.mu_prime = coeffs[0];
  c.theta_prime = coeffs[1];
  c.delta_irr = coeffs[2];
  c.delta.assign(coeffs.begin() + 3, coeffs.end());
  return c;
}

AlphaMapSpec alpha_split_spec(int s, int t) { return make_alpha_spec(s, {}, 1, t, {}, 1); }

BetaMapSpec beta_spec_for(int g) { return make_beta_spec(g - 1, {}, 1, 2); }

}  // namespace nefcone
