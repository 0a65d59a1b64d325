#include "nefcone/divisor.hpp"

#include <algorithm>
#include <array>

#include "nefcone/error.hpp"

namespace nefcone {

bool is_valid_for(const BasisElement& element, const Signature& sig) {
  if (const auto* psi = std::get_if<PsiElement>(&element)) {
    return sig.has_label(psi->label);
  }
  if (const auto* delta = std::get_if<DeltaElement>(&element)) {
    if (delta->index.is_irreducible()) {
      return true;
    }
    try {
      return canonical_pair(delta->index.first(), delta->index.second(), sig) == delta->index;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

std::string to_text(const BasisElement& element, const Signature& sig) {
  if (std::holds_alternative<LambdaElement>(element)) {
    return "lambda";
  }
  if (const auto* psi = std::get_if<PsiElement>(&element)) {
    return "psi" + std::to_string(psi->label);
  }
  return to_text(std::get<DeltaElement>(element).index, sig);
}

std::vector<BasisElement> basis_of(const Signature& sig) {
  std::vector<BasisElement> out{lambda_element()};
  for (Label t : sig.labels()) {
    out.push_back(psi_element(t));
  }
  for (auto& index : enumerate_boundary(sig)) {
    out.push_back(delta_element(std::move(index)));
  }
  return out;
}

Rational DivisorClass::coefficient(const BasisElement& element) const {
  auto it = terms_.find(element);
  return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::add(const BasisElement& element, const Rational& value) {
  if (!is_valid_for(element, sig_)) {
    throw Error(ErrorCode::InvalidArgument,
                "basis element " + to_text(element, sig_) + " is not defined on " + sig_.to_string());
  }
  if (value == 0) {
    return *this;
  }
  auto [it, inserted] = terms_.try_emplace(element, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
  return *this;
}

void DivisorClass::require_same(const DivisorClass& other) const {
  if (!(sig_ == other.sig_)) {
    throw Error(ErrorCode::SignatureMismatch,
                "classes on " + sig_.to_string() + " and " + other.sig_.to_string());
  }
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same(other);
  for (const auto& [element, value] : other.terms_) {
    add(element, value);
  }
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same(other);
  for (const auto& [element, value] : other.terms_) {
    add(element, -value);
  }
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [element, value] : terms_) {
    value *= scalar;
  }
  return *this;
}

DivisorClass lambda_class(const Signature& sig) {
  return DivisorClass(sig).add(lambda_element(), 1);
}

DivisorClass psi_class(const Signature& sig, Label t) {
  return DivisorClass(sig).add(psi_element(t), 1);
}

DivisorClass delta_irr_class(const Signature& sig) {
  return DivisorClass(sig).add(delta_irr_element(), 1);
}

DivisorClass delta_class(const Signature& sig, const BoundaryIndex& index) {
  return DivisorClass(sig).add(delta_element(index), 1);
}

DivisorClass linear_combine(std::span<const std::pair<Rational, DivisorClass>> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::InvalidArgument, "linear_combine needs at least one term");
  }
  DivisorClass out(terms.front().second.signature());
  for (const auto& [scalar, d] : terms) {
    DivisorClass scaled = d;
    scaled *= scalar;
    out += scaled;
  }
  return out;
}

namespace {

long count_in(std::span<const Label> L, const std::vector<Label>& set) {
  return std::count_if(L.begin(), L.end(), [&](Label l) {
    return std::binary_search(set.begin(), set.end(), l);
  });
}

std::vector<Label> sorted_subset(const Signature& sig, std::span<const Label> L) {
  std::vector<Label> out(L.begin(), L.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorCode::DuplicateLabel, "repeated label in L");
  }
  for (Label l : out) {
    if (!sig.has_label(l)) {
      throw Error(ErrorCode::InvalidArgument,
                  "label " + std::to_string(l) + " of L is not a marking of " + sig.to_string());
    }
  }
  return out;
}

}  // namespace

Integer gamma_L(std::span<const Label> L, const BoundaryIndex& index) {
  if (index.is_irreducible()) {
    throw Error(ErrorCode::InvalidArgument, "gamma_L is defined on separating indices only");
  }
  const long i = index.first().genus;
  const long j = index.second().genus;
  const long li = count_in(L, index.first().labels);
  const long lj = count_in(L, index.second().labels);
  const Integer det = Integer(i) * lj - Integer(j) * li;
  return (det + li) * (det - lj);
}

DivisorClass theta(const Signature& sig, std::span<const Label> L) {
  const auto subset = sorted_subset(sig, L);
  const long g = sig.genus();
  const long n = static_cast<long>(subset.size());
  DivisorClass out(sig);
  for (Label t : subset) {
    out.add(psi_element(t), Rational(4 * (g - 1 + n) * (g - 1)));
  }
  out.add(lambda_element(), Rational(-12 * n * n));
  out.add(delta_irr_element(), Rational(n * n));
  for (const auto& index : separating_indices(sig)) {
    out.add(delta_element(index), Rational(Integer(-4) * gamma_L(subset, index)));
  }
  return out;
}

namespace {

constexpr std::array<std::pair<NamedClass, const char*>, 10> kNames{{
    {NamedClass::Mu, "mu"},
    {NamedClass::Theta1, "theta1"},
    {NamedClass::Theta12, "theta12"},
    {NamedClass::MuPrime, "mu_prime"},
    {NamedClass::ThetaPrime, "theta_prime"},
    {NamedClass::Sigma, "sigma"},
    {NamedClass::MuPrimeE, "mu_prime_e"},
    {NamedClass::ThetaPrimeE, "theta_prime_e"},
    {NamedClass::MuDoublePrime, "mu_dprime"},
    {NamedClass::Theta12DoublePrime, "theta12_dprime"},
}};

void require_markings(NamedClass name, const Signature& sig, std::size_t count) {
  if (sig.marking_count() != count) {
    throw Error(ErrorCode::WrongHomeSpace,
                std::string(named_class_name(name)) + " needs " + std::to_string(count) +
                    " marking(s), got " + sig.to_string());
  }
}

DivisorClass mu_class(const Signature& sig) {
  const long g = sig.genus();
  DivisorClass out(sig);
  out.add(lambda_element(), Rational(8 * g + 4));
  out.add(delta_irr_element(), Rational(-g));
  for (const auto& index : separating_indices(sig)) {
    out.add(delta_element(index), Rational(-4L * index.first().genus * index.second().genus));
  }
  return out;
}

DivisorClass theta1_class(const Signature& sig) {
  const long g = sig.genus();
  DivisorClass out(sig);
  out.add(psi_element(sig.labels()[0]), Rational(4 * g * (g - 1)));
  out.add(lambda_element(), Rational(-12));
  out.add(delta_irr_element(), Rational(1));
  for (long i = 1; i <= g - 1; ++i) {
    out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (i - 1)));
  }
  return out;
}

DivisorClass sigma_class(const Signature& sig) {
  DivisorClass out = delta_irr_class(sig);
  for (int i = 1; i <= sig.genus() - 1; ++i) {
    out.add(delta_element(sigma_index(sig, i)), 1);
  }
  return out;
}

void add_psi_pair(DivisorClass& d, const Rational& value) {
  for (Label t : d.signature().labels()) {
    d.add(psi_element(t), value);
  }
}

// (8h+4) lambda - h sigma - sum_{i=1}^{h} 4i(h-i) d_i on (h,{t1,t2}).
DivisorClass two_point_mu_with_sigma(const Signature& sig) {
  const long h = sig.genus();
  DivisorClass out(sig);
  out.add(lambda_element(), Rational(8 * h + 4));
  DivisorClass sigma = sigma_class(sig);
  sigma *= Rational(-h);
  out += sigma;
  for (long i = 1; i <= h; ++i) {
    out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (h - i)));
  }
  return out;
}

// (h-1)(h+1)(psi_1+psi_2) - 12 lambda + sigma - sum_{i=1}^{h} 4i(i-1) d_i.
DivisorClass two_point_theta_with_sigma(const Signature& sig) {
  const long h = sig.genus();
  DivisorClass out(sig);
  add_psi_pair(out, Rational((h - 1) * (h + 1)));
  out.add(lambda_element(), Rational(-12));
  out += sigma_class(sig);
  for (long i = 1; i <= h; ++i) {
    out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (i - 1)));
  }
  return out;
}

}  // namespace

std::optional<NamedClass> named_class_from_string(std::string_view name) {
  for (const auto& [value, text] : kNames) {
    if (name == text) {
      return value;
    }
  }
  return std::nullopt;
}

const char* named_class_name(NamedClass name) {
  for (const auto& [value, text] : kNames) {
    if (value == name) {
      return text;
    }
  }
  return "?";
}

DivisorClass named_class(NamedClass name, const Signature& sig) {
  switch (name) {
    case NamedClass::Mu:
      return mu_class(sig);

    case NamedClass::Theta1:
      require_markings(name, sig, 1);
      return theta1_class(sig);

    case NamedClass::Theta12: {
      require_markings(name, sig, 2);
      const long g = sig.genus();
      DivisorClass out(sig);
      add_psi_pair(out, Rational((g - 1) * (g + 1)));
      out.add(lambda_element(), Rational(-12));
      out.add(delta_irr_element(), Rational(1));
      for (long i = 1; i <= g - 1; ++i) {
        out.add(delta_element(sigma_index(sig, static_cast<int>(i))),
                Rational(-(2 * i - g - 1) * (2 * i - g + 1)));
      }
      for (long i = 1; i <= g; ++i) {
        out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (i - 1)));
      }
      return out;
    }

    case NamedClass::MuPrime: {
      // Written in the genus g of the target of the clutching map, g = h + 1.
      require_markings(name, sig, 2);
      const long g = sig.genus() + 1;
      DivisorClass out(sig);
      out.add(lambda_element(), Rational(8 * g - 4));
      DivisorClass sigma = sigma_class(sig);
      sigma *= Rational(-(g - 1));
      out += sigma;
      for (long i = 1; i <= g - 1; ++i) {
        out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (g - 1 - i)));
      }
      return out;
    }

    case NamedClass::ThetaPrime: {
      require_markings(name, sig, 2);
      const long g = sig.genus() + 1;
      DivisorClass out(sig);
      add_psi_pair(out, Rational((g - 2) * g));
      out.add(lambda_element(), Rational(-12));
      out += sigma_class(sig);
      for (long i = 1; i <= g - 1; ++i) {
        out.add(delta_element(delta_index(sig, static_cast<int>(i))), Rational(-4 * i * (i - 1)));
      }
      return out;
    }

    case NamedClass::Sigma:
      require_markings(name, sig, 2);
      return sigma_class(sig);

    case NamedClass::MuPrimeE:
    case NamedClass::ThetaPrimeE: {
      require_markings(name, sig, 1);
      const long e = sig.genus();
      if (e == 1) {
        return DivisorClass(sig);
      }
      DivisorClass out = name == NamedClass::MuPrimeE ? mu_class(sig) : theta1_class(sig);
      out *= make_rational(1, e - 1);
      return out;
    }

    case NamedClass::MuDoublePrime:
      require_markings(name, sig, 2);
      return two_point_mu_with_sigma(sig);

    case NamedClass::Theta12DoublePrime:
      require_markings(name, sig, 2);
      return two_point_theta_with_sigma(sig);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown named class");
}

const Rational& MuCoordinates::b_pair(int i) const {
  const int k = std::min(i, genus - i);
  if (k < 1 || k > static_cast<int>(b.size())) {
    throw Error(ErrorCode::InvalidArgument, "b index " + std::to_string(i) + " out of range");
  }
  return b[static_cast<std::size_t>(k - 1)];
}

MuCoordinates to_mu_basis(const DivisorClass& d) {
  const Signature& sig = d.signature();
  const long g = sig.genus();
  if (g < 3) {
    throw Error(ErrorCode::GenusTooSmall, "mu basis needs g >= 3, got " + std::to_string(g));
  }
  if (sig.marking_count() != 0) {
    throw Error(ErrorCode::WrongHomeSpace, "mu basis lives on M_g, got " + sig.to_string());
  }
  for (const auto& [element, value] : d.terms()) {
    if (std::holds_alternative<PsiElement>(element)) {
      throw Error(ErrorCode::UnsupportedBasisElement, "psi term in a class on M_g");
    }
  }
  MuCoordinates m;
  m.genus = static_cast<int>(g);
  m.a = d.coefficient(lambda_element()) / (8 * g + 4);
  m.b_irr = d.coefficient(delta_irr_element()) + m.a * g;
  for (long i = 1; i <= g / 2; ++i) {
    const auto index = delta_index(sig, static_cast<int>(i));
    m.b.push_back(d.coefficient(delta_element(index)) + m.a * (4 * i * (g - i)));
  }
  return m;
}

DivisorClass from_mu_basis(const MuCoordinates& m) {
  if (m.genus < 3) {
    throw Error(ErrorCode::GenusTooSmall, "mu basis needs g >= 3, got " + std::to_string(m.genus));
  }
  if (m.b.size() != static_cast<std::size_t>(m.genus / 2)) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(m.genus / 2) + " b coefficients");
  }
  const Signature sig(m.genus, {});
  DivisorClass out = named_class(NamedClass::Mu, sig);
  out *= m.a;
  out.add(delta_irr_element(), m.b_irr);
  for (int i = 1; i <= m.genus / 2; ++i) {
    out.add(delta_element(delta_index(sig, i)), m.b[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

}  // namespace nefcone
