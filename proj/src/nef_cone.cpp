#include "nefcone/nef_cone.hpp"

#include <algorithm>

#include "nefcone/clutching.hpp"
#include "nefcone/error.hpp"

namespace nefcone {

namespace {

void require_theorem_genus(int g) {
  if (g < 3) {
    throw Error(ErrorCode::GenusTooSmall, "the one-node criterion needs g >= 3, got " + std::to_string(g));
  }
}

int half(int g) { return g / 2; }

// Column of b_i in (a, b_irr, b_1, ...).
std::size_t b_column(int i) { return static_cast<std::size_t>(i) + 1; }

// Linear form over (a, b_irr, b_1..b_k) under construction.
class Row {
 public:
  explicit Row(int g) : coeffs_(static_cast<std::size_t>(half(g)) + 2, Rational(0)) {}

  Row& a(const Rational& c) { return at(0, c); }
  Row& b_irr(const Rational& c) { return at(1, c); }
  Row& b(int i, const Rational& c) { return at(b_column(i), c); }

  LinearInequality named(std::string name) const {
    LinearInequality ineq{std::move(name), Rational(0), coeffs_};
    auto canon = ineq.canonical();
    canon.name = ineq.name;
    return canon;
  }

 private:
  Row& at(std::size_t col, const Rational& c) {
    coeffs_[col] += c;
    return *this;
  }
  std::vector<Rational> coeffs_;
};

std::string pair_name(const char* family, std::initializer_list<int> ids) {
  std::string out = std::string(family) + "_{";
  bool first = true;
  for (int id : ids) {
    out += (first ? "" : ",") + std::to_string(id);
    first = false;
  }
  return out + "}";
}

// i(2i+1), the denominator of B_i.
Rational chain_weight(long i) { return Rational(i * (2 * i + 1)); }

}  // namespace

ChainValues chain_values(const MuCoordinates& m) {
  require_theorem_genus(m.genus);
  const long g = m.genus;
  ChainValues out;
  out.b.push_back(4 * m.b_irr);
  out.b_star.push_back(4 * m.b_irr / Rational(g * (2 * g - 1)));
  for (long i = 1; i <= half(m.genus); ++i) {
    const Rational& bi = m.b[static_cast<std::size_t>(i - 1)];
    out.b.push_back(bi / chain_weight(i));
    out.b_star.push_back(bi / chain_weight(g - i));
  }
  return out;
}

std::vector<std::string> mu_variables(int g) {
  std::vector<std::string> vars{"a", "b_irr"};
  for (int i = 1; i <= half(g); ++i) {
    vars.push_back("b_" + std::to_string(i));
  }
  return vars;
}

HRep theorem_system(int g) {
  require_theorem_genus(g);
  const int k = half(g);
  HRep h;
  h.variables = mu_variables(g);
  for (int i = 1; i <= k; ++i) {
    h.inequalities.push_back(Row(g).a(Rational(4 * i * (g - i))).b(i, -1).named("A_" + std::to_string(i)));
  }
  // B_i - B_{i+1} >= 0, with B_0 = 4 b_irr.
  for (int i = 0; i < k; ++i) {
    Row r(g);
    if (i == 0) {
      r.b_irr(4);
    } else {
      r.b(i, 1 / chain_weight(i));
    }
    r.b(i + 1, -1 / chain_weight(i + 1));
    h.inequalities.push_back(r.named(pair_name("B", {i, i + 1})));
  }
  // B*_{i+1} - B*_i >= 0, with B*_0 = 4 b_irr / (g(2g-1)).
  for (int i = 0; i < k; ++i) {
    Row r(g);
    r.b(i + 1, 1 / chain_weight(g - i - 1));
    if (i == 0) {
      r.b_irr(Rational(-4) / Rational(g * (2 * g - 1)));
    } else {
      r.b(i, -1 / chain_weight(g - i));
    }
    h.inequalities.push_back(r.named(pair_name("Bs", {i + 1, i})));
  }
  return h;
}

HRep proof_system(int g, bool include_nonnegativity) {
  require_theorem_genus(g);
  const int k = half(g);
  HRep h;
  h.variables = mu_variables(g);
  for (int s = 1; s <= k; ++s) {
    const int t = g - s;
    h.inequalities.push_back(Row(g).a(Rational(4 * s * t)).b(s, -1).named(pair_name("PA", {s, t})));
  }
  for (int s = 1; s <= k; ++s) {
    const int t = g - s;
    h.inequalities.push_back(Row(g).b_irr(4).b(s, -1 / chain_weight(s)).named(pair_name("PB", {s, t})));
    h.inequalities.push_back(Row(g)
                                 .b(s, 1 / chain_weight(t))
                                 .b_irr(Rational(-4) / Rational(g * (2 * g - 1)))
                                 .named(pair_name("PBs", {s, t})));
  }
  // {l,k} strictly encloses {s,t}: l < s <= t < k.
  for (int s = 1; s <= k; ++s) {
    const int t = g - s;
    for (int l = 1; l < s; ++l) {
      const int kk = g - l;
      h.inequalities.push_back(
          Row(g).b(l, 1 / chain_weight(l)).b(s, -1 / chain_weight(s)).named(pair_name("PC", {l, s, t, kk})));
      h.inequalities.push_back(
          Row(g).b(s, 1 / chain_weight(t)).b(l, -1 / chain_weight(kk)).named(pair_name("PCs", {l, s, t, kk})));
    }
  }
  if (include_nonnegativity) {
    h.inequalities.push_back(Row(g).a(1).named("nonneg_a"));
    h.inequalities.push_back(Row(g).b_irr(1).named("nonneg_birr"));
    for (int i = 1; i <= k; ++i) {
      h.inequalities.push_back(Row(g).b(i, 1).named("nonneg_b" + std::to_string(i)));
    }
  }
  return h;
}

const char* decision_name(MembershipVerdict::Decision d) {
  return d == MembershipVerdict::Decision::Member ? "Member" : "NotMember";
}

namespace {

std::vector<Rational> as_point(const MuCoordinates& m) {
  std::vector<Rational> p{m.a, m.b_irr};
  p.insert(p.end(), m.b.begin(), m.b.end());
  return p;
}

void require_shape(const MuCoordinates& m) {
  require_theorem_genus(m.genus);
  if (m.b.size() != static_cast<std::size_t>(half(m.genus))) {
    throw Error(ErrorCode::InvalidArgument, "genus " + std::to_string(m.genus) + " needs " +
                                                std::to_string(half(m.genus)) + " b coefficients, got " +
                                                std::to_string(m.b.size()));
  }
}

}  // namespace

MembershipVerdict is_nef_over_M1(const MuCoordinates& m) {
  require_shape(m);
  const auto point = as_point(m);
  MembershipVerdict v;
  for (const auto& ineq : theorem_system(m.genus).inequalities) {
    const int s = sign(ineq.evaluate(point));
    if (s == 0) {
      v.binding.push_back(ineq.name);
    } else if (s < 0) {
      v.violated.push_back(ineq.name);
    }
  }
  v.decision = v.violated.empty() ? MembershipVerdict::Decision::Member : MembershipVerdict::Decision::NotMember;
  return v;
}

MembershipVerdict is_nef_over_M1(const DivisorClass& d) { return is_nef_over_M1(to_mu_basis(d)); }

MuCoordinates slice_point_to_mu(int g, const std::vector<Rational>& c) {
  require_theorem_genus(g);
  if (c.size() != static_cast<std::size_t>(half(g)) + 1) {
    throw Error(ErrorCode::InvalidArgument, "slice point needs c_0..c_" + std::to_string(half(g)));
  }
  const Rational a = make_rational(1, 8L * g + 4);
  MuCoordinates m;
  m.genus = g;
  m.a = a;
  m.b_irr = Rational(g) * a - c[0];
  for (int i = 1; i <= half(g); ++i) {
    m.b.push_back(Rational(4 * i * (g - i)) * a - c[static_cast<std::size_t>(i)]);
  }
  return m;
}

HRep slice_system(int g) {
  const HRep theorem = theorem_system(g);
  const std::vector<Rational> origin = as_point(slice_point_to_mu(g, std::vector<Rational>(half(g) + 1)));
  HRep h;
  for (int i = 0; i <= half(g); ++i) {
    h.variables.push_back("c_" + std::to_string(i));
  }
  // b_irr and b_i each drop by exactly c_0 and c_i; a does not move.
  for (const auto& ineq : theorem.inequalities) {
    LinearInequality row;
    row.name = ineq.name;
    row.constant = ineq.evaluate(origin);
    for (std::size_t j = 1; j < ineq.coeffs.size(); ++j) {
      row.coeffs.push_back(-ineq.coeffs[j]);
    }
    h.inequalities.push_back(std::move(row));
  }
  return h;
}

VRep slice_vertices(int g) { return h_to_v(slice_system(g)); }

Interval generator_walk_bounds(int g, int stage, const Rational& previous) {
  require_theorem_genus(g);
  if (stage < 1 || stage > half(g)) {
    throw Error(ErrorCode::InvalidArgument,
                "walk stage " + std::to_string(stage) + " outside 1.." + std::to_string(half(g)));
  }
  if (stage == 1) {
    if (previous < 0) {
      throw Error(ErrorCode::NegativeSeed, "b_irr must be >= 0, got " + to_string(previous));
    }
    return {Rational(4 * (g - 1)) * previous / g, 12 * previous};
  }
  const long i = stage - 1;
  const long gi = g - i;
  return {Rational((gi - 1) * (2 * gi - 1)) / chain_weight(gi) * previous,
          chain_weight(i + 1) / chain_weight(i) * previous};
}

Rational walk_min_a(const MuCoordinates& m) {
  require_shape(m);
  Rational best = 0;
  for (int i = 1; i <= half(m.genus); ++i) {
    const Rational need = m.b[static_cast<std::size_t>(i - 1)] / Rational(4 * i * (m.genus - i));
    if (i == 1 || need > best) {
      best = need;
    }
  }
  return best;
}

bool walk_check(const MuCoordinates& m) {
  require_shape(m);
  Rational previous = m.b_irr;
  for (int stage = 1; stage <= half(m.genus); ++stage) {
    const Rational& value = m.b[static_cast<std::size_t>(stage - 1)];
    if (!generator_walk_bounds(m.genus, stage, previous).contains(value)) {
      return false;
    }
    previous = value;
  }
  return m.a >= walk_min_a(m);
}

MuCoordinates walk_sample(int g, const Rational& b_irr, std::mt19937& rng, std::uint32_t resolution) {
  if (resolution == 0) {
    throw Error(ErrorCode::InvalidArgument, "walk resolution must be positive");
  }
  auto pick = [&](const Interval& range) {
    const std::uint32_t step = rng() % (resolution + 1);
    return range.lower + (range.upper - range.lower) * make_rational(step, resolution);
  };
  MuCoordinates m;
  m.genus = g;
  m.b_irr = b_irr;
  Rational previous = b_irr;
  for (int stage = 1; stage <= half(g); ++stage) {
    previous = pick(generator_walk_bounds(g, stage, previous));
    m.b.push_back(previous);
  }
  const Rational floor = walk_min_a(m);
  // a is free above its floor; give it some room so a is not always binding.
  m.a = pick(Interval{floor, floor * 2 + 1});
  return m;
}

const char* state_name(PartialVerdict::State s) {
  switch (s) {
    case PartialVerdict::State::InnerCone:
      return "InnerCone";
    case PartialVerdict::State::ViolatesNecessary:
      return "ViolatesNecessary";
    case PartialVerdict::State::Indeterminate:
      return "Indeterminate";
  }
  return "?";
}

const char* reason_name(PartialVerdict::Reason r) {
  switch (r) {
    case PartialVerdict::Reason::None:
      return "None";
    case PartialVerdict::Reason::OutsideSpan:
      return "OutsideSpan";
    case PartialVerdict::Reason::SignNotForced:
      return "SignNotForced";
  }
  return "?";
}

namespace {

struct Generator {
  std::string name;
  DivisorClass value;
  bool sign_forced;  // a necessary condition says the coefficient is >= 0
};

PartialVerdict classify(const DivisorClass& d, const std::vector<Generator>& gens) {
  std::vector<DivisorClass> classes;
  for (const auto& gen : gens) {
    classes.push_back(gen.value);
  }
  PartialVerdict out;
  std::vector<Rational> coeffs;
  try {
    coeffs = decompose(d, classes);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInSpan) {
      throw;
    }
    out.state = PartialVerdict::State::Indeterminate;
    out.reason = PartialVerdict::Reason::OutsideSpan;
    return out;
  }
  bool all_nonnegative = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.coefficients.emplace_back(gens[i].name, coeffs[i]);
    if (coeffs[i] < 0) {
      all_nonnegative = false;
      if (gens[i].sign_forced) {
        out.violated.push_back(gens[i].name);
      }
    }
  }
  if (!out.violated.empty()) {
    out.state = PartialVerdict::State::ViolatesNecessary;
  } else if (all_nonnegative) {
    out.state = PartialVerdict::State::InnerCone;
  } else {
    out.state = PartialVerdict::State::Indeterminate;
    out.reason = PartialVerdict::Reason::SignNotForced;
  }
  return out;
}

}  // namespace

PartialVerdict mgn1_subcone_check(const DivisorClass& d) {
  const Signature& sig = d.signature();
  if (sig.marking_count() != 1) {
    throw Error(ErrorCode::WrongHomeSpace, "one-pointed check needs (g,{t}), got " + sig.to_string());
  }
  if (sig.genus() == 1) {
    const Rational c_irr = reduce_genus_one(d).coefficient(delta_irr_element());
    PartialVerdict out;
    out.complete = true;
    out.coefficients.emplace_back("c_irr", c_irr);
    if (c_irr >= 0) {
      out.state = PartialVerdict::State::InnerCone;
    } else {
      out.state = PartialVerdict::State::ViolatesNecessary;
      out.violated.push_back("c_irr");
    }
    return out;
  }
  std::vector<Generator> gens{
      {"a", named_class(NamedClass::Mu, sig), false},
      {"b", named_class(NamedClass::Theta1, sig), true},
      {"c_irr", delta_irr_class(sig), true},
  };
  for (int i = 1; i <= sig.genus() - 1; ++i) {
    gens.push_back({"c_" + std::to_string(i), delta_class(sig, delta_index(sig, i)), true});
  }
  return classify(d, gens);
}

PartialVerdict mgn2_subcone_check(const DivisorClass& d, TwoPointVariant variant) {
  const Signature& sig = d.signature();
  if (sig.marking_count() != 2) {
    throw Error(ErrorCode::WrongHomeSpace, "two-pointed check needs (g,{t1,t2}), got " + sig.to_string());
  }
  if (sig.genus() < 2) {
    throw Error(ErrorCode::GenusTooSmall, "two-pointed check needs g >= 2, got " + sig.to_string());
  }
  const auto labels = sig.labels();
  if (d.coefficient(psi_element(labels[0])) != d.coefficient(psi_element(labels[1]))) {
    PartialVerdict out;
    out.reason = PartialVerdict::Reason::OutsideSpan;
    return out;
  }
  const int g = sig.genus();
  std::vector<Generator> gens;
  if (variant == TwoPointVariant::Plain) {
    gens.push_back({"a", named_class(NamedClass::Mu, sig), false});
    gens.push_back({"b", named_class(NamedClass::Theta12, sig), true});
    gens.push_back({"c_irr", delta_irr_class(sig), true});
    for (int i = 1; i <= g - 1; ++i) {
      gens.push_back({"c_" + std::to_string(i), delta_class(sig, sigma_index(sig, i)), true});
    }
  } else {
    gens.push_back({"a", named_class(NamedClass::MuDoublePrime, sig), false});
    gens.push_back({"b", named_class(NamedClass::Theta12DoublePrime, sig), true});
    gens.push_back({"c", named_class(NamedClass::Sigma, sig), true});
  }
  for (int i = 1; i <= g; ++i) {
    gens.push_back({"d_" + std::to_string(i), delta_class(sig, delta_index(sig, i)), true});
  }
  return classify(d, gens);
}

}  // namespace nefcone
