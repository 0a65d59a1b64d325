#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "nefcone/error.hpp"
#include "nefcone/expression.hpp"
#include "nefcone/nef_cone.hpp"
#include "support.hpp"

using namespace nefcone;
using testing::R;
using testing::Rs;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

struct Row {
  std::string name;
  std::vector<long> coeffs;
};

void check_rows(const HRep& h, const std::vector<Row>& want) {
  REQUIRE(h.inequalities.size() == want.size());
  for (std::size_t r = 0; r < want.size(); ++r) {
    CAPTURE(want[r].name);
    CHECK(h.inequalities[r].name == want[r].name);
    CHECK(h.inequalities[r].constant == 0);
    std::vector<Rational> coeffs;
    for (long c : want[r].coeffs) {
      coeffs.push_back(R(c));
    }
    CHECK(h.inequalities[r].coeffs == coeffs);
  }
}

bool contains_halfspace(const HRep& h, const std::vector<Rational>& coeffs) {
  const LinearInequality want{"", Rational(0), coeffs};
  return std::any_of(h.inequalities.begin(), h.inequalities.end(),
                     [&](const LinearInequality& row) { return same_halfspace(row, want); });
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

MuCoordinates scaled(MuCoordinates m, const Rational& c) {
  m.a *= c;
  m.b_irr *= c;
  for (auto& b : m.b) {
    b *= c;
  }
  return m;
}

MuCoordinates mu_point(int g) {
  MuCoordinates m;
  m.genus = g;
  m.a = 1;
  m.b.assign(static_cast<std::size_t>(g / 2), Rational(0));
  return m;
}

Rational coefficient_named(const PartialVerdict& v, const std::string& name) {
  for (const auto& [n, value] : v.coefficients) {
    if (n == name) {
      return value;
    }
  }
  FAIL("no coefficient " << name);
  return Rational(0);
}

}  // namespace

TEST_CASE("chain values") {
  MuCoordinates m;
  m.genus = 4;
  m.a = 5;
  m.b_irr = 1;
  m.b = {3, 10};
  const ChainValues c = chain_values(m);
  CHECK(c.b == std::vector<Rational>{4, 1, 1});
  CHECK(c.b_star == Rs({{1, 7}, {1, 7}, {1, 1}}));
  CHECK(mu_variables(4) == std::vector<std::string>{"a", "b_irr", "b_1", "b_2"});
}

TEST_CASE("theorem system examples") {
  check_rows(theorem_system(3), {{"A_1", {8, 0, -1}}, {"B_{0,1}", {0, 12, -1}}, {"Bs_{1,0}", {0, -8, 3}}});
  check_rows(theorem_system(4), {{"A_1", {12, 0, -1, 0}},
                                 {"A_2", {16, 0, 0, -1}},
                                 {"B_{0,1}", {0, 12, -1, 0}},
                                 {"B_{1,2}", {0, 0, 10, -3}},
                                 {"Bs_{1,0}", {0, -3, 1, 0}},
                                 {"Bs_{2,1}", {0, 0, -10, 21}}});
  for (int g = 3; g <= 20; ++g) {
    const HRep h = theorem_system(g);
    CHECK(h.variables == mu_variables(g));
    CHECK(h.inequalities.size() == static_cast<std::size_t>(3 * (g / 2)));
  }
  CHECK(code_of([] { theorem_system(2); }) == ErrorCode::GenusTooSmall);
  CHECK(code_of([] { proof_system(2, false); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("proof system examples") {
  const HRep g3 = proof_system(3, false);
  const std::vector<std::vector<Rational>> want3 = {{8, 0, -1}, {0, 12, -1}, {0, -8, 3}};
  for (const auto& row : g3.inequalities) {
    CAPTURE(row.name);
    CHECK(std::any_of(want3.begin(), want3.end(), [&](const std::vector<Rational>& w) {
      return same_halfspace(row, LinearInequality{"", Rational(0), w});
    }));
  }
  for (const auto& w : want3) {
    CHECK(contains_halfspace(g3, w));
  }
  CHECK(std::none_of(g3.inequalities.begin(), g3.inequalities.end(),
                     [](const LinearInequality& row) { return row.name.rfind("PC", 0) == 0; }));

  const HRep g5 = proof_system(5, false);
  CHECK(contains_halfspace(g5, {0, 0, R(1, 3), R(-1, 10)}));
  CHECK(contains_halfspace(g5, {0, 0, R(-1, 36), R(1, 21)}));

  const HRep signs = proof_system(5, true);
  CHECK(signs.inequalities.size() == g5.inequalities.size() + 4);
  CHECK(contains_halfspace(signs, {0, 1, 0, 0}));
}

TEST_CASE("theorem and proof systems cut out the same cone") {
  for (int g = 3; g <= 6; ++g) {
    CAPTURE(g);
    const HRep t = theorem_system(g);
    CHECK(systems_equal(t, proof_system(g, false)).equal);
    CHECK(systems_equal(t, proof_system(g, true)).equal);
  }
}

TEST_CASE("the system forces nonnegative boundary coefficients") {
  for (int g = 3; g <= 10; ++g) {
    const HRep t = theorem_system(g);
    const std::size_t n = t.variables.size();
    for (std::size_t v = 1; v < n; ++v) {
      std::vector<Rational> e(n, Rational(0));
      e[v] = 1;
      const LinearInequality sign{"", Rational(0), e};
      const auto result = implies(t, sign);
      CHECK(result.implied);
      CHECK(verify_certificate(t, sign, result));
    }
  }
}

TEST_CASE("membership examples") {
  for (int g = 3; g <= 10; ++g) {
    const auto v = is_nef_over_M1(mu_point(g));
    CHECK(v.is_member());
    std::set<std::string> chain;
    for (const auto& row : theorem_system(g).inequalities) {
      if (row.name.rfind("A_", 0) != 0) {
        chain.insert(row.name);
      }
    }
    CHECK(as_set(v.binding) == chain);
    CHECK(is_nef_over_M1(named_class(NamedClass::Mu, Signature(g, {}))).binding == v.binding);
  }

  const Signature m3(3, {});
  const DivisorClass d = parse_divisor("lambda - 1/12*dirr", m3);
  CHECK(to_mu_basis(d) == MuCoordinates{3, R(1, 28), R(1, 42), Rs({{2, 7}})});
  const auto member = is_nef_over_M1(d);
  CHECK(member.is_member());
  CHECK(as_set(member.binding) == std::set<std::string>{"A_1", "B_{0,1}"});
  CHECK(member.violated.empty());

  const auto outside = is_nef_over_M1(parse_divisor("lambda - 1/9*dirr - 1/3*d1", m3));
  CHECK(outside.decision == MembershipVerdict::Decision::NotMember);
  CHECK(outside.violated == std::vector<std::string>{"Bs_{1,0}"});
  CHECK(std::string(decision_name(outside.decision)) == "NotMember");

  CHECK(code_of([] { is_nef_over_M1(lambda_class(Signature(3, {1}))); }) == ErrorCode::WrongHomeSpace);
  CHECK(code_of([] { is_nef_over_M1(mu_point(2)); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("verdicts are invariant under positive scaling") {
  testing::Draw draw(404);
  for (int n = 0; n < 300; ++n) {
    const int g = static_cast<int>(draw.integer(3, 8));
    const MuCoordinates m = draw.mu(g);
    const Rational c = R(draw.integer(1, 40), draw.integer(1, 9));
    const auto v = is_nef_over_M1(m);
    const auto w = is_nef_over_M1(scaled(m, c));
    CHECK(v.decision == w.decision);
    CHECK(v.binding == w.binding);
    CHECK(v.violated == w.violated);
  }
}

TEST_CASE("slice vertices") {
  const VRep g4 = slice_vertices(4);
  std::vector<std::vector<Rational>> want = {
      Rs({{0, 1}, {0, 1}, {0, 1}}),  Rs({{1, 12}, {0, 1}, {0, 1}}), Rs({{1, 10}, {1, 5}, {0, 1}}),
      Rs({{1, 15}, {1, 5}, {0, 1}}), Rs({{0, 1}, {0, 1}, {2, 7}}),  Rs({{1, 12}, {0, 1}, {2, 7}}),
      Rs({{1, 9}, {1, 3}, {4, 9}})};
  std::sort(want.begin(), want.end(), point_less);
  CHECK(g4.vertices == want);
  CHECK(g4.rays.empty());

  std::vector<std::vector<Rational>> want3 = {Rs({{0, 1}, {0, 1}}), Rs({{1, 12}, {0, 1}}), Rs({{3, 28}, {2, 7}})};
  std::sort(want3.begin(), want3.end(), point_less);
  CHECK(slice_vertices(3).vertices == want3);

  for (int g = 3; g <= 8; ++g) {
    CAPTURE(g);
    const VRep v = slice_vertices(g);
    CHECK(v == brute_force_vertices(slice_system(g)));
    std::vector<Rational> mu_dir{make_rational(g, 8 * g + 4)};
    for (int i = 1; i <= g / 2; ++i) {
      mu_dir.push_back(make_rational(4 * i * (g - i), 8 * g + 4));
    }
    CHECK(std::find(v.vertices.begin(), v.vertices.end(), mu_dir) != v.vertices.end());
    const std::size_t dim = static_cast<std::size_t>(g / 2 + 1);
    for (const auto& c : v.vertices) {
      const auto verdict = is_nef_over_M1(slice_point_to_mu(g, c));
      CHECK(verdict.is_member());
      CHECK(verdict.binding.size() >= dim);
    }
  }
  CHECK(code_of([] { slice_vertices(2); }) == ErrorCode::GenusTooSmall);
}

TEST_CASE("generator walk") {
  const Interval s1 = generator_walk_bounds(3, 1, 1);
  CHECK(s1.lower == R(8, 3));
  CHECK(s1.upper == 12);
  const Interval s2 = generator_walk_bounds(4, 2, 21);
  CHECK(s2.lower == 10);
  CHECK(s2.upper == 70);

  MuCoordinates zero{5, R(3), R(0), Rs({{0, 1}, {0, 1}})};
  CHECK(walk_check(zero));
  zero.b[1] = R(1, 100);
  CHECK_FALSE(walk_check(zero));
  CHECK(walk_check(MuCoordinates{5, R(0), R(0), Rs({{0, 1}, {0, 1}})}));
  CHECK(walk_min_a(MuCoordinates{4, R(0), R(1), Rs({{12, 1}, {32, 1}})}) == 2);

  CHECK(code_of([] { generator_walk_bounds(3, 1, -1); }) == ErrorCode::NegativeSeed);
  CHECK(code_of([] { walk_check(MuCoordinates{3, R(1), R(-1), Rs({{0, 1}})}); }) == ErrorCode::NegativeSeed);
  CHECK(code_of([] { generator_walk_bounds(4, 3, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { generator_walk_bounds(4, 0, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("walk_check agrees with membership") {
  testing::Draw draw(505);
  int members = 0;
  for (int g = 3; g <= 8; ++g) {
    for (int n = 0; n < 150; ++n) {
      MuCoordinates m;
      if (draw.coin()) {
        m = walk_sample(g, R(draw.integer(0, 20), draw.integer(1, 5)), draw.engine());
        CHECK(walk_check(m));
      } else {
        m = draw.mu(g);
        m.b_irr = abs(m.b_irr);
      }
      const bool member = is_nef_over_M1(m).is_member();
      CHECK(walk_check(m) == member);
      members += member ? 1 : 0;
    }
  }
  CHECK(members > 300);
}

TEST_CASE("one-point subcone check") {
  for (int g = 2; g <= 6; ++g) {
    const Signature sig(g, {1});
    const auto theta1 = mgn1_subcone_check(named_class(NamedClass::Theta1, sig));
    CHECK(theta1.state == PartialVerdict::State::InnerCone);
    REQUIRE(theta1.coefficients.size() == static_cast<std::size_t>(g + 2));
    for (const auto& [name, value] : theta1.coefficients) {
      CHECK(value == (name == "b" ? 1 : 0));
    }
    CHECK_FALSE(theta1.complete);

    const auto irr = mgn1_subcone_check(-delta_irr_class(sig));
    CHECK(irr.state == PartialVerdict::State::ViolatesNecessary);
    CHECK(irr.violated == std::vector<std::string>{"c_irr"});

    const auto neg_mu = mgn1_subcone_check(-named_class(NamedClass::Mu, sig));
    CHECK(neg_mu.state == PartialVerdict::State::Indeterminate);
    CHECK(coefficient_named(neg_mu, "a") == -1);
  }
  const auto d1 = mgn1_subcone_check(-delta_class(Signature(4, {1}), delta_index(Signature(4, {1}), 3)));
  CHECK(d1.violated == std::vector<std::string>{"c_3"});

  const Signature m11(1, {1});
  const auto g1 = mgn1_subcone_check(delta_irr_class(m11));
  CHECK(g1.complete);
  CHECK(g1.state == PartialVerdict::State::InnerCone);
  CHECK(mgn1_subcone_check(-delta_irr_class(m11)).state == PartialVerdict::State::ViolatesNecessary);
  CHECK(code_of([] { mgn1_subcone_check(lambda_class(Signature(3, {}))); }) == ErrorCode::WrongHomeSpace);
}

TEST_CASE("two-point subcone check") {
  for (int g = 2; g <= 6; ++g) {
    const Signature sig(g, {1, 2});
    const auto t12 = mgn2_subcone_check(named_class(NamedClass::Theta12, sig), TwoPointVariant::Plain);
    CHECK(t12.state == PartialVerdict::State::InnerCone);
    CHECK(coefficient_named(t12, "b") == 1);

    const auto primed =
        mgn2_subcone_check(named_class(NamedClass::Theta12DoublePrime, sig), TwoPointVariant::Primed);
    CHECK(primed.state == PartialVerdict::State::InnerCone);
    CHECK(coefficient_named(primed, "b") == 1);

    const auto s1 = mgn2_subcone_check(-delta_class(sig, sigma_index(sig, 1)), TwoPointVariant::Plain);
    CHECK(s1.state == PartialVerdict::State::ViolatesNecessary);
    CHECK(s1.violated == std::vector<std::string>{"c_1"});

    const auto asym = mgn2_subcone_check(psi_class(sig, 1) - psi_class(sig, 2), TwoPointVariant::Plain);
    CHECK(asym.state == PartialVerdict::State::Indeterminate);
    CHECK(asym.reason == PartialVerdict::Reason::OutsideSpan);
    CHECK(asym.coefficients.empty());

    // mu'' and mu are the same class written against different generators
    const auto mu = mgn2_subcone_check(named_class(NamedClass::Mu, sig), TwoPointVariant::Plain);
    CHECK(mu.state == PartialVerdict::State::InnerCone);
    CHECK(coefficient_named(mu, "a") == 1);
  }
  CHECK(code_of([] { mgn2_subcone_check(lambda_class(Signature(1, {1, 2})), TwoPointVariant::Plain); }) ==
        ErrorCode::GenusTooSmall);
  CHECK(code_of([] { mgn2_subcone_check(lambda_class(Signature(3, {1})), TwoPointVariant::Plain); }) ==
        ErrorCode::WrongHomeSpace);
  CHECK(std::string(state_name(PartialVerdict::State::InnerCone)) == "InnerCone");
  CHECK(std::string(reason_name(PartialVerdict::Reason::OutsideSpan)) == "OutsideSpan");
}
