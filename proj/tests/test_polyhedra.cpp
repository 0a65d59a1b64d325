#include <doctest.h>

#include <algorithm>
#include <functional>

#include "nefcone/error.hpp"
#include "nefcone/nef_cone.hpp"
#include "nefcone/polyhedra.hpp"
#include "support.hpp"

using namespace nefcone;
using testing::R;
using testing::Rs;

namespace {

LinearInequality ineq(std::vector<Rational> coeffs, Rational constant = 0, std::string name = "") {
  return LinearInequality{std::move(name), std::move(constant), std::move(coeffs)};
}

HRep system(std::vector<std::string> vars, std::vector<LinearInequality> rows) {
  return HRep{std::move(vars), std::move(rows)};
}

HRep unit_square() {
  return system({"x", "y"}, {ineq({1, 0}), ineq({0, 1}), ineq({-1, 0}, 1), ineq({0, -1}, 1)});
}

std::vector<std::vector<Rational>> sorted_points(std::vector<std::vector<Rational>> pts) {
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

bool same_facets(const HRep& got, const std::vector<LinearInequality>& want) {
  if (got.inequalities.size() != want.size()) {
    return false;
  }
  return std::all_of(want.begin(), want.end(), [&](const LinearInequality& w) {
    return std::any_of(got.inequalities.begin(), got.inequalities.end(),
                       [&](const LinearInequality& g) { return same_halfspace(g, w); });
  });
}

// Entailment through projection: with t = c.x, eliminate every x and read
// off the smallest t the remaining system allows.
bool fm_entails(const HRep& sys, const LinearInequality& target) {
  HRep h;
  h.variables = sys.variables;
  h.variables.push_back("t");
  for (auto row : sys.inequalities) {
    row.coeffs.push_back(0);
    h.inequalities.push_back(row);
  }
  LinearInequality up = target;
  up.constant = 0;
  up.coeffs.push_back(-1);
  LinearInequality down;
  for (const auto& c : target.coeffs) {
    down.coeffs.push_back(-c);
  }
  down.coeffs.push_back(1);
  h.inequalities.push_back(up);
  h.inequalities.push_back(down);
  for (const auto& v : sys.variables) {
    h = fm_eliminate(h, v);
  }
  bool has_lower = false;
  Rational lower;
  for (const auto& row : h.inequalities) {
    const Rational& a = row.coeffs[0];
    if (a == 0) {
      if (row.constant < 0) {
        return true;  // infeasible system entails everything
      }
      continue;
    }
    if (a > 0) {
      const Rational bound = -row.constant / a;
      if (!has_lower || bound > lower) {
        lower = bound;
        has_lower = true;
      }
    }
  }
  // Contradictory t-bounds also mean an empty system.
  for (const auto& row : h.inequalities) {
    if (row.coeffs[0] < 0 && has_lower && -row.constant / row.coeffs[0] < lower) {
      return true;
    }
  }
  return has_lower && lower + target.constant >= 0;
}

HRep random_system(testing::Draw& draw, std::size_t d, bool boxed) {
  HRep h;
  for (std::size_t k = 0; k < d; ++k) {
    h.variables.push_back("x" + std::to_string(k));
  }
  const long rows = draw.integer(1, 7);
  for (long r = 0; r < rows; ++r) {
    LinearInequality row;
    for (std::size_t k = 0; k < d; ++k) {
      row.coeffs.push_back(R(draw.integer(-4, 4)));
    }
    row.constant = R(draw.integer(-3, 6));
    h.inequalities.push_back(row);
  }
  if (boxed) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> e(d, Rational(0));
      e[k] = 1;
      h.inequalities.push_back(ineq(e, R(draw.integer(0, 4))));
      e[k] = -1;
      h.inequalities.push_back(ineq(e, R(draw.integer(0, 4))));
    }
  } else {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> e(d, Rational(0));
      e[k] = 1;
      h.inequalities.push_back(ineq(e));
    }
  }
  return h;
}

}  // namespace

TEST_CASE("canonical inequalities never flip sense") {
  const auto c = ineq({R(-2, 3), R(4, 9)}, R(2, 3)).canonical();
  CHECK(c.coeffs == std::vector<Rational>{-3, 2});
  CHECK(c.constant == 3);
  CHECK(same_halfspace(ineq({1, 2}), ineq({3, 6})));
  CHECK_FALSE(same_halfspace(ineq({1, 2}), ineq({-1, -2})));
}

TEST_CASE("h_to_v examples") {
  const VRep square = h_to_v(unit_square());
  CHECK(square.vertices == sorted_points({Rs({{0, 1}, {0, 1}}), Rs({{1, 1}, {0, 1}}), Rs({{0, 1}, {1, 1}}),
                                          Rs({{1, 1}, {1, 1}})}));
  CHECK(square.rays.empty());

  const VRep quadrant = h_to_v(system({"x", "y"}, {ineq({1, 0}), ineq({0, 1})}));
  CHECK(quadrant.vertices == std::vector<std::vector<Rational>>{Rs({{0, 1}, {0, 1}})});
  CHECK(quadrant.rays == std::vector<std::vector<Integer>>{{0, 1}, {1, 0}});

  const HRep g3 = system({"x", "y"}, {ineq({0, 1}), ineq({-12, 1}, 1), ineq({R(8, 3), R(-1)})});
  const VRep got = h_to_v(g3);
  // Independent oracle: intersect each pair of bounding lines by Cramer's rule.
  std::vector<std::vector<Rational>> want;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const auto& p = g3.inequalities[i];
      const auto& q = g3.inequalities[j];
      const Rational det = p.coeffs[0] * q.coeffs[1] - p.coeffs[1] * q.coeffs[0];
      REQUIRE(det != 0);
      const Rational x = (-p.constant * q.coeffs[1] + q.constant * p.coeffs[1]) / det;
      const Rational y = (-p.coeffs[0] * q.constant + q.coeffs[0] * p.constant) / det;
      want.push_back({x, y});
    }
  }
  CHECK(got.vertices == sorted_points(want));
  CHECK(got.vertices == sorted_points({Rs({{0, 1}, {0, 1}}), Rs({{1, 12}, {0, 1}}), Rs({{3, 28}, {2, 7}})}));
  CHECK(got == brute_force_vertices(g3));
}

TEST_CASE("degenerate polyhedra are ordinary values") {
  const HRep empty = system({"x"}, {ineq({1}, -1), ineq({-1})});
  CHECK(h_to_v(empty).empty());
  CHECK(h_to_v(empty) == VRep{});

  const VRep half_plane = h_to_v(system({"x", "y"}, {ineq({0, 1})}));
  CHECK(half_plane.lines == std::vector<std::vector<Integer>>{{1, 0}});
  CHECK(half_plane.rays == std::vector<std::vector<Integer>>{{0, 1}});

  const VRep point = h_to_v(system({"x", "y"}, {ineq({1, 0}), ineq({-1, 0}), ineq({0, 1}), ineq({0, -1})}));
  CHECK(point.vertices == std::vector<std::vector<Rational>>{Rs({{0, 1}, {0, 1}})});

  const VRep segment = h_to_v(system({"x", "y"}, {ineq({1, -1}), ineq({-1, 1}), ineq({1, 0}), ineq({-1, 0}, 1)}));
  CHECK(segment.vertices == sorted_points({Rs({{0, 1}, {0, 1}}), Rs({{1, 1}, {1, 1}})}));
  const HRep seg_h = v_to_h(segment, {"x", "y"});
  CHECK(h_to_v(seg_h) == segment);
}

TEST_CASE("v_to_h examples") {
  const HRep square = v_to_h(h_to_v(unit_square()), {"x", "y"});
  CHECK(same_facets(square, unit_square().inequalities));

  VRep simplex;
  simplex.vertices = {Rs({{0, 1}, {0, 1}}), Rs({{1, 1}, {0, 1}}), Rs({{0, 1}, {1, 1}})};
  CHECK(same_facets(v_to_h(simplex, {"x", "y"}), {ineq({1, 0}), ineq({0, 1}), ineq({-1, -1}, 1)}));

  const VRep g4 = slice_vertices(4);
  const HRep facets = v_to_h(g4, {"x", "y", "z"});
  CHECK(same_facets(facets, {ineq({0, 1, 0}), ineq({0, 0, 1}), ineq({-12, 1, 0}, 1), ineq({0, -10, 3}, 2),
                             ineq({0, 10, -21}, 6), ineq({3, -1, 0})}));
  for (const auto& v : g4.vertices) {
    const auto tight = std::count_if(facets.inequalities.begin(), facets.inequalities.end(),
                                     [&](const LinearInequality& f) { return f.evaluate(v) == 0; });
    CHECK(tight >= 3);
  }
  CHECK_THROWS_AS(v_to_h(VRep{}, {"x"}), Error);
}

TEST_CASE("round trip h_to_v . v_to_h . h_to_v = h_to_v") {
  testing::Draw draw(101);
  int nonempty = 0;
  for (int n = 0; n < 120; ++n) {
    const std::size_t d = static_cast<std::size_t>(draw.integer(1, 4));
    const HRep h = random_system(draw, d, draw.coin());
    const VRep v = h_to_v(h);
    if (v.empty()) {
      continue;
    }
    ++nonempty;
    CHECK(h_to_v(v_to_h(v, h.variables)) == v);
  }
  CHECK(nonempty > 40);
}

TEST_CASE("h_to_v agrees with brute force on random systems") {
  testing::Draw draw(202);
  for (int n = 0; n < 200; ++n) {
    const std::size_t d = static_cast<std::size_t>(draw.integer(1, 4));
    const HRep h = random_system(draw, d, true);
    CHECK(h_to_v(h).vertices == brute_force_vertices(h).vertices);
  }
}

TEST_CASE("implies examples") {
  const HRep xy = system({"x", "y"}, {ineq({1, 0}), ineq({-1, 1})});
  const auto yes = implies(xy, ineq({0, 1}));
  CHECK(yes.implied);
  CHECK(yes.multipliers == std::vector<Rational>{1, 1});
  CHECK(yes.slack == 0);
  CHECK(verify_certificate(xy, ineq({0, 1}), yes));

  const HRep x = system({"x"}, {ineq({1})});
  const auto slack = implies(x, ineq({1}, 1));
  CHECK(slack.implied);
  CHECK(slack.multipliers == std::vector<Rational>{1});
  CHECK(slack.slack == 1);

  const auto no = implies(x, ineq({-1}, 1));
  CHECK_FALSE(no.implied);
  CHECK(verify_certificate(x, ineq({-1}, 1), no));

  const HRep unbounded = system({"x", "y"}, {ineq({1, 0})});
  const auto far = implies(unbounded, ineq({0, 1}, 5));
  CHECK_FALSE(far.implied);
  CHECK(verify_certificate(unbounded, ineq({0, 1}, 5), far));

  const HRep infeasible = system({"x"}, {ineq({1}, -2), ineq({-1}, 1)});
  const auto vacuous = implies(infeasible, ineq({-1}, -100));
  CHECK(vacuous.implied);
  CHECK(vacuous.system_infeasible);
  CHECK(verify_certificate(infeasible, ineq({-1}, -100), vacuous));

  const HRep g3 = theorem_system(3);
  const auto birr = implies(g3, ineq({0, 1, 0}));
  CHECK(birr.implied);
  CHECK(verify_certificate(g3, ineq({0, 1, 0}), birr));
}

TEST_CASE("implies agrees with Fourier-Motzkin entailment") {
  testing::Draw draw(303);
  int implied = 0;
  for (int n = 0; n < 150; ++n) {
    const std::size_t d = static_cast<std::size_t>(draw.integer(1, 3));
    const HRep h = random_system(draw, d, draw.coin());
    LinearInequality target;
    for (std::size_t k = 0; k < d; ++k) {
      target.coeffs.push_back(R(draw.integer(-3, 3)));
    }
    target.constant = R(draw.integer(-2, 8));
    const auto got = implies(h, target);
    CHECK(got.implied == fm_entails(h, target));
    CHECK(verify_certificate(h, target, got));
    implied += got.implied ? 1 : 0;
  }
  CHECK(implied > 20);
  CHECK(implied < 130);
}

TEST_CASE("systems_equal") {
  CHECK(systems_equal(unit_square(), unit_square()).equal);
  const HRep a = system({"x", "y"}, {ineq({1, 0}), ineq({0, 1})});
  const HRep b = system({"x", "y"}, {ineq({0, 1}), ineq({1, 0}), ineq({1, 1})});
  CHECK(systems_equal(a, b).equal);
  CHECK_FALSE(systems_equal(a, unit_square()).equal);
  CHECK(systems_equal(theorem_system(5), proof_system(5, false)).equal);
  CHECK_THROWS_AS(systems_equal(a, system({"u", "v"}, {})), Error);
}

TEST_CASE("brute_force_vertices") {
  CHECK(brute_force_vertices(unit_square()).vertices == h_to_v(unit_square()).vertices);
  CHECK(brute_force_vertices(slice_system(3)).vertices.size() == 3);
  CHECK(brute_force_vertices(slice_system(4)) == slice_vertices(4));
  HRep big;
  for (int k = 0; k < 7; ++k) {
    big.variables.push_back("x" + std::to_string(k));
  }
  try {
    brute_force_vertices(big);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionTooLarge);
  }
}

TEST_CASE("fm_eliminate examples") {
  const HRep square_y = fm_eliminate(unit_square(), "x");
  CHECK(square_y.variables == std::vector<std::string>{"y"});
  CHECK(same_facets(square_y, {ineq({1}), ineq({-1}, 1)}));

  const HRep quadrant_y = fm_eliminate(system({"x", "y"}, {ineq({1, 0}), ineq({0, 1})}), "x");
  CHECK(same_facets(quadrant_y, {ineq({1})}));

  const HRep g3 = fm_eliminate(theorem_system(3), "b_irr");
  const HRep want = system({"a", "b_1"}, {ineq({8, -1}), ineq({0, 1})});
  CHECK(systems_equal(g3, want).equal);
  CHECK_THROWS_AS(fm_eliminate(unit_square(), "z"), Error);
}

TEST_CASE("text formats") {
  CHECK(to_hrep_text(system({"x"}, {ineq({R(1, 2)}, R(-3))})) == "-3 1/2 >= 0\n");
  VRep v;
  v.vertices = {Rs({{1, 3}, {0, 1}})};
  v.rays = {{1, -2}};
  CHECK(to_vrep_text(v) == "V: 1/3 0\nR: 1 -2\n");
}
