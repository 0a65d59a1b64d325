#include "nefcone/polyhedra.hpp"

#include <algorithm>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "nefcone/error.hpp"
#include "nefcone/linear_algebra.hpp"
#include "nefcone/simplex.hpp"

namespace nefcone {

using IntVector = std::vector<Integer>;

Rational LinearInequality::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != coeffs.size()) {
    throw Error(ErrorCode::InvalidArgument, "point dimension does not match inequality");
  }
  Rational v = constant;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    v += coeffs[k] * point[k];
  }
  return v;
}

namespace {

IntVector to_primitive_integers(const std::vector<Rational>& values) {
  const Integer den = common_denominator(values);
  IntVector out;
  out.reserve(values.size());
  for (const auto& v : values) {
    out.push_back(boost::multiprecision::numerator(v * Rational(den)));
  }
  return make_primitive(std::move(out));
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) {
      s += a[k] * b[k];
    }
  }
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

LinearInequality LinearInequality::canonical() const {
  std::vector<Rational> all{constant};
  all.insert(all.end(), coeffs.begin(), coeffs.end());
  const IntVector ints = to_primitive_integers(all);
  LinearInequality out;
  out.name = name;
  out.constant = Rational(ints[0]);
  for (std::size_t k = 1; k < ints.size(); ++k) {
    out.coeffs.emplace_back(ints[k]);
  }
  return out;
}

bool LinearInequality::is_trivial() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

bool same_halfspace(const LinearInequality& lhs, const LinearInequality& rhs) {
  const auto a = lhs.canonical();
  const auto b = rhs.canonical();
  return a.constant == b.constant && a.coeffs == b.coeffs;
}

namespace {

// Double description for {y : rows . y >= 0} in dimension `dim`.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lines;
};

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zeros;
};

ConeGenerators cone_generators(const std::vector<IntVector>& rows, std::size_t dim) {
  const std::size_t m = rows.size();
  std::vector<IntVector> lineality;
  for (std::size_t k = 0; k < dim; ++k) {
    IntVector e(dim, Integer(0));
    e[k] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t idx = 0; idx < m; ++idx) {
    const IntVector& a = rows[idx];
    auto hit = std::find_if(lineality.begin(), lineality.end(),
                            [&](const IntVector& l) { return dot(a, l) != 0; });
    if (hit != lineality.end()) {
      IntVector pivot = *hit;
      lineality.erase(hit);
      Integer ap = dot(a, pivot);
      if (ap < 0) {
        for (auto& x : pivot) {
          x = -x;
        }
        ap = -ap;
      }
      auto reduce = [&](IntVector& v) {
        const Integer av = dot(a, v);
        if (av == 0) {
          return;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          v[k] = ap * v[k] - av * pivot[k];
        }
        v = make_primitive(std::move(v));
      };
      for (auto& l : lineality) {
        reduce(l);
      }
      for (auto& r : rays) {
        reduce(r.v);
        r.zeros.set(idx);
      }
      Ray fresh{make_primitive(pivot), boost::dynamic_bitset<>(m)};
      for (std::size_t k = 0; k < idx; ++k) {
        fresh.zeros.set(k);
      }
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> values;
    values.reserve(rays.size());
    for (const auto& r : rays) {
      values.push_back(dot(a, r.v));
    }
    std::vector<Ray> next;
    std::vector<std::size_t> positive;
    std::vector<std::size_t> negative;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (values[k] > 0) {
        positive.push_back(k);
        next.push_back(rays[k]);
      } else if (values[k] == 0) {
        next.push_back(rays[k]);
        next.back().zeros.set(idx);
      } else {
        negative.push_back(k);
      }
    }
    if (negative.empty()) {
      rays = std::move(next);
      continue;
    }
    const std::size_t reduced_dim = dim - lineality.size();
    for (std::size_t p : positive) {
      for (std::size_t n : negative) {
        boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
        if (reduced_dim >= 2 && common.count() + 2 < reduced_dim) {
          continue;
        }
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q != p && q != n && common.is_subset_of(rays[q].zeros)) {
            adjacent = false;
          }
        }
        if (!adjacent) {
          continue;
        }
        IntVector v(dim);
        for (std::size_t k = 0; k < dim; ++k) {
          v[k] = values[p] * rays[n].v[k] - values[n] * rays[p].v[k];
        }
        common.set(idx);
        next.push_back(Ray{make_primitive(std::move(v)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) {
    if (!is_zero(r.v)) {
      out.rays.push_back(std::move(r.v));
    }
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  out.lines = std::move(lineality);
  return out;
}

std::vector<IntVector> canonical_lines(const std::vector<IntVector>& lines) {
  RationalMatrix m;
  for (const auto& l : lines) {
    m.emplace_back(l.begin(), l.end());
  }
  std::vector<IntVector> out;
  for (const auto& row : reduced_row_echelon(std::move(m))) {
    out.push_back(to_primitive_integers(row));
  }
  return out;
}

IntVector homogenized_row(const LinearInequality& ineq) {
  std::vector<Rational> all{ineq.constant};
  all.insert(all.end(), ineq.coeffs.begin(), ineq.coeffs.end());
  return to_primitive_integers(all);
}

void check_system(const HRep& h) {
  for (const auto& ineq : h.inequalities) {
    if (ineq.coeffs.size() != h.dimension()) {
      throw Error(ErrorCode::InvalidArgument,
                  "inequality '" + ineq.name + "' has " + std::to_string(ineq.coeffs.size()) +
                      " coefficients for " + std::to_string(h.dimension()) + " variables");
    }
  }
}

}  // namespace

bool point_less(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                      [](const Rational& x, const Rational& y) { return x < y; });
}

namespace {

void sort_points(std::vector<std::vector<Rational>>& points) {
  std::sort(points.begin(), points.end(), point_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace

VRep h_to_v(const HRep& h) {
  check_system(h);
  const std::size_t n = h.dimension();
  std::vector<IntVector> rows;
  IntVector positive_weight(n + 1, Integer(0));
  positive_weight[0] = 1;
  rows.push_back(std::move(positive_weight));
  for (const auto& ineq : h.inequalities) {
    rows.push_back(homogenized_row(ineq));
  }
  ConeGenerators cone = cone_generators(rows, n + 1);

  VRep v;
  for (const auto& r : cone.rays) {
    if (r[0] > 0) {
      std::vector<Rational> point;
      for (std::size_t k = 1; k <= n; ++k) {
        point.push_back(make_rational(r[k], r[0]));
      }
      v.vertices.push_back(std::move(point));
    } else {
      v.rays.push_back(make_primitive(IntVector(r.begin() + 1, r.end())));
    }
  }
  if (v.vertices.empty()) {
    return VRep{};
  }
  for (const auto& l : cone.lines) {
    v.lines.push_back(IntVector(l.begin() + 1, l.end()));
  }
  v.lines = canonical_lines(v.lines);
  sort_points(v.vertices);
  std::sort(v.rays.begin(), v.rays.end());
  v.rays.erase(std::unique(v.rays.begin(), v.rays.end()), v.rays.end());
  return v;
}

HRep v_to_h(const VRep& v, std::vector<std::string> variables) {
  if (v.vertices.empty()) {
    throw Error(ErrorCode::InvalidArgument, "v_to_h needs at least one vertex");
  }
  const std::size_t n = variables.size();
  std::vector<IntVector> rows;
  for (const auto& p : v.vertices) {
    if (p.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "vertex dimension does not match variables");
    }
    std::vector<Rational> all{Rational(1)};
    all.insert(all.end(), p.begin(), p.end());
    rows.push_back(to_primitive_integers(all));
  }
  auto directional = [&](const IntVector& d, int sign) {
    if (d.size() != n) {
      throw Error(ErrorCode::InvalidArgument, "ray dimension does not match variables");
    }
    IntVector row{Integer(0)};
    for (const auto& x : d) {
      row.push_back(sign * x);
    }
    rows.push_back(std::move(row));
  };
  for (const auto& r : v.rays) {
    directional(r, 1);
  }
  for (const auto& l : v.lines) {
    directional(l, 1);
    directional(l, -1);
  }
  ConeGenerators polar = cone_generators(rows, n + 1);

  auto as_inequality = [&](const IntVector& z) {
    LinearInequality ineq;
    ineq.constant = Rational(z[0]);
    for (std::size_t k = 1; k <= n; ++k) {
      ineq.coeffs.emplace_back(z[k]);
    }
    return ineq;
  };
  HRep h;
  h.variables = std::move(variables);
  for (const auto& z : polar.rays) {
    auto ineq = as_inequality(z);
    if (!ineq.is_trivial()) {
      h.inequalities.push_back(std::move(ineq));
    }
  }
  for (const auto& z : canonical_lines(polar.lines)) {
    IntVector neg = z;
    for (auto& x : neg) {
      x = -x;
    }
    h.inequalities.push_back(as_inequality(z));
    h.inequalities.push_back(as_inequality(neg));
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const LinearInequality& a, const LinearInequality& b) {
              if (a.coeffs != b.coeffs) {
                return point_less(a.coeffs, b.coeffs);
              }
              return a.constant < b.constant;
            });
  return h;
}

Implication implies(const HRep& system, const LinearInequality& inequality) {
  check_system(system);
  if (inequality.coeffs.size() != system.dimension()) {
    throw Error(ErrorCode::InvalidArgument, "inequality dimension does not match the system");
  }
  RationalMatrix a;
  std::vector<Rational> beta;
  for (const auto& row : system.inequalities) {
    a.push_back(row.coeffs);
    beta.push_back(-row.constant);
  }
  const LpResult lp = minimize(a, beta, inequality.coeffs);

  Implication out;
  switch (lp.status) {
    case LpResult::Status::Infeasible:
      out.implied = true;
      out.system_infeasible = true;
      out.multipliers = lp.duals;
      return out;
    case LpResult::Status::Unbounded: {
      // Walk far enough along the improving direction to go below zero.
      const Rational at_point = inequality.evaluate(lp.point);
      Rational slope = 0;
      for (std::size_t k = 0; k < lp.direction.size(); ++k) {
        slope += inequality.coeffs[k] * lp.direction[k];
      }
      const Rational step = at_point < 0 ? Rational(0) : at_point / (-slope) + 1;
      out.witness = lp.point;
      for (std::size_t k = 0; k < lp.direction.size(); ++k) {
        out.witness[k] += step * lp.direction[k];
      }
      return out;
    }
    case LpResult::Status::Optimal:
      break;
  }
  const Rational minimum = lp.value + inequality.constant;
  if (minimum >= 0) {
    out.implied = true;
    out.multipliers = lp.duals;
    out.slack = minimum;
  } else {
    out.witness = lp.point;
  }
  return out;
}

bool verify_certificate(const HRep& system, const LinearInequality& inequality, const Implication& result) {
  const std::size_t n = system.dimension();
  if (!result.implied) {
    if (result.witness.size() != n || inequality.evaluate(result.witness) >= 0) {
      return false;
    }
    return std::all_of(system.inequalities.begin(), system.inequalities.end(),
                       [&](const LinearInequality& row) { return row.evaluate(result.witness) >= 0; });
  }
  if (result.multipliers.size() != system.inequalities.size()) {
    return false;
  }
  std::vector<Rational> combo(n, Rational(0));
  Rational constant = 0;
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    const Rational& y = result.multipliers[i];
    if (y < 0) {
      return false;
    }
    for (std::size_t k = 0; k < n; ++k) {
      combo[k] += y * system.inequalities[i].coeffs[k];
    }
    constant += y * system.inequalities[i].constant;
  }
  if (result.system_infeasible) {
    return std::all_of(combo.begin(), combo.end(), [](const Rational& c) { return c == 0; }) && constant < 0;
  }
  return combo == inequality.coeffs && result.slack >= 0 && constant + result.slack == inequality.constant;
}

SystemComparison systems_equal(const HRep& first, const HRep& second) {
  if (first.variables != second.variables) {
    throw Error(ErrorCode::InvalidArgument, "systems_equal needs identical variable lists");
  }
  SystemComparison out;
  out.equal = true;
  for (const auto& ineq : second.inequalities) {
    out.first_implies_second.push_back(implies(first, ineq));
    out.equal = out.equal && out.first_implies_second.back().implied;
  }
  for (const auto& ineq : first.inequalities) {
    out.second_implies_first.push_back(implies(second, ineq));
    out.equal = out.equal && out.second_implies_first.back().implied;
  }
  return out;
}

VRep brute_force_vertices(const HRep& h) {
  check_system(h);
  const std::size_t d = h.dimension();
  const std::size_t m = h.inequalities.size();
  if (d > kBruteForceMaxDimension || m > kBruteForceMaxInequalities) {
    throw Error(ErrorCode::DimensionTooLarge,
                "brute force handles d <= " + std::to_string(kBruteForceMaxDimension) + " and at most " +
                    std::to_string(kBruteForceMaxInequalities) + " inequalities");
  }
  VRep out;
  if (d == 0 || m < d) {
    if (d == 0 && std::all_of(h.inequalities.begin(), h.inequalities.end(),
                              [](const LinearInequality& r) { return r.constant >= 0; })) {
      out.vertices.emplace_back();
    }
    return out;
  }
  std::vector<bool> chosen(m, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<long>(d), true);
  do {
    RationalMatrix a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) {
        a.push_back(h.inequalities[i].coeffs);
        b.push_back(-h.inequalities[i].constant);
      }
    }
    const auto solved = solve_exact(a, b);
    if (solved.status != LinearSolveResult::Status::Unique) {
      continue;
    }
    const bool feasible = std::all_of(h.inequalities.begin(), h.inequalities.end(),
                                      [&](const LinearInequality& r) { return r.evaluate(solved.solution) >= 0; });
    if (feasible) {
      out.vertices.push_back(solved.solution);
    }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  sort_points(out.vertices);
  return out;
}

HRep fm_eliminate(const HRep& h, std::string_view variable) {
  check_system(h);
  const auto it = std::find(h.variables.begin(), h.variables.end(), variable);
  if (it == h.variables.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown variable '" + std::string(variable) + "'");
  }
  const std::size_t col = static_cast<std::size_t>(it - h.variables.begin());

  auto drop_column = [&](const LinearInequality& ineq) {
    LinearInequality out;
    out.name = ineq.name;
    out.constant = ineq.constant;
    for (std::size_t k = 0; k < ineq.coeffs.size(); ++k) {
      if (k != col) {
        out.coeffs.push_back(ineq.coeffs[k]);
      }
    }
    return out;
  };

  std::vector<LinearInequality> upper;
  std::vector<LinearInequality> lower;
  std::vector<LinearInequality> rows;
  for (const auto& ineq : h.inequalities) {
    const int s = sign(ineq.coeffs[col]);
    if (s > 0) {
      lower.push_back(ineq);
    } else if (s < 0) {
      upper.push_back(ineq);
    } else {
      rows.push_back(drop_column(ineq));
    }
  }
  for (const auto& lo : lower) {
    for (const auto& up : upper) {
      const Rational wl = -up.coeffs[col];
      const Rational wu = lo.coeffs[col];
      LinearInequality combo;
      combo.name = lo.name + "+" + up.name;
      combo.constant = wl * lo.constant + wu * up.constant;
      for (std::size_t k = 0; k < lo.coeffs.size(); ++k) {
        combo.coeffs.push_back(wl * lo.coeffs[k] + wu * up.coeffs[k]);
      }
      rows.push_back(drop_column(combo));
    }
  }

  HRep out;
  for (std::size_t k = 0; k < h.variables.size(); ++k) {
    if (k != col) {
      out.variables.push_back(h.variables[k]);
    }
  }
  for (auto& row : rows) {
    LinearInequality c = row.canonical();
    if (c.is_trivial() && c.constant >= 0) {
      continue;
    }
    const bool duplicate = std::any_of(out.inequalities.begin(), out.inequalities.end(),
                                       [&](const LinearInequality& seen) {
                                         return seen.constant == c.constant && seen.coeffs == c.coeffs;
                                       });
    if (!duplicate) {
      out.inequalities.push_back(std::move(c));
    }
  }
  return out;
}

std::string to_hrep_text(const HRep& h) {
  std::string out;
  for (const auto& ineq : h.inequalities) {
    out += to_string(ineq.constant);
    for (const auto& c : ineq.coeffs) {
      out += " " + to_string(c);
    }
    out += " >= 0\n";
  }
  return out;
}

std::string to_vrep_text(const VRep& v) {
  std::string out;
  auto emit = [&](const char* tag, const auto& rows) {
    for (const auto& row : rows) {
      out += tag;
      for (const auto& x : row) {
        out += " " + to_string(x);
      }
      out += "\n";
    }
  };
  emit("V:", v.vertices);
  emit("R:", v.rays);
  emit("L:", v.lines);
  return out;
}

}  // namespace nefcone
