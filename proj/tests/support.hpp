#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nefcone/divisor.hpp"
#include "nefcone/rational.hpp"

namespace testing {

inline nefcone::Rational R(long n, long d = 1) { return nefcone::make_rational(n, d); }

inline std::vector<nefcone::Rational> Rs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<nefcone::Rational> out;
  for (const auto& [n, d] : xs) {
    out.push_back(R(n, d));
  }
  return out;
}

// Raw engine output reduced modulo the range: reproducible everywhere,
// unlike the std distributions.
class Draw {
 public:
  explicit Draw(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint32_t>(hi - lo + 1));
  }

  bool coin(std::uint32_t one_in = 2) { return rng_() % one_in == 0; }

  nefcone::Rational rational(long span = 12, long max_den = 7) {
    return R(integer(-span, span), integer(1, max_den));
  }

  nefcone::MuCoordinates mu(int g) {
    nefcone::MuCoordinates m;
    m.genus = g;
    m.a = rational();
    m.b_irr = rational();
    for (int i = 1; i <= g / 2; ++i) {
      m.b.push_back(rational());
    }
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

// A sparse random class: each basis element kept with probability 1/3.
inline nefcone::DivisorClass sparse_class(Draw& draw, const nefcone::Signature& sig) {
  nefcone::DivisorClass d(sig);
  for (const auto& e : nefcone::basis_of(sig)) {
    if (draw.coin(3)) {
      d.add(e, draw.rational(30, 12));
    }
  }
  return d;
}

}  // namespace testing
