#pragma once

#include <string>
#include <string_view>

#include "nefcone/divisor.hpp"

namespace nefcone {

/// Parses a linear expression such as `lambda - 1/12*dirr` or
/// `2*mu + theta[1,2] - s1` against `sig`.
///
/// Atoms: lambda, psi<t>, dirr, d<i>, s<i>, d{(i,[..]),(j,[..])}, theta[L],
/// and the named classes (mu, theta1, theta12, sigma, mu_prime, ...).
/// Products may contain at most one atom; numbers are `p` or `p/q`.
///
/// Throws SyntaxError (with the 0-based offset and what was expected),
/// UnknownAtom when a name does not denote a class on `sig`, and
/// WrongSignature when a named class lives on a different space.
DivisorClass parse_divisor(std::string_view text, const Signature& sig);

/// Canonical text: terms in basis order, `c*atom` with unit coefficients
/// dropped, `0` for the zero class. parse_divisor inverts it.
std::string to_text(const DivisorClass& d);

}  // namespace nefcone
