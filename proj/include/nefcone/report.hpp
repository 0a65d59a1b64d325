#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nefcone/nef_cone.hpp"

namespace nefcone {

/// `a,b_irr,b_1,...` as comma-separated rationals.
MuCoordinates parse_mu_coordinates(int g, std::string_view text);

std::vector<std::string> coordinate_strings(const MuCoordinates& m);

std::string verdict_text(const MuCoordinates& m, const MembershipVerdict& v, std::string_view basis);
std::string verdict_json(const MuCoordinates& m, const MembershipVerdict& v, std::string_view basis);

std::string hrep_json(int g, std::string_view variant, const HRep& h);
std::string vrep_json(int g, const std::vector<std::string>& variables, const VRep& v);

/// Pullback along M_{g-1,{1,2}} -> M_g with the decomposition against
/// (mu', theta', sigma, d_i) and a comparison with the closed form.
std::string beta_pullback_report(const DivisorClass& d);

/// Same for the split s + t = g, both factors.
std::string alpha_pullback_report(const DivisorClass& d, int s, int t);

std::string walk_report(int g, const Rational& b_irr, std::uint32_t samples, std::uint32_t seed);

struct RegressionRow {
  enum class Status { Pass, ExpectedDeviation, Fail };
  std::string check;
  Status status = Status::Fail;
  std::string detail;
};

const char* status_label(RegressionRow::Status s);

/// Every published identity the library can reproduce, plus the two known
/// disagreements reported as expected deviations.
std::vector<RegressionRow> run_regression();

std::string format_regression(const std::vector<RegressionRow>& rows);

bool regression_ok(const std::vector<RegressionRow>& rows);

}  // namespace nefcone
