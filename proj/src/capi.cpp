#include "nefcone/nefcone.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "nefcone/error.hpp"
#include "nefcone/expression.hpp"
#include "nefcone/report.hpp"

struct nc_signature {
  nefcone::Signature value;
};

struct nc_divisor {
  nefcone::DivisorClass value;
};

struct nc_verdict {
  nefcone::MuCoordinates coordinates;
  nefcone::MembershipVerdict verdict;
  std::string basis;
};

struct nc_hrep {
  int genus;
  std::string variant;
  nefcone::HRep value;
};

struct nc_vrep {
  int genus;
  std::vector<std::string> variables;
  nefcone::VRep value;
};

namespace {

thread_local std::string last_error;

nc_status to_status(nefcone::ErrorCode code) {
  using nefcone::ErrorCode;
  switch (code) {
    case ErrorCode::UnstableSignature: return NC_ERR_UNSTABLE_SIGNATURE;
    case ErrorCode::DuplicateLabel: return NC_ERR_DUPLICATE_LABEL;
    case ErrorCode::InvalidPair: return NC_ERR_INVALID_PAIR;
    case ErrorCode::SignatureMismatch: return NC_ERR_SIGNATURE_MISMATCH;
    case ErrorCode::WrongHomeSpace: return NC_ERR_WRONG_HOME_SPACE;
    case ErrorCode::UnsupportedBasisElement: return NC_ERR_UNSUPPORTED_BASIS_ELEMENT;
    case ErrorCode::GenusTooSmall: return NC_ERR_GENUS_TOO_SMALL;
    case ErrorCode::SpecMismatch: return NC_ERR_SPEC_MISMATCH;
    case ErrorCode::NotInSpan: return NC_ERR_NOT_IN_SPAN;
    case ErrorCode::DependentGenerators: return NC_ERR_DEPENDENT_GENERATORS;
    case ErrorCode::BadSplit: return NC_ERR_BAD_SPLIT;
    case ErrorCode::DimensionTooLarge: return NC_ERR_DIMENSION_TOO_LARGE;
    case ErrorCode::NegativeSeed: return NC_ERR_NEGATIVE_SEED;
    case ErrorCode::SyntaxError: return NC_ERR_SYNTAX;
    case ErrorCode::UnknownAtom: return NC_ERR_UNKNOWN_ATOM;
    case ErrorCode::WrongSignature: return NC_ERR_WRONG_SIGNATURE;
    case ErrorCode::InvalidArgument: return NC_ERR_INVALID_ARGUMENT;
  }
  return NC_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread-local message.
template <typename F>
nc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NC_OK;
  } catch (const nefcone::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return NC_ERR_INTERNAL;
}

nc_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return NC_ERR_NULL_ARGUMENT;
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) {
    throw std::bad_alloc();
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

#define NC_REQUIRE(ptr)            \
  do {                             \
    if ((ptr) == nullptr) {        \
      return null_argument(#ptr);  \
    }                              \
  } while (0)

nc_verdict* make_verdict(const nefcone::MuCoordinates& m, std::string basis) {
  return new nc_verdict{m, nefcone::is_nef_over_M1(m), std::move(basis)};
}

}  // namespace

extern "C" {

const char* nc_status_name(nc_status status) {
  switch (status) {
    case NC_OK: return "ok";
    case NC_ERR_NULL_ARGUMENT: return "NullArgument";
    case NC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  if (status > NC_OK && status <= NC_ERR_INVALID_ARGUMENT) {
    return nefcone::error_code_name(static_cast<nefcone::ErrorCode>(status - 1));
  }
  return "Unknown";
}

const char* nc_last_error(void) { return last_error.c_str(); }

void nc_string_free(char* text) { std::free(text); }

nc_status nc_signature_create(int genus, const int* labels, size_t label_count, nc_signature** out) {
  NC_REQUIRE(out);
  if (label_count > 0) {
    NC_REQUIRE(labels);
  }
  return guarded([&] {
    std::vector<nefcone::Label> ls(labels, labels + label_count);
    *out = new nc_signature{nefcone::Signature(genus, std::move(ls))};
  });
}

void nc_signature_free(nc_signature* sig) { delete sig; }

nc_status nc_signature_to_string(const nc_signature* sig, char** out) {
  NC_REQUIRE(sig);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(sig->value.to_string()); });
}

nc_status nc_divisor_parse(const nc_signature* sig, const char* text, nc_divisor** out) {
  NC_REQUIRE(sig);
  NC_REQUIRE(text);
  NC_REQUIRE(out);
  return guarded([&] { *out = new nc_divisor{nefcone::parse_divisor(text, sig->value)}; });
}

nc_status nc_divisor_theta(const nc_signature* sig, const int* L, size_t L_count, nc_divisor** out) {
  NC_REQUIRE(sig);
  NC_REQUIRE(out);
  if (L_count > 0) {
    NC_REQUIRE(L);
  }
  return guarded([&] {
    const std::vector<nefcone::Label> labels(L, L + L_count);
    *out = new nc_divisor{nefcone::theta(sig->value, labels)};
  });
}

nc_status nc_divisor_named(const nc_signature* sig, const char* name, nc_divisor** out) {
  NC_REQUIRE(sig);
  NC_REQUIRE(name);
  NC_REQUIRE(out);
  return guarded([&] {
    const auto named = nefcone::named_class_from_string(name);
    if (!named) {
      throw nefcone::Error(nefcone::ErrorCode::UnknownAtom, std::string("no named class '") + name + "'");
    }
    *out = new nc_divisor{nefcone::named_class(*named, sig->value)};
  });
}

nc_status nc_divisor_to_string(const nc_divisor* d, char** out) {
  NC_REQUIRE(d);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::to_text(d->value)); });
}

nc_status nc_divisor_equal(const nc_divisor* lhs, const nc_divisor* rhs, int* out) {
  NC_REQUIRE(lhs);
  NC_REQUIRE(rhs);
  NC_REQUIRE(out);
  *out = lhs->value == rhs->value ? 1 : 0;
  return NC_OK;
}

void nc_divisor_free(nc_divisor* d) { delete d; }

nc_status nc_membership(const nc_divisor* d, nc_verdict** out) {
  NC_REQUIRE(d);
  NC_REQUIRE(out);
  return guarded([&] { *out = make_verdict(nefcone::to_mu_basis(d->value), "lambda"); });
}

nc_status nc_membership_mu(int genus, const char* coordinates, nc_verdict** out) {
  NC_REQUIRE(coordinates);
  NC_REQUIRE(out);
  return guarded([&] {
    if (genus < 3) {
      throw nefcone::Error(nefcone::ErrorCode::GenusTooSmall, "mu coordinates need g >= 3");
    }
    *out = make_verdict(nefcone::parse_mu_coordinates(genus, coordinates), "mu");
  });
}

nc_status nc_verdict_decision(const nc_verdict* v, nc_decision* out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  *out = v->verdict.is_member() ? NC_MEMBER : NC_NOT_MEMBER;
  return NC_OK;
}

nc_status nc_verdict_to_text(const nc_verdict* v, char** out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::verdict_text(v->coordinates, v->verdict, v->basis)); });
}

nc_status nc_verdict_to_json(const nc_verdict* v, char** out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::verdict_json(v->coordinates, v->verdict, v->basis)); });
}

void nc_verdict_free(nc_verdict* v) { delete v; }

nc_status nc_system(int genus, nc_system_variant variant, nc_hrep** out) {
  NC_REQUIRE(out);
  return guarded([&] {
    switch (variant) {
      case NC_SYSTEM_THEOREM:
        *out = new nc_hrep{genus, "theorem", nefcone::theorem_system(genus)};
        return;
      case NC_SYSTEM_PROOF:
        *out = new nc_hrep{genus, "proof", nefcone::proof_system(genus, false)};
        return;
      case NC_SYSTEM_PROOF_WITH_SIGNS:
        *out = new nc_hrep{genus, "proofD", nefcone::proof_system(genus, true)};
        return;
    }
    throw nefcone::Error(nefcone::ErrorCode::InvalidArgument, "unknown system variant");
  });
}

nc_status nc_hrep_size(const nc_hrep* h, size_t* out) {
  NC_REQUIRE(h);
  NC_REQUIRE(out);
  *out = h->value.inequalities.size();
  return NC_OK;
}

nc_status nc_hrep_to_text(const nc_hrep* h, char** out) {
  NC_REQUIRE(h);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::to_hrep_text(h->value)); });
}

nc_status nc_hrep_to_json(const nc_hrep* h, char** out) {
  NC_REQUIRE(h);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::hrep_json(h->genus, h->variant, h->value)); });
}

void nc_hrep_free(nc_hrep* h) { delete h; }

nc_status nc_slice(int genus, nc_vrep** out) {
  NC_REQUIRE(out);
  return guarded([&] {
    nefcone::HRep system = nefcone::slice_system(genus);
    *out = new nc_vrep{genus, system.variables, nefcone::h_to_v(system)};
  });
}

nc_status nc_vrep_vertex_count(const nc_vrep* v, size_t* out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  *out = v->value.vertices.size();
  return NC_OK;
}

nc_status nc_vrep_to_text(const nc_vrep* v, char** out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::to_vrep_text(v->value)); });
}

nc_status nc_vrep_to_json(const nc_vrep* v, char** out) {
  NC_REQUIRE(v);
  NC_REQUIRE(out);
  return guarded([&] { *out = duplicate(nefcone::vrep_json(v->genus, v->variables, v->value)); });
}

void nc_vrep_free(nc_vrep* v) { delete v; }

nc_status nc_pullback_beta(const nc_divisor* d, char** report) {
  NC_REQUIRE(d);
  NC_REQUIRE(report);
  return guarded([&] { *report = duplicate(nefcone::beta_pullback_report(d->value)); });
}

nc_status nc_pullback_alpha(const nc_divisor* d, int s, int t, char** report) {
  NC_REQUIRE(d);
  NC_REQUIRE(report);
  return guarded([&] { *report = duplicate(nefcone::alpha_pullback_report(d->value, s, t)); });
}

nc_status nc_walk(int genus, const char* seed_birr, unsigned samples, unsigned rng_seed, char** report) {
  NC_REQUIRE(seed_birr);
  NC_REQUIRE(report);
  return guarded([&] {
    *report = duplicate(nefcone::walk_report(genus, nefcone::parse_rational(seed_birr), samples, rng_seed));
  });
}

nc_status nc_verify(char** report, int* all_ok) {
  NC_REQUIRE(report);
  NC_REQUIRE(all_ok);
  return guarded([&] {
    const auto rows = nefcone::run_regression();
    *report = duplicate(nefcone::format_regression(rows));
    *all_ok = nefcone::regression_ok(rows) ? 1 : 0;
  });
}

}  // extern "C"
