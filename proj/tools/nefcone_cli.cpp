// Command-line front end. Everything goes through the C interface so the
// binary exercises exactly what other language bindings would see.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nefcone/nefcone.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* p) const { nc_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CommandFailure {
  int exit_code;
};

void check(nc_status status) {
  if (status == NC_OK) {
    return;
  }
  std::cerr << "error: " << nc_status_name(status) << ": " << nc_last_error() << "\n";
  const bool usage = status == NC_ERR_SYNTAX || status == NC_ERR_NULL_ARGUMENT;
  throw CommandFailure{usage ? kExitUsage : kExitDomain};
}

void emit(char* text) {
  OwnedString owned(text);
  std::cout << owned.get();
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(ptr); }
};

using SignatureHandle = Handle<nc_signature, nc_signature_free>;
using DivisorHandle = Handle<nc_divisor, nc_divisor_free>;
using VerdictHandle = Handle<nc_verdict, nc_verdict_free>;
using HRepHandle = Handle<nc_hrep, nc_hrep_free>;
using VRepHandle = Handle<nc_vrep, nc_vrep_free>;

void parse_on_mg(int g, const std::string& expr, SignatureHandle& sig, DivisorHandle& d) {
  check(nc_signature_create(g, nullptr, 0, &sig.ptr));
  check(nc_divisor_parse(sig.ptr, expr.c_str(), &d.ptr));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nef-cone computations for divisor classes on moduli of stable curves"};
  app.require_subcommand(1);

  int g = 0;
  std::string expr;

  auto* membership = app.add_subcommand("membership", "Decide nefness over the one-node locus");
  std::string basis = "lambda";
  bool json = false;
  membership->add_option("--g", g, "Genus (>= 3)")->required();
  membership->add_option("--expr", expr, "Divisor expression, or a,b_irr,b_1,.. with --basis mu")->required();
  membership->add_option("--basis", basis, "Input basis")->check(CLI::IsMember({"lambda", "mu"}));
  membership->add_flag("--json", json, "Emit JSON");

  auto* slice = app.add_subcommand("slice", "Vertices of the slice lambda - c_0 dirr - sum c_i d_i");
  std::string slice_format = "vrep";
  slice->add_option("--g", g, "Genus (>= 3)")->required();
  slice->add_option("--format", slice_format, "Output format")->check(CLI::IsMember({"vrep", "json"}));

  auto* system = app.add_subcommand("system", "Print an inequality system over (a, b_irr, b_1, ..)");
  std::string variant = "theorem";
  std::string system_format = "hrep";
  system->add_option("--g", g, "Genus (>= 3)")->required();
  system->add_option("--variant", variant, "Which system")->check(CLI::IsMember({"theorem", "proof", "proofD"}));
  system->add_option("--format", system_format, "Output format")->check(CLI::IsMember({"hrep", "json"}));

  auto* pullback = app.add_subcommand("pullback", "Pull a class on M_g back along a clutching map");
  std::string map;
  std::vector<int> split;
  pullback->add_option("--map", map, "Clutching map")->required()->check(CLI::IsMember({"beta", "alpha"}));
  pullback->add_option("--g", g, "Genus (>= 3)")->required();
  pullback->add_option("--split", split, "s,t with s + t = g (alpha only; default: every split)")
      ->delimiter(',')
      ->expected(2);
  pullback->add_option("--expr", expr, "Divisor expression on M_g")->required();

  auto* theta = app.add_subcommand("theta", "Expand theta_L on M_{g,T}");
  std::vector<int> labels;
  std::vector<int> subset;
  theta->add_option("--g", g, "Genus")->required();
  theta->add_option("--labels", labels, "Markings T")->delimiter(',')->required();
  theta->add_option("--L", subset, "Subset L of T")->delimiter(',')->required();

  auto* walk = app.add_subcommand("walk", "Interval walk generating the coefficients b_1, b_2, ..");
  std::string seed_birr;
  unsigned samples = 0;
  unsigned rng_seed = 1;
  walk->add_option("--g", g, "Genus (>= 3)")->required();
  walk->add_option("--seed-birr", seed_birr, "Starting value b_irr as p/q")->required();
  walk->add_option("--sample", samples, "Number of random admissible points to draw");
  walk->add_option("--seed", rng_seed, "Random seed for --sample");

  auto* verify = app.add_subcommand("verify-paper", "Rerun every reproducible published identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (membership->parsed()) {
      VerdictHandle verdict;
      if (basis == "mu") {
        check(nc_membership_mu(g, expr.c_str(), &verdict.ptr));
      } else {
        SignatureHandle sig;
        DivisorHandle d;
        parse_on_mg(g, expr, sig, d);
        check(nc_membership(d.ptr, &verdict.ptr));
      }
      char* out = nullptr;
      check(json ? nc_verdict_to_json(verdict.ptr, &out) : nc_verdict_to_text(verdict.ptr, &out));
      emit(out);
    } else if (slice->parsed()) {
      VRepHandle v;
      check(nc_slice(g, &v.ptr));
      char* out = nullptr;
      check(slice_format == "json" ? nc_vrep_to_json(v.ptr, &out) : nc_vrep_to_text(v.ptr, &out));
      emit(out);
    } else if (system->parsed()) {
      const nc_system_variant which = variant == "theorem" ? NC_SYSTEM_THEOREM
                                      : variant == "proof" ? NC_SYSTEM_PROOF
                                                           : NC_SYSTEM_PROOF_WITH_SIGNS;
      HRepHandle h;
      check(nc_system(g, which, &h.ptr));
      char* out = nullptr;
      check(system_format == "json" ? nc_hrep_to_json(h.ptr, &out) : nc_hrep_to_text(h.ptr, &out));
      emit(out);
    } else if (pullback->parsed()) {
      SignatureHandle sig;
      DivisorHandle d;
      parse_on_mg(g, expr, sig, d);
      if (map == "beta") {
        if (!split.empty()) {
          std::cerr << "error: --split applies to --map alpha only\n";
          return kExitUsage;
        }
        char* out = nullptr;
        check(nc_pullback_beta(d.ptr, &out));
        emit(out);
      } else {
        std::vector<std::pair<int, int>> splits;
        if (split.empty()) {
          for (int s = 1; s <= g / 2; ++s) {
            splits.emplace_back(s, g - s);
          }
        } else {
          splits.emplace_back(split[0], split[1]);
        }
        for (std::size_t i = 0; i < splits.size(); ++i) {
          char* out = nullptr;
          check(nc_pullback_alpha(d.ptr, splits[i].first, splits[i].second, &out));
          if (i > 0) {
            std::cout << "\n";
          }
          emit(out);
        }
      }
    } else if (theta->parsed()) {
      SignatureHandle sig;
      DivisorHandle d;
      check(nc_signature_create(g, labels.data(), labels.size(), &sig.ptr));
      check(nc_divisor_theta(sig.ptr, subset.data(), subset.size(), &d.ptr));
      char* out = nullptr;
      check(nc_divisor_to_string(d.ptr, &out));
      emit(out);
      std::cout << "\n";
    } else if (walk->parsed()) {
      char* out = nullptr;
      check(nc_walk(g, seed_birr.c_str(), samples, rng_seed, &out));
      emit(out);
    } else if (verify->parsed()) {
      char* out = nullptr;
      int ok = 0;
      check(nc_verify(&out, &ok));
      emit(out);
      return ok ? 0 : kExitDomain;
    }
  } catch (const CommandFailure& failure) {
    return failure.exit_code;
  }
  return 0;
}
