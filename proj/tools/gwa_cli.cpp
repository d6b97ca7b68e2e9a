// Command-line front end: validate algebras, check action triples, build
// semidirect products, run theorem audits, enumerate self-actions and ideals.
//
// Exit codes: 0 = all checks pass, 1 = a checked law fails,
// 2 = structural or usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gwa/enumeration.hpp"
#include "gwa/io.hpp"
#include "gwa/semidirect.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailed = 1;
constexpr int kExitStructural = 2;

void print_report(const gwa::CheckReport& r, bool as_json) {
  if (as_json) {
    std::cout << gwa::to_json(r);
    return;
  }
  if (r.ok()) {
    std::cout << "ok\n";
    return;
  }
  for (const auto& v : r.violations()) {
    std::cout << v.law << " (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << v.witness[i];
    }
    std::cout << ")\n";
  }
  if (r.violation_count() > r.violations().size()) {
    std::cout << "... " << r.violation_count() - r.violations().size()
              << " more violation(s)\n";
  }
}

std::uint64_t exhaustive_cap() {
  if (const char* env = std::getenv("GWA_MAX_EXHAUSTIVE")) {
    return std::strtoull(env, nullptr, 10);
  }
  return std::uint64_t{1} << 24;
}

struct TripleInputs {
  gwa::Workspace ws;
  gwa::ActionTriple triple;
};

TripleInputs load_triple(const std::string& actor_file,
                         const std::string& target_file,
                         const std::string& triple_file) {
  TripleInputs in;
  in.ws.add_algebra(gwa::load_algebra(actor_file));
  in.ws.add_algebra(gwa::load_algebra(target_file));
  in.triple = in.ws.triple_from_json(gwa::read_file(triple_file));
  return in;
}

int cmd_validate(const std::string& file, bool reduced, bool as_json) {
  const gwa::FiniteGwa g = gwa::load_algebra(file);
  gwa::CheckReport r = gwa::validate_gwa(g);
  if (reduced && r.ok()) r.merge(gwa::is_reduced(g));
  print_report(r, as_json);
  return r.ok() ? kExitOk : kExitLawFailed;
}

int cmd_check_action(const std::string& actor, const std::string& target,
                     const std::string& triple_file, bool reduced, bool as_json) {
  const TripleInputs in = load_triple(actor, target, triple_file);
  const gwa::CheckReport r = reduced
                                 ? gwa::is_derived_action_reduced(in.triple)
                                 : gwa::is_derived_action(in.triple);
  print_report(r, as_json);
  return r.ok() ? kExitOk : kExitLawFailed;
}

int cmd_semidirect(const std::string& actor, const std::string& target,
                   const std::string& triple_file, const std::string& out,
                   bool reduced, bool as_json) {
  const TripleInputs in = load_triple(actor, target, triple_file);
  const gwa::SemidirectCandidate c = gwa::build_semidirect(
      in.triple.actor, in.triple.target, in.triple);
  gwa::CheckReport r = gwa::validate_candidate(c, reduced);
  if (r.ok()) {
    r.merge(gwa::roundtrip_check(in.triple.actor, in.triple.target, in.triple));
  }
  print_report(r, as_json);
  if (!r.ok()) return kExitLawFailed;
  gwa::save_algebra(c.product, out);
  return kExitOk;
}

int cmd_audit(const std::string& actor, const std::string& target,
              const std::string& theorem, std::uint64_t seed,
              std::uint64_t samples, bool as_json) {
  gwa::Workspace ws;
  const gwa::FiniteGwa& b = ws.add_algebra(gwa::load_algebra(actor));
  const gwa::FiniteGwa& a = ws.add_algebra(gwa::load_algebra(target));
  gwa::AuditOptions opt;
  opt.max_exhaustive = exhaustive_cap();
  opt.seed = seed;
  opt.samples = samples;
  const gwa::AuditSummary s = theorem == "4.3" ? gwa::audit_theorem_4_3(b, a, opt)
                                               : gwa::audit_theorem_3_3(b, a, opt);
  if (as_json) {
    std::cout << gwa::to_json(s);
  } else {
    std::cout << "total " << s.total << ", agree " << s.agree;
    if (s.seed) std::cout << ", seed " << *s.seed;
    std::cout << ", elapsed " << s.elapsed_ms << " ms\n";
    for (const auto& d : s.disagreements) {
      std::cout << "disagreement derived=" << d.derived_side
                << " product=" << d.product_side << " " << d.triple << "\n";
    }
  }
  return s.disagreements.empty() ? kExitOk : kExitLawFailed;
}

int cmd_enumerate(const std::string& file, const std::string& what) {
  const gwa::FiniteGwa g = gwa::load_algebra(file);
  if (what == "self-actions") {
    for (const gwa::FiniteGwa& a : gwa::enumerate_self_actions(gwa::group_of(g))) {
      gwa::FiniteGwa named = a;
      std::cout << gwa::to_json(named);
    }
  } else {
    for (const gwa::SubsetMask& s : gwa::enumerate_ideals(g)) {
      std::cout << gwa::to_json(s);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite workbench for groups with action on itself"};
  app.require_subcommand(1);

  std::string file, actor, target, triple_file, out, theorem = "3.3";
  std::string what = "self-actions";
  bool reduced = false, as_json = false;
  std::uint64_t seed = 0, samples = 100000;
  bool seed_given = false;

  auto* validate = app.add_subcommand("validate", "Validate an algebra file");
  validate->add_option("file", file)->required();
  validate->add_flag("--reduced", reduced, "Also require reducedness");
  validate->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check-action", "Check a derived action");
  check->add_option("actor", actor)->required();
  check->add_option("target", target)->required();
  check->add_option("triple", triple_file)->required();
  check->add_flag("--reduced", reduced);
  check->add_flag("--json", as_json);

  auto* semi = app.add_subcommand("semidirect", "Build a semidirect product");
  semi->add_option("actor", actor)->required();
  semi->add_option("target", target)->required();
  semi->add_option("triple", triple_file)->required();
  semi->add_option("--out", out)->required();
  semi->add_flag("--reduced", reduced);
  semi->add_flag("--json", as_json);

  auto* audit = app.add_subcommand("audit", "Audit a theorem equivalence");
  audit->add_option("actor", actor)->required();
  audit->add_option("target", target)->required();
  audit->add_option("--theorem", theorem)
      ->check(CLI::IsMember({"3.3", "4.3"}));
  audit->add_option("--seed", seed)->each([&](const std::string&) {
    seed_given = true;
  });
  audit->add_option("--samples", samples);
  audit->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate substructures");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--what", what)
      ->check(CLI::IsMember({"self-actions", "ideals"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitStructural;
  }

  try {
    if (*validate) return cmd_validate(file, reduced, as_json);
    if (*check) return cmd_check_action(actor, target, triple_file, reduced, as_json);
    if (*semi) return cmd_semidirect(actor, target, triple_file, out, reduced, as_json);
    if (*audit) {
      gwa::Workspace ws;
      const gwa::FiniteGwa b = gwa::load_algebra(actor);
      const gwa::FiniteGwa a = gwa::load_algebra(target);
      const auto space = gwa::triple_space_size(b, a);
      if ((!space || *space > exhaustive_cap()) && !seed_given) {
        std::cerr << "audit: triple space too large to exhaust; --seed is required\n";
        return kExitStructural;
      }
      return cmd_audit(actor, target, theorem, seed, samples, as_json);
    }
    if (*enumerate) return cmd_enumerate(file, what);
  } catch (const gwa::structural_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStructural;
  }
  return kExitStructural;
}
