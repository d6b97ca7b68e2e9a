// Writes the bundled fixture corpus: the small Gwa objects used by the test
// suite, their self-action triples, the naive counterexample triple, and the
// A3 subset of S3.

#include <filesystem>
#include <iostream>

#include "gwa/actions.hpp"
#include "gwa/io.hpp"

namespace fs = std::filesystem;

namespace {

void write(const fs::path& dir, const std::string& name, const std::string& body) {
  gwa::write_file((dir / name).string(), body);
}

void emit(const fs::path& dir, const gwa::FiniteGwa& g) {
  write(dir, g.name + ".json", gwa::to_json(g));
  gwa::ActionTriple self = gwa::self_action(g);
  write(dir, g.name + "_self_action.json", gwa::to_json(self));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gwa-make-fixtures <output-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  gwa::FiniteGwa trivial = gwa::identity_action_gwa(gwa::trivial_group());
  gwa::FiniteGwa z2 = gwa::identity_action_gwa(gwa::cyclic_group(2));
  gwa::FiniteGwa z3 = gwa::identity_action_gwa(gwa::cyclic_group(3));
  gwa::FiniteGwa v4 = gwa::identity_action_gwa(gwa::klein_four_group());
  gwa::FiniteGwa s3_id = gwa::identity_action_gwa(gwa::symmetric_group_s3());
  s3_id.name = "S3-identity";
  gwa::FiniteGwa s3_conj = gwa::conjugation_gwa(gwa::symmetric_group_s3());
  s3_conj.name = "S3-conjugation";

  for (const auto* g : {&trivial, &z2, &z3, &v4, &s3_id, &s3_conj}) emit(dir, *g);

  write(dir, "Z2_naive_self_action.json", gwa::to_json(gwa::naive_self_action(z2)));
  write(dir, "S3-conjugation_naive_self_action.json",
        gwa::to_json(gwa::naive_self_action(s3_conj)));

  // A3 = the even permutations, an ideal of the conjugation object.
  write(dir, "S3-conjugation_A3.json",
        gwa::to_json(gwa::make_subset(s3_conj, {0, 3, 4})));

  // Z2 with 1^1 = 0: breaks the first action axiom. Kept as a negative case.
  gwa::FiniteGwa broken = z2;
  broken.name = "Z2-broken";
  broken.act = {{0, 0}, {1, 0}};
  write(dir, "Z2-broken.json", gwa::to_json(broken));

  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
