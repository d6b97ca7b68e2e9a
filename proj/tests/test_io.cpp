#include <doctest.h>

#include "gwa/io.hpp"

using namespace gwa;

TEST_CASE("algebra JSON round-trip") {
  const FiniteGwa g = conjugation_gwa(symmetric_group_s3());
  const FiniteGwa back = algebra_from_json(to_json(g));
  CHECK(back.name == g.name);
  CHECK(back.add == g.add);
  CHECK(back.neg == g.neg);
  CHECK(back.act == g.act);
}

TEST_CASE("re-serialization is byte-identical") {
  const FiniteGwa g = identity_action_gwa(klein_four_group());
  const std::string once = to_json(g);
  const std::string twice = to_json(algebra_from_json(once));
  CHECK(once == twice);
}

TEST_CASE("malformed input is structural") {
  CHECK_THROWS_AS(algebra_from_json("{ not json"), structural_error);
  CHECK_THROWS_AS(algebra_from_json("{}"), structural_error);
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"name":"x","order":2,"add":[[0,1],[1,0]],"neg":[0,1],"act":[[0,9],[1,1]]})"),
      structural_error);
  CHECK_THROWS_AS(
      algebra_from_json(
          R"({"name":"x","order":"two","add":[],"neg":[],"act":[]})"),
      structural_error);
}

TEST_CASE("workspace resolves names for subsets and triples") {
  Workspace ws;
  const FiniteGwa& s3c = ws.add_algebra(conjugation_gwa(symmetric_group_s3()));
  const SubsetMask a3 =
      ws.subset_from_json(R"({"algebra":"S3","members":[0,3,4]})");
  CHECK(a3.parent.name == s3c.name);
  CHECK(a3.indices() == std::vector<int>{0, 3, 4});
  CHECK_THROWS_AS(ws.subset_from_json(R"({"algebra":"nope","members":[0]})"),
                  structural_error);
}

TEST_CASE("workspace tolerates identical duplicates only") {
  Workspace ws;
  ws.add_algebra(identity_action_gwa(cyclic_group(2)));
  CHECK_NOTHROW(ws.add_algebra(identity_action_gwa(cyclic_group(2))));
  FiniteGwa impostor = identity_action_gwa(klein_four_group());
  impostor.name = "Z2";
  CHECK_THROWS_AS(ws.add_algebra(impostor), structural_error);
}

TEST_CASE("triple JSON round-trip through a workspace") {
  Workspace ws;
  const FiniteGwa z3 = identity_action_gwa(cyclic_group(3));
  ws.add_algebra(z3);
  const ActionTriple t = self_action(z3);
  const ActionTriple back = ws.triple_from_json(to_json(t));
  CHECK(back.same_tables(t));
  CHECK(to_json(back) == to_json(t));
}

TEST_CASE("check report serialization carries witnesses") {
  FiniteGwa g = identity_action_gwa(cyclic_group(2));
  g.act = {{0, 0}, {1, 0}};
  const std::string j = to_json(validate_self_action(g));
  CHECK(j.find("eps-1") != std::string::npos);
  CHECK(j.find("\"ok\": false") != std::string::npos);
}
