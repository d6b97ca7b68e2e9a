#include "gwa/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gwa {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw structural_error("malformed JSON");
  return j;
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) {
    throw structural_error(std::string("missing field \"") + name + "\"");
  }
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw structural_error(std::string("field \"") + name + "\" has wrong type");
  }
}

}  // namespace

std::string to_json(const FiniteGwa& g) {
  json j;
  j["name"] = g.name;
  j["order"] = g.order;
  j["add"] = g.add;
  j["neg"] = g.neg;
  j["act"] = g.act;
  return j.dump(2) + "\n";
}

std::string to_json(const SubsetMask& s) {
  json j;
  j["algebra"] = s.parent.name;
  j["members"] = s.indices();
  return j.dump(2) + "\n";
}

std::string to_json(const ActionTriple& t) {
  json j;
  j["actor"] = t.actor.name;
  j["target"] = t.target.name;
  j["dot"] = t.dot;
  j["star"] = t.star;
  j["dual"] = t.dual;
  return j.dump(2) + "\n";
}

std::string to_json(const AuditSummary& s) {
  json j;
  j["total"] = s.total;
  j["agree"] = s.agree;
  json ds = json::array();
  for (const auto& d : s.disagreements) {
    ds.push_back({{"triple", d.triple},
                  {"derived", d.derived_side},
                  {"product", d.product_side}});
  }
  j["disagreements"] = ds;
  if (s.seed) {
    j["seed"] = *s.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["elapsed_ms"] = s.elapsed_ms;
  return j.dump(2) + "\n";
}

std::string to_json(const CheckReport& r) {
  json j;
  j["ok"] = r.ok();
  json vs = json::array();
  for (const auto& v : r.violations()) {
    vs.push_back({{"law", v.law}, {"witness", v.witness}});
  }
  j["violations"] = vs;
  j["violation_count"] = r.violation_count();
  return j.dump(2) + "\n";
}

FiniteGwa algebra_from_json(const std::string& text) {
  const json j = parse(text);
  FiniteGwa g;
  g.name = field<std::string>(j, "name");
  g.order = field<int>(j, "order");
  g.add = field<Table>(j, "add");
  g.neg = field<std::vector<int>>(j, "neg");
  g.act = field<Table>(j, "act");
  check_shape(g);
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw structural_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw structural_error("cannot write " + path);
  out << content;
  if (!out) throw structural_error("cannot write " + path);
}

FiniteGwa load_algebra(const std::string& path) {
  return algebra_from_json(read_file(path));
}

void save_algebra(const FiniteGwa& g, const std::string& path) {
  write_file(path, to_json(g));
}

const FiniteGwa& Workspace::add_algebra(FiniteGwa g) {
  check_shape(g);
  auto it = algebras_.find(g.name);
  if (it != algebras_.end()) {
    // Loading the same file twice (self-actions use one algebra as both
    // actor and target) is fine; two different algebras under one name is not.
    if (it->second.add != g.add || it->second.neg != g.neg ||
        it->second.act != g.act) {
      throw structural_error("duplicate algebra name " + g.name);
    }
    return it->second;
  }
  return algebras_.emplace(g.name, std::move(g)).first->second;
}

const FiniteGwa& Workspace::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw structural_error("unknown algebra " + name);
  return it->second;
}

bool Workspace::has_algebra(const std::string& name) const {
  return algebras_.contains(name);
}

SubsetMask Workspace::subset_from_json(const std::string& text) const {
  const json j = parse(text);
  const FiniteGwa& parent = algebra(field<std::string>(j, "algebra"));
  return make_subset(parent, field<std::vector<int>>(j, "members"));
}

ActionTriple Workspace::triple_from_json(const std::string& text) const {
  const json j = parse(text);
  ActionTriple t;
  t.actor = algebra(field<std::string>(j, "actor"));
  t.target = algebra(field<std::string>(j, "target"));
  t.dot = field<Table>(j, "dot");
  t.star = field<Table>(j, "star");
  t.dual = field<Table>(j, "dual");
  check_shape(t);
  return t;
}

}  // namespace gwa
