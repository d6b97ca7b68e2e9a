#pragma once

#include <map>
#include <string>

#include "gwa/actions.hpp"
#include "gwa/algebra.hpp"
#include "gwa/enumeration.hpp"
#include "gwa/ideals.hpp"

namespace gwa {

// Algebra file: {"name": str, "order": int, "add": [[..]], "neg": [..],
// "act": [[..]]}. Subset file: {"algebra": name, "members": [indices]}.
// Action file: {"actor": name, "target": name, "dot": [[..]],
// "star": [[..]], "dual": [[..]]}.

std::string to_json(const FiniteGwa& g);
std::string to_json(const SubsetMask& s);
std::string to_json(const ActionTriple& t);
std::string to_json(const AuditSummary& s);
std::string to_json(const CheckReport& r);

FiniteGwa algebra_from_json(const std::string& text);
FiniteGwa load_algebra(const std::string& path);
void save_algebra(const FiniteGwa& g, const std::string& path);

/// Named collection of loaded objects; subset and action files refer to
/// algebras by name.
class Workspace {
 public:
  const FiniteGwa& add_algebra(FiniteGwa g);
  const FiniteGwa& algebra(const std::string& name) const;
  bool has_algebra(const std::string& name) const;

  SubsetMask subset_from_json(const std::string& text) const;
  ActionTriple triple_from_json(const std::string& text) const;

 private:
  std::map<std::string, FiniteGwa> algebras_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gwa
