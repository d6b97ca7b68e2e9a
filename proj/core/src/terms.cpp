#include "gwa/terms.hpp"

#include "gwa/actions.hpp"

namespace gwa {

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

TermPtr var(int index, Sort s) {
  return make({Term::Kind::Var, s, index, nullptr, nullptr});
}

TermPtr zero(Sort s) {
  return make({Term::Kind::Zero, s, -1, nullptr, nullptr});
}

TermPtr add(TermPtr x, TermPtr y) {
  if (x->sort != y->sort) throw structural_error("term add: sort mismatch");
  return make({Term::Kind::Add, x->sort, -1, std::move(x), std::move(y)});
}

TermPtr neg(TermPtr x) {
  Sort s = x->sort;
  return make({Term::Kind::Neg, s, -1, std::move(x), nullptr});
}

TermPtr dot(TermPtr b, TermPtr a) {
  if (b->sort != Sort::B || a->sort != Sort::A) {
    throw structural_error("term dot: needs B on the left, A on the right");
  }
  return make({Term::Kind::Dot, Sort::A, -1, std::move(b), std::move(a)});
}

TermPtr pow(TermPtr base, TermPtr exp) {
  // Only base B, exp B stays in B; every other combination lands in A.
  Sort s = (base->sort == Sort::B && exp->sort == Sort::B) ? Sort::B : Sort::A;
  return make({Term::Kind::Pow, s, -1, std::move(base), std::move(exp)});
}

int eval(const Term& t, const ActionTriple& tr, std::span<const int> env) {
  switch (t.kind) {
    case Term::Kind::Var:
      return env[t.var];
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::Add: {
      const FiniteGwa& g = (t.sort == Sort::A) ? tr.target : tr.actor;
      return g.add[eval(*t.lhs, tr, env)][eval(*t.rhs, tr, env)];
    }
    case Term::Kind::Neg: {
      const FiniteGwa& g = (t.sort == Sort::A) ? tr.target : tr.actor;
      return g.neg[eval(*t.lhs, tr, env)];
    }
    case Term::Kind::Dot:
      return tr.dot[eval(*t.lhs, tr, env)][eval(*t.rhs, tr, env)];
    case Term::Kind::Pow: {
      const int base = eval(*t.lhs, tr, env);
      const int exp = eval(*t.rhs, tr, env);
      const bool base_a = t.lhs->sort == Sort::A;
      const bool exp_a = t.rhs->sort == Sort::A;
      if (base_a && exp_a) return tr.target.act[base][exp];
      if (base_a) return tr.star[base][exp];
      if (exp_a) return tr.dual[base][exp];
      return tr.actor.act[base][exp];
    }
  }
  throw structural_error("term eval: bad kind");
}

namespace {

bool check_one_law(const Law& law, const ActionTriple& tr, CheckReport* report,
                   const CheckOptions& opt) {
  const int na = tr.target.order;
  const int nb = tr.actor.order;
  std::vector<int> env(law.vars.size(), 0);
  bool all_ok = true;
  for (;;) {
    if (eval(*law.lhs, tr, env) != eval(*law.rhs, tr, env)) {
      all_ok = false;
      if (report) report->record(law.id, env, opt.witness_cap);
      if (!report || opt.early_exit) return false;
    }
    // Odometer, last variable fastest.
    int k = static_cast<int>(env.size()) - 1;
    for (; k >= 0; --k) {
      const int radix = (law.vars[k] == Sort::A) ? na : nb;
      if (++env[k] < radix) break;
      env[k] = 0;
    }
    if (k < 0) break;
  }
  return all_ok;
}

}  // namespace

CheckReport check_laws(std::span<const Law> laws, const ActionTriple& tr,
                       const CheckOptions& opt) {
  check_shape(tr);
  CheckReport r;
  for (const Law& law : laws) {
    check_one_law(law, tr, &r, opt);
    if (opt.early_exit && !r.ok()) return r;
  }
  return r;
}

bool law_holds(const Law& law, const ActionTriple& tr) {
  return check_one_law(law, tr, nullptr, {});
}

const std::vector<Law>& dot_action_laws() {
  static const std::vector<Law> laws = [] {
    auto b = var(0, Sort::B);
    auto a1 = var(1, Sort::A), a2 = var(2, Sort::A);
    auto b1 = var(0, Sort::B), b2 = var(1, Sort::B);
    auto a = var(2, Sort::A);
    auto au = var(0, Sort::A);
    return std::vector<Law>{
        {"b·(a1+a2)=b·a1+b·a2",
         {Sort::B, Sort::A, Sort::A},
         dot(b, add(a1, a2)),
         add(dot(b, a1), dot(b, a2))},
        {"(b1+b2)·a=b1·(b2·a)",
         {Sort::B, Sort::B, Sort::A},
         dot(add(b1, b2), a),
         dot(b1, dot(b2, a))},
        {"0·a=a", {Sort::A}, dot(zero(Sort::B), au), au},
    };
  }();
  return laws;
}

const std::vector<Law>& conditions_A_laws() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    {
      auto a = var(0, Sort::A), a2 = var(1, Sort::A);
      auto b = var(2, Sort::B);
      out.push_back({"(1_A)",
                     {Sort::A, Sort::A, Sort::B},
                     pow(add(a, a2), b),
                     add(pow(a, b), pow(a2, b))});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      out.push_back({"(2_A)",
                     {Sort::B, Sort::B, Sort::A},
                     pow(add(b, b2), a),
                     add(pow(b, a), dot(b, pow(b2, a)))});
    }
    {
      auto b = var(0, Sort::B);
      auto a = var(1, Sort::A), a2 = var(2, Sort::A);
      out.push_back({"(3_A)",
                     {Sort::B, Sort::A, Sort::A},
                     add(pow(dot(b, a), a2), pow(b, a2)),
                     add(pow(b, a2), dot(b, pow(a, a2)))});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      out.push_back({"(4_A)",
                     {Sort::B, Sort::B, Sort::A},
                     pow(dot(b, a), b2),
                     dot(pow(b, b2), pow(a, b2))});
    }
    return out;
  }();
  return laws;
}

const std::vector<Law>& conditions_B_laws() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    {
      auto b = var(0, Sort::B);
      auto a = var(1, Sort::A), a2 = var(2, Sort::A);
      out.push_back({"(1_B)",
                     {Sort::B, Sort::A, Sort::A},
                     pow(b, add(a, a2)),
                     add(pow(pow(b, a), a2), pow(b, a2))});
    }
    {
      auto a = var(0, Sort::A);
      auto b = var(1, Sort::B), b2 = var(2, Sort::B);
      out.push_back({"(2_B)",
                     {Sort::A, Sort::B, Sort::B},
                     pow(a, add(b, b2)),
                     pow(pow(a, b), b2)});
    }
    {
      auto a = var(0, Sort::A), a2 = var(1, Sort::A);
      auto b = var(2, Sort::B);
      out.push_back({"(3_B)",
                     {Sort::A, Sort::A, Sort::B},
                     pow(pow(a, dot(b, a2)), b),
                     pow(pow(a, b), a2)});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      out.push_back({"(4_B)",
                     {Sort::B, Sort::B, Sort::A},
                     pow(pow(b, dot(b2, a)), b2),
                     pow(pow(b, b2), a)});
    }
    return out;
  }();
  return laws;
}

const std::vector<Law>& unit_zero_laws() {
  static const std::vector<Law> laws = [] {
    auto b = var(0, Sort::B);
    auto a = var(0, Sort::A);
    return std::vector<Law>{
        {"0_A^b=0_A", {Sort::B}, pow(zero(Sort::A), b), zero(Sort::A)},
        {"0_B^a=0_A", {Sort::A}, pow(zero(Sort::B), a), zero(Sort::A)},
        {"b^{0_A}=0_A", {Sort::B}, pow(b, zero(Sort::A)), zero(Sort::A)},
        {"a^{0_B}=a", {Sort::A}, pow(a, zero(Sort::B)), a},
    };
  }();
  return laws;
}

const std::vector<Law>& reduced_action_laws() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    {
      auto b = var(0, Sort::B);
      auto a = var(1, Sort::A), a2 = var(2, Sort::A);
      out.push_back({"b·a^{a'}=a^{a'}",
                     {Sort::B, Sort::A, Sort::A},
                     dot(b, pow(a, a2)),
                     pow(a, a2)});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      out.push_back({"b·a^{b'}=a^{b'}",
                     {Sort::B, Sort::B, Sort::A},
                     dot(b, pow(a, b2)),
                     pow(a, b2)});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      out.push_back({"b^{b'}·a=a",
                     {Sort::B, Sort::B, Sort::A},
                     dot(pow(b, b2), a),
                     a});
    }
    {
      auto b = var(0, Sort::B);
      auto a = var(1, Sort::A), a2 = var(2, Sort::A);
      out.push_back({"b^{(a^{a'})}=b^a",
                     {Sort::B, Sort::A, Sort::A},
                     pow(b, pow(a, a2)),
                     pow(b, a)});
    }
    {
      auto a = var(0, Sort::A);
      auto b = var(1, Sort::B), b2 = var(2, Sort::B);
      out.push_back({"a^{(b^{b'})}=a^b",
                     {Sort::A, Sort::B, Sort::B},
                     pow(a, pow(b, b2)),
                     pow(a, b)});
    }
    {
      auto a = var(0, Sort::A), a2 = var(1, Sort::A);
      auto b = var(2, Sort::B);
      out.push_back({"a^b+a'=a'+a^b",
                     {Sort::A, Sort::A, Sort::B},
                     add(pow(a, b), a2),
                     add(a2, pow(a, b))});
    }
    {
      auto a = var(0, Sort::A), a2 = var(1, Sort::A);
      auto b = var(2, Sort::B);
      out.push_back({"a^{(a'^b)}=a^{a'}",
                     {Sort::A, Sort::A, Sort::B},
                     pow(a, pow(a2, b)),
                     pow(a, a2)});
    }
    {
      auto a = var(0, Sort::A), a2 = var(1, Sort::A);
      auto b = var(2, Sort::B);
      out.push_back({"a^{(b^{a'})}=a",
                     {Sort::A, Sort::A, Sort::B},
                     pow(a, pow(b, a2)),
                     a});
    }
    {
      auto b = var(0, Sort::B), b2 = var(1, Sort::B);
      auto a = var(2, Sort::A);
      // The zero on the right is 0_A: the whole expression has sort A.
      out.push_back({"b^{(b'^a)}=0",
                     {Sort::B, Sort::B, Sort::A},
                     pow(b, pow(b2, a)),
                     zero(Sort::A)});
    }
    {
      auto b = var(0, Sort::B);
      auto a = var(1, Sort::A), b2 = var(2, Sort::B);
      out.push_back({"b^{(a^{b'})}=b^a",
                     {Sort::B, Sort::A, Sort::B},
                     pow(b, pow(a, b2)),
                     pow(b, a)});
    }
    return out;
  }();
  return laws;
}

}  // namespace gwa
