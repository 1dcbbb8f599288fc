#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rowmotion/realm.hpp"

namespace rowmotion {

/// Rational expression over a (possibly noncommutative) realm.
///
/// Grammar:
///   sum     := product (('+') product)*
///   product := power (('*' | '/') power)*      a/b means a * inv(b)
///   power   := atom ('^' integer)?             negative powers invert
///   atom    := integer | name | 'inv' '(' sum ')' | '(' sum ')'
/// There is no subtraction: the realms need not have additive inverses.
struct Expr {
  enum class Kind { Integer, Name, Add, Mul, Inv, Pow };
  Kind kind;
  long integer = 0;
  std::string name;
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

class ExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ExprPtr parse_expr(const std::string& text);

ExprPtr make_integer(long v);
ExprPtr make_name(std::string name);
ExprPtr make_add(ExprPtr x, ExprPtr y);
ExprPtr make_mul(ExprPtr x, ExprPtr y);
ExprPtr make_inv(ExprPtr x);

std::string expr_to_string(const Expr& e);

/// Evaluates in realm `r`.  Names resolve through `env`; an unbound "C"
/// resolves to r.constant(), other unbound names to the realm's own
/// variables when it has any.  Integer literals other than 1 need a realm
/// with from_int(long).
template <Realm R>
typename R::value_type evaluate(const Expr& e, const R& r,
                                const std::map<std::string, typename R::value_type>& env) {
  using V = typename R::value_type;
  switch (e.kind) {
    case Expr::Kind::Integer:
      if (e.integer == 1) return r.one();
      if constexpr (requires { r.from_int(e.integer); }) {
        return r.from_int(e.integer);
      } else {
        throw ExprError("integer literal " + std::to_string(e.integer) + " is not defined in this realm");
      }
    case Expr::Kind::Name: {
      auto it = env.find(e.name);
      if (it != env.end()) return it->second;
      if (e.name == "C") return r.constant();
      if constexpr (requires { r.variable(r.variable_index(e.name)); }) {
        return r.variable(r.variable_index(e.name));
      }
      throw ExprError("unbound name '" + e.name + "'");
    }
    case Expr::Kind::Add: {
      V acc = evaluate(*e.args[0], r, env);
      for (size_t k = 1; k < e.args.size(); ++k) acc = r.add(acc, evaluate(*e.args[k], r, env));
      return acc;
    }
    case Expr::Kind::Mul: {
      V acc = evaluate(*e.args[0], r, env);
      for (size_t k = 1; k < e.args.size(); ++k) acc = r.mul(acc, evaluate(*e.args[k], r, env));
      return acc;
    }
    case Expr::Kind::Inv:
      return r.inv(evaluate(*e.args[0], r, env));
    case Expr::Kind::Pow: {
      V base = evaluate(*e.args[0], r, env);
      long n = e.integer;
      if (n < 0) {
        base = r.inv(base);
        n = -n;
      }
      V acc = r.one();
      for (long k = 0; k < n; ++k) acc = r.mul(acc, base);
      return acc;
    }
  }
  throw ExprError("corrupt expression");
}

template <Realm R>
typename R::value_type evaluate(const std::string& text, const R& r,
                                const std::map<std::string, typename R::value_type>& env) {
  return evaluate(*parse_expr(text), r, env);
}

}  // namespace rowmotion
