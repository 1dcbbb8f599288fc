#pragma once

#include <gmpxx.h>

#include <string>

#include "rowmotion/realm.hpp"

namespace rowmotion {

/// Max-plus arithmetic on exact rationals: add = max, mul = +, inv = negation,
/// one = 0.  The constant c plays the role of the value 1 in the
/// piecewise-linear maps (complementation is x -> c - x).
class TropicalRealm {
 public:
  using value_type = mpq_class;

  explicit TropicalRealm(mpq_class c = 1) : c_(std::move(c)) { c_.canonicalize(); }

  const mpq_class& c() const { return c_; }
  bool commutative() const { return true; }
  bool tropical() const { return true; }

  value_type one() const { return 0; }
  value_type constant() const { return c_; }
  value_type add(const value_type& x, const value_type& y) const { return x < y ? y : x; }
  value_type mul(const value_type& x, const value_type& y) const { return x + y; }
  value_type inv(const value_type& x) const { return -x; }
  bool eq(const value_type& x, const value_type& y) const { return x == y; }
  std::string to_string(const value_type& x) const { return x.get_str(); }

 private:
  mpq_class c_;
};

/// Parses "p/q", an integer, or a finite decimal such as "0.3" or "-1.25".
mpq_class parse_rational(const std::string& text);

}  // namespace rowmotion
