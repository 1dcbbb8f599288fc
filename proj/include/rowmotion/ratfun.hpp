#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rowmotion/polynomial.hpp"
#include "rowmotion/realm.hpp"

namespace rowmotion {

/// num / den in Q(C, x_1, x_2, ...).  Variable 0 is the central constant C.
///
/// Normal form: nonzero denominator with positive leading coefficient, joint
/// integer content 1, no common monomial factor.  With gcd reduction enabled
/// (the default) numerator and denominator are also coprime.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Polynomial num);  // NOLINT: polynomials embed implicitly
  /// Throws SingularValue on a zero denominator.
  RationalFunction(Polynomial num, Polynomial den, bool reduce_gcd = true);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Cross-multiplication test; independent of how far either side is reduced.
  bool equals(const RationalFunction& other) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction ratfun_add(const RationalFunction& x, const RationalFunction& y, bool reduce_gcd = true);
RationalFunction ratfun_mul(const RationalFunction& x, const RationalFunction& y, bool reduce_gcd = true);
RationalFunction ratfun_inv(const RationalFunction& x, bool reduce_gcd = true);

/// Field of rational functions with the constant C as variable 0.
class RatFunRealm {
 public:
  using value_type = RationalFunction;

  /// `variables` names variables 1..n; "C" is prepended as variable 0.
  explicit RatFunRealm(std::vector<std::string> variables = {}, bool reduce_gcd = true);

  const std::vector<std::string>& names() const { return *names_; }
  /// Index of a named variable ("C" is 0); throws if unknown.
  int variable_index(const std::string& name) const;
  bool reduces_gcd() const { return reduce_gcd_; }

  bool commutative() const { return true; }
  bool tropical() const { return false; }

  value_type variable(int index) const { return RationalFunction(Polynomial::variable(index)); }
  value_type from_int(long v) const { return RationalFunction(Polynomial(v)); }
  value_type one() const { return from_int(1); }
  value_type constant() const { return variable(0); }
  value_type add(const value_type& x, const value_type& y) const { return ratfun_add(x, y, reduce_gcd_); }
  value_type mul(const value_type& x, const value_type& y) const { return ratfun_mul(x, y, reduce_gcd_); }
  value_type inv(const value_type& x) const { return ratfun_inv(x, reduce_gcd_); }
  bool eq(const value_type& x, const value_type& y) const { return x.equals(y); }
  std::string to_string(const value_type& x) const { return x.to_string(*names_); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  bool reduce_gcd_;
};

}  // namespace rowmotion
