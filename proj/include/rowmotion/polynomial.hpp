#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rowmotion/modp.hpp"

namespace rowmotion {

inline constexpr int kMaxVariables = 24;

/// Exponent vector over variables 0..kMaxVariables-1.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;

  static Monomial variable(int v, int power = 1);

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exp == y.exp; }
};

/// Graded lexicographic order: higher total degree first, then the larger
/// exponent in the lowest-index variable.  Returns <0, 0 or >0.
int compare_grlex(const Monomial& x, const Monomial& y);

/// Componentwise minimum.
Monomial monomial_gcd(const Monomial& x, const Monomial& y);

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Sparse polynomial in Z[x_0, ..., x_{kMaxVariables-1}].
/// Terms are kept strictly descending in graded lexicographic order with
/// nonzero coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly
  explicit Polynomial(const mpz_class& c);
  static Polynomial variable(int v);
  static Polynomial monomial(const Monomial& m, const mpz_class& c);
  /// Sorts and combines like terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree; }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial shifted(const Monomial& m) const;  // multiply by a monomial
  friend bool operator==(const Polynomial& x, const Polynomial& y);

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Exact quotient by an integer dividing every coefficient.
  Polynomial div_integer(const mpz_class& c) const;
  /// Exact quotient by a monomial dividing every term.
  Polynomial div_monomial(const Monomial& m) const;
  /// Exact quotient when `divisor` divides this polynomial in Z[x], else nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  int degree_in(int v) const;
  /// Coefficient of v^k, as a polynomial free of v.
  Polynomial coefficient_in(int v, int k) const;
  /// Lowest-index variable with a positive exponent, or -1 if constant.
  int lowest_variable() const;

  /// Evaluates modulo p at point[v] for each variable v < point.size();
  /// variables beyond the point must not occur.
  modp::u64 eval_mod(const modp::Field& field, std::span<const modp::u64> point) const;
  /// Evaluates exactly at rational values.
  mpq_class eval(std::span<const mpq_class> point) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor in Z[x], with positive leading coefficient.
/// Recursive primitive polynomial remainder sequence in the lowest variable.
Polynomial gcd(const Polynomial& x, const Polynomial& y);

}  // namespace rowmotion
