#include "rowmotion/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rowmotion {

Monomial Monomial::variable(int v, int power) {
  if (v < 0 || v >= kMaxVariables) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.exp[v] = static_cast<std::uint16_t>(power);
  m.degree = static_cast<std::uint32_t>(power);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kMaxVariables; ++v) {
    unsigned e = exp[v] + other.exp[v];
    if (e > 0xFFFFU) throw std::overflow_error("monomial exponent overflow");
    m.exp[v] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + other.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (int v = 0; v < kMaxVariables; ++v) m.exp[v] = static_cast<std::uint16_t>(exp[v] - other.exp[v]);
  m.degree = degree - other.degree;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (int v = 0; v < kMaxVariables; ++v) {
    if (exp[v] > other.exp[v]) return false;
  }
  return true;
}

int compare_grlex(const Monomial& x, const Monomial& y) {
  if (x.degree != y.degree) return x.degree > y.degree ? 1 : -1;
  for (int v = 0; v < kMaxVariables; ++v) {
    if (x.exp[v] != y.exp[v]) return x.exp[v] > y.exp[v] ? 1 : -1;
  }
  return 0;
}

Monomial monomial_gcd(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (int v = 0; v < kMaxVariables; ++v) {
    m.exp[v] = std::min(x.exp[v], y.exp[v]);
    m.degree += m.exp[v];
  }
  return m;
}

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back(Term{Monomial{}, mpz_class(c)});
}

Polynomial::Polynomial(const mpz_class& c) {
  if (sgn(c) != 0) terms_.push_back(Term{Monomial{}, c});
}

Polynomial Polynomial::variable(int v) { return monomial(Monomial::variable(v), 1); }

Polynomial Polynomial::monomial(const Monomial& m, const mpz_class& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return compare_grlex(x.mono, y.mono) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.degree == 0 && terms_[0].coeff == 1;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p;
  p.terms_.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = compare_grlex(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      p.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(other.terms_[j++]);
    } else {
      mpz_class s = terms_[i].coeff + other.terms_[j].coeff;
      if (sgn(s) != 0) p.terms_.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) p.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) p.terms_.push_back(other.terms_[j]);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  if (other.terms_.size() == 1) {
    return shifted(other.terms_[0].mono).scaled(other.terms_[0].coeff);
  }
  if (terms_.size() == 1) return other * *this;
  std::vector<Term> out;
  out.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : other.terms_) out.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;  // order-preserving for grlex
  return p;
}

bool operator==(const Polynomial& x, const Polynomial& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  for (size_t k = 0; k < x.terms_.size(); ++k) {
    if (!(x.terms_[k].mono == y.terms_[k].mono) || x.terms_[k].coeff != y.terms_[k].coeff) return false;
  }
  return true;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = monomial_gcd(m, t.mono);
  return m;
}

Polynomial Polynomial::div_integer(const mpz_class& c) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return p;
}

Polynomial Polynomial::div_monomial(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.mono = t.mono / m;
  return p;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (divisor.terms_.size() == 1) {
    const Term& d = divisor.terms_[0];
    Polynomial q;
    for (const auto& t : terms_) {
      if (!d.mono.divides(t.mono) || !mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t())) {
        return std::nullopt;
      }
      mpz_class c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), d.coeff.get_mpz_t());
      q.terms_.push_back(Term{t.mono / d.mono, std::move(c)});
    }
    return q;
  }
  Polynomial remainder = *this;
  std::vector<Term> quotient;
  const Term& lead = divisor.leading();
  while (!remainder.is_zero()) {
    const Term& r = remainder.leading();
    if (!lead.mono.divides(r.mono) || !mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Term q{r.mono / lead.mono, 0};
    mpz_divexact(q.coeff.get_mpz_t(), r.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    remainder = remainder - divisor.shifted(q.mono).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  Polynomial out;
  out.terms_ = std::move(quotient);  // generated in strictly descending order
  return out;
}

int Polynomial::degree_in(int v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp[v]));
  return d;
}

Polynomial Polynomial::coefficient_in(int v, int k) const {
  Polynomial p;
  for (const auto& t : terms_) {
    if (t.mono.exp[v] != k) continue;
    Term s = t;
    s.mono.exp[v] = 0;
    s.mono.degree -= static_cast<std::uint32_t>(k);
    p.terms_.push_back(std::move(s));
  }
  // Removing one variable can reorder terms under grlex.
  return from_terms(std::move(p.terms_));
}

int Polynomial::lowest_variable() const {
  int best = -1;
  for (const auto& t : terms_) {
    for (int v = 0; v < kMaxVariables && (best < 0 || v < best); ++v) {
      if (t.mono.exp[v] > 0) {
        best = v;
        break;
      }
    }
  }
  return best;
}

modp::u64 Polynomial::eval_mod(const modp::Field& field, std::span<const modp::u64> point) const {
  const modp::u64 p = field.modulus();
  mpz_class pz;
  mpz_set_ui(pz.get_mpz_t(), p);
  modp::u64 acc = 0;
  for (const auto& t : terms_) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), t.coeff.get_mpz_t(), pz.get_mpz_t());
    modp::u64 term = mpz_get_ui(r.get_mpz_t());
    for (int v = 0; v < kMaxVariables; ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (static_cast<size_t>(v) >= point.size()) throw std::out_of_range("evaluation point missing a variable");
      term = field.mul(term, field.pow(point[v], t.mono.exp[v]));
    }
    acc = field.add(acc, term);
  }
  return acc;
}

mpq_class Polynomial::eval(std::span<const mpq_class> point) const {
  mpq_class acc = 0;
  for (const auto& t : terms_) {
    mpq_class term(t.coeff);
    for (int v = 0; v < kMaxVariables; ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (static_cast<size_t>(v) >= point.size()) throw std::out_of_range("evaluation point missing a variable");
      for (int e = 0; e < t.mono.exp[v]; ++e) term *= point[v];
    }
    acc += term;
  }
  return acc;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (int v = 0; v < kMaxVariables; ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += static_cast<size_t>(v) < names.size() ? names[v] : "x" + std::to_string(v);
      if (t.mono.exp[v] > 1) factors += "^" + std::to_string(t.mono.exp[v]);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += factors;
    } else {
      out += c.get_str() + "*" + factors;
    }
  }
  return out;
}

namespace {

Polynomial with_positive_lead(Polynomial p) {
  if (!p.is_zero() && sgn(p.leading().coeff) < 0) return -p;
  return p;
}

Polynomial gcd_primitive(const Polynomial& x, const Polynomial& y);

// Gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, int v) {
  Polynomial g;
  for (int k = p.degree_in(v); k >= 0; --k) {
    Polynomial c = p.coefficient_in(v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, int v) {
  Polynomial c = content_in(p, v);
  if (c.is_one()) return p;
  auto q = p.divide_exact(c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, int v) {
  const int db = b.degree_in(v);
  const Polynomial lead_b = b.coefficient_in(v, db);
  while (!r.is_zero()) {
    int dr = r.degree_in(v);
    if (dr < db) break;
    Polynomial lead_r = r.coefficient_in(v, dr);
    r = r * lead_b - b.shifted(Monomial::variable(v, dr - db)) * lead_r;
  }
  return r;
}

// Inputs have integer content 1 and no monomial factor.
Polynomial gcd_primitive(const Polynomial& x, const Polynomial& y) {
  if (x.is_constant() || y.is_constant()) return Polynomial(1);
  if (auto q = x.divide_exact(y)) return with_positive_lead(y);
  if (auto q = y.divide_exact(x)) return with_positive_lead(x);
  int vx = x.lowest_variable();
  int vy = y.lowest_variable();
  int v = std::min(vx, vy);
  if (x.degree_in(v) == 0) return gcd(x, content_in(y, v));
  if (y.degree_in(v) == 0) return gcd(content_in(x, v), y);

  Polynomial cx = content_in(x, v);
  Polynomial cy = content_in(y, v);
  Polynomial c = gcd(cx, cy);
  Polynomial a = cx.is_one() ? x : *x.divide_exact(cx);
  Polynomial b = cy.is_one() ? y : *y.divide_exact(cy);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = r.is_zero() ? Polynomial() : primitive_part_in(r, v);
    if (!b.is_zero() && b.degree_in(v) == 0) {
      a = Polynomial(1);
      break;
    }
  }
  Polynomial g = primitive_part_in(a, v);
  g = with_positive_lead(g * c);
  return g.div_integer(g.content());
}

}  // namespace

Polynomial gcd(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero()) return with_positive_lead(y);
  if (y.is_zero()) return with_positive_lead(x);
  Monomial mx = x.monomial_content();
  Monomial my = y.monomial_content();
  Monomial m = monomial_gcd(mx, my);
  mpz_class cx = x.content();
  mpz_class cy = y.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  Polynomial px = x.div_monomial(mx).div_integer(cx);
  Polynomial py = y.div_monomial(my).div_integer(cy);
  Polynomial g = gcd_primitive(px, py);
  return with_positive_lead(g.shifted(m).scaled(c));
}

}  // namespace rowmotion
