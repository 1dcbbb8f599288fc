#include "rowmotion/ratfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace rowmotion {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den, bool reduce_gcd)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw SingularValue("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  Monomial m = monomial_gcd(num_.monomial_content(), den_.monomial_content());
  if (m.degree > 0) {
    num_ = num_.div_monomial(m);
    den_ = den_.div_monomial(m);
  }
  if (reduce_gcd && !den_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Polynomial(1);
    } else {
      Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *num_.divide_exact(g);
        den_ = *den_.divide_exact(g);
      }
    }
  }
  mpz_class c;
  mpz_class cn = num_.content();
  mpz_class cd = den_.content();
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (sgn(den_.leading().coeff) < 0) c = -c;
  if (c != 1) {
    num_ = num_.div_integer(c);
    den_ = den_.div_integer(c);
  }
}

bool RationalFunction::equals(const RationalFunction& other) const {
  if (num_ == other.num_ && den_ == other.den_) return true;
  return num_ * other.den_ == other.num_ * den_;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  const bool bare = den_.size() == 1 && den_.leading().coeff == 1 && den_.leading().mono.degree == 1;
  if (!bare && !den_.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFunction ratfun_add(const RationalFunction& x, const RationalFunction& y, bool reduce_gcd) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den() == y.den()) return RationalFunction(x.num() + y.num(), x.den(), reduce_gcd);
  if (!reduce_gcd) {
    return RationalFunction(x.num() * y.den() + y.num() * x.den(), x.den() * y.den(), false);
  }
  // Add over lcm(den x, den y).
  Polynomial g = gcd(x.den(), y.den());
  Polynomial xd = g.is_one() ? x.den() : *x.den().divide_exact(g);
  Polynomial yd = g.is_one() ? y.den() : *y.den().divide_exact(g);
  return RationalFunction(x.num() * yd + y.num() * xd, x.den() * yd, true);
}

RationalFunction ratfun_mul(const RationalFunction& x, const RationalFunction& y, bool reduce_gcd) {
  if (x.is_zero() || y.is_zero()) return RationalFunction();
  if (!reduce_gcd) return RationalFunction(x.num() * y.num(), x.den() * y.den(), false);
  // Both operands are reduced, so only cross cancellations remain.
  Polynomial g1 = gcd(x.num(), y.den());
  Polynomial g2 = gcd(y.num(), x.den());
  Polynomial xn = g1.is_constant() ? x.num() : *x.num().divide_exact(g1);
  Polynomial yd = g1.is_constant() ? y.den() : *y.den().divide_exact(g1);
  Polynomial yn = g2.is_constant() ? y.num() : *y.num().divide_exact(g2);
  Polynomial xd = g2.is_constant() ? x.den() : *x.den().divide_exact(g2);
  return RationalFunction(xn * yn, xd * yd, true);
}

RationalFunction ratfun_inv(const RationalFunction& x, bool reduce_gcd) {
  if (x.is_zero()) throw SingularValue("inverse of the zero rational function");
  return RationalFunction(x.den(), x.num(), reduce_gcd);
}

RatFunRealm::RatFunRealm(std::vector<std::string> variables, bool reduce_gcd) : reduce_gcd_(reduce_gcd) {
  if (variables.size() + 1 > static_cast<size_t>(kMaxVariables)) {
    throw std::invalid_argument("too many symbolic variables (limit " + std::to_string(kMaxVariables - 1) + ")");
  }
  std::vector<std::string> all{"C"};
  for (auto& v : variables) {
    if (std::find(all.begin(), all.end(), v) != all.end()) throw std::invalid_argument("duplicate variable '" + v + "'");
    all.push_back(std::move(v));
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(all));
}

int RatFunRealm::variable_index(const std::string& name) const {
  auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<int>(it - names_->begin());
}

}  // namespace rowmotion
