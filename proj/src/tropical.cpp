#include "rowmotion/tropical.hpp"

#include <cctype>
#include <stdexcept>

namespace rowmotion {

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw std::invalid_argument("mixed decimal and fraction");
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (frac.empty()) frac = "0";
      for (char ch : whole + frac) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad digit");
      }
      mpz_class num(whole + frac, 10);
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      mpq_class q(num, den);
      q.canonicalize();
      return negative ? mpq_class(-q) : q;
    }
    mpq_class q(s, 10);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

}  // namespace rowmotion
