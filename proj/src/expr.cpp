#include "rowmotion/expr.hpp"

#include <cctype>

namespace rowmotion {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprError("expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  ExprPtr sum() {
    ExprPtr e = product();
    while (accept('+')) e = make_add(e, product());
    return e;
  }

  ExprPtr product() {
    ExprPtr e = power();
    for (;;) {
      if (accept('*')) {
        e = make_mul(e, power());
      } else if (accept('/')) {
        e = make_mul(e, make_inv(power()));
      } else {
        return e;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    skip();
    bool negative = accept('-');
    skip();
    long n = 0;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
    if (pos_ == start) fail("expected exponent");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->integer = negative ? -n : n;
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      ExprPtr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      long n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + (s_[pos_++] - '0');
      }
      return make_integer(n);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_++];
      }
      if (name == "inv" && accept('(')) {
        ExprPtr e = sum();
        if (!accept(')')) fail("expected ')' after inv argument");
        return make_inv(e);
      }
      return make_name(std::move(name));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

ExprPtr make_nary(Expr::Kind kind, ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  for (const ExprPtr& part : {x, y}) {
    if (part->kind == kind) {
      e->args.insert(e->args.end(), part->args.begin(), part->args.end());
    } else {
      e->args.push_back(part);
    }
  }
  return e;
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

ExprPtr make_integer(long v) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Integer;
  e->integer = v;
  return e;
}

ExprPtr make_name(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Name;
  e->name = std::move(name);
  return e;
}

ExprPtr make_add(ExprPtr x, ExprPtr y) { return make_nary(Expr::Kind::Add, std::move(x), std::move(y)); }
ExprPtr make_mul(ExprPtr x, ExprPtr y) { return make_nary(Expr::Kind::Mul, std::move(x), std::move(y)); }

ExprPtr make_inv(ExprPtr x) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Inv;
  e->args = {std::move(x)};
  return e;
}

std::string expr_to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer:
      return std::to_string(e.integer);
    case Expr::Kind::Name:
      return e.name;
    case Expr::Kind::Add:
    case Expr::Kind::Mul: {
      std::string out = "(";
      for (size_t k = 0; k < e.args.size(); ++k) {
        if (k) out += e.kind == Expr::Kind::Add ? "+" : "*";
        out += expr_to_string(*e.args[k]);
      }
      return out + ")";
    }
    case Expr::Kind::Inv:
      return "inv(" + expr_to_string(*e.args[0]) + ")";
    case Expr::Kind::Pow:
      return "(" + expr_to_string(*e.args[0]) + ")^" + std::to_string(e.integer);
  }
  return "?";
}

}  // namespace rowmotion
