#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "rowmotion/modp.hpp"
#include "rowmotion/realm.hpp"

namespace rowmotion {

/// Coefficients in F_p.
struct PrimeFieldOps {
  using value = modp::u64;
  modp::Field field{};

  value zero() const { return 0; }
  value one() const { return 1; }
  value from_int(long v) const { return field.from_int(v); }
  value add(value x, value y) const { return field.add(x, y); }
  value sub(value x, value y) const { return field.sub(x, y); }
  value mul(value x, value y) const { return field.mul(x, y); }
  value inv(value x) const { return field.inv(x); }
  bool is_zero(value x) const { return x == 0; }
  std::string to_string(value x) const { return std::to_string(x); }
};

/// Coefficients in Q, kept in lowest terms by GMP.
struct RationalOps {
  using value = mpq_class;

  value zero() const { return 0; }
  value one() const { return 1; }
  value from_int(long v) const { return v; }
  value add(const value& x, const value& y) const { return x + y; }
  value sub(const value& x, const value& y) const { return x - y; }
  value mul(const value& x, const value& y) const { return x * y; }
  value inv(const value& x) const { return 1 / x; }
  bool is_zero(const value& x) const { return sgn(x) == 0; }
  std::string to_string(const value& x) const { return x.get_str(); }
};

/// Square matrix, row-major.
template <class Coeff>
struct Matrix {
  int dim = 0;
  std::vector<Coeff> entries;

  const Coeff& operator()(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }
  Coeff& operator()(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// d x d matrices over a coefficient field; the central constant is c * I.
///
/// Matrix algebras stand in for a skew field: an identity of noncommutative
/// rational expressions is accepted when it holds on many random matrices at
/// several sizes.
template <class Ops>
class MatrixRealm {
 public:
  using coeff = typename Ops::value;
  using value_type = Matrix<coeff>;

  MatrixRealm(int d, coeff c, Ops ops = {}) : d_(d), c_(std::move(c)), ops_(std::move(ops)) {
    if (d < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  int dim() const { return d_; }
  const coeff& c() const { return c_; }
  const Ops& ops() const { return ops_; }
  bool commutative() const { return d_ == 1; }
  bool tropical() const { return false; }

  value_type zero() const { return value_type{d_, std::vector<coeff>(static_cast<size_t>(d_) * d_, ops_.zero())}; }
  value_type scalar(const coeff& s) const {
    value_type m = zero();
    for (int k = 0; k < d_; ++k) m(k, k) = s;
    return m;
  }
  value_type one() const { return scalar(ops_.one()); }
  value_type from_int(long v) const { return scalar(ops_.from_int(v)); }
  value_type constant() const { return scalar(c_); }
  value_type from_entries(std::vector<coeff> e) const {
    if (e.size() != static_cast<size_t>(d_) * d_) throw std::invalid_argument("matrix entry count does not match d*d");
    return value_type{d_, std::move(e)};
  }

  value_type add(const value_type& x, const value_type& y) const {
    check(x, y);
    value_type r = x;
    for (size_t k = 0; k < r.entries.size(); ++k) r.entries[k] = ops_.add(x.entries[k], y.entries[k]);
    return r;
  }

  value_type mul(const value_type& x, const value_type& y) const {
    check(x, y);
    value_type r = zero();
    for (int i = 0; i < d_; ++i) {
      for (int k = 0; k < d_; ++k) {
        const coeff& xik = x(i, k);
        if (ops_.is_zero(xik)) continue;
        for (int j = 0; j < d_; ++j) r(i, j) = ops_.add(r(i, j), ops_.mul(xik, y(k, j)));
      }
    }
    return r;
  }

  /// Gauss-Jordan elimination; throws SingularValue on a zero pivot column.
  value_type inv(const value_type& x) const {
    check(x, x);
    value_type m = x;
    value_type r = one();
    for (int col = 0; col < d_; ++col) {
      int pivot = -1;
      for (int row = col; row < d_; ++row) {
        if (!ops_.is_zero(m(row, col))) {
          pivot = row;
          break;
        }
      }
      if (pivot < 0) throw SingularValue("matrix is not invertible");
      if (pivot != col) {
        for (int j = 0; j < d_; ++j) {
          std::swap(m(pivot, j), m(col, j));
          std::swap(r(pivot, j), r(col, j));
        }
      }
      coeff scale = ops_.inv(m(col, col));
      for (int j = 0; j < d_; ++j) {
        m(col, j) = ops_.mul(m(col, j), scale);
        r(col, j) = ops_.mul(r(col, j), scale);
      }
      for (int row = 0; row < d_; ++row) {
        if (row == col || ops_.is_zero(m(row, col))) continue;
        coeff factor = m(row, col);
        for (int j = 0; j < d_; ++j) {
          m(row, j) = ops_.sub(m(row, j), ops_.mul(factor, m(col, j)));
          r(row, j) = ops_.sub(r(row, j), ops_.mul(factor, r(col, j)));
        }
      }
    }
    return r;
  }

  bool eq(const value_type& x, const value_type& y) const { return x == y; }

  std::string to_string(const value_type& x) const {
    std::string out = "[";
    for (int i = 0; i < d_; ++i) {
      out += i ? ",[" : "[";
      for (int j = 0; j < d_; ++j) {
        if (j) out += ",";
        out += ops_.to_string(x(i, j));
      }
      out += "]";
    }
    return out + "]";
  }

 private:
  void check(const value_type& x, const value_type& y) const {
    if (x.dim != d_ || y.dim != d_) throw std::invalid_argument("matrix dimension mismatch");
  }

  int d_;
  coeff c_;
  Ops ops_;
};

using MatPRealm = MatrixRealm<PrimeFieldOps>;
using MatQRealm = MatrixRealm<RationalOps>;

inline MatPRealm make_matp_realm(int d, modp::u64 c, modp::u64 p = modp::kMersenne61) {
  return MatPRealm(d, c % p, PrimeFieldOps{modp::Field(p)});
}

}  // namespace rowmotion
