#pragma once

#include <functional>
#include <vector>

#include "rowmotion/transfer.hpp"

namespace rowmotion {

/// Stanley-Thomas word of a labeling of [a] x [b]; length a + b.
///   entry k (1 <= k <= a):   g(k,b) * g(k,b-1) * ... * g(k,1)
///   entry a+l (1 <= l <= b): C * inv(g(1,l)) * inv(g(2,l)) * ... * inv(g(a,l))
/// The factor order matters when multiplication does not commute.  In the
/// tropical realm this reads: row sums, and c minus column sums.
template <Realm R>
std::vector<typename R::value_type> st_word(const Poset& rect, const R& r, const Labeling<typename R::value_type>& g) {
  if (!rect.is_rectangle()) throw std::invalid_argument("st_word needs a rectangle poset");
  detail::check_labeling<R>(rect, g);
  const int a = rect.rows();
  const int b = rect.cols();
  std::vector<typename R::value_type> w;
  w.reserve(a + b);
  for (int k = 1; k <= a; ++k) {
    auto acc = g[rect.at(k, b)];
    for (int l = b - 1; l >= 1; --l) acc = r.mul(acc, g[rect.at(k, l)]);
    w.push_back(std::move(acc));
  }
  for (int l = 1; l <= b; ++l) {
    auto acc = r.constant();
    for (int k = 1; k <= a; ++k) {
      Element x = rect.at(k, l);
      acc = r.mul(acc, detail::at_element(x, [&] { return r.inv(g[x]); }));
    }
    w.push_back(std::move(acc));
  }
  return w;
}

/// Cyclic extension: entry j is entry (j mod (a+b)), 1-based.
template <class V>
const V& st_entry(const std::vector<V>& w, long j) {
  const long n = static_cast<long>(w.size());
  long k = ((j - 1) % n + n) % n;
  return w[static_cast<size_t>(k)];
}

/// Rightward cyclic shift: out[1] = w[a+b], out[i] = w[i-1].
template <class V>
std::vector<V> rotate_right(const std::vector<V>& w) {
  std::vector<V> out;
  out.reserve(w.size());
  if (w.empty()) return out;
  out.push_back(w.back());
  out.insert(out.end(), w.begin(), w.end() - 1);
  return out;
}

struct RotationReport {
  bool holds = true;
  std::vector<bool> per_index;  // per_index[i-1]: ST_image(i) == ST_g(i-1)
};

/// Checks ST(image) against the rightward shift of ST(g), index by index.
template <Realm R>
RotationReport check_rotation(const Poset& rect, const R& r, const Labeling<typename R::value_type>& g,
                              const Labeling<typename R::value_type>& image) {
  auto before = st_word(rect, r, g);
  auto after = st_word(rect, r, image);
  auto shifted = rotate_right(before);
  RotationReport rep;
  for (size_t i = 0; i < after.size(); ++i) {
    bool ok = r.eq(after[i], shifted[i]);
    rep.per_index.push_back(ok);
    rep.holds = rep.holds && ok;
  }
  return rep;
}

/// Applies one antichain rowmotion step (in `mode`) and checks the rotation.
template <Realm R>
RotationReport check_rotation(const Poset& rect, const R& r, const Labeling<typename R::value_type>& g,
                              RowmotionMode mode = RowmotionMode::Transfer) {
  return check_rotation(rect, r, g, antichain_rowmotion(rect, r, g, mode));
}

enum class FiberSide { Positive, Negative };

struct FiberRef {
  FiberSide side;
  int index;  // 1-based row (positive) or column (negative)
};

/// Product of labels along a fiber, lower index first: g(k,1)...g(k,b) or g(1,l)...g(a,l).
template <Realm R>
typename R::value_type fiber_product(const Poset& rect, const R& r, const Labeling<typename R::value_type>& g,
                                     FiberRef fiber) {
  const int len = fiber.side == FiberSide::Positive ? rect.cols() : rect.rows();
  const int limit = fiber.side == FiberSide::Positive ? rect.rows() : rect.cols();
  if (fiber.index < 1 || fiber.index > limit) throw std::out_of_range("fiber index out of range");
  auto elem = [&](int t) {
    return fiber.side == FiberSide::Positive ? rect.at(fiber.index, t) : rect.at(t, fiber.index);
  };
  auto acc = g[elem(1)];
  for (int t = 2; t <= len; ++t) acc = r.mul(acc, g[elem(t)]);
  return acc;
}

/// Product over m = 0 .. a+b-1 of the fiber product of BAR^m(g).  For a
/// commutative realm this is C^b on a positive fiber and C^a on a negative one.
template <Realm R>
typename R::value_type fiber_orbit_product(const Poset& rect, const R& r, const Labeling<typename R::value_type>& g,
                                           FiberRef fiber) {
  if (!r.commutative()) throw std::invalid_argument("fiber_orbit_product needs a commutative realm");
  const int n = rect.rows() + rect.cols();
  Labeling<typename R::value_type> cur = g;
  auto acc = fiber_product(rect, r, cur, fiber);
  for (int m = 1; m < n; ++m) {
    try {
      cur = antichain_rowmotion(rect, r, cur);
    } catch (const SingularValue& e) {
      throw e.at_step(m);
    }
    acc = r.mul(acc, fiber_product(rect, r, cur, fiber));
  }
  return acc;
}

/// C^b for a positive fiber, C^a for a negative one.
template <Realm R>
typename R::value_type expected_fiber_orbit_product(const Poset& rect, const R& r, FiberSide side) {
  const int e = side == FiberSide::Positive ? rect.cols() : rect.rows();
  auto acc = r.constant();
  for (int k = 1; k < e; ++k) acc = r.mul(acc, r.constant());
  return acc;
}

}  // namespace rowmotion
