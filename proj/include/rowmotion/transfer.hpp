#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rowmotion/poset.hpp"
#include "rowmotion/realm.hpp"

namespace rowmotion {

/// One realm value per poset element, indexed by element id.
template <class V>
using Labeling = std::vector<V>;

enum class TransferKind { Theta, Nabla, Delta, NablaInv, DeltaInv };
enum class RowmotionMode { Transfer, Toggles };
enum class RowmotionKind { Antichain, Order };
enum class ToggleForm { Closed, Chains };

std::string to_string(TransferKind kind);
std::string to_string(RowmotionMode mode);
TransferKind parse_transfer_kind(const std::string& s);
RowmotionMode parse_mode(const std::string& s);

namespace detail {

// Runs f(), attaching the element id to any SingularValue it throws.
template <class F>
auto at_element(Element x, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SingularValue& e) {
    if (e.element() >= 0) throw;
    throw e.at_element(x);
  }
}

template <Realm R>
typename R::value_type sum_over(const R& r, const std::vector<Element>& elems,
                                const Labeling<typename R::value_type>& f) {
  // Empty sums stand for the label 1 of the adjoined bottom/top element.
  if (elems.empty()) return r.one();
  typename R::value_type acc = f[elems[0]];
  for (size_t k = 1; k < elems.size(); ++k) acc = r.add(acc, f[elems[k]]);
  return acc;
}

template <Realm R>
void check_labeling(const Poset& p, const Labeling<typename R::value_type>& g) {
  if (static_cast<int>(g.size()) != p.size()) {
    throw std::invalid_argument("labeling has " + std::to_string(g.size()) + " values for a poset of " +
                                std::to_string(p.size()) + " elements");
  }
}

}  // namespace detail

/// (Theta f)(x) = C * inv(f(x)).
template <Realm R>
Labeling<typename R::value_type> theta(const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  detail::check_labeling<R>(p, f);
  Labeling<typename R::value_type> out;
  out.reserve(f.size());
  for (Element x = 0; x < p.size(); ++x) {
    out.push_back(detail::at_element(x, [&] { return r.mul(r.constant(), r.inv(f[x])); }));
  }
  return out;
}

/// (Nabla f)(x) = f(x) * inv(sum of f over elements covered by x).
template <Realm R>
Labeling<typename R::value_type> nabla(const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  detail::check_labeling<R>(p, f);
  Labeling<typename R::value_type> out;
  out.reserve(f.size());
  for (Element x = 0; x < p.size(); ++x) {
    out.push_back(detail::at_element(
        x, [&] { return r.mul(f[x], r.inv(detail::sum_over(r, p.lower_covers(x), f))); }));
  }
  return out;
}

/// (Delta f)(x) = inv(sum of f over elements covering x) * f(x).
template <Realm R>
Labeling<typename R::value_type> delta(const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  detail::check_labeling<R>(p, f);
  Labeling<typename R::value_type> out;
  out.reserve(f.size());
  for (Element x = 0; x < p.size(); ++x) {
    out.push_back(detail::at_element(
        x, [&] { return r.mul(r.inv(detail::sum_over(r, p.upper_covers(x), f)), f[x]); }));
  }
  return out;
}

/// (NablaInv f)(x) = f(x) * sum over lower covers y of (NablaInv f)(y),
/// evaluated bottom-up along the linear extension.
template <Realm R>
Labeling<typename R::value_type> nabla_inv(const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  detail::check_labeling<R>(p, f);
  Labeling<typename R::value_type> out(f.size(), r.one());
  for (Element x : p.linear_extension()) out[x] = r.mul(f[x], detail::sum_over(r, p.lower_covers(x), out));
  return out;
}

/// (DeltaInv f)(x) = (sum over upper covers y of (DeltaInv f)(y)) * f(x),
/// evaluated top-down.
template <Realm R>
Labeling<typename R::value_type> delta_inv(const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  detail::check_labeling<R>(p, f);
  Labeling<typename R::value_type> out(f.size(), r.one());
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    out[x] = r.mul(detail::sum_over(r, p.upper_covers(x), out), f[x]);
  }
  return out;
}

template <Realm R>
Labeling<typename R::value_type> transfer(TransferKind kind, const Poset& p, const R& r,
                                          const Labeling<typename R::value_type>& f) {
  switch (kind) {
    case TransferKind::Theta: return theta(p, r, f);
    case TransferKind::Nabla: return nabla(p, r, f);
    case TransferKind::Delta: return delta(p, r, f);
    case TransferKind::NablaInv: return nabla_inv(p, r, f);
    case TransferKind::DeltaInv: return delta_inv(p, r, f);
  }
  throw std::invalid_argument("unknown transfer kind");
}

/// (DeltaInv g)(v) alone: the same recurrence restricted to the up-set of v.
template <Realm R>
typename R::value_type delta_inv_at(const Poset& p, const R& r, const Labeling<typename R::value_type>& g,
                                    Element v) {
  std::vector<std::optional<typename R::value_type>> memo(p.size());
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Element x = *it;
    if (!p.leq(v, x)) continue;
    const auto& ups = p.upper_covers(x);
    typename R::value_type s = ups.empty() ? r.one() : *memo[ups[0]];
    for (size_t k = 1; k < ups.size(); ++k) s = r.add(s, *memo[ups[k]]);
    memo[x] = r.mul(s, g[x]);
    if (x == v) break;
  }
  return *memo[v];
}

/// (NablaInv g)(v) alone, over the down-set of v.
template <Realm R>
typename R::value_type nabla_inv_at(const Poset& p, const R& r, const Labeling<typename R::value_type>& g,
                                    Element v) {
  std::vector<std::optional<typename R::value_type>> memo(p.size());
  for (Element x : p.linear_extension()) {
    if (!p.leq(x, v)) continue;
    const auto& downs = p.lower_covers(x);
    typename R::value_type s = downs.empty() ? r.one() : *memo[downs[0]];
    for (size_t k = 1; k < downs.size(); ++k) s = r.add(s, *memo[downs[k]]);
    memo[x] = r.mul(g[x], s);
    if (x == v) break;
  }
  return *memo[v];
}

/// Saturated chains from a minimal element up to v (bottom first).
std::vector<std::vector<Element>> chains_down_from(const Poset& p, Element v);
/// Saturated chains from v up to a maximal element (v first).
std::vector<std::vector<Element>> chains_up_from(const Poset& p, Element v);

/// NablaInv / DeltaInv by explicit enumeration of saturated chains, each
/// chain contributing f(y_k) ... f(y_2) f(y_1) (top label leftmost).  Exponential
/// in the poset size; used to check the recurrences.
template <Realm R>
Labeling<typename R::value_type> chain_expansion(TransferKind kind, const Poset& p, const R& r,
                                                 const Labeling<typename R::value_type>& f) {
  if (kind != TransferKind::NablaInv && kind != TransferKind::DeltaInv) {
    throw std::invalid_argument("chain_expansion needs NablaInv or DeltaInv");
  }
  Labeling<typename R::value_type> out;
  for (Element x = 0; x < p.size(); ++x) {
    auto chains = kind == TransferKind::NablaInv ? chains_down_from(p, x) : chains_up_from(p, x);
    std::optional<typename R::value_type> total;
    for (const auto& chain : chains) {
      // chain is listed bottom-to-top: y_1 ... y_k.
      typename R::value_type term = f[chain.back()];
      for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) term = r.mul(term, f[*it]);
      total = total ? r.add(*total, term) : term;
    }
    out.push_back(*total);
  }
  return out;
}

/// Whether the chain expansion agrees with the recurrence at every element.
template <Realm R>
bool chain_expansion_check(TransferKind kind, const Poset& p, const R& r, const Labeling<typename R::value_type>& f) {
  auto expanded = chain_expansion(kind, p, r, f);
  auto recurrence = transfer(kind, p, r, f);
  for (size_t x = 0; x < expanded.size(); ++x) {
    if (!r.eq(expanded[x], recurrence[x])) return false;
  }
  return true;
}

/// Antichain toggle at v: only the label at v changes, to
///   C * inv((DeltaInv g)(v)) * inv((NablaInv g)(v)) * g(v)      (Closed)
/// or C * inv(sum over maximal chains through v of
///            [g(y_{c-1}) ... g(y_1)] * [g(y_k) ... g(y_c)])     (Chains, y_c = v).
template <Realm R>
Labeling<typename R::value_type> toggle(const Poset& p, const R& r, const Labeling<typename R::value_type>& g,
                                        Element v, ToggleForm form = ToggleForm::Closed) {
  detail::check_labeling<R>(p, g);
  Labeling<typename R::value_type> out = g;
  out[v] = detail::at_element(v, [&] {
    if (form == ToggleForm::Closed) {
      auto up = delta_inv_at(p, r, g, v);
      auto down = nabla_inv_at(p, r, g, v);
      return r.mul(r.mul(r.mul(r.constant(), r.inv(up)), r.inv(down)), g[v]);
    }
    std::optional<typename R::value_type> total;
    for (const auto& lower : chains_down_from(p, v)) {
      // Product over y_{c-1} ... y_1 (excluding v itself); empty product is one.
      typename R::value_type low = r.one();
      for (auto it = lower.rbegin() + 1; it != lower.rend(); ++it) low = r.mul(low, g[*it]);
      for (const auto& upper : chains_up_from(p, v)) {
        typename R::value_type high = g[upper.back()];
        for (auto it = upper.rbegin() + 1; it != upper.rend(); ++it) high = r.mul(high, g[*it]);
        auto term = r.mul(low, high);
        total = total ? r.add(*total, term) : term;
      }
    }
    return r.mul(r.constant(), r.inv(*total));
  });
  return out;
}

/// Antichain rowmotion Nabla o Theta o DeltaInv, or the equivalent product of
/// toggles applied bottom to top along `order` (default: the poset's own
/// linear extension).
template <Realm R>
Labeling<typename R::value_type> antichain_rowmotion(const Poset& p, const R& r,
                                                     const Labeling<typename R::value_type>& g,
                                                     RowmotionMode mode = RowmotionMode::Transfer,
                                                     const std::vector<Element>* order = nullptr) {
  if (mode == RowmotionMode::Transfer) return nabla(p, r, theta(p, r, delta_inv(p, r, g)));
  const auto& seq = order ? *order : p.linear_extension();
  if (order && !p.is_linear_extension(*order)) throw std::invalid_argument("toggle order is not a linear extension");
  Labeling<typename R::value_type> h = g;
  for (Element v : seq) h = toggle(p, r, h, v);
  return h;
}

/// Order rowmotion Theta o DeltaInv o Nabla.
template <Realm R>
Labeling<typename R::value_type> order_rowmotion(const Poset& p, const R& r,
                                                 const Labeling<typename R::value_type>& g) {
  return theta(p, r, delta_inv(p, r, nabla(p, r, g)));
}

template <class V>
struct ClosedForm {
  Labeling<V> labels;         // first interior factorization
  Labeling<V> labels_second;  // second interior factorization (boundary cases equal)
  bool interior_forms_agree = true;
};

/// One pass of antichain rowmotion on [a] x [b] from the four-case closed
/// forms in terms of D = DeltaInv g:
///   (1,1): C * inv(D(1,1))
///   (1,j): inv(D(1,j)) * D(1,j-1)           (i,1): inv(D(i,1)) * D(i-1,1)
///   (i,j): inv(D(i,j)) * D(i-1,j) * g(i-1,j-1) * inv(D(i-1,j-1)) * D(i,j-1)
///        = inv(D(i,j)) * D(i,j-1) * g(i-1,j-1) * inv(D(i-1,j-1)) * D(i-1,j)
template <Realm R>
ClosedForm<typename R::value_type> closed_form_first_pass(const Poset& rect, const R& r,
                                                          const Labeling<typename R::value_type>& g) {
  if (!rect.is_rectangle()) throw std::invalid_argument("closed_form_first_pass needs a rectangle poset");
  auto d = delta_inv(rect, r, g);
  ClosedForm<typename R::value_type> out;
  out.labels = g;
  out.labels_second = g;
  for (int i = 1; i <= rect.rows(); ++i) {
    for (int j = 1; j <= rect.cols(); ++j) {
      Element x = rect.at(i, j);
      detail::at_element(x, [&] {
        auto dij_inv = r.inv(d[x]);
        if (i == 1 && j == 1) {
          out.labels[x] = r.mul(r.constant(), dij_inv);
          out.labels_second[x] = out.labels[x];
        } else if (i == 1) {
          out.labels[x] = r.mul(dij_inv, d[rect.at(1, j - 1)]);
          out.labels_second[x] = out.labels[x];
        } else if (j == 1) {
          out.labels[x] = r.mul(dij_inv, d[rect.at(i - 1, 1)]);
          out.labels_second[x] = out.labels[x];
        } else {
          const auto& left = d[rect.at(i - 1, j)];
          const auto& right = d[rect.at(i, j - 1)];
          auto middle = r.mul(g[rect.at(i - 1, j - 1)], r.inv(d[rect.at(i - 1, j - 1)]));
          out.labels[x] = r.mul(r.mul(r.mul(dij_inv, left), middle), right);
          out.labels_second[x] = r.mul(r.mul(r.mul(dij_inv, right), middle), left);
          if (!r.eq(out.labels[x], out.labels_second[x])) out.interior_forms_agree = false;
        }
        return 0;
      });
    }
  }
  return out;
}

template <Realm R>
bool labelings_equal(const R& r, const Labeling<typename R::value_type>& x, const Labeling<typename R::value_type>& y) {
  if (x.size() != y.size()) return false;
  for (size_t k = 0; k < x.size(); ++k) {
    if (!r.eq(x[k], y[k])) return false;
  }
  return true;
}

template <class V>
struct Orbit {
  std::vector<Labeling<V>> labelings;  // labelings[m] = rowmotion^m(g)
  std::optional<int> period;           // first m >= 1 returning to g, if within the bound
};

/// Applies rowmotion up to `steps` times, stopping at the first return to the
/// starting labeling.  On return, labelings holds exactly `period` entries.
template <Realm R>
Orbit<typename R::value_type> iterate(const Poset& p, const R& r, const Labeling<typename R::value_type>& g,
                                      int steps, RowmotionMode mode = RowmotionMode::Transfer,
                                      RowmotionKind kind = RowmotionKind::Antichain) {
  Orbit<typename R::value_type> orbit;
  orbit.labelings.push_back(g);
  Labeling<typename R::value_type> cur = g;
  for (int m = 1; m <= steps; ++m) {
    try {
      cur = kind == RowmotionKind::Antichain ? antichain_rowmotion(p, r, cur, mode) : order_rowmotion(p, r, cur);
    } catch (const SingularValue& e) {
      throw e.at_step(m);
    }
    if (labelings_equal(r, cur, g)) {
      orbit.period = m;
      return orbit;
    }
    orbit.labelings.push_back(cur);
  }
  return orbit;
}

}  // namespace rowmotion
