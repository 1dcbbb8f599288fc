#include "rowmotion/combinatorial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rowmotion {

namespace {

bool set_order(const ElementSet& x, const ElementSet& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::vector<bool> membership(const Poset& p, const ElementSet& s) {
  std::vector<bool> in(p.size(), false);
  for (Element x : s) {
    if (x < 0 || x >= p.size()) throw std::invalid_argument("element id out of range");
    in[x] = true;
  }
  return in;
}

}  // namespace

bool is_antichain(const Poset& p, const ElementSet& s) {
  for (size_t u = 0; u < s.size(); ++u) {
    for (size_t v = u + 1; v < s.size(); ++v) {
      if (p.comparable(s[u], s[v])) return false;
    }
  }
  return std::is_sorted(s.begin(), s.end()) && std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool is_order_ideal(const Poset& p, const ElementSet& s) {
  auto in = membership(p, s);
  for (Element x : s) {
    for (Element y : p.lower_covers(x)) {
      if (!in[y]) return false;
    }
  }
  return true;
}

bool is_order_filter(const Poset& p, const ElementSet& s) {
  auto in = membership(p, s);
  for (Element x : s) {
    for (Element y : p.upper_covers(x)) {
      if (!in[y]) return false;
    }
  }
  return true;
}

std::vector<Antichain> enumerate_antichains(const Poset& p) {
  std::vector<Antichain> out;
  Antichain current;
  std::function<void(Element)> extend = [&](Element from) {
    out.push_back(current);
    for (Element x = from; x < p.size(); ++x) {
      bool ok = std::none_of(current.begin(), current.end(),
                             [&](Element y) { return p.comparable(x, y); });
      if (!ok) continue;
      current.push_back(x);
      extend(x + 1);
      current.pop_back();
    }
  };
  extend(0);
  std::sort(out.begin(), out.end(), set_order);
  return out;
}

std::vector<Antichain> brute_force_antichains(const Poset& p) {
  const int n = p.size();
  if (n > 20) throw std::invalid_argument("brute_force_antichains: poset too large");
  std::vector<Antichain> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Antichain s;
    for (int x = 0; x < n; ++x) {
      if (mask & (1U << x)) s.push_back(x);
    }
    bool ok = true;
    for (size_t u = 0; u < s.size() && ok; ++u) {
      for (size_t v = 0; v < s.size() && ok; ++v) {
        if (u != v && p.leq(s[u], s[v])) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), set_order);
  return out;
}

OrderIdeal downward_saturation(const Poset& p, const Antichain& a) {
  if (!is_antichain(p, a)) throw std::invalid_argument("downward_saturation: input is not an antichain");
  OrderIdeal out;
  for (Element x = 0; x < p.size(); ++x) {
    if (std::any_of(a.begin(), a.end(), [&](Element y) { return p.leq(x, y); })) out.push_back(x);
  }
  return out;
}

OrderFilter complement(const Poset& p, const OrderIdeal& ideal) {
  if (!is_order_ideal(p, ideal)) throw std::invalid_argument("complement: input is not an order ideal");
  auto in = membership(p, ideal);
  OrderFilter out;
  for (Element x = 0; x < p.size(); ++x) {
    if (!in[x]) out.push_back(x);
  }
  return out;
}

Antichain minimal_elements(const Poset& p, const OrderFilter& filter) {
  if (!is_order_filter(p, filter)) throw std::invalid_argument("minimal_elements: input is not an order filter");
  auto in = membership(p, filter);
  Antichain out;
  for (Element x : filter) {
    const auto& below = p.lower_covers(x);
    if (std::none_of(below.begin(), below.end(), [&](Element y) { return in[y]; })) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Antichain rowmotion_antichain(const Poset& p, const Antichain& a) {
  return minimal_elements(p, complement(p, downward_saturation(p, a)));
}

std::vector<int> st_word_binary(const Poset& rect, const Antichain& a) {
  const int rows = rect.rows();
  const int cols = rect.cols();
  std::vector<int> w(rows + cols, 0);
  std::vector<bool> hits_row(rows + 1, false);
  std::vector<bool> hits_col(cols + 1, false);
  for (Element x : a) {
    Cell c = rect.cell(x);
    hits_row[c.i] = true;
    hits_col[c.j] = true;
  }
  for (int k = 1; k <= rows; ++k) w[k - 1] = hits_row[k] ? 1 : 0;
  for (int l = 1; l <= cols; ++l) w[rows + l - 1] = hits_col[l] ? 0 : 1;
  return w;
}

std::vector<int> st_word_binary_from_sums(const Poset& rect, const Antichain& a) {
  const int rows = rect.rows();
  const int cols = rect.cols();
  auto in = membership(rect, a);
  std::vector<int> w(rows + cols, 0);
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) w[i - 1] += in[rect.at(i, j)] ? 1 : 0;
  }
  for (int l = 1; l <= cols; ++l) {
    int s = 0;
    for (int k = 1; k <= rows; ++k) s += in[rect.at(k, l)] ? 1 : 0;
    w[rows + l - 1] = 1 - s;
  }
  return w;
}

std::vector<CombinatorialOrbit> combinatorial_orbits(const Poset& rect) {
  const int rows = rect.rows();
  const int cols = rect.cols();
  std::vector<Antichain> all = enumerate_antichains(rect);
  std::set<Antichain> seen;
  std::vector<CombinatorialOrbit> orbits;
  // Lexicographic (not size-first) representative.
  std::vector<Antichain> lex = all;
  std::sort(lex.begin(), lex.end());
  for (const Antichain& start : lex) {
    if (seen.count(start)) continue;
    CombinatorialOrbit orbit;
    Antichain cur = start;
    do {
      seen.insert(cur);
      orbit.antichains.push_back(cur);
      orbit.st_words.push_back(st_word_binary(rect, cur));
      cur = rowmotion_antichain(rect, cur);
    } while (cur != start);

    const long k = orbit.period();
    long card = 0;
    std::vector<long> pos(rows, 0), neg(cols, 0);
    for (const Antichain& a : orbit.antichains) {
      card += static_cast<long>(a.size());
      for (Element x : a) {
        Cell c = rect.cell(x);
        ++pos[c.i - 1];
        ++neg[c.j - 1];
      }
    }
    orbit.cardinality_avg = mpq_class(card, k);
    orbit.cardinality_avg.canonicalize();
    for (long v : pos) {
      mpq_class q(v, k);
      q.canonicalize();
      orbit.positive_fiber_avgs.push_back(q);
    }
    for (long v : neg) {
      mpq_class q(v, k);
      q.canonicalize();
      orbit.negative_fiber_avgs.push_back(q);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string format_set(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += p.name(s[k]);
  }
  return out + "}";
}

}  // namespace rowmotion
