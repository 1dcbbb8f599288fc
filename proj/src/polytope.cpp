#include "rowmotion/polytope.hpp"

#include <functional>
#include <stdexcept>

namespace rowmotion {

std::string to_string(PolytopeKind kind) {
  switch (kind) {
    case PolytopeKind::Order:
      return "order";
    case PolytopeKind::OrderReversing:
      return "order-reversing";
    case PolytopeKind::Chain:
      return "chain";
  }
  return "?";
}

PolytopeKind parse_polytope_kind(const std::string& s) {
  if (s == "order") return PolytopeKind::Order;
  if (s == "order-reversing") return PolytopeKind::OrderReversing;
  if (s == "chain") return PolytopeKind::Chain;
  throw std::invalid_argument("unknown polytope kind '" + s + "'");
}

std::vector<std::vector<Element>> maximal_chains(const Poset& p) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur;
  std::function<void(Element)> walk = [&](Element x) {
    cur.push_back(x);
    if (p.upper_covers(x).empty()) {
      out.push_back(cur);
    } else {
      for (Element y : p.upper_covers(x)) walk(y);
    }
    cur.pop_back();
  };
  for (Element m : p.minimal_elements()) walk(m);
  return out;
}

mpq_class max_chain_sum(const Poset& p, const std::vector<mpq_class>& g) {
  if (g.size() != static_cast<size_t>(p.size())) throw std::invalid_argument("labeling size does not match poset");
  std::vector<mpq_class> best(p.size());
  mpq_class top = 0;
  for (Element x : p.linear_extension()) {
    mpq_class below = 0;
    bool any = false;
    for (Element y : p.lower_covers(x)) {
      if (!any || best[y] > below) below = best[y];
      any = true;
    }
    best[x] = below + g[x];
    if (x == p.linear_extension().front() || best[x] > top) top = best[x];
  }
  return top;
}

bool polytope_membership(PolytopeKind kind, const Poset& p, const std::vector<mpq_class>& g) {
  if (g.size() != static_cast<size_t>(p.size())) throw std::invalid_argument("labeling size does not match poset");
  for (const auto& v : g) {
    if (v < 0) return false;
    if (kind != PolytopeKind::Chain && v > 1) return false;
  }
  switch (kind) {
    case PolytopeKind::Order:
      for (auto [lo, hi] : p.cover_pairs()) {
        if (g[lo] > g[hi]) return false;
      }
      return true;
    case PolytopeKind::OrderReversing:
      for (auto [lo, hi] : p.cover_pairs()) {
        if (g[lo] < g[hi]) return false;
      }
      return true;
    case PolytopeKind::Chain:
      for (const auto& chain : maximal_chains(p)) {
        mpq_class s = 0;
        for (Element x : chain) s += g[x];
        if (s > 1) return false;
      }
      return true;
  }
  return false;
}

std::vector<mpq_class> indicator(const Poset& p, const ElementSet& s) {
  std::vector<mpq_class> g(p.size(), mpq_class(0));
  for (Element x : s) g.at(x) = 1;
  return g;
}

std::optional<ElementSet> support_of_indicator(const std::vector<mpq_class>& g) {
  ElementSet s;
  for (size_t x = 0; x < g.size(); ++x) {
    if (g[x] == 1) {
      s.push_back(static_cast<Element>(x));
    } else if (g[x] != 0) {
      return std::nullopt;
    }
  }
  return s;
}

}  // namespace rowmotion
