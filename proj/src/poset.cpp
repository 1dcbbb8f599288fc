#include "rowmotion/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace rowmotion {

namespace {

// Kahn's algorithm with a min-heap so that ties resolve to the smallest id.
std::optional<std::vector<Element>> topological_order(
    int n, const std::vector<std::vector<Element>>& upper) {
  std::vector<int> indegree(n, 0);
  for (const auto& ups : upper) {
    for (Element y : ups) ++indegree[y];
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element y : upper[x]) {
      if (--indegree[y] == 0) ready.push(y);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace

std::optional<Element> Poset::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

std::vector<std::pair<Element, Element>> Poset::cover_pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size(); ++x) {
    for (Element y : upper_[x]) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (lower_[x].empty()) out.push_back(x);
  }
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (upper_[x].empty()) out.push_back(x);
  }
  return out;
}

bool Poset::is_linear_extension(const std::vector<Element>& order) const {
  if (static_cast<int>(order.size()) != size()) return false;
  std::vector<int> position(size(), -1);
  for (int k = 0; k < size(); ++k) {
    Element x = order[k];
    if (x < 0 || x >= size() || position[x] != -1) return false;
    position[x] = k;
  }
  for (Element x = 0; x < size(); ++x) {
    for (Element y : upper_[x]) {
      if (position[x] > position[y]) return false;
    }
  }
  return true;
}

Element Poset::at(int i, int j) const {
  if (!is_rectangle() || i < 1 || i > rect_a_ || j < 1 || j > rect_b_) {
    throw std::out_of_range("rectangle coordinate (" + std::to_string(i) + "," +
                            std::to_string(j) + ") out of range");
  }
  return (i - 1) + rect_a_ * (j - 1);
}

Cell Poset::cell(Element x) const {
  if (!is_rectangle()) throw std::logic_error("cell() on a non-rectangle poset");
  return Cell{x % rect_a_ + 1, x / rect_a_ + 1};
}

Poset build_poset(std::vector<std::string> names,
                  const std::vector<std::pair<Element, Element>>& covers) {
  const int n = static_cast<int>(names.size());
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) throw PosetError("duplicate element '" + name + "'");
    }
  }
  std::set<std::pair<Element, Element>> unique;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
      throw PosetError("cover references an undeclared element");
    }
    if (lo == hi) throw PosetError("cycle detected: self-cover on '" + names[lo] + "'");
    if (!unique.insert({lo, hi}).second) {
      throw PosetError("duplicate cover (" + names[lo] + ", " + names[hi] + ")");
    }
  }

  std::vector<std::vector<Element>> upper(n);
  for (auto [lo, hi] : unique) upper[lo].push_back(hi);
  auto order = topological_order(n, upper);
  if (!order) throw PosetError("cycle detected in cover relation");

  BitRelation leq(n);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    Element x = *it;
    leq.set(x, x);
    for (Element y : upper[x]) leq.merge_row(x, y);
  }

  Poset p;
  p.names_ = std::move(names);
  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (auto [lo, hi] : unique) {
    bool implied = false;
    for (Element z : upper[lo]) {
      if (z != hi && leq.test(z, hi)) {
        implied = true;
        break;
      }
    }
    if (!implied) {
      p.upper_[lo].push_back(hi);
      p.lower_[hi].push_back(lo);
    }
  }
  for (auto& v : p.upper_) std::sort(v.begin(), v.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());
  p.leq_ = std::move(leq);
  // Reduction does not change reachability, so the earlier order still works.
  p.linear_extension_ = *topological_order(n, p.upper_);
  return p;
}

Poset build_poset(const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::string> names;
  std::map<std::string, Element> ids;
  auto intern = [&](const std::string& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<Element>(names.size()));
    if (inserted) names.push_back(s);
    return it->second;
  };
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& [lo, hi] : covers) {
    Element l = intern(lo);
    Element h = intern(hi);
    pairs.emplace_back(l, h);
  }
  return build_poset(std::move(names), pairs);
}

Poset product_of_chains(int a, int b) {
  if (a < 1 || b < 1) {
    throw PosetError("product_of_chains requires a >= 1 and b >= 1");
  }
  std::vector<std::string> names(static_cast<size_t>(a) * b);
  auto id = [a](int i, int j) { return (i - 1) + a * (j - 1); };
  std::vector<std::pair<Element, Element>> covers;
  for (int j = 1; j <= b; ++j) {
    for (int i = 1; i <= a; ++i) {
      names[id(i, j)] = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i < a) covers.emplace_back(id(i, j), id(i + 1, j));
      if (j < b) covers.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  Poset p = build_poset(std::move(names), covers);
  p.rect_a_ = a;
  p.rect_b_ = b;
  return p;
}

Poset chain_poset(int n) {
  if (n < 1) throw PosetError("chain_poset requires n >= 1");
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> covers;
  for (int k = 0; k < n; ++k) {
    names.push_back(std::to_string(k));
    if (k + 1 < n) covers.emplace_back(k, k + 1);
  }
  return build_poset(std::move(names), covers);
}

std::vector<std::vector<bool>> brute_force_closure(
    int n, const std::vector<std::pair<Element, Element>>& relations) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) r[x][x] = true;
  for (auto [x, y] : relations) r[x][y] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!r[x][y]) continue;
        for (int z = 0; z < n; ++z) {
          if (r[y][z] && !r[x][z]) {
            r[x][z] = true;
            changed = true;
          }
        }
      }
    }
  }
  return r;
}

Fibers fibers(const Poset& rect) {
  if (!rect.is_rectangle()) throw std::invalid_argument("fibers() needs a rectangle poset");
  Fibers f;
  f.positive.resize(rect.rows());
  f.negative.resize(rect.cols());
  for (int i = 1; i <= rect.rows(); ++i) {
    for (int j = 1; j <= rect.cols(); ++j) {
      f.positive[i - 1].push_back(rect.at(i, j));
      f.negative[j - 1].push_back(rect.at(i, j));
    }
  }
  return f;
}

}  // namespace rowmotion
