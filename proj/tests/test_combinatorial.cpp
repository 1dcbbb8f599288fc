#include <doctest.h>

#include <set>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/kernels.hpp"
#include "rowmotion/polytope.hpp"
#include "rowmotion/stword.hpp"
#include "rowmotion/tropical.hpp"

using namespace rowmotion;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Antichain cells(const Poset& p, std::initializer_list<std::pair<int, int>> list) {
  Antichain s;
  for (auto [i, j] : list) s.push_back(p.at(i, j));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("enumerate_antichains agrees with brute force") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Poset p = product_of_chains(a, b);
      auto fast = enumerate_antichains(p);
      auto slow = brute_force_antichains(p);
      CHECK(std::set<Antichain>(fast.begin(), fast.end()) == std::set<Antichain>(slow.begin(), slow.end()));
      CHECK(static_cast<long>(fast.size()) == binomial(a + b, a));
      CHECK(std::set<Antichain>(fast.begin(), fast.end()).size() == fast.size());
      for (const auto& s : fast) CHECK(is_antichain(p, s));
      for (size_t k = 1; k < fast.size(); ++k) {
        const auto& x = fast[k - 1];
        const auto& y = fast[k];
        CHECK((x.size() < y.size() || (x.size() == y.size() && x < y)));
      }
    }
  }
  CHECK(enumerate_antichains(product_of_chains(2, 2)).size() == 6);
  CHECK(brute_force_antichains(product_of_chains(3, 5)).size() == 56);
  auto single = enumerate_antichains(product_of_chains(1, 1));
  CHECK(single == std::vector<Antichain>{{}, {0}});
}

TEST_CASE("the three rowmotion maps on the [3]x[5] example") {
  const Poset p = product_of_chains(3, 5);
  const Antichain a = cells(p, {{2, 4}, {3, 1}});
  const OrderIdeal ideal = downward_saturation(p, a);
  CHECK(ideal.size() == 9);
  CHECK(is_order_ideal(p, ideal));
  CHECK(minimal_elements(p, complement(p, ideal)) == cells(p, {{1, 5}, {3, 2}}));
  const OrderFilter filter = complement(p, ideal);
  CHECK(filter == cells(p, {{1, 5}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {3, 5}}));
  CHECK(is_order_filter(p, filter));
  CHECK(rowmotion_antichain(p, a) == cells(p, {{1, 5}, {3, 2}}));
  CHECK(st_word_binary(p, a) == std::vector<int>{0, 1, 1, 0, 1, 1, 0, 1});
  CHECK(st_word_binary(p, rowmotion_antichain(p, a)) == std::vector<int>{1, 0, 1, 1, 0, 1, 1, 0});
}

TEST_CASE("saturation, complement and minimal elements: edge cases and errors") {
  const Poset sq = product_of_chains(2, 2);
  CHECK(downward_saturation(sq, {}).empty());
  CHECK(downward_saturation(sq, {sq.at(2, 2)}).size() == 4);
  CHECK(complement(sq, {}).size() == 4);
  CHECK(complement(sq, {0, 1, 2, 3}).empty());
  CHECK(minimal_elements(sq, {0, 1, 2, 3}) == Antichain{sq.at(1, 1)});
  CHECK(minimal_elements(sq, {}).empty());
  CHECK(rowmotion_antichain(sq, {}) == Antichain{sq.at(1, 1)});

  CHECK_THROWS_AS(downward_saturation(sq, {sq.at(1, 1), sq.at(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(complement(sq, {sq.at(2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(minimal_elements(sq, {sq.at(1, 1)}), std::invalid_argument);
}

TEST_CASE("ST words: both definitions agree and rotate, a,b <= 4") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Poset p = product_of_chains(a, b);
      for (const auto& s : enumerate_antichains(p)) {
        auto w = st_word_binary(p, s);
        CHECK(w == st_word_binary_from_sums(p, s));
        CHECK(st_word_binary(p, rowmotion_antichain(p, s)) == rotate_right(w));
      }
      std::vector<int> empty_word(a, 0);
      empty_word.insert(empty_word.end(), b, 1);
      CHECK(st_word_binary(p, {}) == empty_word);
    }
  }
}

TEST_CASE("rowmotion is a bijection of period dividing a+b, a,b <= 5") {
  for (const auto& c : combinatorial_periodicity(5, 5, Execution::Serial)) {
    INFO("a=" << c.a << " b=" << c.b);
    CHECK(c.periodic);
    CHECK(c.rotation);
    CHECK(c.bijective);
    CHECK(c.antichains == binomial(c.a + c.b, c.a));
  }
}

TEST_CASE("orbit census and homomesy") {
  auto sq = combinatorial_orbits(product_of_chains(2, 2));
  REQUIRE(sq.size() == 2);
  std::multiset<int> sizes{sq[0].period(), sq[1].period()};
  CHECK(sizes == std::multiset<int>{2, 4});
  for (const auto& o : sq) {
    CHECK(o.cardinality_avg == 1);
    for (const auto& v : o.positive_fiber_avgs) CHECK(v == mpq_class(1, 2));
    for (const auto& v : o.negative_fiber_avgs) CHECK(v == mpq_class(1, 2));
  }

  auto one = combinatorial_orbits(product_of_chains(1, 1));
  REQUIRE(one.size() == 1);
  CHECK(one[0].period() == 2);
  CHECK(one[0].cardinality_avg == mpq_class(1, 2));

  for (const auto& o : combinatorial_orbits(product_of_chains(2, 3))) CHECK(o.cardinality_avg == mpq_class(6, 5));

  // Orbits partition everything; representatives are the least member.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Poset p = product_of_chains(a, b);
      std::set<Antichain> seen;
      for (const auto& o : combinatorial_orbits(p)) {
        for (const auto& s : o.antichains) {
          CHECK(seen.insert(s).second);
          CHECK_FALSE(s < o.antichains.front());
        }
        CHECK(rowmotion_antichain(p, o.antichains.back()) == o.antichains.front());
        mpq_class expected(a * b, a + b);
        expected.canonicalize();
        CHECK(o.cardinality_avg == expected);
      }
      CHECK(static_cast<long>(seen.size()) == binomial(a + b, a));
    }
  }
}

TEST_CASE("tropical rowmotion on antichain indicators is combinatorial rowmotion, a,b <= 3") {
  const TropicalRealm r(1);
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const Poset p = product_of_chains(a, b);
      for (const auto& s : enumerate_antichains(p)) {
        const auto g = indicator(p, s);
        CHECK(polytope_membership(PolytopeKind::Chain, p, g));
        const auto want = indicator(p, rowmotion_antichain(p, s));
        CHECK(antichain_rowmotion(p, r, g, RowmotionMode::Transfer) == want);
        CHECK(antichain_rowmotion(p, r, g, RowmotionMode::Toggles) == want);
        // Tropical ST word of an indicator is the binary word.
        auto w = st_word(p, r, g);
        auto bits = st_word_binary(p, s);
        for (size_t k = 0; k < w.size(); ++k) CHECK(w[k] == bits[k]);
      }
    }
  }
}
