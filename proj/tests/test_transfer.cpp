#include <doctest.h>

#include <random>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/expr.hpp"
#include "rowmotion/polytope.hpp"
#include "rowmotion/sampling.hpp"
#include "rowmotion/stword.hpp"
#include "rowmotion/transfer.hpp"
#include "rowmotion/tropical.hpp"

using namespace rowmotion;
using modp::u64;

namespace {

using MatLabels = Labeling<Matrix<u64>>;

Poset random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back("p" + std::to_string(k));
  std::vector<std::pair<Element, Element>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (rng() % 3 == 0) edges.emplace_back(x, y);
  return build_poset(names, edges);
}

MatLabels random_labels(const Poset& p, const MatPRealm& r, std::uint64_t seed) {
  Rng rng(seed);
  return random_matp_labeling(p, r, rng);
}

MatPRealm random_realm(int d, std::uint64_t seed) {
  Rng rng(seed);
  return make_matp_realm(d, 1 + rng.below(modp::kMersenne61 - 1));
}

mpq_class tropicalize(const Polynomial& f, const std::vector<mpq_class>& point) {
  REQUIRE_FALSE(f.is_zero());
  std::optional<mpq_class> best;
  for (const auto& t : f.terms()) {
    REQUIRE(t.coeff > 0);
    mpq_class v = 0;
    for (size_t k = 0; k < point.size(); ++k) v += point[k] * t.mono.exp[k];
    if (!best || v > *best) best = v;
  }
  return *best;
}

RationalFunction sym(const SymbolicSample& s, const std::string& text) { return evaluate(text, s.realm, {}); }

}  // namespace

TEST_CASE("transfer inverse pairs on random posets, d = 1..3") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = trial % 3 == 0 ? product_of_chains(1 + trial % 4, 1 + trial % 3) : random_poset(rng, 1 + rng() % 8);
    const int d = 1 + trial % 3;
    const MatPRealm r = random_realm(d, rng());
    const MatLabels f = random_labels(p, r, rng());
    CHECK(labelings_equal(r, delta(p, r, delta_inv(p, r, f)), f));
    CHECK(labelings_equal(r, delta_inv(p, r, delta(p, r, f)), f));
    CHECK(labelings_equal(r, nabla(p, r, nabla_inv(p, r, f)), f));
    CHECK(labelings_equal(r, nabla_inv(p, r, nabla(p, r, f)), f));
    CHECK(labelings_equal(r, theta(p, r, theta(p, r, f)), f));
  }
  const auto s = symbolic_labeling(product_of_chains(2, 3));
  const Poset p = product_of_chains(2, 3);
  CHECK(labelings_equal(s.realm, delta(p, s.realm, delta_inv(p, s.realm, s.labels)), s.labels));
  CHECK(labelings_equal(s.realm, nabla(p, s.realm, nabla_inv(p, s.realm, s.labels)), s.labels));
}

TEST_CASE("transfer maps on the symbolic [2]x[3] labeling") {
  const Poset p = product_of_chains(2, 3);
  const auto s = symbolic_labeling(p);
  const auto d = delta_inv(p, s.realm, s.labels);
  CHECK(d[p.at(1, 1)].equals(sym(s, "u*(v*x+w*x+w*y)*z")));
  CHECK(d[p.at(2, 3)].equals(sym(s, "z")));
  const auto t = theta(p, s.realm, d);
  CHECK(t[p.at(2, 3)].equals(sym(s, "C/z")));
  // Empty sums are one: a minimal element keeps its label under NablaInv.
  CHECK(nabla_inv(p, s.realm, s.labels)[p.at(1, 1)].equals(sym(s, "u")));
  CHECK(nabla(p, s.realm, s.labels)[p.at(2, 2)].equals(sym(s, "x/(v+w)")));
  CHECK(delta(p, s.realm, s.labels)[p.at(1, 2)].equals(sym(s, "w/(x+y)")));

  const TropicalRealm trop;
  CHECK(theta(chain_poset(1), trop, {mpq_class(3, 10)})[0] == mpq_class(7, 10));
}

TEST_CASE("chain expansion matches the recurrences") {
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k < 10; ++k) {
      const Poset sq = product_of_chains(2, 2);
      const MatPRealm r = random_realm(d, rng());
      const auto g = random_labels(sq, r, rng());
      CHECK(chain_expansion_check(TransferKind::NablaInv, sq, r, g));
      CHECK(chain_expansion_check(TransferKind::DeltaInv, sq, r, g));
      const Poset q = random_poset(rng, 7);
      const auto h = random_labels(q, r, rng());
      CHECK(chain_expansion_check(TransferKind::NablaInv, q, r, h));
      CHECK(chain_expansion_check(TransferKind::DeltaInv, q, r, h));
    }
  }
  const Poset chain = chain_poset(3);
  const MatPRealm r = random_realm(2, 9);
  const auto g = random_labels(chain, r, 10);
  CHECK(chain_expansion_check(TransferKind::DeltaInv, chain, r, g));
  CHECK(delta_inv(chain, r, g)[0] == r.mul(r.mul(g[2], g[1]), g[0]));
  CHECK(nabla_inv(chain, r, g)[2] == r.mul(r.mul(g[2], g[1]), g[0]));

  const auto s = symbolic_labeling(product_of_chains(2, 3));
  CHECK(chain_expansion_check(TransferKind::NablaInv, product_of_chains(2, 3), s.realm, s.labels));
  CHECK(chain_expansion_check(TransferKind::DeltaInv, product_of_chains(2, 3), s.realm, s.labels));
  CHECK_THROWS(chain_expansion(TransferKind::Theta, chain, r, g));
}

TEST_CASE("toggles") {
  std::mt19937_64 rng(3);
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k < 10; ++k) {
      const Poset p = k % 2 ? product_of_chains(3, 3) : random_poset(rng, 7);
      const MatPRealm r = random_realm(d, rng());
      const auto g = random_labels(p, r, rng());
      for (Element v = 0; v < p.size(); ++v) {
        const auto closed = toggle(p, r, g, v, ToggleForm::Closed);
        const auto chains = toggle(p, r, g, v, ToggleForm::Chains);
        CHECK(closed[v] == chains[v]);
        for (Element x = 0; x < p.size(); ++x)
          if (x != v) CHECK(closed[x] == g[x]);
        if (d == 1) CHECK(toggle(p, r, closed, v)[v] == g[v]);
      }
    }
    // Unique minimum: the NablaInv factor is g(min) and cancels.
    const Poset rect = product_of_chains(2, 3);
    const MatPRealm r = random_realm(d, rng());
    const auto g = random_labels(rect, r, rng());
    const Element bottom = rect.at(1, 1);
    CHECK(toggle(rect, r, g, bottom)[bottom] == r.mul(r.constant(), r.inv(delta_inv(rect, r, g)[bottom])));
  }
  const auto s = symbolic_labeling(chain_poset(1));
  CHECK(toggle(chain_poset(1), s.realm, s.labels, 0)[0].equals(s.realm.mul(s.realm.constant(), s.realm.inv(s.labels[0]))));
  CHECK(order_rowmotion(chain_poset(1), s.realm, s.labels)[0].equals(toggle(chain_poset(1), s.realm, s.labels, 0)[0]));
}

TEST_CASE("mode equivalence and closed form, a,b <= 4, matrices") {
  std::mt19937_64 rng(4);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const Poset p = product_of_chains(a, b);
      for (int k = 0; k < 100; ++k) {
        const int d = 1 + k % 3;
        const MatPRealm r = random_realm(d, rng());
        const auto g = random_labels(p, r, rng());
        const auto transfer_mode = antichain_rowmotion(p, r, g, RowmotionMode::Transfer);
        CHECK(labelings_equal(r, transfer_mode, antichain_rowmotion(p, r, g, RowmotionMode::Toggles)));
        const auto cf = closed_form_first_pass(p, r, g);
        CHECK(cf.interior_forms_agree);
        CHECK(labelings_equal(r, cf.labels, transfer_mode));
        CHECK(labelings_equal(r, cf.labels_second, transfer_mode));
      }
    }
  }
}

TEST_CASE("mode equivalence: symbolic, exhaustive for a+b <= 5, and on random posets") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      const Poset p = product_of_chains(a, b);
      const auto s = symbolic_labeling(p);
      const auto t = antichain_rowmotion(p, s.realm, s.labels, RowmotionMode::Transfer);
      CHECK(labelings_equal(s.realm, t, antichain_rowmotion(p, s.realm, s.labels, RowmotionMode::Toggles)));
      CHECK(labelings_equal(s.realm, t, closed_form_first_pass(p, s.realm, s.labels).labels));
    }
  }
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const Poset p = random_poset(rng, 1 + rng() % 8);
    const MatPRealm r = random_realm(2, rng());
    const auto g = random_labels(p, r, rng());
    CHECK(labelings_equal(r, antichain_rowmotion(p, r, g), antichain_rowmotion(p, r, g, RowmotionMode::Toggles)));
  }
}

TEST_CASE("toggle order: any linear extension gives the same NAR") {
  const Poset p = product_of_chains(3, 3);
  Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    const MatPRealm r = random_realm(2 + k % 2, rng.next());
    const auto g = random_labels(p, r, rng.next());
    const auto base = antichain_rowmotion(p, r, g, RowmotionMode::Toggles);
    for (int e = 0; e < 5; ++e) {
      const auto order = random_linear_extension(p, rng);
      REQUIRE(p.is_linear_extension(order));
      CHECK(labelings_equal(r, antichain_rowmotion(p, r, g, RowmotionMode::Toggles, &order), base));
    }
  }
  const MatPRealm r = random_realm(2, 1);
  const std::vector<Element> bad{p.at(2, 1), p.at(1, 1), 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(antichain_rowmotion(p, r, random_labels(p, r, 2), RowmotionMode::Toggles, &bad), std::invalid_argument);
}

TEST_CASE("order rowmotion: BOR^4 = id on [2]x[2] scalars, and equivariance with BAR") {
  const Poset sq = product_of_chains(2, 2);
  Rng rng(7);
  for (int k = 0; k < 100; ++k) {
    const MatPRealm r = random_realm(1, rng.next());
    const auto g = random_labels(sq, r, rng.next());
    auto h = g;
    for (int m = 0; m < 4; ++m) h = order_rowmotion(sq, r, h);
    CHECK(labelings_equal(r, h, g));
  }
  const Poset p = product_of_chains(2, 3);
  auto orb = iterate(p, symbolic_labeling(p).realm, symbolic_labeling(p).labels, 20, RowmotionMode::Transfer,
                     RowmotionKind::Order);
  CHECK(orb.period == 5);
  std::mt19937_64 mt(8);
  for (int k = 0; k < 50; ++k) {
    const Poset q = k % 2 ? product_of_chains(3, 2) : random_poset(mt, 6);
    const MatPRealm r = random_realm(1 + k % 3, mt());
    const auto g = random_labels(q, r, mt());
    CHECK(labelings_equal(r, nabla(q, r, order_rowmotion(q, r, g)), antichain_rowmotion(q, r, nabla(q, r, g))));
  }
}

TEST_CASE("closed form on [2]x[2] symbolic and [1]x[1]") {
  const Poset sq = product_of_chains(2, 2);
  const auto s = symbolic_labeling(sq);
  const auto cf = closed_form_first_pass(sq, s.realm, s.labels);
  CHECK(cf.labels[sq.at(2, 2)].equals(sym(s, "x*y/(x+y)")));
  CHECK(cf.labels[sq.at(1, 1)].equals(sym(s, "C/(w*(x+y)*z)")));

  const Poset one = product_of_chains(1, 1);
  const auto t = symbolic_labeling(one);
  CHECK(closed_form_first_pass(one, t.realm, t.labels).labels[0].equals(sym(t, "C/z")));
  CHECK_THROWS(closed_form_first_pass(chain_poset(2), t.realm, {t.labels[0], t.labels[0]}));
}

TEST_CASE("closed form equals toggle NAR on [3]x[3], d = 1..3, 100 samples") {
  const Poset p = product_of_chains(3, 3);
  for (int d = 1; d <= 3; ++d) {
    int agree = 0;
    for (int k = 0; k < 100; ++k) {
      auto s = sample_matp(p, d, derive_seed(99, {static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k)}));
      const auto cf = closed_form_first_pass(p, s.realm, s.labels);
      agree += cf.interior_forms_agree &&
               labelings_equal(s.realm, cf.labels, antichain_rowmotion(p, s.realm, s.labels, RowmotionMode::Toggles));
    }
    CHECK(agree == 100);
  }
}

TEST_CASE("iterate: symbolic BAR periods, tropical first step, singular diagnostics") {
  {
    const Poset sq = product_of_chains(2, 2);
    const auto s = symbolic_labeling(sq);
    const auto orb = iterate(sq, s.realm, s.labels, 16);
    REQUIRE(orb.period == 4);
    CHECK(orb.labelings.size() == 4);
  }
  {
    const Poset p = product_of_chains(2, 3);
    const auto s = symbolic_labeling(p);
    const auto orb = iterate(p, s.realm, s.labels, 20);
    CHECK(orb.period == 5);
    CHECK(orb.labelings[1][p.at(1, 1)].equals(sym(s, "C/(u*(v*x+w*x+w*y)*z)")));
    CHECK(orb.labelings[1][p.at(2, 3)].equals(sym(s, "x*y/(x+y)")));
    CHECK_FALSE(iterate(p, s.realm, s.labels, 4).period.has_value());
  }
  {
    const Poset sq = product_of_chains(2, 2);
    const TropicalRealm t;
    Labeling<mpq_class> g(4);
    g[sq.at(1, 1)] = mpq_class(1, 5);
    g[sq.at(2, 1)] = mpq_class(1, 10);
    g[sq.at(1, 2)] = mpq_class(2, 5);
    g[sq.at(2, 2)] = mpq_class(3, 10);
    const auto h = antichain_rowmotion(sq, t, g);
    CHECK(h[sq.at(1, 1)] == mpq_class(1, 10));
    CHECK(h[sq.at(2, 1)] == mpq_class(1, 2));
    CHECK(h[sq.at(1, 2)] == mpq_class(1, 5));
    CHECK(h[sq.at(2, 2)] == mpq_class(1, 10));
    CHECK(polytope_membership(PolytopeKind::Chain, sq, h));
  }
  {
    const Poset sq = product_of_chains(2, 2);
    const MatPRealm r = random_realm(2, 3);
    auto g = random_labels(sq, r, 4);
    g[sq.at(2, 2)] = r.zero();
    try {
      (void)iterate(sq, r, g, 8);
      FAIL("expected a singular value");
    } catch (const SingularValue& e) {
      CHECK(e.step() == 1);
      CHECK(e.element() >= 0);
    }
  }
  CHECK_THROWS_AS(theta(chain_poset(2), make_matp_realm(2, 1), {make_matp_realm(2, 1).one()}), std::invalid_argument);
}

TEST_CASE("restriction chain: tropicalized symbolic BAR and BOR match tropical rowmotion") {
  Rng rng(10);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}}) {
    const Poset p = product_of_chains(a, b);
    // Without gcd reduction numerator and denominator stay subtraction-free.
    const auto s = symbolic_labeling(p, false);
    const auto bar = antichain_rowmotion(p, s.realm, s.labels);
    const auto bor = order_rowmotion(p, s.realm, s.labels);
    const auto names = symbolic_variable_names(p);
    for (int k = 0; k < 20; ++k) {
      mpq_class c(rng.range(1, 6), rng.range(1, 3));
      c.canonicalize();
      const TropicalRealm t(c);
      const auto g = random_tropical_labeling(p, rng);
      std::vector<mpq_class> point(1 + p.size());
      point[0] = c;
      for (Element x = 0; x < p.size(); ++x) point[s.realm.variable_index(names[x])] = g[x];
      const auto tb = antichain_rowmotion(p, t, g);
      const auto to = order_rowmotion(p, t, g);
      for (Element x = 0; x < p.size(); ++x) {
        CHECK(tropicalize(bar[x].num(), point) - tropicalize(bar[x].den(), point) == tb[x]);
        CHECK(tropicalize(bor[x].num(), point) - tropicalize(bor[x].den(), point) == to[x]);
      }
    }
  }
}

TEST_CASE("polytope membership") {
  const Poset sq = product_of_chains(2, 2);
  const std::vector<mpq_class> zero(4, 0);
  for (auto kind : {PolytopeKind::Order, PolytopeKind::OrderReversing, PolytopeKind::Chain})
    CHECK(polytope_membership(kind, sq, zero));
  std::vector<mpq_class> up(4);
  up[sq.at(1, 1)] = mpq_class(1, 5);
  up[sq.at(2, 1)] = mpq_class(1, 2);
  up[sq.at(1, 2)] = mpq_class(1, 3);
  up[sq.at(2, 2)] = 1;
  CHECK(polytope_membership(PolytopeKind::Order, sq, up));
  CHECK_FALSE(polytope_membership(PolytopeKind::OrderReversing, sq, up));
  CHECK_FALSE(polytope_membership(PolytopeKind::Chain, sq, up));
  up[sq.at(2, 2)] = mpq_class(3, 2);
  CHECK_FALSE(polytope_membership(PolytopeKind::Order, sq, up));
  std::vector<mpq_class> neg(4, 0);
  neg[0] = -1;
  CHECK_FALSE(polytope_membership(PolytopeKind::Chain, sq, neg));
  CHECK(maximal_chains(sq).size() == 2);
  CHECK(maximal_chains(product_of_chains(3, 3)).size() == 6);
  CHECK(support_of_indicator(indicator(sq, {sq.at(2, 1), sq.at(1, 2)})) == ElementSet{sq.at(2, 1), sq.at(1, 2)});
  CHECK_FALSE(support_of_indicator(up).has_value());
  CHECK(parse_polytope_kind(to_string(PolytopeKind::OrderReversing)) == PolytopeKind::OrderReversing);
}
