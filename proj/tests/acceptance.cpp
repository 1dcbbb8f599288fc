// Runs the ten acceptance criteria, one line each; exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/fixtures.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/kernels.hpp"
#include "rowmotion/sampling.hpp"

using namespace rowmotion;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> run;
};

Verdict fixtures_pass(std::initializer_list<const char*> names, std::uint64_t seed = 1) {
  Verdict v;
  for (const char* n : names) {
    const auto r = run_fixture(n, seed);
    v.require(r.passed, std::string(n) + ": " + r.detail);
  }
  return v;
}

std::string words(const std::vector<int>& w) {
  std::string s;
  for (int x : w) s += std::to_string(x);
  return s;
}

Verdict criterion_1() {
  Verdict v;
  const Poset p = product_of_chains(3, 5);
  Antichain a{p.at(2, 4), p.at(3, 1)};
  std::sort(a.begin(), a.end());
  const auto w = st_word_binary(p, a);
  const auto w2 = st_word_binary(p, rowmotion_antichain(p, a));
  v.require(w == std::vector<int>{0, 1, 1, 0, 1, 1, 0, 1}, "w(A) = " + words(w));
  v.require(w2 == std::vector<int>{1, 0, 1, 1, 0, 1, 1, 0}, "w(row A) = " + words(w2));
  const Verdict f = fixtures_pass({"rect3x5-covers", "rect3x5-stword", "rect3x5-rowmotion"});
  v.require(f.ok, f.detail);
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const Poset p = product_of_chains(2, 2);
  v.require(enumerate_antichains(p).size() == 6, "antichain count");
  const auto orbits = combinatorial_orbits(p);
  std::multiset<int> sizes;
  int order = 1;
  for (const auto& o : orbits) {
    sizes.insert(o.period());
    order = std::lcm(order, o.period());
    v.require(o.cardinality_avg == 1, "cardinality average " + o.cardinality_avg.get_str());
    for (const auto& q : o.positive_fiber_avgs) v.require(q == mpq_class(1, 2), "p_i average " + q.get_str());
    for (const auto& q : o.negative_fiber_avgs) v.require(q == mpq_class(1, 2), "n_i average " + q.get_str());
  }
  v.require(sizes == std::multiset<int>{2, 4}, "orbit sizes");
  v.require(order == 4, "rowmotion order " + std::to_string(order));
  const Verdict f = fixtures_pass({"rect2x2-antichain-orbits"});
  v.require(f.ok, f.detail);
  return v;
}

Verdict criterion_3() {
  Verdict v;
  int cells = 0;
  for (const auto& c : combinatorial_periodicity(5, 5)) {
    ++cells;
    const std::string where = "[" + std::to_string(c.a) + "]x[" + std::to_string(c.b) + "]";
    v.require(c.periodic, where + " not periodic");
    v.require(c.bijective, where + " not a bijection");
  }
  v.require(cells == 25, "expected 25 cells");
  if (v.ok) v.detail = "25 cells, all antichains";
  return v;
}

Verdict criterion_4() { return fixtures_pass({"rect2x2-pl-orbit", "rect2x2-pl-shared-stword"}); }

Verdict criterion_5() {
  Verdict v;
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}}) {
    const auto r = pl_homomesy_report(a, b, 1000, derive_seed(5, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)}));
    const std::string where = "[" + std::to_string(a) + "]x[" + std::to_string(b) + "]: ";
    v.require(r.rotation_failures == 0, where + "ST rotation failed");
    v.require(r.polytope_failures == 0, where + "left the chain polytope");
    v.require(r.mean_failures == 0, where + "fiber means");
    v.require(r.period_failures == 0, where + "no return after a+b steps");
    v.require(r.ok(), where + std::to_string(r.passes) + "/1000");
  }
  if (v.ok) v.detail = "2 x 1000 points";
  return v;
}

Verdict criterion_6() {
  return fixtures_pass({"rect2x3-bar-iteration", "rect2x3-stword", "rect2x2-bar-orbit", "rect2x3-bar-orbit",
                        "rect2x2-bar-homomesy", "rect2x3-bar-homomesy"});
}

Verdict criterion_7() {
  Verdict v;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const auto r = birational_scalar_report(a, b, 100, derive_seed(7, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)}));
      const std::string where = "[" + std::to_string(a) + "]x[" + std::to_string(b) + "]: ";
      v.require(r.ok(), where + std::to_string(r.passes) + "/100 (period " + std::to_string(r.period_failures) +
                            ", rotation " + std::to_string(r.rotation_failures) + ", fiber " +
                            std::to_string(r.fiber_failures) + ", exhausted " + std::to_string(r.exhausted) + ")");
    }
  }
  if (v.ok) v.detail = "16 cells x 100 samples";
  return v;
}

Verdict criterion_8() {
  Verdict v;
  for (int d = 1; d <= 3; ++d) {
    const auto c = nar_2x2_orbit_check(d, 100, derive_seed(8, {static_cast<std::uint64_t>(d)}));
    v.require(c.ok(), "NAR orbit d=" + std::to_string(d) + ": labels " + std::to_string(c.labels_agree) +
                          ", words " + std::to_string(c.st_words_agree) + ", order four " +
                          std::to_string(c.order_four));
    const auto s = skew_identity_check(d, 100, derive_seed(8, {0x5E, static_cast<std::uint64_t>(d)}));
    v.require(s.exhausted == 0 && s.positive_holds == s.samples,
              "skew identity d=" + std::to_string(d) + ": " + std::to_string(s.positive_holds) + "/100");
    if (d >= 2) {
      for (const auto& [expr, fails] : s.negative) v.require(fails > 0, expr + " never differed at d=" + std::to_string(d));
    }
  }
  const Verdict f = fixtures_pass({"rect2x2-nar-orbit", "skew-identity"});
  v.require(f.ok, f.detail);
  return v;
}

Verdict criterion_9() {
  Verdict v;
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int d = 1; d <= 3; ++d) {
        const auto r = nc_crosscheck(a, b, d, 100,
                                     derive_seed(9, {static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b),
                                                     static_cast<std::uint64_t>(d)}));
        const std::string where = "[" + std::to_string(a) + "]x[" + std::to_string(b) + "] d=" + std::to_string(d) + ": ";
        v.require(r.modes_agree == 100, where + "transfer vs toggles " + std::to_string(r.modes_agree));
        v.require(r.closed_form_agree == 100, where + "closed form " + std::to_string(r.closed_form_agree));
        v.require(r.extension_independent == 100, where + "linear extensions " + std::to_string(r.extension_independent));
        v.require(r.chains_agree == 100, where + "chain expansion " + std::to_string(r.chains_agree));
        v.require(r.ok(), where + "cross-check failed");
      }
    }
  }
  if (v.ok) v.detail = "9 cells x d=1,2,3 x 100 samples";
  return v;
}

Verdict criterion_10() {
  Verdict v;
  const auto rep = fuzz_nar_grid(3, 3, 3, 100, 10);
  long steps = 0;
  int counterexamples = 0, unconfirmed = 0, exhausted = 0;
  for (const auto& c : rep.cells) {
    steps += c.nar_steps;
    counterexamples += static_cast<int>(c.counterexample_seeds.size());
    unconfirmed += static_cast<int>(c.unconfirmed_seeds.size());
    exhausted += c.exhausted;
    v.require(c.passes + c.failures + c.exhausted == c.trials, "trial accounting");
  }
  v.require(rep.cells.size() == 27, "expected 27 cells");
  v.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
  v.require(unconfirmed == 0, std::to_string(unconfirmed) + " unconfirmed failures");
  const std::string note = fuzz_report_to_json(rep).at("note").get<std::string>();
  v.require(note.find("open conjecture") != std::string::npos, "note does not call the claim an open conjecture");
  v.require(note.find("[2]x[2]") != std::string::npos, "note does not single out [2]x[2]");
  if (v.ok) {
    v.detail = "27 cells, " + std::to_string(steps) + " NAR steps, 0 counterexamples, " + std::to_string(exhausted) +
               " exhausted; open conjecture, evidence only";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "combinatorial fixtures: [3]x[5] ST word and its rotation", 1, criterion_1},
      {2, "[2]x[2] census: 6 antichains, orbits {4,2}, exact averages, order 4", 1, criterion_2},
      {3, "combinatorial periodicity for all a,b <= 5", 10, criterion_3},
      {4, "piecewise-linear fixtures: orbit, label sums, shared ST word", 1, criterion_4},
      {5, "piecewise-linear properties on 1000 points of [2]x[2] and [2]x[3]", 30, criterion_5},
      {6, "birational symbolic fixtures and homomesy products", 60, criterion_6},
      {7, "birational scalar properties for a,b <= 4, 100 samples", 30, criterion_7},
      {8, "noncommutative [2]x[2] orbit and skew identity", 30, criterion_8},
      {9, "noncommutative cross-checks for a,b <= 3, 100 samples", 60, criterion_9},
      {10, "NAR periodicity fuzzing a,b,d <= 3, 100 trials per cell", 60, criterion_10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("threw: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.ok && in_time;
    failed += !pass;
    std::string detail = v.detail;
    if (v.ok && !in_time) detail = "too slow";
    std::printf("%s %2d  %-72s %8.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, detail.empty() ? "" : "  ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
