#include "rowmotion/kernels.hpp"

#include <algorithm>
#include <set>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/polytope.hpp"
#include "rowmotion/sampling.hpp"
#include "rowmotion/stword.hpp"

namespace rowmotion {

std::string to_string(Execution e) { return e == Execution::Serial ? "serial" : "parallel"; }

namespace {

using MatLabels = Labeling<Matrix<modp::u64>>;

mpq_class ratio(long p, long q) {
  mpq_class v(p, q);
  v.canonicalize();
  return v;
}

MatLabels nar_power(const Poset& p, const MatPRealm& r, MatLabels g, int n, RowmotionMode mode) {
  for (int m = 0; m < n; ++m) g = antichain_rowmotion(p, r, g, mode);
  return g;
}

struct FuzzTrial {
  enum class Kind { Pass, Counterexample, Unconfirmed, Exhausted } kind = Kind::Pass;
  std::uint64_t seed = 0;
  int resamples = 0;
  bool early = false;
};

FuzzTrial fuzz_trial(const Poset& rect, int d, std::uint64_t seed, modp::u64 prime) {
  const int n = rect.rows() + rect.cols();
  FuzzTrial t;
  t.seed = seed;
  bool returned = false;
  bool early = false;
  auto probe = [&](const MatPRealm& r, const MatLabels& g) {
    returned = false;
    early = false;
    MatLabels cur = g;
    for (int m = 1; m <= n; ++m) {
      try {
        cur = antichain_rowmotion(rect, r, cur, RowmotionMode::Toggles);
      } catch (const SingularValue& e) {
        throw e.at_step(m);
      }
      if (m < n && !early && labelings_equal(r, cur, g)) early = true;
    }
    returned = labelings_equal(r, cur, g);
  };
  std::optional<MatPSample> s;
  try {
    s = sample_matp(rect, d, seed, prime, std::nullopt, probe);
  } catch (const SamplingExhausted&) {
    t.kind = FuzzTrial::Kind::Exhausted;
    t.resamples = kMaxResamples;
    return t;
  }
  t.seed = s->seed;
  t.resamples = s->resamples;
  t.early = early;
  if (returned) return t;
  // Recompute the same labeling along the transfer-mode path.
  bool confirmed = true;
  try {
    confirmed = !labelings_equal(s->realm, nar_power(rect, s->realm, s->labels, n, RowmotionMode::Transfer), s->labels);
  } catch (const SingularValue&) {
    confirmed = false;
  }
  t.kind = confirmed ? FuzzTrial::Kind::Counterexample : FuzzTrial::Kind::Unconfirmed;
  return t;
}

}  // namespace

FuzzCell fuzz_nar_periodicity(int a, int b, int d, int trials, std::uint64_t seed, Execution exec, modp::u64 p) {
  if (d < 1 || trials < 1) throw std::invalid_argument("fuzz_nar_periodicity needs d >= 1 and trials >= 1");
  const Poset rect = product_of_chains(a, b);
  const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b), ud = static_cast<std::uint64_t>(d);
  auto results = run_batch<FuzzTrial>(trials, exec, [&](int t) {
    return fuzz_trial(rect, d, derive_seed(seed, {ua, ub, ud, static_cast<std::uint64_t>(t)}), p);
  });
  FuzzCell cell;
  cell.a = a;
  cell.b = b;
  cell.d = d;
  cell.p = p;
  cell.trials = trials;
  for (const auto& t : results) {
    cell.resamples += t.resamples;
    switch (t.kind) {
      case FuzzTrial::Kind::Pass:
        ++cell.passes;
        cell.nar_steps += a + b;
        if (t.early) ++cell.early_returns;
        break;
      case FuzzTrial::Kind::Counterexample:
        ++cell.failures;
        cell.nar_steps += a + b;
        cell.counterexample_seeds.push_back(t.seed);
        break;
      case FuzzTrial::Kind::Unconfirmed:
        ++cell.failures;
        cell.nar_steps += a + b;
        cell.unconfirmed_seeds.push_back(t.seed);
        break;
      case FuzzTrial::Kind::Exhausted:
        ++cell.exhausted;
        cell.exhausted_seeds.push_back(t.seed);
        break;
    }
  }
  return cell;
}

bool FuzzReport::clean() const {
  return std::all_of(cells.begin(), cells.end(), [](const FuzzCell& c) { return c.failures == 0 && c.exhausted == 0; });
}

FuzzReport fuzz_nar_grid(int max_a, int max_b, int max_d, int trials, std::uint64_t seed, Execution exec,
                         modp::u64 p) {
  FuzzReport report;
  report.seed = seed;
  report.trials_per_cell = trials;
  // Trials inside a cell are the parallel unit; cells are few and uneven.
  for (int a = 1; a <= max_a; ++a) {
    for (int b = 1; b <= max_b; ++b) {
      for (int d = 1; d <= max_d; ++d) report.cells.push_back(fuzz_nar_periodicity(a, b, d, trials, seed, exec, p));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

PlSample pl_sample(const Poset& rect, std::uint64_t seed) {
  const int a = rect.rows(), b = rect.cols(), n = a + b;
  const TropicalRealm r(1);
  Rng rng(seed);
  PlSample s;
  s.seed = seed;
  s.positive_means.assign(a, 0);
  s.negative_means.assign(b, 0);
  s.label_sum_mean = 0;
  const Labeling<mpq_class> g = random_chain_polytope_point(rect, rng);
  Labeling<mpq_class> cur = g;
  for (int m = 0; m < n; ++m) {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= b; ++j) {
        const mpq_class& v = cur[rect.at(i, j)];
        s.positive_means[i - 1] += v;
        s.negative_means[j - 1] += v;
        s.label_sum_mean += v;
      }
    }
    Labeling<mpq_class> next = antichain_rowmotion(rect, r, cur);
    if (!check_rotation(rect, r, cur, next).holds) s.rotation = false;
    if (!polytope_membership(PolytopeKind::Chain, rect, next)) s.in_polytope = false;
    cur = std::move(next);
  }
  s.returns = labelings_equal(r, cur, g);
  const mpq_class len(n);
  for (auto& v : s.positive_means) v /= len;
  for (auto& v : s.negative_means) v /= len;
  s.label_sum_mean /= len;
  const mpq_class pos = ratio(b, n), neg = ratio(a, n), total = ratio(a * b, n);
  for (const auto& v : s.positive_means) s.means_ok = s.means_ok && v == pos;
  for (const auto& v : s.negative_means) s.means_ok = s.means_ok && v == neg;
  s.means_ok = s.means_ok && s.label_sum_mean == total;
  return s;
}

}  // namespace

PlHomomesyReport pl_homomesy_report(int a, int b, int samples, std::uint64_t seed, Execution exec,
                                    bool keep_details) {
  const Poset rect = product_of_chains(a, b);
  const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b);
  auto results = run_batch<PlSample>(samples, exec, [&](int i) {
    return pl_sample(rect, derive_seed(seed, {ua, ub, static_cast<std::uint64_t>(i)}));
  });
  PlHomomesyReport rep;
  rep.a = a;
  rep.b = b;
  rep.samples = samples;
  rep.seed = seed;
  rep.expected_positive = ratio(b, a + b);
  rep.expected_negative = ratio(a, a + b);
  rep.expected_label_sum = ratio(a * b, a + b);
  for (const auto& s : results) {
    if (s.ok()) {
      ++rep.passes;
    } else {
      rep.failing_seeds.push_back(s.seed);
    }
    rep.rotation_failures += !s.rotation;
    rep.polytope_failures += !s.in_polytope;
    rep.period_failures += !s.returns;
    rep.mean_failures += !s.means_ok;
  }
  if (keep_details) rep.details = std::move(results);
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct BirationalSample {
  std::uint64_t seed = 0;
  bool exhausted = false;
  bool period = true, rotation = true, fibers = true;
};

BirationalSample birational_sample(const Poset& rect, std::uint64_t seed) {
  const int a = rect.rows(), b = rect.cols(), n = a + b;
  BirationalSample s;
  s.seed = seed;
  auto probe = [&](const MatPRealm& r, const MatLabels& g) {
    std::vector<MatLabels> orbit{g};
    for (int m = 1; m <= n; ++m) {
      try {
        orbit.push_back(antichain_rowmotion(rect, r, orbit.back()));
      } catch (const SingularValue& e) {
        throw e.at_step(m);
      }
    }
    s.period = labelings_equal(r, orbit[n], g);
    s.rotation = true;
    for (int m = 0; m < n; ++m) {
      auto shifted = rotate_right(st_word(rect, r, orbit[m]));
      auto next = st_word(rect, r, orbit[m + 1]);
      for (int k = 0; k < n; ++k) s.rotation = s.rotation && r.eq(shifted[k], next[k]);
    }
    s.fibers = true;
    for (FiberSide side : {FiberSide::Positive, FiberSide::Negative}) {
      const int count = side == FiberSide::Positive ? a : b;
      const auto expected = expected_fiber_orbit_product(rect, r, side);
      for (int k = 1; k <= count; ++k) {
        auto acc = r.one();
        for (int m = 0; m < n; ++m) acc = r.mul(acc, fiber_product(rect, r, orbit[m], {side, k}));
        s.fibers = s.fibers && r.eq(acc, expected);
      }
    }
  };
  try {
    MatPSample sample = sample_matp(rect, 1, seed, modp::kMersenne61, std::nullopt, probe);
    s.seed = sample.seed;
  } catch (const SamplingExhausted&) {
    s.exhausted = true;
  }
  return s;
}

}  // namespace

BirationalReport birational_scalar_report(int a, int b, int samples, std::uint64_t seed, Execution exec) {
  const Poset rect = product_of_chains(a, b);
  const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b);
  auto results = run_batch<BirationalSample>(samples, exec, [&](int i) {
    return birational_sample(rect, derive_seed(seed, {ua, ub, static_cast<std::uint64_t>(i)}));
  });
  BirationalReport rep;
  rep.a = a;
  rep.b = b;
  rep.samples = samples;
  rep.seed = seed;
  for (const auto& s : results) {
    if (s.exhausted) {
      ++rep.exhausted;
      rep.failing_seeds.push_back(s.seed);
      continue;
    }
    rep.period_failures += !s.period;
    rep.rotation_failures += !s.rotation;
    rep.fiber_failures += !s.fibers;
    if (s.period && s.rotation && s.fibers) {
      ++rep.passes;
    } else {
      rep.failing_seeds.push_back(s.seed);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct CrossSample {
  std::uint64_t seed = 0;
  bool exhausted = false;
  bool modes = false, closed = false, extensions = false, chains = false, toggles = false;
  bool all() const { return modes && closed && extensions && chains && toggles; }
};

CrossSample cross_sample(const Poset& rect, int d, std::uint64_t seed) {
  CrossSample s;
  s.seed = seed;
  auto probe = [&](const MatPRealm& r, const MatLabels& g) {
    const auto by_transfer = antichain_rowmotion(rect, r, g, RowmotionMode::Transfer);
    const auto by_toggles = antichain_rowmotion(rect, r, g, RowmotionMode::Toggles);
    s.modes = labelings_equal(r, by_transfer, by_toggles);

    const auto cf = closed_form_first_pass(rect, r, g);
    s.closed = cf.interior_forms_agree && labelings_equal(r, cf.labels, by_toggles) &&
               labelings_equal(r, cf.labels_second, by_toggles);

    Rng rng(derive_seed(seed, {0xE7}));
    s.extensions = true;
    for (int k = 0; k < 5; ++k) {
      const auto order = random_linear_extension(rect, rng);
      s.extensions = s.extensions && labelings_equal(r, antichain_rowmotion(rect, r, g, RowmotionMode::Toggles, &order),
                                                     by_toggles);
    }

    s.chains = chain_expansion_check(TransferKind::NablaInv, rect, r, g) &&
               chain_expansion_check(TransferKind::DeltaInv, rect, r, g);

    s.toggles = true;
    for (Element v = 0; v < rect.size(); ++v) {
      s.toggles = s.toggles && labelings_equal(r, toggle(rect, r, g, v, ToggleForm::Closed),
                                               toggle(rect, r, g, v, ToggleForm::Chains));
    }
  };
  try {
    MatPSample sample = sample_matp(rect, d, seed, modp::kMersenne61, std::nullopt, probe);
    s.seed = sample.seed;
  } catch (const SamplingExhausted&) {
    s.exhausted = true;
  }
  return s;
}

}  // namespace

bool CrossCheckReport::ok() const {
  return exhausted == 0 && modes_agree == samples && closed_form_agree == samples &&
         extension_independent == samples && chains_agree == samples && toggle_forms_agree == samples;
}

CrossCheckReport nc_crosscheck(int a, int b, int d, int samples, std::uint64_t seed, Execution exec) {
  const Poset rect = product_of_chains(a, b);
  const auto ua = static_cast<std::uint64_t>(a), ub = static_cast<std::uint64_t>(b), ud = static_cast<std::uint64_t>(d);
  auto results = run_batch<CrossSample>(samples, exec, [&](int i) {
    return cross_sample(rect, d, derive_seed(seed, {ua, ub, ud, static_cast<std::uint64_t>(i)}));
  });
  CrossCheckReport rep;
  rep.a = a;
  rep.b = b;
  rep.d = d;
  rep.samples = samples;
  rep.seed = seed;
  for (const auto& s : results) {
    rep.exhausted += s.exhausted;
    rep.modes_agree += s.modes;
    rep.closed_form_agree += s.closed;
    rep.extension_independent += s.extensions;
    rep.chains_agree += s.chains;
    rep.toggle_forms_agree += s.toggles;
    if (s.exhausted || !s.all()) rep.failing_seeds.push_back(s.seed);
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<CombinatorialCell> combinatorial_periodicity(int max_a, int max_b, Execution exec) {
  std::vector<std::pair<int, int>> shapes;
  for (int a = 1; a <= max_a; ++a) {
    for (int b = 1; b <= max_b; ++b) shapes.emplace_back(a, b);
  }
  return run_batch<CombinatorialCell>(static_cast<int>(shapes.size()), exec, [&](int k) {
    const auto [a, b] = shapes[k];
    const Poset rect = product_of_chains(a, b);
    const auto all = enumerate_antichains(rect);
    CombinatorialCell cell;
    cell.a = a;
    cell.b = b;
    cell.antichains = static_cast<int>(all.size());
    std::set<Antichain> images;
    for (const auto& start : all) {
      Antichain cur = start;
      for (int m = 0; m < a + b; ++m) {
        Antichain next = rowmotion_antichain(rect, cur);
        if (st_word_binary(rect, next) != rotate_right(st_word_binary(rect, cur))) cell.rotation = false;
        if (m == 0) images.insert(next);
        cur = std::move(next);
      }
      if (cur != start) cell.periodic = false;
    }
    cell.bijective = images == std::set<Antichain>(all.begin(), all.end());
    return cell;
  });
}

}  // namespace rowmotion
