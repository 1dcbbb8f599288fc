// rowmo: command-line front end.  Every command writes one JSON document and
// exits 0 when all requested checks pass, 1 when a check fails, 2 on bad input.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/fixtures.hpp"
#include "rowmotion/io.hpp"
#include "rowmotion/kernels.hpp"
#include "rowmotion/sampling.hpp"
#include "rowmotion/stword.hpp"

using namespace rowmotion;

namespace {

struct Global {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  bool serial = false;
  Execution exec() const { return serial ? Execution::Serial : Execution::Parallel; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

void emit(const Global& g, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::invalid_argument("cannot write " + g.out);
    f << text;
  }
}

struct PosetArgs {
  std::vector<int> chains;
  std::string file;

  void add(CLI::App* cmd) {
    cmd->add_option("--chains", chains, "rectangle [a] x [b]")->expected(2);
    cmd->add_option("--poset", file, "poset JSON file");
  }
  Poset get() const {
    if (!chains.empty()) return product_of_chains(chains[0], chains[1]);
    if (!file.empty()) return poset_from_json(read_json_file(file));
    throw std::invalid_argument("give --chains A B or --poset FILE");
  }
};

struct RealmArgs {
  std::string realm = "tropical";
  modp::u64 p = modp::kMersenne61;
  int d = 1;
  std::string c;

  void add(CLI::App* cmd, const std::string& dflt) {
    realm = dflt;
    cmd->add_option("--realm", realm, "tropical | ratfun | matp | matq")->capture_default_str();
    cmd->add_option("--p", p, "prime for matp")->capture_default_str();
    cmd->add_option("--d", d, "matrix size")->capture_default_str();
    cmd->add_option("--c", c, "central constant (tropical: rational, default 1; matrices: scalar, default random)");
  }
  RealmConfig config() const {
    Json j = {{"realm", realm}, {"p", p}, {"d", d}};
    if (!c.empty()) j["c"] = c;
    return realm_config_from_json(j);
  }
};

/// Builds the realm and the labeling (from --in, or a generic sample) and
/// hands both to `fn`.
template <class F>
Json with_labeling(const Poset& p, const RealmConfig& cfg, const std::string& in, std::uint64_t seed, F&& fn) {
  std::optional<Json> file;
  if (!in.empty()) file = read_json_file(in);
  Rng rng(derive_seed(seed, {0xC11}));
  switch (cfg.kind) {
    case RealmKind::Tropical: {
      TropicalRealm r(cfg.c ? parse_rational(*cfg.c) : mpq_class(1));
      auto g = file ? labeling_from_json(p, r, *file, [](const auto&, const Json& v) { return tropical_value_from_json(v); })
                    : random_tropical_labeling(p, rng);
      return fn(r, g);
    }
    case RealmKind::RatFun: {
      if (!file) {
        auto s = symbolic_labeling(p);
        return fn(s.realm, s.labels);
      }
      RatFunRealm r(symbolic_names_in(p, *file));
      auto g = labeling_from_json(p, r, *file, [](const RatFunRealm& rr, const Json& v) { return ratfun_value_from_json(rr, v); });
      return fn(r, g);
    }
    case RealmKind::MatP: {
      std::optional<modp::u64> fixed;
      if (cfg.c) fixed = modp::Field(cfg.p).from_int(std::stoll(*cfg.c));
      if (!file) {
        auto s = sample_matp(p, cfg.d, seed, cfg.p, fixed);
        return fn(s.realm, s.labels);
      }
      MatPRealm r = make_matp_realm(cfg.d, fixed ? *fixed : 1 + rng.below(cfg.p - 1), cfg.p);
      auto g = labeling_from_json(p, r, *file, [](const MatPRealm& rr, const Json& v) { return matp_value_from_json(rr, v); });
      return fn(r, g);
    }
    case RealmKind::MatQ: {
      mpq_class c = cfg.c ? parse_rational(*cfg.c) : mpq_class(rng.range(1, 9));
      MatQRealm r(cfg.d, c);
      if (file) {
        auto g = labeling_from_json(p, r, *file, [](const MatQRealm& rr, const Json& v) { return matq_value_from_json(rr, v); });
        return fn(r, g);
      }
      for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
        auto g = random_matq_labeling(p, r, rng);
        try {
          antichain_rowmotion(p, r, g);
        } catch (const SingularValue&) {
          continue;
        }
        return fn(r, g);
      }
      throw SamplingExhausted("no nonsingular rational matrix labeling", seed);
    }
  }
  throw std::logic_error("unhandled realm");
}

template <class R>
Json st_word_json(const R& r, const std::vector<typename R::value_type>& w) {
  Json out = Json::array();
  for (const auto& v : w) out.push_back(value_to_json(r, v));
  return out;
}

void merge(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

Json header(const Global& g, const std::string& command) {
  return {{"command", command}, {"seed", g.seed}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antichain rowmotion and its piecewise-linear, birational and noncommutative lifts"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may also follow the subcommand
  Global g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json"}))->capture_default_str();
  app.add_flag("--serial", g.serial, "use the serial reference path instead of OpenMP");

  int status = 0;

  // poset --------------------------------------------------------------------
  auto* poset_cmd = app.add_subcommand("poset", "validate a poset and echo its canonical form");
  PosetArgs poset_args;
  poset_args.add(poset_cmd);
  poset_cmd->callback([&] {
    Poset p = poset_args.get();
    Json out = header(g, "poset");
    out["poset"] = poset_to_json(p);
    Json ext = Json::array();
    for (Element x : p.linear_extension()) ext.push_back(p.name(x));
    out["linear_extension"] = ext;
    if (p.size() <= 40) out["antichains"] = enumerate_antichains(p).size();
    emit(g, out);
  });

  // orbits -------------------------------------------------------------------
  auto* orbits_cmd = app.add_subcommand("orbits", "antichain rowmotion orbits of [a] x [b] with homomesy checks");
  std::vector<int> orbit_chains;
  std::string orbit_realm = "comb";
  orbits_cmd->add_option("--chains", orbit_chains, "rectangle [a] x [b]")->expected(2)->required();
  orbits_cmd->add_option("--realm", orbit_realm, "only 'comb' (combinatorial)")->check(CLI::IsMember({"comb"}));
  orbits_cmd->callback([&] {
    const int a = orbit_chains[0], b = orbit_chains[1];
    Poset p = product_of_chains(a, b);
    auto orbits = combinatorial_orbits(p);
    mpq_class card(a * b, a + b), pos(b, a + b), neg(a, a + b);
    card.canonicalize();
    pos.canonicalize();
    neg.canonicalize();
    bool card_ok = true, fiber_ok = true, divides = true, rotation = true;
    size_t total = 0;
    for (const auto& o : orbits) {
      total += o.antichains.size();
      card_ok = card_ok && o.cardinality_avg == card;
      for (const auto& v : o.positive_fiber_avgs) fiber_ok = fiber_ok && v == pos;
      for (const auto& v : o.negative_fiber_avgs) fiber_ok = fiber_ok && v == neg;
      divides = divides && (a + b) % o.period() == 0;
      for (size_t k = 0; k < o.st_words.size(); ++k) {
        rotation = rotation && o.st_words[(k + 1) % o.st_words.size()] == rotate_right(o.st_words[k]);
      }
    }
    bool ok = card_ok && fiber_ok && divides && rotation;
    Json out = header(g, "orbits");
    out["a"] = a;
    out["b"] = b;
    out["antichains"] = total;
    out["expected"] = {{"cardinality_avg", rational_string(card)},
                       {"positive_fiber_avg", rational_string(pos)},
                       {"negative_fiber_avg", rational_string(neg)}};
    out["checks"] = {{"cardinality_homomesy", card_ok},
                     {"fiber_homomesy", fiber_ok},
                     {"period_divides_a_plus_b", divides},
                     {"st_rotation", rotation}};
    out["ok"] = ok;
    out["orbits"] = combinatorial_orbits_to_json(p, orbits);
    emit(g, out);
    status = ok ? 0 : 1;
  });

  // rowmotion ----------------------------------------------------------------
  auto* row_cmd = app.add_subcommand("rowmotion", "iterate rowmotion on a labeling in any realm");
  PosetArgs row_poset;
  RealmArgs row_realm;
  std::string row_mode = "transfer", row_kind = "antichain", row_in;
  int row_steps = 0;
  std::optional<int> expect_period;
  row_poset.add(row_cmd);
  row_realm.add(row_cmd, "tropical");
  row_cmd->add_option("--mode", row_mode, "transfer | toggles")->check(CLI::IsMember({"transfer", "toggles"}));
  row_cmd->add_option("--kind", row_kind, "antichain | order")->check(CLI::IsMember({"antichain", "order"}));
  row_cmd->add_option("--steps", row_steps, "step bound (default 4(a+b), or 4|P|)");
  row_cmd->add_option("--in", row_in, "labeling JSON file (default: a generic sample)");
  row_cmd->add_option("--expect-period", expect_period, "exit 1 unless the detected period equals this");
  row_cmd->callback([&] {
    Poset p = row_poset.get();
    RealmConfig cfg = row_realm.config();
    RowmotionMode mode = parse_mode(row_mode);
    RowmotionKind kind = row_kind == "order" ? RowmotionKind::Order : RowmotionKind::Antichain;
    if (kind == RowmotionKind::Order && mode != RowmotionMode::Transfer) {
      throw std::invalid_argument("order rowmotion is available in transfer mode only");
    }
    int steps = row_steps > 0 ? row_steps : 4 * (p.is_rectangle() ? p.rows() + p.cols() : p.size());
    Json out = header(g, "rowmotion");
    out["realm"] = realm_config_to_json(cfg);
    out["poset"] = poset_to_json(p);
    out["mode"] = row_mode;
    out["kind"] = row_kind;
    Json body = with_labeling(p, cfg, row_in, g.seed, [&](const auto& r, const auto& labels) {
      auto orbit = iterate(p, r, labels, steps, mode, kind);
      Json steps_json = Json::array();
      for (const auto& lab : orbit.labelings) {
        Json step = {{"labels", labeling_to_json(p, r, lab)}};
        if (p.is_rectangle()) step["st_word"] = st_word_json(r, st_word(p, r, lab));
        steps_json.push_back(step);
      }
      Json j;
      j["constant"] = value_to_json(r, r.constant());
      j["period"] = orbit.period ? Json(*orbit.period) : Json(nullptr);
      j["steps"] = steps_json;
      return j;
    });
    out["constant"] = body["constant"];
    out["period"] = body["period"];
    out["steps"] = body["steps"];
    if (expect_period) {
      bool ok = !body["period"].is_null() && body["period"].get<int>() == *expect_period;
      out["expected_period"] = *expect_period;
      out["ok"] = ok;
      status = ok ? 0 : 1;
    }
    emit(g, out);
  });

  // stword -------------------------------------------------------------------
  auto* st_cmd = app.add_subcommand("stword", "Stanley-Thomas word of a labeling and the rotation check");
  PosetArgs st_poset;
  RealmArgs st_realm;
  std::string st_in, st_mode = "transfer";
  st_poset.add(st_cmd);
  st_realm.add(st_cmd, "tropical");
  st_cmd->add_option("--in", st_in, "labeling JSON file (default: a generic sample)");
  st_cmd->add_option("--mode", st_mode, "transfer | toggles")->check(CLI::IsMember({"transfer", "toggles"}));
  st_cmd->callback([&] {
    Poset p = st_poset.get();
    if (!p.is_rectangle()) throw std::invalid_argument("ST words are defined on rectangles; use --chains");
    RealmConfig cfg = st_realm.config();
    Json out = header(g, "stword");
    out["realm"] = realm_config_to_json(cfg);
    out["chains"] = {p.rows(), p.cols()};
    Json body = with_labeling(p, cfg, st_in, g.seed, [&](const auto& r, const auto& labels) {
      auto image = antichain_rowmotion(p, r, labels, parse_mode(st_mode));
      auto rep = check_rotation(p, r, labels, image);
      Json j;
      j["constant"] = value_to_json(r, r.constant());
      j["labels"] = labeling_to_json(p, r, labels);
      j["st_word"] = st_word_json(r, st_word(p, r, labels));
      j["image_st_word"] = st_word_json(r, st_word(p, r, image));
      j["rotation"] = {{"holds", rep.holds}, {"per_index", rep.per_index}};
      return j;
    });
    merge(out, body);
    emit(g, out);
    status = body["rotation"]["holds"].get<bool>() ? 0 : 1;
  });

  // homomesy -----------------------------------------------------------------
  auto* hom_cmd = app.add_subcommand("homomesy", "fiber homomesy of rowmotion orbits");
  std::string hom_realm = "tropical";
  int hom_a = 2, hom_b = 2, hom_samples = 100, hom_d = 1;
  bool hom_details = false;
  hom_cmd->add_option("--realm", hom_realm, "tropical | ratfun | matp")->check(CLI::IsMember({"tropical", "ratfun", "matp"}));
  hom_cmd->add_option("--a", hom_a)->capture_default_str();
  hom_cmd->add_option("--b", hom_b)->capture_default_str();
  hom_cmd->add_option("--samples", hom_samples)->capture_default_str();
  hom_cmd->add_option("--d", hom_d, "matrix size; the multiplicative statement needs d = 1")->capture_default_str();
  hom_cmd->add_flag("--details", hom_details, "include per-sample means (tropical)");
  hom_cmd->callback([&] {
    Json out = header(g, "homomesy");
    bool ok = false;
    if (hom_realm == "tropical") {
      auto rep = pl_homomesy_report(hom_a, hom_b, hom_samples, g.seed, g.exec(), hom_details);
      merge(out, pl_report_to_json(rep));
      ok = rep.ok();
    } else if (hom_realm == "matp") {
      if (hom_d != 1) {
        throw std::invalid_argument("fiber orbit products are only asserted for commutative realms (d = 1)");
      }
      auto rep = birational_scalar_report(hom_a, hom_b, hom_samples, g.seed, g.exec());
      merge(out, birational_report_to_json(rep));
      ok = rep.ok();
    } else {
      Poset p = product_of_chains(hom_a, hom_b);
      auto s = symbolic_labeling(p);
      Json fibers = Json::array();
      ok = true;
      for (FiberSide side : {FiberSide::Positive, FiberSide::Negative}) {
        const int count = side == FiberSide::Positive ? hom_a : hom_b;
        auto expected = expected_fiber_orbit_product(p, s.realm, side);
        for (int k = 1; k <= count; ++k) {
          auto v = fiber_orbit_product(p, s.realm, s.labels, {side, k});
          bool pass = s.realm.eq(v, expected);
          ok = ok && pass;
          fibers.push_back({{"side", side == FiberSide::Positive ? "positive" : "negative"},
                            {"index", k},
                            {"product", s.realm.to_string(v)},
                            {"expected", s.realm.to_string(expected)},
                            {"pass", pass}});
        }
      }
      out["realm"] = "ratfun";
      out["a"] = hom_a;
      out["b"] = hom_b;
      out["fibers"] = fibers;
      out["ok"] = ok;
    }
    emit(g, out);
    status = ok ? 0 : 1;
  });

  // fuzz-nar -----------------------------------------------------------------
  auto* fuzz_cmd = app.add_subcommand("fuzz-nar", "sample evidence that NAR^(a+b) = id on [a] x [b]");
  int max_a = 3, max_b = 3, max_d = 3, trials = 100;
  modp::u64 fuzz_p = modp::kMersenne61;
  fuzz_cmd->add_option("--max-a", max_a)->capture_default_str();
  fuzz_cmd->add_option("--max-b", max_b)->capture_default_str();
  fuzz_cmd->add_option("--max-d", max_d)->capture_default_str();
  fuzz_cmd->add_option("--trials", trials, "trials per cell")->capture_default_str();
  fuzz_cmd->add_option("--p", fuzz_p, "prime")->capture_default_str();
  fuzz_cmd->callback([&] {
    if (!modp::is_prime(fuzz_p)) throw std::invalid_argument("--p must be prime");
    auto rep = fuzz_nar_grid(max_a, max_b, max_d, trials, g.seed, g.exec(), fuzz_p);
    Json out = header(g, "fuzz-nar");
    merge(out, fuzz_report_to_json(rep));
    emit(g, out);
    status = rep.clean() ? 0 : 1;
  });

  // fixtures -----------------------------------------------------------------
  auto* fix_cmd = app.add_subcommand("fixtures", "run every worked-example regression fixture");
  std::string only;
  fix_cmd->add_option("--only", only, "run one fixture by name");
  fix_cmd->callback([&] {
    std::vector<FixtureResult> results;
    if (only.empty()) {
      results = run_figure_fixtures(g.seed, g.exec());
    } else {
      results.push_back(run_fixture(only, g.seed, g.exec()));
    }
    Json table = Json::array();
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      table.push_back({{"fixture", r.name}, {"reproduces", r.reproduces}, {"status", r.passed ? "pass" : "fail"},
                       {"detail", r.detail}});
    }
    Json out = header(g, "fixtures");
    out["fixtures"] = table;
    out["ok"] = ok;
    emit(g, out);
    status = ok ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const SingularValue& e) {
    std::cerr << "rowmo: singular value: " << e.what() << "\n";
    return 2;
  } catch (const SamplingExhausted& e) {
    std::cerr << "rowmo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "rowmo: " << e.what() << "\n";
    return 2;
  }
  return status;
}
