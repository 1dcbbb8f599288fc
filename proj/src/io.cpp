#include "rowmotion/io.hpp"

#include <functional>
#include <map>
#include <set>

#include "rowmotion/expr.hpp"

namespace rowmotion {

const char* const kNarPeriodicityNote =
    "Evidence only, not a proof. That noncommutative antichain rowmotion has order a+b on [a]x[b] for general "
    "(a,b) is an open conjecture (Grinberg). Only [2]x[2] has a published worked orbit establishing order 4; "
    "every other cell here is sampled evidence. Matrix algebras over F_p stand in for a skew field.";

namespace {

std::string element_key(const Json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return e.dump();
  throw std::invalid_argument("poset element ids must be strings or integers, got " + e.dump());
}

}  // namespace

Poset poset_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("poset must be a JSON object");
  if (j.contains("chains")) {
    const Json& c = j.at("chains");
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
      throw std::invalid_argument("\"chains\" must be [a, b]");
    }
    return product_of_chains(c[0].get<int>(), c[1].get<int>());
  }
  std::vector<std::string> names;
  std::map<std::string, Element> index;
  if (j.contains("elements")) {
    for (const Json& e : j.at("elements")) {
      std::string key = element_key(e);
      if (index.count(key)) throw PosetError("duplicate element " + key);
      index[key] = static_cast<Element>(names.size());
      names.push_back(key);
    }
  }
  std::vector<std::pair<Element, Element>> covers;
  if (j.contains("covers")) {
    for (const Json& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) throw std::invalid_argument("each cover must be [lower, upper]");
      Element ends[2];
      for (int k = 0; k < 2; ++k) {
        std::string key = element_key(c[k]);
        auto it = index.find(key);
        if (it == index.end()) throw PosetError("cover references undeclared element " + key);
        ends[k] = it->second;
      }
      covers.emplace_back(ends[0], ends[1]);
    }
  }
  return build_poset(std::move(names), covers);
}

Json poset_to_json(const Poset& p) {
  Json out = Json::object();
  if (p.is_rectangle()) out["chains"] = {p.rows(), p.cols()};
  out["elements"] = p.names();
  Json covers = Json::array();
  for (auto [lo, hi] : p.cover_pairs()) covers.push_back({p.name(lo), p.name(hi)});
  out["covers"] = covers;
  return out;
}

std::string to_string(RealmKind k) {
  switch (k) {
    case RealmKind::Tropical:
      return "tropical";
    case RealmKind::RatFun:
      return "ratfun";
    case RealmKind::MatP:
      return "matp";
    case RealmKind::MatQ:
      return "matq";
  }
  return "?";
}

RealmKind parse_realm_kind(const std::string& s) {
  if (s == "tropical") return RealmKind::Tropical;
  if (s == "ratfun") return RealmKind::RatFun;
  if (s == "matp") return RealmKind::MatP;
  if (s == "matq") return RealmKind::MatQ;
  throw std::invalid_argument("unknown realm '" + s + "' (expected tropical, ratfun, matp or matq)");
}

RealmConfig realm_config_from_json(const Json& j) {
  RealmConfig c;
  c.kind = parse_realm_kind(j.at("realm").get<std::string>());
  if (j.contains("p")) c.p = j.at("p").get<modp::u64>();
  if (j.contains("d")) c.d = j.at("d").get<int>();
  if (j.contains("c")) c.c = j.at("c").is_string() ? j.at("c").get<std::string>() : j.at("c").dump();
  if (c.kind == RealmKind::MatP && !modp::is_prime(c.p)) throw std::invalid_argument("p must be prime");
  if (c.d < 1) throw std::invalid_argument("d must be >= 1");
  return c;
}

Json realm_config_to_json(const RealmConfig& c) {
  Json out = {{"realm", to_string(c.kind)}};
  if (c.kind == RealmKind::MatP) out["p"] = c.p;
  if (c.kind == RealmKind::MatP || c.kind == RealmKind::MatQ) out["d"] = c.d;
  if (c.c) out["c"] = *c.c;
  return out;
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

Json value_to_json(const TropicalRealm&, const mpq_class& v) { return rational_string(v); }
Json value_to_json(const RatFunRealm& r, const RationalFunction& v) { return r.to_string(v); }

Json value_to_json(const MatPRealm& r, const Matrix<modp::u64>& v) {
  Json rows = Json::array();
  for (int i = 0; i < r.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < r.dim(); ++k) row.push_back(v(i, k));
    rows.push_back(row);
  }
  return rows;
}

Json value_to_json(const MatQRealm& r, const Matrix<mpq_class>& v) {
  Json rows = Json::array();
  for (int i = 0; i < r.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < r.dim(); ++k) row.push_back(rational_string(v(i, k)));
    rows.push_back(row);
  }
  return rows;
}

mpq_class tropical_value_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw std::invalid_argument("tropical value must be a rational string, got " + j.dump());
}

RationalFunction ratfun_value_from_json(const RatFunRealm& r, const Json& j) {
  if (j.is_number_integer()) return r.from_int(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("symbolic value must be an expression string, got " + j.dump());
  return evaluate(j.get<std::string>(), r, {});
}

namespace {

template <class R, class Coeff, class ParseEntry>
Matrix<Coeff> matrix_from_json(const R& r, const Json& j, ParseEntry&& parse) {
  const int d = r.dim();
  std::vector<Coeff> entries;
  if (d == 1 && !j.is_array()) {
    entries.push_back(parse(j));
    return r.from_entries(std::move(entries));
  }
  if (!j.is_array() || j.size() != static_cast<size_t>(d)) {
    throw std::invalid_argument("matrix value must be " + std::to_string(d) + " rows, got " + j.dump());
  }
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != static_cast<size_t>(d)) {
      throw std::invalid_argument("matrix row must have " + std::to_string(d) + " entries, got " + row.dump());
    }
    for (const Json& e : row) entries.push_back(parse(e));
  }
  return r.from_entries(std::move(entries));
}

}  // namespace

Matrix<modp::u64> matp_value_from_json(const MatPRealm& r, const Json& j) {
  const modp::Field& f = r.ops().field;
  return matrix_from_json<MatPRealm, modp::u64>(r, j, [&](const Json& e) -> modp::u64 {
    if (e.is_number_unsigned()) return e.get<modp::u64>() % f.modulus();
    if (e.is_number_integer()) return f.from_int(e.get<long long>());
    if (e.is_string()) {
      mpz_class z(e.get<std::string>());
      mpz_class m = z % mpz_class(std::to_string(f.modulus()));
      if (m < 0) m += mpz_class(std::to_string(f.modulus()));
      return std::stoull(m.get_str());
    }
    throw std::invalid_argument("matp entry must be an integer, got " + e.dump());
  });
}

Matrix<mpq_class> matq_value_from_json(const MatQRealm& r, const Json& j) {
  return matrix_from_json<MatQRealm, mpq_class>(r, j, [](const Json& e) { return tropical_value_from_json(e); });
}

const Json& labels_object(const Json& j) {
  if (j.is_object() && j.contains("labels") && j.at("labels").is_object()) return j.at("labels");
  return j;
}

std::vector<std::string> symbolic_names_in(const Poset& p, const Json& j) {
  const Json& obj = labels_object(j);
  std::vector<std::string> out;
  std::set<std::string> seen{"C"};
  std::function<void(const Expr&)> walk = [&](const Expr& e) {
    if (e.kind == Expr::Kind::Name) {
      if (seen.insert(e.name).second) out.push_back(e.name);
    }
    for (const auto& a : e.args) walk(*a);
  };
  for (Element x : p.linear_extension()) {
    auto it = obj.find(p.name(x));
    if (it != obj.end() && it->is_string()) walk(*parse_expr(it->get<std::string>()));
  }
  return out;
}

Json combinatorial_orbits_to_json(const Poset& rect, const std::vector<CombinatorialOrbit>& orbits) {
  Json list = Json::array();
  for (const auto& o : orbits) {
    Json antichains = Json::array();
    for (const auto& a : o.antichains) {
      Json members = Json::array();
      for (Element x : a) members.push_back(rect.name(x));
      antichains.push_back(members);
    }
    Json pos = Json::array(), neg = Json::array();
    for (const auto& v : o.positive_fiber_avgs) pos.push_back(rational_string(v));
    for (const auto& v : o.negative_fiber_avgs) neg.push_back(rational_string(v));
    list.push_back({{"size", o.period()},
                    {"antichains", antichains},
                    {"st_words", o.st_words},
                    {"cardinality_avg", rational_string(o.cardinality_avg)},
                    {"fiber_avgs", {{"positive", pos}, {"negative", neg}}}});
  }
  return list;
}

Json fuzz_report_to_json(const FuzzReport& r) {
  Json cells = Json::array();
  long steps = 0;
  int counterexamples = 0;
  for (const auto& c : r.cells) {
    steps += c.nar_steps;
    counterexamples += static_cast<int>(c.counterexample_seeds.size());
    cells.push_back({{"a", c.a},
                     {"b", c.b},
                     {"d", c.d},
                     {"p", c.p},
                     {"trials", c.trials},
                     {"passes", c.passes},
                     {"failures", c.failures},
                     {"exhausted", c.exhausted},
                     {"singular_resamples", c.resamples},
                     {"early_returns", c.early_returns},
                     {"counterexample_seeds", c.counterexample_seeds},
                     {"unconfirmed_seeds", c.unconfirmed_seeds},
                     {"exhausted_seeds", c.exhausted_seeds}});
  }
  return {{"seed", r.seed},
          {"trials_per_cell", r.trials_per_cell},
          {"nar_steps", steps},
          {"counterexamples", counterexamples},
          {"clean", r.clean()},
          {"note", kNarPeriodicityNote},
          {"cells", cells}};
}

Json pl_report_to_json(const PlHomomesyReport& r) {
  Json out = {{"realm", "tropical"},
              {"a", r.a},
              {"b", r.b},
              {"samples", r.samples},
              {"seed", r.seed},
              {"expected",
               {{"positive_fiber_mean", rational_string(r.expected_positive)},
                {"negative_fiber_mean", rational_string(r.expected_negative)},
                {"label_sum_mean", rational_string(r.expected_label_sum)}}},
              {"passes", r.passes},
              {"checks",
               {{"st_rotation", r.rotation_failures == 0},
                {"chain_polytope_preserved", r.polytope_failures == 0},
                {"period_a_plus_b", r.period_failures == 0},
                {"fiber_means", r.mean_failures == 0}}},
              {"failing_seeds", r.failing_seeds},
              {"ok", r.ok()}};
  if (!r.details.empty()) {
    Json details = Json::array();
    for (const auto& s : r.details) {
      Json pos = Json::array(), neg = Json::array();
      for (const auto& v : s.positive_means) pos.push_back(rational_string(v));
      for (const auto& v : s.negative_means) neg.push_back(rational_string(v));
      details.push_back({{"seed", s.seed},
                         {"positive_fiber_means", pos},
                         {"negative_fiber_means", neg},
                         {"label_sum_mean", rational_string(s.label_sum_mean)},
                         {"ok", s.ok()}});
    }
    out["samples_detail"] = details;
  }
  return out;
}

Json birational_report_to_json(const BirationalReport& r) {
  return {{"realm", "matp"},
          {"d", 1},
          {"a", r.a},
          {"b", r.b},
          {"samples", r.samples},
          {"seed", r.seed},
          {"passes", r.passes},
          {"checks",
           {{"period_a_plus_b", r.period_failures == 0},
            {"st_rotation", r.rotation_failures == 0},
            {"fiber_products", r.fiber_failures == 0}}},
          {"exhausted", r.exhausted},
          {"failing_seeds", r.failing_seeds},
          {"ok", r.ok()}};
}

Json crosscheck_report_to_json(const CrossCheckReport& r) {
  return {{"a", r.a},
          {"b", r.b},
          {"d", r.d},
          {"samples", r.samples},
          {"seed", r.seed},
          {"transfer_vs_toggles", r.modes_agree},
          {"closed_form_vs_nar", r.closed_form_agree},
          {"linear_extension_independent", r.extension_independent},
          {"chain_expansion_vs_recurrence", r.chains_agree},
          {"toggle_forms_agree", r.toggle_forms_agree},
          {"exhausted", r.exhausted},
          {"failing_seeds", r.failing_seeds},
          {"ok", r.ok()}};
}

}  // namespace rowmotion
