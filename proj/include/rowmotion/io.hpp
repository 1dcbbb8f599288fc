#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/kernels.hpp"
#include "rowmotion/matrix.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/ratfun.hpp"
#include "rowmotion/transfer.hpp"
#include "rowmotion/tropical.hpp"

namespace rowmotion {

using Json = nlohmann::ordered_json;

// Posets: {"elements":[...], "covers":[[lo,hi],...]} or {"chains":[a,b]}.
Poset poset_from_json(const Json& j);
/// Canonical form: element names in id order and the reduced covers.
/// Rectangles also carry "chains".
Json poset_to_json(const Poset& p);

enum class RealmKind { Tropical, RatFun, MatP, MatQ };

std::string to_string(RealmKind k);
RealmKind parse_realm_kind(const std::string& s);

/// {"realm":"tropical|ratfun|matp|matq","p":...,"d":...,"c":"p/q"}
struct RealmConfig {
  RealmKind kind = RealmKind::Tropical;
  modp::u64 p = modp::kMersenne61;
  int d = 1;
  std::optional<std::string> c;  // central constant; tropical default 1, matrix default random per sample
};

RealmConfig realm_config_from_json(const Json& j);
Json realm_config_to_json(const RealmConfig& c);

// Values.  Tropical: "p/q".  Rational functions: expression strings in the
// realm's variables.  Matrices: row-major arrays of integers mod p (matp)
// or rational strings (matq).
Json value_to_json(const TropicalRealm& r, const mpq_class& v);
Json value_to_json(const RatFunRealm& r, const RationalFunction& v);
Json value_to_json(const MatPRealm& r, const Matrix<modp::u64>& v);
Json value_to_json(const MatQRealm& r, const Matrix<mpq_class>& v);

mpq_class tropical_value_from_json(const Json& j);
RationalFunction ratfun_value_from_json(const RatFunRealm& r, const Json& j);
Matrix<modp::u64> matp_value_from_json(const MatPRealm& r, const Json& j);
Matrix<mpq_class> matq_value_from_json(const MatQRealm& r, const Json& j);

/// {"labels": {name: value, ...}}; a bare object of name -> value is accepted too.
const Json& labels_object(const Json& j);

/// Variable names used by a symbolic labeling file, ordered along the
/// poset's linear extension (first appearance), "C" excluded.
std::vector<std::string> symbolic_names_in(const Poset& p, const Json& labels);

template <class R, class Parse>
Labeling<typename R::value_type> labeling_from_json(const Poset& p, const R& r, const Json& j, Parse&& parse) {
  const Json& obj = labels_object(j);
  if (!obj.is_object()) throw std::invalid_argument("labeling must be a JSON object keyed by element name");
  Labeling<typename R::value_type> g;
  g.reserve(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    auto it = obj.find(p.name(x));
    if (it == obj.end()) throw std::invalid_argument("labeling has no value for element " + p.name(x));
    g.push_back(parse(r, *it));
  }
  if (obj.size() != static_cast<size_t>(p.size())) throw std::invalid_argument("labeling names unknown elements");
  return g;
}

template <class R>
Json labeling_to_json(const Poset& p, const R& r, const Labeling<typename R::value_type>& g) {
  Json out = Json::object();
  for (Element x = 0; x < p.size(); ++x) out[p.name(x)] = value_to_json(r, g[x]);
  return out;
}

// Reports.
Json combinatorial_orbits_to_json(const Poset& rect, const std::vector<CombinatorialOrbit>& orbits);
Json fuzz_report_to_json(const FuzzReport& r);
Json pl_report_to_json(const PlHomomesyReport& r);
Json birational_report_to_json(const BirationalReport& r);
Json crosscheck_report_to_json(const CrossCheckReport& r);

std::string rational_string(const mpq_class& q);

/// The caveat attached to every NAR periodicity report.
extern const char* const kNarPeriodicityNote;

}  // namespace rowmotion
