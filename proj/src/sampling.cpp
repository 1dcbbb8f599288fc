#include "rowmotion/sampling.hpp"

#include "rowmotion/polytope.hpp"

namespace rowmotion {

std::vector<std::string> symbolic_variable_names(const Poset& p) {
  const int n = p.size();
  std::vector<std::string> by_position;
  for (int k = 0; k < n; ++k) {
    if (n <= 25) {
      by_position.emplace_back(1, static_cast<char>('z' - (n - 1) + k));
    } else {
      by_position.push_back("x" + std::to_string(k + 1));
    }
  }
  std::vector<std::string> names(n);
  const auto& order = p.linear_extension();
  for (int k = 0; k < n; ++k) names[order[k]] = by_position[k];
  return names;
}

SymbolicSample symbolic_labeling(const Poset& p, bool reduce_gcd) {
  auto names = symbolic_variable_names(p);
  // Realm variables are numbered in linear-extension order, so monomials print
  // in the same order as the letters.
  std::vector<std::string> ordered;
  for (Element x : p.linear_extension()) ordered.push_back(names[x]);
  RatFunRealm realm(ordered, reduce_gcd);
  Labeling<RationalFunction> labels(p.size());
  for (Element x = 0; x < p.size(); ++x) labels[x] = realm.variable(realm.variable_index(names[x]));
  return {std::move(realm), std::move(labels)};
}

Labeling<Matrix<modp::u64>> random_matp_labeling(const Poset& p, const MatPRealm& realm, Rng& rng) {
  const int d = realm.dim();
  const modp::u64 prime = realm.ops().field.modulus();
  Labeling<Matrix<modp::u64>> out;
  out.reserve(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<modp::u64> e(static_cast<size_t>(d) * d);
    for (auto& v : e) v = rng.below(prime);
    out.push_back(realm.from_entries(std::move(e)));
  }
  return out;
}

Labeling<Matrix<mpq_class>> random_matq_labeling(const Poset& p, const MatQRealm& realm, Rng& rng, long bound) {
  const int d = realm.dim();
  Labeling<Matrix<mpq_class>> out;
  for (Element x = 0; x < p.size(); ++x) {
    std::vector<mpq_class> e(static_cast<size_t>(d) * d);
    for (auto& v : e) v = rng.range(-bound, bound);
    out.push_back(realm.from_entries(std::move(e)));
  }
  return out;
}

Labeling<mpq_class> random_tropical_labeling(const Poset& p, Rng& rng, long max_den) {
  Labeling<mpq_class> out;
  for (Element x = 0; x < p.size(); ++x) {
    long q = rng.range(1, max_den);
    mpq_class v(rng.range(0, q), q);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

Labeling<mpq_class> random_chain_polytope_point(const Poset& p, Rng& rng, long max_den) {
  Labeling<mpq_class> g = random_tropical_labeling(p, rng, max_den);
  mpq_class longest = max_chain_sum(p, g);
  if (longest > 1) {
    for (auto& v : g) v /= longest;
  }
  return g;
}

std::vector<Element> random_linear_extension(const Poset& p, Rng& rng) {
  std::vector<int> pending(p.size());
  std::vector<Element> ready;
  for (Element x = 0; x < p.size(); ++x) {
    pending[x] = static_cast<int>(p.lower_covers(x).size());
    if (pending[x] == 0) ready.push_back(x);
  }
  std::vector<Element> out;
  while (!ready.empty()) {
    size_t k = rng.below(ready.size());
    Element x = ready[k];
    ready.erase(ready.begin() + static_cast<long>(k));
    out.push_back(x);
    for (Element y : p.upper_covers(x)) {
      if (--pending[y] == 0) ready.push_back(y);
    }
  }
  return out;
}

MatPSample sample_matp(const Poset& p, int d, std::uint64_t seed, modp::u64 prime, std::optional<modp::u64> fixed_c,
                       const std::function<void(const MatPRealm&, const Labeling<Matrix<modp::u64>>&)>& probe) {
  for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : derive_seed(seed, {static_cast<std::uint64_t>(attempt)});
    Rng rng(s);
    modp::u64 c = fixed_c ? *fixed_c % prime : 1 + rng.below(prime - 1);
    MatPRealm realm = make_matp_realm(d, c, prime);
    auto labels = random_matp_labeling(p, realm, rng);
    try {
      if (probe) {
        probe(realm, labels);
      } else {
        antichain_rowmotion(p, realm, labels);
      }
    } catch (const SingularValue&) {
      continue;
    }
    return MatPSample{std::move(realm), std::move(labels), s, attempt};
  }
  throw SamplingExhausted("no nonsingular matrix labeling after " + std::to_string(kMaxResamples) + " resamples",
                          seed);
}

}  // namespace rowmotion
