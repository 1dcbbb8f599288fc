#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rowmotion/matrix.hpp"
#include "rowmotion/poset.hpp"
#include "rowmotion/ratfun.hpp"
#include "rowmotion/transfer.hpp"
#include "rowmotion/tropical.hpp"

namespace rowmotion {

inline constexpr int kMaxResamples = 32;

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent stream seed for (master, i0, i1, ...), so trials can run in
/// any order and still draw the same values.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix64(master);
  for (std::uint64_t p : path) s = mix64(s ^ mix64(p + 0x632BE59BD9B4E019ULL));
  return s;
}

/// mt19937_64 with unbiased bounded draws that do not depend on the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }
  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Variable names for a generic symbolic labeling, assigned along the
/// linear extension: the last n letters of the alphabet when n <= 25
/// (so [2]x[2] gets w,x,y,z), otherwise x1, x2, ...
std::vector<std::string> symbolic_variable_names(const Poset& p);

struct SymbolicSample {
  RatFunRealm realm;
  Labeling<RationalFunction> labels;
};

/// One fresh variable per element.
SymbolicSample symbolic_labeling(const Poset& p, bool reduce_gcd = true);

/// Uniform entries in F_p, one independent d x d matrix per element.
Labeling<Matrix<modp::u64>> random_matp_labeling(const Poset& p, const MatPRealm& realm, Rng& rng);

/// Uniform small-integer entries in [-bound, bound].
Labeling<Matrix<mpq_class>> random_matq_labeling(const Poset& p, const MatQRealm& realm, Rng& rng, long bound = 9);

/// Uniform rationals k/q with q in [1, max_den] and k in [0, q].
Labeling<mpq_class> random_tropical_labeling(const Poset& p, Rng& rng, long max_den = 12);

/// A random point of the chain polytope: random labels k/q, rescaled by the
/// largest chain sum when it exceeds 1.
Labeling<mpq_class> random_chain_polytope_point(const Poset& p, Rng& rng, long max_den = 12);

/// Uniformly random choice among the minimal remaining elements at each step
/// (not uniform over all linear extensions).
std::vector<Element> random_linear_extension(const Poset& p, Rng& rng);

struct MatPSample {
  MatPRealm realm;
  Labeling<Matrix<modp::u64>> labels;
  std::uint64_t seed;      // seed of the accepted draw
  int resamples = 0;       // rejected draws before it
};

/// Draws a realm (random nonzero central scalar c, or `fixed_c` when given)
/// and a labeling, redrawing up to kMaxResamples times while `probe` throws
/// SingularValue.  The default probe runs one transfer-mode rowmotion pass.
MatPSample sample_matp(const Poset& p, int d, std::uint64_t seed, modp::u64 prime = modp::kMersenne61,
                       std::optional<modp::u64> fixed_c = std::nullopt,
                       const std::function<void(const MatPRealm&, const Labeling<Matrix<modp::u64>>&)>& probe = {});

}  // namespace rowmotion
