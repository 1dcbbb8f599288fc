#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// Subsets are sorted vectors of element ids.
using ElementSet = std::vector<Element>;
using Antichain = ElementSet;
using OrderIdeal = ElementSet;
using OrderFilter = ElementSet;

bool is_antichain(const Poset& p, const ElementSet& s);
bool is_order_ideal(const Poset& p, const ElementSet& s);
bool is_order_filter(const Poset& p, const ElementSet& s);

/// Every antichain exactly once, sorted by size then lexicographically.
std::vector<Antichain> enumerate_antichains(const Poset& p);

/// Test oracle: filters all 2^n subsets.  n <= 20.
std::vector<Antichain> brute_force_antichains(const Poset& p);

// The three steps of antichain rowmotion.  Each validates its input and
// throws std::invalid_argument on a set of the wrong kind.
OrderIdeal downward_saturation(const Poset& p, const Antichain& a);
OrderFilter complement(const Poset& p, const OrderIdeal& ideal);
Antichain minimal_elements(const Poset& p, const OrderFilter& filter);

Antichain rowmotion_antichain(const Poset& p, const Antichain& a);

/// 0/1 Stanley-Thomas word of an antichain of [a] x [b], from the fiber
/// definition: entry k <= a is 1 iff the antichain meets row k, entry a+l is
/// 1 iff it misses column l.
std::vector<int> st_word_binary(const Poset& rect, const Antichain& a);

/// The same word from indicator sums (row sums; one minus column sums).
std::vector<int> st_word_binary_from_sums(const Poset& rect, const Antichain& a);

struct CombinatorialOrbit {
  std::vector<Antichain> antichains;  // starts at the lexicographically least member
  std::vector<std::vector<int>> st_words;
  mpq_class cardinality_avg;
  std::vector<mpq_class> positive_fiber_avgs;  // p_k
  std::vector<mpq_class> negative_fiber_avgs;  // n_l
  int period() const { return static_cast<int>(antichains.size()); }
};

/// Partitions all antichains of [a] x [b] into rowmotion orbits, listed by
/// canonical representative, with exact orbit averages of the fiber statistics.
std::vector<CombinatorialOrbit> combinatorial_orbits(const Poset& rect);

std::string format_set(const Poset& p, const ElementSet& s);

}  // namespace rowmotion
