#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/poset.hpp"

namespace rowmotion {

enum class PolytopeKind { Order, OrderReversing, Chain };

std::string to_string(PolytopeKind kind);
PolytopeKind parse_polytope_kind(const std::string& s);

/// Every maximal chain, bottom first.
std::vector<std::vector<Element>> maximal_chains(const Poset& p);

/// Largest label sum over a chain, by a pass over a linear extension.
mpq_class max_chain_sum(const Poset& p, const std::vector<mpq_class>& g);

/// Exact membership.  Order / order-reversing: values in [0,1] and monotone
/// along every cover.  Chain: values >= 0 and every maximal chain sums to at most 1.
bool polytope_membership(PolytopeKind kind, const Poset& p, const std::vector<mpq_class>& g);

/// 1 on the set, 0 elsewhere.
std::vector<mpq_class> indicator(const Poset& p, const ElementSet& s);

/// The set where the labeling is 1, if it is a 0/1 labeling.
std::optional<ElementSet> support_of_indicator(const std::vector<mpq_class>& g);

}  // namespace rowmotion
