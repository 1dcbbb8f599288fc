#include "rowmotion/transfer.hpp"

#include <functional>

namespace rowmotion {

std::string to_string(TransferKind kind) {
  switch (kind) {
    case TransferKind::Theta: return "theta";
    case TransferKind::Nabla: return "nabla";
    case TransferKind::Delta: return "delta";
    case TransferKind::NablaInv: return "nabla-inv";
    case TransferKind::DeltaInv: return "delta-inv";
  }
  return "?";
}

std::string to_string(RowmotionMode mode) { return mode == RowmotionMode::Transfer ? "transfer" : "toggles"; }

TransferKind parse_transfer_kind(const std::string& s) {
  for (auto k : {TransferKind::Theta, TransferKind::Nabla, TransferKind::Delta, TransferKind::NablaInv,
                 TransferKind::DeltaInv}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown transfer kind '" + s + "'");
}

RowmotionMode parse_mode(const std::string& s) {
  if (s == "transfer") return RowmotionMode::Transfer;
  if (s == "toggles") return RowmotionMode::Toggles;
  throw std::invalid_argument("unknown rowmotion mode '" + s + "' (expected transfer|toggles)");
}

std::vector<std::vector<Element>> chains_down_from(const Poset& p, Element v) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> path{v};
  std::function<void(Element)> walk = [&](Element x) {
    const auto& downs = p.lower_covers(x);
    if (downs.empty()) {
      out.emplace_back(path.rbegin(), path.rend());
      return;
    }
    for (Element y : downs) {
      path.push_back(y);
      walk(y);
      path.pop_back();
    }
  };
  walk(v);
  return out;
}

std::vector<std::vector<Element>> chains_up_from(const Poset& p, Element v) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> path{v};
  std::function<void(Element)> walk = [&](Element x) {
    const auto& ups = p.upper_covers(x);
    if (ups.empty()) {
      out.push_back(path);
      return;
    }
    for (Element y : ups) {
      path.push_back(y);
      walk(y);
      path.pop_back();
    }
  };
  walk(v);
  return out;
}

}  // namespace rowmotion
