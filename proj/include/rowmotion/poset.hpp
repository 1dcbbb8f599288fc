#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rowmotion {

using Element = int;

/// Raised when a cover list does not describe a finite poset.
class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Packed n x n boolean relation, row-major, 64 columns per word.
class BitRelation {
 public:
  BitRelation() = default;
  explicit BitRelation(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  bool test(int row, int col) const {
    return (bits_[static_cast<size_t>(row) * words_ + col / 64] >> (col % 64)) & 1U;
  }
  void set(int row, int col) {
    bits_[static_cast<size_t>(row) * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  /// row(dst) |= row(src)
  void merge_row(int dst, int src) {
    for (int w = 0; w < words_; ++w) {
      bits_[static_cast<size_t>(dst) * words_ + w] |= bits_[static_cast<size_t>(src) * words_ + w];
    }
  }
  int size() const { return n_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Coordinates of an element of [a] x [b], both 1-based.
struct Cell {
  int i;
  int j;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A finite poset on dense ids 0..n-1.  Immutable after construction.
///
/// Covers are stored transitively reduced; `leq` is the reflexive-transitive
/// closure, stored as a bit relation so comparability queries are O(1).
class Poset {
 public:
  Poset() = default;

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Element x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(const std::string& name) const;

  bool leq(Element x, Element y) const { return leq_.test(x, y); }
  bool less(Element x, Element y) const { return x != y && leq_.test(x, y); }
  bool comparable(Element x, Element y) const { return leq_.test(x, y) || leq_.test(y, x); }

  /// Elements covered by x (y with y < x and nothing strictly between).
  const std::vector<Element>& lower_covers(Element x) const { return lower_.at(x); }
  /// Elements covering x.
  const std::vector<Element>& upper_covers(Element x) const { return upper_.at(x); }
  /// All cover pairs (lower, upper), sorted.
  std::vector<std::pair<Element, Element>> cover_pairs() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Deterministic topological order; ties broken by smallest id first.
  const std::vector<Element>& linear_extension() const { return linear_extension_; }
  bool is_linear_extension(const std::vector<Element>& order) const;

  /// Set only for posets built by product_of_chains.
  bool is_rectangle() const { return rect_a_ > 0; }
  int rows() const { return rect_a_; }
  int cols() const { return rect_b_; }
  /// Rectangle element (i,j); ids are column-major: (i-1) + a*(j-1).
  Element at(int i, int j) const;
  Cell cell(Element x) const;

  friend Poset build_poset(std::vector<std::string> names,
                           const std::vector<std::pair<Element, Element>>& covers);
  friend Poset product_of_chains(int a, int b);

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  BitRelation leq_;
  std::vector<Element> linear_extension_;
  int rect_a_ = 0;
  int rect_b_ = 0;
};

/// Validates the cover list (no dangling ids, no duplicates, no cycles),
/// removes covers implied by transitivity and computes the order relation.
Poset build_poset(std::vector<std::string> names,
                  const std::vector<std::pair<Element, Element>>& covers);

/// Same, with element names given only through the cover list (first-seen order).
Poset build_poset(const std::vector<std::pair<std::string, std::string>>& covers);

/// The rectangle [a] x [b] with componentwise order.
Poset product_of_chains(int a, int b);

/// Chain 0 < 1 < ... < n-1.
Poset chain_poset(int n);

/// Brute-force reflexive-transitive closure by repeated relaxation; test oracle
/// for the bit relation and the transitive reduction.
std::vector<std::vector<bool>> brute_force_closure(
    int n, const std::vector<std::pair<Element, Element>>& relations);

/// Fibers of [a] x [b]: positive fiber k is row k, negative fiber l is column l.
struct Fibers {
  std::vector<std::vector<Element>> positive;
  std::vector<std::vector<Element>> negative;
};
Fibers fibers(const Poset& rectangle);

}  // namespace rowmotion
