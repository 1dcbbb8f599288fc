#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rowmotion {

/// An inverse was requested of a value that has none.
class SingularValue : public std::domain_error {
 public:
  explicit SingularValue(const std::string& what, int element = -1, int step = -1)
      : std::domain_error(what), element_(element), step_(step) {}
  int element() const { return element_; }
  int step() const { return step_; }

  SingularValue at_element(int element) const { return SingularValue(what(), element, step_); }
  SingularValue at_step(int step) const { return SingularValue(what(), element_, step); }

 private:
  int element_;
  int step_;
};

/// A sampler gave up after its retry bound.
class SamplingExhausted : public std::runtime_error {
 public:
  SamplingExhausted(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Value domain shared by every lifting of rowmotion.
///
/// A realm is a small descriptor (dimension, modulus, the central constant C)
/// that performs arithmetic on its `value_type`.  Multiplication need not be
/// commutative; the constant must be central.  `inv` throws SingularValue
/// when no inverse exists.
template <class R>
concept Realm = requires(const R& r, const typename R::value_type& x) {
  typename R::value_type;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.constant() } -> std::convertible_to<typename R::value_type>;
  { r.add(x, x) } -> std::convertible_to<typename R::value_type>;
  { r.mul(x, x) } -> std::convertible_to<typename R::value_type>;
  { r.inv(x) } -> std::convertible_to<typename R::value_type>;
  { r.eq(x, x) } -> std::same_as<bool>;
  { r.commutative() } -> std::same_as<bool>;
  { r.tropical() } -> std::same_as<bool>;
  { r.to_string(x) } -> std::same_as<std::string>;
};

}  // namespace rowmotion
