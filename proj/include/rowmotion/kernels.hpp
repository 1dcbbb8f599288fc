#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rowmotion/modp.hpp"

namespace rowmotion {

/// Every batch kernel has a serial reference path and an OpenMP path.  Both
/// give identical results: each item draws from its own derived seed and
/// results are stored by index.
enum class Execution { Serial, Parallel };

std::string to_string(Execution e);

/// Runs f(0..n-1) and returns the results in index order.  An exception in
/// any item is rethrown after the loop (lowest index first).
template <class T, class F>
std::vector<T> run_batch(int n, Execution exec, F&& f) {
  std::vector<T> out(static_cast<size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(n));
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// NAR periodicity fuzzing

struct FuzzCell {
  int a = 0, b = 0, d = 0;
  modp::u64 p = 0;
  int trials = 0;
  int passes = 0;
  int failures = 0;   // confirmed counterexamples
  int exhausted = 0;  // trials whose sampler gave up
  long resamples = 0;
  int early_returns = 0;  // labelings that came back before a+b steps
  long nar_steps = 0;
  std::vector<std::uint64_t> counterexample_seeds;
  std::vector<std::uint64_t> unconfirmed_seeds;  // toggle path failed, transfer path did not
  std::vector<std::uint64_t> exhausted_seeds;
};

/// For each trial: sample a nonsingular d x d matrix labeling of [a] x [b]
/// over F_p, apply toggle-mode NAR a+b times and compare with the start.
/// A failure is recomputed once along the transfer-mode path before it is
/// reported as a counterexample.
FuzzCell fuzz_nar_periodicity(int a, int b, int d, int trials, std::uint64_t seed,
                              Execution exec = Execution::Parallel, modp::u64 p = modp::kMersenne61);

struct FuzzReport {
  std::uint64_t seed = 0;
  int trials_per_cell = 0;
  std::vector<FuzzCell> cells;
  bool clean() const;
};

FuzzReport fuzz_nar_grid(int max_a, int max_b, int max_d, int trials, std::uint64_t seed,
                         Execution exec = Execution::Parallel, modp::u64 p = modp::kMersenne61);

// ---------------------------------------------------------------------------
// Piecewise-linear homomesy on chain-polytope samples

struct PlSample {
  std::uint64_t seed = 0;
  bool rotation = true;        // ST rotation at every step
  bool in_polytope = true;     // every iterate stays in the chain polytope
  bool returns = true;         // PLAR^(a+b) = id
  std::vector<mpq_class> positive_means;
  std::vector<mpq_class> negative_means;
  mpq_class label_sum_mean;
  bool means_ok = true;
  bool ok() const { return rotation && in_polytope && returns && means_ok; }
};

struct PlHomomesyReport {
  int a = 0, b = 0, samples = 0;
  std::uint64_t seed = 0;
  mpq_class expected_positive, expected_negative, expected_label_sum;
  int passes = 0;
  int rotation_failures = 0, polytope_failures = 0, period_failures = 0, mean_failures = 0;
  std::vector<std::uint64_t> failing_seeds;
  std::vector<PlSample> details;  // kept only when requested
  bool ok() const { return passes == samples; }
};

PlHomomesyReport pl_homomesy_report(int a, int b, int samples, std::uint64_t seed,
                                    Execution exec = Execution::Parallel, bool keep_details = false);

// ---------------------------------------------------------------------------
// Birational rowmotion on F_p scalars (d = 1)

struct BirationalReport {
  int a = 0, b = 0, samples = 0;
  std::uint64_t seed = 0;
  int passes = 0;
  int period_failures = 0, rotation_failures = 0, fiber_failures = 0, exhausted = 0;
  std::vector<std::uint64_t> failing_seeds;
  bool ok() const { return passes == samples; }
};

/// BAR^(a+b) = id, ST rotation at each step, and every fiber orbit product
/// equal to C^b (positive) or C^a (negative).
BirationalReport birational_scalar_report(int a, int b, int samples, std::uint64_t seed,
                                          Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// Noncommutative cross-checks on matrix samples

struct CrossCheckReport {
  int a = 0, b = 0, d = 0, samples = 0;
  std::uint64_t seed = 0;
  int modes_agree = 0;            // transfer vs toggles
  int closed_form_agree = 0;      // closed form vs NAR, both interior factorizations
  int extension_independent = 0;  // 5 random linear extensions
  int chains_agree = 0;           // chain expansion vs recurrence, both inverse transfers
  int toggle_forms_agree = 0;     // closed vs saturated-chain toggle at every element
  int exhausted = 0;
  std::vector<std::uint64_t> failing_seeds;
  bool ok() const;
};

CrossCheckReport nc_crosscheck(int a, int b, int d, int samples, std::uint64_t seed,
                               Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// Combinatorial periodicity

struct CombinatorialCell {
  int a = 0, b = 0;
  int antichains = 0;
  bool periodic = true;   // rowmotion^(a+b) = id on every antichain
  bool rotation = true;   // ST word rotates at every antichain
  bool bijective = true;  // orbits partition all antichains
};

std::vector<CombinatorialCell> combinatorial_periodicity(int max_a, int max_b, Execution exec = Execution::Parallel);

}  // namespace rowmotion
