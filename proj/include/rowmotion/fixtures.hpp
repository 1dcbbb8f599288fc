#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rowmotion/kernels.hpp"

namespace rowmotion {

struct FixtureResult {
  std::string name;
  std::string reproduces;  // the worked example or figure this pins down
  bool passed = false;
  std::string detail;      // first mismatch, or a short summary
  double seconds = 0;
};

/// Every worked example as a named regression check.  A failing or throwing
/// fixture is recorded and the run continues.
std::vector<FixtureResult> run_figure_fixtures(std::uint64_t seed = 1, Execution exec = Execution::Parallel);

/// Runs a single fixture by name; throws std::invalid_argument if unknown.
FixtureResult run_fixture(const std::string& name, std::uint64_t seed = 1, Execution exec = Execution::Parallel);

std::vector<std::string> fixture_names();

/// The [2]x[2] NAR orbit on d x d matrices: every closed-form label of
/// NAR, NAR^2, NAR^3 and the ST word of each iterate, against toggle-mode NAR.
struct NarOrbitCheck {
  int d = 0, samples = 0;
  int labels_agree = 0;
  int st_words_agree = 0;
  int order_four = 0;  // NAR^4 = id with no earlier return
  int exhausted = 0;
  std::vector<std::uint64_t> failing_seeds;
  bool ok() const { return exhausted == 0 && labels_agree == samples && st_words_agree == samples && order_four == samples; }
};

NarOrbitCheck nar_2x2_orbit_check(int d, int samples, std::uint64_t seed, Execution exec = Execution::Parallel);

/// inv(inv(x)+inv(y)) against its two valid rewritings and four invalid ones.
struct SkewIdentityCheck {
  int d = 0, samples = 0;
  int positive_holds = 0;                             // both valid rewritings agree
  std::vector<std::pair<std::string, int>> negative;  // invalid rewriting -> samples where it fails
  int exhausted = 0;
};

SkewIdentityCheck skew_identity_check(int d, int samples, std::uint64_t seed, Execution exec = Execution::Parallel);

/// The rewritings of inv(inv(x)+inv(y)) that are not identities.
const std::vector<std::string>& skew_non_identities();

}  // namespace rowmotion
