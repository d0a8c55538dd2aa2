#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "numrad/bounds.hpp"
#include "numrad/ensembles.hpp"

namespace numrad {

/// What a property sees for one fuzzed matrix.
struct TrialView {
  std::size_t trial = 0;
  Ensemble ensemble = Ensemble::Ginibre;
  const ComplexMatrix& t;
  const BoundReport& report;
};

/// A property registered on top of the built-in suite. `check` returns the
/// observed values when the property is violated and nullopt when it holds.
struct ExtraProperty {
  std::string id;
  std::function<std::optional<nlohmann::json>(const TrialView&)> check;
};

struct FuzzConfig {
  std::vector<std::size_t> dims{2, 3, 4};
  int trials = 100;  // matrices per ensemble; dims are assigned round-robin
  std::vector<Ensemble> ensembles{Ensemble::Ginibre};
  std::uint64_t seed = 0;
  double tol = 1e-7;           // inequality slack on the w scale
  double radius_tol = 1e-8;    // bracket width for every radius; well inside tol
  int alpha_restarts = 4;      // random starts per alpha-norm estimate
  int vector_samples = 8;      // (x, y, r) triples for the scalar ingredient checks
  unsigned threads = 0;        // 0: hardware concurrency
  std::vector<ExtraProperty> extra;
};

struct Violation {
  std::size_t trial = 0;
  Ensemble ensemble = Ensemble::Ginibre;
  std::size_t dim = 0;
  std::string property;
  ComplexMatrix matrix;
  nlohmann::json observed;
};

/// Tally for w(T) <= min_a ||a|T| + (1-a)|T*|||, which is recorded but never asserted.
struct OpenQuestionTally {
  std::size_t support = 0;
  std::size_t counterexamples = 0;
  std::vector<std::size_t> counterexample_trials;
  double max_excess = 0.0;  // largest w.lower - min_a ||...|| seen, may be negative
};

inline constexpr const char* kNumericalFailure = "NUMERICAL_FAILURE";

struct FuzzSummary {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::size_t> dims;
  std::vector<Ensemble> ensembles;
  double tol = 0.0;
  std::size_t matrices = 0;
  std::size_t checks = 0;
  std::vector<Violation> violations;  // sorted by (trial, property)
  OpenQuestionTally open_question;
  double elapsed = 0.0;  // seconds

  std::size_t numerical_failures() const;
  /// 0 clean, 1 any inequality violation, 3 only numerical failures.
  int exit_code() const;
  nlohmann::json to_json(bool include_timing = true) const;
};

/// Throws BadConfig for trials < 1, empty dims/ensembles or a zero dimension.
FuzzSummary fuzz(const FuzzConfig& config);

}  // namespace numrad
