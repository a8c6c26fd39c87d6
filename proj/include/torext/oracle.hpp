#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torext/criteria.hpp"
#include "torext/mapping_class.hpp"
#include "torext/serialize.hpp"
#include "torext/surface_model.hpp"

namespace torext {

struct ConfigBounds {
  int max_q_genus = 2;
  int max_component_genus = 2;
  int max_boundary = 4;    // per component
  int max_components = 3;
};

struct TrialPlan {
  std::uint64_t seed = 0;
  int trials = 200;
  ConfigBounds bounds;
  int exponent_bound = 3;

  // Throws std::invalid_argument.
  void validate() const;
};

// Independent, reproducible stream for (seed, index, purpose).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream);

SubsurfaceConfig random_config(const TrialPlan& plan, std::uint64_t index);

// Peripheral twists about unions of boundary circles of one component,
// occasionally about unions spanning several components. Every such word is
// weakly Torelli.
TwistWord random_weakly_torelli_word(const HomologyModel& model, const TrialPlan& plan, std::uint64_t index);

IntMatrix random_symmetric_matrix(std::size_t size, int bound, std::mt19937_64& rng);
// Symmetric, completely reducible, entries in [-bound, bound].
DifferenceMap random_symmetric_reducible_delta(const HomologyModel& model, int bound, std::mt19937_64& rng);
DiagonalMap random_diagonal(const HomologyModel& model, int bound, std::mt19937_64& rng);

struct InvariantReport {
  std::string invariant;
  int trials = 0;
  std::vector<json> failures;

  bool passed() const { return failures.empty(); }
};

// Test hook: perturbs the pairing used by the adjunction check.
struct FaultInjection {
  bool flip_pairing_sign = false;
};

std::vector<std::string> invariant_names();
// Throws std::invalid_argument for an unknown name.
InvariantReport verify_invariant(const std::string& name, const TrialPlan& plan, const FaultInjection& faults = {});
std::vector<InvariantReport> verify_all(const TrialPlan& plan, const FaultInjection& faults = {});

json to_json(const InvariantReport& report);
json to_json(const std::vector<InvariantReport>& reports);

// A single peripheral twist about [C_0] + [C_1] in a genus-one Q whose
// complement is one genus-one piece bounded by four circles. Throws
// std::invalid_argument for m = 0.
SubsurfaceConfig example4_config();
TwistWord example4_word(const HomologyModel& model, const Integer& m);
AnalysisReport example4_report(const Integer& m);

}  // namespace torext
