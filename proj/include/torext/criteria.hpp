#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torext/mapping_class.hpp"
#include "torext/surface_model.hpp"

namespace torext {

// An integer exponent per boundary circle, in H_0(c) order. Stands for the
// diagonal map o_C -> m_C [C].
struct DiagonalMap {
  std::vector<Integer> exponents;

  friend bool operator==(const DiagonalMap&, const DiagonalMap&) = default;
};

struct AnalysisReport {
  bool weakly_torelli = false;
  std::optional<DifferenceMap> delta;
  bool symmetric = false;
  bool completely_reducible = false;
  bool extension_by_identity_torelli = false;
  bool extendable_to_torelli = false;
  // Exponents of the boundary multi-twist that corrects the extension by the
  // identity to a Torelli diffeomorphism.
  std::optional<DiagonalMap> multitwist_correctable;
  // Matrix presentation of every component, present when delta is
  // completely reducible.
  std::vector<IntMatrix> component_matrices;
  std::vector<std::string> warnings;
};

struct GroupRanks {
  std::size_t rank_K0 = 0;
  std::size_t rank_H1bar = 0;
  std::size_t rank_Dc = 0;

  friend bool operator==(const GroupRanks&, const GroupRanks&) = default;
};

bool is_symmetric(const HomologyModel& model, const DifferenceMap& delta);
bool is_completely_reducible(const HomologyModel& model, const DifferenceMap& delta);

// (m_ik) with delta(o_{j,i}) = sum_k m_ik c_{j,k}; rows and columns indexed by
// circle indices 1..n_j-1. Throws NotCompletelyReducible.
IntMatrix matrix_presentation(const HomologyModel& model, const DifferenceMap& delta, int j);

// The restriction of the diagonal map to K_0(c).
DifferenceMap restrict_diagonal(const HomologyModel& model, const DiagonalMap& diagonal);

// Some diagonal map whose restriction is delta; exponents of C_{j,0} are 0
// whenever n_j <= 2.
std::optional<DiagonalMap> diagonal_restriction(const HomologyModel& model, const DifferenceMap& delta);

// Deciders over a difference map.
bool extension_by_identity_torelli(const DifferenceMap& delta);
bool extendable_to_torelli(const HomologyModel& model, const DifferenceMap& delta);
std::optional<DiagonalMap> correcting_multitwist(const HomologyModel& model, const DifferenceMap& delta);

// Deciders over a word of twists in Q. Throw LocusError.
bool decide_extension_by_identity(const HomologyModel& model, const TwistWord& word);
bool decide_extendable(const HomologyModel& model, const TwistWord& word);
// Throws NotWeaklyTorelli as well.
std::optional<DiagonalMap> decide_multitwist_correctable(const HomologyModel& model, const TwistWord& word);

bool guaranteed_correctable(const SubsurfaceConfig& config);

GroupRanks group_ranks(const SubsurfaceConfig& config);

AnalysisReport analyze(const HomologyModel& model, const TwistWord& word);

}  // namespace torext
