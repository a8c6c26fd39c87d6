#pragma once

#include <map>
#include <utility>
#include <vector>

#include "torext/criteria.hpp"
#include "torext/mapping_class.hpp"
#include "torext/surface_model.hpp"

namespace torext {

// Coefficients lambda(k, l), 1 <= k <= l <= size, with
// M = sum lambda(k, l) * m(k, l) where m(k, l) is the indicator matrix of the
// square block {k..l} x {k..l}. Zero coefficients are omitted.
struct SymBasisCoefficients {
  std::size_t size = 0;
  std::map<std::pair<int, int>, Integer> lambda;

  Integer at(int k, int l) const;
};

// The indicator matrix m(subset); indices are 1-based.
IntMatrix indicator_matrix(std::size_t size, const std::vector<int>& subset);
IntMatrix indicator_matrix(std::size_t size, int k, int l);

// Throws NotSymmetric.
SymBasisCoefficients sym_basis_change(const IntMatrix& m);
IntMatrix reconstruct(const SymBasisCoefficients& coefficients);

// [U] = sum of [C_{j,i}] over i in subset, as a class in H_1(S).
H1Class peripheral_class(const HomologyModel& model, int j, const std::vector<int>& subset);

// theta -> m <theta, [U]>_c [U] for U the union of the chosen circles of
// component j. Throws DimensionError on an empty or out-of-range subset.
DifferenceMap peripheral_twist_delta(const HomologyModel& model, int j, const std::vector<int>& subset,
                                     const Integer& m);

struct Realization {
  // Peripheral twists in Q whose difference map is the requested one.
  TwistWord word;
  // The same twists, each followed by the opposite twist about the same class
  // in the complementary component: a Torelli extension of word.
  TwistWord bitwist;
};

// Throws NotSymmetric or NotCompletelyReducible.
Realization realize_delta(const HomologyModel& model, const DifferenceMap& delta);

// One factor per boundary circle C, class [C], exponent m_C.
TwistWord build_boundary_multitwist(const HomologyModel& model, const DiagonalMap& exponents);

}  // namespace torext
