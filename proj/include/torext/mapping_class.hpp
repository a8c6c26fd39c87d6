#pragma once

#include <vector>

#include "torext/exactlin.hpp"
#include "torext/surface_model.hpp"

namespace torext {

// Where a twist circle lives: in Q, in the complementary component P_j, or
// anywhere in S.
struct Locus {
  enum class Kind { InQ, InComplement, Ambient };

  Kind kind = Kind::InQ;
  int component = -1;

  static Locus q() { return {Kind::InQ, -1}; }
  static Locus complement(int j) { return {Kind::InComplement, j}; }
  static Locus ambient() { return {Kind::Ambient, -1}; }

  friend bool operator==(const Locus&, const Locus&) = default;
};

// t_Z^m where [Z] = clazz.
struct TwistFactor {
  H1Class clazz;
  Integer exponent;
  Locus locus;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

// A product of twists in composition order: factors[0] is applied last.
struct TwistWord {
  std::vector<TwistFactor> factors;

  bool empty() const { return factors.empty(); }
  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

// wordA o wordB.
TwistWord concat(const TwistWord& a, const TwistWord& b);
TwistWord invert(const TwistWord& word);

// Throws LocusError naming the first factor whose class leaves its locus, or
// DimensionError when a class has the wrong length.
void validate_word(const HomologyModel& model, const TwistWord& word);
// Throws LocusError unless every factor lies in Q.
void require_q_word(const HomologyModel& model, const TwistWord& word);

// Indices of factors whose class is a proper multiple of another class.
std::vector<std::size_t> nonprimitive_factors(const TwistWord& word);

// Matrix of x -> x + m <x, z> z for a single factor.
IntMatrix transvection(const HomologyModel& model, const H1Class& z, const Integer& m);

// Action of the word on H_1(S). Columns are images of basis vectors.
IntMatrix transvection_action(const HomologyModel& model, const TwistWord& word);

bool is_weakly_torelli(const HomologyModel& model, const TwistWord& word);

// A homomorphism K_0(c) -> H_1(c)bar. matrix * theta gives the image of theta
// in K_0 coordinates; blocks[j] is component j's coordinate range on both
// sides.
class DifferenceMap {
 public:
  DifferenceMap() = default;
  DifferenceMap(const HomologyModel& model, IntMatrix matrix);

  static DifferenceMap zero(const HomologyModel& model);

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<BlockRange>& blocks() const { return blocks_; }
  std::size_t size() const { return matrix_.rows(); }

  H1barClass operator()(const K0Class& theta) const;

  bool is_zero() const { return matrix_.is_zero(); }

  friend DifferenceMap operator+(const DifferenceMap& a, const DifferenceMap& b);
  friend DifferenceMap operator-(const DifferenceMap& a);
  friend DifferenceMap operator-(const DifferenceMap& a, const DifferenceMap& b) { return a + (-b); }
  friend bool operator==(const DifferenceMap&, const DifferenceMap&) = default;

 private:
  IntMatrix matrix_;
  std::vector<BlockRange> blocks_;
};

// The unique delta with (T a - a) = delta(D(a)) in H_1(c)bar for every a in
// H_1(S), where T is the action of the word. Throws LocusError,
// NotWeaklyTorelli or Inconsistent.
DifferenceMap delta_difference(const HomologyModel& model, const TwistWord& word);

}  // namespace torext
