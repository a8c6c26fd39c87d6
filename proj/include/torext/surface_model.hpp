#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torext/exactlin.hpp"

namespace torext {

// One component P_j of the closure of S \ Q.
struct ComplementComponent {
  int genus = 0;
  int boundary_count = 1;

  friend bool operator==(const ComplementComponent&, const ComplementComponent&) = default;
};

// A closed oriented surface S with a connected subsurface Q, described by the
// genus of Q and the genus and boundary-circle count of every complementary
// component.
struct SubsurfaceConfig {
  int q_genus = 0;
  std::vector<ComplementComponent> components;

  int component_count() const { return static_cast<int>(components.size()); }
  int boundary_total() const;
  // Genus of S.
  int surface_genus() const;

  // Throws InvalidConfig.
  void validate() const;

  friend bool operator==(const SubsurfaceConfig&, const SubsurfaceConfig&) = default;
};

// Coordinates tagged by the group they live in, so that classes of different
// groups cannot be mixed up at call sites.
template <typename Tag>
class TaggedVector {
 public:
  TaggedVector() = default;
  explicit TaggedVector(IntVector coords) : coords_(std::move(coords)) {}
  explicit TaggedVector(std::size_t n) : coords_(n) {}

  const IntVector& coords() const { return coords_; }
  IntVector& coords() { return coords_; }
  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const { return coords_.is_zero(); }

  friend TaggedVector operator+(const TaggedVector& a, const TaggedVector& b) {
    return TaggedVector(a.coords_ + b.coords_);
  }
  friend TaggedVector operator-(const TaggedVector& a, const TaggedVector& b) {
    return TaggedVector(a.coords_ - b.coords_);
  }
  friend TaggedVector operator*(const Integer& s, const TaggedVector& a) { return TaggedVector(s * a.coords_); }
  friend bool operator==(const TaggedVector&, const TaggedVector&) = default;

 private:
  IntVector coords_;
};

// H_0(c) in the basis {o_C}, circles ordered by component then index.
using H0Class = TaggedVector<struct H0Tag>;
// H_1(c) in the basis {[C]}, same ordering.
using H1cClass = TaggedVector<struct H1cTag>;
// H_1(S) in the model basis.
using H1Class = TaggedVector<struct H1Tag>;
// H_1(c) modulo the kernel of inclusion, basis {c_{j,i} : i >= 1}.
using H1barClass = TaggedVector<struct H1barTag>;
// K_0(c) in the basis {o_{j,i} = o_{C_{j,i}} - o_{C_{j,0}} : i >= 1}.
using K0Class = TaggedVector<struct K0Tag>;

enum class BasisKind { QHandleA, QHandleB, PHandleA, PHandleB, Circle, Dual };

struct BasisLabel {
  BasisKind kind;
  int component;  // -1 for Q handles
  int index;      // handle index, or circle index i >= 1

  std::string to_string() const;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

// Coordinate range of one component inside K_0(c) and its image in H_1(c)bar.
struct BlockRange {
  std::size_t offset = 0;
  std::size_t size = 0;

  friend bool operator==(const BlockRange&, const BlockRange&) = default;
};

// Explicit basis of H_1(S) with the intersection form, the boundary circle
// classes and the Mayer-Vietoris boundary map. Basis order: a_i, b_i
// interleaved for Q handles; the same for each component's handles; then
// Circle(j, i) for all components; then Dual(j, i) for all components.
//
// Dual(j, i) crosses C_{j,i} once positively and C_{j,0} once negatively, so
// <Dual(j,i), [C_{j,i'}]> = delta_{i,i'} and <Dual(j,i), [C_{j,0}]> = -1.
class HomologyModel {
 public:
  static HomologyModel build(const SubsurfaceConfig& config);

  // The same surface with the opposite orientation: J and the boundary map
  // change sign, every basis label is kept.
  HomologyModel with_reversed_orientation() const;

  const SubsurfaceConfig& config() const { return config_; }
  int genus() const { return genus_; }
  std::size_t rank() const { return labels_.size(); }
  std::size_t boundary_total() const { return circle_offset_.back(); }
  std::size_t reduced_rank() const { return k0_offset_.back(); }
  int component_count() const { return config_.component_count(); }
  int boundary_count(int j) const { return config_.components.at(j).boundary_count; }

  const std::vector<BasisLabel>& labels() const { return labels_; }
  const IntMatrix& intersection_form() const { return form_; }

  // <x, y> = x^T J y.
  Integer intersect(const H1Class& x, const H1Class& y) const;

  // Position of C_{j,i} in the H_0(c) / H_1(c) bases.
  std::size_t circle_index(int j, int i) const;
  // Position of o_{j,i} (equivalently c_{j,i}), i >= 1, in the reduced bases.
  std::size_t reduced_index(int j, int i) const;
  BlockRange block(int j) const;
  // Position of Circle(j, i), Dual(j, i) in the H_1(S) basis.
  std::size_t circle_coordinate(int j, int i) const;
  std::size_t dual_coordinate(int j, int i) const;

  H1Class circle_class(int j, int i) const;
  // The fundamental class of the boundary of P_j in H_1(c).
  H1cClass boundary_fundamental_class(int j) const;

  // Columns spanning the image of H_1(Q) in H_1(S).
  const IntMatrix& q_image() const { return q_image_; }
  // Columns c_{j,i}, i >= 1, spanning the image of H_1(c) in H_1(S).
  const IntMatrix& circle_span() const { return circle_span_; }
  // Columns o_{j,i}, i >= 1, in H_0(c).
  const IntMatrix& k0_basis() const { return k0_basis_; }
  // Matrix of the Mayer-Vietoris boundary H_1(S) -> H_0(c).
  const IntMatrix& boundary_matrix() const { return boundary_matrix_; }

  bool in_q_image(const H1Class& x) const;
  bool in_complement(const H1Class& x, int j) const;

  H0Class mv_boundary(const H1Class& a) const;
  // mv_boundary expressed in the K_0(c) basis; the image always lies there.
  K0Class mv_boundary_k0(const H1Class& a) const;

  Integer pairing_c(const H0Class& theta, const H1cClass& b) const;
  Integer induced_pairing(const K0Class& theta, const H1barClass& v) const;
  H1barClass project_h1bar(const H1cClass& b) const;

  H0Class lift(const K0Class& theta) const;
  // The canonical lift of v to H_1(c), zero on every C_{j,0}.
  H1cClass lift(const H1barClass& v) const;
  // Inclusion of H_1(c) and of H_1(c)bar into H_1(S).
  H1Class include(const H1cClass& b) const;
  H1Class include(const H1barClass& v) const;
  // Coordinates of x in H_1(c)bar when x lies in the circle span.
  std::optional<H1barClass> to_h1bar(const H1Class& x) const;

 private:
  SubsurfaceConfig config_;
  int genus_ = 0;
  std::vector<BasisLabel> labels_;
  IntMatrix form_;
  std::vector<std::size_t> circle_offset_;  // prefix sums of n_j
  std::vector<std::size_t> k0_offset_;      // prefix sums of n_j - 1
  std::vector<std::size_t> phandle_offset_; // first P-handle coordinate per component
  std::size_t circle_start_ = 0;
  std::size_t dual_start_ = 0;
  IntMatrix q_image_;
  IntMatrix circle_span_;
  IntMatrix k0_basis_;
  IntMatrix boundary_matrix_;
};

}  // namespace torext
