#include "torext/surface_model.hpp"

#include <gtest/gtest.h>

#include "torext/errors.hpp"

using namespace torext;

namespace {

// genus of S from chi(S) = chi(Q) + sum chi(P_j).
int euler_genus(const SubsurfaceConfig& c) {
  int chi = 2 - 2 * c.q_genus - c.boundary_total();
  for (const auto& p : c.components) chi += 2 - 2 * p.genus - p.boundary_count;
  return (2 - chi) / 2;
}

std::vector<SubsurfaceConfig> all_configs(int max_h, int max_hj, int max_nj, int max_r) {
  std::vector<ComplementComponent> pieces;
  for (int g = 0; g <= max_hj; ++g)
    for (int n = 1; n <= max_nj; ++n) pieces.push_back({g, n});
  std::vector<SubsurfaceConfig> out;
  std::vector<std::vector<ComplementComponent>> lists{{}};
  for (int r = 1; r <= max_r; ++r) {
    std::vector<std::vector<ComplementComponent>> next;
    for (const auto& l : lists)
      for (const auto& p : pieces) {
        auto e = l;
        e.push_back(p);
        next.push_back(e);
      }
    lists = next;
    for (const auto& l : lists)
      for (int h = 0; h <= max_h; ++h) out.push_back({h, l});
  }
  return out;
}

H1cClass circle(const HomologyModel& m, int j, int i) {
  return H1cClass(IntVector::unit(m.boundary_total(), m.circle_index(j, i)));
}

}  // namespace

TEST(BuildModel, TorusFromAnnulusComplement) {
  const HomologyModel m = HomologyModel::build({0, {{0, 2}}});
  EXPECT_EQ(m.genus(), 1);
  ASSERT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.labels()[0], (BasisLabel{BasisKind::Circle, 0, 1}));
  EXPECT_EQ(m.labels()[1], (BasisLabel{BasisKind::Dual, 0, 1}));
  EXPECT_EQ(m.intersection_form(), (IntMatrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(euler_genus(m.config()), 1);
}

TEST(BuildModel, GenusFiveExample) {
  const SubsurfaceConfig c{1, {{1, 4}}};
  const HomologyModel m = HomologyModel::build(c);
  EXPECT_EQ(euler_genus(c), 5);
  EXPECT_EQ(m.genus(), 5);
  EXPECT_EQ(m.rank(), 10u);
  EXPECT_EQ(m.reduced_rank(), 3u);
  EXPECT_EQ(abs(determinant(m.intersection_form())), 1);
}

TEST(BuildModel, SphereSplitByOneCircle) {
  const HomologyModel m = HomologyModel::build({0, {{0, 1}}});
  EXPECT_EQ(m.rank(), 0u);
  EXPECT_EQ(m.reduced_rank(), 0u);
  EXPECT_EQ(m.boundary_total(), 1u);
  EXPECT_TRUE(m.circle_class(0, 0).is_zero());
  EXPECT_EQ(m.k0_basis().cols(), 0u);
}

TEST(BuildModel, DiscComponentContributesNothing) {
  const HomologyModel m = HomologyModel::build({1, {{0, 1}, {0, 3}}});
  EXPECT_TRUE(m.circle_class(0, 0).is_zero());
  EXPECT_EQ(m.block(0).size, 0u);
  EXPECT_EQ(m.block(1), (BlockRange{0, 2}));
}

TEST(BuildModel, InvalidConfigs) {
  EXPECT_THROW(HomologyModel::build({0, {}}), InvalidConfig);
  EXPECT_THROW(HomologyModel::build({0, {{0, 0}}}), InvalidConfig);
  EXPECT_THROW(HomologyModel::build({-1, {{0, 2}}}), InvalidConfig);
  EXPECT_THROW(HomologyModel::build({0, {{-1, 2}}}), InvalidConfig);
}

TEST(BuildModel, PairingBlocks) {
  const HomologyModel m = HomologyModel::build({1, {{1, 3}, {0, 2}}});
  const auto& labels = m.labels();
  const IntMatrix& j = m.intersection_form();
  for (std::size_t x = 0; x < m.rank(); ++x)
    for (std::size_t y = 0; y < m.rank(); ++y) {
      const auto& a = labels[x];
      const auto& b = labels[y];
      long expected = 0;
      const bool same_handle = a.component == b.component && a.index == b.index;
      if (same_handle && (a.kind == BasisKind::QHandleA || a.kind == BasisKind::PHandleA) &&
          (b.kind == BasisKind::QHandleB || b.kind == BasisKind::PHandleB) &&
          (a.kind == BasisKind::QHandleA) == (b.kind == BasisKind::QHandleB))
        expected = 1;
      if (same_handle && (b.kind == BasisKind::QHandleA || b.kind == BasisKind::PHandleA) &&
          (a.kind == BasisKind::QHandleB || a.kind == BasisKind::PHandleB) &&
          (b.kind == BasisKind::QHandleA) == (a.kind == BasisKind::QHandleB))
        expected = -1;
      if (same_handle && a.kind == BasisKind::Dual && b.kind == BasisKind::Circle) expected = 1;
      if (same_handle && a.kind == BasisKind::Circle && b.kind == BasisKind::Dual) expected = -1;
      EXPECT_EQ(j(x, y), expected) << a.to_string() << " . " << b.to_string();
    }
}

TEST(BuildModel, UnimodularAndRankLawExhaustive) {
  for (const auto& c : all_configs(2, 2, 4, 3)) {
    const HomologyModel m = HomologyModel::build(c);
    ASSERT_EQ(m.rank(), static_cast<std::size_t>(2 * euler_genus(c)));
    const IntMatrix& j = m.intersection_form();
    ASSERT_EQ(j.transpose(), -j);
    ASSERT_EQ(abs(determinant(j)), 1);
  }
}

TEST(BuildModel, CircleRelationsAndIsotropy) {
  const HomologyModel m = HomologyModel::build({2, {{1, 4}, {0, 3}, {2, 1}}});
  for (int j = 0; j < m.component_count(); ++j) {
    H1Class sum(m.rank());
    for (int i = 0; i < m.boundary_count(j); ++i) sum = sum + m.circle_class(j, i);
    EXPECT_TRUE(sum.is_zero());
  }
  for (int j = 0; j < m.component_count(); ++j)
    for (int i = 0; i < m.boundary_count(j); ++i)
      for (int k = 0; k < m.component_count(); ++k)
        for (int l = 0; l < m.boundary_count(k); ++l)
          EXPECT_EQ(m.intersect(m.circle_class(j, i), m.circle_class(k, l)), 0);
  EXPECT_EQ(rank(m.circle_span()), m.reduced_rank());
}

TEST(MvBoundary, CirclesHaveZeroBoundary) {
  const HomologyModel m = HomologyModel::build({1, {{1, 3}, {0, 2}}});
  for (int j = 0; j < m.component_count(); ++j)
    for (int i = 0; i < m.boundary_count(j); ++i) EXPECT_TRUE(m.mv_boundary(m.circle_class(j, i)).is_zero());
}

TEST(MvBoundary, DualOnTorus) {
  const HomologyModel m = HomologyModel::build({0, {{0, 2}}});
  const H1Class dual(IntVector{0, 1});
  // o_{C_1} - o_{C_0}
  EXPECT_EQ(m.mv_boundary(dual), H0Class(IntVector{-1, 1}));
  EXPECT_EQ(m.mv_boundary_k0(dual), K0Class(IntVector{1}));
}

TEST(MvBoundary, ImageLiesInAndSpansK0) {
  const HomologyModel m = HomologyModel::build({1, {{0, 4}, {1, 2}, {0, 1}}});
  const IntMatrix& d = m.boundary_matrix();
  for (std::size_t a = 0; a < m.rank(); ++a) {
    const H1Class e(IntVector::unit(m.rank(), a));
    ASSERT_TRUE(lattice_membership(m.k0_basis(), d.column(a)));
    const auto coords = solve_integer(m.k0_basis(), d.column(a));
    ASSERT_TRUE(coords.has_value());
    EXPECT_EQ(K0Class(*coords), m.mv_boundary_k0(e));
  }
  for (std::size_t c = 0; c < m.k0_basis().cols(); ++c) EXPECT_TRUE(lattice_membership(d, m.k0_basis().column(c)));
}

TEST(MvBoundary, DimensionMismatchThrows) {
  const HomologyModel m = HomologyModel::build({0, {{0, 2}}});
  EXPECT_THROW(m.mv_boundary(H1Class(IntVector{1, 2, 3})), DimensionError);
}

TEST(PairingC, DualityValues) {
  const HomologyModel m = HomologyModel::build({0, {{0, 3}, {1, 2}}});
  const std::size_t n = m.boundary_total();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      EXPECT_EQ(m.pairing_c(H0Class(IntVector::unit(n, c)), H1cClass(IntVector::unit(n, d))), c == d ? 1 : 0);
}

TEST(PairingC, K0AnnihilatesFundamentalClasses) {
  const HomologyModel m = HomologyModel::build({0, {{0, 3}, {1, 4}}});
  for (std::size_t c = 0; c < m.k0_basis().cols(); ++c)
    for (int j = 0; j < m.component_count(); ++j)
      EXPECT_EQ(m.pairing_c(H0Class(m.k0_basis().column(c)), m.boundary_fundamental_class(j)), 0);
}

TEST(PairingC, Adjunction) {
  const HomologyModel m = HomologyModel::build({1, {{1, 3}, {0, 4}}});
  for (std::size_t a = 0; a < m.rank(); ++a)
    for (std::size_t b = 0; b < m.boundary_total(); ++b) {
      const H1Class x(IntVector::unit(m.rank(), a));
      const H1cClass y(IntVector::unit(m.boundary_total(), b));
      EXPECT_EQ(m.intersect(x, m.include(y)), m.pairing_c(m.mv_boundary(x), y));
    }
}

TEST(PairingC, DimensionMismatchThrows) {
  const HomologyModel m = HomologyModel::build({0, {{0, 3}}});
  EXPECT_THROW(m.pairing_c(H0Class(3), H1cClass(2)), DimensionError);
}

TEST(InducedPairing, BasisValues) {
  const HomologyModel m = HomologyModel::build({0, {{0, 3}, {0, 3}}});
  const std::size_t k = m.reduced_rank();
  for (int j = 0; j < 2; ++j)
    for (int i = 1; i < 3; ++i)
      for (int jj = 0; jj < 2; ++jj)
        for (int ii = 1; ii < 3; ++ii) {
          const K0Class theta(IntVector::unit(k, m.reduced_index(j, i)));
          const H1barClass v(IntVector::unit(k, m.reduced_index(jj, ii)));
          EXPECT_EQ(m.induced_pairing(theta, v), (j == jj && i == ii) ? 1 : 0);
        }
  EXPECT_EQ(m.induced_pairing(K0Class(k), H1barClass(IntVector{3, -1, 4, 1})), 0);
}

TEST(InducedPairing, IndependentOfLift) {
  const HomologyModel m = HomologyModel::build({0, {{0, 4}, {0, 2}}});
  const K0Class theta(IntVector{2, -1, 3, 5});
  const H1barClass v(IntVector{1, 4, -2, 7});
  const Integer base = m.induced_pairing(theta, v);
  for (int j = 0; j < 2; ++j)
    for (int s = -2; s <= 2; ++s) {
      const H1cClass other = m.lift(v) + Integer(s) * m.boundary_fundamental_class(j);
      EXPECT_EQ(m.project_h1bar(other), v);
      EXPECT_EQ(m.pairing_c(m.lift(theta), other), base);
    }
}

TEST(ProjectH1bar, Relations) {
  const HomologyModel m = HomologyModel::build({0, {{0, 4}, {1, 2}}});
  EXPECT_TRUE(m.project_h1bar(m.boundary_fundamental_class(0)).is_zero());
  EXPECT_TRUE(m.project_h1bar(m.boundary_fundamental_class(1)).is_zero());
  EXPECT_EQ(m.project_h1bar(circle(m, 0, 2)), H1barClass(IntVector::unit(4, m.reduced_index(0, 2))));
  EXPECT_EQ(m.project_h1bar(circle(m, 0, 0)), H1barClass(IntVector{-1, -1, -1, 0}));
  // Projection agrees with the inclusion into H_1(S).
  for (std::size_t c = 0; c < m.boundary_total(); ++c) {
    const H1cClass b(IntVector::unit(m.boundary_total(), c));
    EXPECT_EQ(m.include(m.project_h1bar(b)), m.include(b));
  }
}

TEST(Membership, LociSupport) {
  const HomologyModel m = HomologyModel::build({1, {{1, 3}, {1, 2}}});
  EXPECT_TRUE(m.in_q_image(m.circle_class(0, 0)));
  EXPECT_TRUE(m.in_complement(m.circle_class(1, 0), 1));
  EXPECT_FALSE(m.in_complement(m.circle_class(1, 0), 0));
  H1Class dual(m.rank());
  dual[m.dual_coordinate(0, 1)] = 1;
  EXPECT_FALSE(m.in_q_image(dual));
  EXPECT_FALSE(m.in_complement(dual, 0));
  // Support test agrees with lattice membership in q_image.
  for (std::size_t a = 0; a < m.rank(); ++a) {
    const H1Class e(IntVector::unit(m.rank(), a));
    EXPECT_EQ(m.in_q_image(e), lattice_membership(m.q_image(), e.coords()));
  }
}
