#include <gtest/gtest.h>

#include "qgl/clifford.hpp"
#include "support.hpp"

namespace qgl {
namespace {

using test::e;
using test::Gen;
using test::q;

const CliffordBasis& cl() { return clifford(); }

TEST(Clifford, GammaSquaresAndAnticommutation) {
  EXPECT_EQ(cl().gamma(0) * cl().gamma(0), Mat::identity(4));
  for (std::size_t k = 1; k < 4; ++k) EXPECT_EQ(cl().gamma(k) * cl().gamma(k), -Mat::identity(4));
  EXPECT_EQ(cl().gamma(0) * cl().gamma(1), -(cl().gamma(1) * cl().gamma(0)));
  EXPECT_TRUE(cl().check_anticommutation());
}

TEST(Clifford, RelationFamilies) {
  EXPECT_TRUE(cl().check_vector_relation());
  EXPECT_TRUE(cl().check_bivector_relation());
  EXPECT_TRUE(cl().check_trivector_relation());
}

TEST(Clifford, BasisLayout) {
  ASSERT_EQ(cl().basis16().size(), 16U);
  const std::vector<std::string> expected = {"1",    "g0",   "g1",   "g2",   "g3",   "g01",
                                             "g02",  "g03",  "g12",  "g13",  "g23",  "g012",
                                             "g013", "g023", "g123", "g0123"};
  EXPECT_EQ(cl().labels(), expected);
  EXPECT_EQ(span(cl().basis16()).dim(), 16U);
  EXPECT_EQ(test::oracle_rank(test::flatten_rows(cl().basis16())), 16U);
  const std::array<std::size_t, 2> idx{0, 1};
  EXPECT_EQ(cl().slot(idx), 5U);
  // Repeated index gives zero.
  const std::array<std::size_t, 2> rep{2, 2};
  EXPECT_TRUE(cl().antisymmetrized(rep).is_zero());
}

TEST(Clifford, CoordinateExamples) {
  const CliffordCoords one = cl().coords(Mat::identity(4));
  EXPECT_TRUE(one[0].is_one());
  for (std::size_t s = 1; s < 16; ++s) EXPECT_TRUE(one[s].is_zero());

  const CliffordCoords g2 = cl().coords(cl().gamma(2));
  for (std::size_t s = 0; s < 16; ++s) EXPECT_EQ(g2[s], Scalar(s == 3 ? 1 : 0));

  const CliffordCoords g01 = cl().coords(cl().gamma(0) * cl().gamma(1));
  for (std::size_t s = 0; s < 16; ++s) EXPECT_EQ(g01[s], Scalar(s == 5 ? 1 : 0));
  EXPECT_THROW(cl().coords(Mat::identity(3)), Error);
}

TEST(CliffordProperty, CoordinatesRoundTrip) {
  Gen g(51);
  for (int trial = 0; trial < 30; ++trial) {
    const Mat v = g.scalar_matrix(4, 0.4);
    ASSERT_EQ(cl().from_coords(cl().coords(v)), v);
  }
}

TEST(CliffordProperty, ProductsStayInIntegerSpan) {
  for (const auto& a : cl().basis16()) {
    for (const auto& b : cl().basis16()) {
      for (const auto& c : cl().coords(a * b)) {
        ASSERT_TRUE(c.is_constant());
        ASSERT_EQ(c.num().coeff(0).im(), 0);
        ASSERT_EQ(c.num().coeff(0).re().get_den(), 1);
      }
    }
  }
}

std::vector<GL2Rep> catalog_reps() {
  std::vector<GL2Rep> out;
  for (const auto& ce : catalog())
    if (ce.kind == EntryKind::GL2)
      for (const auto& r : gl2_instances(ce, Mode::Family)) out.push_back(r);
  return out;
}

TEST(InnerAction, ClassicalPoint) {
  const InnerAction a(test::classical_point());
  EXPECT_EQ(a.mstar(0, 0), Mat::identity(4));
  EXPECT_EQ(a.mstar(1, 1), Mat::identity(4));
  Gen g(52);
  const Mat v = g.scalar_matrix(4);
  EXPECT_EQ(a.act(0, 0, v), v);
  EXPECT_TRUE(a.act(0, 1, v).is_zero());
  EXPECT_THROW(a.act(2, 0, v), Error);
}

TEST(InnerAction, SingularBlockMatrix) {
  try {
    InnerAction bad({Mat(4), Mat(4), Mat::identity(4), Mat::identity(4)});
    FAIL();
  } catch (const Error& err) {
    EXPECT_STREQ(err.what(), "action undefined");
  }
}

TEST(InnerAction, UnitalForEveryCatalogAction) {
  for (const auto& r : catalog_reps()) {
    const InnerAction a(r);
    EXPECT_TRUE(a.unital());
  }
}

TEST(InnerActionProperty, ModuleAlgebra) {
  Gen g(53);
  for (const auto& ce : catalog()) {
    if (ce.kind != EntryKind::GL2) continue;
    const InnerAction a(*instantiate(ce).gl2);
    for (int trial = 0; trial < 20; ++trial) {
      Mat v(4);
      Mat w(4);
      for (std::size_t s = 0; s < 16; ++s) {
        if (g.integer(0, 3) == 0) v += Scalar(g.integer(-3, 3)) * cl().basis16()[s];
        if (g.integer(0, 3) == 0) w += Scalar(g.integer(-3, 3)) * cl().basis16()[s];
      }
      ASSERT_TRUE(a.module_algebra(v, w)) << ce.name;
    }
  }
}

TEST(Invariants, CatalogDimensions) {
  const std::map<std::string, std::size_t> expected = {
      {"sec5-case1", 1}, {"sec5-case2", 1}, {"sec5-item-c", 1}, {"sec5-item-d", 6}};
  for (const auto& [name, dim] : expected) {
    const auto reps = gl2_instances(find_entry(name), Mode::Family);
    const Invariants inv = invariants_of(reps);
    EXPECT_EQ(inv.space.dim(), dim) << name;
    EXPECT_EQ(inv.space, centralizer(operator_algebra(reps))) << name;
    ASSERT_EQ(inv.coords.size(), inv.space.dim());
    for (std::size_t k = 0; k < inv.coords.size(); ++k)
      EXPECT_EQ(cl().from_coords(inv.coords[k]), inv.space.basis()[k]);
  }
  const std::vector<GL2Rep> cp = {test::classical_point()};
  EXPECT_EQ(invariants_of(cp).space.dim(), 16U);
  EXPECT_EQ(operator_algebra(cp).dim(), 1U);
}

TEST(Invariants, ItemDPattern) {
  const auto reps = gl2_instances(find_entry("sec5-item-d"), Mode::Family);
  std::vector<Mat> expected = {e(1, 1), e(2, 2), e(2, 3), e(3, 2), e(3, 3), e(4, 4)};
  EXPECT_EQ(invariants_of(reps).space.dim(), 6U);
  EXPECT_TRUE(span(expected).is_subspace_of(invariants_of(reps).space));
}

// Scalar invariants are fixed by the counit-style action in every case; for
// item d) the larger invariant space is checked as well.
TEST(Invariants, CounitInvariance) {
  for (const auto& ce : catalog()) {
    if (ce.kind != EntryKind::GL2) continue;
    const auto reps = gl2_instances(ce, Mode::Family);
    const Invariants inv = invariants_of(reps);
    for (const auto& r : reps) EXPECT_TRUE(counit_invariance(InnerAction(r), inv.space)) << ce.name;
  }
}

}  // namespace
}  // namespace qgl
