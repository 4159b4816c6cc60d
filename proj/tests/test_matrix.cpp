#include <gtest/gtest.h>

#include "support.hpp"

namespace qgl {
namespace {

using test::e;
using test::Gen;
using test::q;
using test::qp;

TEST(Mat, BasicsAndSpecExamples) {
  const Mat n = e(1, 2);
  EXPECT_TRUE(is_nilpotent(n));
  EXPECT_FALSE(is_invertible(n));

  const Mat d = Mat::diag({qp(2), q(), q(), 1});
  ASSERT_TRUE(is_invertible(d));
  EXPECT_EQ(inverse(d), Mat::diag({qp(-2), qp(-1), qp(-1), 1}));

  const Mat c22 = Mat::diag({qp(2), qp(2), q(), q()}) - q() * e(2, 3);
  EXPECT_TRUE(is_invertible(c22));
  EXPECT_EQ(c22 * inverse(c22), Mat::identity(4));
  EXPECT_EQ(determinant(c22), qp(6));

  try {
    inverse(e(1, 1) + e(2, 2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_STREQ(err.what(), "singular");
  }
}

TEST(Mat, JordanAndBlocks) {
  const Mat j = jordan(q(), 3);
  EXPECT_EQ(j, (Mat{{q(), 1, 0}, {0, q(), 1}, {0, 0, q()}}));
  const Mat b = block_diag({jordan(1, 2), Mat::diag({q(), 2})});
  EXPECT_EQ(b.size(), 4U);
  EXPECT_EQ(b(0, 1), Scalar(1));
  EXPECT_EQ(b(2, 2), q());
  EXPECT_EQ(b.block(1, 1, 2), Mat::diag({q(), 2}));
  EXPECT_TRUE(is_nilpotent(jordan(0, 4)));
  EXPECT_FALSE(is_nilpotent(jordan(0, 4) + e(4, 1)));
}

TEST(Mat, SubstituteEvaluatesEntries) {
  const Mat m = Mat::diag({qp(2), qp(-1), 1 + q(), Scalar::i() * q()});
  const Mat s = substitute(m, 2);
  EXPECT_EQ(s, Mat::diag({4, Scalar(GaussRational(mpq_class(1, 2))), 3, 2 * Scalar::i()}));
}

TEST(MatSpace, SpanExamples) {
  const std::vector<Mat> a = {e(1, 2), 2 * e(1, 2)};
  EXPECT_EQ(span(a).dim(), 1U);
  const std::vector<Mat> b = {e(1, 2), e(2, 1)};
  EXPECT_EQ(span(b).dim(), 2U);
  const std::vector<Mat> c = {q() * e(1, 3) - e(2, 4), e(1, 3)};
  const MatSpace s = span(c);
  EXPECT_EQ(s.dim(), 2U);
  EXPECT_TRUE(s.contains(e(2, 4)));
  EXPECT_FALSE(s.contains(e(1, 4)));
  EXPECT_EQ(span(std::vector<Mat>{}, 4).dim(), 0U);
}

TEST(MatSpace, EchelonFormIsCanonical) {
  Gen g(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Mat> mats;
    for (int k = 0; k < 4; ++k) mats.push_back(g.scalar_matrix(3, 0.3));
    std::vector<Mat> mixed;
    for (std::size_t k = 0; k < mats.size(); ++k) mixed.push_back(mats[k] + mats[(k + 1) % mats.size()] * Scalar(k + 1));
    const MatSpace a = span(mats);
    const MatSpace b = span(mixed);
    if (a.dim() == b.dim()) {
      EXPECT_TRUE(a.is_subspace_of(b));
      EXPECT_EQ(a, b);
    }
    for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_TRUE(a.basis()[k].flat()[a.pivots()[k]].is_one());
  }
}

TEST(Nullspace, SolutionsAreExactAndComplete) {
  Gen g(22);
  for (int trial = 0; trial < 30; ++trial) {
    DenseMatrix m(4, 6);
    for (auto& x : m.a)
      if (g.coin()) x = g.scalar();
    const auto ns = nullspace(m);
    EXPECT_EQ(ns.size() + rank(m), m.cols);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < m.rows; ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
        ASSERT_TRUE(acc.is_zero());
      }
    }
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i < m.rows; ++i) rows.emplace_back(m.a.begin() + i * m.cols, m.a.begin() + (i + 1) * m.cols);
    EXPECT_EQ(rank(m), test::oracle_rank(rows));
  }
}

TEST(MatProperty, InverseAndDeterminant) {
  Gen g(23);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat a = g.scalar_matrix(3, 0.7);
    const Mat b = g.scalar_matrix(3, 0.7);
    ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
    ASSERT_EQ(is_invertible(a), !determinant(a).is_zero());
    if (is_invertible(a)) {
      ASSERT_EQ(a * inverse(a), Mat::identity(3));
      ASSERT_EQ(inverse(a) * a, Mat::identity(3));
    }
  }
}

// Words in the generators up to a length where the span stops growing.
std::size_t words_oracle(const std::vector<Mat>& gens) {
  std::vector<Mat> all = gens;
  std::vector<Mat> last = gens;
  std::size_t prev = test::oracle_rank(test::flatten_rows(all));
  for (int len = 2; len <= 8; ++len) {
    std::vector<Mat> next;
    for (const auto& w : last)
      for (const auto& g : gens) next.push_back(w * g);
    all.insert(all.end(), next.begin(), next.end());
    last = std::move(next);
    const std::size_t r = test::oracle_rank(test::flatten_rows(all));
    if (r == prev) return r;
    prev = r;
  }
  return prev;
}

TEST(Closure, SpecExamples) {
  const std::vector<Mat> idem = {Mat::unit(2, 0, 0)};
  EXPECT_EQ(subalgebra_closure(idem).dim(), 1U);
  const std::vector<Mat> pair = {Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)};
  EXPECT_EQ(subalgebra_closure(pair).dim(), 4U);
  EXPECT_EQ(words_oracle(pair), 4U);
  // Non-unital: a single nilpotent generates a nilpotent algebra.
  const std::vector<Mat> nil = {test::e(1, 2, 3) + test::e(2, 3, 3)};
  EXPECT_EQ(subalgebra_closure(nil).dim(), 2U);
  EXPECT_FALSE(subalgebra_closure(nil).contains(Mat::identity(3)));
}

TEST(ClosureProperty, AgreesWithWordOracle) {
  Gen g(24);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Mat> gens;
    for (int k = 0; k < 2; ++k) {
      Mat m(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (g.integer(0, 3) == 0) m(i, j) = g.coin() ? Scalar(g.integer(-2, 2)) : q();
      gens.push_back(m);
    }
    const MatSpace c = subalgebra_closure(gens);
    ASSERT_EQ(c.dim(), words_oracle(gens));
    for (const auto& a : c.basis())
      for (const auto& b : c.basis()) ASSERT_TRUE(c.contains(a * b));
  }
}

TEST(ClosureProperty, Idempotent) {
  Gen g(25);
  for (int trial = 0; trial < 15; ++trial) {
    const std::vector<Mat> gens = {g.scalar_matrix(3, 0.3), g.scalar_matrix(3, 0.3)};
    const MatSpace c = subalgebra_closure(gens);
    const MatSpace again = subalgebra_closure(c.basis());
    EXPECT_EQ(again.dim(), c.dim());
    EXPECT_EQ(again, c);
  }
}

TEST(Centralizer, SpecExamples) {
  const std::vector<Mat> one = {Mat::identity(4)};
  EXPECT_EQ(centralizer(one, 4).dim(), 16U);
  std::vector<Mat> units;
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = 1; j <= 4; ++j) units.push_back(e(i, j));
  const MatSpace scal = centralizer(units, 4);
  EXPECT_EQ(scal.dim(), 1U);
  EXPECT_TRUE(scal.contains(Mat::identity(4)));

  // {diag(a,b,b,c)}: spanned by three idempotents.
  const std::vector<Mat> blocks = {e(1, 1), e(2, 2) + e(3, 3), e(4, 4)};
  const MatSpace c = centralizer(blocks, 4);
  EXPECT_EQ(c.dim(), 6U);
  EXPECT_EQ(c, centralizer(subalgebra_closure(blocks)));
}

// n^2 - rank of the stacked maps X -> XG - GX.
std::size_t centralizer_oracle(const std::vector<Mat>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& g : gens) {
    auto op = test::oracle_operator({{Mat::identity(n), g}, {g, Mat::identity(n)}}, {1, -1});
    rows.insert(rows.end(), op.begin(), op.end());
  }
  return n * n - test::oracle_rank(rows);
}

TEST(CentralizerProperty, AgreesWithKroneckerOracle) {
  Gen g(26);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Mat> gens;
    const long count = g.integer(1, 2);
    for (long k = 0; k < count; ++k) {
      Mat m(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (g.integer(0, 2) == 0) m(i, j) = g.pick(std::vector<Scalar>{1, 2, q(), qp(2), -1});
      gens.push_back(m);
    }
    const MatSpace c = centralizer(gens, 3);
    ASSERT_EQ(c.dim(), centralizer_oracle(gens));
    for (const auto& x : c.basis())
      for (const auto& gm : gens) ASSERT_EQ(x * gm, gm * x);
  }
  EXPECT_EQ(centralizer_oracle({e(1, 1), e(2, 2) + e(3, 3), e(4, 4)}), 6U);
}

TEST(CentralizerProperty, Antitone) {
  Gen g(27);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Mat> small = {g.scalar_matrix(3, 0.3)};
    std::vector<Mat> large = small;
    large.push_back(g.scalar_matrix(3, 0.3));
    EXPECT_TRUE(centralizer(large, 3).is_subspace_of(centralizer(small, 3)));
  }
}

TEST(CentralizerProperty, DoubleCentralizerOnCatalog) {
  for (const auto& ce : catalog()) {
    if (ce.kind != EntryKind::GL2) continue;
    for (Mode m : {Mode::Single, Mode::Family}) {
      const auto reps = gl2_instances(ce, m);
      std::vector<Mat> gens;
      for (const auto& r : reps) {
        gens.insert(gens.end(), {r.c11, r.c12, r.c21, r.c22, inverse(quantum_determinant(r))});
      }
      const MatSpace algebra = subalgebra_closure(gens);
      EXPECT_TRUE(algebra.is_subspace_of(centralizer(centralizer(algebra)))) << ce.name;
    }
  }
}

TEST(OperatorKernel, MatchesOracleDimension) {
  const Mat a = Mat::diag({qp(2), q(), q(), 1});
  const MatSpace k = operator_kernel(4, [&](const Mat& b) { return a * b - q() * (b * a); });
  const auto op = test::oracle_operator({{a, Mat::identity(4)}, {Mat::identity(4), a}}, {1, -q()});
  EXPECT_EQ(k.dim(), 16 - test::oracle_rank(op));
  EXPECT_EQ(k.dim(), 4U);
}

TEST(InvertibleElement, FindsOrReportsNone) {
  const std::vector<Mat> mats = {e(1, 2) + e(2, 1), e(1, 1) - e(2, 2) + e(3, 3) + e(4, 4)};
  const auto u = invertible_element(span(mats));
  ASSERT_TRUE(u.has_value());
  EXPECT_TRUE(is_invertible(*u));
  const std::vector<Mat> nil = {e(1, 2), e(3, 4)};
  EXPECT_FALSE(invertible_element(span(nil)).has_value());
}

TEST(CrossCheck, RanksSurviveSpecialization) {
  for (const auto& ce : catalog()) {
    if (!ce.build) continue;
    const Instance inst = instantiate(ce);
    const Instance at2 = substitute(inst, 2);
    std::vector<std::pair<Mat, Mat>> pairs;
    if (inst.spinor) pairs = {{inst.spinor->a, at2.spinor->a}, {inst.spinor->b, at2.spinor->b}};
    if (inst.gl2)
      pairs = {{inst.gl2->c11, at2.gl2->c11}, {inst.gl2->c12, at2.gl2->c12},
               {inst.gl2->c21, at2.gl2->c21}, {inst.gl2->c22, at2.gl2->c22}};
    for (const auto& [exact, sample] : pairs) EXPECT_EQ(rank(exact), rank(sample)) << ce.name;
  }
}

}  // namespace
}  // namespace qgl
