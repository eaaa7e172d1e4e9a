#include <gtest/gtest.h>

#include <cctype>

#include "lieclass/lieclass.hpp"
#include "oracles.hpp"

using namespace lieclass;

namespace {

Rational r(long p, long q = 1) {
  Rational v(p, q);
  v.canonicalize();
  return v;
}

QVector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

QVector random_vec(oracle::Rng& rng, std::size_t n) { return rng.qvec(n); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), r(-3, 2));
  EXPECT_EQ(to_string(parse_rational("4/2")), "2");
  EXPECT_EQ(to_string(parse_rational("-0/7")), "0");
  EXPECT_THROW(parse_rational("1/0"), OutOfRange);
  EXPECT_THROW(parse_rational("1.5"), OutOfRange);
  EXPECT_THROW(parse_rational(""), OutOfRange);
}

TEST(Rational, BestApproximation) {
  EXPECT_EQ(best_rational_approximation(0.5000000001, 64), r(1, 2));
  EXPECT_EQ(best_rational_approximation(-2.0, 64), r(-2));
  EXPECT_EQ(best_rational_approximation(1.0 / 3.0 + 1e-12, 64), r(1, 3));
}

TEST(ExactMatrix, RankDeterminantAgainstOracle) {
  oracle::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 3) % 5;
    QMatrix m(rows, cols);
    oracle::QMat o = oracle::zeros(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        // sparse-ish entries so that rank deficiency actually occurs
        const Rational v = (trial + i + j) % 3 == 0 ? Rational(0) : rng.rational();
        m(i, j) = v;
        o[i][j] = v;
      }
    EXPECT_EQ(rank(m), oracle::rank(o));
  }
  QMatrix k(3, 3);
  k(0, 2) = 4;
  k(1, 1) = 8;
  k(2, 0) = 4;
  EXPECT_EQ(determinant(k), r(-128));
}

TEST(ExactMatrix, InertiaBySignature) {
  QMatrix m(3, 3);
  m(0, 2) = 4;
  m(2, 0) = 4;
  m(1, 1) = 8;
  const Inertia in = inertia(m);
  EXPECT_EQ(in.positive, 2u);
  EXPECT_EQ(in.negative, 1u);
  EXPECT_EQ(in.zero, 0u);
}

TEST(ExactMatrix, NullspaceAndSolve) {
  QMatrix m = QMatrix::from_rows({{r(1), r(2), r(3)}, {r(2), r(4), r(6)}}, 3);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
  const auto x = solve(m, {r(1), r(2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (QVector{r(1), r(2)}));
  EXPECT_FALSE(solve(m, {r(1), r(3)}).has_value());
}

TEST(LieAlgebra, ConstructionRules) {
  EXPECT_THROW(LieAlgebra(0, {}), OutOfRange);
  EXPECT_THROW(LieAlgebra(2, {{2, 1, 1, r(1)}}), OutOfRange);
  EXPECT_THROW(LieAlgebra(2, {{1, 2, 3, r(1)}}), OutOfRange);
  EXPECT_THROW(LieAlgebra(2, {{1, 2, 1, r(1)}, {1, 2, 1, r(2)}}), OutOfRange);
  EXPECT_THROW(LieAlgebra(2, {}, {"a"}), DimensionMismatch);
  const LieAlgebra a = catalog::affine1();
  EXPECT_EQ(a.c(1, 2, 2), r(1));
  EXPECT_EQ(a.c(2, 1, 2), r(-1));
  EXPECT_EQ(a.c(1, 1, 2), r(0));
}

TEST(LieAlgebra, ValidateExamples) {
  EXPECT_TRUE(validate(catalog::sl2()).ok);
  EXPECT_TRUE(validate(catalog::abelian(4)).ok);
  // [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e1 has the form [e_i,e_j] = eps_ijk l_k e_k, so every
  // term of the (1,2,3) Jacobi sum is [e_a, e_a] = 0: it is a Lie algebra (a real form of sl(2)).
  const LieAlgebra cyclic(3, {{1, 2, 3, r(1)}, {1, 3, 2, r(1)}, {2, 3, 1, r(1)}});
  EXPECT_TRUE(validate(cyclic).ok);
  EXPECT_TRUE(is_semisimple(cyclic));
  // [e1,e2]=e1, [e1,e3]=e2: the (1,2,3) sum is c_12^1 c_13^m = delta_m2.
  const LieAlgebra bad(3, {{1, 2, 1, r(1)}, {1, 3, 2, r(1)}});
  const ValidationReport v = validate(bad);
  EXPECT_FALSE(v.ok);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].i, 1u);
  EXPECT_EQ(v.violations[0].j, 2u);
  EXPECT_EQ(v.violations[0].k, 3u);
  EXPECT_EQ(v.violations[0].m, 2u);
  EXPECT_EQ(v.violations[0].value, r(1));
}

TEST(LieAlgebra, BracketExamples) {
  const LieAlgebra sl2 = catalog::sl2();  // (X, H, Y)
  QVector two_x = e(3, 1);
  two_x[0] = 2;
  EXPECT_EQ(bracket(sl2, e(3, 2), e(3, 1)), two_x);
  const LieAlgebra so3 = catalog::so3();  // (A, B, C)
  EXPECT_EQ(bracket(so3, e(3, 1), e(3, 3)), e(3, 2));
  oracle::Rng rng(11);
  const QVector x = random_vec(rng, 3);
  EXPECT_TRUE(is_zero(bracket(sl2, x, x)));
  EXPECT_THROW(bracket(sl2, e(2, 1), e(3, 1)), DimensionMismatch);
}

TEST(LieAlgebra, AdjointExamples) {
  const LieAlgebra sl2 = catalog::sl2();
  EXPECT_TRUE(ad(sl2, zero_vector(3)).is_zero());
  const QMatrix adh = ad(sl2, e(3, 2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(adh(i, j), i == j ? r(2 - 2 * static_cast<long>(i)) : r(0));
  EXPECT_EQ(ad(sl2, e(3, 1)).trace(), 0);
}

TEST(LieAlgebra, AdjointMatchesMatrixRealization) {
  // Compare against ad matrices derived from explicit matrix commutators.
  const std::pair<LieAlgebra, oracle::AdjointData> cases[] = {
      {catalog::sl2(), oracle::sl2()}, {catalog::so3(), oracle::so3()}, {catalog::heisenberg3(), oracle::heisenberg3()}};
  for (const auto& [alg, o] : cases)
    for (std::size_t i = 0; i < 3; ++i) {
      const QMatrix m = ad(alg, e(3, i + 1));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(m(a, b), o.ad[i][a][b]);
    }
}

TEST(LieAlgebra, KillingExamples) {
  EXPECT_TRUE(killing(catalog::abelian(3)).is_zero());
  const QMatrix k = killing(catalog::sl2());
  EXPECT_EQ(k(1, 1), r(8));
  EXPECT_EQ(k(0, 2), r(4));
  EXPECT_EQ(k(0, 0), r(0));
  EXPECT_EQ(k(2, 2), r(0));
  EXPECT_EQ(k(1, 0), r(0));
  EXPECT_EQ(k(1, 2), r(0));
  EXPECT_EQ(determinant(k), r(-128));
  const QMatrix ks = killing(catalog::so3());
  EXPECT_EQ(ks(0, 0), r(-2));
  const oracle::AdjointData o = oracle::so3();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(ks(i, j), oracle::killing(o, i, j));
}

TEST(LieAlgebra, StructuralPredicates) {
  EXPECT_TRUE(is_solvable(catalog::heisenberg3()));
  EXPECT_TRUE(is_nilpotent(catalog::heisenberg3()));
  EXPECT_EQ(derived_series_dims(catalog::heisenberg3()), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_FALSE(is_solvable(catalog::sl2()));
  EXPECT_TRUE(is_solvable(catalog::abelian(2)));
  EXPECT_TRUE(is_nilpotent(catalog::abelian(2)));
  EXPECT_TRUE(is_solvable(catalog::affine1()));
  EXPECT_FALSE(is_nilpotent(catalog::affine1()));

  EXPECT_TRUE(is_semisimple(catalog::sl2()));
  EXPECT_TRUE(is_semisimple(catalog::so3()));
  EXPECT_FALSE(is_semisimple(catalog::heisenberg3()));
  EXPECT_FALSE(is_semisimple(catalog::abelian(1)));
  EXPECT_FALSE(is_semisimple(catalog::sl2_plus_abelian2()));

  EXPECT_TRUE(is_unimodular(catalog::sl2()));
  EXPECT_FALSE(is_unimodular(catalog::affine1()));
  EXPECT_EQ(ad(catalog::affine1(), e(2, 1)).trace(), r(1));
  EXPECT_TRUE(is_unimodular(catalog::abelian(5)));
}

// Properties over every catalog algebra with fixed-seed random rationals.
class AlgebraProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(AlgebraProperties, BracketAdKilling) {
  const LieAlgebra alg = catalog::get(GetParam()).algebra();
  const std::size_t n = alg.dim();
  oracle::Rng rng(20260101);
  for (int t = 0; t < 20; ++t) {
    const QVector x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
    QVector neg = bracket(alg, y, x);
    for (auto& c : neg) c = -c;
    EXPECT_EQ(bracket(alg, x, y), neg);
    EXPECT_EQ(ad(alg, bracket(alg, x, y)), ad(alg, x) * ad(alg, y) - ad(alg, y) * ad(alg, x));
    const QMatrix k = killing(alg);
    EXPECT_EQ(killing_value(k, bracket(alg, x, y), z), killing_value(k, x, bracket(alg, y, z)));
  }
  EXPECT_EQ(killing(alg), killing(alg).transpose());
  if (is_semisimple(alg)) EXPECT_TRUE(is_unimodular(alg));
}

INSTANTIATE_TEST_SUITE_P(Catalog, AlgebraProperties, ::testing::ValuesIn(catalog::list(EntryKind::algebra)),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return s;
                         });
