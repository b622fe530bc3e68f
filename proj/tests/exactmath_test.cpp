#include "crosscap/exactmath.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace crosscap {
namespace {

Matrix<std::int64_t> random_symmetric(std::mt19937_64& rng, int dim, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> entry(-bound, bound);
  Matrix<std::int64_t> m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = entry(rng);
  return m;
}

std::vector<std::vector<std::int64_t>> rows_of(const Matrix<std::int64_t>& m) {
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  return rows;
}

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt<std::int64_t>(0), 0);
  EXPECT_EQ(isqrt<std::int64_t>(225), 15);
  EXPECT_EQ(isqrt<std::int64_t>(33), 5);
}

TEST(Isqrt, RejectsNegative) {
  EXPECT_THROW(isqrt<std::int64_t>(-1), std::domain_error);
  EXPECT_THROW(isqrt(BigInt(-4)), std::domain_error);
}

TEST(Isqrt, FloorPropertyUpToAMillion) {
  for (std::int64_t m = 0; m <= 1'000'000; ++m) {
    const std::int64_t r = isqrt(m);
    ASSERT_LE(r * r, m);
    ASSERT_GT((r + 1) * (r + 1), m);
  }
}

TEST(Isqrt, AgreesWithScanOnSmallValues) {
  for (std::int64_t m = 0; m <= 5000; ++m) ASSERT_EQ(isqrt(m), oracle::scan_sqrt(m)) << m;
}

TEST(Isqrt, ExtremeMachineIntegers) {
  const std::int64_t max = std::numeric_limits<std::int64_t>::max();
  const std::int64_t r = isqrt(max);
  EXPECT_EQ(r, 3037000499);
  const std::uint64_t umax = std::numeric_limits<std::uint64_t>::max();
  EXPECT_EQ(isqrt(umax), 4294967295u);
  const std::int64_t sq = 3037000499LL * 3037000499LL;
  EXPECT_EQ(isqrt(sq), 3037000499);
  EXPECT_EQ(isqrt(sq - 1), 3037000498);
}

TEST(Isqrt, BigIntegers) {
  const BigInt root("123456789012345678901234567890");
  EXPECT_EQ(isqrt(BigInt(root * root)), root);
  EXPECT_EQ(isqrt(BigInt(root * root - 1)), root - 1);
  EXPECT_EQ(isqrt(BigInt(root * root + 2 * root)), root);
  for (std::int64_t m = 0; m < 3000; ++m) ASSERT_EQ(isqrt(BigInt(m)), BigInt(oracle::scan_sqrt(m)));
}

TEST(OddSquareRoot, Examples) {
  EXPECT_EQ(odd_square_root<std::int64_t>(9), 3);
  EXPECT_FALSE(odd_square_root<std::int64_t>(33));
  EXPECT_FALSE(odd_square_root<std::int64_t>(4));
  EXPECT_EQ(odd_square_root<std::int64_t>(1), 1);
  EXPECT_FALSE(odd_square_root<std::int64_t>(0));
  EXPECT_FALSE(odd_square_root<std::int64_t>(-9));
}

TEST(OddSquareRoot, CharacterizesOddSquares) {
  for (std::int64_t m = -50; m <= 200'000; ++m) {
    const auto r = odd_square_root(m);
    ASSERT_EQ(r.has_value(), oracle::is_odd_square(m)) << m;
    if (r) ASSERT_EQ(*r * *r, m);
  }
}

TEST(PadicValuation, Examples) {
  EXPECT_EQ(padic_valuation(69, 3), 1u);
  EXPECT_EQ(padic_valuation(9, 3), 2u);
  EXPECT_EQ(padic_valuation(7, 3), 0u);
  EXPECT_EQ(padic_valuation(-54, 3), 3u);
  EXPECT_EQ(padic_valuation(BigInt(1) << 100, BigInt(2)), 100u);
}

TEST(PadicValuation, Errors) {
  EXPECT_THROW(padic_valuation(0, 3), std::domain_error);
  EXPECT_THROW(padic_valuation(12, 4), std::invalid_argument);
}

TEST(PadicValuation, DividesExactly) {
  for (std::int64_t q : {2, 3, 5, 7}) {
    for (std::int64_t m = -3000; m <= 3000; ++m) {
      if (m == 0) continue;
      const unsigned v = padic_valuation(m, q);
      std::int64_t power = 1;
      for (unsigned i = 0; i < v; ++i) power *= q;
      ASSERT_EQ(m % power, 0);
      ASSERT_NE(m % (power * q), 0);
    }
  }
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(11));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2 * 1 + 3 * 3));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(-7));
}

TEST(IsPrime, AgreesWithTrialDivisionToAMillion) {
  for (std::int64_t m = -5; m <= 1'000'000; ++m) ASSERT_EQ(is_prime(m), oracle::trial_division_prime(m)) << m;
}

TEST(IsPrime, StrongPseudoprimesAndLargePrimes) {
  // Strong pseudoprimes to small base sets.
  EXPECT_FALSE(is_prime(std::uint64_t{2047}));
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751}));
  EXPECT_FALSE(is_prime(std::uint64_t{3825123056546413051}));
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551615ULL}));
  EXPECT_TRUE(is_prime(BigInt("18446744073709551557")));
  EXPECT_TRUE(is_prime(BigInt("1000000000000000000117")));
  EXPECT_FALSE(is_prime(BigInt("1000000000000000000119")));
  EXPECT_TRUE(is_prime(BigInt("3317044064679887385961813")));
  EXPECT_FALSE(is_prime(BigInt(BigInt("18446744073709551557") * 3)));
  // psi_12, a strong pseudoprime to the first twelve prime bases.
  EXPECT_FALSE(is_prime(BigInt("318665857834031151167461")));
}

TEST(IsPrime, BigIntBeyondCertifiedBoundThrows) {
  EXPECT_THROW(is_prime(BigInt(BigInt(1) << 90)), std::out_of_range);
}

TEST(SymMatrix, RejectsInvalidShapes) {
  EXPECT_THROW((SymMatrix<std::int64_t>{{1, 2}, {3, 4}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix<std::int64_t>(Matrix<std::int64_t>::Zero(9, 9)), std::invalid_argument);
  EXPECT_THROW(SymMatrix<std::int64_t>(Matrix<std::int64_t>::Zero(2, 3)), std::invalid_argument);
  EXPECT_THROW(SymMatrix<std::int64_t>(Matrix<std::int64_t>(0, 0)), std::invalid_argument);
  EXPECT_NO_THROW(SymMatrix<std::int64_t>(Matrix<std::int64_t>::Identity(8, 8)));
}

TEST(DetExact, Examples) {
  EXPECT_EQ(det_exact(SymMatrix<std::int64_t>{{4, -1}, {-1, 2}}), 7);
  EXPECT_EQ(det_exact(Matrix<std::int64_t>::Identity(3, 3)), 1);
  EXPECT_EQ(det_exact(SymMatrix<std::int64_t>{{-1, -3}, {-3, 2}}), -11);
}

TEST(DetExact, AcceptsNonSymmetricAndZeroPivots) {
  Matrix<std::int64_t> m(3, 3);
  m << 0, 2, 1, 3, 0, 5, 1, 1, 0;
  EXPECT_EQ(det_exact(m), oracle::laplace_det(rows_of(m)));
  Matrix<std::int64_t> singular(2, 2);
  singular << 0, 0, 1, 2;
  EXPECT_EQ(det_exact(singular), 0);
  EXPECT_THROW(det_exact(Matrix<std::int64_t>::Zero(2, 3)), std::invalid_argument);
}

TEST(DetExact, MatchesLaplaceExpansionOnRandomMatrices) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<std::int64_t> entry(-20, 20);
  for (int t = 0; t < 500; ++t) {
    const int n = dim(rng);
    Matrix<std::int64_t> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (t % 3 == 0 && i == j) ? 0 : entry(rng);
    ASSERT_EQ(det_exact(m), oracle::laplace_det(rows_of(m))) << m;
  }
}

TEST(DetExact, LargeEntriesDoNotOverflow) {
  const std::int64_t big = std::int64_t{1} << 62;
  Matrix<std::int64_t> m(2, 2);
  m << big, big - 1, big - 1, big;
  // big^2 - (big-1)^2 = 2 big - 1
  EXPECT_EQ(det_exact(m), BigInt(2) * big - 1);
}

TEST(Inertia, Examples) {
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>{{5}}), (InertiaTriple{1, 0, 0}));
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>{{5}}).signature(), 1);
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>{{4, -1}, {-1, 2}}), (InertiaTriple{2, 0, 0}));
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>{{-1, -3}, {-3, 2}}), (InertiaTriple{1, 0, 1}));
}

TEST(Inertia, ZeroDiagonalNeedsPivoting) {
  const SymMatrix<std::int64_t> hyperbolic{{0, 1}, {1, 0}};
  EXPECT_EQ(inertia(hyperbolic), (InertiaTriple{1, 0, 1}));
  EXPECT_EQ(inertia_charpoly(hyperbolic), (InertiaTriple{1, 0, 1}));
  const SymMatrix<std::int64_t> corner{{0, 0, 3}, {0, 0, 0}, {3, 0, 0}};
  EXPECT_EQ(inertia(corner), (InertiaTriple{1, 1, 1}));
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>(Matrix<std::int64_t>::Zero(4, 4))), (InertiaTriple{0, 4, 0}));
  // Goeritz matrix of K4 at n = 0 has a zero corner.
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>{{4, -3}, {-3, 0}}), (InertiaTriple{1, 0, 1}));
}

TEST(Inertia, TwoByTwoMatchesDetTraceRule) {
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      for (std::int64_t c = -6; c <= 6; ++c) {
        const SymMatrix<std::int64_t> m{{a, b}, {b, c}};
        ASSERT_EQ(inertia(m).signature(), oracle::signature_2x2(a, b, c)) << a << ' ' << b << ' ' << c;
      }
}

TEST(Inertia, CongruenceAndCharpolyAgreeOnRandomMatrices) {
  std::mt19937_64 rng(2006);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> zero_mask(0, 3);
  for (int t = 0; t < 2000; ++t) {
    Matrix<std::int64_t> m = random_symmetric(rng, dim(rng), 20);
    // Sparsify some cases to exercise zero pivots and rank deficiency.
    if (t % 2 == 0)
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
          if (zero_mask(rng) != 0) m(i, j) = m(j, i) = 0;
    const SymMatrix<std::int64_t> sym(m);
    const InertiaTriple a = inertia(sym);
    ASSERT_EQ(a, inertia_charpoly(sym)) << m;
    ASSERT_EQ(a.dim(), m.rows());
    ASSERT_EQ(a.zero, m.rows() - rank_exact(m)) << m;
    ASSERT_EQ(det_exact(sym) != 0, a.zero == 0) << m;
  }
}

TEST(Inertia, RankDeficientByConstruction) {
  // v v^T - w w^T has inertia (1, n-2, 1) for independent v, w.
  Eigen::Matrix<std::int64_t, 5, 1> v, w;
  v << 1, 2, 0, -1, 3;
  w << 0, 1, 1, 1, -2;
  const Matrix<std::int64_t> m = v * v.transpose() - w * w.transpose();
  EXPECT_EQ(inertia(SymMatrix<std::int64_t>(m)), (InertiaTriple{1, 3, 1}));
  EXPECT_EQ(inertia_charpoly(SymMatrix<std::int64_t>(m)), (InertiaTriple{1, 3, 1}));
  EXPECT_EQ(rank_exact(m), 2);
}

TEST(CharacteristicPolynomial, KnownCases) {
  // det(xI - [[2,1],[1,2]]) = x^2 - 4x + 3
  const std::vector<BigInt> p = characteristic_polynomial(SymMatrix<std::int64_t>{{2, 1}, {1, 2}}.matrix());
  EXPECT_EQ(p, (std::vector<BigInt>{3, -4, 1}));
  const std::vector<BigInt> id = characteristic_polynomial(Matrix<std::int64_t>::Identity(3, 3));
  EXPECT_EQ(id, (std::vector<BigInt>{-1, 3, -3, 1}));
}

TEST(CharacteristicPolynomial, ConstantTermIsSignedDeterminant) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 6;
    const Matrix<std::int64_t> m = random_symmetric(rng, n, 20);
    const std::vector<BigInt> p = characteristic_polynomial(m);
    ASSERT_EQ(p.size(), static_cast<std::size_t>(n + 1));
    ASSERT_EQ(p.back(), 1);
    const BigInt det = det_exact(m);
    ASSERT_EQ(p.front(), n % 2 == 0 ? det : BigInt(-det));
    ASSERT_EQ(p[static_cast<std::size_t>(n - 1)], BigInt(-m.trace()));
  }
}

}  // namespace
}  // namespace crosscap
