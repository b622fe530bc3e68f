// Exact integer arithmetic for small symmetric matrices and the number
// theory needed by the crosscap obstruction: determinants, inertia,
// integer square roots, valuations and deterministic primality.
//
// Nothing in here touches floating point on a path that decides a result.

#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace crosscap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest matrix dimension handled by the exact routines.
inline constexpr int kMaxDim = 8;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Square symmetric matrix of dimension 1..kMaxDim. Symmetry and size are
/// checked on construction, so every instance satisfies them.
template <typename Scalar>
class SymMatrix {
 public:
  explicit SymMatrix(Matrix<Scalar> entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
    if (m_.rows() < 1 || m_.rows() > kMaxDim)
      throw std::invalid_argument("SymMatrix: dimension must be in 1..8");
    for (Eigen::Index i = 0; i < m_.rows(); ++i)
      for (Eigen::Index j = 0; j < i; ++j)
        if (m_(i, j) != m_(j, i)) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
  }

  SymMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : SymMatrix(from_rows(rows)) {}

  Eigen::Index dim() const { return m_.rows(); }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const Matrix<Scalar>& matrix() const { return m_; }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.dim() == b.dim() && a.m_ == b.m_;
  }

 private:
  static Matrix<Scalar> from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n > kMaxDim) throw std::invalid_argument("SymMatrix: dimension must be in 1..8");
    Matrix<Scalar> m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Eigen::Index>(row.size()) != n)
        throw std::invalid_argument("SymMatrix: ragged row list");
      Eigen::Index j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  Matrix<Scalar> m_;
};

/// Eigenvalue sign counts of a real symmetric matrix.
struct InertiaTriple {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  int dim() const { return positive + zero + negative; }
  int signature() const { return positive - negative; }

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

namespace detail {

template <typename Derived>
Matrix<BigInt> to_big(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  if (m.rows() > kMaxDim) throw std::invalid_argument("matrix dimension exceeds 8");
  Matrix<BigInt> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = BigInt(m(i, j));
  return out;
}

BigInt bareiss_determinant(Matrix<BigInt> a);
int bareiss_rank(Matrix<BigInt> a);
std::vector<BigInt> berkowitz_charpoly(const Matrix<BigInt>& a);
InertiaTriple congruence_inertia(const Matrix<BigInt>& a);
InertiaTriple descartes_inertia(const std::vector<BigInt>& charpoly);

}  // namespace detail

// ---------------------------------------------------------------------------
// Integer number theory
// ---------------------------------------------------------------------------

/// Floor of the square root of a non-negative integer.
template <typename Int>
Int isqrt(const Int& m) {
  if (m < 0) throw std::domain_error("isqrt: negative argument");
  if (m < 2) return m;
  if constexpr (std::is_integral_v<Int>) {
    // The long double estimate is within a few units; walk it into place.
    using U = std::make_unsigned_t<Int>;
    const U um = static_cast<U>(m);
    U r = static_cast<U>(std::sqrt(static_cast<long double>(um)));
    auto square_exceeds = [um](U x) {
      return static_cast<unsigned __int128>(x) * x > um;
    };
    while (square_exceeds(r)) --r;
    while (!square_exceeds(r + 1)) ++r;
    return static_cast<Int>(r);
  } else {
    Int x = Int(1) << (msb(m) / 2 + 1);
    for (;;) {
      Int y = (x + m / x) / 2;
      if (y >= x) return x;
      x = std::move(y);
    }
  }
}

/// The positive odd l with l*l == m, if there is one.
template <typename Int>
std::optional<Int> odd_square_root(const Int& m) {
  if (m <= 0) return std::nullopt;
  Int r = isqrt(m);
  if (r * r != m || r % 2 == 0) return std::nullopt;
  return r;
}

/// Deterministic strong-pseudoprime test with the first twelve prime
/// bases; exact for every 64-bit input.
bool is_prime_u64(std::uint64_t m);

template <std::integral I>
bool is_prime(I m) {
  if (m < 2) return false;
  return is_prime_u64(static_cast<std::uint64_t>(m));
}

/// Exact below 3.3e24 (first thirteen prime bases). Throws std::out_of_range
/// above that bound rather than returning a probable-prime answer.
bool is_prime(const BigInt& m);

/// Exponent of the prime q in the nonzero integer m.
template <typename Int>
unsigned padic_valuation(Int m, const Int& q) {
  if (m == 0) throw std::domain_error("padic_valuation: zero has no finite valuation");
  if (!is_prime(q)) throw std::invalid_argument("padic_valuation: base is not prime");
  if (m < 0) m = -m;
  unsigned k = 0;
  while (m % q == 0) {
    m /= q;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Exact matrix routines. Entries are widened to BigInt before any product.
// ---------------------------------------------------------------------------

/// Determinant by fraction-free (Bareiss) elimination. Accepts any square
/// integer matrix; the empty matrix has determinant 1.
template <typename Derived>
BigInt det_exact(const Eigen::MatrixBase<Derived>& m) {
  return detail::bareiss_determinant(detail::to_big(m));
}

template <typename Scalar>
BigInt det_exact(const SymMatrix<Scalar>& m) {
  return det_exact(m.matrix());
}

template <typename Derived>
int rank_exact(const Eigen::MatrixBase<Derived>& m) {
  return detail::bareiss_rank(detail::to_big(m));
}

/// Coefficients c[0..n] of det(xI - M), lowest degree first, computed with
/// Berkowitz's division-free recurrence.
template <typename Derived>
std::vector<BigInt> characteristic_polynomial(const Eigen::MatrixBase<Derived>& m) {
  return detail::berkowitz_charpoly(detail::to_big(m));
}

/// Inertia by symmetric congruence diagonalization over the rationals.
template <typename Scalar>
InertiaTriple inertia(const SymMatrix<Scalar>& m) {
  return detail::congruence_inertia(detail::to_big(m.matrix()));
}

/// Inertia by sign counting on the characteristic polynomial (Descartes'
/// rule is exact here because every root is real). Independent of inertia().
template <typename Scalar>
InertiaTriple inertia_charpoly(const SymMatrix<Scalar>& m) {
  return detail::descartes_inertia(characteristic_polynomial(m.matrix()));
}

}  // namespace crosscap
