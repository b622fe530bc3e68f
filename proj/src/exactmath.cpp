#include "crosscap/exactmath.hpp"

#include <array>
#include <bit>
#include <utility>

namespace crosscap {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<u64, 12> kSmallPrimeBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// psi_13: smallest strong pseudoprime to all of the first 13 prime bases.
const BigInt kBigIntPrimalityLimit("3317044064679887385961981");

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

int sign_of(const BigInt& v) { return v.sign(); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

bool is_prime_u64(u64 m) {
  if (m < 2) return false;
  for (u64 p : kSmallPrimeBases) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  u64 d = m - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (u64 a : kSmallPrimeBases) {
    u64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const BigInt& m) {
  if (m < 2) return false;
  if (m <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(m));
  if (m >= kBigIntPrimalityLimit)
    throw std::out_of_range("is_prime: argument beyond the deterministic witness bound");
  BigInt d = m - 1;
  const unsigned s = lsb(d);
  d >>= s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (m % a == 0) return false;
    BigInt x = powm(BigInt(a), d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % m;
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

BigInt bareiss_determinant(Matrix<BigInt> a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return BigInt(1);
  BigInt previous = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return BigInt(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

int bareiss_rank(Matrix<BigInt> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  BigInt previous = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) a.row(rank).swap(a.row(pivot));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        a(i, j) = (a(i, j) * a(rank, c) - a(i, c) * a(rank, j)) / previous;
      a(i, c) = 0;
    }
    previous = a(rank, c);
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<BigInt> berkowitz_charpoly(const Matrix<BigInt>& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return {BigInt(1)};
  // Descending coefficients of det(xI - A_r) for the leading r x r block.
  std::vector<BigInt> poly = {BigInt(1), BigInt(-a(0, 0))};
  for (Eigen::Index r = 1; r < n; ++r) {
    // A_{r+1} = [[M, C], [R, a_rr]] with M the leading r x r block.
    std::vector<BigInt> toeplitz(static_cast<std::size_t>(r + 2));
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    std::vector<BigInt> power(static_cast<std::size_t>(r));  // M^k C
    for (Eigen::Index i = 0; i < r; ++i) power[static_cast<std::size_t>(i)] = a(i, r);
    for (Eigen::Index k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (Eigen::Index j = 0; j < r; ++j) dot += a(r, j) * power[static_cast<std::size_t>(j)];
      toeplitz[static_cast<std::size_t>(k + 2)] = -dot;
      if (k + 1 == r) break;
      std::vector<BigInt> next(static_cast<std::size_t>(r));
      for (Eigen::Index i = 0; i < r; ++i) {
        BigInt acc = 0;
        for (Eigen::Index j = 0; j < r; ++j) acc += a(i, j) * power[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = std::move(acc);
      }
      power = std::move(next);
    }
    std::vector<BigInt> updated(poly.size() + 1);
    for (std::size_t i = 0; i < updated.size(); ++i) {
      BigInt acc = 0;
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) acc += toeplitz[i - j] * poly[j];
      updated[i] = std::move(acc);
    }
    poly = std::move(updated);
  }
  return {poly.rbegin(), poly.rend()};
}

InertiaTriple descartes_inertia(const std::vector<BigInt>& charpoly) {
  const int degree = static_cast<int>(charpoly.size()) - 1;
  InertiaTriple t;
  while (t.zero < degree && charpoly[static_cast<std::size_t>(t.zero)] == 0) ++t.zero;
  std::vector<int> at_x;
  std::vector<int> at_minus_x;
  for (int k = 0; k <= degree; ++k) {
    const int s = sign_of(charpoly[static_cast<std::size_t>(k)]);
    at_x.push_back(s);
    at_minus_x.push_back(k % 2 == 0 ? s : -s);
  }
  t.positive = sign_changes(at_x);
  t.negative = sign_changes(at_minus_x);
  if (t.dim() != degree)
    throw std::logic_error("descartes_inertia: polynomial is not real-rooted");
  return t;
}

InertiaTriple congruence_inertia(const Matrix<BigInt>& source) {
  const Eigen::Index n = source.rows();
  Matrix<Rational> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(source(i, j));

  InertiaTriple t;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, pivot) == 0) pivot++;
    if (pivot == n) {
      // All remaining diagonal entries vanish. Adding row/column j to i
      // turns a(i,i) into 2 a(i,j), which is nonzero.
      for (Eigen::Index i = k; i < n && pivot == n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
          if (a(i, j) == 0) continue;
          for (Eigen::Index c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (Eigen::Index r = 0; r < n; ++r) a(r, i) += a(r, j);
          pivot = i;
          break;
        }
      }
      if (pivot == n) {
        t.zero += static_cast<int>(n - k);
        break;
      }
    }
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      a.col(k).swap(a.col(pivot));
    }
    const Rational d = a(k, k);
    if (d > 0)
      ++t.positive;
    else
      ++t.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / d;
      for (Eigen::Index c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      for (Eigen::Index r = k; r < n; ++r) a(r, i) -= f * a(r, k);
    }
  }
  return t;
}

}  // namespace detail

}  // namespace crosscap
