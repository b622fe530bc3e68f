// Parametric knot families, their pretzel forms and spanning-surface data,
// and the Gordon-Litherland signature / determinant computations.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "crosscap/exactmath.hpp"

namespace crosscap {

/// K4 = K(4,2n,p), K4Neg = K(-4,2n,p), Km1 = K(-1,2n,p), Cable2 = a (2,q)-cable.
enum class Family { K4, K4Neg, Km1, Cable2 };

std::string_view to_string(Family f);
/// Accepts the CLI spellings k4, k4neg, km1, cable2.
std::optional<Family> parse_family(std::string_view name);

/// Parameters beyond these magnitudes are rejected so that every derived
/// quantity (determinants, 2n + p^2) stays inside 64 bits.
inline constexpr std::int64_t kMaxAbsTwist = std::int64_t{1} << 40;
inline constexpr std::int64_t kMaxAbsOddParam = std::int64_t{1} << 31;

class FamilySpec {
 public:
  static FamilySpec k4(std::int64_t n, std::int64_t p);
  static FamilySpec k4neg(std::int64_t n, std::int64_t p);
  static FamilySpec km1(std::int64_t n, std::int64_t p);
  static FamilySpec cable2(std::int64_t q);
  /// Generic constructor; for Cable2 `n` must be 0 and `odd` is q.
  static FamilySpec make(Family family, std::int64_t n, std::int64_t odd);

  Family family() const { return family_; }
  std::int64_t n() const { return n_; }
  /// p for the pretzel families, q for Cable2.
  std::int64_t odd_parameter() const { return odd_; }
  std::int64_t p() const;
  std::int64_t q() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Family family, std::int64_t n, std::int64_t odd) : family_(family), n_(n), odd_(odd) {}

  Family family_;
  std::int64_t n_;
  std::int64_t odd_;
};

std::string describe(const FamilySpec& spec);

struct PretzelParams {
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  std::int64_t q3 = 0;

  friend bool operator==(const PretzelParams&, const PretzelParams&) = default;
};

/// "P(a,b,c)"
std::string to_string(const PretzelParams& pz);

struct GoeritzPresentation {
  SymMatrix<std::int64_t> matrix;
  std::int64_t euler;  // normal Euler number e(F); even
  bool orientable;
};

struct KnotInvariants {
  FamilySpec spec;
  std::optional<PretzelParams> pretzel;
  GoeritzPresentation goeritz;
  std::int64_t determinant;  // positive, odd
  std::int64_t signature;    // even
  int gamma4_lower;
  int gamma4_upper;
};

std::optional<PretzelParams> pretzel_of(const FamilySpec& spec);
GoeritzPresentation goeritz_of(const FamilySpec& spec);

/// sign(G_F) + e(F)/2.
std::int64_t signature_of(const GoeritzPresentation& g);
std::int64_t signature_of(const FamilySpec& spec);

/// |det G_F|.
std::int64_t determinant_of(const GoeritzPresentation& g);
std::int64_t determinant_of(const FamilySpec& spec);

struct Gamma4Bounds {
  int lower;
  int upper;
  friend bool operator==(const Gamma4Bounds&, const Gamma4Bounds&) = default;
};

/// Each family bounds a Moebius band in B^4 (upper 1, the unknot 0); a
/// nonzero signature rules out sliceness (lower 1).
Gamma4Bounds gamma4_bounds(const FamilySpec& spec);

/// Crosscap number of a three-strand pretzel knot from the cited results:
/// 3 when all entries are odd, 2 when exactly one is even.
std::optional<int> crosscap_of_pretzel(const PretzelParams& pz);

KnotInvariants invariants_of(const FamilySpec& spec);

}  // namespace crosscap
