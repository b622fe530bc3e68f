// Obstruction to concordance crosscap number one.
//
// A knot concordant to a (2,q)-cable shares its signature sign(q) - q, and
// the connected sum with the reversed mirror is slice, so the product of
// determinants must be an odd square. The pipeline here runs exactly that:
// signature -> admissible q -> |q| * det -> odd-square test.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crosscap/knotmodel.hpp"

namespace crosscap {

enum class VerdictStatus { Obstructed, NotObstructed, OutOfTheoremDomain };

std::string_view to_string(VerdictStatus s);
std::optional<VerdictStatus> parse_verdict(std::string_view name);

struct CableCandidate {
  std::int64_t q;
  BigInt product;               // |q| * det(K)
  std::optional<BigInt> root;   // odd l with l^2 == product
};

struct ObstructionVerdict {
  VerdictStatus status;
  std::vector<CableCandidate> candidates;
  std::optional<BigInt> witness;
};

struct Classification {
  KnotInvariants invariants;
  ObstructionVerdict verdict;
  int gammac_lower;
  int gammac_upper;
  std::vector<std::string> notes;
};

/// All odd q with sign(q) - q == sigma. Throws on odd sigma.
std::vector<std::int64_t> cable_candidates(std::int64_t sigma);

/// Odd square root of d1 * d2; both must be positive and odd.
std::optional<BigInt> fox_milnor_det_test(const BigInt& d1, const BigInt& d2);

ObstructionVerdict gc1_verdict(const KnotInvariants& inv);

/// The theorem statements evaluated literally from (n, p): whether the
/// required odd square exists. Empty where no literal formula is stated
/// (Cable2, K4Neg, Km1 with n <= 0).
std::optional<bool> theorem_condition(const FamilySpec& spec);

Classification classify(const FamilySpec& spec);

}  // namespace crosscap
