#include "crosscap/obstruction.hpp"

#include <cstdlib>
#include <stdexcept>

namespace crosscap {

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Obstructed: return "Obstructed";
    case VerdictStatus::NotObstructed: return "NotObstructed";
    case VerdictStatus::OutOfTheoremDomain: return "OutOfTheoremDomain";
  }
  return "?";
}

std::optional<VerdictStatus> parse_verdict(std::string_view name) {
  for (VerdictStatus s :
       {VerdictStatus::Obstructed, VerdictStatus::NotObstructed, VerdictStatus::OutOfTheoremDomain})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

std::vector<std::int64_t> cable_candidates(std::int64_t sigma) {
  if (sigma % 2 != 0) throw std::invalid_argument("cable_candidates: signature must be even");
  if (sigma == 0) return {1, -1};
  if (sigma < 0) return {1 - sigma};
  return {-1 - sigma};
}

std::optional<BigInt> fox_milnor_det_test(const BigInt& d1, const BigInt& d2) {
  if (d1 <= 0 || d2 <= 0) throw std::invalid_argument("fox_milnor_det_test: determinants must be positive");
  if (d1 % 2 == 0 || d2 % 2 == 0) throw std::invalid_argument("fox_milnor_det_test: determinants must be odd");
  return odd_square_root(BigInt(d1 * d2));
}

ObstructionVerdict gc1_verdict(const KnotInvariants& inv) {
  const FamilySpec& spec = inv.spec;
  if (spec.family() == Family::Km1 && spec.n() <= 0)
    return {VerdictStatus::OutOfTheoremDomain, {}, std::nullopt};

  ObstructionVerdict v{VerdictStatus::Obstructed, {}, std::nullopt};
  const BigInt det(inv.determinant);
  for (std::int64_t q : cable_candidates(inv.signature)) {
    const BigInt abs_q(std::llabs(q));
    std::optional<BigInt> root = fox_milnor_det_test(abs_q, det);
    if (root && !v.witness) {
      v.status = VerdictStatus::NotObstructed;
      v.witness = *root;
    }
    v.candidates.push_back({q, abs_q * det, std::move(root)});
  }
  return v;
}

std::optional<bool> theorem_condition(const FamilySpec& spec) {
  const BigInt n(spec.n());
  switch (spec.family()) {
    case Family::K4: {
      const BigInt p(spec.p());
      const BigInt d = 8 * n - p * p;
      // d is odd, never zero.
      if (d < 0) return odd_square_root(BigInt(p * p - 8 * n)).has_value();
      return odd_square_root(BigInt(3 * d)).has_value();
    }
    case Family::Km1: {
      if (spec.n() <= 0) return std::nullopt;
      const BigInt p(spec.p());
      return odd_square_root(BigInt((2 * n + p * p) * (2 * n + 1))).has_value();
    }
    case Family::K4Neg:
    case Family::Cable2: return std::nullopt;
  }
  return std::nullopt;
}

Classification classify(const FamilySpec& spec) {
  KnotInvariants inv = invariants_of(spec);
  ObstructionVerdict verdict = gc1_verdict(inv);
  std::vector<std::string> notes;

  int lower = 0;
  if (inv.signature != 0) lower = 1;
  if (verdict.status == VerdictStatus::Obstructed) lower = 2;

  int upper = 0;
  if (spec.family() == Family::Cable2) {
    upper = std::llabs(spec.q()) == 1 ? 0 : 1;
    notes.emplace_back("gamma_c upper bound: (2,q)-cable bounds a Moebius band");
  } else {
    // Always defined for these families: K4/K4Neg are all-odd, Km1 has one even entry.
    upper = crosscap_of_pretzel(*inv.pretzel).value();
    notes.emplace_back("gamma_c upper bound: cited crosscap number of the 3-pretzel");
  }
  if (spec.family() == Family::Km1 && verdict.status == VerdictStatus::Obstructed) {
    lower = upper = 2;
    notes.emplace_back("gamma_c = 2: obstructed and the pretzel bounds a surface with b1 = 2");
  }
  if (spec.family() == Family::K4Neg) notes.emplace_back("verdict via generalized pipeline");
  if (verdict.status == VerdictStatus::NotObstructed)
    notes.emplace_back("necessary condition holds; gamma_c = 1 is not ruled out");

  return Classification{std::move(inv), std::move(verdict), lower, upper, std::move(notes)};
}

}  // namespace crosscap
