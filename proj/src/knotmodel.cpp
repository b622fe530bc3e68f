#include "crosscap/knotmodel.hpp"

#include <cstdlib>
#include <stdexcept>

namespace crosscap {

namespace {

bool is_odd(std::int64_t v) { return v % 2 != 0; }

void require_twist(std::int64_t n) {
  if (n < -kMaxAbsTwist || n > kMaxAbsTwist)
    throw std::out_of_range("twist parameter n exceeds 2^40 in magnitude");
}

void require_odd(std::int64_t v, std::int64_t limit, const char* name) {
  if (!is_odd(v)) throw std::invalid_argument(std::string(name) + " must be odd");
  if (v < -limit || v > limit) throw std::out_of_range(std::string(name) + " is too large");
}

Gamma4Bounds gamma4_from(const FamilySpec& spec, std::int64_t sigma) {
  const bool unknot = spec.family() == Family::Cable2 && std::llabs(spec.q()) == 1;
  if (unknot) return {0, 0};
  return {sigma != 0 ? 1 : 0, 1};
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::K4: return "k4";
    case Family::K4Neg: return "k4neg";
    case Family::Km1: return "km1";
    case Family::Cable2: return "cable2";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::K4, Family::K4Neg, Family::Km1, Family::Cable2})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

FamilySpec FamilySpec::k4(std::int64_t n, std::int64_t p) { return make(Family::K4, n, p); }
FamilySpec FamilySpec::k4neg(std::int64_t n, std::int64_t p) { return make(Family::K4Neg, n, p); }
FamilySpec FamilySpec::km1(std::int64_t n, std::int64_t p) { return make(Family::Km1, n, p); }
FamilySpec FamilySpec::cable2(std::int64_t q) { return make(Family::Cable2, 0, q); }

FamilySpec FamilySpec::make(Family family, std::int64_t n, std::int64_t odd) {
  if (family == Family::Cable2) {
    if (n != 0) throw std::invalid_argument("cable2 takes no twist parameter n");
    require_odd(odd, kMaxAbsTwist, "q");
  } else {
    require_twist(n);
    require_odd(odd, kMaxAbsOddParam, "p");
  }
  return FamilySpec(family, n, odd);
}

std::int64_t FamilySpec::p() const {
  if (family_ == Family::Cable2) throw std::logic_error("cable2 has no p parameter");
  return odd_;
}

std::int64_t FamilySpec::q() const {
  if (family_ != Family::Cable2) throw std::logic_error("only cable2 has a q parameter");
  return odd_;
}

std::string describe(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::K4: return "K(4," + std::to_string(2 * spec.n()) + "," + std::to_string(spec.p()) + ")";
    case Family::K4Neg:
      return "K(-4," + std::to_string(2 * spec.n()) + "," + std::to_string(spec.p()) + ")";
    case Family::Km1:
      return "K(-1," + std::to_string(2 * spec.n()) + "," + std::to_string(spec.p()) + ")";
    case Family::Cable2: return "C(2," + std::to_string(spec.q()) + ")";
  }
  return "?";
}

std::string to_string(const PretzelParams& pz) {
  return "P(" + std::to_string(pz.q1) + "," + std::to_string(pz.q2) + "," + std::to_string(pz.q3) + ")";
}

std::optional<PretzelParams> pretzel_of(const FamilySpec& spec) {
  const std::int64_t n = spec.n();
  switch (spec.family()) {
    case Family::K4: return PretzelParams{4 - spec.p(), spec.p(), 2 * n - spec.p()};
    case Family::K4Neg: return PretzelParams{-4 - spec.p(), spec.p(), 2 * n - spec.p()};
    case Family::Km1: return PretzelParams{-1 - spec.p(), spec.p(), 2 * n - spec.p()};
    case Family::Cable2: return std::nullopt;
  }
  return std::nullopt;
}

GoeritzPresentation goeritz_of(const FamilySpec& spec) {
  const std::int64_t n = spec.n();
  switch (spec.family()) {
    case Family::K4:
      return {SymMatrix<std::int64_t>{{4, -spec.p()}, {-spec.p(), 2 * n}}, 0, true};
    case Family::K4Neg:
      return {SymMatrix<std::int64_t>{{-4, -spec.p()}, {-spec.p(), 2 * n}}, 0, true};
    case Family::Km1:
      return {SymMatrix<std::int64_t>{{-1, -spec.p()}, {-spec.p(), 2 * n}}, -4 * n, false};
    case Family::Cable2:
      return {SymMatrix<std::int64_t>{{spec.q()}}, -2 * spec.q(), false};
  }
  throw std::logic_error("goeritz_of: unknown family");
}

std::int64_t signature_of(const GoeritzPresentation& g) {
  if (g.euler % 2 != 0) throw std::invalid_argument("normal Euler number must be even");
  return inertia(g.matrix).signature() + g.euler / 2;
}

std::int64_t signature_of(const FamilySpec& spec) { return signature_of(goeritz_of(spec)); }

std::int64_t determinant_of(const GoeritzPresentation& g) {
  const BigInt det = abs(det_exact(g.matrix));
  if (det > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("determinant exceeds 64 bits");
  return static_cast<std::int64_t>(det);
}

std::int64_t determinant_of(const FamilySpec& spec) { return determinant_of(goeritz_of(spec)); }

Gamma4Bounds gamma4_bounds(const FamilySpec& spec) { return gamma4_from(spec, signature_of(spec)); }

std::optional<int> crosscap_of_pretzel(const PretzelParams& pz) {
  const int evens = !is_odd(pz.q1) + !is_odd(pz.q2) + !is_odd(pz.q3);
  if (evens == 0) return 3;
  if (evens == 1) return 2;
  return std::nullopt;
}

KnotInvariants invariants_of(const FamilySpec& spec) {
  GoeritzPresentation g = goeritz_of(spec);
  const std::int64_t sigma = signature_of(g);
  const std::int64_t det = determinant_of(g);
  const Gamma4Bounds g4 = gamma4_from(spec, sigma);
  return KnotInvariants{spec, pretzel_of(spec), std::move(g), det, sigma, g4.lower, g4.upper};
}

}  // namespace crosscap
