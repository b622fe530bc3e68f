// Sweeps over the twist parameter n for a fixed family and p, with the
// certificate predicates that explain why infinitely many members are
// obstructed.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "crosscap/obstruction.hpp"

namespace crosscap {

/// ThreeAdic: 3 divides exactly one of 8n and p, so 3(8n - p^2) has odd
/// 3-adic valuation. PrimeDet: 2n + p^2 is a prime exceeding 2n + 1.
enum class Certificate { ThreeAdic, PrimeDet };

std::string_view to_string(Certificate c);

struct SearchQuery {
  Family family;
  std::int64_t p;
  std::int64_t n_min;
  std::int64_t n_max;
  bool certify_only = false;
};

/// Throws std::invalid_argument for an empty range, Cable2, even p, a Km1
/// range reaching below n = 1, or certify_only on the torus case p = +-1.
void validate(const SearchQuery& query);

struct SearchRow {
  std::int64_t n;
  Classification classification;
  std::optional<Certificate> certificate;
};

struct SearchCounts {
  std::size_t total = 0;
  std::size_t obstructed = 0;
  std::size_t certified = 0;
  std::size_t not_obstructed = 0;
  std::size_t out_of_domain = 0;

  friend bool operator==(const SearchCounts&, const SearchCounts&) = default;
};

struct SearchReport {
  SearchQuery query;
  std::vector<SearchRow> rows;  // ascending n
  SearchCounts counts;
};

struct SearchSummary {
  SearchCounts counts;
  double obstructed_density;  // obstructed / total
  std::optional<std::int64_t> first_certified;
  std::optional<std::int64_t> last_certified;
};

/// Precondition 8n - p^2 > 0.
bool certify_k4(std::int64_t p, std::int64_t n);
/// Preconditions p != +-1, n >= 1.
bool certify_km1(std::int64_t p, std::int64_t n);

/// The certificate that applies to this spec, if any.
std::optional<Certificate> certificate_for(const FamilySpec& spec);

/// `jobs` = 0 picks the hardware concurrency. The result does not depend on it.
SearchReport sweep(const SearchQuery& query, unsigned jobs = 0);

SearchSummary summarize(const SearchReport& report);

}  // namespace crosscap
