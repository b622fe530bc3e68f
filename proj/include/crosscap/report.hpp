// Serialization of classifications and sweep reports: one OutputRecord per
// knot, rendered as CSV (primary interchange), JSON, or human-readable text.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "crosscap/familysearch.hpp"

namespace crosscap {

inline constexpr std::string_view kCsvHeader =
    "family,n,p,pretzel,det,sigma,euler,gamma4_lo,gamma4_hi,verdict,gammac_lo,gammac_hi,certificate";

struct OutputRecord {
  std::string family;
  std::int64_t n = 0;       // 0 for cable2
  std::int64_t p_or_q = 0;
  std::string pretzel;      // "P(a,b,c)" or "-"
  std::int64_t det = 0;
  std::int64_t sigma = 0;
  std::int64_t euler = 0;
  int gamma4_lo = 0;
  int gamma4_hi = 0;
  std::string verdict;
  int gammac_lo = 0;
  int gammac_hi = 0;
  std::string certificate;  // "l=<root>", "three-adic:...", "prime-det:...", "nonsquare:...", "-"

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string certificate_string(const Classification& c, std::optional<Certificate> cert);
OutputRecord to_record(const Classification& c, std::optional<Certificate> cert);

/// One CSV line without the trailing newline; fields containing a comma or
/// quote are quoted.
std::string to_csv_row(const OutputRecord& r);
/// Inverse of to_csv_row. Throws std::invalid_argument on malformed input.
OutputRecord parse_csv_row(std::string_view line);

std::string to_json(const OutputRecord& r);
OutputRecord record_from_json(std::string_view text);

std::string render_csv(const SearchReport& report);
std::string render_json(const SearchReport& report);
std::string render_text(const SearchReport& report);

/// Multi-line narrative for a single knot.
std::string render_text(const Classification& c, std::optional<Certificate> cert);

}  // namespace crosscap
