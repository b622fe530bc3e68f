#include "crosscap/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace crosscap {

namespace {

using nlohmann::json;

std::string big_to_string(const BigInt& v) { return v.str(); }

/// Name of the quantity whose squareness is tested, phrased the way the
/// family's closed form reads.
std::string tested_quantity(const Classification& c) {
  const FamilySpec& spec = c.invariants.spec;
  switch (spec.family()) {
    case Family::K4: return c.invariants.signature == 0 ? "p^2-8n" : "3*(8n-p^2)";
    case Family::Km1: return "(2n+p^2)*(2n+1)";
    case Family::K4Neg:
    case Family::Cable2: return "|q|*det";
  }
  return "|q|*det";
}

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  return fields;
}

template <typename Int>
Int parse_int(const std::string& s) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

json record_json(const OutputRecord& r) {
  return json{{"family", r.family},       {"n", r.n},
              {"p", r.p_or_q},            {"pretzel", r.pretzel},
              {"det", r.det},             {"sigma", r.sigma},
              {"euler", r.euler},         {"gamma4_lo", r.gamma4_lo},
              {"gamma4_hi", r.gamma4_hi}, {"verdict", r.verdict},
              {"gammac_lo", r.gammac_lo}, {"gammac_hi", r.gammac_hi},
              {"certificate", r.certificate}};
}

std::string range(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

}  // namespace

std::string certificate_string(const Classification& c, std::optional<Certificate> cert) {
  const ObstructionVerdict& v = c.verdict;
  switch (v.status) {
    case VerdictStatus::NotObstructed: return "l=" + big_to_string(*v.witness);
    case VerdictStatus::OutOfTheoremDomain: return "-";
    case VerdictStatus::Obstructed: break;
  }
  const BigInt& product = v.candidates.front().product;
  if (cert == Certificate::ThreeAdic)
    return "three-adic:v3(" + big_to_string(product) +
           ")=" + std::to_string(padic_valuation(product, BigInt(3)));
  if (cert == Certificate::PrimeDet) return "prime-det:" + std::to_string(c.invariants.determinant);
  return "nonsquare:" + big_to_string(product);
}

OutputRecord to_record(const Classification& c, std::optional<Certificate> cert) {
  const KnotInvariants& inv = c.invariants;
  OutputRecord r;
  r.family = std::string(to_string(inv.spec.family()));
  r.n = inv.spec.n();
  r.p_or_q = inv.spec.odd_parameter();
  r.pretzel = inv.pretzel ? to_string(*inv.pretzel) : "-";
  r.det = inv.determinant;
  r.sigma = inv.signature;
  r.euler = inv.goeritz.euler;
  r.gamma4_lo = inv.gamma4_lower;
  r.gamma4_hi = inv.gamma4_upper;
  r.verdict = std::string(to_string(c.verdict.status));
  r.gammac_lo = c.gammac_lower;
  r.gammac_hi = c.gammac_upper;
  r.certificate = certificate_string(c, cert);
  return r;
}

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << quote_csv(r.family) << ',' << r.n << ',' << r.p_or_q << ',' << quote_csv(r.pretzel) << ','
     << r.det << ',' << r.sigma << ',' << r.euler << ',' << r.gamma4_lo << ',' << r.gamma4_hi << ','
     << quote_csv(r.verdict) << ',' << r.gammac_lo << ',' << r.gammac_hi << ','
     << quote_csv(r.certificate);
  return os.str();
}

OutputRecord parse_csv_row(std::string_view line) {
  const std::vector<std::string> f = split_csv(line);
  if (f.size() != 13) throw std::invalid_argument("expected 13 CSV fields, got " + std::to_string(f.size()));
  OutputRecord r;
  r.family = f[0];
  r.n = parse_int<std::int64_t>(f[1]);
  r.p_or_q = parse_int<std::int64_t>(f[2]);
  r.pretzel = f[3];
  r.det = parse_int<std::int64_t>(f[4]);
  r.sigma = parse_int<std::int64_t>(f[5]);
  r.euler = parse_int<std::int64_t>(f[6]);
  r.gamma4_lo = parse_int<int>(f[7]);
  r.gamma4_hi = parse_int<int>(f[8]);
  r.verdict = f[9];
  r.gammac_lo = parse_int<int>(f[10]);
  r.gammac_hi = parse_int<int>(f[11]);
  r.certificate = f[12];
  return r;
}

std::string to_json(const OutputRecord& r) { return record_json(r).dump(); }

OutputRecord record_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    OutputRecord r;
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<std::int64_t>();
    r.p_or_q = j.at("p").get<std::int64_t>();
    r.pretzel = j.at("pretzel").get<std::string>();
    r.det = j.at("det").get<std::int64_t>();
    r.sigma = j.at("sigma").get<std::int64_t>();
    r.euler = j.at("euler").get<std::int64_t>();
    r.gamma4_lo = j.at("gamma4_lo").get<int>();
    r.gamma4_hi = j.at("gamma4_hi").get<int>();
    r.verdict = j.at("verdict").get<std::string>();
    r.gammac_lo = j.at("gammac_lo").get<int>();
    r.gammac_hi = j.at("gammac_hi").get<int>();
    r.certificate = j.at("certificate").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed record JSON: ") + e.what());
  }
}

std::string render_csv(const SearchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const SearchRow& row : report.rows) {
    out += to_csv_row(to_record(row.classification, row.certificate));
    out += '\n';
  }
  return out;
}

std::string render_json(const SearchReport& report) {
  json records = json::array();
  for (const SearchRow& row : report.rows)
    records.push_back(record_json(to_record(row.classification, row.certificate)));
  const SearchSummary s = summarize(report);
  json summary{{"family", std::string(to_string(report.query.family))},
               {"p", report.query.p},
               {"n_min", report.query.n_min},
               {"n_max", report.query.n_max},
               {"certify_only", report.query.certify_only},
               {"total", s.counts.total},
               {"obstructed", s.counts.obstructed},
               {"certified", s.counts.certified},
               {"not_obstructed", s.counts.not_obstructed},
               {"out_of_domain", s.counts.out_of_domain},
               {"obstructed_density", s.obstructed_density},
               {"first_certified", s.first_certified ? json(*s.first_certified) : json(nullptr)},
               {"last_certified", s.last_certified ? json(*s.last_certified) : json(nullptr)}};
  return json{{"records", std::move(records)}, {"summary", std::move(summary)}}.dump(2) + "\n";
}

std::string render_text(const SearchReport& report) {
  std::ostringstream os;
  for (const SearchRow& row : report.rows) {
    const OutputRecord r = to_record(row.classification, row.certificate);
    os << "n=" << r.n << "  " << describe(row.classification.invariants.spec) << " = " << r.pretzel
       << "  det=" << r.det << "  sigma=" << r.sigma << "  " << r.verdict
       << "  gamma_c=" << range(r.gammac_lo, r.gammac_hi) << "  " << r.certificate << '\n';
  }
  const SearchSummary s = summarize(report);
  os << "total " << s.counts.total << ", obstructed " << s.counts.obstructed << ", certified "
     << s.counts.certified << ", not obstructed " << s.counts.not_obstructed << ", out of domain "
     << s.counts.out_of_domain << '\n';
  return os.str();
}

std::string render_text(const Classification& c, std::optional<Certificate> cert) {
  const KnotInvariants& inv = c.invariants;
  const OutputRecord r = to_record(c, cert);
  std::ostringstream os;
  os << describe(inv.spec);
  if (inv.pretzel) os << " = " << r.pretzel;
  os << '\n';

  const auto& g = inv.goeritz.matrix;
  os << "  Goeritz matrix [";
  for (Eigen::Index i = 0; i < g.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (Eigen::Index j = 0; j < g.dim(); ++j) os << (j ? "," : "") << g(i, j);
    os << ']';
  }
  os << "], e(F) = " << inv.goeritz.euler << (inv.goeritz.orientable ? " (orientable)" : " (non-orientable)")
     << '\n';
  os << "  det = " << inv.determinant << ", sigma = " << inv.signature << '\n';
  os << "  gamma* in " << range(inv.gamma4_lower, inv.gamma4_upper) << '\n';

  for (const CableCandidate& cand : c.verdict.candidates) {
    os << "  candidate (2," << cand.q << ")-cable: |q|*det = " << big_to_string(cand.product);
    if (cand.root)
      os << " = " << big_to_string(*cand.root) << "^2\n";
    else
      os << " is not an odd square\n";
  }

  os << "  verdict: " << r.verdict << '\n';
  switch (c.verdict.status) {
    case VerdictStatus::Obstructed:
      os << "  gamma_c >= 2: " << tested_quantity(c) << " = "
         << big_to_string(c.verdict.candidates.front().product) << " is not an odd square\n";
      break;
    case VerdictStatus::NotObstructed:
      os << "  witness: l = " << big_to_string(*c.verdict.witness) << '\n';
      break;
    case VerdictStatus::OutOfTheoremDomain:
      os << "  the square condition is only established for n > 0\n";
      break;
  }
  os << "  gamma_c in " << range(c.gammac_lower, c.gammac_upper) << '\n';
  os << "  certificate: " << r.certificate << '\n';
  for (const std::string& note : c.notes) os << "  note: " << note << '\n';
  return os.str();
}

}  // namespace crosscap
