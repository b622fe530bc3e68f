#include "crosscap/familysearch.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace crosscap {

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::ThreeAdic: return "three-adic";
    case Certificate::PrimeDet: return "prime-det";
  }
  return "?";
}

void validate(const SearchQuery& q) {
  if (q.n_min > q.n_max) throw std::invalid_argument("empty n range");
  if (q.family == Family::Cable2) throw std::invalid_argument("cable2 has no twist parameter to sweep");
  if (q.p % 2 == 0) throw std::invalid_argument("p must be odd");
  if (q.family == Family::Km1 && q.n_min < 1) throw std::invalid_argument("km1 sweeps require n >= 1");
  if (q.certify_only && q.family == Family::Km1 && (q.p == 1 || q.p == -1))
    throw std::invalid_argument("no certificate exists for the torus case p = +-1");
  // Range endpoints go through the same bounds as a single spec.
  FamilySpec::make(q.family, q.n_min, q.p);
  FamilySpec::make(q.family, q.n_max, q.p);
}

bool certify_k4(std::int64_t p, std::int64_t n) {
  const BigInt bp(p);
  if (8 * BigInt(n) - bp * bp <= 0) throw std::invalid_argument("certify_k4 requires 8n - p^2 > 0");
  const bool three_divides_8n = n % 3 == 0;
  const bool three_divides_p = p % 3 == 0;
  return three_divides_8n != three_divides_p;
}

bool certify_km1(std::int64_t p, std::int64_t n) {
  if (p == 1 || p == -1) throw std::invalid_argument("certify_km1 excludes p = +-1");
  if (n < 1) throw std::invalid_argument("certify_km1 requires n >= 1");
  return is_prime(BigInt(2 * BigInt(n) + BigInt(p) * p));
}

std::optional<Certificate> certificate_for(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::K4: {
      const BigInt p(spec.p());
      if (8 * BigInt(spec.n()) - p * p > 0 && certify_k4(spec.p(), spec.n())) return Certificate::ThreeAdic;
      return std::nullopt;
    }
    case Family::Km1:
      if (spec.n() >= 1 && spec.p() != 1 && spec.p() != -1 && certify_km1(spec.p(), spec.n()))
        return Certificate::PrimeDet;
      return std::nullopt;
    case Family::K4Neg:
    case Family::Cable2: return std::nullopt;
  }
  return std::nullopt;
}

SearchReport sweep(const SearchQuery& query, unsigned jobs) {
  validate(query);
  const auto span = static_cast<std::size_t>(query.n_max - query.n_min) + 1;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, span));

  std::vector<std::optional<SearchRow>> slots(span);
  auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::int64_t n = query.n_min + static_cast<std::int64_t>(i);
      const FamilySpec spec = FamilySpec::make(query.family, n, query.p);
      std::optional<Certificate> cert = certificate_for(spec);
      if (query.certify_only && !cert) continue;
      slots[i] = SearchRow{n, classify(spec), cert};
    }
  };

  const std::size_t chunk = (span + jobs - 1) / jobs;
  if (jobs == 1) {
    evaluate(0, span);
  } else {
    std::vector<std::exception_ptr> failures(jobs);
    {
      std::vector<std::jthread> workers;
      workers.reserve(jobs);
      for (std::size_t w = 0, begin = 0; begin < span; ++w, begin += chunk) {
        workers.emplace_back([&, w, begin] {
          try {
            evaluate(begin, std::min(span, begin + chunk));
          } catch (...) {
            failures[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& f : failures)
      if (f) std::rethrow_exception(f);
  }

  SearchReport report{query, {}, {}};
  for (auto& slot : slots) {
    if (!slot) continue;
    SearchCounts& c = report.counts;
    ++c.total;
    switch (slot->classification.verdict.status) {
      case VerdictStatus::Obstructed: ++c.obstructed; break;
      case VerdictStatus::NotObstructed: ++c.not_obstructed; break;
      case VerdictStatus::OutOfTheoremDomain: ++c.out_of_domain; break;
    }
    if (slot->certificate) {
      if (slot->classification.verdict.status != VerdictStatus::Obstructed)
        throw std::logic_error("certified row at n = " + std::to_string(slot->n) + " is not obstructed");
      ++c.certified;
    }
    report.rows.push_back(std::move(*slot));
  }
  return report;
}

SearchSummary summarize(const SearchReport& report) {
  SearchSummary s{report.counts, 0.0, std::nullopt, std::nullopt};
  if (report.counts.total > 0)
    s.obstructed_density =
        static_cast<double>(report.counts.obstructed) / static_cast<double>(report.counts.total);
  for (const SearchRow& row : report.rows) {
    if (!row.certificate) continue;
    if (!s.first_certified) s.first_certified = row.n;
    s.last_certified = row.n;
  }
  return s;
}

}  // namespace crosscap
