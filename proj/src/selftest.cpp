#include "crosscap/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "crosscap/report.hpp"

namespace crosscap {

namespace {

// Regression values: primes of the form 2n + 9 for n in [1, 10^4] and
// [1, 10^5], counted independently by trial division.
constexpr std::size_t kKm1PrimeCountQuick = 2258;
constexpr std::size_t kKm1PrimeCountFull = 17982;

struct Grid {
  std::int64_t km1_n_max;
  std::int64_t k4_n_abs;
  std::int64_t torus_n_max;
  std::int64_t corollary_n_max;
  int random_matrices;
  std::int64_t isqrt_max;
};

Grid grid_for(const SelftestOptions& o) {
  if (o.quick) return {100, 100, 1000, 10000, 100, 100000};
  return {1000, 1000, 10000, 100000, 1000, 1000000};
}

std::vector<std::int64_t> odd_p_values(std::int64_t min_abs, std::int64_t max_abs) {
  std::vector<std::int64_t> ps;
  for (std::int64_t p = min_abs; p <= max_abs; p += 2) {
    ps.push_back(p);
    ps.push_back(-p);
  }
  return ps;
}

bool trial_division_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

class Suite {
 public:
  explicit Suite(std::string name) : result_{std::move(name), true, {}} {}

  void check(bool ok, const std::function<std::string()>& what) {
    if (ok || !result_.passed) {
      if (!ok) ++failures_;
      return;
    }
    result_.passed = false;
    ++failures_;
    result_.detail = what();
  }

  SuiteResult finish(std::string summary) {
    if (!result_.passed) result_.detail += " (" + std::to_string(failures_) + " failures)";
    else result_.detail = std::move(summary);
    return result_;
  }

 private:
  SuiteResult result_;
  std::size_t failures_ = 0;
};

std::int64_t convention_signature(const FamilySpec& spec, const SelftestOptions& o) {
  const GoeritzPresentation g = goeritz_of(spec);
  const std::int64_t correction = g.euler / 2;
  return inertia(g.matrix).signature() + (o.flip_euler_convention ? -correction : correction);
}

SuiteResult km1_closed_forms(const Grid& grid, const SelftestOptions& o) {
  Suite s("km1 closed forms");
  std::size_t cases = 0;
  for (std::int64_t p : odd_p_values(3, 19)) {
    for (std::int64_t n = 1; n <= grid.km1_n_max; ++n, ++cases) {
      const FamilySpec spec = FamilySpec::km1(n, p);
      const std::int64_t sigma = convention_signature(spec, o);
      s.check(sigma == -2 * n && signature_of(spec) == -2 * n, [&] {
        return "sigma(" + describe(spec) + ") = " + std::to_string(sigma) + ", want " + std::to_string(-2 * n);
      });
      s.check(determinant_of(spec) == 2 * n + p * p, [&] { return "det(" + describe(spec) + ") mismatch"; });
    }
  }
  return s.finish(std::to_string(cases) + " knots");
}

SuiteResult k4_closed_forms(const Grid& grid, const SelftestOptions& o) {
  Suite s("k4 closed forms");
  std::size_t cases = 0;
  for (std::int64_t p : odd_p_values(1, 19)) {
    for (std::int64_t n = -grid.k4_n_abs; n <= grid.k4_n_abs; ++n, ++cases) {
      const FamilySpec spec = FamilySpec::k4(n, p);
      const std::int64_t d = 8 * n - p * p;
      const std::int64_t want = d > 0 ? 2 : 0;
      const std::int64_t sigma = convention_signature(spec, o);
      s.check(sigma == want && signature_of(spec) == want,
              [&] { return "sigma(" + describe(spec) + ") = " + std::to_string(sigma); });
      s.check(determinant_of(spec) == (d < 0 ? -d : d), [&] { return "det(" + describe(spec) + ") mismatch"; });
    }
  }
  return s.finish(std::to_string(cases) + " knots");
}

SuiteResult oracle_equivalence(const Grid& grid) {
  Suite s("theorem oracle equivalence");
  std::size_t cases = 0;
  auto compare = [&](const FamilySpec& spec) {
    ++cases;
    const bool satisfiable = gc1_verdict(invariants_of(spec)).status == VerdictStatus::NotObstructed;
    const std::optional<bool> literal = theorem_condition(spec);
    s.check(literal.has_value() && *literal == satisfiable,
            [&] { return "pipeline and literal condition disagree at " + describe(spec); });
  };
  for (std::int64_t p : odd_p_values(3, 19))
    for (std::int64_t n = 1; n <= grid.km1_n_max; ++n) compare(FamilySpec::km1(n, p));
  for (std::int64_t p : odd_p_values(1, 19))
    for (std::int64_t n = -grid.k4_n_abs; n <= grid.k4_n_abs; ++n) compare(FamilySpec::k4(n, p));
  return s.finish(std::to_string(cases) + " knots");
}

SuiteResult torus_consistency(const Grid& grid, const SelftestOptions& o) {
  Suite s("torus knot consistency");
  for (std::int64_t n = 1; n <= grid.torus_n_max; ++n) {
    for (std::int64_t p : {1, -1}) {
      const FamilySpec spec = FamilySpec::km1(n, p);
      const ObstructionVerdict v = gc1_verdict(invariants_of(spec));
      s.check(v.status == VerdictStatus::NotObstructed && v.witness == BigInt(2 * n + 1),
              [&] { return describe(spec) + " should be unobstructed with l = 2n+1"; });
      const FamilySpec cable = FamilySpec::cable2(2 * n + 1);
      s.check(convention_signature(spec, o) == convention_signature(cable, o) &&
                  determinant_of(spec) == determinant_of(cable),
              [&] { return describe(spec) + " and " + describe(cable) + " disagree"; });
    }
  }
  return s.finish("n <= " + std::to_string(grid.torus_n_max));
}

SuiteResult knot_7_4(const SelftestOptions& o) {
  Suite s("7_4 witness");
  const FamilySpec spec = FamilySpec::k4neg(-2, -1);
  const Classification c = classify(spec);
  s.check(pretzel_of(spec) == PretzelParams{-3, -1, -3}, [] { return "pretzel form is not P(-3,-1,-3)"; });
  s.check(c.invariants.determinant == 15, [&] { return "det = " + std::to_string(c.invariants.determinant); });
  s.check(convention_signature(spec, o) == -2, [] { return "sigma != -2"; });
  s.check(c.verdict.status == VerdictStatus::Obstructed && c.verdict.candidates.size() == 1 &&
              c.verdict.candidates[0].product == 45,
          [] { return "expected Obstructed with product 45"; });
  s.check(c.invariants.gamma4_lower == 1 && c.invariants.gamma4_upper == 1 && c.gammac_lower == 2,
          [] { return "expected gamma* = 1 < 2 <= gamma_c"; });
  return s.finish("det 15, sigma -2, 45 not a square");
}

SuiteResult k4_three_adic(const Grid& grid) {
  Suite s("k4 three-adic corollary");
  const SearchReport r = sweep({Family::K4, 1, 1, grid.corollary_n_max, false});
  std::size_t certified = 0;
  for (const SearchRow& row : r.rows) {
    const bool multiple_of_three = row.n % 3 == 0;
    s.check(row.certificate.has_value() == multiple_of_three,
            [&] { return "certificate mismatch at n = " + std::to_string(row.n); });
    if (row.certificate) {
      ++certified;
      s.check(row.classification.verdict.status == VerdictStatus::Obstructed,
              [&] { return "certified but not obstructed at n = " + std::to_string(row.n); });
    }
  }
  const std::size_t want = static_cast<std::size_t>(grid.corollary_n_max / 3);
  s.check(certified == want, [&] { return "certified " + std::to_string(certified) + ", want " + std::to_string(want); });
  return s.finish(std::to_string(certified) + " certified");
}

SuiteResult km1_prime(const Grid& grid, const SelftestOptions& o) {
  Suite s("km1 prime corollary");
  const SearchReport r = sweep({Family::Km1, 3, 1, grid.corollary_n_max, false});
  std::size_t certified = 0;
  for (const SearchRow& row : r.rows) {
    const bool prime = trial_division_prime(2 * row.n + 9);
    s.check(row.certificate.has_value() == prime,
            [&] { return "certificate mismatch at n = " + std::to_string(row.n); });
    if (row.certificate) {
      ++certified;
      s.check(row.classification.verdict.status == VerdictStatus::Obstructed,
              [&] { return "certified but not obstructed at n = " + std::to_string(row.n); });
    }
  }
  const std::size_t want = o.quick ? kKm1PrimeCountQuick : kKm1PrimeCountFull;
  s.check(certified == want, [&] { return "certified " + std::to_string(certified) + ", want " + std::to_string(want); });
  return s.finish(std::to_string(certified) + " certified");
}

SuiteResult exactmath_oracles(const Grid& grid) {
  Suite s("exactmath oracles");
  std::mt19937_64 rng(20061);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<std::int64_t> entry_dist(-20, 20);
  for (int t = 0; t < grid.random_matrices; ++t) {
    const int dim = dim_dist(rng);
    Matrix<std::int64_t> m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = entry_dist(rng);
    const SymMatrix<std::int64_t> sym(m);
    const InertiaTriple a = inertia(sym);
    const InertiaTriple b = inertia_charpoly(sym);
    s.check(a == b, [&] { return "inertia routines disagree on random matrix #" + std::to_string(t); });
  }
  for (std::int64_t m = 0; m <= grid.isqrt_max; ++m) {
    const std::int64_t r = isqrt(m);
    s.check(r * r <= m && (r + 1) * (r + 1) > m, [&] { return "isqrt(" + std::to_string(m) + ") wrong"; });
  }
  return s.finish(std::to_string(grid.random_matrices) + " matrices, isqrt to " + std::to_string(grid.isqrt_max));
}

SuiteResult determinism(const Grid& grid) {
  Suite s("sweep determinism");
  const SearchQuery q{Family::K4, 1, 1, grid.corollary_n_max, false};
  const std::string reference = render_csv(sweep(q, 1));
  for (unsigned jobs : {4u, 8u})
    s.check(render_csv(sweep(q, jobs)) == reference,
            [&] { return "CSV differs with " + std::to_string(jobs) + " jobs"; });
  return s.finish("jobs 1, 4, 8 identical");
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  const Grid grid = grid_for(options);
  std::vector<SuiteResult> results;
  auto guarded = [&](const std::string& name, const std::function<SuiteResult()>& body) {
    try {
      results.push_back(body());
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("exception: ") + e.what()});
    }
  };
  guarded("km1 closed forms", [&] { return km1_closed_forms(grid, options); });
  guarded("k4 closed forms", [&] { return k4_closed_forms(grid, options); });
  guarded("theorem oracle equivalence", [&] { return oracle_equivalence(grid); });
  guarded("torus knot consistency", [&] { return torus_consistency(grid, options); });
  guarded("7_4 witness", [&] { return knot_7_4(options); });
  guarded("k4 three-adic corollary", [&] { return k4_three_adic(grid); });
  guarded("km1 prime corollary", [&] { return km1_prime(grid, options); });
  guarded("exactmath oracles", [&] { return exactmath_oracles(grid); });
  guarded("sweep determinism", [&] { return determinism(grid); });
  return results;
}

bool report_selftest(const std::vector<SuiteResult>& results, std::ostream& out) {
  std::size_t passed = 0;
  for (const SuiteResult& r : results) {
    out << (r.passed ? "[pass] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    passed += r.passed;
  }
  out << passed << '/' << results.size() << " suites pass\n";
  return passed == results.size();
}

}  // namespace crosscap
