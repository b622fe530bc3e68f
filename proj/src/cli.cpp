#include "crosscap/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "crosscap/report.hpp"
#include "crosscap/selftest.hpp"

namespace crosscap {

namespace {

enum class Format { Text, Csv, Json };

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Family family_or_throw(const std::string& name) {
  const std::optional<Family> f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "'");
  return *f;
}

/// Writes to `path` via a sibling temporary so a failed run leaves nothing
/// behind.
void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    os << contents;
    os.close();
    if (!os) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

struct ClassifyArgs {
  std::string family;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  Format format = Format::Text;
};

struct SearchArgs {
  std::string family;
  std::int64_t p = 0;
  std::int64_t n_min = 0;
  std::int64_t n_max = 0;
  bool certify_only = false;
  Format format = Format::Csv;
  std::string out_path;
  unsigned jobs = 0;
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  const Family family = family_or_throw(a.family);
  FamilySpec spec = FamilySpec::cable2(1);
  if (family == Family::Cable2) {
    if (!a.q) throw UsageError("cable2 requires -q");
    if (a.p) throw UsageError("cable2 takes -q, not -p");
    spec = FamilySpec::make(family, a.n.value_or(0), *a.q);
  } else {
    if (!a.n || !a.p) throw UsageError(std::string(to_string(family)) + " requires -n and -p");
    if (a.q) throw UsageError("-q applies only to cable2");
    spec = FamilySpec::make(family, *a.n, *a.p);
  }
  const Classification c = classify(spec);
  const std::optional<Certificate> cert = certificate_for(spec);
  switch (a.format) {
    case Format::Text: out << render_text(c, cert); break;
    case Format::Csv: out << kCsvHeader << '\n' << to_csv_row(to_record(c, cert)) << '\n'; break;
    case Format::Json: out << to_json(to_record(c, cert)) << '\n'; break;
  }
  return kExitOk;
}

int do_search(const SearchArgs& a, std::ostream& out) {
  const SearchQuery query{family_or_throw(a.family), a.p, a.n_min, a.n_max, a.certify_only};
  validate(query);
  const SearchReport report = sweep(query, a.jobs);
  std::string rendered;
  switch (a.format) {
    case Format::Text: rendered = render_text(report); break;
    case Format::Csv: rendered = render_csv(report); break;
    case Format::Json: rendered = render_json(report); break;
  }
  if (a.out_path.empty())
    out << rendered;
  else
    write_atomically(a.out_path, rendered);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signatures, determinants and concordance crosscap obstructions for pretzel knot families",
               "crosscap"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a single knot");
  classify_cmd->add_option("--family", classify_args.family, "k4 | k4neg | km1 | cable2")->required();
  classify_cmd->add_option("-n", classify_args.n, "full-twist count");
  classify_cmd->add_option("-p", classify_args.p, "odd tangle parameter");
  classify_cmd->add_option("-q", classify_args.q, "odd cable parameter (cable2)");
  classify_cmd->add_option("--format", classify_args.format, "text | csv | json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Sweep n for a fixed family and p");
  search_cmd->add_option("--family", search_args.family, "k4 | k4neg | km1")->required();
  search_cmd->add_option("-p", search_args.p, "odd tangle parameter")->required();
  search_cmd->add_option("--n-min", search_args.n_min, "first n")->required();
  search_cmd->add_option("--n-max", search_args.n_max, "last n")->required();
  search_cmd->add_flag("--certify-only", search_args.certify_only, "emit certified rows only");
  search_cmd->add_option("--format", search_args.format, "csv | json | text")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  search_cmd->add_option("--out", search_args.out_path, "output file (default stdout)");
  search_cmd->add_option("--jobs", search_args.jobs, "worker threads; does not affect output");

  SelftestOptions selftest_options;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the embedded verification suites");
  selftest_cmd->add_flag("--quick", selftest_options.quick, "shrink every grid tenfold");
  selftest_cmd->add_flag("--inject-flip", selftest_options.flip_euler_convention)
      ->group("");  // test hook, hidden from help

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return do_classify(classify_args, out);
    if (search_cmd->parsed()) return do_search(search_args, out);
    if (selftest_cmd->parsed()) {
      const bool ok = report_selftest(run_selftest(selftest_options), out);
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace crosscap
