// Command-line front end: certify, search, verify-table, lemma-check, density.
//
// Exit codes: 0 ran to completion, 1 usage or input error, 2 a mathematical
// contradiction (failed identity, or a family member with nonzero 2-Selmer rank).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selmer/batch.hpp"
#include "selmer/density.hpp"
#include "selmer/errors.hpp"
#include "selmer/families.hpp"
#include "selmer/io.hpp"
#include "selmer/structured.hpp"
#include "selmer/table.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kContradiction = 2;

// stdout unless a path was given.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw selmer::InvalidArgument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CertifyArgs {
  std::vector<std::string> values;
  std::string file;
  std::string format = "json";
  std::string output;
  unsigned workers = 1;
};

struct SearchArgs {
  std::string theorem;
  int t = 1;
  int alpha = 1;
  int mu = 1;
  int mu1 = 1;
  int mu2 = 1;
  std::string case533;
  std::string reading = "conservative";
  std::uint64_t bound = 0;
  std::size_t limit = 0;  // 0 = no limit
  bool validate = false;
  std::string format = "json";
  std::string output;
  unsigned workers = 1;
};

struct LemmaArgs {
  long long t_min = 1;
  long long t_max = 64;
};

struct DensityArgs {
  std::uint64_t x = 0;
  unsigned k = 0;
  SearchArgs family;
  unsigned workers = 1;
};

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

int run_certify(const CertifyArgs& args) {
  std::vector<std::string> inputs = args.values;
  if (!args.file.empty()) {
    std::vector<std::string> lines;
    if (args.file == "-") {
      lines = read_lines(std::cin);
    } else {
      std::ifstream in(args.file);
      if (!in) throw selmer::InvalidArgument("cannot read " + args.file);
      lines = read_lines(in);
    }
    inputs.insert(inputs.end(), lines.begin(), lines.end());
  }
  if (inputs.empty()) throw selmer::InvalidArgument("certify: no inputs given");

  const selmer::BatchResult batch = selmer::certify_batch(inputs, args.workers);
  Output out(args.output);
  for (const std::string& line : batch.lines) {
    if (args.format == "json") {
      out.stream() << line << '\n';
      continue;
    }
    const auto j = selmer::Json::parse(line);
    if (j.contains("error")) {
      out.stream() << j["input"].get<std::string>() << ": error: " << j["error"].get<std::string>() << '\n';
    } else {
      out.stream() << j["n"] << ": " << j["kind"].get<std::string>() << " rank=" << j["rank"]
                   << " s=" << j["selmer_rank"]
                   << (j["certified_noncongruent"].get<bool>() ? " certified non-congruent" : " not certified")
                   << '\n';
    }
  }
  return batch.errors == 0 ? kOk : kUsage;
}

selmer::FamilySpec spec_from(const SearchArgs& a) {
  selmer::FamilySpec spec;
  spec.theorem = selmer::parse_theorem(a.theorem);
  spec.t = a.t;
  spec.alpha = a.alpha;
  spec.mu = a.mu;
  spec.mu1 = a.mu1;
  spec.mu2 = a.mu2;
  if (!a.case533.empty()) spec.case533 = selmer::parse_case(a.case533);
  spec.reading = a.reading == "strict" ? selmer::Reading533::Strict : selmer::Reading533::Conservative;
  spec.validate();
  return spec;
}

int run_search(const SearchArgs& args) {
  const selmer::FamilySpec spec = spec_from(args);
  selmer::SearchOptions options;
  options.prime_bound = args.bound;
  if (args.limit > 0) options.limit = args.limit;
  options.workers = args.workers;
  const auto hits = selmer::search(spec, options);

  Output out(args.output);
  if (args.format == "csv") out.stream() << selmer::search_csv_header() << '\n';
  int status = kOk;
  for (const auto& tuple : hits) {
    const std::uint64_t n = selmer::assemble_n(spec, tuple);
    std::optional<selmer::Certificate> cert;
    if (args.validate) {
      try {
        cert = selmer::cross_validate(spec, tuple);
      } catch (const selmer::Contradiction& e) {
        std::cerr << e.what() << '\n';
        status = kContradiction;
      }
    }
    const selmer::Certificate* c = cert ? &*cert : nullptr;
    if (args.format == "csv") {
      out.stream() << selmer::search_csv_row(spec, tuple, n, c) << '\n';
    } else {
      out.stream() << selmer::search_hit_json(spec, tuple, n, c).dump() << '\n';
    }
  }
  return status;
}

int run_verify_table(const std::string& format) {
  const auto results = selmer::verify_table();
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed()) ++passed;
    if (format == "json") {
      selmer::Json j;
      j["row"] = r.label;
      j["n"] = r.n;
      j["selmer_rank"] = r.selmer_rank;
      j["passed"] = r.passed();
      if (!r.error.empty()) j["error"] = r.error;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(40) << r.label
                << " n=" << std::setw(18) << r.n << " s=" << r.selmer_rank
                << (r.error.empty() ? "" : "  error: " + r.error) << '\n';
    }
  }
  if (format != "json") std::cout << passed << "/" << results.size() << " rows pass\n";
  return passed == results.size() ? kOk : kContradiction;
}

int run_lemma_check(const LemmaArgs& args) {
  if (args.t_min < 1 || args.t_max < args.t_min) throw selmer::InvalidArgument("need 1 <= t-min <= t-max");
  struct Tally {
    std::string identity;
    std::string variant;
    std::size_t asserted = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
  };
  std::vector<Tally> tallies;
  std::vector<std::string> failures;
  for (long long t = args.t_min; t <= args.t_max; ++t) {
    const selmer::LemmaReport report = selmer::verify_lemma_identities(t);
    if (tallies.empty()) {
      for (const auto& c : report.checks) tallies.push_back({c.identity, c.variant});
    }
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      const auto& c = report.checks[i];
      if (!c.asserted) {
        ++tallies[i].skipped;
        continue;
      }
      ++tallies[i].asserted;
      if (!c.passed) {
        ++tallies[i].failed;
        std::string where;
        if (c.counterexample) {
          where = " at (" + std::to_string(c.counterexample->first + 1) + ", " +
                  std::to_string(c.counterexample->second + 1) + ")";
        }
        failures.push_back("t=" + std::to_string(t) + " " + c.identity + " [" + c.variant + "]" + where);
      }
    }
  }
  std::cout << std::left << std::setw(46) << "identity" << std::setw(4) << "T" << std::setw(10)
            << "checked" << std::setw(10) << "skipped" << "result\n";
  for (const auto& t : tallies) {
    std::cout << std::setw(46) << t.identity << std::setw(4) << t.variant << std::setw(10) << t.asserted
              << std::setw(10) << t.skipped << (t.failed == 0 ? "pass" : "FAIL") << '\n';
  }
  for (const auto& f : failures) std::cout << "failure: " << f << '\n';
  return failures.empty() ? kOk : kContradiction;
}

int run_density(const DensityArgs& args) {
  selmer::DensityReport report;
  if (args.k > 0) {
    report = selmer::k_prime_density(args.x, args.k);
  } else if (!args.family.theorem.empty()) {
    report = selmer::family_density(args.x, spec_from(args.family), args.workers);
  } else {
    throw selmer::InvalidArgument("density: give --k or --theorem");
  }
  std::cout << selmer::to_json(report).dump() << '\n';
  std::cerr << "x=" << report.x << " " << report.subject << ": count=" << report.exact_count;
  if (report.asymptotic_value) {
    std::cerr << " asymptotic=" << *report.asymptotic_value << " ratio=" << *report.ratio;
  } else {
    std::cerr << " (no asymptotic constant)";
  }
  std::cerr << '\n';
  return kOk;
}

void add_family_options(CLI::App* cmd, SearchArgs& a) {
  cmd->add_option("--t", a.t, "Number of prime groups");
  cmd->add_option("--alpha", a.alpha, "alpha in {-1, 1}");
  cmd->add_option("--mu", a.mu, "mu in {-1, 1}");
  cmd->add_option("--mu1", a.mu1, "mu1 in {-1, 1}");
  cmd->add_option("--mu2", a.mu2, "mu2 in {-1, 1}");
  cmd->add_option("--case", a.case533, "533 sub-case: A(i), A(ii), B(i), B(ii)");
  cmd->add_option("--reading", a.reading, "533 (ii) clause reading")
      ->check(CLI::IsMember({"conservative", "strict"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify non-congruent numbers through 2-Selmer ranks of Monsky matrices"};
  app.set_config("--config", "", "Read key=value options from a file (flags override)");
  app.require_subcommand(1);

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Certify square-free integers (one JSON object per input)");
  certify->add_option("values", certify_args.values, "Integers to certify");
  certify->add_option("--file", certify_args.file, "File with one integer per line ('-' for stdin)");
  certify->add_option("--format", certify_args.format)->check(CLI::IsMember({"json", "text"}));
  certify->add_option("--output,-o", certify_args.output, "Output path (default stdout)");
  certify->add_option("--workers", certify_args.workers, "Worker threads")
      ->envname("SELMER_WORKERS")
      ->check(CLI::PositiveNumber);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Search bounded prime ranges for family members");
  search->add_option("--theorem", search_args.theorem, "157, 355, 377, 533, 1357 or 2x1357")->required();
  add_family_options(search, search_args);
  search->add_option("--bound", search_args.bound, "Largest prime considered")->required();
  search->add_option("--limit", search_args.limit, "Stop after this many hits (0 = all)");
  search->add_flag("--validate", search_args.validate, "Certify each hit");
  search->add_option("--format", search_args.format)->check(CLI::IsMember({"json", "csv"}));
  search->add_option("--output,-o", search_args.output, "Output path (default stdout)");
  search->add_option("--workers", search_args.workers, "Worker threads")
      ->envname("SELMER_WORKERS")
      ->check(CLI::PositiveNumber);

  std::string table_format = "text";
  auto* table = app.add_subcommand("verify-table", "Re-check the built-in published examples");
  table->add_option("--format", table_format)->check(CLI::IsMember({"text", "json"}));

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma-check", "Verify the structured-matrix identities for a range of sizes");
  lemma->add_option("--t-min", lemma_args.t_min);
  lemma->add_option("--t-max", lemma_args.t_max);

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "Compare exact counts with asymptotic densities");
  density->add_option("--x", density_args.x, "Threshold")->required();
  auto* k_opt = density->add_option("--k", density_args.k, "Distinct prime factors");
  auto* th_opt = density->add_option("--theorem", density_args.family.theorem, "Family to count");
  k_opt->excludes(th_opt);
  add_family_options(density, density_args.family);
  density->add_option("--workers", density_args.workers, "Worker threads")
      ->envname("SELMER_WORKERS")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (certify->parsed()) return run_certify(certify_args);
    if (search->parsed()) return run_search(search_args);
    if (table->parsed()) return run_verify_table(table_format);
    if (lemma->parsed()) return run_lemma_check(lemma_args);
    if (density->parsed()) return run_density(density_args);
  } catch (const selmer::Contradiction& e) {
    std::cerr << "contradiction: " << e.what() << '\n';
    return kContradiction;
  } catch (const selmer::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
