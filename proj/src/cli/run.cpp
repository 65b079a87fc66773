#include <CLI11.hpp>
#include <ostream>

#include "gmlat/cli.hpp"

namespace gmlat::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice checks for Gushel-Mukai fourfolds and Fourier-Mukai counting tables", "gmlat"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_csv = false;
  std::size_t max_candidates = kDefaultMaxCandidates;
  auto* json_opt = app.add_flag("--json", as_json, "Print the report as JSON");
  app.add_flag("--csv", as_csv, "Print tabular results as CSV")->excludes(json_opt);
  app.add_option("--max-candidates", max_candidates, "Cap on enumerated short vectors")->check(CLI::PositiveNumber);

  std::int64_t d = 0;
  int variant = 0;
  auto* disc = app.add_subcommand("disc", "Gram matrix, discriminant group and G'(L_d) for one d");
  disc->add_option("d", d, "Discriminant (0, 2 or 4 mod 8)")->required();
  disc->add_option("--variant", variant, "Embedding variant for d = 2 mod 8")->check(CLI::IsMember({1, 2}));

  auto* count = app.add_subcommand("count", "Untwisted Fourier-Mukai partner and fiber counts");
  count->add_option("d", d, "Discriminant satisfying (**), d > 8")->required();

  std::int64_t d_prime = 0;
  bool include_r1 = false;
  auto* twisted = app.add_subcommand("twisted", "Decompositions d' = d*r^2 and twisted counts");
  twisted->add_option("d_prime", d_prime, "Discriminant d'")->required();
  twisted->add_flag("--include-r1", include_r1, "Also list the untwisted r = 1 decomposition");

  std::int64_t start = 0;
  std::int64_t end = 0;
  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over a range of d");
  verify->add_option("start", start, "First d")->required();
  verify->add_option("end", end, "Last d")->required();
  verify->add_option("suite", suite, "disc-structure | marking-group | glue-extension | k3-association | "
                                     "surjectivity | mukai")
      ->required();

  for (auto* sub : {disc, count, twisted, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const EnumerationOptions opts{max_candidates};
  Outcome outcome;
  if (*disc)
    outcome = cmd_disc(d, variant == 0 ? std::nullopt : std::optional<int>(variant), opts);
  else if (*count)
    outcome = cmd_count(d);
  else if (*twisted)
    outcome = cmd_twisted(d_prime, include_r1);
  else
    outcome = cmd_verify(start, end, suite, opts);

  const Format format = as_json ? Format::json : as_csv ? Format::csv : Format::text;
  out << render(outcome.report, format);
  if (format != Format::json && outcome.report.status != "ok") err << "error: " << outcome.report.message << "\n";
  return outcome.exit_code;
}

}  // namespace gmlat::cli
