// ratcurve: counts, genera and canonical classes for rational plane curves.
//
//   ratcurve counts --max D [--format text|json|csv]
//   ratcurve genus --max D [--format text|json|csv]
//   ratcurve canonical --n N --r R --d D [--format text|json|csv]
//   ratcurve verify [--max D] [--format ...]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ratcurve/commands.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumerative invariants of rational plane curves"};
  app.require_subcommand(1);

  std::string format = "text";
  int dmax = 0;

  auto* counts = app.add_subcommand("counts", "N_d for d = 1..max");
  counts->add_option("--max", dmax, "Largest degree")->required();
  add_format_option(counts, format);

  auto* genus = app.add_subcommand("genus", "Genus table for d = 1..max");
  genus->add_option("--max", dmax, "Largest degree")->required();
  add_format_option(genus, format);

  ratcurve::ModuliSignature sig;
  auto* canonical = app.add_subcommand("canonical", "Canonical class of M_{0,n}(P^r,d)");
  canonical->add_option("--n", sig.n, "Number of marked points")->required();
  canonical->add_option("--r", sig.r, "Target dimension")->required();
  canonical->add_option("--d", sig.d, "Map degree")->required();
  add_format_option(canonical, format);

  ratcurve::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Run every consistency check");
  verify->add_option("--max", verify_opts.dmax, "Largest degree")->capture_default_str();
  verify->add_option("--grid-n", verify_opts.grid_n, "Largest n in the canonical-class grid")
      ->capture_default_str();
  verify->add_option("--grid-r", verify_opts.grid_r, "Largest r in the canonical-class grid")
      ->capture_default_str();
  verify->add_option("--grid-d", verify_opts.grid_d, "Largest d in the canonical-class grid")
      ->capture_default_str();
  add_format_option(verify, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    ratcurve::OutputDocument doc;
    if (*counts) {
      doc = ratcurve::run_counts(dmax);
    } else if (*genus) {
      doc = ratcurve::run_genus(dmax);
    } else if (*canonical) {
      doc = ratcurve::run_canonical(sig);
    } else {
      doc = ratcurve::run_verify(verify_opts);
    }
    std::cout << ratcurve::render(doc, ratcurve::parse_format(format));
    return doc.all_passed() ? 0 : kExitFailure;
  } catch (const ratcurve::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
