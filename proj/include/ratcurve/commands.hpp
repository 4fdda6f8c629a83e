#ifndef RATCURVE_COMMANDS_HPP
#define RATCURVE_COMMANDS_HPP

// The four CLI commands as library functions. Each returns an OutputDocument;
// rendering and exit codes are the caller's business.

#include "ratcurve/canonical_class.hpp"
#include "ratcurve/output_document.hpp"

#include <array>
#include <stdexcept>
#include <string_view>

namespace ratcurve {

// Largest degree accepted by the commands.
inline constexpr int kMaxDegree = 200;

// Bad command parameters (exit code 2 at the CLI).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Published values for degrees 1..8. For d < 3, M is "*".
struct ReferenceRow {
  std::string_view N;
  std::string_view g;
  std::string_view g_hat;
  std::string_view g_tilde;
  std::string_view M;
};
extern const std::array<ReferenceRow, 8> kReferenceTable;

OutputDocument run_counts(int dmax);
OutputDocument run_genus(int dmax);
OutputDocument run_canonical(const ModuliSignature& sig);

struct VerifyOptions {
  int dmax = 8;
  // Canonical-class grid: n in 0..grid_n, r in 2..grid_r, d in 1..grid_d.
  int grid_n = 8;
  int grid_r = 5;
  int grid_d = 6;
};

// Runs every consistency check; the M_d closed-form ratio is reported as rows
// and never contributes a verdict.
OutputDocument run_verify(const VerifyOptions& options);

std::string_view note_text(ExpansionNote note);

}  // namespace ratcurve

#endif  // RATCURVE_COMMANDS_HPP
