#ifndef RATCURVE_OUTPUT_DOCUMENT_HPP
#define RATCURVE_OUTPUT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ratcurve {

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Tabular result of one CLI command. Every numeric cell is a decimal integer
// string or a reduced "p/q" string; an empty optional is an absent value.
struct OutputDocument {
  using Cell = std::optional<std::string>;

  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> warnings;
  std::vector<Verdict> verdicts;

  bool all_passed() const;
};

enum class Format { kText, kJson, kCsv };

// "text", "json" or "csv". Throws std::invalid_argument otherwise.
Format parse_format(std::string_view name);

// JSON: {command, parameters, rows[], warnings[], verdicts[]} where each row
// is an object keyed by column name and absent cells are null.
std::string render_json(const OutputDocument& doc);
// Header line plus one line per row; absent cells print "*". Warnings and
// verdicts follow as '#' comment lines.
std::string render_csv(const OutputDocument& doc);
// Aligned columns, then warnings and PASS/FAIL lines.
std::string render_text(const OutputDocument& doc);

std::string render(const OutputDocument& doc, Format format);

}  // namespace ratcurve

#endif  // RATCURVE_OUTPUT_DOCUMENT_HPP
