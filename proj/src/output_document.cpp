#include "ratcurve/output_document.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ratcurve {

namespace {

constexpr std::string_view kAbsent = "*";

std::string cell_text(const OutputDocument::Cell& cell) {
  return cell ? *cell : std::string(kAbsent);
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

bool OutputDocument::all_passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed; });
}

Format parse_format(std::string_view name) {
  if (name == "text") return Format::kText;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw std::invalid_argument("unknown format '" + std::string(name) +
                              "' (expected text, json or csv)");
}

std::string render_json(const OutputDocument& doc) {
  // ordered_json keeps keys in insertion order so output follows column order.
  using nlohmann::ordered_json;
  ordered_json out;
  out["command"] = doc.command;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : doc.parameters) params[key] = value;
  out["parameters"] = std::move(params);

  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
      const auto& cell = c < row.size() ? row[c] : OutputDocument::Cell{};
      obj[doc.columns[c]] = cell ? ordered_json(*cell) : ordered_json(nullptr);
    }
    rows.push_back(std::move(obj));
  }
  out["rows"] = std::move(rows);
  out["warnings"] = doc.warnings;

  ordered_json verdicts = ordered_json::array();
  for (const auto& v : doc.verdicts) {
    verdicts.push_back({{"name", v.name}, {"passed", v.passed}, {"detail", v.detail}});
  }
  out["verdicts"] = std::move(verdicts);
  return out.dump(2) + "\n";
}

std::string render_csv(const OutputDocument& doc) {
  std::ostringstream os;
  for (std::size_t c = 0; c < doc.columns.size(); ++c) {
    os << (c ? "," : "") << csv_field(doc.columns[c]);
  }
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
      os << (c ? "," : "") << csv_field(cell_text(c < row.size() ? row[c] : std::nullopt));
    }
    os << '\n';
  }
  for (const auto& w : doc.warnings) os << "# warning: " << w << '\n';
  for (const auto& v : doc.verdicts) {
    os << "# " << (v.passed ? "PASS" : "FAIL") << ' ' << v.name << ": " << v.detail << '\n';
  }
  return os.str();
}

std::string render_text(const OutputDocument& doc) {
  std::ostringstream os;
  if (!doc.columns.empty()) {
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t c = 0; c < doc.columns.size(); ++c) {
      width[c] = doc.columns[c].size();
      for (const auto& row : doc.rows) {
        if (c < row.size()) width[c] = std::max(width[c], cell_text(row[c]).size());
      }
    }
    auto emit = [&](auto&& text_of) {
      std::string line;
      for (std::size_t c = 0; c < doc.columns.size(); ++c) {
        std::string text = text_of(c);
        if (c + 1 < doc.columns.size()) text.resize(width[c] + 2, ' ');
        line += text;
      }
      os << line << '\n';
    };
    emit([&](std::size_t c) { return doc.columns[c]; });
    for (const auto& row : doc.rows) {
      emit([&](std::size_t c) {
        return cell_text(c < row.size() ? row[c] : std::nullopt);
      });
    }
  }
  for (const auto& w : doc.warnings) os << "warning: " << w << '\n';
  for (const auto& v : doc.verdicts) {
    os << (v.passed ? "PASS " : "FAIL ") << v.name;
    if (!v.detail.empty()) os << "  (" << v.detail << ')';
    os << '\n';
  }
  return os.str();
}

std::string render(const OutputDocument& doc, Format format) {
  switch (format) {
    case Format::kJson:
      return render_json(doc);
    case Format::kCsv:
      return render_csv(doc);
    case Format::kText:
      break;
  }
  return render_text(doc);
}

}  // namespace ratcurve
