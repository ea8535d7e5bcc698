#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "texturematrix/corpus.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {
namespace {

// RFC 4180 subset: comma separated, double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back().push_back('"');
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  if (quoted) throw FormatError(fmt::format("line {}: unterminated quoted field", line_no));
  return fields;
}

std::string quote_if_needed(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

double parse_number(const std::string& text, std::string_view column, std::size_t line_no) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw FormatError(fmt::format("line {}: column '{}' is not a number: '{}'", line_no, column, text));
  }
  return value;
}

int decimals_for(std::string_view column) {
  if (column == "contrast" || column == "dissimilarity" || column == "entropy" || column == "mean" ||
      column == "std_dev") {
    return kWideDecimals;
  }
  return kUnitDecimals;
}

}  // namespace

CorpusTable read_corpus_csv(std::istream& in, std::string provenance) {
  CorpusTable table;
  table.provenance = std::move(provenance);

  std::string line;
  std::size_t line_no = 0;
  std::map<std::string, std::size_t> index;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto header = split_csv_line(line, line_no);
    for (std::size_t k = 0; k < header.size(); ++k) index[header[k]] = k;
    break;
  }
  for (std::string_view column : kCorpusColumns) {
    if (!index.contains(std::string(column))) {
      throw FormatError(fmt::format("corpus CSV is missing column '{}'", column));
    }
  }
  const auto flags_column = index.find("flags");

  std::set<std::pair<SymmetricAxis, std::string>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_csv_line(line, line_no);
    auto field = [&](std::string_view column) -> const std::string& {
      const std::size_t k = index.at(std::string(column));
      if (k >= fields.size()) {
        throw FormatError(fmt::format("line {}: missing value for '{}'", line_no, column));
      }
      return fields[k];
    };
    auto number = [&](std::string_view column) { return parse_number(field(column), column, line_no); };

    StatRecord r;
    r.image_label = field("image");
    const auto axis = parse_axis(field("axis"));
    if (!axis) throw FormatError(fmt::format("line {}: unknown axis '{}'", line_no, field("axis")));
    r.axis = *axis;
    r.stats.axis = *axis;
    r.stats.contrast = number("contrast");
    r.stats.dissimilarity = number("dissimilarity");
    r.stats.homogeneity = number("homogeneity");
    r.stats.angular_second_moment = number("asm");
    r.stats.entropy = number("entropy");
    r.stats.mean = number("mean");
    r.stats.energy = number("energy");
    r.stats.std_dev = number("std_dev");
    r.stats.correlation = number("correlation");
    r.stats.max_probability = number("max_probability");
    r.prob_diff_0_19 = number("prob_diff_0_19");
    if (flags_column != index.end() && flags_column->second < fields.size()) {
      r.stats.degenerate = fields[flags_column->second].find("degenerate") != std::string::npos;
    }
    if (!seen.insert({r.axis, r.image_label}).second) {
      throw ContractError(fmt::format("line {}: duplicate label '{}' for axis {}", line_no,
                                      r.image_label, to_string(r.axis)));
    }
    table.records.push_back(std::move(r));
  }
  return table;
}

CorpusTable read_corpus_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path.string()));
  return read_corpus_csv(in, "fixture:" + path.stem().string());
}

void write_corpus_csv_header(std::ostream& out) {
  for (std::string_view column : kCorpusColumns) out << column << ',';
  out << "flags\n";
}

void write_corpus_csv_row(std::ostream& out, const StatRecord& record) {
  out << quote_if_needed(record.image_label) << ',' << to_string(record.axis);
  for (std::size_t k = 2; k < kCorpusColumns.size(); ++k) {
    const std::string_view column = kCorpusColumns[k];
    out << ',' << format_fixed(statistic_value(record, column), decimals_for(column));
  }
  out << ',' << (record.stats.degenerate ? "degenerate" : "") << '\n';
}

void write_corpus_csv(std::ostream& out, const CorpusTable& table) {
  write_corpus_csv_header(out);
  for (const StatRecord& r : table.records) write_corpus_csv_row(out, r);
}

}  // namespace texturematrix
