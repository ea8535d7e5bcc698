#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "report.hpp"
#include "texturematrix/corpus.hpp"
#include "texturematrix/errors.hpp"
#include "texturematrix/gldv.hpp"

namespace texturematrix::cli {
namespace {

constexpr const char* kAxisHelp =
    "Axis names: h|horizontal (E+W), v|vertical (S+N), d|diagonal (SE+NW), diagonal-anti (NE+SW), "
    "all (horizontal, vertical, diagonal). \"diagonal\" always means the SE+NW diagonal; the NE+SW "
    "diagonal generally gives a different matrix and must be requested as diagonal-anti.";

const std::vector<std::string> kAxisNames = {"h", "horizontal", "v", "vertical", "d",
                                              "diagonal", "diagonal-anti", "all"};
const std::vector<std::string> kDirectionNames = {"e", "ne", "n", "nw", "w", "sw", "s", "se"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string image;
  std::vector<std::string> inputs;
  std::vector<std::string> axes;
  std::string direction;
  std::string format = "json";
  std::string what;
  std::string out_path;
  std::string scheme = "pooled";
  std::size_t workers = 1;
  bool luma = false;
  bool display_precision = false;
};

std::vector<SymmetricAxis> resolve_axes(const std::vector<std::string>& names,
                                        std::span<const SymmetricAxis> fallback) {
  std::vector<SymmetricAxis> axes;
  auto add = [&](SymmetricAxis a) {
    if (std::find(axes.begin(), axes.end(), a) == axes.end()) axes.push_back(a);
  };
  if (names.empty()) {
    for (SymmetricAxis a : fallback) add(a);
  }
  for (const std::string& name : names) {
    if (name == "all") {
      for (SymmetricAxis a : kReportAxes) add(a);
    } else if (const auto a = parse_axis(name)) {
      add(*a);
    } else {
      throw UsageError(fmt::format("unknown axis '{}'", name));
    }
  }
  return axes;
}

SymmetricAxis single_axis(const std::vector<std::string>& names) {
  const SymmetricAxis fallback[] = {SymmetricAxis::Horizontal};
  const auto axes = resolve_axes(names, fallback);
  if (axes.size() != 1) throw UsageError("this command takes exactly one axis");
  return axes.front();
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw IoError(fmt::format("cannot write '{}'", out_path));
  file << content;
  if (!file) throw IoError(fmt::format("write error on '{}'", out_path));
}

PixelGrid load_input(const Options& opt) {
  PixelGrid image = load_image(opt.image);
  return opt.luma ? to_luma(image) : image;
}

std::string label_of(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  if (opt.format != "json" && opt.format != "csv") {
    throw UsageError(fmt::format("unknown format '{}'", opt.format));
  }
  const auto axes = resolve_axes(opt.axes, kReportAxes);
  const ReportDocument doc = build_report(load_input(opt), label_of(opt.image), axes, opt.luma);
  if (opt.format == "json") {
    emit(render_report_json(doc, opt.display_precision), opt.out_path, out);
  } else {
    std::ostringstream csv;
    write_report_csv(csv, doc);
    emit(csv.str(), opt.out_path, out);
  }
  return kExitOk;
}

bool has_image_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm" || ext == ".png";
}

// Directories contribute their image files (sorted); image files stand for
// themselves; any other file is read as a list of paths, one per line,
// relative to the list's directory.
std::vector<std::filesystem::path> resolve_inputs(const std::vector<std::string>& inputs) {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const std::string& input : inputs) {
    const fs::path p(input);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && has_image_extension(entry.path())) found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      paths.insert(paths.end(), found.begin(), found.end());
    } else if (has_image_extension(p)) {
      paths.push_back(p);
    } else {
      std::ifstream list(p);
      if (!list) throw IoError(fmt::format("cannot open '{}'", input));
      std::string line;
      while (std::getline(list, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        const fs::path entry(line);
        paths.push_back(entry.is_absolute() ? entry : p.parent_path() / entry);
      }
    }
  }
  return paths;
}

int cmd_batch(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto paths = resolve_inputs(opt.inputs);
  CorpusOptions options;
  options.workers = opt.workers;
  options.abort_on_load_error = false;
  options.luma = opt.luma;
  const CorpusTable table = analyze_corpus(paths, options);

  std::ostringstream csv;
  write_corpus_csv(csv, table);
  emit(csv.str(), opt.out_path, out);

  for (const LoadFailure& f : table.load_failures) err << "error: " << f.message << '\n';
  for (const RecordFailure& f : table.failures) {
    err << "warning: " << f.image_label << " (" << to_string(f.axis) << "): " << f.message << '\n';
  }
  if (paths.empty()) {
    err << "error: no input images\n";
    return kExitInputError;
  }
  return table.load_failures.size() < paths.size() ? kExitOk : kExitInputError;
}

std::string_view axis_title(SymmetricAxis axis) {
  switch (axis) {
    case SymmetricAxis::Horizontal: return "Horizontal";
    case SymmetricAxis::Vertical: return "Vertical";
    case SymmetricAxis::DiagonalMain: return "Diagonal";
    case SymmetricAxis::DiagonalAnti: return "Anti-diagonal";
  }
  return "";
}

int cmd_chart(const Options& opt, std::ostream& out) {
  const SymmetricAxis axis = single_axis(opt.axes);
  const AxisAnalysis analysis = analyze_axis(load_input(opt), axis);
  const std::string title = fmt::format("{} Group GLDV: {}", axis_title(axis), label_of(opt.image));
  emit(render_group_gldv_chart(analysis.groups, analysis.stats.contrast, title), opt.out_path, out);
  return kExitOk;
}

int cmd_export(const Options& opt, std::ostream& out) {
  const PixelGrid image = load_input(opt);
  std::ostringstream csv;
  if (!opt.direction.empty()) {
    if (opt.what != "glcm") throw UsageError("--direction only applies to 'glcm' exports");
    if (!opt.axes.empty()) throw UsageError("--axis and --direction are mutually exclusive");
    write_glcm_csv(csv, directional_glcm(image, *parse_direction(opt.direction)));
  } else {
    const CooccurrenceMatrix glcm = symmetric_glcm(image, single_axis(opt.axes));
    if (opt.what == "glcm") {
      write_glcm_csv(csv, glcm);
    } else if (opt.what == "nglcm") {
      write_nglcm_csv(csv, normalize(glcm), opt.display_precision);
    } else if (opt.what == "gldv") {
      write_gldv_csv(csv, gldv(glcm), opt.display_precision);
    } else {
      write_group_gldv_csv(csv, group_gldv(gldv(glcm)), opt.display_precision);
    }
  }
  emit(csv.str(), opt.out_path, out);
  return kExitOk;
}

int cmd_correlate(const Options& opt, std::ostream& out) {
  const auto scheme = parse_pooling_scheme(opt.scheme);
  if (!scheme) throw UsageError(fmt::format("unknown scheme '{}'", opt.scheme));
  const CorpusTable table = read_corpus_csv(std::filesystem::path(opt.image));
  std::ostringstream text;
  write_cross_statistic_report(text, cross_statistic_report(table, *scheme));
  emit(text.str(), opt.out_path, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Grey level co-occurrence matrix texture analysis", "texturematrix"};
  app.require_subcommand(1);
  app.footer(kAxisHelp);

  auto add_axis = [&](CLI::App* cmd, const char* help) {
    cmd->add_option("--axis", opt.axes, help)->delimiter(',')->check(CLI::IsMember(kAxisNames));
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--luma", opt.luma, "Collapse RGB input to BT.601 luma before pairing");
    cmd->add_option("--out", opt.out_path, "Write output to PATH instead of standard output");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Statistics and Group GLDV for one image");
  analyze->add_option("image", opt.image, "PGM/PPM/PNG image")->required();
  add_axis(analyze, "Axes to analyze, comma separated (default: all)");
  analyze->add_option("--format", opt.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_flag("--display-precision", opt.display_precision,
                    "Round JSON values to table precision (2 or 4 decimals)");
  add_common(analyze);

  CLI::App* batch = app.add_subcommand("batch", "Corpus CSV for a directory, list file, or images");
  batch->add_option("inputs", opt.inputs, "Directories, image files, or list files")->required();
  batch->add_option("--workers", opt.workers, "Concurrent workers")->check(CLI::PositiveNumber);
  batch->add_option("--format", opt.format, "csv")->check(CLI::IsMember({"csv"}));
  add_common(batch);

  CLI::App* chart = app.add_subcommand("chart", "SVG bar chart of the Group GLDV");
  chart->add_option("image", opt.image, "PGM/PPM/PNG image")->required();
  add_axis(chart, "Axis to chart (default: h)");
  add_common(chart);

  CLI::App* exporter = app.add_subcommand("export", "Matrix or difference vector as CSV");
  exporter->add_option("image", opt.image, "PGM/PPM/PNG image")->required();
  exporter->add_option("what", opt.what, "glcm, nglcm, gldv, or group-gldv")
      ->required()
      ->check(CLI::IsMember({"glcm", "nglcm", "gldv", "group-gldv"}));
  add_axis(exporter, "Symmetric axis (default: h)");
  exporter->add_option("--direction", opt.direction, "Single direction, glcm only")
      ->check(CLI::IsMember(kDirectionNames, CLI::ignore_case));
  exporter->add_flag("--display-precision", opt.display_precision, "Round probabilities to 4 decimals");
  add_common(exporter);

  CLI::App* correlate = app.add_subcommand("correlate", "Pearson r of each statistic vs contrast");
  correlate->add_option("corpus", opt.image, "Corpus CSV (batch output or fixture)")->required();
  correlate->add_option("--scheme", opt.scheme, "pooled, per-axis, or axis-averaged")
      ->check(CLI::IsMember({"pooled", "per-axis", "axis-averaged"}));
  correlate->add_option("--out", opt.out_path, "Write output to PATH instead of standard output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(opt, out);
    if (batch->parsed()) {
      if (batch->count("--format") == 0) opt.format = "csv";
      return cmd_batch(opt, out, err);
    }
    if (chart->parsed()) return cmd_chart(opt, out);
    if (exporter->parsed()) return cmd_export(opt, out);
    if (correlate->parsed()) return cmd_correlate(opt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateGeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace texturematrix::cli
