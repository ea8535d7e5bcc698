#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "texturematrix/gldv.hpp"
#include "texturematrix/texture_stats.hpp"

namespace texturematrix {

/// Full per-axis result for one image: statistics plus grouped differences.
struct AxisAnalysis {
  TextureStatistics stats;
  GroupedDifferenceVector groups;

  SymmetricAxis axis() const noexcept { return stats.axis; }
  double prob_diff_0_19() const noexcept { return groups[0].probability; }
};

/// symmetric GLCM -> normalize -> statistics, and GLCM -> GLDV -> groups.
/// Throws DegenerateGeometryError when the image admits no pair on the axis.
AxisAnalysis analyze_axis(const PixelGrid& image, SymmetricAxis axis);

struct StatRecord {
  std::string image_label;
  SymmetricAxis axis = SymmetricAxis::Horizontal;
  TextureStatistics stats;
  double prob_diff_0_19 = 0.0;
};

/// An axis that could not be analyzed for an otherwise loadable image.
struct RecordFailure {
  std::string image_label;
  SymmetricAxis axis = SymmetricAxis::Horizontal;
  std::string message;
};

/// An input that could not be loaded (only kept when loading failures do not
/// abort the batch).
struct LoadFailure {
  std::filesystem::path path;
  std::string message;
};

struct CorpusTable {
  std::vector<StatRecord> records;
  std::vector<RecordFailure> failures;
  std::vector<LoadFailure> load_failures;
  /// "computed" or "fixture:<name>".
  std::string provenance = "computed";

  std::vector<const StatRecord*> records_for(SymmetricAxis axis) const;
};

/// Records for the Horizontal, Vertical and main-diagonal axes, in that
/// order. Degenerate axes become RecordFailure entries.
std::vector<StatRecord> analyze_image(const PixelGrid& image, std::string_view label,
                                      std::vector<RecordFailure>* failures = nullptr);

struct CorpusOptions {
  std::size_t workers = 1;
  /// When false, unreadable inputs are collected in load_failures instead of
  /// aborting the batch.
  bool abort_on_load_error = true;
  bool luma = false;
};

/// Labels are file names, or the full paths when file names collide. Output
/// order follows input order regardless of worker scheduling. With
/// abort_on_load_error, the first failing path (in input order) is rethrown
/// with the path named in the message.
CorpusTable analyze_corpus(std::span<const std::filesystem::path> paths,
                           const CorpusOptions& options = {});

/// Ascending contrast; ties broken by label.
std::vector<std::pair<std::string, double>> rank_by_contrast(const CorpusTable& table,
                                                             SymmetricAxis axis);

/// Sample Pearson correlation. Throws ContractError on a length mismatch,
/// fewer than two samples, or a zero-variance series.
double pearson(std::span<const double> xs, std::span<const double> ys);

enum class PoolingScheme {
  Pooled,        // every record in the table, all axes together
  PerAxis,       // one coefficient set per axis
  AxisAveraged,  // each image's statistics averaged over its axes first
};

std::string_view to_string(PoolingScheme scheme) noexcept;
std::optional<PoolingScheme> parse_pooling_scheme(std::string_view text) noexcept;

struct CoefficientEntry {
  std::string group;      // "all", an axis name, or "axis-mean"
  std::string statistic;  // column name as in the corpus CSV
  std::optional<double> r_vs_contrast;  // empty when a column has zero variance
};

struct CrossStatisticReport {
  PoolingScheme scheme = PoolingScheme::Pooled;
  std::string description;
  std::size_t sample_count = 0;
  std::vector<CoefficientEntry> entries;

  /// Entry for (group, statistic), or nullptr.
  const CoefficientEntry* find(std::string_view group, std::string_view statistic) const;
};

/// Statistics correlated against contrast, in report order.
inline constexpr std::array<std::string_view, 10> kCorrelatedStatistics = {
    "dissimilarity", "homogeneity", "entropy", "energy", "std_dev",
    "correlation", "prob_diff_0_19", "asm", "mean", "max_probability"};

/// Throws ContractError when the table (or any per-axis group) has fewer
/// than two records.
CrossStatisticReport cross_statistic_report(const CorpusTable& table,
                                            PoolingScheme scheme = PoolingScheme::Pooled);

void write_cross_statistic_report(std::ostream& out, const CrossStatisticReport& report);

// --- corpus CSV ---------------------------------------------------------------

/// Column order of fixture and batch CSV files.
inline constexpr std::array<std::string_view, 13> kCorpusColumns = {
    "image", "axis", "contrast", "dissimilarity", "homogeneity", "asm", "entropy",
    "mean", "energy", "std_dev", "correlation", "max_probability", "prob_diff_0_19"};

/// Reads the corpus CSV layout. Columns are matched by header name; an
/// optional "flags" column marks degenerate records. Axis values are
/// "horizontal", "vertical", "diagonal" or "diagonal-anti". Throws
/// FormatError on malformed input and ContractError on duplicate labels.
CorpusTable read_corpus_csv(std::istream& in, std::string provenance);
CorpusTable read_corpus_csv(const std::filesystem::path& path);

/// Writes the corpus CSV at table display precision with a trailing "flags"
/// column.
void write_corpus_csv(std::ostream& out, const CorpusTable& table);
void write_corpus_csv_header(std::ostream& out);
void write_corpus_csv_row(std::ostream& out, const StatRecord& record);

/// Value of a named corpus column of a record ("contrast", "asm", ...).
double statistic_value(const StatRecord& record, std::string_view column);

}  // namespace texturematrix
