#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "texturematrix/corpus.hpp"

namespace texturematrix::cli {

/// Single-image report: per-axis statistics and grouped differences.
struct ReportDocument {
  std::string image_label;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t channels = 0;
  bool luma = false;
  std::vector<AxisAnalysis> axes;
  /// Only set when horizontal, vertical and the main diagonal are all present.
  std::optional<double> average_contrast;
};

/// Throws DegenerateGeometryError if any requested axis has no pairs.
ReportDocument build_report(const PixelGrid& image, std::string label,
                            std::span<const SymmetricAxis> axes, bool luma);

/// Key order is fixed, so equal documents render byte-identically. Values are
/// full precision unless display_precision rounds them to table precision.
std::string render_report_json(const ReportDocument& report, bool display_precision);

/// Three blank-line separated CSV blocks: statistics (corpus CSV layout),
/// grouped differences, average contrast.
void write_report_csv(std::ostream& out, const ReportDocument& report);

/// Geometry of the emitted bar chart (SVG user units).
struct ChartLayout {
  static constexpr double kWidth = 800.0;
  static constexpr double kHeight = 400.0;
  static constexpr double kGutter = 20.0;
  static constexpr double kPlotTop = 60.0;
  static constexpr double kPlotHeight = 280.0;  // a probability of 1.0
  static constexpr double kBarWidth = (kWidth - 14 * kGutter) / 13.0;
};

/// Bar chart of a Group GLDV: 13 bars whose heights are the group
/// probabilities, range labels along the x axis, and the contrast at 2 dp.
std::string render_group_gldv_chart(const GroupedDifferenceVector& groups, double contrast,
                                    std::string_view title);

}  // namespace texturematrix::cli
