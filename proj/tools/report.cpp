#include "report.hpp"

#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "texturematrix/display.hpp"

namespace texturematrix::cli {

ReportDocument build_report(const PixelGrid& image, std::string label,
                            std::span<const SymmetricAxis> axes, bool luma) {
  ReportDocument doc;
  doc.image_label = std::move(label);
  doc.rows = image.rows();
  doc.cols = image.cols();
  doc.channels = image.channels();
  doc.luma = luma;
  for (SymmetricAxis axis : axes) doc.axes.push_back(analyze_axis(image, axis));

  const TextureStatistics* h = nullptr;
  const TextureStatistics* v = nullptr;
  const TextureStatistics* d = nullptr;
  for (const AxisAnalysis& a : doc.axes) {
    if (a.axis() == SymmetricAxis::Horizontal) h = &a.stats;
    if (a.axis() == SymmetricAxis::Vertical) v = &a.stats;
    if (a.axis() == SymmetricAxis::DiagonalMain) d = &a.stats;
  }
  if (h && v && d) doc.average_contrast = average_contrast(*h, *v, *d);
  return doc;
}

namespace {

double rounded(double value, int decimals) {
  return std::stod(format_fixed(value, decimals));
}

}  // namespace

std::string render_report_json(const ReportDocument& report, bool display_precision) {
  using nlohmann::ordered_json;
  auto wide = [&](double v) { return display_precision ? rounded(v, kWideDecimals) : v; };
  auto unit = [&](double v) { return display_precision ? rounded(v, kUnitDecimals) : v; };

  ordered_json doc;
  doc["image"] = report.image_label;
  doc["rows"] = report.rows;
  doc["cols"] = report.cols;
  doc["channels"] = report.channels;
  doc["luma"] = report.luma;
  ordered_json axes = ordered_json::object();
  for (const AxisAnalysis& a : report.axes) {
    const TextureStatistics& s = a.stats;
    ordered_json entry;
    entry["contrast"] = wide(s.contrast);
    entry["dissimilarity"] = wide(s.dissimilarity);
    entry["homogeneity"] = unit(s.homogeneity);
    entry["asm"] = unit(s.angular_second_moment);
    entry["entropy"] = wide(s.entropy);
    entry["mean"] = wide(s.mean);
    entry["energy"] = unit(s.energy);
    entry["std_dev"] = wide(s.std_dev);
    entry["correlation"] = unit(s.correlation);
    entry["max_probability"] = unit(s.max_probability);
    entry["prob_diff_0_19"] = unit(a.prob_diff_0_19());
    entry["degenerate"] = s.degenerate;
    ordered_json groups = ordered_json::array();
    for (const DifferenceGroup& g : a.groups.groups()) {
      groups.push_back({{"range_lo", g.range_lo},
                        {"range_hi", g.range_hi},
                        {"count", g.count},
                        {"probability", unit(g.probability)}});
    }
    entry["group_gldv"] = std::move(groups);
    axes[std::string(to_string(a.axis()))] = std::move(entry);
  }
  doc["axes"] = std::move(axes);
  if (report.average_contrast) {
    doc["average_contrast"] = wide(*report.average_contrast);
  } else {
    doc["average_contrast"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

void write_report_csv(std::ostream& out, const ReportDocument& report) {
  write_corpus_csv_header(out);
  for (const AxisAnalysis& a : report.axes) {
    write_corpus_csv_row(out, StatRecord{report.image_label, a.axis(), a.stats, a.prob_diff_0_19()});
  }
  out << "\nimage,axis,range_lo,range_hi,count,probability\n";
  for (const AxisAnalysis& a : report.axes) {
    for (const DifferenceGroup& g : a.groups.groups()) {
      out << report.image_label << ',' << to_string(a.axis()) << ',' << g.range_lo << ','
          << g.range_hi << ',' << g.count << ',' << format_fixed(g.probability, kUnitDecimals) << '\n';
    }
  }
  if (report.average_contrast) {
    out << "\nimage,average_contrast\n"
        << report.image_label << ',' << format_fixed(*report.average_contrast, kWideDecimals) << '\n';
  }
}

namespace {

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string render_group_gldv_chart(const GroupedDifferenceVector& groups, double contrast,
                                    std::string_view title) {
  using L = ChartLayout;
  const double baseline = L::kPlotTop + L::kPlotHeight;
  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.0f} {:.0f}\" width=\"{:.0f}\" "
      "height=\"{:.0f}\">\n",
      L::kWidth, L::kHeight, L::kWidth, L::kHeight);
  svg += fmt::format("  <rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n",
                     L::kWidth, L::kHeight);
  svg += fmt::format(
      "  <text class=\"title\" x=\"{:.0f}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      "font-size=\"16\">{}</text>\n",
      L::kWidth / 2, escape_xml(title));
  svg += fmt::format(
      "  <text class=\"contrast\" x=\"{:.0f}\" y=\"46\" text-anchor=\"end\" font-family=\"sans-serif\" "
      "font-size=\"14\" data-contrast=\"{}\">Contrast: {}</text>\n",
      L::kWidth - L::kGutter, format_fixed(contrast, kWideDecimals), format_fixed(contrast, kWideDecimals));
  svg += fmt::format(
      "  <line class=\"axis\" x1=\"{:.0f}\" y1=\"{:.0f}\" x2=\"{:.0f}\" y2=\"{:.0f}\" stroke=\"black\"/>\n",
      L::kGutter / 2, baseline, L::kWidth - L::kGutter / 2, baseline);

  for (std::size_t k = 0; k < groups.groups().size(); ++k) {
    const DifferenceGroup& g = groups[k];
    const double x = L::kGutter + static_cast<double>(k) * (L::kBarWidth + L::kGutter);
    const double height = g.probability * L::kPlotHeight;
    svg += fmt::format(
        "  <rect class=\"bar\" x=\"{:.6f}\" y=\"{:.6f}\" width=\"{:.6f}\" height=\"{:.6f}\" "
        "fill=\"steelblue\" data-probability=\"{}\"/>\n",
        x, baseline - height, L::kBarWidth, height, g.probability);
    svg += fmt::format(
        "  <text class=\"label\" x=\"{:.6f}\" y=\"{:.0f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"11\">{}-{}</text>\n",
        x + L::kBarWidth / 2, baseline + 18, g.range_lo, g.range_hi);
    svg += fmt::format(
        "  <text class=\"value\" x=\"{:.6f}\" y=\"{:.6f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"10\">{}</text>\n",
        x + L::kBarWidth / 2, baseline - height - 4, format_fixed(g.probability, kUnitDecimals));
  }
  svg += fmt::format(
      "  <text class=\"xlabel\" x=\"{:.0f}\" y=\"{:.0f}\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      "font-size=\"12\">Difference</text>\n",
      L::kWidth / 2, baseline + 44);
  svg += "</svg>\n";
  return svg;
}

}  // namespace texturematrix::cli
