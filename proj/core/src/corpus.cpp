#include "texturematrix/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "compensated_sum.hpp"
#include "texturematrix/display.hpp"
#include "texturematrix/errors.hpp"

namespace texturematrix {

AxisAnalysis analyze_axis(const PixelGrid& image, SymmetricAxis axis) {
  const CooccurrenceMatrix glcm = symmetric_glcm(image, axis);
  return AxisAnalysis{compute_stats(normalize(glcm)), group_gldv(gldv(glcm))};
}

std::vector<const StatRecord*> CorpusTable::records_for(SymmetricAxis axis) const {
  std::vector<const StatRecord*> out;
  for (const StatRecord& r : records) {
    if (r.axis == axis) out.push_back(&r);
  }
  return out;
}

std::vector<StatRecord> analyze_image(const PixelGrid& image, std::string_view label,
                                      std::vector<RecordFailure>* failures) {
  std::vector<StatRecord> records;
  for (SymmetricAxis axis : kReportAxes) {
    try {
      const AxisAnalysis a = analyze_axis(image, axis);
      records.push_back({std::string(label), axis, a.stats, a.prob_diff_0_19()});
    } catch (const DegenerateGeometryError& e) {
      if (failures != nullptr) failures->push_back({std::string(label), axis, e.what()});
    }
  }
  return records;
}

namespace {

std::vector<std::string> labels_for(std::span<const std::filesystem::path> paths) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  bool collision = false;
  for (const auto& p : paths) {
    labels.push_back(p.filename().string());
    collision = collision || !seen.insert(labels.back()).second;
  }
  if (collision) {
    for (std::size_t k = 0; k < paths.size(); ++k) labels[k] = paths[k].generic_string();
  }
  return labels;
}

struct ImageResult {
  std::vector<StatRecord> records;
  std::vector<RecordFailure> failures;
  std::exception_ptr load_error;
};

}  // namespace

CorpusTable analyze_corpus(std::span<const std::filesystem::path> paths,
                           const CorpusOptions& options) {
  CorpusTable table;
  if (paths.empty()) return table;

  const std::vector<std::string> labels = labels_for(paths);
  std::vector<ImageResult> results(paths.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k = next++; k < paths.size(); k = next++) {
      ImageResult& out = results[k];
      try {
        PixelGrid image = load_image(paths[k]);
        if (options.luma) image = to_luma(image);
        out.records = analyze_image(image, labels[k], &out.failures);
      } catch (const Error&) {
        out.load_error = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, paths.size());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t k = 0; k < paths.size(); ++k) {
    ImageResult& r = results[k];
    if (r.load_error) {
      std::string message;
      try {
        std::rethrow_exception(r.load_error);
      } catch (const Error& e) {
        message = e.what();
      }
      if (options.abort_on_load_error) {
        try {
          std::rethrow_exception(r.load_error);
        } catch (const FormatError&) {
          throw FormatError(fmt::format("failed to load '{}': {}", paths[k].string(), message));
        } catch (const DimensionError&) {
          throw DimensionError(fmt::format("failed to load '{}': {}", paths[k].string(), message));
        } catch (const Error&) {
          throw IoError(fmt::format("failed to load '{}': {}", paths[k].string(), message));
        }
      }
      table.load_failures.push_back({paths[k], message});
      continue;
    }
    std::move(r.records.begin(), r.records.end(), std::back_inserter(table.records));
    std::move(r.failures.begin(), r.failures.end(), std::back_inserter(table.failures));
  }
  return table;
}

std::vector<std::pair<std::string, double>> rank_by_contrast(const CorpusTable& table,
                                                             SymmetricAxis axis) {
  std::vector<std::pair<std::string, double>> ranked;
  for (const StatRecord* r : table.records_for(axis)) {
    ranked.emplace_back(r->image_label, r->stats.contrast);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return ranked;
}

namespace {

bool is_constant(std::span<const double> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); });
}

double mean_of(std::span<const double> xs) {
  detail::CompensatedSum sum;
  for (double x : xs) sum.add(x);
  return sum.value() / static_cast<double>(xs.size());
}

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ContractError(fmt::format("pearson: length mismatch ({} vs {})", xs.size(), ys.size()));
  }
  if (xs.size() < 2) {
    throw ContractError("pearson: need at least two samples");
  }
  if (is_constant(xs) || is_constant(ys)) {
    throw ContractError("pearson: zero variance series");
  }
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  detail::CompensatedSum sxy, sxx, syy;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double dx = xs[k] - mx;
    const double dy = ys[k] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  const double denominator = std::sqrt(sxx.value() * syy.value());
  if (denominator == 0.0) {
    throw ContractError("pearson: zero variance series");
  }
  return std::clamp(sxy.value() / denominator, -1.0, 1.0);
}

std::string_view to_string(PoolingScheme scheme) noexcept {
  switch (scheme) {
    case PoolingScheme::Pooled: return "pooled";
    case PoolingScheme::PerAxis: return "per-axis";
    case PoolingScheme::AxisAveraged: return "axis-averaged";
  }
  return "?";
}

std::optional<PoolingScheme> parse_pooling_scheme(std::string_view text) noexcept {
  for (PoolingScheme s : {PoolingScheme::Pooled, PoolingScheme::PerAxis, PoolingScheme::AxisAveraged}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

double statistic_value(const StatRecord& record, std::string_view column) {
  const TextureStatistics& s = record.stats;
  if (column == "contrast") return s.contrast;
  if (column == "dissimilarity") return s.dissimilarity;
  if (column == "homogeneity") return s.homogeneity;
  if (column == "asm") return s.angular_second_moment;
  if (column == "entropy") return s.entropy;
  if (column == "mean") return s.mean;
  if (column == "energy") return s.energy;
  if (column == "std_dev") return s.std_dev;
  if (column == "correlation") return s.correlation;
  if (column == "max_probability") return s.max_probability;
  if (column == "prob_diff_0_19") return record.prob_diff_0_19;
  throw ContractError(fmt::format("unknown statistic '{}'", column));
}

namespace {

using Column = std::vector<double>;

void correlate_group(std::string_view group, const std::map<std::string_view, Column>& columns,
                     std::vector<CoefficientEntry>& out) {
  const Column& contrast = columns.at("contrast");
  if (contrast.size() < 2) {
    throw ContractError(fmt::format("cross-statistic report: group '{}' has {} record(s), need 2",
                                    group, contrast.size()));
  }
  for (std::string_view name : kCorrelatedStatistics) {
    CoefficientEntry entry{std::string(group), std::string(name), std::nullopt};
    const Column& ys = columns.at(name);
    if (!is_constant(contrast) && !is_constant(ys)) entry.r_vs_contrast = pearson(ys, contrast);
    out.push_back(std::move(entry));
  }
}

std::map<std::string_view, Column> columns_of(std::span<const StatRecord* const> records) {
  std::map<std::string_view, Column> columns;
  columns["contrast"];
  for (std::string_view name : kCorrelatedStatistics) columns[name];
  for (const StatRecord* r : records) {
    for (auto& [name, values] : columns) values.push_back(statistic_value(*r, name));
  }
  return columns;
}

}  // namespace

const CoefficientEntry* CrossStatisticReport::find(std::string_view group,
                                                   std::string_view statistic) const {
  for (const CoefficientEntry& e : entries) {
    if (e.group == group && e.statistic == statistic) return &e;
  }
  return nullptr;
}

CrossStatisticReport cross_statistic_report(const CorpusTable& table, PoolingScheme scheme) {
  CrossStatisticReport report;
  report.scheme = scheme;

  switch (scheme) {
    case PoolingScheme::Pooled: {
      std::vector<const StatRecord*> all;
      for (const StatRecord& r : table.records) all.push_back(&r);
      report.sample_count = all.size();
      report.description = fmt::format("pooled: {} records across all axes", all.size());
      correlate_group("all", columns_of(all), report.entries);
      break;
    }
    case PoolingScheme::PerAxis: {
      std::vector<std::string> parts;
      for (SymmetricAxis axis : kAllAxes) {
        const auto records = table.records_for(axis);
        if (records.empty()) continue;
        report.sample_count += records.size();
        parts.push_back(fmt::format("{} {}", to_string(axis), records.size()));
        correlate_group(to_string(axis), columns_of(records), report.entries);
      }
      if (parts.empty()) throw ContractError("cross-statistic report: table is empty");
      report.description = fmt::format("per-axis: {}", fmt::join(parts, ", "));
      break;
    }
    case PoolingScheme::AxisAveraged: {
      // Average each image's records over its axes, images in first-seen order.
      std::vector<std::string> order;
      std::map<std::string, std::vector<const StatRecord*>> by_image;
      for (const StatRecord& r : table.records) {
        auto& bucket = by_image[r.image_label];
        if (bucket.empty()) order.push_back(r.image_label);
        bucket.push_back(&r);
      }
      std::vector<StatRecord> averaged;
      averaged.reserve(order.size());
      for (const std::string& label : order) {
        const auto columns = columns_of(by_image[label]);
        StatRecord avg;
        avg.image_label = label;
        auto m = [&](std::string_view name) { return mean_of(columns.at(name)); };
        avg.stats.contrast = m("contrast");
        avg.stats.dissimilarity = m("dissimilarity");
        avg.stats.homogeneity = m("homogeneity");
        avg.stats.angular_second_moment = m("asm");
        avg.stats.entropy = m("entropy");
        avg.stats.mean = m("mean");
        avg.stats.energy = m("energy");
        avg.stats.std_dev = m("std_dev");
        avg.stats.correlation = m("correlation");
        avg.stats.max_probability = m("max_probability");
        avg.prob_diff_0_19 = m("prob_diff_0_19");
        averaged.push_back(std::move(avg));
      }
      std::vector<const StatRecord*> pointers;
      for (const StatRecord& r : averaged) pointers.push_back(&r);
      report.sample_count = pointers.size();
      report.description =
          fmt::format("axis-averaged: {} images, statistics averaged over their axes", pointers.size());
      correlate_group("axis-mean", columns_of(pointers), report.entries);
      break;
    }
  }
  return report;
}

void write_cross_statistic_report(std::ostream& out, const CrossStatisticReport& report) {
  out << "# scheme: " << report.description << '\n';
  out << "group,statistic,r_vs_contrast\n";
  for (const CoefficientEntry& e : report.entries) {
    out << e.group << ',' << e.statistic << ','
        << (e.r_vs_contrast ? format_fixed(*e.r_vs_contrast, kUnitDecimals) : "undefined") << '\n';
  }
}

}  // namespace texturematrix
