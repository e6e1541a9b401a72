#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/basis.hpp"
#include "extremal/norms.hpp"
#include "extremal/verify.hpp"

namespace extremal {

std::string_view tool_version();

/// {"field": "R"|"C", "dim": n, "support": [[...], ...]}; complex entries
/// are [re, im]. Doubles round-trip exactly.
std::string norm_to_json(const NormSpec& f);
/// Throws InvalidArgument on malformed input, wrong arity or a field
/// mismatch.
NormSpec norm_from_json(std::string_view text);

/// {"kind": ..., "field": ..., "vectors": [[...], ...], "values": [...]}
std::string basis_to_json(const ExtremalBasis& b);
ExtremalBasis basis_from_json(std::string_view text);

/// Recorded in every report.
struct Provenance {
  std::uint64_t seed = 0;
  Tolerances tol;
  std::string command;
};

std::string basis_report_json(const NormSpec& f, const std::vector<ExtremalBasis>& bases,
                              const Provenance& p);
std::string ratio_report_json(const RatioReport& r, const ExtremalBasis& b, const Provenance& p);
std::string equivalence_report_json(const EquivalenceBounds& r, const Provenance& p);

/// Shortest text that parses back to the same double.
std::string format_double(double x);
std::string format_vector(const Vector& v);

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are quoted
/// with inner quotes doubled.
std::string csv_escape(std::string_view field);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  /// Throws InvalidArgument when the width differs from the header.
  void add_row(std::vector<std::string> row);
  std::size_t rows() const { return rows_.size(); }
  /// `# generated_at=...` first when `timestamp` is set, then the header.
  std::string str(const std::optional<std::string>& timestamp = std::nullopt) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotLine {
  std::string label;
  double y = 0.0;
};

/// Standalone SVG line chart, 800x600 viewBox: one polyline per series and
/// one horizontal line per reference level. Axis ranges cover all data.
/// `log_x` plots log10(x) (x must be positive).
std::string line_chart_svg(std::string_view title, std::string_view x_label,
                           std::string_view y_label, const std::vector<PlotSeries>& series,
                           const std::vector<PlotLine>& lines, bool log_x = false);

}  // namespace extremal
