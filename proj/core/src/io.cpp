#include "extremal/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "extremal/error.hpp"
#include "extremal/random.hpp"

#ifndef EXTREMAL_VERSION
#define EXTREMAL_VERSION "0.0.0"
#endif

namespace extremal {

using nlohmann::json;

std::string_view tool_version() { return EXTREMAL_VERSION; }

namespace {

json scalar_json(const Scalar& x, ScalarField field) {
  if (field == ScalarField::Real) return x.real();
  return json::array({x.real(), x.imag()});
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v.coords()) a.push_back(scalar_json(x, v.field()));
  return a;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string(what) + ": expected a number");
  return j.get<double>();
}

Vector vector_from(const json& j, ScalarField field, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim) {
    throw InvalidArgument(std::string(what) + ": expected " + std::to_string(dim) + " entries");
  }
  std::vector<Scalar> coords;
  for (const auto& x : j) {
    if (field == ScalarField::Real) {
      coords.emplace_back(number(x, what), 0.0);
    } else {
      if (!x.is_array() || x.size() != 2) {
        throw InvalidArgument(std::string(what) + ": complex entries must be [re, im]");
      }
      coords.emplace_back(number(x[0], what), number(x[1], what));
    }
  }
  return Vector(field, std::move(coords));
}

ScalarField field_from(const json& j) {
  if (!j.is_string()) throw InvalidArgument("field must be \"R\" or \"C\"");
  const auto s = j.get<std::string>();
  if (s == "R") return ScalarField::Real;
  if (s == "C") return ScalarField::Complex;
  throw InvalidArgument("field must be \"R\" or \"C\"");
}

json parse(std::string_view text) {
  try {
    json j = json::parse(text);
    if (!j.is_object()) throw InvalidArgument("expected a JSON object");
    return j;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidArgument(std::string("missing key '") + key + "'");
  return *it;
}

json basis_json(const ExtremalBasis& b) {
  json j;
  j["kind"] = std::string(to_string(b.kind));
  j["field"] = std::string(to_string(b.field()));
  j["vectors"] = json::array();
  for (const auto& v : b.vectors) j["vectors"].push_back(vector_json(v));
  j["values"] = b.values;
  return j;
}

json provenance_json(const Provenance& p) {
  json j;
  j["tool_version"] = std::string(tool_version());
  j["seed"] = p.seed;
  j["rng"] = std::string(Rng::kName);
  if (!p.command.empty()) j["command"] = p.command;
  json t = json::object();
  for (const auto& [name, value] : p.tol.entries()) t[name] = value;
  j["tolerances"] = t;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string norm_to_json(const NormSpec& f) {
  json j;
  j["field"] = std::string(to_string(f.field()));
  j["dim"] = f.dim();
  j["support"] = json::array();
  for (const auto& u : f.support()) j["support"].push_back(vector_json(u));
  return dump(j);
}

NormSpec norm_from_json(std::string_view text) {
  const json j = parse(text);
  const ScalarField field = field_from(member(j, "field"));
  const json& dim = member(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
    throw InvalidArgument("dim must be a positive integer");
  }
  const std::size_t n = dim.get<std::size_t>();
  const json& support = member(j, "support");
  if (!support.is_array()) throw InvalidArgument("support must be an array");
  std::vector<Vector> us;
  for (const auto& u : support) us.push_back(vector_from(u, field, n, "support vector"));
  return NormSpec(field, n, std::move(us));
}

std::string basis_to_json(const ExtremalBasis& b) { return dump(basis_json(b)); }

ExtremalBasis basis_from_json(std::string_view text) {
  const json j = parse(text);
  ExtremalBasis b;
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw InvalidArgument("kind must be a string");
  b.kind = basis_kind_from_string(kind.get<std::string>());
  const json& vectors = member(j, "vectors");
  if (!vectors.is_array() || vectors.empty()) throw InvalidArgument("vectors must be non-empty");
  ScalarField field = ScalarField::Real;
  if (j.contains("field")) {
    field = field_from(j["field"]);
  } else if (vectors[0].is_array() && !vectors[0].empty() && vectors[0][0].is_array()) {
    field = ScalarField::Complex;
  }
  const std::size_t n = vectors.size();
  for (const auto& v : vectors) b.vectors.push_back(vector_from(v, field, n, "basis vector"));
  const json& values = member(j, "values");
  if (!values.is_array() || values.size() != n) {
    throw InvalidArgument("values must have one entry per vector");
  }
  for (const auto& x : values) b.values.push_back(number(x, "value"));
  require_basis_of(b, field, n);
  return b;
}

std::string basis_report_json(const NormSpec& f, const std::vector<ExtremalBasis>& bases,
                              const Provenance& p) {
  json j;
  j["provenance"] = provenance_json(p);
  j["dim"] = f.dim();
  j["field"] = std::string(to_string(f.field()));
  j["bases"] = json::array();
  for (const auto& b : bases) {
    json x = basis_json(b);
    json steps = json::array();
    for (const auto& s : b.provenance) {
      steps.push_back({{"method", std::string(to_string(s.method))},
                       {"starts_used", s.starts_used},
                       {"converged", s.converged},
                       {"vertex_certified", s.vertex_certified},
                       {"seed", s.seed}});
    }
    x["steps"] = steps;
    j["bases"].push_back(x);
  }
  return dump(j);
}

std::string ratio_report_json(const RatioReport& r, const ExtremalBasis& b, const Provenance& p) {
  json j;
  j["provenance"] = provenance_json(p);
  j["n"] = b.dim();
  j["kind"] = std::string(to_string(b.kind));
  j["ratio"] = r.ratio;
  j["bound"] = r.bound;
  j["satisfied"] = r.satisfied;
  j["method"] = std::string(to_string(r.method));
  j["witness"] = vector_json(r.witness);
  j["work"] = r.work;
  j["basis"] = basis_json(b);
  return dump(j);
}

std::string equivalence_report_json(const EquivalenceBounds& r, const Provenance& p) {
  json j;
  j["provenance"] = provenance_json(p);
  j["kind_b"] = std::string(to_string(r.kind_b));
  j["kind_e"] = std::string(to_string(r.kind_e));
  j["all_ok"] = r.all_ok;
  j["rows"] = json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    j["rows"].push_back({{"i", i + 1},
                         {"f_b", row.fb},
                         {"f_e", row.fe},
                         {"ratio", row.ratio},
                         {"lower", row.lower},
                         {"upper", row.upper},
                         {"ok", row.ok}});
  }
  return dump(j);
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ' ';
    out += format_double(v[i].real());
    if (v.field() == ScalarField::Complex) {
      out += v[i].imag() < 0 ? "-" : "+";
      out += format_double(std::abs(v[i].imag())) + "i";
    }
  }
  return out + ")";
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  if (header_.empty()) throw InvalidArgument("CSV header must not be empty");
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw InvalidArgument("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                          std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

std::string CsvTable::str(const std::optional<std::string>& timestamp) const {
  std::string out;
  if (timestamp) out += "# generated_at=" + *timestamp + "\n";
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(fields[i]);
    }
    out += '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out;
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b"};

}  // namespace

std::string line_chart_svg(std::string_view title, std::string_view x_label,
                           std::string_view y_label, const std::vector<PlotSeries>& series,
                           const std::vector<PlotLine>& lines, bool log_x) {
  constexpr double W = 800, H = 600, left = 80, right = 180, top = 50, bottom = 70;
  const auto tx = [&](double x) {
    if (log_x && !(x > 0)) throw InvalidArgument("log axis needs positive x values");
    return log_x ? std::log10(x) : x;
  };
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, tx(x));
      x1 = std::max(x1, tx(x));
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  for (const auto& l : lines) {
    y0 = std::min(y0, l.y);
    y1 = std::max(y1, l.y);
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1;
  if (!std::isfinite(y0)) y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  const double pad = 0.05 * (y1 - y0);
  y0 -= pad;
  y1 += pad;
  const double pw = W - left - right, ph = H - top - bottom;
  const auto px = [&](double x) { return left + (tx(x) - x0) / (x1 - x0) * pw; };
  const auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

  std::string o;
  o += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
       "viewBox=\"0 0 800 600\" font-family=\"sans-serif\" font-size=\"13\">\n";
  o += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  o += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" + xml_escape(title) +
       "</text>\n";
  o += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
       "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 5; ++k) {
    const double fx = x0 + (x1 - x0) * k / 5.0;
    const double fy = y0 + (y1 - y0) * k / 5.0;
    const double sx = left + pw * k / 5.0;
    const double sy = top + ph - ph * k / 5.0;
    char lx[32], ly[32];
    std::snprintf(lx, sizeof lx, log_x ? "1e%.2g" : "%.4g", fx);
    std::snprintf(ly, sizeof ly, "%.4g", fy);
    o += "<line x1=\"" + num(sx) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(sx) +
         "\" y2=\"" + num(top + ph + 5) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(sx) + "\" y=\"" + num(top + ph + 20) +
         "\" text-anchor=\"middle\">" + lx + "</text>\n";
    o += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(sy) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(sy) + "\" stroke=\"black\"/>\n";
    o += "<text x=\"" + num(left - 8) + "\" y=\"" + num(sy + 4) + "\" text-anchor=\"end\">" +
         ly + "</text>\n";
  }
  o += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(H - 20) +
       "\" text-anchor=\"middle\">" + xml_escape(x_label) + "</text>\n";
  o += "<text x=\"20\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
       num(top + ph / 2) + ")\">" + xml_escape(y_label) + "</text>\n";

  std::size_t legend = 0;
  const auto legend_entry = [&](const std::string& label, const char* color, bool dashed) {
    const double ly = top + 20 + 22.0 * static_cast<double>(legend++);
    o += "<line x1=\"" + num(W - right + 15) + "\" y1=\"" + num(ly) + "\" x2=\"" +
         num(W - right + 45) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"" + (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    o += "<text x=\"" + num(W - right + 52) + "\" y=\"" + num(ly + 4) + "\">" +
         xml_escape(label) + "</text>\n";
  };

  for (const auto& l : lines) {
    o += "<line class=\"asymptote\" x1=\"" + num(left) + "\" y1=\"" + num(py(l.y)) + "\" x2=\"" +
         num(left + pw) + "\" y2=\"" + num(py(l.y)) +
         "\" stroke=\"gray\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
    legend_entry(l.label, "gray", true);
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof kPalette / sizeof *kPalette)];
    std::vector<std::pair<double, double>> pts = series[i].points;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string attr;
    for (const auto& [x, y] : pts) {
      if (!attr.empty()) attr += ' ';
      attr += num(px(x)) + "," + num(py(y));
    }
    o += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"2\" points=\"" + attr + "\"/>\n";
    for (const auto& [x, y] : pts) {
      o += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"3\" fill=\"" +
           color + "\"/>\n";
    }
    legend_entry(series[i].label, color, false);
  }
  o += "</svg>\n";
  return o;
}

}  // namespace extremal
