// extremal: batch driver for extremal bases of polyhedral norms.
//
// Exit codes: 0 ok, 2 invalid input, 3 solver failure, 4 bound violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "extremal/basis.hpp"
#include "extremal/constructions.hpp"
#include "extremal/error.hpp"
#include "extremal/io.hpp"
#include "extremal/random.hpp"
#include "extremal/sphere_opt.hpp"
#include "extremal/verify.hpp"

using namespace extremal;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitViolation = 4;

struct Config {
  std::string norm_path;
  std::string construct;
  std::size_t n = 2;
  double s = 0.1;
  double c = 0.9;
  std::string alpha = "2pi/3";
  std::string kind;
  std::string grid;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> tol;
  std::string csv_path;
  std::string svg_path;
  std::string json_path;
  bool no_timestamp = false;
  std::optional<std::size_t> starts;
  std::string command;
};

// Resolved per-run settings shared by all subcommands.
struct Run {
  std::uint64_t seed = Rng::kDefaultSeed;
  Tolerances tol;
  Provenance prov;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw InvalidArgument("cannot write " + path);
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("bad ") + what + ": " + text);
  }
  if (used != text.size()) throw InvalidArgument(std::string("bad ") + what + ": " + text);
  return v;
}

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad number: " + text);
  }
  if (used != text.size() || !std::isfinite(v)) throw InvalidArgument("bad number: " + text);
  return v;
}

// Accepts plain numbers and multiples of pi: "0.995pi", "pi", "3pi/4",
// "pi-0.01".
double parse_angle(std::string text) {
  const auto p = text.find("pi");
  if (p == std::string::npos) return parse_double(text);
  std::string head = text.substr(0, p);
  std::string tail = text.substr(p + 2);
  double k = head.empty() ? 1.0 : head == "-" ? -1.0 : parse_double(head);
  double v = k * std::numbers::pi;
  if (!tail.empty() && tail[0] == '/') {
    const auto q = tail.find_first_of("+-", 1);
    v /= parse_double(tail.substr(1, q == std::string::npos ? std::string::npos : q - 1));
    tail = q == std::string::npos ? "" : tail.substr(q);
  }
  if (!tail.empty()) {
    if (tail[0] != '+' && tail[0] != '-') throw InvalidArgument("bad angle: " + text);
    v += parse_double(tail);
  }
  return v;
}

Run resolve(const Config& cfg) {
  Run r;
  if (cfg.seed) {
    r.seed = *cfg.seed;
  } else if (const char* env = std::getenv("EXTREMAL_SEED"); env && *env) {
    r.seed = parse_u64(env, "EXTREMAL_SEED");
  }
  for (const auto& kv : cfg.tol) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidArgument("--tol expects NAME=VAL, got " + kv);
    r.tol.set(kv.substr(0, eq), parse_double(kv.substr(eq + 1)));
  }
  r.prov.seed = r.seed;
  r.prov.tol = r.tol;
  r.prov.command = cfg.command;
  return r;
}

std::string tolerance_text(const Tolerances& tol) {
  std::string out;
  for (const auto& [k, v] : tol.entries()) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_double(v);
  }
  return out;
}

std::vector<std::string> with_provenance(std::vector<std::string> header) {
  for (const char* k : {"method", "seed", "rng", "tolerances", "tool_version"}) header.emplace_back(k);
  return header;
}

std::vector<std::string> provenance_cells(const Run& run, std::string_view method) {
  return {std::string(method), std::to_string(run.seed), std::string(Rng::kName),
          tolerance_text(run.tol), std::string(tool_version())};
}

void add_row(CsvTable& t, std::vector<std::string> cells, const Run& run, std::string_view method) {
  for (auto& p : provenance_cells(run, method)) cells.push_back(std::move(p));
  t.add_row(std::move(cells));
}

std::optional<std::string> timestamp(const Config& cfg) {
  if (cfg.no_timestamp) return std::nullopt;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

void emit_csv(const Config& cfg, const CsvTable& t) {
  if (!cfg.csv_path.empty()) write_file(cfg.csv_path, t.str(timestamp(cfg)));
}

void emit_json(const Config& cfg, const std::string& json) {
  if (cfg.json_path.empty()) {
    std::cout << json << "\n";
  } else {
    write_file(cfg.json_path, json + "\n");
  }
}

ConstructionOutput construct(const Config& cfg) {
  if (cfg.construct == "min") return build_min_construction(cfg.n, cfg.s);
  if (cfg.construct == "max") return build_max_construction(cfg.n, cfg.c, parse_angle(cfg.alpha));
  throw InvalidArgument("--construct must be min or max, got " + cfg.construct);
}

NormSpec load_norm(const Config& cfg) {
  if (!cfg.norm_path.empty() && !cfg.construct.empty()) {
    throw InvalidArgument("--norm and --construct are exclusive");
  }
  if (!cfg.construct.empty()) return construct(cfg).norm;
  if (cfg.norm_path.empty()) throw InvalidArgument("one of --norm or --construct is required");
  NormSpec f = norm_from_json(read_file(cfg.norm_path));
  for (const auto& [i, j] : lint_duplicates(f)) {
    std::cerr << "warning: support vectors " << i << " and " << j << " are parallel\n";
  }
  require_norm(f);
  return f;
}

SphereOptOptions sphere_options(const Config& cfg, const Run& run) {
  SphereOptOptions o;
  o.seed = run.seed;
  o.agreement_tol = run.tol.agreement;
  if (cfg.starts) o.random_starts = *cfg.starts;
  return o;
}

// "minimal", "maximal" or a basis JSON file.
ExtremalBasis basis_source(const std::string& src, const NormSpec& f, const Config& cfg,
                           const Run& run) {
  if (src == "minimal" || src == "min") return minimal_basis(f, sphere_options(cfg, run));
  if (src == "maximal" || src == "max") return maximal_basis(f);
  ExtremalBasis b = basis_from_json(read_file(src));
  require_basis_of(b, f.field(), f.dim());
  if (b.kind == BasisKind::External) return make_external(f, b.vectors);
  for (std::size_t i = 0; i < b.dim(); ++i) b.values[i] = evaluate(f, b.vectors[i]);
  return b;
}

std::string method_of(const StepProvenance& p) { return std::string(to_string(p.method)); }

int cmd_basis(const Config& cfg) {
  const Run run = resolve(cfg);
  const NormSpec f = load_norm(cfg);
  std::vector<ExtremalBasis> bases;
  const std::string kind = cfg.kind.empty() ? "both" : cfg.kind;
  if (kind != "both") basis_kind_from_string(kind);
  if (kind == "both" || basis_kind_from_string(kind) == BasisKind::Minimal) {
    bases.push_back(minimal_basis(f, sphere_options(cfg, run)));
  }
  if (kind == "both" || basis_kind_from_string(kind) == BasisKind::Maximal) {
    bases.push_back(maximal_basis(f));
  }
  if (bases.empty()) throw InvalidArgument("--kind must be minimal, maximal or both");

  CsvTable t(with_provenance({"kind", "index", "value", "vector", "converged", "vertex_certified"}));
  for (const auto& b : bases) {
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const auto& p = b.provenance[i];
      add_row(t,
              {std::string(to_string(b.kind)), std::to_string(i + 1), format_double(b.values[i]),
               format_vector(b.vectors[i]), p.converged ? "1" : "0", p.vertex_certified ? "1" : "0"},
              run, method_of(p));
    }
  }
  emit_json(cfg, basis_report_json(f, bases, run.prov));
  emit_csv(cfg, t);
  return kExitOk;
}

int cmd_verify(const Config& cfg, const std::string& basis_path) {
  const Run run = resolve(cfg);
  const NormSpec f = load_norm(cfg);
  ExtremalBasis b;
  if (!basis_path.empty()) {
    if (!cfg.kind.empty()) throw InvalidArgument("--basis and --kind are exclusive");
    b = basis_source(basis_path, f, cfg, run);
  } else {
    b = basis_source(cfg.kind.empty() ? "minimal" : cfg.kind, f, cfg, run);
  }
  RatioOptions opts;
  opts.seed = run.seed;
  opts.tol = run.tol;
  const RatioReport r = upper_ratio(f, b, opts);

  CsvTable t(with_provenance({"n", "kind", "ratio", "bound", "satisfied", "witness"}));
  add_row(t,
          {std::to_string(f.dim()), std::string(to_string(b.kind)), format_double(r.ratio),
           format_double(r.bound), r.satisfied ? "1" : "0", format_vector(r.witness)},
          run, to_string(r.method));
  emit_json(cfg, ratio_report_json(r, b, run.prov));
  emit_csv(cfg, t);
  if (!r.satisfied) {
    std::cerr << "violation: ratio " << format_double(r.ratio) << " exceeds bound "
              << format_double(r.bound) << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

struct GridAxis {
  std::string name;
  std::vector<std::string> values;
};

std::vector<GridAxis> parse_grid(const std::string& spec) {
  std::vector<GridAxis> axes;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InvalidArgument("grid axis needs name=v1,v2: " + part);
    GridAxis a{part.substr(0, eq), {}};
    std::stringstream vs(part.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) {
      if (!v.empty()) a.values.push_back(v);
    }
    if (a.values.empty()) throw InvalidArgument("empty grid axis: " + a.name);
    for (const auto& b : axes) {
      if (b.name == a.name) throw InvalidArgument("repeated grid axis: " + a.name);
    }
    axes.push_back(std::move(a));
  }
  return axes;
}

int cmd_sweep(const Config& cfg) {
  const Run run = resolve(cfg);
  const bool is_min = cfg.construct == "min";
  if (!is_min && cfg.construct != "max") throw InvalidArgument("sweep needs --construct min|max");
  const auto axes = parse_grid(cfg.grid);
  if (axes.empty()) throw InvalidArgument("empty grid");
  const std::vector<std::string> allowed =
      is_min ? std::vector<std::string>{"n", "s"} : std::vector<std::string>{"n", "c", "alpha"};
  for (const auto& a : axes) {
    if (std::find(allowed.begin(), allowed.end(), a.name) == allowed.end()) {
      throw InvalidArgument("unknown grid axis for this family: " + a.name);
    }
  }
  // The x axis of the plot is the last axis with more than one value.
  std::string x_axis = axes.back().name;
  for (const auto& a : axes) {
    if (a.values.size() > 1) x_axis = a.name;
  }

  CsvTable t(with_provenance(
      {"family", "n", "s", "c", "alpha", "measured_ratio", "predicted_ratio", "bound", "gap"}));
  std::map<std::string, PlotSeries> series;
  std::map<std::size_t, bool> dims;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    Config point = cfg;
    std::string label;
    double x = 0.0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const auto& name = axes[k].name;
      const auto& v = axes[k].values[idx[k]];
      if (name == "n") {
        point.n = parse_u64(v, "n");
      } else if (name == "s") {
        point.s = parse_double(v);
      } else if (name == "c") {
        point.c = parse_double(v);
      } else {
        point.alpha = v;
      }
      const double num = name == "alpha" ? parse_angle(v) : parse_double(v);
      if (name == x_axis) {
        x = num;
      } else {
        label += (label.empty() ? "" : " ") + name + "=" + v;
      }
    }
    if (label.empty()) label = "n=" + std::to_string(point.n);
    const ConstructionOutput out = construct(point);
    const double r = witness_ratio(out.norm, out.expected_basis, out.witness).ratio;
    const double bound = theorem_bound(point.n);
    const auto& params = out.params;
    std::string s_cell, c_cell, a_cell;
    if (const auto* p = std::get_if<MinFamilyParams>(&params)) {
      s_cell = format_double(p->s);
    } else if (const auto* q = std::get_if<MaxFamilyParams>(&params)) {
      c_cell = format_double(q->c);
      a_cell = format_double(q->alpha);
    }
    std::optional<double> predicted = out.predicted_ratio;
    if (is_min && point.n == 2) predicted = min_family_ratio_n2(point.s);
    add_row(t,
            {is_min ? "min" : "max", std::to_string(point.n), s_cell, c_cell, a_cell,
             format_double(r), predicted ? format_double(*predicted) : "",
             format_double(bound), format_double(bound - r)},
            run, "witness-only");
    auto& ser = series[label];
    ser.label = label;
    ser.points.emplace_back(x, r);
    dims[point.n] = true;

    std::size_t k = axes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < axes[k].values.size()) break;
      idx[k] = 0;
      if (k == 0) {
        k = axes.size() + 1;
        break;
      }
    }
    if (k == axes.size() + 1) break;
  }

  if (!cfg.svg_path.empty()) {
    std::vector<PlotSeries> all;
    for (auto& [_, s] : series) all.push_back(std::move(s));
    std::vector<PlotLine> lines;
    for (const auto& [n, _] : dims) {
      lines.push_back({"2^" + std::to_string(n) + "-1", theorem_bound(n)});
    }
    const bool log_x = x_axis == "s";
    write_file(cfg.svg_path,
               line_chart_svg(is_min ? "min family ratio" : "max family ratio",
                              log_x ? "log10 s" : x_axis, "ratio", all, lines, log_x));
  }
  if (cfg.csv_path.empty()) {
    std::cout << t.str(timestamp(cfg));
  } else {
    emit_csv(cfg, t);
  }
  return kExitOk;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string v;
  while (std::getline(ss, v, ',')) out.push_back(parse_double(v));
  return out;
}

int cmd_equiv(const Config& cfg, const std::string& b_src, const std::string& e_src,
              const std::string& hp_b, const std::string& hp_e) {
  const Run run = resolve(cfg);
  const NormSpec f = load_norm(cfg);
  const ExtremalBasis b = basis_source(b_src, f, cfg, run);
  const ExtremalBasis e = basis_source(e_src, f, cfg, run);
  HpConstants hp;
  if (!hp_b.empty()) hp.b = parse_list(hp_b);
  if (!hp_e.empty()) hp.e = parse_list(hp_e);
  const EquivalenceBounds rep = equivalence_ratios(f, b, e, hp, run.tol);

  CsvTable t(with_provenance({"i", "kind_b", "kind_e", "f_b", "f_e", "ratio", "lower", "upper", "ok"}));
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    add_row(t,
            {std::to_string(i + 1), std::string(to_string(rep.kind_b)),
             std::string(to_string(rep.kind_e)), format_double(r.fb), format_double(r.fe),
             format_double(r.ratio), format_double(r.lower), format_double(r.upper),
             r.ok ? "1" : "0"},
            run, "bounds");
  }
  emit_json(cfg, equivalence_report_json(rep, run.prov));
  emit_csv(cfg, t);
  return rep.all_ok ? kExitOk : kExitViolation;
}

int cmd_random(const Config& cfg, std::size_t supports, std::size_t count, const std::string& out_dir,
               const std::string& field_name) {
  const Run run = resolve(cfg);
  ScalarField field;
  if (field_name == "R") {
    field = ScalarField::Real;
  } else if (field_name == "C") {
    field = ScalarField::Complex;
  } else {
    throw InvalidArgument("--field must be R or C");
  }
  if (cfg.n == 0 || supports < cfg.n) {
    throw InvalidArgument("--supports must be at least --n (and --n positive)");
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);
  Rng rng(run.seed);
  CsvTable t(with_provenance({"index", "file", "n", "supports"}));
  for (std::size_t i = 0; i < count; ++i) {
    const NormSpec f = random_norm(rng, field, cfg.n, supports);
    auto j = nlohmann::ordered_json::parse(norm_to_json(f));
    j["provenance"] = {{"tool_version", std::string(tool_version())},
                       {"seed", run.seed},
                       {"rng", std::string(Rng::kName)},
                       {"index", i}};
    char name[32];
    std::snprintf(name, sizeof name, "norm_%05zu.json", i);
    if (out_dir.empty()) {
      std::cout << j.dump() << "\n";
    } else {
      write_file((fs::path(out_dir) / name).string(), j.dump(2) + "\n");
    }
    add_row(t, {std::to_string(i), out_dir.empty() ? "" : name, std::to_string(cfg.n),
                std::to_string(supports)},
            run, "gaussian");
  }
  emit_csv(cfg, t);
  return kExitOk;
}

int cmd_oracle(const Config& cfg, const std::string& mode_name, std::size_t resolution) {
  const Run run = resolve(cfg);
  const NormSpec f = load_norm(cfg);
  OptMode mode;
  if (mode_name == "min") {
    mode = OptMode::Min;
  } else if (mode_name == "max") {
    mode = OptMode::Max;
  } else {
    throw InvalidArgument("--mode must be min or max");
  }
  const auto whole = Subspace::whole(f.field(), f.dim());
  const SphereOptResult g = grid_oracle(f, whole, mode, resolution);
  const SphereOptResult a =
      mode == OptMode::Max ? max_on_sphere(f, whole) : min_on_sphere(f, whole, sphere_options(cfg, run));

  nlohmann::ordered_json j;
  j["mode"] = std::string(to_string(mode));
  j["resolution"] = resolution;
  j["grid"] = {{"value", g.value}, {"argopt", format_vector(g.argopt)}};
  j["solver"] = {{"value", a.value},
                 {"argopt", format_vector(a.argopt)},
                 {"method", std::string(to_string(a.method))}};
  j["difference"] = std::abs(a.value - g.value);
  nlohmann::ordered_json tol;
  for (const auto& [k, v] : run.tol.entries()) tol[k] = v;
  j["provenance"] = {{"tool_version", std::string(tool_version())},
                     {"seed", run.seed},
                     {"rng", std::string(Rng::kName)},
                     {"tolerances", tol}};
  emit_json(cfg, j.dump(2));

  CsvTable t(with_provenance({"mode", "source", "value", "argopt"}));
  add_row(t, {std::string(to_string(mode)), "grid", format_double(g.value), format_vector(g.argopt)},
          run, to_string(g.method));
  add_row(t, {std::string(to_string(mode)), "solver", format_double(a.value), format_vector(a.argopt)},
          run, to_string(a.method));
  emit_csv(cfg, t);
  return kExitOk;
}

void add_norm_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--norm", cfg.norm_path, "Norm JSON file");
  sub->add_option("--construct", cfg.construct, "Built-in family: min or max");
  sub->add_option("--n", cfg.n, "Dimension");
  sub->add_option("--s", cfg.s, "Min family parameter, 1e-4 <= s < 1");
  sub->add_option("--c", cfg.c, "Max family parameter, 0 < c < 1");
  sub->add_option("--alpha", cfg.alpha, "Max family angle (accepts forms like 0.995pi)");
}

void add_common_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--seed", cfg.seed, "RNG seed (default: EXTREMAL_SEED or built-in)");
  sub->add_option("--tol", cfg.tol, "Tolerance override NAME=VAL (repeatable)");
  sub->add_option("--csv", cfg.csv_path, "CSV output path");
  sub->add_option("--json", cfg.json_path, "JSON output path (default: stdout)");
  sub->add_flag("--no-timestamp", cfg.no_timestamp, "Omit the timestamp line from CSV output");
  sub->add_option("--starts", cfg.starts, "Random starts per sphere minimization");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal bases of finitely generated norms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tool_version()));
  Config cfg;

  auto* basis = app.add_subcommand("basis", "Compute f-minimal and f-maximal bases");
  add_norm_options(basis, cfg);
  add_common_options(basis, cfg);
  basis->add_option("--kind", cfg.kind, "minimal, maximal or both");

  std::string basis_path;
  auto* verify = app.add_subcommand("verify", "Check the upper ratio bound for a basis");
  add_norm_options(verify, cfg);
  add_common_options(verify, cfg);
  verify->add_option("--kind", cfg.kind, "minimal or maximal");
  verify->add_option("--basis", basis_path, "External basis JSON file");

  auto* sweep = app.add_subcommand("sweep", "Sweep a construction family over a parameter grid");
  add_norm_options(sweep, cfg);
  add_common_options(sweep, cfg);
  sweep->add_option("--grid", cfg.grid, "Grid, e.g. \"n=2,3;s=0.1,0.01\"")->required();
  sweep->add_option("--svg", cfg.svg_path, "SVG plot output path");

  std::string b_src = "minimal", e_src = "maximal", hp_b, hp_e;
  auto* equiv = app.add_subcommand("equiv", "Compare two bases of the same norm");
  add_norm_options(equiv, cfg);
  add_common_options(equiv, cfg);
  equiv->add_option("--b", b_src, "minimal, maximal or basis JSON file");
  equiv->add_option("--e", e_src, "minimal, maximal or basis JSON file");
  equiv->add_option("--hp-b", hp_b, "Hereditary constants for an external B, comma separated");
  equiv->add_option("--hp-e", hp_e, "Hereditary constants for an external E, comma separated");

  std::size_t supports = 0, count = 1;
  std::string out_dir, field_name = "R";
  auto* random = app.add_subcommand("random", "Generate random norms");
  add_common_options(random, cfg);
  random->add_option("--n", cfg.n, "Dimension")->required();
  random->add_option("--supports", supports, "Support vectors per norm")->required();
  random->add_option("--count", count, "Number of norms");
  random->add_option("--out", out_dir, "Output directory (default: JSON lines on stdout)");
  random->add_option("--field", field_name, "R or C");

  std::string mode_name = "max";
  std::size_t resolution = 20000;
  auto* oracle = app.add_subcommand("oracle", "Brute-force grid optimum on the unit sphere");
  add_norm_options(oracle, cfg);
  add_common_options(oracle, cfg);
  oracle->add_option("--mode", mode_name, "min or max");
  oracle->add_option("--resolution", resolution, "Grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*basis) {
      cfg.command = "basis";
      return cmd_basis(cfg);
    }
    if (*verify) {
      cfg.command = "verify";
      return cmd_verify(cfg, basis_path);
    }
    if (*sweep) {
      cfg.command = "sweep";
      return cmd_sweep(cfg);
    }
    if (*equiv) {
      cfg.command = "equiv";
      return cmd_equiv(cfg, b_src, e_src, hp_b, hp_e);
    }
    if (*random) {
      cfg.command = "random";
      return cmd_random(cfg, supports, count, out_dir, field_name);
    }
    cfg.command = "oracle";
    return cmd_oracle(cfg, mode_name, resolution);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
