#include "wwsim/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    const auto item = trim(s.substr(0, comma));
    if (!item.empty()) out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_number_with_unit(std::string_view text,
                              const std::map<std::string, double, std::less<>>& units,
                              std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || !std::isfinite(value))
    throw ConfigError("bad " + std::string(what) + " value '" + std::string(text) + "'");
  const std::string_view suffix = trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr)));
  if (suffix.empty()) return value;
  const auto it = units.find(suffix);
  if (it == units.end())
    throw ConfigError("bad " + std::string(what) + " unit '" + std::string(suffix) + "'");
  return value * it->second;
}

const std::map<std::string, double, std::less<>> kLengthUnits{
    {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"\xC2\xB5m", 1e-6},
    {"\xCE\xBCm", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}};

const std::map<std::string, double, std::less<>> kAngleUnits{
    {"rad", 1.0}, {"mrad", 1e-3}, {"urad", 1e-6}, {"deg", std::numbers::pi / 180.0}};

bool parse_bool(std::string_view v) {
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw ConfigError("bad boolean '" + std::string(v) + "'");
}

double parse_plain(std::string_view v) {
  return parse_number_with_unit(v, {}, "numeric");
}

long parse_integer(std::string_view v) {
  v = trim(v);
  long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("bad integer '" + std::string(v) + "'");
  return out;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json feasibility_to_json(const FeasibilityReport& f) {
  return {{"half_fringe_angle_rad", number_or_null(f.half_fringe_angle_rad)},
          {"half_fringe_angle_small_rad", f.half_fringe_angle_small_rad},
          {"focusing_angle_rad", f.focusing_angle_rad},
          {"spot_width_m", number_or_null(f.spot_width_m)},
          {"fraunhofer_distance_m", f.fraunhofer_distance_m},
          {"collimation_ok", f.collimation_ok},
          {"spot_fits_slit", f.spot_fits_slit},
          {"fraunhofer_ok", f.fraunhofer_ok},
          {"messages", f.messages}};
}

json geometry_to_json(const SlitGeometry& g) {
  json j = {{"wavelength_m", g.wavelength_m},
            {"slit_width_m", g.slit_width_m},
            {"slit_separation_m", g.slit_separation_m},
            {"screen_distance_m", g.screen_distance_m},
            {"fringe_period_m", fringe_period(g)}};
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  out << text;
  out.flush();
  if (!out) throw IoError("write failed", path.string());
}

}  // namespace

std::string_view to_string(Alignment a) {
  switch (a) {
    case Alignment::CoverBoth: return "cover_both";
    case Alignment::FocusA: return "focus_a";
    case Alignment::FocusB: return "focus_b";
  }
  return "unknown";
}

std::string_view to_string(BeamKind k) {
  switch (k) {
    case BeamKind::Plane: return "plane";
    case BeamKind::Gaussian: return "gaussian";
    case BeamKind::Bessel: return "bessel";
  }
  return "unknown";
}

double parse_length(std::string_view text) {
  return parse_number_with_unit(text, kLengthUnits, "length");
}

double parse_angle(std::string_view text) {
  return parse_number_with_unit(text, kAngleUnits, "angle");
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// ScenarioConfig

void ScenarioConfig::validate() const {
  try {
    geometry.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (models.empty() && !oracle) throw ConfigError("request at least one model or the oracle");
  if (beam.alignment != Alignment::CoverBoth) {
    const bool has_spot = (beam.kind == BeamKind::Gaussian && beam.waist_m) ||
                          (beam.kind == BeamKind::Bessel && beam.radial_wavenumber_per_m);
    if (!has_spot)
      throw ConfigError("focused alignment requires a beam spot parameter "
                        "(beam_waist for gaussian, bessel_core_radius or bessel_k_r for bessel)");
  }
  if (beam.kind == BeamKind::Gaussian && !beam.waist_m)
    throw ConfigError("gaussian beam requires beam_waist");
  if (beam.kind == BeamKind::Bessel && !beam.radial_wavenumber_per_m)
    throw ConfigError("bessel beam requires bessel_core_radius or bessel_k_r");
  try {
    validate_beam();
    quadrature.validate();
    grid().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (washout && (!(washout->theta_rad >= 0.0) || washout->n_tilts < 1 || washout->n_tilts % 2 == 0))
    throw ConfigError("washout requires theta >= 0 and an odd washout_tilts >= 1");
  if (model_params.alpha < 0.0 || model_params.beta < 0.0 ||
      (model_params.alpha == 0.0 && model_params.beta == 0.0))
    throw ConfigError("alpha and beta must be nonnegative and not both zero");
}

void ScenarioConfig::validate_beam() const { wwsim::validate(beam_profile()); }

double ScenarioConfig::beam_center_m() const {
  if (beam.center_m) return *beam.center_m;
  switch (beam.alignment) {
    case Alignment::FocusA: return geometry.slit_a_center_m();
    case Alignment::FocusB: return geometry.slit_b_center_m();
    case Alignment::CoverBoth: return 0.0;
  }
  return 0.0;
}

BeamProfile ScenarioConfig::beam_profile() const {
  switch (beam.kind) {
    case BeamKind::Plane: return PlaneWave{beam.tilt_rad};
    case BeamKind::Gaussian: return GaussianBeam{beam.waist_m.value_or(0.0), beam_center_m()};
    case BeamKind::Bessel:
      return BesselBeam{beam.radial_wavenumber_per_m.value_or(0.0), beam_center_m(),
                        beam.ring_phase_flips};
  }
  return PlaneWave{};
}

ApertureSet ScenarioConfig::apertures() const {
  ApertureSet set = ApertureSet::two_slit(geometry);
  if (beam.kind == BeamKind::Bessel && beam.dark_ring_phase) {
    if (beam.alignment == Alignment::FocusA) set.intervals[1].extra_phase_rad = kBesselDarkRingPhase;
    if (beam.alignment == Alignment::FocusB) set.intervals[0].extra_phase_rad = kBesselDarkRingPhase;
  }
  return set;
}

GridSpec ScenarioConfig::grid() const {
  const GridSpec lobe = central_lobe_grid(geometry, beam_center_m(), grid_points);
  return {grid_min_m.value_or(lobe.min_m), grid_max_m.value_or(lobe.max_m), grid_points};
}

double ScenarioConfig::focusing_angle() const {
  if (focusing_angle_rad) return *focusing_angle_rad;
  return washout ? washout->theta_rad : 0.0;
}

double ScenarioConfig::spot_width() const {
  return spot_width_m.value_or(wwsim::spot_width(beam_profile()));
}

std::pair<double, double> ScenarioConfig::path_probabilities() const {
  switch (beam.alignment) {
    case Alignment::FocusA: return {1.0, 0.0};
    case Alignment::FocusB: return {0.0, 1.0};
    case Alignment::CoverBoth: return {0.5, 0.5};
  }
  return {0.5, 0.5};
}

// ---------------------------------------------------------------------------
// Parsing

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::optional<double> core_radius;
  std::optional<double> washout_theta;
  std::optional<long> washout_tilts;

  using Setter = std::function<void(std::string_view)>;
  const std::map<std::string, Setter, std::less<>> setters{
      {"name", [&](auto v) { cfg.name = std::string(v); }},
      {"output_dir", [&](auto v) { cfg.output_dir = std::string(v); }},
      {"wavelength", [&](auto v) { cfg.geometry.wavelength_m = parse_length(v); }},
      {"slit_width", [&](auto v) { cfg.geometry.slit_width_m = parse_length(v); }},
      {"slit_separation", [&](auto v) { cfg.geometry.slit_separation_m = parse_length(v); }},
      {"screen_distance", [&](auto v) { cfg.geometry.screen_distance_m = parse_length(v); }},
      {"beam",
       [&](auto v) {
         if (v == "plane") cfg.beam.kind = BeamKind::Plane;
         else if (v == "gaussian") cfg.beam.kind = BeamKind::Gaussian;
         else if (v == "bessel") cfg.beam.kind = BeamKind::Bessel;
         else throw ConfigError("unknown beam '" + std::string(v) + "' (plane, gaussian, bessel)");
       }},
      {"beam_tilt", [&](auto v) { cfg.beam.tilt_rad = parse_angle(v); }},
      {"beam_waist", [&](auto v) { cfg.beam.waist_m = parse_length(v); }},
      {"beam_center", [&](auto v) { cfg.beam.center_m = parse_length(v); }},
      {"bessel_core_radius", [&](auto v) { core_radius = parse_length(v); }},
      {"bessel_k_r", [&](auto v) { cfg.beam.radial_wavenumber_per_m = parse_plain(v); }},
      {"ring_phase_flips", [&](auto v) { cfg.beam.ring_phase_flips = parse_bool(v); }},
      {"dark_ring_phase", [&](auto v) { cfg.beam.dark_ring_phase = parse_bool(v); }},
      {"alignment",
       [&](auto v) {
         if (v == "cover_both") cfg.beam.alignment = Alignment::CoverBoth;
         else if (v == "focus_a") cfg.beam.alignment = Alignment::FocusA;
         else if (v == "focus_b") cfg.beam.alignment = Alignment::FocusB;
         else
           throw ConfigError("unknown alignment '" + std::string(v) +
                             "' (cover_both, focus_a, focus_b)");
       }},
      {"models",
       [&](auto v) {
         cfg.models.clear();
         for (const auto& item : split_list(v)) {
           const auto m = model_from_string(item);
           if (!m) throw ConfigError("unknown model '" + item + "'");
           cfg.models.push_back(*m);
         }
       }},
      {"alpha", [&](auto v) { cfg.model_params.alpha = parse_plain(v); }},
      {"beta", [&](auto v) { cfg.model_params.beta = parse_plain(v); }},
      {"oracle", [&](auto v) { cfg.oracle = parse_bool(v); }},
      {"oracle_nodes", [&](auto v) { cfg.quadrature.nodes_per_interval = static_cast<int>(parse_integer(v)); }},
      {"oracle_tolerance", [&](auto v) { cfg.quadrature.relative_tolerance = parse_plain(v); }},
      {"oracle_max_refinements",
       [&](auto v) { cfg.quadrature.max_refinements = static_cast<int>(parse_integer(v)); }},
      {"washout_theta", [&](auto v) { washout_theta = parse_angle(v); }},
      {"washout_tilts", [&](auto v) { washout_tilts = parse_integer(v); }},
      {"focusing_angle", [&](auto v) { cfg.focusing_angle_rad = parse_angle(v); }},
      {"spot_width", [&](auto v) { cfg.spot_width_m = parse_length(v); }},
      {"grid_min", [&](auto v) { cfg.grid_min_m = parse_length(v); }},
      {"grid_max", [&](auto v) { cfg.grid_max_m = parse_length(v); }},
      {"grid_points", [&](auto v) { cfg.grid_points = parse_integer(v); }},
      {"normalization",
       [&](auto v) {
         if (v == "peak_single_slit") cfg.normalization = Normalization::PeakSingleSlit;
         else if (v == "unit_integral") cfg.normalization = Normalization::UnitIntegral;
         else
           throw ConfigError("unknown normalization '" + std::string(v) +
                             "' (peak_single_slit, unit_integral)");
       }},
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) throw ConfigError("unknown key '" + std::string(key) + "'", line_no);
    try {
      it->second(value);
    } catch (const ConfigError& e) {
      throw ConfigError("key '" + std::string(key) + "': " + e.what(), line_no);
    }
  }

  if (core_radius) {
    if (!(*core_radius > 0.0)) throw ConfigError("key 'bessel_core_radius': must be positive");
    cfg.beam.radial_wavenumber_per_m = bessel_wavenumber_for_core_radius(*core_radius);
  }
  if (washout_theta || washout_tilts) {
    cfg.washout = WashoutConfig{washout_theta.value_or(0.0),
                                static_cast<int>(washout_tilts.value_or(kDefaultWashoutTilts))};
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config", path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// Evaluation

const PatternSummary* ComparisonReport::find(std::string_view model) const {
  for (const auto& p : patterns)
    if (p.model == model) return &p;
  return nullptr;
}

ComparisonReport evaluate_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  ComparisonReport report;
  report.config = cfg;
  const SlitGeometry& g = cfg.geometry;
  report.feasibility = check_feasibility(g, cfg.focusing_angle(), cfg.spot_width());

  const GridSpec grid = cfg.grid();
  const auto [p_a, p_b] = cfg.path_probabilities();
  const double which_way = predictability(p_a, p_b);

  auto summarize = [&](std::string model, IntensityPattern pattern) {
    if (cfg.normalization == Normalization::UnitIntegral) normalize_unit_integral(pattern);
    PatternSummary s{std::move(model), std::move(pattern), 0.0, 0.0, {}};
    s.visibility_global = visibility_global(s.pattern);
    s.visibility_fringe_local = visibility_fringe_local(s.pattern, g);
    s.duality = duality_report(WhichWayKind::Predictability, which_way, s.visibility_fringe_local);
    report.patterns.push_back(std::move(s));
  };

  for (ModelKind m : cfg.models) {
    IntensityPattern p =
        cfg.washout ? washout_pattern(analytic_under_tilt(m, g, grid, cfg.model_params),
                                      cfg.washout->theta_rad, cfg.washout->n_tilts)
                    : sample_pattern(m, g, grid, Normalization::PeakSingleSlit, cfg.model_params);
    summarize(std::string(to_string(m)), std::move(p));
  }

  if (cfg.oracle) {
    const BeamProfile beam = cfg.beam_profile();
    const ApertureSet apertures = cfg.apertures();
    IntensityPattern p =
        cfg.washout ? washout_pattern(oracle_under_tilt(beam, apertures, g, grid, cfg.quadrature),
                                      cfg.washout->theta_rad, cfg.washout->n_tilts)
                    : oracle_pattern(beam, apertures, g, grid, cfg.quadrature);
    summarize("oracle", std::move(p));

    const PatternSummary& oracle = report.patterns.back();
    for (std::size_t i = 0; i + 1 < report.patterns.size(); ++i) {
      report.divergences.push_back({report.patterns[i].model, oracle.model,
                                    pattern_divergence(report.patterns[i].pattern, oracle.pattern)});
    }
  }
  return report;
}

ComparisonReport run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir) {
  ComparisonReport report = evaluate_scenario(cfg);
  std::vector<std::filesystem::path> written;
  try {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory", out_dir.string());
    for (const auto& s : report.patterns) {
      const auto path = out_dir / (cfg.name + "_" + s.model + ".csv");
      written.push_back(path);
      emit_pattern_csv(s.pattern, path);
    }
    const auto json_path = out_dir / (cfg.name + "_summary.json");
    written.push_back(json_path);
    emit_summary_json(report, json_path);
  } catch (...) {
    for (const auto& p : written) {
      std::error_code ec;
      std::filesystem::remove(p, ec);
    }
    throw;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Output

void emit_pattern_csv(const IntensityPattern& p, const std::filesystem::path& path) {
  if (p.size() == 0) throw DomainError("refusing to write an empty pattern");
  std::string text = "x_m,intensity\n";
  text.reserve(static_cast<std::size_t>(p.size()) * 48);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    text += format_double(p.x_m(i));
    text += ',';
    text += format_double(p.intensity(i));
    text += '\n';
  }
  write_text(path, text);
}

IntensityPattern read_pattern_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read pattern", path.string());
  std::string line;
  if (!std::getline(in, line) || line != "x_m,intensity")
    throw IoError("missing 'x_m,intensity' header", path.string());
  std::vector<double> xs;
  std::vector<double> ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw IoError("malformed CSV row", path.string());
    double x = 0.0;
    double y = 0.0;
    const auto r1 = std::from_chars(line.data(), line.data() + comma, x);
    const auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), y);
    if (r1.ec != std::errc() || r2.ec != std::errc())
      throw IoError("malformed CSV number", path.string());
    xs.push_back(x);
    ys.push_back(y);
  }
  IntensityPattern p;
  p.x_m = Eigen::Map<const Eigen::ArrayXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  p.intensity = Eigen::Map<const Eigen::ArrayXd>(ys.data(), static_cast<Eigen::Index>(ys.size()));
  return p;
}

std::string summary_json(const ComparisonReport& report) {
  const ScenarioConfig& cfg = report.config;
  json j;
  j["tool"] = "wwsim";
  j["version"] = std::string(kToolVersion);
  j["scenario"] = cfg.name;
  j["geometry"] = geometry_to_json(cfg.geometry);

  json beam = {{"kind", std::string(to_string(cfg.beam.kind))},
               {"alignment", std::string(to_string(cfg.beam.alignment))},
               {"center_m", cfg.beam_center_m()},
               {"spot_width_m", number_or_null(cfg.spot_width())}};
  if (cfg.beam.kind == BeamKind::Plane) beam["tilt_rad"] = cfg.beam.tilt_rad;
  if (cfg.beam.waist_m) beam["waist_m"] = *cfg.beam.waist_m;
  if (cfg.beam.radial_wavenumber_per_m) {
    beam["radial_wavenumber_per_m"] = *cfg.beam.radial_wavenumber_per_m;
    beam["ring_phase_flips"] = cfg.beam.ring_phase_flips;
  }
  json phases = json::array();
  for (const auto& ap : cfg.apertures().intervals) phases.push_back(ap.extra_phase_rad);
  beam["aperture_phases_rad"] = phases;
  j["beam"] = beam;

  const auto [p_a, p_b] = cfg.path_probabilities();
  j["path_probabilities"] = {{"slit_a", p_a}, {"slit_b", p_b}};
  j["feasibility"] = feasibility_to_json(report.feasibility);
  j["washout"] = cfg.washout ? json{{"theta_rad", cfg.washout->theta_rad},
                                    {"n_tilts", cfg.washout->n_tilts}}
                             : json(nullptr);
  j["grid"] = {{"min_m", cfg.grid().min_m},
               {"max_m", cfg.grid().max_m},
               {"points", cfg.grid_points}};

  json patterns = json::array();
  for (const auto& s : report.patterns) {
    json entry = {{"model", s.model},
                  {"normalization", std::string(to_string(s.pattern.normalization))},
                  {"peak_scale_I0single", s.pattern.meta.scale_to_single_slit},
                  {"visibility_global", s.visibility_global},
                  {"visibility_fringe_local", s.visibility_fringe_local},
                  {"which_way_kind", std::string(to_string(s.duality.which_way_kind))},
                  {"P", s.duality.which_way_value},
                  {"duality_sum", s.duality.duality_sum},
                  {"inequality_satisfied", s.duality.inequality_satisfied},
                  {"csv", cfg.name + "_" + s.model + ".csv"}};
    if (s.model == "oracle") entry["quadrature_error"] = s.pattern.meta.quadrature_error;
    patterns.push_back(entry);
  }
  j["patterns"] = patterns;

  json divergences = json::array();
  for (const auto& d : report.divergences) {
    divergences.push_back({{"a", d.a},
                           {"b", d.b},
                           {"l2_relative", d.divergence.l2_relative},
                           {"sup_relative", d.divergence.sup_relative},
                           {"visibility_gap", d.divergence.visibility_gap}});
  }
  j["divergence"] = divergences;
  return j.dump(2) + "\n";
}

void emit_summary_json(const ComparisonReport& report, const std::filesystem::path& path) {
  write_text(path, summary_json(report));
}

std::string feasibility_json(const ScenarioConfig& cfg) {
  const FeasibilityReport f = check_feasibility(cfg.geometry, cfg.focusing_angle(), cfg.spot_width());
  json j = {{"geometry", geometry_to_json(cfg.geometry)},
            {"feasibility", feasibility_to_json(f)},
            {"ok", f.ok()}};
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, std::string_view parameter,
                            const std::vector<std::string>& values) {
  if (std::find(std::begin(kSweepParameters), std::end(kSweepParameters), parameter) ==
      std::end(kSweepParameters)) {
    std::string names;
    for (auto n : kSweepParameters) names += (names.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("unknown sweep parameter '" + std::string(parameter) + "' (valid: " + names +
                      ")");
  }

  std::vector<SweepRow> rows;
  for (const auto& text : values) {
    ScenarioConfig c = cfg;
    double value = 0.0;
    if (parameter == "theta") {
      value = parse_angle(text);
      c.washout = WashoutConfig{value, cfg.washout ? cfg.washout->n_tilts : kDefaultWashoutTilts};
      c.focusing_angle_rad = value;
    } else {
      value = parse_length(text);
      if (parameter == "spot_width") {
        if (c.beam.kind == BeamKind::Gaussian) c.beam.waist_m = 0.5 * value;
        else if (c.beam.kind == BeamKind::Bessel)
          c.beam.radial_wavenumber_per_m = bessel_wavenumber_for_core_radius(0.5 * value);
        else throw ConfigError("spot_width sweep requires a gaussian or bessel beam");
      } else if (parameter == "d") {
        c.geometry.slit_separation_m = value;
      } else if (parameter == "s") {
        c.geometry.slit_width_m = value;
      } else if (parameter == "D") {
        c.geometry.screen_distance_m = value;
      } else {
        c.geometry.wavelength_m = value;
      }
    }

    const ComparisonReport report = evaluate_scenario(c);
    SweepRow row{value, report.feasibility, kNaN, kNaN, kNaN};
    if (!c.models.empty()) row.visibility_model = report.patterns.front().visibility_fringe_local;
    if (c.oracle) row.visibility_oracle = report.patterns.back().visibility_fringe_local;
    if (!report.divergences.empty()) row.sup_divergence = report.divergences.front().divergence.sup_relative;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  auto num = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
  std::string out =
      "value,half_fringe_angle_rad,collimation_ok,spot_fits_slit,fraunhofer_ok,"
      "visibility_model,visibility_oracle,sup_divergence\n";
  for (const auto& r : rows) {
    out += num(r.value) + ',' + num(r.feasibility.half_fringe_angle_rad) + ',' +
           (r.feasibility.collimation_ok ? "1" : "0") + ',' +
           (r.feasibility.spot_fits_slit ? "1" : "0") + ',' +
           (r.feasibility.fraunhofer_ok ? "1" : "0") + ',' + num(r.visibility_model) + ',' +
           num(r.visibility_oracle) + ',' + num(r.sup_divergence) + '\n';
  }
  return out;
}

}  // namespace wwsim
