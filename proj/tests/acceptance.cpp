// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wwsim/analytic.hpp"
#include "wwsim/beam.hpp"
#include "wwsim/geometry.hpp"
#include "wwsim/metrics.hpp"
#include "wwsim/mzi.hpp"
#include "wwsim/oracle.hpp"
#include "wwsim/scenario.hpp"

using namespace wwsim;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_ms, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = ms <= budget_ms;
  const bool ok = out.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %d %s: %s (%.3f ms, budget %.0f ms%s)\n", ok ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), ms, budget_ms, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool within(double v, double target, double tol) { return std::abs(v - target) <= tol; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const SlitGeometry kHeNe{632.8e-9, 2e-6, 12.6e-6, 0.1};

}  // namespace

int main() {
  run(1, "worked numbers", 1.0, [] {
    const double phi = half_fringe_angle(kHeNe);
    const double zr = rayleigh_range(70e-6, 633e-9);
    const double skew = skew_angle(4e-6, 3e-3);
    const double tilt = bessel_tilt_shift_angle(kHeNe);
    const bool ok = within(phi, 25.1e-3, 0.2e-3) && within(zr, 2.43e-2, 0.02e-2) &&
                    within(skew, 1.33e-3, 0.05e-3) && within(tilt, 12.6e-3, 0.2e-3);
    return Outcome{ok, fmt("phi=%.4g mrad", phi * 1e3) + fmt(" Z_R=%.4g cm", zr * 1e2) +
                           fmt(" skew=%.4g mrad", skew * 1e3) + fmt(" tilt=%.4g mrad", tilt * 1e3)};
  });

  run(2, "envelope floor", 10.0, [] {
    const SlitGeometry g{0.63e-6, 2e-6, 12e-6, 0.1};
    const double x1 = -g.wavelength_m * g.screen_distance_m / g.slit_width_m;
    const double floor_a = single_slit_intensity(g, x1, g.slit_a_center_m());
    const double expected = std::pow(g.slit_width_m * g.slit_separation_m /
                                         (2 * g.wavelength_m * g.screen_distance_m), 2);
    const double quoted = 4e-8;
    // curve c in single-slit units: both slits each carry one single-slit peak
    const double curve_c = single_slit_units(ModelKind::EmptyWaveSum) * empty_wave_sum(g, x1);
    const bool ok = within(floor_a, expected, 0.02 * expected) && quoted >= 0.8 * floor_a &&
                    quoted <= 1.2 * floor_a && curve_c >= 5e-8 && curve_c <= 2e-7;
    return Outcome{ok, fmt("A floor=%.4g", floor_a) + fmt(" (sd/2lD)^2=%.4g", expected) +
                           fmt(" 4e-8/floor=%.3f", quoted / floor_a) + fmt(" curve c=%.3g I0single", curve_c)};
  });

  run(3, "oracle vs closed forms", 2000.0, [] {
    const auto& g = kHeNe;
    const GridSpec grid = central_lobe_grid(g, 0.0);
    const PlaneWave uniform{0.0};
    const auto both = oracle_pattern(uniform, ApertureSet::two_slit(g), g, grid);
    const auto single = oracle_pattern(uniform, ApertureSet::slit_a(g), g, grid);
    const auto eq_two = sample_pattern(ModelKind::StandardTwoSlit, g, grid);
    double sup_two = 0.0, sup_single = 0.0;
    for (Eigen::Index i = 0; i < grid.points; ++i) {
      sup_two = std::max(sup_two, std::abs(both.intensity(i) - eq_two.intensity(i)));
      sup_single = std::max(sup_single, std::abs(single.intensity(i) - single_slit_intensity(g, single.x_m(i), 0.0)));
    }
    const bool ok = sup_two <= 1e-8 && sup_single <= 1e-9;
    return Outcome{ok, fmt("two-slit sup=%.3g", sup_two) + fmt(" single sup=%.3g", sup_single)};
  });

  run(4, "model identities", 1000.0, [] {
    const auto& g = kHeNe;
    const GridSpec grid = central_lobe_grid(g, 0.0);
    const auto xs = grid.coordinates();
    double sum_gap = 0.0, mirror_gap = 0.0, beta0_gap = 0.0;
    for (double x : xs) {
      sum_gap = std::max(sum_gap, std::abs(empty_wave_sum(g, x) - (empty_wave_a(g, x) + empty_wave_b(g, x))));
      const double a = empty_wave_a(g, -x);
      mirror_gap = std::max(mirror_gap, std::abs(empty_wave_b(g, x) - a) / std::max(std::abs(a), 1e-300));
      const double env = single_slit_intensity(g, x, g.slit_a_center_m());
      beta0_gap = std::max(beta0_gap, std::abs(general_two_slit_intensity(g, x, 1.0, 0.0) - env));
    }
    // point-like slits: envelope pinned to 1
    const SlitGeometry point{g.wavelength_m, 1e-15, g.slit_separation_m, g.screen_distance_m};
    double point_gap = 0.0;
    for (double x : xs) point_gap = std::max(point_gap, std::abs(standard_two_slit(point, x) - fringe_factor(point, x)));
    const bool ok = sum_gap == 0.0 && mirror_gap <= 1e-15 && beta0_gap <= 1e-12 && point_gap <= 1e-10;
    return Outcome{ok, fmt("sum gap=%.3g", sum_gap) + fmt(" mirror=%.3g", mirror_gap) +
                           fmt(" beta=0 gap=%.3g", beta0_gap) + fmt(" point-slit gap=%.3g", point_gap)};
  });

  run(5, "duality headline", 5000.0, [] {
    ScenarioConfig cfg;
    cfg.name = "focus_a";
    cfg.beam.kind = BeamKind::Gaussian;
    cfg.beam.waist_m = 3e-6;
    cfg.beam.alignment = Alignment::FocusA;
    cfg.focusing_angle_rad = 1e-3;
    cfg.models = {ModelKind::EmptyWaveA};
    cfg.oracle = true;
    cfg.validate();
    const auto report = evaluate_scenario(cfg);
    const auto json = nlohmann::json::parse(summary_json(report));
    const nlohmann::json* wa = nullptr;
    const nlohmann::json* oracle = nullptr;
    for (const auto& p : json["patterns"]) {
      if (p["model"] == "empty_wave_a") wa = &p;
      if (p["model"] == "oracle") oracle = &p;
    }
    if (!wa || !oracle) return Outcome{false, "missing report in JSON"};
    const double wa_v = (*wa)["visibility_fringe_local"], wa_sum = (*wa)["duality_sum"];
    const double or_v = (*oracle)["visibility_fringe_local"], or_sum = (*oracle)["duality_sum"];
    const bool ok = (*wa)["P"] == 1.0 && within(wa_v, 1.0, 1e-6) && within(wa_sum, 2.0, 1e-6) &&
                    (*oracle)["P"] == 1.0 && or_v < 0.05 && or_sum >= 1.0 && or_sum <= 1.01;
    return Outcome{ok, fmt("model V=%.8f", wa_v) + fmt(" sum=%.8f", wa_sum) + fmt(" | oracle V=%.4g", or_v) +
                           fmt(" sum=%.6f", or_sum)};
  });

  run(6, "washout", 10000.0, [] {
    const auto& g = kHeNe;
    const double phi = half_fringe_angle(g);
    const GridSpec grid = default_grid(ModelKind::StandardTwoSlit, g);
    const auto base = analytic_under_tilt(ModelKind::StandardTwoSlit, g, grid);
    auto v = [&](double theta) { return visibility_fringe_local(washout_pattern(base, theta), g); };
    const double v0 = v(0.0), v10 = v(phi / 10), v1 = v(phi);
    bool monotone = true;
    double previous = v0;
    for (int k = 1; k <= 9; ++k) {
      const double cur = v(phi * k / 9);
      monotone = monotone && cur <= previous + 1e-6;
      previous = cur;
    }
    const bool ok = within(v0, 1.0, 1e-6) && v10 >= 0.97 && v1 <= 0.02 && monotone;
    return Outcome{ok, fmt("V(0)=%.6f", v0) + fmt(" V(phi/10)=%.4f", v10) + fmt(" V(phi)=%.4g", v1) +
                           (monotone ? " nonincreasing" : " NOT monotone")};
  });

  run(7, "interferometer suite", 100.0, [] {
    auto matches = [](const DualityReport& r, double p, double v, double sum) {
      return within(r.which_way_value, p, 1e-12) && within(r.visibility, v, 1e-12) &&
             within(r.duality_sum, sum, 1e-12);
    };
    const auto knockout = MziConfig::symmetric(MziMode::KnockoutB_EmptyWave);
    bool ok = matches(mzi_duality(MziConfig::symmetric(MziMode::Open)), 0, 1, 1) &&
              matches(mzi_duality(MziConfig::symmetric(MziMode::BlockedB)), 1, 0, 1) &&
              matches(mzi_duality(knockout), 1, 1, 2) && within(detected_rate(knockout), 0.5, 1e-12);
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double a = u(rng), b = u(rng);
      worst = std::max(worst, std::abs(asymmetric_duality(a, b).duality_sum - 1.0));
    }
    ok = ok && worst <= 1e-12;
    return Outcome{ok, "open (0,1,1) blocked (1,0,1) knockout (1,1,2) rate " +
                           fmt("%.3f", detected_rate(knockout)) + fmt("; asymmetric worst |sum-1|=%.2g", worst)};
  });

  run(8, "quarter-fringe shift", 2000.0, [] {
    const auto& g = kHeNe;
    const double period = fringe_period(g);
    // core on A; B sits on the first bright ring
    const BesselBeam beam{3.8317059702075123 / g.slit_separation_m, g.slit_a_center_m(), true};
    const GridSpec grid{-2 * period, 2 * period, 4001};
    auto fringe_max = [&](const IntensityPattern& p) {
      Eigen::Index best = -1;
      for (Eigen::Index i = 1; i + 1 < p.size(); ++i) {
        const auto& y = p.intensity;
        if (y(i - 1) < y(i) && y(i) >= y(i + 1) && (best < 0 || std::abs(p.x_m(i)) < std::abs(p.x_m(best))))
          best = i;
      }
      const double ym = p.intensity(best - 1), y0 = p.intensity(best), yp = p.intensity(best + 1);
      return p.x_m(best) + 0.5 * (ym - yp) / (ym - 2 * y0 + yp) * p.spacing();
    };
    const auto plain = oracle_pattern(beam, ApertureSet::two_slit(g, 0.0), g, grid);
    const auto shifted = oracle_pattern(beam, ApertureSet::two_slit(g, kBesselDarkRingPhase), g, grid);
    const double moved = std::abs(std::remainder(fringe_max(shifted) - fringe_max(plain), period));
    const double target = g.wavelength_m * g.screen_distance_m / (4 * g.slit_separation_m);
    const bool ok = std::abs(moved - target) <= 0.02 * period;
    return Outcome{ok, fmt("shift=%.5f P", moved / period) + fmt(" target=%.5f P", target / period)};
  });

  run(9, "determinism and format", 30000.0, [] {
    const fs::path root = fs::temp_directory_path() / "wwsim_acceptance";
    fs::remove_all(root);
    int files = 0, reports = 0;
    bool ok = true;
    for (const auto& entry : fs::directory_iterator(WWSIM_SCENARIO_DIR)) {
      if (entry.path().extension() != ".cfg") continue;
      const auto cfg = load_config(entry.path());
      run_scenario(cfg, root / "a");
      run_scenario(cfg, root / "b");
      const auto json = nlohmann::json::parse(slurp(root / "a" / (cfg.name + "_summary.json")));
      for (const auto& p : json["patterns"]) {
        const double P = p["P"], V = p["visibility_fringe_local"], sum = p["duality_sum"];
        ok = ok && sum == P * P + V * V && p["inequality_satisfied"] == (sum <= 1.0 + kDualityEpsilon);
        const std::string csv = p["csv"];
        const auto first = slurp(root / "a" / csv);
        ok = ok && first == slurp(root / "b" / csv) && first.rfind("x_m,intensity\n", 0) == 0;
        ++files;
        ++reports;
      }
    }
    fs::remove_all(root);
    ok = ok && files > 0;
    return Outcome{ok, std::to_string(files) + " CSV files byte-identical, " + std::to_string(reports) +
                           " reports self-consistent"};
  });
  return failures == 0 ? 0 : 1;
}
