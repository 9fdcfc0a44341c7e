#include "trucksim/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "trucksim/errors.hpp"
#include "trucksim/geo.hpp"
#include "trucksim/units.hpp"

namespace trucksim {

TruckConfiguration truck_configuration_from_string(const std::string& s) {
  if (s == "bobtail") return TruckConfiguration::kBobtail;
  if (s == "tractor_trailer") return TruckConfiguration::kTractorTrailer;
  if (s == "tractor_flatbed") return TruckConfiguration::kTractorFlatbed;
  throw ValidationError("unknown truck configuration: '" + s +
                        "' (expected bobtail|tractor_trailer|tractor_flatbed)");
}

std::string to_string(TruckConfiguration c) {
  switch (c) {
    case TruckConfiguration::kBobtail: return "bobtail";
    case TruckConfiguration::kTractorTrailer: return "tractor_trailer";
    case TruckConfiguration::kTractorFlatbed: return "tractor_flatbed";
  }
  return "tractor_trailer";
}

void RouteProfile::finalize(bool headings_present) {
  if (points.size() < 2) {
    throw ValidationError("route '" + id + "': needs at least 2 points, got " +
                          std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RoutePoint& p = points[i];
    if (i > 0 && !(p.s_m > points[i - 1].s_m)) {
      throw ValidationError("route '" + id + "': s_m not strictly increasing at record " +
                            std::to_string(i + 1));
    }
    if (!(p.v_lim_mps > 0.0)) {
      throw ValidationError("route '" + id + "': v_lim_mps must be > 0 at record " +
                            std::to_string(i + 1));
    }
    if (std::abs(p.lat) > 90.0 || std::abs(p.lon) > 180.0) {
      throw ValidationError("route '" + id + "': lat/lon out of range at record " +
                            std::to_string(i + 1));
    }
  }
  if (!headings_present) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
      points[i].heading_deg =
          initial_bearing_deg(points[i].lat, points[i].lon, points[i + 1].lat, points[i + 1].lon);
    }
    points.back().heading_deg = points[points.size() - 2].heading_deg;
  }
  grade_.resize(points.size() - 1);
  clamped_grades_ = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    double ds = points[i + 1].s_m - points[i].s_m;
    double g = (points[i + 1].z_m - points[i].z_m) / ds;
    if (std::abs(g) > 0.25) {
      g = std::clamp(g, -0.25, 0.25);
      ++clamped_grades_;
    }
    grade_[i] = g;
  }
}

std::size_t RouteProfile::segment_index(double s) const {
  if (points.size() < 2 || s <= points.front().s_m) return 0;
  if (s >= points[points.size() - 2].s_m) return points.size() - 2;
  auto it = std::upper_bound(points.begin(), points.end(), s,
                             [](double v, const RoutePoint& p) { return v < p.s_m; });
  return static_cast<std::size_t>(it - points.begin()) - 1;
}

double RouteProfile::grade_at(double s) const { return grade_[segment_index(s)]; }

double RouteProfile::speed_limit_at(double s) const {
  return points[segment_index(s)].v_lim_mps;
}

double RouteProfile::heading_at(double s) const { return points[segment_index(s)].heading_deg; }

double RouteProfile::elevation_at(double s) const {
  std::size_t i = segment_index(s);
  const RoutePoint& a = points[i];
  const RoutePoint& b = points[i + 1];
  double t = std::clamp((s - a.s_m) / (b.s_m - a.s_m), 0.0, 1.0);
  return a.z_m + t * (b.z_m - a.z_m);
}

double WeatherSample::density() const {
  return rho_a > 0.0 ? rho_a : air_density_from_temperature(t_amb_K);
}

const WeatherSample& Scenario::weather_at(double s) const {
  if (weather.samples.size() == 1) return weather.samples.front();
  return weather.samples[route.segment_index(s)];
}

void Scenario::validate() const {
  if (route.points.size() < 2) {
    throw ValidationError("scenario '" + id + "': route has fewer than 2 points");
  }
  if (weather.samples.empty()) {
    throw ValidationError("scenario '" + id + "': weather trace has no samples");
  }
  if (weather.samples.size() != 1 && weather.samples.size() != route.points.size()) {
    throw ValidationError("scenario '" + id + "': weather samples (" +
                          std::to_string(weather.samples.size()) +
                          ") must be 1 or match route points (" +
                          std::to_string(route.points.size()) + ")");
  }
  for (std::size_t i = 0; i < weather.samples.size(); ++i) {
    const WeatherSample& w = weather.samples[i];
    if (!(w.t_amb_K > 150.0 && w.t_amb_K < 350.0)) {
      throw ValidationError("scenario '" + id + "': implausible T_amb_K at sample " +
                            std::to_string(i + 1));
    }
    if (w.v_w_mps < 0.0) {
      throw ValidationError("scenario '" + id + "': negative wind speed at sample " +
                            std::to_string(i + 1));
    }
  }
  if (gross_mass_kg < 0.0) {
    throw ValidationError("scenario '" + id + "': negative gross mass");
  }
}

}  // namespace trucksim
