#pragma once

#include <string>
#include <vector>

namespace trucksim {

enum class TruckConfiguration { kBobtail, kTractorTrailer, kTractorFlatbed };

TruckConfiguration truck_configuration_from_string(const std::string& s);
std::string to_string(TruckConfiguration c);

struct RoutePoint {
  double lat = 0.0;
  double lon = 0.0;
  double s_m = 0.0;          // cumulative distance from route start
  double v_lim_mps = 0.0;
  double z_m = 0.0;          // elevation
  double heading_deg = 0.0;  // course over ground, degrees clockwise from north
};

class RouteProfile {
 public:
  std::string id;
  std::string direction;  // "inbound" | "outbound" | "" when not applicable
  std::vector<RoutePoint> points;

  // Validates ordering/ranges, derives headings when absent, computes segment grades.
  // Grades outside ±0.25 are clamped (counted in clamped_grades).
  void finalize(bool headings_present);

  double length_m() const { return points.empty() ? 0.0 : points.back().s_m; }
  std::size_t segment_index(double s) const;  // segment [i, i+1] containing s, clamped

  double grade_at(double s) const;        // rise/run of the containing segment
  double speed_limit_at(double s) const;  // piecewise constant per segment start
  double heading_at(double s) const;
  double elevation_at(double s) const;  // linear in s

  const std::vector<double>& grades() const { return grade_; }
  int clamped_grades() const { return clamped_grades_; }

 private:
  std::vector<double> grade_;  // per segment, size points-1
  int clamped_grades_ = 0;
};

struct WeatherSample {
  double t_amb_K = 293.15;
  double rho_a = 0.0;  // <= 0 means "not measured": derive from temperature
  double v_w_mps = 0.0;
  double theta_w_deg = 0.0;  // direction wind blows toward, degrees from north

  double density() const;
};

struct WeatherTrace {
  std::string day_type = "nominal";  // cold | nominal | hot
  std::string date;
  std::vector<WeatherSample> samples;  // 1 sample = constant; else aligned to route points
};

// A runnable unit: one route, one weather day, one loading condition.
struct Scenario {
  std::string id;
  RouteProfile route;
  WeatherTrace weather;
  TruckConfiguration configuration = TruckConfiguration::kTractorTrailer;
  double gross_mass_kg = 0.0;  // 0 = use vehicle default

  // Optional analysis metadata carried through to results.
  int group = 0;  // 0 = ungrouped
  int month = 0;  // 0 = unspecified

  // Weather sample governing position s (piecewise per route segment).
  const WeatherSample& weather_at(double s) const;
  void validate() const;  // alignment and basic sanity; throws ValidationError
};

}  // namespace trucksim
