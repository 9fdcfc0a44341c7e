#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trucksim/scenario.hpp"

namespace trucksim {

// ---- Route / weather / city-temperature files ----------------------------------------

// Route file: CSV (header: lat,lon,s_m,v_lim_mps,z_m[,heading_deg]) or JSON array of
// objects with the same keys. Format chosen by file extension (.csv / .json).
RouteProfile load_route(const std::string& path);
void save_route_csv(const RouteProfile& route, const std::string& path);

// Weather file: JSON {day_type, date, samples: [{T_amb_K, rho_a?, v_w_mps, theta_w_deg}]}.
WeatherTrace load_weather(const std::string& path);
void save_weather_json(const WeatherTrace& trace, const std::string& path);

struct CityTemperature {
  std::string route_id;
  int day = 0;  // 1-based day of month
  std::string city;
  double t_K = 0.0;
};

// CSV with header route_id,day,city,T_K.
std::vector<CityTemperature> load_city_temperatures(const std::string& path);
void save_city_temperatures(const std::vector<CityTemperature>& rows, const std::string& path);

// ---- Representative temperatures and day-type selection ------------------------------

// Quadratic-mean (RMS) representative temperature of the cities along a route.
double representative_route_temperature(const std::vector<double>& temps_K);

struct DayTypeSelection {
  int cold_day = 0;     // 1-based day numbers
  int nominal_day = 0;
  int hot_day = 0;
  double cold_temp_K = 0.0;
  double nominal_temp_K = 0.0;
  double hot_temp_K = 0.0;
};

// Input: representative temperature per day, keyed by 1-based day number.
// cold = argmin, hot = argmax, nominal = closest to the median representative
// temperature (squared distance); all ties resolved to the earliest day.
DayTypeSelection select_day_types(const std::map<int, double>& rep_temp_by_day);

// Convenience: group city records of one month by (route, day), reduce to representative
// temperatures, and select day types per route.
std::map<std::string, DayTypeSelection> select_day_types_per_route(
    const std::vector<CityTemperature>& rows);

// ---- Route grouping (k-means over non-port endpoints) --------------------------------

struct RouteGrouping {
  std::vector<int> group_of_route;  // 1-based group id per input route
  std::vector<std::pair<double, double>> centers;  // lat/lon per group, index = id-1
  std::vector<double> center_port_km;              // distance of each center from the port
  int iterations = 0;
};

// Clusters routes by their non-port endpoint (inbound: first point, outbound: last point)
// with great-circle distances. Groups are numbered 1..k in ascending distance of the
// cluster center from the port. Deterministic for a given seed.
RouteGrouping group_routes(const std::vector<RouteProfile>& routes, int k, std::uint64_t seed,
                           double port_lat, double port_lon);

// ---- Itinerary construction -----------------------------------------------------------

struct ItineraryEntry {
  int month = 0;
  std::string route_id;
  int route_index = -1;    // into the supplied route list
  int weather_index = -1;  // into the month's weather pool
  double gross_mass_kg = 0.0;
  double distance_km = 0.0;
};

// Samples (route, weather, mass) uniformly until the accumulated distance reaches
// target_km. Masses outside [mass_min_kg, mass_max_kg] are rejected and redrawn
// (infeasible loading). Deterministic for a given seed.
std::vector<ItineraryEntry> build_itinerary(const std::vector<RouteProfile>& routes,
                                            const std::vector<double>& gross_masses_kg,
                                            int weather_pool_size, int month, double target_km,
                                            double mass_min_kg, double mass_max_kg,
                                            std::uint64_t seed);

}  // namespace trucksim
