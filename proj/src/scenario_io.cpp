#include "trucksim/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trucksim/errors.hpp"
#include "trucksim/geo.hpp"
#include "trucksim/units.hpp"

namespace trucksim {

namespace {

using nlohmann::json;

std::string basename_no_ext(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string name = (slash == std::string::npos) ? path : path.substr(slash + 1);
  std::size_t dot = name.find_last_of('.');
  return (dot == std::string::npos) ? name : name.substr(0, dot);
}

bool has_extension(const std::string& path, const char* ext) {
  std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos) return false;
  std::string e = path.substr(dot + 1);
  std::transform(e.begin(), e.end(), e.begin(), ::tolower);
  return e == ext;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim
    std::size_t a = field.find_first_not_of(" \t\r");
    std::size_t b = field.find_last_not_of(" \t\r");
    out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ValidationError(where + ": cannot parse number '" + s + "'");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  return out;
}

std::string infer_direction(const std::string& id) {
  auto ends_with = [&](const char* suf) {
    std::string s(suf);
    return id.size() >= s.size() && id.compare(id.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with("_in") || ends_with("_inbound")) return "inbound";
  if (ends_with("_out") || ends_with("_outbound")) return "outbound";
  return "";
}

RouteProfile load_route_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty route file");
  std::vector<std::string> header = split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* req : {"lat", "lon", "s_m", "v_lim_mps", "z_m"}) {
    if (!col.count(req)) throw ValidationError(path + ": missing required column '" + req + "'");
  }
  bool has_heading = col.count("heading_deg") > 0;

  RouteProfile route;
  route.id = basename_no_ext(path);
  route.direction = infer_direction(route.id);
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() < header.size()) {
      throw ValidationError(path + " row " + std::to_string(row) + ": expected " +
                            std::to_string(header.size()) + " fields, got " +
                            std::to_string(f.size()));
    }
    std::string where = path + " row " + std::to_string(row);
    RoutePoint p;
    p.lat = parse_double(f[col["lat"]], where);
    p.lon = parse_double(f[col["lon"]], where);
    p.s_m = parse_double(f[col["s_m"]], where);
    p.v_lim_mps = parse_double(f[col["v_lim_mps"]], where);
    p.z_m = parse_double(f[col["z_m"]], where);
    if (has_heading) p.heading_deg = parse_double(f[col["heading_deg"]], where);
    route.points.push_back(p);
  }
  route.finalize(has_heading);
  return route;
}

RouteProfile load_route_json(const std::string& path) {
  std::ifstream in = open_input(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(path + ": invalid JSON: " + e.what());
  }
  if (!j.is_array()) throw ValidationError(path + ": route JSON must be an array of points");
  RouteProfile route;
  route.id = basename_no_ext(path);
  route.direction = infer_direction(route.id);
  bool has_heading = true;
  int idx = 0;
  for (const auto& e : j) {
    ++idx;
    std::string where = path + " point " + std::to_string(idx);
    for (const char* req : {"lat", "lon", "s_m", "v_lim_mps", "z_m"}) {
      if (!e.contains(req)) throw ValidationError(where + ": missing key '" + req + "'");
    }
    RoutePoint p;
    try {
      p.lat = e.at("lat").get<double>();
      p.lon = e.at("lon").get<double>();
      p.s_m = e.at("s_m").get<double>();
      p.v_lim_mps = e.at("v_lim_mps").get<double>();
      p.z_m = e.at("z_m").get<double>();
      if (e.contains("heading_deg")) {
        p.heading_deg = e.at("heading_deg").get<double>();
      } else {
        has_heading = false;
      }
    } catch (const json::exception& ex) {
      throw ValidationError(where + ": " + ex.what());
    }
    route.points.push_back(p);
  }
  route.finalize(has_heading);
  return route;
}

}  // namespace

RouteProfile load_route(const std::string& path) {
  if (has_extension(path, "json")) return load_route_json(path);
  if (has_extension(path, "csv")) return load_route_csv(path);
  throw ValidationError(path + ": unsupported route format (expected .csv or .json)");
}

void save_route_csv(const RouteProfile& route, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "lat,lon,s_m,v_lim_mps,z_m,heading_deg\n";
  char buf[256];
  for (const RoutePoint& p : route.points) {
    std::snprintf(buf, sizeof(buf), "%.7f,%.7f,%.3f,%.4f,%.3f,%.3f\n", p.lat, p.lon, p.s_m,
                  p.v_lim_mps, p.z_m, p.heading_deg);
    out << buf;
  }
}

WeatherTrace load_weather(const std::string& path) {
  std::ifstream in = open_input(path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError(path + ": invalid JSON: " + e.what());
  }
  WeatherTrace trace;
  trace.day_type = j.value("day_type", "nominal");
  trace.date = j.value("date", "");
  if (!j.contains("samples") || !j.at("samples").is_array() || j.at("samples").empty()) {
    throw ValidationError(path + ": weather file needs a non-empty 'samples' array");
  }
  int idx = 0;
  for (const auto& e : j.at("samples")) {
    ++idx;
    std::string where = path + " sample " + std::to_string(idx);
    if (!e.contains("T_amb_K")) throw ValidationError(where + ": missing key 'T_amb_K'");
    WeatherSample s;
    try {
      s.t_amb_K = e.at("T_amb_K").get<double>();
      s.rho_a = e.value("rho_a", 0.0);
      s.v_w_mps = e.value("v_w_mps", 0.0);
      s.theta_w_deg = e.value("theta_w_deg", 0.0);
    } catch (const json::exception& ex) {
      throw ValidationError(where + ": " + ex.what());
    }
    trace.samples.push_back(s);
  }
  return trace;
}

void save_weather_json(const WeatherTrace& trace, const std::string& path) {
  nlohmann::ordered_json j;
  j["day_type"] = trace.day_type;
  j["date"] = trace.date;
  j["samples"] = nlohmann::ordered_json::array();
  for (const WeatherSample& s : trace.samples) {
    nlohmann::ordered_json e;
    e["T_amb_K"] = s.t_amb_K;
    if (s.rho_a > 0.0) e["rho_a"] = s.rho_a;
    e["v_w_mps"] = s.v_w_mps;
    e["theta_w_deg"] = s.theta_w_deg;
    j["samples"].push_back(e);
  }
  std::ofstream out = open_output(path);
  out << j.dump(2) << "\n";
}

std::vector<CityTemperature> load_city_temperatures(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string line;
  if (!std::getline(in, line)) throw ValidationError(path + ": empty city-temperature file");
  std::vector<std::string> header = split_csv_line(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* req : {"route_id", "day", "city", "T_K"}) {
    if (!col.count(req)) throw ValidationError(path + ": missing required column '" + req + "'");
  }
  std::vector<CityTemperature> rows;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> f = split_csv_line(line);
    if (f.size() < header.size()) {
      throw ValidationError(path + " row " + std::to_string(row) + ": too few fields");
    }
    std::string where = path + " row " + std::to_string(row);
    CityTemperature ct;
    ct.route_id = f[col["route_id"]];
    ct.day = static_cast<int>(parse_double(f[col["day"]], where));
    ct.city = f[col["city"]];
    ct.t_K = parse_double(f[col["T_K"]], where);
    if (ct.day < 1) throw ValidationError(where + ": day must be >= 1");
    rows.push_back(ct);
  }
  return rows;
}

void save_city_temperatures(const std::vector<CityTemperature>& rows, const std::string& path) {
  std::ofstream out = open_output(path);
  out << "route_id,day,city,T_K\n";
  char buf[256];
  for (const CityTemperature& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%s,%.4f\n", r.route_id.c_str(), r.day, r.city.c_str(),
                  r.t_K);
    out << buf;
  }
}

double representative_route_temperature(const std::vector<double>& temps_K) {
  if (temps_K.empty()) throw ValidationError("representative temperature of empty city list");
  double sum_sq = 0.0;
  for (double t : temps_K) sum_sq += t * t;
  return std::sqrt(sum_sq / static_cast<double>(temps_K.size()));
}

DayTypeSelection select_day_types(const std::map<int, double>& rep_temp_by_day) {
  if (rep_temp_by_day.empty()) throw ValidationError("day-type selection needs at least one day");
  DayTypeSelection sel;
  // cold/hot: extreme representative temperatures, earliest day on ties
  for (const auto& [day, t] : rep_temp_by_day) {
    if (sel.cold_day == 0 || t < sel.cold_temp_K) {
      sel.cold_day = day;
      sel.cold_temp_K = t;
    }
    if (sel.hot_day == 0 || t > sel.hot_temp_K) {
      sel.hot_day = day;
      sel.hot_temp_K = t;
    }
  }
  // nominal: closest to the median representative temperature
  std::vector<double> sorted;
  sorted.reserve(rep_temp_by_day.size());
  for (const auto& [day, t] : rep_temp_by_day) sorted.push_back(t);
  std::sort(sorted.begin(), sorted.end());
  std::size_t n = sorted.size();
  double median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  double best = 0.0;
  for (const auto& [day, t] : rep_temp_by_day) {
    double d2 = (t - median) * (t - median);
    if (sel.nominal_day == 0 || d2 < best) {
      sel.nominal_day = day;
      sel.nominal_temp_K = t;
      best = d2;
    }
  }
  return sel;
}

std::map<std::string, DayTypeSelection> select_day_types_per_route(
    const std::vector<CityTemperature>& rows) {
  std::map<std::string, std::map<int, std::vector<double>>> by_route_day;
  for (const CityTemperature& r : rows) by_route_day[r.route_id][r.day].push_back(r.t_K);
  std::map<std::string, DayTypeSelection> out;
  for (const auto& [route_id, by_day] : by_route_day) {
    std::map<int, double> reps;
    for (const auto& [day, temps] : by_day) reps[day] = representative_route_temperature(temps);
    out[route_id] = select_day_types(reps);
  }
  return out;
}

RouteGrouping group_routes(const std::vector<RouteProfile>& routes, int k, std::uint64_t seed,
                           double port_lat, double port_lon) {
  if (routes.empty()) throw ValidationError("route grouping: empty route list");
  if (k < 1) throw ValidationError("route grouping: k must be >= 1");
  if (static_cast<std::size_t>(k) > routes.size()) {
    throw ValidationError("route grouping: k exceeds route count");
  }

  // Non-port endpoint: inbound routes start away from the port, outbound ones end there.
  std::vector<std::pair<double, double>> pts;
  pts.reserve(routes.size());
  for (const RouteProfile& r : routes) {
    const RoutePoint& p = (r.direction == "inbound") ? r.points.front() : r.points.back();
    pts.emplace_back(p.lat, p.lon);
  }

  // Seeded Fisher-Yates pick of k distinct starting centers.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(rng.uniform_int(static_cast<int>(i + 1)));
    std::swap(order[i], order[j]);
  }
  std::vector<std::pair<double, double>> centers;
  for (int i = 0; i < k; ++i) centers.push_back(pts[order[i]]);

  std::vector<int> assign(pts.size(), 0);
  int iterations = 0;
  for (int iter = 0; iter < 100; ++iter) {
    ++iterations;
    bool changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      int best = 0;
      double best_d = haversine_m(pts[i].first, pts[i].second, centers[0].first,
                                  centers[0].second);
      for (int c = 1; c < k; ++c) {
        double d = haversine_m(pts[i].first, pts[i].second, centers[c].first, centers[c].second);
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    // Mean in 3-D unit-vector space, projected back (well-behaved for regional clusters).
    std::vector<double> sx(k, 0), sy(k, 0), sz(k, 0);
    std::vector<int> cnt(k, 0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      double la = rad_from_deg(pts[i].first), lo = rad_from_deg(pts[i].second);
      sx[assign[i]] += std::cos(la) * std::cos(lo);
      sy[assign[i]] += std::cos(la) * std::sin(lo);
      sz[assign[i]] += std::sin(la);
      cnt[assign[i]]++;
    }
    for (int c = 0; c < k; ++c) {
      if (cnt[c] == 0) {
        // Reseed an empty cluster with the point farthest from its current center.
        std::size_t far_i = 0;
        double far_d = -1.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          double d = haversine_m(pts[i].first, pts[i].second, centers[assign[i]].first,
                                 centers[assign[i]].second);
          if (d > far_d) {
            far_d = d;
            far_i = i;
          }
        }
        centers[c] = pts[far_i];
        changed = true;
        continue;
      }
      double norm = std::sqrt(sx[c] * sx[c] + sy[c] * sy[c] + sz[c] * sz[c]);
      centers[c] = {deg_from_rad(std::asin(sz[c] / norm)),
                    deg_from_rad(std::atan2(sy[c], sx[c]))};
    }
    if (!changed && iter > 0) break;
  }

  // Renumber groups in ascending center distance from the port (1-based).
  std::vector<int> idx(k);
  for (int c = 0; c < k; ++c) idx[c] = c;
  std::vector<double> port_d(k);
  for (int c = 0; c < k; ++c) {
    port_d[c] = haversine_m(centers[c].first, centers[c].second, port_lat, port_lon);
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (port_d[a] != port_d[b]) return port_d[a] < port_d[b];
    return a < b;
  });
  std::vector<int> rank(k);
  for (int r = 0; r < k; ++r) rank[idx[r]] = r;

  RouteGrouping out;
  out.iterations = iterations;
  out.group_of_route.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) out.group_of_route[i] = rank[assign[i]] + 1;
  out.centers.resize(k);
  out.center_port_km.resize(k);
  for (int c = 0; c < k; ++c) {
    out.centers[rank[c]] = centers[c];
    out.center_port_km[rank[c]] = port_d[c] / 1000.0;
  }
  return out;
}

std::vector<ItineraryEntry> build_itinerary(const std::vector<RouteProfile>& routes,
                                            const std::vector<double>& gross_masses_kg,
                                            int weather_pool_size, int month, double target_km,
                                            double mass_min_kg, double mass_max_kg,
                                            std::uint64_t seed) {
  if (routes.empty()) throw ValidationError("itinerary: empty route list");
  if (gross_masses_kg.empty()) throw ValidationError("itinerary: empty mass list");
  if (weather_pool_size < 1) throw ValidationError("itinerary: weather pool must be >= 1");
  bool any_feasible = false;
  for (double m : gross_masses_kg) {
    if (m >= mass_min_kg && m <= mass_max_kg) any_feasible = true;
  }
  if (!any_feasible) throw ValidationError("itinerary: no feasible gross mass in list");

  Rng rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(month + 1)));
  std::vector<ItineraryEntry> plan;
  double total_km = 0.0;
  while (total_km < target_km) {
    int ri = rng.uniform_int(static_cast<int>(routes.size()));
    int wi = rng.uniform_int(weather_pool_size);
    double mass = gross_masses_kg[rng.uniform_int(static_cast<int>(gross_masses_kg.size()))];
    if (mass < mass_min_kg || mass > mass_max_kg) continue;  // infeasible loading, redraw
    ItineraryEntry e;
    e.month = month;
    e.route_index = ri;
    e.route_id = routes[ri].id;
    e.weather_index = wi;
    e.gross_mass_kg = mass;
    e.distance_km = routes[ri].length_m() / 1000.0;
    total_km += e.distance_km;
    plan.push_back(e);
  }
  return plan;
}

}  // namespace trucksim
