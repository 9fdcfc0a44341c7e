#include "trucksim/geo.hpp"

#include <cmath>

#include "trucksim/units.hpp"

namespace trucksim {

double haversine_m(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg) {
  double p1 = rad_from_deg(lat1_deg);
  double p2 = rad_from_deg(lat2_deg);
  double dp = rad_from_deg(lat2_deg - lat1_deg);
  double dl = rad_from_deg(lon2_deg - lon1_deg);
  double a = std::sin(dp / 2) * std::sin(dp / 2) +
             std::cos(p1) * std::cos(p2) * std::sin(dl / 2) * std::sin(dl / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(a)));
}

double initial_bearing_deg(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg) {
  double p1 = rad_from_deg(lat1_deg);
  double p2 = rad_from_deg(lat2_deg);
  double dl = rad_from_deg(lon2_deg - lon1_deg);
  double y = std::sin(dl) * std::cos(p2);
  double x = std::cos(p1) * std::sin(p2) - std::sin(p1) * std::cos(p2) * std::cos(dl);
  double b = deg_from_rad(std::atan2(y, x));
  if (b < 0) b += 360.0;
  if (b >= 360.0) b -= 360.0;
  return b;
}

void destination_point(double lat_deg, double lon_deg, double bearing_deg, double dist_m,
                       double* out_lat_deg, double* out_lon_deg) {
  double p1 = rad_from_deg(lat_deg);
  double l1 = rad_from_deg(lon_deg);
  double brg = rad_from_deg(bearing_deg);
  double dr = dist_m / kEarthRadiusM;
  double p2 = std::asin(std::sin(p1) * std::cos(dr) + std::cos(p1) * std::sin(dr) * std::cos(brg));
  double l2 = l1 + std::atan2(std::sin(brg) * std::sin(dr) * std::cos(p1),
                              std::cos(dr) - std::sin(p1) * std::sin(p2));
  *out_lat_deg = deg_from_rad(p2);
  *out_lon_deg = deg_from_rad(l2);
}

}  // namespace trucksim
