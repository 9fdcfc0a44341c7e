#pragma once

namespace trucksim {

constexpr double kEarthRadiusM = 6371000.0;

// Great-circle distance between two lat/lon points, meters.
double haversine_m(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg);

// Initial bearing from point 1 to point 2, degrees clockwise from north, in [0, 360).
double initial_bearing_deg(double lat1_deg, double lon1_deg, double lat2_deg, double lon2_deg);

// Destination point after moving dist_m along bearing_deg from (lat, lon).
void destination_point(double lat_deg, double lon_deg, double bearing_deg, double dist_m,
                       double* out_lat_deg, double* out_lon_deg);

}  // namespace trucksim
