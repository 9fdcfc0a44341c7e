#pragma once

#include <cmath>
#include <cstdint>

namespace trucksim {

constexpr double kGravity = 9.80665;          // m/s^2
constexpr double kAirGasConstant = 287.05;    // J/(kg K), dry air
constexpr double kStdPressure = 101325.0;     // Pa
constexpr double kZeroCelsiusK = 273.15;      // K
constexpr double kDieselLhv = 42.8e6;         // J/kg
constexpr double kDieselDensityKgPerL = 0.835;
constexpr double kPi = 3.14159265358979323846;

inline double mps_from_kmh(double kmh) { return kmh / 3.6; }
inline double kmh_from_mps(double mps) { return mps * 3.6; }
inline double mps_from_mph(double mph) { return mph * 0.44704; }
inline double celsius_from_kelvin(double k) { return k - kZeroCelsiusK; }
inline double kelvin_from_celsius(double c) { return c + kZeroCelsiusK; }
inline double radps_from_rpm(double rpm) { return rpm * kPi / 30.0; }
inline double rpm_from_radps(double radps) { return radps * 30.0 / kPi; }
inline double rad_from_deg(double deg) { return deg * kPi / 180.0; }
inline double deg_from_rad(double rad) { return rad * 180.0 / kPi; }
inline double kwh_from_joule(double j) { return j / 3.6e6; }

// Ideal-gas fallback when a weather sample does not carry a measured density.
inline double air_density_from_temperature(double t_amb_K) {
  return kStdPressure / (kAirGasConstant * t_amb_K);
}

// Deterministic, platform-independent RNG (splitmix64). std::random distributions are
// implementation-defined, so everything that must reproduce bit-exactly draws from this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // [0, n)
  int uniform_int(int n) { return static_cast<int>(uniform() * n) % n; }

  // Rough normal via sum of uniforms; good enough for synthetic data, fully portable.
  double gaussish(double mean, double sigma) {
    double s = uniform() + uniform() + uniform() + uniform();
    return mean + sigma * (s - 2.0) * 1.732050807568877;  // var of sum is 4/12
  }

  // Independent child stream; derived from the original seed so fork order is irrelevant.
  Rng fork(std::uint64_t stream) const {
    Rng r(seed_ ^ (0xD1B54A32D192ED03ull * (stream + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace trucksim
