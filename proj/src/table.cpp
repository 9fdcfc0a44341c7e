#include "trucksim/table.hpp"

#include <algorithm>
#include <utility>

#include "trucksim/errors.hpp"

namespace trucksim {

namespace {

void check_axis(const std::vector<double>& x, const std::string& name, const char* axis) {
  if (x.size() < 2) {
    throw ValidationError(name + ": " + axis + " axis needs at least 2 points");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) {
      throw ValidationError(name + ": " + axis + " axis not strictly increasing at index " +
                            std::to_string(i));
    }
  }
}

// Index of the segment [x[i], x[i+1]] containing xq, clamped to valid segments.
std::size_t segment(const std::vector<double>& x, double xq) {
  if (xq <= x.front()) return 0;
  if (xq >= x[x.size() - 2]) return x.size() - 2;
  auto it = std::upper_bound(x.begin(), x.end(), xq);
  return static_cast<std::size_t>(it - x.begin()) - 1;
}

}  // namespace

LinearTable::LinearTable(std::vector<double> x, std::vector<double> y, std::string name)
    : x_(std::move(x)), y_(std::move(y)), name_(std::move(name)) {
  check_axis(x_, name_, "x");
  if (y_.size() != x_.size()) {
    throw ValidationError(name_ + ": x and y sizes differ (" + std::to_string(x_.size()) +
                          " vs " + std::to_string(y_.size()) + ")");
  }
}

double LinearTable::operator()(double xq) const {
  if (x_.empty()) throw ValidationError(name_ + ": lookup on empty table");
  if (xq <= x_.front()) return y_.front();
  if (xq >= x_.back()) return y_.back();
  std::size_t i = segment(x_, xq);
  double t = (xq - x_[i]) / (x_[i + 1] - x_[i]);
  return y_[i] + t * (y_[i + 1] - y_[i]);
}

BilinearGrid::BilinearGrid(std::vector<double> rows, std::vector<double> cols,
                           std::vector<std::vector<double>> values, std::string name)
    : rows_(std::move(rows)), cols_(std::move(cols)), values_(std::move(values)),
      name_(std::move(name)) {
  check_axis(rows_, name_, "row");
  check_axis(cols_, name_, "col");
  if (values_.size() != rows_.size()) {
    throw ValidationError(name_ + ": value row count does not match row axis");
  }
  for (const auto& r : values_) {
    if (r.size() != cols_.size()) {
      throw ValidationError(name_ + ": value column count does not match col axis");
    }
  }
}

double BilinearGrid::operator()(double rq, double cq) const {
  if (rows_.empty()) throw ValidationError(name_ + ": lookup on empty grid");
  rq = std::clamp(rq, rows_.front(), rows_.back());
  cq = std::clamp(cq, cols_.front(), cols_.back());
  std::size_t i = segment(rows_, rq);
  std::size_t j = segment(cols_, cq);
  double tr = (rq - rows_[i]) / (rows_[i + 1] - rows_[i]);
  double tc = (cq - cols_[j]) / (cols_[j + 1] - cols_[j]);
  double v00 = values_[i][j], v01 = values_[i][j + 1];
  double v10 = values_[i + 1][j], v11 = values_[i + 1][j + 1];
  double top = v00 + tc * (v01 - v00);
  double bot = v10 + tc * (v11 - v10);
  return top + tr * (bot - top);
}

}  // namespace trucksim
