#pragma once

#include <string>
#include <vector>

namespace trucksim {

// Piecewise-linear 1-D table, clamped at both ends.
class LinearTable {
 public:
  LinearTable() = default;
  LinearTable(std::vector<double> x, std::vector<double> y, std::string name = "table");

  double operator()(double x) const;
  bool empty() const { return x_.empty(); }
  std::size_t size() const { return x_.size(); }
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }
  const std::string& name() const { return name_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::string name_;
};

// Bilinear 2-D grid, clamped on both axes.
class BilinearGrid {
 public:
  BilinearGrid() = default;
  BilinearGrid(std::vector<double> rows, std::vector<double> cols,
               std::vector<std::vector<double>> values, std::string name = "grid");

  double operator()(double row, double col) const;
  bool empty() const { return rows_.empty(); }
  const std::vector<double>& rows() const { return rows_; }
  const std::vector<double>& cols() const { return cols_; }
  const std::vector<std::vector<double>>& values() const { return values_; }
  double row_min() const { return rows_.front(); }
  double row_max() const { return rows_.back(); }
  double col_min() const { return cols_.front(); }
  double col_max() const { return cols_.back(); }
  const std::string& name() const { return name_; }

 private:
  std::vector<double> rows_;
  std::vector<double> cols_;
  std::vector<std::vector<double>> values_;
  std::string name_;
};

}  // namespace trucksim
