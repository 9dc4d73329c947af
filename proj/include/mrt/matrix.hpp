#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mrt {

/// Dense row-major matrix of doubles, the shared container for sinograms,
/// rasters and spectral fields.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double& operator()(int r, int c) { return data_[idx(r, c)]; }
  double operator()(int r, int c) const { return data_[idx(r, c)]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline double max_abs(const Matrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) v = std::max(v, std::abs(m.data()[i]));
  return v;
}

inline bool all_finite(const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!std::isfinite(m.data()[i])) return false;
  return true;
}

inline double l2_norm(const Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m.data()[i] * m.data()[i];
  return std::sqrt(s);
}

}  // namespace mrt
