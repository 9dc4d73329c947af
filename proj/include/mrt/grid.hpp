#pragma once

#include <numbers>

#include "mrt/matrix.hpp"

namespace mrt {

/// Parallel-beam sampling grid: M angles over [0,pi), N = 2K+1 radial
/// offsets (n-K)*T symmetric about 0.
struct SamplingGrid {
  int M = 0;
  int K = 0;
  int N = 0;
  double T = 0.0;

  double angle(int m) const { return m * std::numbers::pi / M; }
  double radial(int n) const { return (n - K) * T; }

  /// K*T >= 1 is needed so the offsets cover supp Rf(theta,.) in (-1,1).
  bool covers_unit_interval() const { return K * T >= 1.0; }

  bool operator==(const SamplingGrid&) const = default;
};

SamplingGrid make_grid(int M, int K, double T);

/// Real-valued Radon samples bound to a grid, row m = angle index.
class Sinogram {
 public:
  Sinogram(SamplingGrid grid, Matrix data);

  const SamplingGrid& grid() const { return grid_; }
  const Matrix& data() const { return data_; }
  double at(int m, int n) const { return data_(m, n); }

 private:
  SamplingGrid grid_;
  Matrix data_;
};

/// Folded (and optionally noisy) sinogram with threshold lambda.
/// delta bounds the sup-norm deviation from the noiseless folded data.
class ModuloSinogram {
 public:
  ModuloSinogram(Sinogram sinogram, double lambda, double delta);

  const Sinogram& sinogram() const { return sino_; }
  const SamplingGrid& grid() const { return sino_.grid(); }
  const Matrix& data() const { return sino_.data(); }
  double lambda() const { return lambda_; }
  double delta() const { return delta_; }

 private:
  Sinogram sino_;
  double lambda_;
  double delta_;
};

/// W x H raster on the square [-1,1]^2; pixel centers never touch the
/// boundary. Row j of the value matrix holds y_j, column i holds x_i.
class Image {
 public:
  Image(int width, int height);
  Image(int width, int height, Matrix values);

  int width() const { return width_; }
  int height() const { return height_; }
  double pixel_x(int i) const { return -1.0 + (2.0 * i + 1.0) / width_; }
  double pixel_y(int j) const { return -1.0 + (2.0 * j + 1.0) / height_; }

  double at(int i, int j) const { return values_(j, i); }
  double& at(int i, int j) { return values_(j, i); }
  const Matrix& values() const { return values_; }

 private:
  int width_;
  int height_;
  Matrix values_;
};

}  // namespace mrt
