#include "mrt/grid.hpp"

#include <stdexcept>
#include <string>

namespace mrt {

SamplingGrid make_grid(int M, int K, double T) {
  if (M < 1) throw std::invalid_argument("make_grid: M must be >= 1");
  if (K < 1) throw std::invalid_argument("make_grid: K must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("make_grid: T must be > 0");
  return SamplingGrid{M, K, 2 * K + 1, T};
}

Sinogram::Sinogram(SamplingGrid grid, Matrix data) : grid_(grid), data_(std::move(data)) {
  if (data_.rows() != grid_.M || data_.cols() != grid_.N)
    throw std::invalid_argument("Sinogram: data dimensions " + std::to_string(data_.rows()) + "x" +
                                std::to_string(data_.cols()) + " do not match grid " +
                                std::to_string(grid_.M) + "x" + std::to_string(grid_.N));
  if (!all_finite(data_)) throw std::invalid_argument("Sinogram: non-finite entries");
}

ModuloSinogram::ModuloSinogram(Sinogram sinogram, double lambda, double delta)
    : sino_(std::move(sinogram)), lambda_(lambda), delta_(delta) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ModuloSinogram: lambda must be > 0");
  if (delta < 0.0) throw std::invalid_argument("ModuloSinogram: delta must be >= 0");
  const Matrix& d = sino_.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double v = d.data()[i];
    if (v < -lambda_ - delta_ || v > lambda_ + delta_ || (delta_ == 0.0 && v >= lambda_))
      throw std::invalid_argument("ModuloSinogram: entry outside folded range");
  }
}

Image::Image(int width, int height) : Image(width, height, Matrix(height, width)) {}

Image::Image(int width, int height, Matrix values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width < 1 || height < 1) throw std::invalid_argument("Image: dimensions must be >= 1");
  if (values_.rows() != height || values_.cols() != width)
    throw std::invalid_argument("Image: value matrix does not match declared dimensions");
  if (!all_finite(values_)) throw std::invalid_argument("Image: non-finite entries");
}

}  // namespace mrt
