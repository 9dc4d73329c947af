#pragma once

#include "mrt/filter.hpp"
#include "mrt/grid.hpp"

namespace mrt {

enum class Interp { Nearest, Linear };

/// What back_project does with abscissas that fall outside the filtered
/// table: reject the configuration, or treat missing samples as zero.
enum class OutsideTable { Error, Zero };

/// Filtered sinogram rows h(theta_m, t_i) at offsets i in [-imax, imax].
struct FilteredRows {
  SamplingGrid grid;
  int imax = 0;
  Matrix h;  // M x (2*imax + 1)

  double at(int m, int i) const { return h(m, i + imax); }
};

/// Offset half-width needed so that every back-projection abscissa
/// |x . theta| <= sqrt(2) is linearly interpolable: ceil(sqrt(2)/T) + 1.
int backprojection_halfwidth(const SamplingGrid& grid);

/// Per-row discrete convolution h(theta_m, t_i) = T * sum_n k(t_i - t_n) p[m,n].
FilteredRows convolve_rows(const Sinogram& p, const KernelTable& kernel, int imax,
                           int threads = 0);
FilteredRows convolve_rows(const Sinogram& p, const FilterSpec& filter, int imax,
                           int threads = 0);

/// Discrete back projection: pixel = (1/2M) sum_m h(theta_m, x cos + y sin),
/// interpolated in the offset variable.
Image back_project(const FilteredRows& h, int width, int height, Interp interp = Interp::Linear,
                   OutsideTable outside = OutsideTable::Error, int threads = 0);

/// Filtered back projection: convolve_rows then back_project, with the
/// 1/(4pi) constant and the angular quadrature folded into the two steps.
Image fbp_reconstruct(const Sinogram& p, const FilterSpec& filter, int width, int height,
                      Interp interp = Interp::Linear, int threads = 0);

/// Numeric forward projector for raster images: composite trapezoidal
/// quadrature of the bilinearly interpolated image along each ray.
Sinogram forward_project_image(const Image& img, const SamplingGrid& grid, int raysamples,
                               int threads = 0);

}  // namespace mrt
