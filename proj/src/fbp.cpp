#include "mrt/fbp.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "mrt/parallel.hpp"

namespace mrt {

int backprojection_halfwidth(const SamplingGrid& grid) {
  return static_cast<int>(std::ceil(std::sqrt(2.0) / grid.T)) + 1;
}

FilteredRows convolve_rows(const Sinogram& p, const KernelTable& kernel, int imax, int threads) {
  const SamplingGrid& g = p.grid();
  if (imax < 0) throw std::invalid_argument("convolve_rows: imax must be >= 0");
  if (kernel.max_offset() < imax + g.K)
    throw std::invalid_argument("convolve_rows: kernel table too small for requested offsets");
  if (kernel.spacing() != g.T)
    throw std::invalid_argument("convolve_rows: kernel spacing does not match grid");

  const int cols = 2 * imax + 1;
  FilteredRows out{g, imax, Matrix(g.M, cols)};
  const int maxoff = kernel.max_offset();
  const double* kl = kernel.raw();
  parallel_for(0, g.M, threads, [&](std::int64_t m) {
    const double* row = p.data().row(static_cast<int>(m));
    double* hrow = out.h.row(static_cast<int>(m));
    for (int i = -imax; i <= imax; ++i) {
      // Evenness of the kernel turns the correlation into a unit-stride dot
      // product: kl[maxoff - i - K + n] holds k(t_i - t_n).
      const double* k = kl + (maxoff - i - g.K);
      double acc = 0.0;
      for (int n = 0; n < g.N; ++n) acc += k[n] * row[n];
      hrow[i + imax] = g.T * acc;
    }
  });
  return out;
}

FilteredRows convolve_rows(const Sinogram& p, const FilterSpec& filter, int imax, int threads) {
  const KernelTable table = KernelTable::build(filter, p.grid().T, imax + p.grid().K);
  return convolve_rows(p, table, imax, threads);
}

Image back_project(const FilteredRows& h, int width, int height, Interp interp,
                   OutsideTable outside, int threads) {
  const SamplingGrid& g = h.grid;
  if (width < 1 || height < 1) throw std::invalid_argument("back_project: bad image dimensions");

  std::vector<double> ct(g.M), st(g.M);
  for (int m = 0; m < g.M; ++m) {
    ct[m] = std::cos(g.angle(m));
    st[m] = std::sin(g.angle(m));
  }

  const int imax = h.imax;
  const double invT = 1.0 / g.T;
  Matrix vals(height, width);
  std::exception_ptr err;
  std::mutex err_mutex;
  parallel_for(0, height, threads, [&](std::int64_t j) {
    try {
      const double y = -1.0 + (2.0 * j + 1.0) / height;
      double* out = vals.row(static_cast<int>(j));
      for (int i = 0; i < width; ++i) {
        const double x = -1.0 + (2.0 * i + 1.0) / width;
        double acc = 0.0;
        for (int m = 0; m < g.M; ++m) {
          const double q = (x * ct[m] + y * st[m]) * invT;  // offset in units of T
          if (interp == Interp::Nearest) {
            const double r = std::round(q);
            if (r < -imax || r > imax) {
              if (outside == OutsideTable::Error)
                throw std::runtime_error("back_project: abscissa outside filtered table");
              continue;
            }
            acc += h.at(m, static_cast<int>(r));
          } else {
            const double f = std::floor(q);
            const int i0 = static_cast<int>(f);
            const double w = q - f;
            if (i0 < -imax || i0 + 1 > imax) {
              if (outside == OutsideTable::Error)
                throw std::runtime_error("back_project: abscissa outside filtered table");
              if (i0 + 1 >= -imax && i0 + 1 <= imax) acc += w * h.at(m, i0 + 1);
              if (i0 >= -imax && i0 <= imax) acc += (1.0 - w) * h.at(m, i0);
              continue;
            }
            acc += (1.0 - w) * h.at(m, i0) + w * h.at(m, i0 + 1);
          }
        }
        out[i] = acc / (2.0 * g.M);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!err) err = std::current_exception();
    }
  });
  if (err) std::rethrow_exception(err);
  return Image(width, height, std::move(vals));
}

Image fbp_reconstruct(const Sinogram& p, const FilterSpec& filter, int width, int height,
                      Interp interp, int threads) {
  const int imax = backprojection_halfwidth(p.grid());
  const FilteredRows h = convolve_rows(p, filter, imax, threads);
  return back_project(h, width, height, interp, OutsideTable::Error, threads);
}

namespace {

// Zero-padded bilinear sample at physical point (x, y).
double sample_bilinear(const Image& img, double x, double y) {
  const double fx = 0.5 * (x + 1.0) * img.width() - 0.5;
  const double fy = 0.5 * (y + 1.0) * img.height() - 0.5;
  const int i0 = static_cast<int>(std::floor(fx));
  const int j0 = static_cast<int>(std::floor(fy));
  const double wx = fx - i0;
  const double wy = fy - j0;
  double acc = 0.0;
  for (int dj = 0; dj <= 1; ++dj) {
    const int j = j0 + dj;
    if (j < 0 || j >= img.height()) continue;
    const double wj = dj ? wy : 1.0 - wy;
    for (int di = 0; di <= 1; ++di) {
      const int i = i0 + di;
      if (i < 0 || i >= img.width()) continue;
      acc += wj * (di ? wx : 1.0 - wx) * img.at(i, j);
    }
  }
  return acc;
}

}  // namespace

Sinogram forward_project_image(const Image& img, const SamplingGrid& grid, int raysamples,
                               int threads) {
  if (raysamples < 2) throw std::invalid_argument("forward_project_image: raysamples must be >= 2");
  const double smax = std::sqrt(2.0);
  const double ds = 2.0 * smax / (raysamples - 1);
  Matrix p(grid.M, grid.N);
  parallel_for(0, grid.M, threads, [&](std::int64_t m) {
    const double cthe = std::cos(grid.angle(static_cast<int>(m)));
    const double sthe = std::sin(grid.angle(static_cast<int>(m)));
    double* row = p.row(static_cast<int>(m));
    for (int n = 0; n < grid.N; ++n) {
      const double t = grid.radial(n);
      double acc = 0.0;
      for (int q = 0; q < raysamples; ++q) {
        const double s = -smax + q * ds;
        const double v = sample_bilinear(img, t * cthe - s * sthe, t * sthe + s * cthe);
        acc += (q == 0 || q == raysamples - 1) ? 0.5 * v : v;
      }
      row[n] = acc * ds;
    }
  });
  return Sinogram(grid, std::move(p));
}

}  // namespace mrt
