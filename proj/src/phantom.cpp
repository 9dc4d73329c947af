#include "mrt/phantom.hpp"

#include <cmath>
#include <stdexcept>

#include "mrt/parallel.hpp"

namespace mrt {

namespace {

// Beta(1/2, nu+1) via log-gamma; stable for all positive nu.
double beta_half(double nu) {
  return std::exp(std::lgamma(0.5) + std::lgamma(nu + 1.0) - std::lgamma(nu + 1.5));
}

}  // namespace

void Phantom::add(const Ellipse& e) {
  if (!(e.a > 0.0) || !(e.b > 0.0))
    throw std::invalid_argument("Phantom: ellipse semi-axes must be positive");
  if (std::hypot(e.cx, e.cy) + std::max(e.a, e.b) > 1.0)
    throw std::invalid_argument("Phantom: ellipse not contained in the unit ball");
  ellipses_.push_back(e);
}

void Phantom::add(const SmoothBump& b) {
  if (!(b.radius > 0.0)) throw std::invalid_argument("Phantom: bump radius must be positive");
  if (!(b.nu > 0.0)) throw std::invalid_argument("Phantom: bump smoothness nu must be positive");
  // Strict interior: supports touching the unit sphere are rejected.
  if (std::hypot(b.cx, b.cy) + b.radius >= 1.0)
    throw std::invalid_argument("Phantom: bump support must stay strictly inside the unit ball");
  bumps_.push_back(b);
  bump_radon_coeff_.push_back(b.intensity * b.radius * beta_half(b.nu));
}

double Phantom::value(double x, double y) const {
  double v = 0.0;
  for (const Ellipse& e : ellipses_) {
    const double dx = x - e.cx;
    const double dy = y - e.cy;
    const double c = std::cos(e.rotation);
    const double s = std::sin(e.rotation);
    const double u = dx * c + dy * s;   // along the a-axis
    const double w = -dx * s + dy * c;  // along the b-axis
    const double q = (u / e.a) * (u / e.a) + (w / e.b) * (w / e.b);
    if (q <= 1.0) v += e.intensity;
  }
  for (std::size_t i = 0; i < bumps_.size(); ++i) {
    const SmoothBump& b = bumps_[i];
    const double dx = x - b.cx;
    const double dy = y - b.cy;
    const double q = 1.0 - (dx * dx + dy * dy) / (b.radius * b.radius);
    if (q > 0.0) v += b.intensity * std::pow(q, b.nu);
  }
  return v;
}

double Phantom::radon(double theta, double t) const {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  double v = 0.0;
  for (const Ellipse& e : ellipses_) {
    // Chord length of the rotated, shifted ellipse against the line
    // x.(ct,st) = t: 2ab*sqrt(A^2-u^2)/A^2 with A^2 = a^2 cos^2 + b^2 sin^2
    // evaluated at the de-rotated angle.
    const double u = t - (e.cx * ct + e.cy * st);
    const double phi = theta - e.rotation;
    const double ca = std::cos(phi);
    const double sa = std::sin(phi);
    const double A2 = e.a * e.a * ca * ca + e.b * e.b * sa * sa;
    const double d = A2 - u * u;
    if (d > 0.0) v += 2.0 * e.intensity * e.a * e.b * std::sqrt(d) / A2;
  }
  for (std::size_t i = 0; i < bumps_.size(); ++i) {
    const SmoothBump& b = bumps_[i];
    const double s = (t - (b.cx * ct + b.cy * st)) / b.radius;
    const double q = 1.0 - s * s;
    if (q > 0.0) v += bump_radon_coeff_[i] * std::pow(q, b.nu + 0.5);
  }
  return v;
}

Phantom Phantom::shepp_logan() {
  constexpr double deg = std::numbers::pi / 180.0;
  Phantom ph;
  ph.add(Ellipse{0.0, 0.0, 0.69, 0.92, 0.0, 1.0});
  ph.add(Ellipse{0.0, -0.0184, 0.6624, 0.8740, 0.0, -0.8});
  ph.add(Ellipse{0.22, 0.0, 0.11, 0.31, -18.0 * deg, -0.2});
  ph.add(Ellipse{-0.22, 0.0, 0.16, 0.41, 18.0 * deg, -0.2});
  ph.add(Ellipse{0.0, 0.35, 0.21, 0.25, 0.0, 0.1});
  ph.add(Ellipse{0.0, 0.1, 0.046, 0.046, 0.0, 0.1});
  ph.add(Ellipse{0.0, -0.1, 0.046, 0.046, 0.0, 0.1});
  ph.add(Ellipse{-0.08, -0.605, 0.046, 0.023, 0.0, 0.1});
  ph.add(Ellipse{0.0, -0.606, 0.023, 0.023, 0.0, 0.1});
  ph.add(Ellipse{0.06, -0.605, 0.023, 0.046, 0.0, 0.1});
  return ph;
}

Phantom Phantom::smooth() {
  Phantom ph;
  ph.add(SmoothBump{0.0, 0.0, 0.72, 0.90, 2.5});
  ph.add(SmoothBump{-0.22, 0.28, 0.27, 0.45, 2.5});
  ph.add(SmoothBump{0.25, 0.22, 0.21, -0.35, 2.5});
  ph.add(SmoothBump{0.05, -0.30, 0.30, 0.40, 2.5});
  return ph;
}

Phantom Phantom::disk(double radius, double intensity) {
  Phantom ph;
  ph.add(Ellipse{0.0, 0.0, radius, radius, 0.0, intensity});
  return ph;
}

Image rasterize(const Phantom& ph, int width, int height, int threads) {
  if (width < 1 || height < 1) throw std::invalid_argument("rasterize: dimensions must be >= 1");
  Matrix vals(height, width);
  parallel_for(0, height, threads, [&](std::int64_t j) {
    const double y = -1.0 + (2.0 * j + 1.0) / height;
    double* row = vals.row(static_cast<int>(j));
    for (int i = 0; i < width; ++i) row[i] = ph.value(-1.0 + (2.0 * i + 1.0) / width, y);
  });
  return Image(width, height, std::move(vals));
}

Sinogram sample_sinogram(const Phantom& ph, const SamplingGrid& grid, int threads) {
  Matrix p(grid.M, grid.N);
  parallel_for(0, grid.M, threads, [&](std::int64_t m) {
    const double theta = grid.angle(static_cast<int>(m));
    double* row = p.row(static_cast<int>(m));
    for (int n = 0; n < grid.N; ++n) row[n] = ph.radon(theta, grid.radial(n));
  });
  return Sinogram(grid, std::move(p));
}

}  // namespace mrt
