#pragma once

#include <vector>

#include "mrt/grid.hpp"

namespace mrt {

/// Indicator ellipse scaled by an additive intensity. `a` is the semi-axis
/// along the rotated x-direction, rotation in radians counterclockwise.
struct Ellipse {
  double cx = 0.0, cy = 0.0;
  double a = 0.0, b = 0.0;
  double rotation = 0.0;
  double intensity = 0.0;
};

/// intensity * ((1 - |x-c|^2/r^2)_+)^nu, C^floor(nu)-smooth for nu > 1.
struct SmoothBump {
  double cx = 0.0, cy = 0.0;
  double radius = 0.0;
  double intensity = 0.0;
  double nu = 2.5;
};

/// Additive collection of analytic components with closed-form line
/// integrals. Components must stay inside the unit ball.
class Phantom {
 public:
  Phantom() = default;

  void add(const Ellipse& e);
  void add(const SmoothBump& b);

  bool empty() const { return ellipses_.empty() && bumps_.empty(); }
  const std::vector<Ellipse>& ellipses() const { return ellipses_; }
  const std::vector<SmoothBump>& bumps() const { return bumps_; }

  /// Pointwise value (sum of components; 0 outside all supports).
  double value(double x, double y) const;

  /// Line integral over {x . (cos theta, sin theta) = t}, summed in closed
  /// form per component.
  double radon(double theta, double t) const;

  /// Modified Shepp-Logan head phantom (10 ellipses, unit skull contrast).
  static Phantom shepp_logan();
  /// Smooth test object: one large bump plus three interior features, all
  /// with smoothness nu = 2.5.
  static Phantom smooth();
  /// Single centered disk indicator.
  static Phantom disk(double radius = 1.0, double intensity = 1.0);

 private:
  std::vector<Ellipse> ellipses_;
  std::vector<SmoothBump> bumps_;
  std::vector<double> bump_radon_coeff_;  // intensity * r * Beta(1/2, nu+1)
};

/// Raster with pixel (i,j) = value at the pixel center.
Image rasterize(const Phantom& ph, int width, int height, int threads = 0);

/// Exact Radon samples of the phantom at the grid points.
Sinogram sample_sinogram(const Phantom& ph, const SamplingGrid& grid, int threads = 0);

}  // namespace mrt
