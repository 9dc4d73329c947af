#include "mrt/filter.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mrt {

namespace {

constexpr double kPi = std::numbers::pi;

// Phi(b) = int_0^L S cos(bS) dS, written as L sin(bL)/b - 2 sin^2(bL/2)/b^2
// to avoid the cancellation in (cos(bL)-1); series below |bL| ~ 1e-3.
double ramp_cos_integral(double L, double b) {
  const double x = b * L;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return L * L * (0.5 - x2 / 8.0 + x2 * x2 / 144.0);
  }
  const double s = std::sin(0.5 * x);
  return L * std::sin(x) / b - 2.0 * s * s / (b * b);
}

// 8-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGlNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

// (1/pi) int_0^L S W(S/L) cos(St) dS by composite Gauss-Legendre with
// panels no wider than a quarter oscillation period.
double kernel_by_quadrature(Window w, double L, double t) {
  const double rate = std::abs(t) + kPi / (2.0 * L);  // combined oscillation rate
  const int panels = std::max(16, static_cast<int>(std::ceil(rate * L / (0.5 * kPi))) + 4);
  const double h = L / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    double acc = 0.0;
    for (int q = 0; q < 8; ++q) {
      const double S = mid + 0.5 * h * kGlNodes[q];
      acc += kGlWeights[q] * S * window_value(w, S / L) * std::cos(S * t);
    }
    total += 0.5 * h * acc;
  }
  return total / kPi;
}

}  // namespace

double window_value(Window w, double S) {
  if (std::abs(S) > 1.0) return 0.0;
  switch (w) {
    case Window::RamLak:
      return 1.0;
    case Window::Cosine:
      return std::cos(0.5 * kPi * S);
    case Window::SheppLogan: {
      const double x = 0.5 * kPi * S;
      return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    }
  }
  return 0.0;
}

double fbp_kernel(const FilterSpec& filter, double t) {
  const double L = filter.bandwidth;
  if (!(L > 0.0)) throw std::invalid_argument("fbp_kernel: bandwidth must be > 0");
  switch (filter.window) {
    case Window::RamLak:
      if (t == 0.0) return L * L / (2.0 * kPi);
      return ramp_cos_integral(L, t) / kPi;
    case Window::Cosine: {
      // cos(aS)cos(tS) = (cos((a+t)S) + cos((a-t)S))/2 with a = pi/(2L).
      const double a = 0.5 * kPi / L;
      return (ramp_cos_integral(L, a + t) + ramp_cos_integral(L, a - t)) / (2.0 * kPi);
    }
    case Window::SheppLogan:
      return kernel_by_quadrature(Window::SheppLogan, L, t);
  }
  throw std::invalid_argument("fbp_kernel: unknown window");
}

KernelTable KernelTable::build(const FilterSpec& filter, double spacing, int max_offset) {
  if (!(spacing > 0.0)) throw std::invalid_argument("KernelTable: spacing must be > 0");
  if (max_offset < 0) throw std::invalid_argument("KernelTable: max_offset must be >= 0");
  KernelTable table;
  table.spacing_ = spacing;
  table.max_offset_ = max_offset;
  table.values_.resize(2 * static_cast<std::size_t>(max_offset) + 1);
  // Fill o >= 0 and mirror, so evenness holds bit-exactly.
  for (int o = 0; o <= max_offset; ++o) {
    const double v = fbp_kernel(filter, o * spacing);
    table.values_[max_offset + o] = v;
    table.values_[max_offset - o] = v;
  }
  return table;
}

}  // namespace mrt
