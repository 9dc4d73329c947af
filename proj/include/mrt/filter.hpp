#pragma once

#include <vector>

namespace mrt {

/// Apodization window for the ramp filter, even and supported in [-1,1].
enum class Window { RamLak, Cosine, SheppLogan };

/// Band-limited reconstruction filter: spectrum |S| * W(S/L) on [-L, L].
struct FilterSpec {
  Window window = Window::Cosine;
  double bandwidth = 0.0;  // L > 0
};

/// Window value W(S) for |S| <= 1 (0 outside).
double window_value(Window w, double S);

/// Spatial filter kernel (1/2pi) * int_{-L}^{L} |S| W(S/L) e^{iSt} dS.
/// Closed forms for RamLak and Cosine, panel quadrature otherwise.
double fbp_kernel(const FilterSpec& filter, double t);

/// Kernel samples at offsets o*spacing, o in [-max_offset, max_offset],
/// even in o by construction.
class KernelTable {
 public:
  static KernelTable build(const FilterSpec& filter, double spacing, int max_offset);

  double at(int offset) const { return values_[offset + max_offset_]; }
  const double* raw() const { return values_.data(); }  // linear index o + max_offset
  int max_offset() const { return max_offset_; }
  double spacing() const { return spacing_; }

 private:
  KernelTable() = default;
  std::vector<double> values_;
  int max_offset_ = 0;
  double spacing_ = 0.0;
};

}  // namespace mrt
