#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mrt/grid.hpp"

namespace mrt {

/// Centered 2-lambda modulo: folds x into [-lambda, lambda) by the floor
/// formula x - 2l*floor((x+l)/(2l)). Total in x; lambda must be positive.
inline double fold(double x, double lambda) {
  const double period = 2.0 * lambda;
  return x - period * std::floor((x + lambda) / period);
}

/// Entrywise fold of a sinogram; the result carries delta = 0.
ModuloSinogram fold_sinogram(const Sinogram& p, double lambda);

/// Adds i.i.d. uniform noise on [-delta, delta] to folded data. The sample
/// for entry (m,n) depends only on (seed, m, n), so serial and parallel
/// runs produce identical bits. Input must be noiseless (delta == 0); the
/// result is NOT re-folded and may exceed [-lambda, lambda) by up to delta.
ModuloSinogram add_uniform_noise(const ModuloSinogram& mp, double delta, std::uint64_t seed);

/// Integer field eps with p = p_folded + 2*lambda*eps.
struct ResidualField {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int m, int n) const {
    return values[static_cast<std::size_t>(m) * cols + n];
  }
};

/// Recovers the integer residual from a sinogram and its noiseless fold.
/// Throws if some quotient is farther than 1e-9 from an integer.
ResidualField residual(const Sinogram& p, const Sinogram& p_folded, double lambda);

}  // namespace mrt
