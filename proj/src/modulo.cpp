#include "mrt/modulo.hpp"

#include <stdexcept>
#include <string>

namespace mrt {

namespace {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based generator: one value per (seed, m, n).
inline double uniform_pm1(std::uint64_t seed, std::uint64_t m, std::uint64_t n) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ (m * 0xD6E8FEB86659FD93ull));
  h = splitmix64(h ^ (n * 0xCA5A826395121157ull));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
  return 2.0 * u - 1.0;                                       // [-1,1)
}

}  // namespace

ModuloSinogram fold_sinogram(const Sinogram& p, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("fold_sinogram: lambda must be > 0");
  Matrix out(p.grid().M, p.grid().N);
  const Matrix& in = p.data();
  for (std::size_t i = 0; i < in.size(); ++i) out.data()[i] = fold(in.data()[i], lambda);
  return ModuloSinogram(Sinogram(p.grid(), std::move(out)), lambda, 0.0);
}

ModuloSinogram add_uniform_noise(const ModuloSinogram& mp, double delta, std::uint64_t seed) {
  if (delta < 0.0) throw std::invalid_argument("add_uniform_noise: delta must be >= 0");
  if (mp.delta() != 0.0)
    throw std::invalid_argument("add_uniform_noise: input already carries noise");
  const SamplingGrid& g = mp.grid();
  Matrix out(g.M, g.N);
  for (int m = 0; m < g.M; ++m)
    for (int n = 0; n < g.N; ++n)
      out(m, n) = mp.data()(m, n) + delta * uniform_pm1(seed, m, n);
  return ModuloSinogram(Sinogram(g, std::move(out)), mp.lambda(), delta);
}

ResidualField residual(const Sinogram& p, const Sinogram& p_folded, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("residual: lambda must be > 0");
  if (!(p.grid() == p_folded.grid()))
    throw std::invalid_argument("residual: grids do not match");
  const SamplingGrid& g = p.grid();
  ResidualField eps{g.M, g.N, {}};
  eps.values.resize(static_cast<std::size_t>(g.M) * g.N);
  const double period = 2.0 * lambda;
  for (int m = 0; m < g.M; ++m) {
    for (int n = 0; n < g.N; ++n) {
      const double q = (p.at(m, n) - p_folded.at(m, n)) / period;
      const double k = std::round(q);
      if (std::abs(q - k) > 1e-9)
        throw std::runtime_error("residual: inconsistent inputs at (" + std::to_string(m) + "," +
                                 std::to_string(n) + "): quotient " + std::to_string(q) +
                                 " is not an integer");
      eps.values[static_cast<std::size_t>(m) * g.N + n] = static_cast<std::int64_t>(k);
    }
  }
  return eps;
}

}  // namespace mrt
