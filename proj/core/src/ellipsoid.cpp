#include "wormlab/ellipsoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wormlab/errors.hpp"

namespace wormlab {

EllipsoidResult ellipsoid_minimize(const ConvexOracle& f, std::vector<double> x0, const EllipsoidOptions& options) {
  if (!(options.radius > 0.0) || !(options.tolerance > 0.0)) {
    throw InvalidParam("ellipsoid_minimize: radius and tolerance must be positive");
  }
  const std::size_t n = x0.size();
  std::vector<double> g(n);
  EllipsoidResult result;
  result.x = x0;
  result.value = f(x0, g);
  result.lower_bound = -std::numeric_limits<double>::infinity();
  if (n == 0) {
    result.lower_bound = result.value;
    return result;
  }

  // P stored row-major; E = {x : (x - c)ᵀ P⁻¹ (x - c) <= 1}.
  std::vector<double> c = std::move(x0);
  std::vector<double> p(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = options.radius * options.radius;
  std::vector<double> pg(n);
  const double dn = static_cast<double>(n);

  double fc = result.value;
  for (int it = 0;; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += p[i * n + j] * g[j];
      pg[i] = s;
    }
    double gpg = 0.0;
    double gg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      gpg += g[i] * pg[i];
      gg += g[i] * g[i];
    }
    // Values of f carry rounding error, so no bound is tighter than this.
    const double noise = 8.0 * std::numeric_limits<double>::epsilon() * std::abs(fc);
    if (gg == 0.0) {
      // Zero subgradient: c is a minimizer.
      result.lower_bound = std::max(result.lower_bound, fc - noise);
      if (fc <= result.value) {
        result.value = fc;
        result.x = c;
      }
      if (result.value - result.lower_bound <= options.tolerance) break;
      throw NonConvergence("ellipsoid_minimize: tolerance below the rounding level of the objective");
    }
    if (!(gpg > 0.0) || !std::isfinite(gpg)) {
      throw NonConvergence("ellipsoid_minimize: ellipsoid collapsed with gap " +
                           std::to_string(result.value - result.lower_bound) + " after " + std::to_string(it) +
                           " iterations");
    }
    const double spread = std::sqrt(gpg);
    result.lower_bound = std::max(result.lower_bound, fc - spread - noise);
    if (result.value - result.lower_bound <= options.tolerance) break;
    if (it >= options.max_iterations) {
      throw NonConvergence("ellipsoid_minimize: gap " + std::to_string(result.value - result.lower_bound) +
                           " above tolerance after " + std::to_string(it) + " iterations");
    }
    result.iterations = it + 1;

    for (auto& v : pg) v /= spread;
    if (n == 1) {
      c[0] -= 0.5 * pg[0];
      p[0] *= 0.25;
    } else {
      for (std::size_t i = 0; i < n; ++i) c[i] -= pg[i] / (dn + 1.0);
      const double scale = dn * dn / (dn * dn - 1.0);
      const double w = 2.0 / (dn + 1.0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          const double v = scale * (p[i * n + j] - w * pg[i] * pg[j]);
          p[i * n + j] = v;
          p[j * n + i] = v;
        }
      }
    }
    fc = f(c, g);
    if (fc < result.value) {
      result.value = fc;
      result.x = c;
    }
  }
  return result;
}

}  // namespace wormlab
