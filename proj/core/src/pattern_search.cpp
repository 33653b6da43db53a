#include "wormlab/pattern_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "wormlab/errors.hpp"

namespace wormlab {
namespace {

using Vec = std::vector<double>;

std::vector<Vec> fixed_directions(std::size_t d) {
  std::vector<Vec> dirs;
  for (std::size_t i = 0; i < d; ++i) {
    for (double s : {1.0, -1.0}) {
      Vec v(d, 0.0);
      v[i] = s;
      dirs.push_back(std::move(v));
    }
  }
  const double c = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (double si : {1.0, -1.0}) {
        for (double sj : {1.0, -1.0}) {
          Vec v(d, 0.0);
          v[i] = si * c;
          v[j] = sj * c;
          dirs.push_back(std::move(v));
        }
      }
    }
  }
  return dirs;
}

// Random orthonormal basis by Gram-Schmidt on Gaussian vectors, with both signs.
std::vector<Vec> random_directions(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> basis;
  while (basis.size() < d) {
    Vec v(d);
    for (auto& c : v) c = gauss(rng);
    for (const auto& b : basis) {
      double p = 0.0;
      for (std::size_t i = 0; i < d; ++i) p += v[i] * b[i];
      for (std::size_t i = 0; i < d; ++i) v[i] -= p * b[i];
    }
    double n = 0.0;
    for (double c : v) n += c * c;
    n = std::sqrt(n);
    if (n < 1e-8) continue;
    for (auto& c : v) c /= n;
    basis.push_back(std::move(v));
  }
  std::vector<Vec> dirs;
  for (auto& b : basis) {
    Vec neg(b);
    for (auto& c : neg) c = -c;
    dirs.push_back(std::move(b));
    dirs.push_back(std::move(neg));
  }
  return dirs;
}

}  // namespace

PatternSearchResult pattern_search(const std::function<double(std::span<const double>)>& f, Vec x0,
                                   const PatternSearchOptions& options) {
  const std::size_t d = x0.size();
  const bool boxed = !options.lower.empty();
  if (boxed && (options.lower.size() != d || options.upper.size() != d)) {
    throw InvalidParam("pattern_search: bound dimensions do not match the start point");
  }
  if (!(options.initial_step > 0.0) || !(options.tolerance > 0.0)) {
    throw InvalidParam("pattern_search: step and tolerance must be positive");
  }
  auto clamp = [&](Vec& y) {
    if (!boxed) return;
    for (std::size_t i = 0; i < d; ++i) y[i] = std::clamp(y[i], options.lower[i], options.upper[i]);
  };

  PatternSearchResult result;
  clamp(x0);
  result.x = std::move(x0);
  result.value = f(result.x);
  result.evaluations = 1;
  if (d == 0) {
    result.converged = true;
    return result;
  }

  std::mt19937_64 rng(options.seed);
  const std::vector<Vec> fixed = fixed_directions(d);
  Vec last_success;
  Vec trial(d);
  double step = options.initial_step;

  auto try_point = [&](const Vec& dir, double h, Vec& out) -> double {
    for (std::size_t i = 0; i < d; ++i) out[i] = result.x[i] + h * dir[i];
    clamp(out);
    if (out == result.x) return result.value;
    ++result.evaluations;
    return f(out);
  };

  while (step >= options.tolerance) {
    if (result.evaluations > options.max_evaluations) {
      throw NonConvergence("pattern_search: evaluation budget exhausted at mesh size " + std::to_string(step));
    }
    if (options.max_iterations > 0 && result.iterations >= options.max_iterations) return result;
    ++result.iterations;
    std::vector<Vec> dirs;
    if (!last_success.empty()) dirs.push_back(last_success);
    const std::vector<Vec> rnd = random_directions(d, rng);
    dirs.insert(dirs.end(), rnd.begin(), rnd.end());
    dirs.insert(dirs.end(), fixed.begin(), fixed.end());

    bool improved = false;
    for (const Vec& dir : dirs) {
      const double v = try_point(dir, step, trial);
      if (!(v < result.value)) continue;
      result.x = trial;
      result.value = v;
      // Follow the direction with doubling steps while it keeps paying off.
      double h = step;
      for (;;) {
        h *= 2.0;
        const double w = try_point(dir, h, trial);
        if (!(w < result.value)) break;
        result.x = trial;
        result.value = w;
      }
      last_success = dir;
      improved = true;
      break;
    }
    if (!improved) {
      step *= 0.5;
      last_success.clear();
    }
  }
  result.converged = true;
  return result;
}

}  // namespace wormlab
