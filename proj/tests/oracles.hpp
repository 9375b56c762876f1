#pragma once

// Shared test oracles: closed-form radial integrals, synthetic fields, and
// small helpers. These stay independent of the implementation paths they
// check (quadrature oracles use Gamma-function identities, eigen oracles in
// test_linearized build their own dense matrices).

#include <cmath>
#include <random>
#include <vector>

#include "inls/radial.hpp"

namespace oracles {

// int_0^inf r^s e^{-a r} dr = Gamma(s+1) / a^{s+1}
inline double gamma_integral(double s, double a) {
  return std::tgamma(s + 1.0) / std::pow(a, s + 1.0);
}

// ||e^{-r}||_{L^q}^q = 4 pi Gamma(3) / q^3 ... computed via gamma_integral.
inline double exp_lq_pow_q(double q) { return 4.0 * M_PI * gamma_integral(2.0, q); }

// Smooth, rapidly decaying random complex radial field: a few Gaussian bumps
// centered in the inner third of the domain.
inline inls::RadialField random_smooth_field(const inls::RadialGrid& g, unsigned seed,
                                             int bumps = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> center(0.0, g.r_max / 3.0);
  std::uniform_real_distribution<double> width(0.6, 2.0);
  struct Bump {
    double ar, ai, c, w;
  };
  std::vector<Bump> bs;
  for (int k = 0; k < bumps; ++k) bs.push_back({amp(rng), amp(rng), center(rng), width(rng)});
  inls::RadialField f = inls::RadialField::zero(g);
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    double re = 0, im = 0;
    for (const auto& b : bs) {
      const double e = std::exp(-(r - b.c) * (r - b.c) / (b.w * b.w));
      re += b.ar * e;
      im += b.ai * e;
    }
    f.values[i] = inls::complexd(re, im);
  }
  return f;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace oracles
