#pragma once

// Radial discretization substrate: uniform half-line grids, weighted
// quadrature, derivatives, and the norms/inner products used everywhere else.
//
// Conventions. A radial function f(r) on (0, r_max] is sampled at the
// interior nodes r_j = j*h, j = 1..n, h = r_max/(n+1). The origin is not a
// node; integrands are extended there by their finite limits. All fields are
// assumed to have decayed to zero at r = r_max (homogeneous Dirichlet wall
// for v = r*f). Volume integrals over R^3 reduce to 4*pi * int_0^rmax ... r^2 dr.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "inls/common.hpp"

namespace inls {

struct RadialGrid {
  double r_max = 0.0;
  int n = 0;
  double spacing = 0.0;

  double r(int i) const { return spacing * (i + 1); }  // i = 0..n-1
  std::vector<double> nodes() const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = r(i);
    return out;
  }
  bool operator==(const RadialGrid& o) const {
    return r_max == o.r_max && n == o.n;
  }
  bool operator!=(const RadialGrid& o) const { return !(*this == o); }
};

inline RadialGrid make_grid(double r_max, int n) {
  require(r_max > 0.0, errc::invalid_configuration, "make_grid: r_max must be positive");
  require(n >= 8, errc::invalid_configuration, "make_grid: need at least 8 interior nodes");
  RadialGrid g;
  g.r_max = r_max;
  g.n = n;
  g.spacing = r_max / (n + 1);
  return g;
}

struct RadialField {
  RadialGrid grid;
  std::vector<complexd> values;

  static RadialField zero(const RadialGrid& g) {
    RadialField f;
    f.grid = g;
    f.values.assign(g.n, complexd(0.0, 0.0));
    return f;
  }
  template <class Fn>
  static RadialField from_function(const RadialGrid& g, Fn&& fn) {
    RadialField f = zero(g);
    for (int i = 0; i < g.n; ++i) f.values[i] = complexd(fn(g.r(i)));
    return f;
  }
  static RadialField from_real(const RadialGrid& g, const std::vector<double>& re) {
    require((int)re.size() == g.n, errc::incompatible_fields, "from_real: size mismatch");
    RadialField f = zero(g);
    for (int i = 0; i < g.n; ++i) f.values[i] = complexd(re[i], 0.0);
    return f;
  }

  int size() const { return grid.n; }
  bool is_finite() const {
    for (const auto& z : values)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }
  std::vector<double> real_part() const {
    std::vector<double> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
    return out;
  }
  std::vector<double> imag_part() const {
    std::vector<double> out(values.size());
    for (size_t i = 0; i < values.size(); ++i) out[i] = values[i].imag();
    return out;
  }
};

inline void check_same_grid(const RadialField& a, const RadialField& b, const char* who) {
  require(a.grid == b.grid, errc::incompatible_fields, std::string(who) + ": fields on different grids");
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

// int_0^rmax r^s * phi(r) dr for phi sampled at the interior nodes, phi
// smooth with a finite limit at 0 and decayed at r_max, s > -1.
//
// Composite trapezoid on [2h, r_max] (right endpoint value 0) with
// Euler-Maclaurin end corrections, plus a weight-exact core rule on [0, 2h]:
// phi is fitted by the quadratic through the first three nodes and
// r^s * quadratic is integrated in closed form. The split keeps full accuracy
// when s is fractional, where plain trapezoid degrades near the origin.
inline double radial_integral(const RadialGrid& g, double s, const std::vector<double>& phi) {
  require(s > -1.0, errc::invalid_exponent, "radial_integral: weight power must be > -1");
  require((int)phi.size() == g.n, errc::incompatible_fields, "radial_integral: size mismatch");
  const double h = g.spacing;
  const int n = g.n;
  if (n < 4) throw error(errc::invalid_configuration, "radial_integral: grid too small");

  // Core [0, 2h]: quadratic p through (h,phi0),(2h,phi1),(3h,phi2),
  // p(r) = c0 + c1 r + c2 r^2; moments m_k = (2h)^(s+k+1)/(s+k+1).
  const double x1 = h, x2 = 2 * h, x3 = 3 * h;
  const double f1 = phi[0], f2 = phi[1], f3 = phi[2];
  // Divided differences -> monomial coefficients.
  const double d12 = (f2 - f1) / (x2 - x1);
  const double d23 = (f3 - f2) / (x3 - x2);
  const double c2 = (d23 - d12) / (x3 - x1);
  const double c1 = d12 - c2 * (x1 + x2);
  const double c0 = f1 - c1 * x1 - c2 * x1 * x1;
  const double L = 2 * h;
  const double m0 = std::pow(L, s + 1) / (s + 1);
  const double m1 = std::pow(L, s + 2) / (s + 2);
  const double m2 = std::pow(L, s + 3) / (s + 3);
  const double core = c0 * m0 + c1 * m1 + c2 * m2;

  // Trapezoid on [2h, r_max], g_i = r_i^s phi_i, boundary value 0 at r_max.
  auto gv = [&](int i) { return std::pow(g.r(i), s) * phi[i]; };
  double acc = 0.5 * gv(1);
  for (int i = 2; i < n; ++i) acc += gv(i);
  double trap = h * acc;

  // Euler-Maclaurin corrections: -(h^2/12)(g'(r_max) - g'(2h)).
  const double gp_left = (gv(2) - gv(0)) / (2 * h);
  const double gp_right = (gv(n - 2) - 4.0 * gv(n - 1)) / (2 * h);  // one-sided, f(r_max)=0
  const double em = -(h * h / 12.0) * (gp_right - gp_left);

  return core + trap + em;
}

// ---------------------------------------------------------------------------
// Derivatives
// ---------------------------------------------------------------------------

// Fourth-order centered derivative of v = r*f on the extended node set.
// v(0) = 0 exactly, v(-r) = -v(r) (odd extension through the origin), and
// v = 0 beyond the wall. Returns d[0..n-1] = v'(r_i) plus v'(0) and v'(r_max).
struct VDeriv {
  std::vector<double> d;
  double d0 = 0.0;      // v'(0)
  double dwall = 0.0;   // v'(r_max)
};

inline VDeriv dv_centered4(const RadialGrid& g, const std::vector<double>& v) {
  const int n = g.n;
  const double h = g.spacing;
  auto at = [&](int j) -> double {  // j in extended index space, node r = j*h
    if (j >= 1 && j <= n) return v[j - 1];
    if (j == 0) return 0.0;
    if (j < 0) return -at(-j);
    return 0.0;  // beyond the wall
  };
  VDeriv out;
  out.d.resize(n);
  const double c = 1.0 / (12.0 * h);
  for (int j = 1; j <= n; ++j)
    out.d[j - 1] = c * (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2));
  out.d0 = c * (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2));
  out.dwall = c * (-at(n + 3) + 8.0 * at(n + 2) - 8.0 * at(n) + at(n - 1));
  return out;
}

// Pointwise radial derivative samples f'(r_i), via f' = (v' - f)/r.
inline RadialField radial_derivative(const RadialField& f) {
  const RadialGrid& g = f.grid;
  std::vector<double> vre(g.n), vim(g.n);
  for (int i = 0; i < g.n; ++i) {
    vre[i] = g.r(i) * f.values[i].real();
    vim[i] = g.r(i) * f.values[i].imag();
  }
  VDeriv dre = dv_centered4(g, vre);
  VDeriv dim = dv_centered4(g, vim);
  RadialField out = RadialField::zero(g);
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    out.values[i] = complexd((dre.d[i] - f.values[i].real()) / r,
                             (dim.d[i] - f.values[i].imag()) / r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Norms and inner products
// ---------------------------------------------------------------------------

// ||f||_L2^2 = 4 pi int |v|^2 dr, v = r f. Trapezoid with zero end values is
// exact summation here; the tiny EM correction at the wall is kept for
// generic fields.
inline double l2_sq(const RadialField& f) {
  const RadialGrid& g = f.grid;
  const double h = g.spacing;
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.r(i);
    acc += std::norm(f.values[i]) * r * r;
  }
  auto gv = [&](int i) { return std::norm(f.values[i]) * g.r(i) * g.r(i); };
  const int n = g.n;
  const double gp_right = (gv(n - 2) - 4.0 * gv(n - 1)) / (2 * h);
  return four_pi * (h * acc - (h * h / 12.0) * gp_right);
}

// ||grad f||_L2^2 for radial f. Identity: int |grad u|^2 dx = 4 pi int |v'|^2 dr
// with v = r*u (the cross terms telescope and the boundary terms vanish), so
// the kinetic functional reduces to a clean one-dimensional integral.
inline double grad_l2_sq(const RadialField& f) {
  const RadialGrid& g = f.grid;
  const int n = g.n;
  const double h = g.spacing;
  std::vector<double> vre(n), vim(n);
  for (int i = 0; i < n; ++i) {
    vre[i] = g.r(i) * f.values[i].real();
    vim[i] = g.r(i) * f.values[i].imag();
  }
  VDeriv dre = dv_centered4(g, vre);
  VDeriv dim = dv_centered4(g, vim);
  auto gsq = [&](int i) { return dre.d[i] * dre.d[i] + dim.d[i] * dim.d[i]; };
  const double g0 = dre.d0 * dre.d0 + dim.d0 * dim.d0;
  const double gw = dre.dwall * dre.dwall + dim.dwall * dim.dwall;
  double acc = 0.5 * g0 + 0.5 * gw;
  for (int i = 0; i < n; ++i) acc += gsq(i);
  // g'(0) = 2 v'(0) v''(0) = 0 by symmetry; one-sided estimate at the wall.
  const double gp_right = (gsq(n - 2) - 4.0 * gsq(n - 1) + 3.0 * gw) / (2 * h);
  return four_pi * (h * acc - (h * h / 12.0) * gp_right);
}

inline double norm_h1_sq(const RadialField& f) { return grad_l2_sq(f) + l2_sq(f); }

inline double norm_lq(const RadialField& f, double q) {
  require(q >= 1.0, errc::invalid_exponent, "norm_lq: exponent must be >= 1");
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& z : f.values) m = std::max(m, std::abs(z));
    return m;
  }
  std::vector<double> phi(f.grid.n);
  for (int i = 0; i < f.grid.n; ++i) phi[i] = std::pow(std::abs(f.values[i]), q);
  const double I = radial_integral(f.grid, 2.0, phi);
  return std::pow(std::max(0.0, four_pi * I), 1.0 / q);
}

// int |x|^{-b} |f|^4 dx = 4 pi int r^{2-b} |f|^4 dr.
inline double weighted_quartic(const RadialField& f, double b) {
  require(b > 0.0 && b < 1.0, errc::invalid_configuration, "weighted_quartic: b must lie in (0,1)");
  std::vector<double> phi(f.grid.n);
  for (int i = 0; i < f.grid.n; ++i) phi[i] = std::norm(f.values[i]) * std::norm(f.values[i]);
  return four_pi * radial_integral(f.grid, 2.0 - b, phi);
}

// (f,g) = 4 pi int conj(f) g r^2 dr; conjugate-linear in the first slot.
inline complexd inner(const RadialField& f, const RadialField& g) {
  check_same_grid(f, g, "inner");
  const int n = f.grid.n;
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    const complexd p = std::conj(f.values[i]) * g.values[i];
    re[i] = p.real();
    im[i] = p.imag();
  }
  return four_pi * complexd(radial_integral(f.grid, 2.0, re),
                            radial_integral(f.grid, 2.0, im));
}

// Real L^2 pairing of the real parts, used by the modulation projections.
inline double pair_real(const RadialField& f, const RadialField& g) {
  check_same_grid(f, g, "pair_real");
  const int n = f.grid.n;
  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) p[i] = f.values[i].real() * g.values[i].real();
  return four_pi * radial_integral(f.grid, 2.0, p);
}

struct NormReport {
  double l2_sq = 0.0;
  double grad_l2_sq = 0.0;
  std::vector<std::pair<double, double>> lq;  // (q, ||f||_q)
  double potential = 0.0;                     // int |x|^{-b} |f|^4 dx
};

inline NormReport norm_report(const RadialField& f, double b,
                              const std::vector<double>& qs = {2.0, 4.0, 6.0}) {
  NormReport rep;
  rep.l2_sq = l2_sq(f);
  rep.grad_l2_sq = grad_l2_sq(f);
  for (double q : qs) rep.lq.emplace_back(q, norm_lq(f, q));
  rep.potential = weighted_quartic(f, b);
  return rep;
}

// ---------------------------------------------------------------------------
// Interpolation (used by rescaling and grid transfer)
// ---------------------------------------------------------------------------

// Cubic 4-point Lagrange interpolation of a radial function at radius x >= 0,
// zero beyond the wall. Near the origin the interpolation runs in the even
// variable s = r^2, which respects radial symmetry without inventing a value
// at r = 0.
inline complexd interp_radial(const RadialField& f, double x) {
  const RadialGrid& g = f.grid;
  const double h = g.spacing;
  if (x >= g.r_max) return complexd(0.0, 0.0);
  auto at = [&](int j) -> complexd {  // node index, r = j*h, j >= 1
    if (j >= 1 && j <= g.n) return f.values[j - 1];
    return complexd(0.0, 0.0);
  };
  if (x < 2 * h) {
    // Quadratic in s = r^2 through the first three nodes.
    const double s = x * x;
    const double s1 = h * h, s2 = 4 * h * h, s3 = 9 * h * h;
    const double w1 = (s - s2) * (s - s3) / ((s1 - s2) * (s1 - s3));
    const double w2 = (s - s1) * (s - s3) / ((s2 - s1) * (s2 - s3));
    const double w3 = (s - s1) * (s - s2) / ((s3 - s1) * (s3 - s2));
    return w1 * at(1) + w2 * at(2) + w3 * at(3);
  }
  int j1 = (int)std::floor(x / h);
  j1 = std::max(2, std::min(j1, g.n));  // keep the stencil off the origin
  const int j0 = j1 - 1, j2 = j1 + 1, j3 = j1 + 2;
  const double x0 = j0 * h, x1 = j1 * h, x2 = j2 * h, x3 = j3 * h;
  auto w = [&](double a, double bq, double c, double dd) {
    return ((x - bq) * (x - c) * (x - dd)) / ((a - bq) * (a - c) * (a - dd));
  };
  return w(x0, x1, x2, x3) * at(j0) + w(x1, x0, x2, x3) * at(j1) +
         w(x2, x0, x1, x3) * at(j2) + w(x3, x0, x1, x2) * at(j3);
}

}  // namespace inls
