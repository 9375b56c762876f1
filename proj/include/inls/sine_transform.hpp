#pragma once

// Discrete sine transform (DST-I) on the interior nodes of a uniform grid.
// Diagonalizes the second-difference operator with Dirichlet ends, which is
// what the time stepper and the ground-state polish both use.
//
// Normalization: forward coefficients c_k = (2/(n+1)) sum_j v_j sin(pi j k/(n+1)),
// inverse v_j = sum_k c_k sin(pi j k/(n+1)). So sin(pi m r / r_max) sampled on
// the grid transforms to a single unit coefficient at mode m, and
// sum_j v_j^2 = ((n+1)/2) sum_k c_k^2.

#include <fftw3.h>

#include <mutex>
#include <vector>

#include "inls/common.hpp"
#include "inls/radial.hpp"

namespace inls {

namespace detail {
inline std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

class SineTransform {
 public:
  explicit SineTransform(int n) : n_(n) {
    require(n >= 2, errc::invalid_configuration, "SineTransform: n too small");
    buf_ = (double*)fftw_malloc(sizeof(double) * n_);
    std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
    plan_ = fftw_plan_r2r_1d(n_, buf_, buf_, FFTW_RODFT00, FFTW_ESTIMATE);
  }
  ~SineTransform() {
    if (plan_) {
      std::lock_guard<std::mutex> lock(detail::fftw_plan_mutex());
      fftw_destroy_plan(plan_);
    }
    if (buf_) fftw_free(buf_);
  }
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  int size() const { return n_; }

  // c = (2/(n+1)) S v, where S is the unnormalized DST-I sum.
  void forward(const std::vector<double>& v, std::vector<double>& c) const {
    run(v, c, 1.0 / (n_ + 1));
  }
  // v = S c / 2
  void inverse(const std::vector<double>& c, std::vector<double>& v) const {
    run(c, v, 0.5);
  }

 private:
  void run(const std::vector<double>& in, std::vector<double>& out, double scale) const {
    require((int)in.size() == n_, errc::incompatible_fields, "SineTransform: size mismatch");
    out.resize(n_);
    for (int i = 0; i < n_; ++i) buf_[i] = in[i];
    fftw_execute(plan_);  // RODFT00: Y_k = 2 sum X_j sin(...)
    for (int i = 0; i < n_; ++i) out[i] = buf_[i] * scale;
  }

  int n_;
  double* buf_ = nullptr;
  fftw_plan plan_ = nullptr;
};

// Eigenvalue of -(d^2/dr^2) with Dirichlet ends on the grid, mode k = 1..n:
// second differences of sin(pi k r / r_max) reproduce it with factor
// (4/h^2) sin^2(pi k / (2(n+1))).
inline double dirichlet_laplacian_eig(const RadialGrid& g, int k) {
  const double sn = std::sin(0.5 * pi * k / (g.n + 1));
  return 4.0 / (g.spacing * g.spacing) * sn * sn;
}

}  // namespace inls
