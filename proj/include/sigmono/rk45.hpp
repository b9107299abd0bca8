#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sigmono {

struct IntegratorFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Dormand-Prince 5(4) stepper over std::vector<double> states.
/// Exposes a single-step API so callers can watch event functions between
/// accepted steps (section crossings, angle targets).
class Rk45 {
 public:
  using Rhs = std::function<void(double t, const std::vector<double>& y,
                                 std::vector<double>& dydt)>;

  Rk45(Rhs rhs, double tol) : rhs_(std::move(rhs)), atol_(tol), rtol_(tol) {}

  /// One accepted step from (t, y) toward t_end (never overshoots).
  /// Returns the new t; updates y and the suggested step size h.
  double step(double t, std::vector<double>& y, double& h, double t_end) {
    const double dir = (t_end >= t) ? 1.0 : -1.0;
    if (h == 0.0) h = dir * 1e-6;
    if (dir * h < 0.0) h = -h;
    const size_t n = y.size();
    std::vector<std::vector<double>> k(7, std::vector<double>(n));
    std::vector<double> ytmp(n), y5(n), y4(n);
    for (int attempt = 0; attempt < 60; ++attempt) {
      if (dir * (t + h - t_end) > 0.0) h = t_end - t;
      rhs_(t, y, k[0]);
      for (int s = 1; s < 7; ++s) {
        for (size_t i = 0; i < n; ++i) {
          double acc = 0.0;
          for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
          ytmp[i] = y[i] + h * acc;
        }
        rhs_(t + kC[s] * h, ytmp, k[s]);
      }
      double err = 0.0;
      for (size_t i = 0; i < n; ++i) {
        double a5 = 0.0, a4 = 0.0;
        for (int j = 0; j < 7; ++j) {
          a5 += kB5[j] * k[j][i];
          a4 += kB4[j] * k[j][i];
        }
        y5[i] = y[i] + h * a5;
        y4[i] = y[i] + h * a4;
        double sc = atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y5[i]));
        double e = (y5[i] - y4[i]) / sc;
        err += e * e;
      }
      err = std::sqrt(err / (double)n);
      if (err <= 1.0 || std::abs(h) <= kHMin) {
        double tn = t + h;
        y = y5;
        double fac = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        fac = std::min(5.0, std::max(0.2, fac));
        h *= fac;
        return tn;
      }
      h *= std::min(0.9, std::max(0.2, 0.9 * std::pow(err, -0.2)));
    }
    throw IntegratorFailure("rk45: step size control failed to converge");
  }

  /// Integrate y from t0 to t1; optional observer sees each accepted state.
  void integrate(double t0, double t1, std::vector<double>& y,
                 const std::function<void(double, const std::vector<double>&)>&
                     observer = nullptr) {
    double t = t0, h = 0.0;
    if (observer) observer(t, y);
    int steps = 0;
    while ((t1 - t) * ((t1 >= t0) ? 1.0 : -1.0) > 1e-15 * (1.0 + std::abs(t1))) {
      t = step(t, y, h, t1);
      if (observer) observer(t, y);
      if (++steps > kMaxSteps)
        throw IntegratorFailure("rk45: exceeded maximum step count");
    }
  }

 private:
  static constexpr int kMaxSteps = 2000000;
  static constexpr double kHMin = 1e-14;
  static constexpr double kC[7] = {0.0,      1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0,
                                   8.0 / 9.0, 1.0,       1.0};
  static constexpr double kA[7][6] = {
      {0, 0, 0, 0, 0, 0},
      {1.0 / 5.0, 0, 0, 0, 0, 0},
      {3.0 / 40.0, 9.0 / 40.0, 0, 0, 0, 0},
      {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0, 0, 0},
      {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0,
       0},
      {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
       -5103.0 / 18656.0, 0},
      {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
       11.0 / 84.0}};
  static constexpr double kB5[7] = {35.0 / 384.0,     0.0,
                                    500.0 / 1113.0,   125.0 / 192.0,
                                    -2187.0 / 6784.0, 11.0 / 84.0,
                                    0.0};
  static constexpr double kB4[7] = {5179.0 / 57600.0,    0.0,
                                    7571.0 / 16695.0,    393.0 / 640.0,
                                    -92097.0 / 339200.0, 187.0 / 2100.0,
                                    1.0 / 40.0};

  Rhs rhs_;
  double atol_, rtol_;
};

}  // namespace sigmono
