#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace sigmono {

struct DivisionBySingularJet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kTauJet = 1e-13;

/// Truncated Taylor series in one variable with an explicit leading-power
/// valuation: represents rho^valuation * (c[0] + c[1] rho + ... + c[order] rho^order).
/// The zero jet is flagged; otherwise c[0] may be anything (valuation is
/// structural, not normalized on the fly).
class Jet {
 public:
  Jet() : zero_(true), val_(0) {}
  Jet(int valuation, std::vector<double> coeffs)
      : zero_(false), val_(valuation), c_(std::move(coeffs)) {
    if (c_.empty()) zero_ = true;
  }
  static Jet zero_jet(int order) {
    Jet j;
    j.c_.assign(order + 1, 0.0);
    return j;
  }
  static Jet constant(double v, int order) {
    std::vector<double> c(order + 1, 0.0);
    c[0] = v;
    return Jet(0, std::move(c));
  }

  bool is_zero() const { return zero_; }
  int valuation() const { return val_; }
  int order() const { return (int)c_.size() - 1; }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const { return (k >= 0 && k <= order()) ? c_[k] : 0.0; }

  /// Coefficient of the absolute power rho^p.
  double abs_coeff(int p) const {
    if (zero_) return 0.0;
    return coeff(p - val_);
  }

  /// Shift the valuation down by k (exact cancellation of rho^k).
  Jet shift(int k) const {
    if (zero_) return *this;
    Jet r = *this;
    r.val_ -= k;
    return r;
  }

  /// Drop near-zero leading coefficients, raising the valuation. Used after
  /// structurally exact constructions; never crosses the order budget.
  Jet normalized(double tau = kTauJet) const {
    if (zero_) return *this;
    size_t lead = 0;
    while (lead < c_.size() && std::abs(c_[lead]) <= tau) ++lead;
    if (lead == c_.size()) return zero_jet(order());
    Jet r;
    r.zero_ = false;
    r.val_ = val_ + (int)lead;
    r.c_.assign(c_.begin() + lead, c_.end());
    return r;
  }

  double eval(double rho) const {
    if (zero_) return 0.0;
    double acc = 0.0;
    for (int k = order(); k >= 0; --k) acc = acc * rho + c_[k];
    return acc * std::pow(rho, val_);
  }

 private:
  bool zero_;
  int val_;
  std::vector<double> c_;
};

inline Jet jet_add(const Jet& a, const Jet& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int val = std::min(a.valuation(), b.valuation());
  int top = std::min(a.valuation() + a.order(), b.valuation() + b.order());
  // Addition can only be trusted up to the shorter absolute order.
  std::vector<double> c(top - val + 1, 0.0);
  for (int p = val; p <= top; ++p) c[p - val] = a.abs_coeff(p) + b.abs_coeff(p);
  return Jet(val, std::move(c));
}

inline Jet jet_scale(const Jet& a, double s) {
  if (a.is_zero() || s == 0.0) return Jet::zero_jet(a.order());
  std::vector<double> c = a.coeffs();
  for (double& v : c) v *= s;
  return Jet(a.valuation(), std::move(c));
}

inline Jet jet_mul(const Jet& a, const Jet& b) {
  int order = std::min(a.order(), b.order());
  if (a.is_zero() || b.is_zero()) return Jet::zero_jet(order);
  std::vector<double> c(order + 1, 0.0);
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeff(i) == 0.0) continue;
    for (int j = 0; j <= order - i; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return Jet(a.valuation() + b.valuation(), std::move(c));
}

inline Jet jet_div(const Jet& a, const Jet& b) {
  if (b.is_zero() || std::abs(b.coeff(0)) < kTauJet)
    throw DivisionBySingularJet("jet_div: divisor leading coefficient below tau");
  int order = std::min(a.order(), b.order());
  if (a.is_zero()) return Jet::zero_jet(order);
  std::vector<double> q(order + 1, 0.0);
  for (int k = 0; k <= order; ++k) {
    double s = a.coeff(k);
    for (int m = 1; m <= k; ++m) s -= b.coeff(m) * q[k - m];
    q[k] = s / b.coeff(0);
  }
  return Jet(a.valuation() - b.valuation(), std::move(q));
}

inline Jet jet_pow(const Jet& a, int k) {
  if (k < 1) throw std::invalid_argument("jet_pow: k must be positive");
  Jet r = a;
  for (int i = 1; i < k; ++i) r = jet_mul(r, a);
  return r;
}

}  // namespace sigmono
