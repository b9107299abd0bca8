#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigmono {

/// Sparse bivariate real polynomial. Terms map exponent pairs (i,j) to
/// coefficients; zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(std::map<Key, double> terms) {
    for (auto& [k, c] : terms) set(k.first, k.second, c);
  }

  static BiPoly zero() { return BiPoly{}; }
  static BiPoly constant(double c) {
    BiPoly p;
    p.set(0, 0, c);
    return p;
  }
  static BiPoly x() {
    BiPoly p;
    p.set(1, 0, 1.0);
    return p;
  }
  static BiPoly y() {
    BiPoly p;
    p.set(0, 1, 1.0);
    return p;
  }
  static BiPoly monomial(int i, int j, double c) {
    BiPoly p;
    p.set(i, j, c);
    return p;
  }

  void set(int i, int j, double c) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    if (c == 0.0)
      terms_.erase({i, j});
    else
      terms_[{i, j}] = c;
  }
  void add_term(int i, int j, double c) {
    auto it = terms_.find({i, j});
    double v = (it == terms_.end() ? 0.0 : it->second) + c;
    set(i, j, v);
  }

  double coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? 0.0 : it->second;
  }
  const std::map<Key, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
  }
  /// Smallest total degree with a nonzero term; -1 for the zero polynomial.
  int low_degree() const {
    int d = -1;
    for (auto& [k, c] : terms_) {
      int t = k.first + k.second;
      if (d < 0 || t < d) d = t;
    }
    return d;
  }

  /// Horner-grouped evaluation: collect per-y-power polynomials in x, Horner
  /// each in x, then Horner the result in y.
  double eval(double x, double y) const;

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly homogeneous_part(int m) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(double s) const;
  BiPoly operator-() const { return *this * -1.0; }

  /// p(-x, y)
  BiPoly reflect_x() const;

  /// Antiderivative in x (resp. y) with zero constant.
  BiPoly integrate_x() const;
  BiPoly integrate_y() const;

  bool approx_equal(const BiPoly& o, double tol = 1e-12) const;

  std::string str() const;

 private:
  std::map<Key, double> terms_;
};

inline BiPoly operator*(double s, const BiPoly& p) { return p * s; }

/// Planar polynomial vector field (P, Q) = (xdot, ydot).
struct PlanarField {
  BiPoly p_comp;  // xdot
  BiPoly q_comp;  // ydot

  double px(double x, double y) const { return p_comp.eval(x, y); }
  double qy(double x, double y) const { return q_comp.eval(x, y); }

  PlanarField negate() const { return {-p_comp, -q_comp}; }
  /// Field after the involution (x,y,t) -> (-x,y,-t).
  PlanarField involute_x() const {
    return {p_comp.reflect_x(), -(q_comp.reflect_x())};
  }
  PlanarField scale(double s) const { return {p_comp * s, q_comp * s}; }
};

/// Quasi-homogeneous weight pair, reduced so gcd(wx, wy) = 1.
struct WeightPair {
  int wx = 1;
  int wy = 1;

  WeightPair() = default;
  WeightPair(int x, int y);
};

struct CenterCertificate {
  enum class Kind { None, Hamiltonian, Reversible };
  Kind kind = Kind::None;
  std::optional<BiPoly> energy;  // set for Hamiltonian

  bool present() const { return kind != Kind::None; }
  static CenterCertificate none() { return {}; }
  static CenterCertificate hamiltonian(BiPoly h) {
    return {Kind::Hamiltonian, std::move(h)};
  }
  static CenterCertificate reversible() { return {Kind::Reversible, {}}; }
};

}  // namespace sigmono
