#include "sigmono/bipoly.hpp"

#include <numeric>
#include <sstream>

namespace sigmono {

double BiPoly::eval(double x, double y) const {
  if (terms_.empty()) return 0.0;
  // Group terms by y-exponent, Horner in x inside each group, Horner in y
  // across groups.
  std::map<int, std::vector<std::pair<int, double>>> by_j;
  for (auto& [k, c] : terms_) by_j[k.second].push_back({k.first, c});

  int jmax = by_j.rbegin()->first;
  double acc = 0.0;
  int jprev = -1;
  for (auto it = by_j.rbegin(); it != by_j.rend(); ++it) {
    int j = it->first;
    if (jprev >= 0) {
      for (int k = 0; k < jprev - j; ++k) acc *= y;
    } else {
      (void)jmax;
    }
    // Horner in x over sparse exponents (descending).
    double gx = 0.0;
    int iprev = -1;
    for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit) {
      int i = rit->first;
      if (iprev >= 0)
        for (int k = 0; k < iprev - i; ++k) gx *= x;
      gx += rit->second;
      iprev = i;
    }
    for (int k = 0; k < iprev; ++k) gx *= x;
    acc += gx;
    jprev = j;
  }
  for (int k = 0; k < jprev; ++k) acc *= y;
  return acc;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
  return r;
}

BiPoly BiPoly::homogeneous_part(int m) const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    if (k.first + k.second == m) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (auto& [a, ca] : terms_)
    for (auto& [b, cb] : o.terms_)
      r.add_term(a.first + b.first, a.second + b.second, ca * cb);
  return r;
}

BiPoly BiPoly::operator*(double s) const {
  BiPoly r;
  for (auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
  return r;
}

BiPoly BiPoly::reflect_x() const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    r.add_term(k.first, k.second, (k.first % 2 == 0) ? c : -c);
  return r;
}

BiPoly BiPoly::integrate_x() const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    r.add_term(k.first + 1, k.second, c / (k.first + 1));
  return r;
}

BiPoly BiPoly::integrate_y() const {
  BiPoly r;
  for (auto& [k, c] : terms_)
    r.add_term(k.first, k.second + 1, c / (k.second + 1));
  return r;
}

bool BiPoly::approx_equal(const BiPoly& o, double tol) const {
  BiPoly d = *this - o;
  for (auto& [k, c] : d.terms_)
    if (std::abs(c) > tol) return false;
  return true;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    os << std::abs(c);
    if (k.first) os << "*x^" << k.first;
    if (k.second) os << "*y^" << k.second;
    first = false;
  }
  return os.str();
}

WeightPair::WeightPair(int x, int y) : wx(x), wy(y) {
  if (wx <= 0 || wy <= 0)
    throw std::invalid_argument("WeightPair: weights must be positive");
  int g = std::gcd(wx, wy);
  wx /= g;
  wy /= g;
}

}  // namespace sigmono
