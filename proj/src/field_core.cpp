#include "sigmono/field_core.hpp"

#include <algorithm>
#include <numeric>

namespace sigmono {

BiPoly lie_derivative(const PlanarField& X, const BiPoly& f) {
  return f.dx() * X.p_comp + f.dy() * X.q_comp;
}

std::vector<BiPoly> lie_chain(const PlanarField& X, const BiPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("lie_chain: n must be >= 1");
  std::vector<BiPoly> out;
  out.reserve(n);
  BiPoly cur = f;
  for (int k = 0; k < n; ++k) {
    cur = lie_derivative(X, cur);
    out.push_back(cur);
  }
  return out;
}

BiPoly divergence(const PlanarField& X) {
  return X.p_comp.dx() + X.q_comp.dy();
}

std::optional<BiPoly> hamiltonian_certificate(const PlanarField& X,
                                              double tol) {
  if (!divergence(X).approx_equal(BiPoly::zero(), tol)) return std::nullopt;
  // H = int Q dx + psi(y), with psi'(y) = -P - d/dy int Q dx.
  BiPoly hx = X.q_comp.integrate_x();
  BiPoly rem = -X.p_comp - hx.dy();
  // rem must depend on y only; divergence-free guarantees it up to roundoff.
  BiPoly psi;
  for (auto& [k, c] : rem.terms()) {
    if (k.first != 0) {
      if (std::abs(c) > tol) return std::nullopt;
      continue;
    }
    psi.add_term(0, k.second + 1, c / (k.second + 1));
  }
  BiPoly h = hx + psi;
  h.add_term(0, 0, -h.eval(0.0, 0.0));
  return h;
}

bool reversibility_check(const PlanarField& X, double tol) {
  return X.p_comp.reflect_x().approx_equal(X.p_comp, tol) &&
         X.q_comp.reflect_x().approx_equal(-X.q_comp, tol);
}

WeightPair newton_polygon_weights(const PlanarField& X, bool /*f_is_y*/) {
  if (X.p_comp.is_zero() && X.q_comp.is_zero())
    throw DegenerateSupport("newton_polygon_weights: zero field");

  std::vector<std::pair<int, int>> pts;
  for (auto& [k, c] : X.p_comp.terms()) pts.push_back({k.first - 1, k.second});
  for (auto& [k, c] : X.q_comp.terms()) pts.push_back({k.first, k.second - 1});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Candidate edges: pairs with strictly negative slope whose supporting line
  // wx*i + wy*j = c has every support point on or above it.
  std::optional<WeightPair> best;
  double best_slope = -1.0;  // pick the steepest valid edge (the lowest one)
  for (size_t a = 0; a < pts.size(); ++a) {
    for (size_t b = a + 1; b < pts.size(); ++b) {
      auto [i1, j1] = pts[a];
      auto [i2, j2] = pts[b];
      int wx = j1 - j2, wy = i2 - i1;
      if (wx == 0 || wy == 0) continue;
      if (wx < 0) {
        wx = -wx;
        wy = -wy;
      }
      if (wy <= 0) continue;  // slope not strictly negative
      int g = std::gcd(wx, wy);
      wx /= g;
      wy /= g;
      long c0 = (long)wx * i1 + (long)wy * j1;
      bool supporting = true;
      for (auto& [i, j] : pts)
        if ((long)wx * i + (long)wy * j < c0) {
          supporting = false;
          break;
        }
      if (!supporting) continue;
      double slope = double(wx) / double(wy);
      if (!best || slope > best_slope) {
        best = WeightPair(wx, wy);
        best_slope = slope;
      }
    }
  }
  if (!best)
    throw DegenerateSupport(
        "newton_polygon_weights: no negative-slope supporting edge");
  return *best;
}

CenterCertificate center_certificate(const PlanarField& X) {
  if (auto h = hamiltonian_certificate(X)) return CenterCertificate::hamiltonian(*h);
  if (reversibility_check(X)) return CenterCertificate::reversible();
  return CenterCertificate::none();
}

}  // namespace sigmono
