#pragma once

#include <optional>
#include <vector>

#include "sigmono/bipoly.hpp"

namespace sigmono {

struct DegenerateSupport : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Lie derivative Xf = <grad f, X> = f_x P + f_y Q.
BiPoly lie_derivative(const PlanarField& X, const BiPoly& f);

/// [X f, X^2 f, ..., X^n f]
std::vector<BiPoly> lie_chain(const PlanarField& X, const BiPoly& f, int n);

/// P_x + Q_y
BiPoly divergence(const PlanarField& X);

/// If div X == 0, the energy H with xdot = -H_y, ydot = H_x, H(0,0) = 0.
std::optional<BiPoly> hamiltonian_certificate(const PlanarField& X,
                                              double tol = 1e-12);

/// True iff the field is invariant under (x,y,t) -> (-x,y,-t):
/// P(-x,y) = P(x,y) and Q(-x,y) = -Q(x,y) as polynomial identities.
bool reversibility_check(const PlanarField& X, double tol = 1e-12);

/// Quasi-homogeneous weights from the lowest negative-slope edge of the
/// Newton polygon (support points (i-1,j) from P and (i,j-1) from Q), reduced
/// to coprime integers. Fold detection upstream overrides this with (1, n).
WeightPair newton_polygon_weights(const PlanarField& X, bool f_is_y = true);

/// Full center certificate for one half field: Hamiltonian if conservative,
/// else Reversible if x-reversible, else None.
CenterCertificate center_certificate(const PlanarField& X);

}  // namespace sigmono
