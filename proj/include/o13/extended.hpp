#pragma once

#include "o13/k4.hpp"
#include "o13/lorentz.hpp"

namespace o13 {

/// Element (Lambda, kappa) of SO+(1,3) x| K4. Lambda is proper
/// orthochronous, kappa the reflection sector. Multiplication is twisted
/// by psi: {1, P, T, PT} -> {id, O, O, id} with O the outer automorphism.
struct ExtendedElement {
  Mat4 lambda;
  K4Charge kappa;
};

ExtendedElement extended_identity();

/// (L2, k2) . (L1, k1) = (L2 * psi_{k2}(L1), k2 k1).
ExtendedElement compose(const ExtendedElement& e2, const ExtendedElement& e1);

/// (psi_k(Lambda^{-1}), k); kappa is its own inverse.
ExtendedElement inverse(const ExtendedElement& e);

/// Faithful image Lambda * D(kappa) in the defining representation; a group
/// isomorphism onto the O(1,3) matrices covering all four components.
Mat4 to_matrix(const ExtendedElement& e);

/// Entrywise matrix closeness and exact sector match.
bool approx_equal(const ExtendedElement& a, const ExtendedElement& b,
                  double tol = lorentz_tolerance);

}  // namespace o13
