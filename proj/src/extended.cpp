#include "o13/extended.hpp"

namespace o13 {

namespace {

// psi maps {1, P, T, PT} to {id, O, O, id}
Mat4 psi(K4Charge kappa, const Mat4& lambda) {
  const bool twist = (kappa == k4_p) || (kappa == k4_t);
  return twist ? outer_automorphism(lambda) : lambda;
}

Mat4 lorentz_inverse(const Mat4& lambda) {
  const Mat4 g = minkowski_metric();
  return g * lambda.transposed() * g;
}

}  // namespace

ExtendedElement extended_identity() { return {Mat4::identity(), k4_one}; }

ExtendedElement compose(const ExtendedElement& e2, const ExtendedElement& e1) {
  return {e2.lambda * psi(e2.kappa, e1.lambda), mul(e2.kappa, e1.kappa)};
}

ExtendedElement inverse(const ExtendedElement& e) {
  return {psi(e.kappa, lorentz_inverse(e.lambda)), e.kappa};
}

Mat4 to_matrix(const ExtendedElement& e) {
  return e.lambda * defining_reflection(e.kappa);
}

bool approx_equal(const ExtendedElement& a, const ExtendedElement& b,
                  double tol) {
  return a.kappa == b.kappa && approx_equal(a.lambda, b.lambda, tol);
}

}  // namespace o13
