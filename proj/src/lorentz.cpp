#include "o13/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace o13 {

Mat4 minkowski_metric() { return Mat4::diagonal(1.0, -1.0, -1.0, -1.0); }

Mat4 spatial_reflection() { return Mat4::diagonal(1.0, -1.0, -1.0, -1.0); }

Mat4 defining_reflection(K4Charge kappa) {
  switch (k4_index(kappa)) {
    case 0: return Mat4::identity();
    case 1: return spatial_reflection();
    case 2: return -spatial_reflection();
    default: return -Mat4::identity();
  }
}

namespace {

constexpr double eps3(int i, int j, int k) {
  return 0.5 * (i - j) * (j - k) * (k - i);
}

}  // namespace

Mat4 generator(GeneratorKind kind, int axis) {
  if (axis < 1 || axis > 3)
    throw std::invalid_argument("generator axis must be 1, 2 or 3");
  Mat4 m;
  if (kind == GeneratorKind::boost) {
    m(0, axis) = 1.0;
    m(axis, 0) = 1.0;
  } else {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) m(a, b) = -eps3(axis, a, b);
  }
  return m;
}

Mat4 boost(const Vec3& rapidity) {
  return expm(algebra_element(rapidity, {0.0, 0.0, 0.0}).entries);
}

Mat4 rotation(const Vec3& axis_angle) {
  return expm(algebra_element({0.0, 0.0, 0.0}, axis_angle).entries);
}

AlgebraElement algebra_element(const Vec3& omega, const Vec3& theta) {
  AlgebraElement e;
  e.boost_coords = omega;
  e.rotation_coords = theta;
  for (int i = 1; i <= 3; ++i) {
    e.entries = e.entries + generator(GeneratorKind::boost, i) * omega[i - 1] +
                generator(GeneratorKind::rotation, i) * theta[i - 1];
  }
  return e;
}

AlgebraElement algebra_from_matrix(const Mat4& m) {
  AlgebraElement e;
  e.entries = m;
  e.boost_coords = {m(0, 1), m(0, 2), m(0, 3)};
  e.rotation_coords = {m(3, 2), m(1, 3), m(2, 1)};
  return e;
}

bool is_lorentz(const Mat4& m, double tol) {
  const Mat4 g = minkowski_metric();
  return max_abs_diff(m.transposed() * g * m, g) <= tol;
}

bool is_proper_orthochronous(const Mat4& m, double tol) {
  return is_lorentz(m, tol) && m.det() > 0.0 && m(0, 0) >= 1.0 - tol;
}

std::string_view component_name(GroupComponent c) {
  switch (c) {
    case GroupComponent::identity: return "1";
    case GroupComponent::parity_like: return "R";
    case GroupComponent::time_reversing: return "-R";
    default: return "-1";
  }
}

GroupComponent component_of(const Mat4& m, double tol) {
  if (!is_lorentz(m, tol))
    throw std::invalid_argument(
        "component_of: input violates the metric condition");
  const bool proper = m.det() > 0.0;
  const bool forward = m(0, 0) > 0.0;
  if (proper && forward) return GroupComponent::identity;
  if (!proper && forward) return GroupComponent::parity_like;
  if (!proper && !forward) return GroupComponent::time_reversing;
  return GroupComponent::total_inversion;
}

PolarFactors polar_decompose(const Mat4& lambda) {
  if (!is_proper_orthochronous(lambda))
    throw std::invalid_argument(
        "polar_decompose: input is not proper orthochronous");

  const SymEigen eig = jacobi_eigen(lambda.transposed() * lambda);

  // B = Q sqrt(D) Q^T assembled symmetrically; B^{-1} likewise.
  Mat4 b, binv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0, si = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double root = std::sqrt(eig.w[k]);
        s += root * eig.q(i, k) * eig.q(j, k);
        si += eig.q(i, k) * eig.q(j, k) / root;
      }
      b(i, j) = s;
      binv(i, j) = si;
    }

  PolarFactors out;
  out.boost = b;
  out.rotation = lambda * binv;
  return out;
}

Mat4 outer_automorphism(const Mat4& m) {
  const Mat4 r = spatial_reflection();
  return r * m * r;
}

}  // namespace o13
