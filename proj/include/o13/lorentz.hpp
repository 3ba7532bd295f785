#pragma once

#include <string_view>

#include "o13/k4.hpp"
#include "o13/mat4.hpp"

namespace o13 {

/// Membership tolerance on ||L^T g L - g||_inf. Comfortably above the
/// round-off accumulated at rapidities up to ~5, tight enough to reject
/// reflections.
inline constexpr double lorentz_tolerance = 1e-9;

/// cosh overflow guard for generator-built boosts.
inline constexpr double max_rapidity = 20.0;

/// Minkowski metric, signature (+,-,-,-).
Mat4 minkowski_metric();

/// R = diag(1,-1,-1,-1), the spatial reflection of the defining rep.
Mat4 spatial_reflection();

/// Defining-representation image of a reflection sector:
/// 1 -> I, P -> R, T -> -R, PT -> -I.
Mat4 defining_reflection(K4Charge kappa);

enum class GeneratorKind { boost, rotation };

/// Fixed generator basis: boosts K_i symmetric with unit (0,i) entries,
/// rotations L_i with spatial block (L_i)_ab = -eps_{iab}. Axes are 1..3.
Mat4 generator(GeneratorKind kind, int axis);

/// exp(omega . K); proper orthochronous for any finite rapidity vector.
Mat4 boost(const Vec3& rapidity);

/// exp(theta . L); spatial rotation about theta/|theta| by |theta|.
Mat4 rotation(const Vec3& axis_angle);

/// Element omega . K + theta . L of the Lie algebra in the fixed basis.
struct AlgebraElement {
  Mat4 entries;
  Vec3 boost_coords{};
  Vec3 rotation_coords{};
};

AlgebraElement algebra_element(const Vec3& omega, const Vec3& theta);

/// Reads the basis coordinates off an algebra matrix (row 0 carries the
/// boost part, the spatial antisymmetric block the rotation part).
AlgebraElement algebra_from_matrix(const Mat4& m);

bool is_lorentz(const Mat4& m, double tol = lorentz_tolerance);
bool is_proper_orthochronous(const Mat4& m, double tol = lorentz_tolerance);

/// The four connected components of O(1,3), tagged by their
/// defining-representation representatives {1, R, -R, -1}.
enum class GroupComponent {
  identity,          // det +1, forward time
  parity_like,       // det -1, forward time   (representative R)
  time_reversing,    // det -1, reversed time  (representative -R)
  total_inversion,   // det +1, reversed time  (representative -1)
};

std::string_view component_name(GroupComponent c);

/// Classifies a Lorentz matrix by sign of det and sign of the (0,0) entry.
/// Throws std::invalid_argument if the metric condition fails.
GroupComponent component_of(const Mat4& m, double tol = lorentz_tolerance);

struct PolarFactors {
  Mat4 rotation;  // block-diag(1, O) with O in SO(3)
  Mat4 boost;     // symmetric positive definite Lorentz matrix
};

/// Lambda = rotation * boost, with boost the unique SPD square root of
/// Lambda^T Lambda (symmetric Jacobi eigendecomposition). Throws if the
/// input is not proper orthochronous.
PolarFactors polar_decompose(const Mat4& lambda);

/// The non-trivial outer automorphism: conjugation by spatial_reflection().
/// Fixes rotation generators, negates boost generators; involution with
/// determinant -1 on the six-dimensional algebra.
Mat4 outer_automorphism(const Mat4& m);

}  // namespace o13
