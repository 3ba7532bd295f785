#pragma once

#include <array>

namespace o13 {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);

/// Dense 4x4 real matrix with value semantics, row-major, index 0 = time.
/// Small enough that everything is written out directly; no external
/// linear algebra is involved anywhere in the library.
class Mat4 {
 public:
  Mat4() = default;  // zero matrix

  static Mat4 identity();
  static Mat4 diagonal(double d0, double d1, double d2, double d3);

  double& operator()(int r, int c) { return a_[r * 4 + c]; }
  double operator()(int r, int c) const { return a_[r * 4 + c]; }

  Mat4 operator+(const Mat4& o) const;
  Mat4 operator-(const Mat4& o) const;
  Mat4 operator*(const Mat4& o) const;
  Mat4 operator*(double s) const;
  Mat4 operator-() const;
  Vec4 operator*(const Vec4& v) const;

  Mat4 transposed() const;
  double det() const;

  friend bool operator==(const Mat4&, const Mat4&) = default;

 private:
  std::array<double, 16> a_{};
};

inline Mat4 operator*(double s, const Mat4& m) { return m * s; }

Mat4 commutator(const Mat4& a, const Mat4& b);

/// Largest absolute entry.
double max_abs(const Mat4& m);
double max_abs_diff(const Mat4& a, const Mat4& b);
bool approx_equal(const Mat4& a, const Mat4& b, double tol);

/// Matrix exponential by scaling and squaring; the Taylor tail is summed
/// until terms fall below 1e-16 relative to the running result.
Mat4 expm(const Mat4& m);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations:
/// m = q * diag(w) * q^T with q orthogonal.
struct SymEigen {
  Mat4 q;
  Vec4 w;
};
SymEigen jacobi_eigen(const Mat4& symmetric);

}  // namespace o13
