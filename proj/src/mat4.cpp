#include "o13/mat4.hpp"

#include <cmath>

namespace o13 {

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Mat4 Mat4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

Mat4 Mat4::diagonal(double d0, double d1, double d2, double d3) {
  Mat4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

Mat4 Mat4::operator+(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const double aik = (*this)(i, k);
      for (int j = 0; j < 4; ++j) r(i, j) += aik * o(k, j);
    }
  return r;
}

Mat4 Mat4::operator*(double s) const {
  Mat4 r;
  for (int i = 0; i < 16; ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat4 Mat4::operator-() const { return *this * -1.0; }

Vec4 Mat4::operator*(const Vec4& v) const {
  Vec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Mat4 Mat4::transposed() const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = (*this)(j, i);
  return r;
}

double Mat4::det() const {
  // cofactor expansion along row 0 with explicit 3x3 minors
  auto minor3 = [this](int r0, int r1, int r2, int c0, int c1, int c2) {
    const Mat4& m = *this;
    return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
           m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
           m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
  };
  return (*this)(0, 0) * minor3(1, 2, 3, 1, 2, 3) -
         (*this)(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
         (*this)(0, 2) * minor3(1, 2, 3, 0, 1, 3) -
         (*this)(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

Mat4 commutator(const Mat4& a, const Mat4& b) { return a * b - b * a; }

double max_abs(const Mat4& m) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::fabs(m(i, j)));
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) { return max_abs(a - b); }

bool approx_equal(const Mat4& a, const Mat4& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

Mat4 expm(const Mat4& m) {
  // scale so the series argument has max entry <= 0.5, sum the Taylor
  // series to a 1e-16 tail, square back up
  int squarings = 0;
  double scale = max_abs(m);
  while (scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  Mat4 x = m * std::ldexp(1.0, -squarings);

  Mat4 result = Mat4::identity();
  Mat4 term = Mat4::identity();
  for (int k = 1; k <= 40; ++k) {
    term = term * x * (1.0 / k);
    result = result + term;
    if (max_abs(term) < 1e-16 * (1.0 + max_abs(result))) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

SymEigen jacobi_eigen(const Mat4& symmetric) {
  Mat4 a = symmetric;
  Mat4 q = Mat4::identity();

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int r = p + 1; r < 4; ++r) off += a(p, r) * a(p, r);
    if (off < 1e-30) break;

    for (int p = 0; p < 4; ++p) {
      for (int r = p + 1; r < 4; ++r) {
        if (std::fabs(a(p, r)) < 1e-300) continue;
        const double theta = (a(r, r) - a(p, p)) / (2.0 * a(p, r));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a(k, p), akr = a(k, r);
          a(k, p) = c * akp - s * akr;
          a(k, r) = s * akp + c * akr;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a(p, k), ark = a(r, k);
          a(p, k) = c * apk - s * ark;
          a(r, k) = s * apk + c * ark;
        }
        for (int k = 0; k < 4; ++k) {
          const double qkp = q(k, p), qkr = q(k, r);
          q(k, p) = c * qkp - s * qkr;
          q(k, r) = s * qkp + c * qkr;
        }
      }
    }
  }

  SymEigen out;
  out.q = q;
  for (int i = 0; i < 4; ++i) out.w[i] = a(i, i);
  return out;
}

}  // namespace o13
