#pragma once

#include <array>
#include <cmath>

namespace stableplace::geom {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double deg_to_rad(double d) { return d * (kPi / 180.0); }
inline double rad_to_deg(double r) { return r * (180.0 / kPi); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double px, double py, double pz) : x(px), y(py), z(pz) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : Vec3{0, 0, 0};
}

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Unsigned angle between two vectors, radians in [0, pi].
inline double angle_between(const Vec3& a, const Vec3& b) {
  const double na = norm(a), nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  double c = dot(a, b) / (na * nb);
  c = std::fmin(1.0, std::fmax(-1.0, c));
  return std::acos(c);
}

// Row-major 3x3 matrix. Rotations are world-from-object unless stated.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }

  double& operator()(int r, int c) { return m[3 * r + c]; }
  double operator()(int r, int c) const { return m[3 * r + c]; }

  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

  void set_row(int r, const Vec3& v) {
    m[3 * r] = v.x;
    m[3 * r + 1] = v.y;
    m[3 * r + 2] = v.z;
  }
  void set_col(int c, const Vec3& v) {
    m[c] = v.x;
    m[3 + c] = v.y;
    m[6 + c] = v.z;
  }

  Mat3 transposed() const {
    Mat3 t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) t(r, c) = (*this)(c, r);
    return t;
  }

  double det() const {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) -
           m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
  }

  double trace() const { return m[0] + m[4] + m[8]; }
};

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a.m[0] * v.x + a.m[1] * v.y + a.m[2] * v.z,
          a.m[3] * v.x + a.m[4] * v.y + a.m[5] * v.z,
          a.m[6] * v.x + a.m[7] * v.y + a.m[8] * v.z};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] + b.m[i];
  return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = s * a.m[i];
  return r;
}

// Rodrigues rotation about a unit axis.
inline Mat3 axis_angle(const Vec3& axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const double t = 1.0 - c;
  const double x = axis.x, y = axis.y, z = axis.z;
  Mat3 r;
  r.m = {t * x * x + c,     t * x * y - s * z, t * x * z + s * y,
         t * x * y + s * z, t * y * y + c,     t * y * z - s * x,
         t * x * z - s * y, t * y * z + s * x, t * z * z + c};
  return r;
}

inline Mat3 rot_x(double a) { return axis_angle({1, 0, 0}, a); }
inline Mat3 rot_y(double a) { return axis_angle({0, 1, 0}, a); }
inline Mat3 rot_z(double a) { return axis_angle({0, 0, 1}, a); }

// Minimal rotation taking unit vector `from` to unit vector `to`. For the
// antipodal case the flip axis is the world x-axis projected orthogonal to
// `from`, falling back to the y-axis when `from` is parallel to x.
inline Mat3 rotation_between(const Vec3& from, const Vec3& to) {
  const Vec3 f = normalized(from), t = normalized(to);
  const double c = dot(f, t);
  if (c > 1.0 - 1e-14) return Mat3::identity();
  if (c < -1.0 + 1e-12) {
    Vec3 axis = Vec3{1, 0, 0} - f * f.x;
    if (norm(axis) < 1e-8) axis = Vec3{0, 1, 0} - f * f.y;
    return axis_angle(normalized(axis), kPi);
  }
  const Vec3 ax = cross(f, t);
  return axis_angle(normalized(ax), std::atan2(norm(ax), c));
}

// Geodesic angle of a rotation matrix, radians.
inline double rotation_angle(const Mat3& r) {
  double c = (r.trace() - 1.0) * 0.5;
  c = std::fmin(1.0, std::fmax(-1.0, c));
  return std::acos(c);
}

// Gram-Schmidt on rows; the third row is rebuilt by cross product so the
// result stays a proper rotation. Used to cancel drift from chained pivots.
inline Mat3 orthonormalized(const Mat3& a) {
  Vec3 r0 = normalized(a.row(0));
  Vec3 r1 = a.row(1) - r0 * dot(r0, a.row(1));
  r1 = normalized(r1);
  const Vec3 r2 = cross(r0, r1);
  Mat3 out;
  out.set_row(0, r0);
  out.set_row(1, r1);
  out.set_row(2, r2);
  return out;
}

inline bool is_rotation(const Mat3& r, double tol = 1e-9) {
  const Mat3 should_be_i = r * r.transposed();
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      worst = std::fmax(worst, std::fabs(should_be_i(i, j) - want));
    }
  return worst <= tol && std::fabs(r.det() - 1.0) <= 10.0 * tol;
}

}  // namespace stableplace::geom
