#pragma once

#include <cmath>
#include <cstddef>

namespace willmin {

// Small fixed-size 3-vector, templated on the scalar type so the same
// geometric kernels can run on plain doubles and on dual numbers.
template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  Vec3() = default;
  Vec3(T xx, T yy, T zz) : x(xx), y(yy), z(zz) {}

  T& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  template <class U>
  Vec3& operator*=(const U& s) { x = x * s; y = y * s; z = z * s; return *this; }
};

template <class T>
Vec3<T> operator+(Vec3<T> a, const Vec3<T>& b) { return a += b; }
template <class T>
Vec3<T> operator-(Vec3<T> a, const Vec3<T>& b) { return a -= b; }
template <class T>
Vec3<T> operator-(const Vec3<T>& a) { return {-a.x, -a.y, -a.z}; }
template <class T, class U>
Vec3<T> operator*(Vec3<T> a, const U& s) { return a *= s; }
template <class T, class U>
Vec3<T> operator*(const U& s, Vec3<T> a) { return a *= s; }

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <class T>
T norm_sq(const Vec3<T>& a) { return dot(a, a); }

template <class T>
T norm(const Vec3<T>& a) {
  using std::sqrt;
  return sqrt(dot(a, a));
}

using Vec3d = Vec3<double>;

inline Vec3d normalized(const Vec3d& a) {
  const double n = norm(a);
  return n > 0 ? Vec3d{a.x / n, a.y / n, a.z / n} : Vec3d{0, 0, 0};
}

}  // namespace willmin
