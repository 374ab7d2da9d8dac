#pragma once

#include <cmath>

namespace willmin {

// Forward-mode dual number carrying one derivative channel. Used to
// differentiate the per-vertex energy stencils exactly; the gradient of a
// discrete energy is then the discrete energy's true gradient by
// construction, not a separate hand-derived formula.
struct Dual {
  double v = 0;  // value
  double d = 0;  // derivative

  Dual() = default;
  Dual(double value) : v(value) {}
  Dual(double value, double deriv) : v(value), d(deriv) {}

  Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  Dual& operator/=(const Dual& o) { d = (d * o.v - v * o.d) / (o.v * o.v); v /= o.v; return *this; }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }

inline bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
inline bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }

inline Dual sqrt(const Dual& a) {
  using std::sqrt;
  const double r = sqrt(a.v);
  // Subgradient choice at 0 keeps flat umbilic vertices finite.
  return {r, r > 0 ? a.d / (2 * r) : 0.0};
}

inline double value(double x) { return x; }
inline double value(const Dual& x) { return x.v; }

}  // namespace willmin
