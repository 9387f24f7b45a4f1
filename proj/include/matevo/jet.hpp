#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "matevo/errors.hpp"

namespace matevo::dsl {

/// Number of differentiation directions: t, x1, x2, x3, F11..F33 (row-major).
inline constexpr int kNumVars = 13;

inline constexpr int kVarT = 0;
inline constexpr int kVarX1 = 1;
inline constexpr int var_index_x(int i) { return 1 + i; }        // i in 0..2
inline constexpr int var_index_f(int r, int c) { return 4 + 3 * r + c; }

/// Forward-mode dual number carrying the value of a scalar expression and
/// its exact first derivatives in the 13 canonical directions.
struct Jet {
  double v = 0.0;
  std::array<double, kNumVars> d{};

  static Jet constant(double c) {
    Jet j;
    j.v = c;
    return j;
  }

  static Jet variable(double value, int index) {
    Jet j;
    j.v = value;
    j.d[static_cast<std::size_t>(index)] = 1.0;
    return j;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v + b.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v - b.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  r.v = -a.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = -a.d[i];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v * b.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  if (b.v == 0.0) throw EvalError("division by zero");
  Jet r;
  r.v = a.v / b.v;
  const double inv2 = 1.0 / (b.v * b.v);
  for (int i = 0; i < kNumVars; ++i)
    r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) * inv2;
  return r;
}

inline Jet exp(const Jet& a) {
  Jet r;
  r.v = std::exp(a.v);
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * r.v;
  return r;
}

inline Jet sin(const Jet& a) {
  Jet r;
  r.v = std::sin(a.v);
  const double c = std::cos(a.v);
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * c;
  return r;
}

inline Jet cos(const Jet& a) {
  Jet r;
  r.v = std::cos(a.v);
  const double s = -std::sin(a.v);
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * s;
  return r;
}

inline Jet sqrt(const Jet& a) {
  if (a.v <= 0.0)
    throw EvalError("sqrt of a non-positive value is not differentiable");
  Jet r;
  r.v = std::sqrt(a.v);
  const double g = 0.5 / r.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * g;
  return r;
}

inline Jet log(const Jet& a) {
  if (a.v <= 0.0) throw EvalError("log of a non-positive value");
  Jet r;
  r.v = std::log(a.v);
  const double g = 1.0 / a.v;
  for (int i = 0; i < kNumVars; ++i) r.d[i] = a.d[i] * g;
  return r;
}

/// a^n for integer n, valid for any base (including negative and zero for
/// n >= 0). Exact chain rule through repeated multiplication.
inline Jet pow_int(const Jet& a, long long n) {
  if (n < 0) return Jet::constant(1.0) / pow_int(a, -n);
  Jet result = Jet::constant(1.0);
  Jet base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

/// General power a^b = exp(b*log(a)); requires a > 0. Callers should route
/// constant integral exponents through pow_int instead.
inline Jet pow(const Jet& a, const Jet& b) {
  bool b_const = true;
  for (int i = 0; i < kNumVars; ++i)
    if (b.d[i] != 0.0) b_const = false;
  if (b_const && b.v == std::floor(b.v) && std::abs(b.v) <= 1e6)
    return pow_int(a, static_cast<long long>(b.v));
  if (a.v <= 0.0)
    throw EvalError("power with non-positive base and non-integer exponent");
  return exp(b * log(a));
}

using JetVec3 = std::array<Jet, 3>;
using JetMat3 = std::array<Jet, 9>;  // row-major

}  // namespace matevo::dsl
