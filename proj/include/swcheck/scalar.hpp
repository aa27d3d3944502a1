#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <boost/rational.hpp>

namespace swcheck {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

/// Complex numbers a + bi over an exact ring (integers or rationals).
///
/// std::complex is only specified for floating-point types, so the exact
/// algebra suites use this instead.
template <class T>
struct Gaussian {
  T re{};
  T im{};

  constexpr Gaussian() = default;
  constexpr Gaussian(T r) : re(r) {}  // NOLINT(google-explicit-constructor)
  constexpr Gaussian(T r, T i) : re(r), im(i) {}

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    const T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    const T n = o.re * o.re + o.im * o.im;
    if (n == T{}) throw std::domain_error("Gaussian: division by zero");
    const T r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = r;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian&, const Gaussian&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

template <class T>
Gaussian<T> conj(const Gaussian<T>& z) {
  return {z.re, -z.im};
}
template <class T>
T real(const Gaussian<T>& z) {
  return z.re;
}
template <class T>
T imag(const Gaussian<T>& z) {
  return z.im;
}

using GaussInt = Gaussian<std::int64_t>;
using ExactComplex = Gaussian<Rational>;

template <class C>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static Complex from_ints(std::int64_t re, std::int64_t im = 0) {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
  static Complex ratio(std::int64_t num, std::int64_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static Complex from_real(double r) { return r; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static double to_double(double r) { return r; }
  static Complex to_complex(const Complex& z) { return z; }
};

template <class T>
struct ScalarTraits<Gaussian<T>> {
  using real_type = T;
  static constexpr bool exact = true;
  static Gaussian<T> from_ints(std::int64_t re, std::int64_t im = 0) {
    return {T(re), T(im)};
  }
  static Gaussian<T> ratio(std::int64_t num, std::int64_t den) {
    static_assert(!std::is_integral_v<T>, "ratio() needs a field");
    return Gaussian<T>(T(num, den));
  }
  static Gaussian<T> from_real(T r) { return Gaussian<T>(r); }
  static double to_double(const T& r) {
    if constexpr (std::is_integral_v<T>) {
      return static_cast<double>(r);
    } else {
      return boost::rational_cast<double>(r);
    }
  }
  static double magnitude(const Gaussian<T>& z) {
    return std::hypot(to_double(z.re), to_double(z.im));
  }
  static Complex to_complex(const Gaussian<T>& z) {
    return {to_double(z.re), to_double(z.im)};
  }
};

/// Complex scalar type paired with a real scalar type.
template <class R>
struct ComplexOf {
  using type = Complex;
};
template <>
struct ComplexOf<Rational> {
  using type = ExactComplex;
};
template <class R>
using complex_of_t = typename ComplexOf<R>::type;

template <class C>
C imag_unit() {
  return ScalarTraits<C>::from_ints(0, 1);
}

template <class C>
double magnitude(const C& z) {
  return ScalarTraits<C>::magnitude(z);
}

template <class C>
bool is_zero(const C& z) {
  return z == C{};
}

template <class R>
double to_double(const R& r) {
  if constexpr (std::is_same_v<R, double>) {
    return r;
  } else {
    return boost::rational_cast<double>(r);
  }
}

/// Exact conversion of a double to a rational when its binary expansion fits
/// in 62 bits; throws otherwise.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("rational_from_double: non-finite value");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  std::int64_t den_shift = 0;
  while (mantissa != std::floor(mantissa)) {
    mantissa *= 2;
    --exponent;
    if (++den_shift > 62) throw std::domain_error("rational_from_double: value not representable");
  }
  if (exponent >= 0) {
    if (exponent > 62 || std::abs(mantissa) * std::ldexp(1.0, exponent) > 9.0e18) {
      throw std::domain_error("rational_from_double: value too large");
    }
    return Rational(static_cast<std::int64_t>(std::ldexp(mantissa, exponent)));
  }
  if (-exponent > 62) throw std::domain_error("rational_from_double: value not representable");
  return Rational(static_cast<std::int64_t>(mantissa), std::int64_t{1} << (-exponent));
}

}  // namespace swcheck
