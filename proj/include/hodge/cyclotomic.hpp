#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z a primitive 2d-th root of unity.

#include <array>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hodge {

using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

std::string to_string(const Rational& q);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

constexpr int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int m);

}  // namespace detail

/// Element of Q(z) with z = exp(2 pi i / 2d), stored in the power basis
/// 1, z, ..., z^{phi(2d)-1} and always reduced modulo the cyclotomic polynomial.
template <int D>
class Cyclotomic {
 public:
  static constexpr int kOrder = 2 * D;
  static constexpr int kDegree = detail::euler_phi(2 * D);
  using Coefficients = std::array<Rational, kDegree>;

  Cyclotomic() = default;
  Cyclotomic(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational v) { c_[0] = std::move(v); }  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(Coefficients c) : c_(std::move(c)) {}

  /// z^e for any integer e.
  static Cyclotomic zeta(long e = 1);

  const Coefficients& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (sgn(q) != 0) return false;
    return true;
  }
  bool is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < kDegree; ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < kDegree; ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator*=(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator-(Cyclotomic a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return multiply(a, b); }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
  friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;

  /// Image under the automorphism z -> z^{-1} (complex conjugation).
  Cyclotomic conj() const;

  Cyclotomic pow(long e) const;

  /// Canonical text form, e.g. "0", "-1/2", "z", "1 - 2*z" (higher powers as z^k).
  std::string str() const;

  /// Parses the canonical form (and anything polynomial in z with rational coefficients).
  static Cyclotomic parse(std::string_view text);

  std::size_t hash() const;

 private:
  static Cyclotomic multiply(const Cyclotomic& a, const Cyclotomic& b);
  static const std::vector<Rational>& modulus();  // monic cyclotomic polynomial, low first

  Coefficients c_{};
};

template <int D>
bool is_zero(const Cyclotomic<D>& x) {
  return x.is_zero();
}

template <int D>
std::ostream& operator<<(std::ostream& os, const Cyclotomic<D>& x) {
  return os << x.str();
}

/// The coefficient field used throughout: Q(zeta_6).
using CycloScalar = Cyclotomic<3>;

extern template class Cyclotomic<3>;
extern template class Cyclotomic<2>;

}  // namespace hodge
