#pragma once

// Truncated power series K[t_1..t_tau]/m^{N+1} and polynomials in x with such coefficients.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hodge/cyclotomic.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

class NonUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Monomial in the parameters t_a, packed as the ascending multiset of 1-based indices, one byte each.
class JetKey {
 public:
  static constexpr int kMaxDegree = 8;
  static constexpr int kMaxArity = 255;

  constexpr JetKey() = default;
  static JetKey variable(int a);  // t_{a+1}, a is 0-based
  static JetKey from_vars(std::vector<int> vars);

  int degree() const;
  /// 0-based variable indices, ascending with repetition.
  std::vector<int> vars() const;
  int exponent(int a) const;
  std::uint64_t raw() const { return bits_; }

  /// Product; the caller guarantees degree(a) + degree(b) <= kMaxDegree.
  friend JetKey operator*(JetKey a, JetKey b);
  /// Removes one occurrence of t_a; requires exponent(a) > 0.
  JetKey without(int a) const;

  friend bool operator==(JetKey a, JetKey b) { return a.bits_ == b.bits_; }
  friend bool operator<(JetKey a, JetKey b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.bits_ < b.bits_;
  }

  std::string str() const;

 private:
  explicit constexpr JetKey(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// Element of R_N = K[t_1..t_tau]/m^{N+1}; terms sorted by (degree, key).
class Jet {
 public:
  using Term = std::pair<JetKey, CycloScalar>;

  Jet() = default;
  Jet(int tau, int order);

  static Jet constant(int tau, int order, const CycloScalar& c);
  static Jet variable(int tau, int order, int a);
  static Jet monomial(int tau, int order, JetKey key, const CycloScalar& c);
  /// Builds from unsorted terms (duplicates summed, degrees above order dropped).
  static Jet from_terms(int tau, int order, std::vector<Term> terms);

  int tau() const { return tau_; }
  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  CycloScalar coefficient(JetKey key) const;
  CycloScalar constant_term() const { return coefficient(JetKey()); }
  CycloScalar linear_coefficient(int a) const { return coefficient(JetKey::variable(a)); }
  /// Degree of the lowest nonzero term, -1 for zero.
  int valuation() const;
  /// Homogeneous component of degree j.
  Jet component(int j) const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(const CycloScalar& c);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= CycloScalar(-1); }
  friend Jet operator*(Jet a, const CycloScalar& c) { return a *= c; }
  friend Jet operator*(const CycloScalar& c, Jet a) { return a *= c; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend bool operator==(const Jet& a, const Jet& b) {
    return a.tau_ == b.tau_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  /// Same series viewed in R_{order'} for order' <= order.
  Jet truncate(int order) const;
  /// d/dt_a (the result keeps the order, its top degree is empty).
  Jet derivative(int a) const;
  /// Substitutes t_a -> images[a] (all images share arity and order).
  Jet substitute(const std::vector<Jet>& images) const;

  std::string str() const;

 private:
  void check_compatible(const Jet& o) const;

  int tau_ = 0;
  int order_ = 0;
  std::vector<Term> terms_;
};

/// Inverse in R_N; throws NonUnit when the constant term vanishes.
Jet jet_invert(const Jet& a);

/// Polynomial in x whose coefficients are Jets of a fixed (tau, N).
class JetPolynomial {
 public:
  using Terms = std::map<Monomial, Jet, DegRevLexGreater>;

  JetPolynomial() = default;
  JetPolynomial(std::size_t nvars, int tau, int order) : nvars_(nvars), tau_(tau), order_(order) {}
  /// Embeds a polynomial with constant coefficients.
  static JetPolynomial from_polynomial(const Polynomial& p, int tau, int order);

  std::size_t nvars() const { return nvars_; }
  int tau() const { return tau_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Jet& c);
  Jet coefficient(const Monomial& m) const;
  /// Value at t = 0.
  Polynomial constant_part() const;
  JetPolynomial derivative(std::size_t i) const;
  JetPolynomial& operator+=(const JetPolynomial& o);
  JetPolynomial& operator-=(const JetPolynomial& o);
  JetPolynomial multiply(const Monomial& m, const Jet& c) const;
  friend JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b);
  friend bool operator==(const JetPolynomial& a, const JetPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  int tau_ = 0;
  int order_ = 0;
  Terms terms_;
};

}  // namespace hodge
