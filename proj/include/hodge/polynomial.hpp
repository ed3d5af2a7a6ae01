#pragma once

// Monomials and sparse multivariate polynomials over CycloScalar in x_0, ..., x_{nvars-1}.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hodge/cyclotomic.hpp"

namespace hodge {

class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::initializer_list<int> exponents);
  static Monomial from_exponents(const std::vector<int>& exponents);
  /// x_{i1} x_{i2} ... (indices may repeat).
  static Monomial product_of(std::size_t nvars, std::initializer_list<int> vars);
  static Monomial product_of(std::size_t nvars, const std::vector<int>& vars);

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int e);

  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Variables with nonzero exponent, ascending.
  std::vector<int> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  /// Canonical text, "1" for the unit monomial, e.g. "x0^2*x3".
  std::string str() const;
  /// Compact table text, e.g. "x1x2x5".
  std::string compact_str() const;

  std::size_t hash() const;

 private:
  std::uint8_t nvars_ = 0;
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxVars> exp_{};
};

/// Degree-reverse-lexicographic order with x0 > x1 > ... : true iff a > b.
bool degrevlex_greater(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_greater(a, b); }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of the given degree, sorted descending in degrevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);
/// Squarefree monomials of the given degree, sorted descending in degrevlex.
std::vector<Monomial> squarefree_monomials(std::size_t nvars, int degree);

/// Column index lookup for a fixed list of monomials.
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  /// Index or -1.
  long find(const Monomial& m) const;
  std::size_t at(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, CycloScalar, DegRevLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const CycloScalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const CycloScalar& c = CycloScalar(1));

  /// Parses "x0^3 + (1 - z)*x1*x2", accepting x0, x_0, x_{10} and the 1-based x(1).
  /// With nvars == 0 the variable count is inferred from the largest index used.
  static Polynomial parse(std::string_view text, std::size_t nvars = 0);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const CycloScalar& leading_coefficient() const;
  CycloScalar coefficient(const Monomial& m) const;

  /// Maximal total degree (-1 for zero).
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const CycloScalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const CycloScalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= CycloScalar(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const CycloScalar& c) { return a *= c; }
  friend Polynomial operator*(const CycloScalar& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial multiply(const Monomial& m, const CycloScalar& c = CycloScalar(1)) const;
  Polynomial derivative(std::size_t i) const;
  Polynomial pow(int e) const;
  /// Substitutes x_i -> images[i] (all images share a variable count).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Embeds into a ring with more variables (new variables appended).
  Polynomial extend(std::size_t nvars) const;

  std::string str() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace hodge
