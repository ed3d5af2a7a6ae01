#include <doctest.h>

#include <algorithm>
#include <random>

#include "hodge/jets.hpp"

using namespace hodge;

namespace {

Jet one(int tau, int order) { return Jet::constant(tau, order, CycloScalar(1)); }
Jet t(int tau, int order, int a) { return Jet::variable(tau, order, a); }

Jet random_jet(std::mt19937& gen, int tau, int order) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> var(0, tau - 1);
  std::uniform_int_distribution<int> deg(0, order);
  std::vector<Jet::Term> terms;
  for (int i = 0; i < 6; ++i) {
    std::vector<int> vars;
    const int d = deg(gen);
    for (int j = 0; j < d; ++j) vars.push_back(var(gen));
    std::sort(vars.begin(), vars.end());
    const CycloScalar c = CycloScalar(coef(gen)) + CycloScalar(coef(gen)) * CycloScalar::zeta();
    terms.emplace_back(JetKey::from_vars(vars), c);
  }
  return Jet::from_terms(tau, order, std::move(terms));
}

}  // namespace

TEST_CASE("truncated products") {
  CHECK((one(1, 1) + t(1, 1, 0)) * (one(1, 1) - t(1, 1, 0)) == one(1, 1));
  const Jet expected = one(1, 2) - t(1, 2, 0) * t(1, 2, 0);
  CHECK((one(1, 2) + t(1, 2, 0)) * (one(1, 2) - t(1, 2, 0)) == expected);
  CHECK(expected.coefficient(JetKey::from_vars({0, 0})) == CycloScalar(-1));
  for (int order = 1; order <= 5; ++order) {
    Jet p = one(1, order);
    for (int i = 0; i < order; ++i) p = p * t(1, order, 0);
    CHECK_FALSE(p.is_zero());
    CHECK((p * t(1, order, 0)).is_zero());
  }
}

TEST_CASE("inversion") {
  const Jet inv = jet_invert(one(1, 2) - t(1, 2, 0));
  CHECK(inv == one(1, 2) + t(1, 2, 0) + t(1, 2, 0) * t(1, 2, 0));

  const CycloScalar c = CycloScalar(3) - CycloScalar::zeta();
  CHECK(jet_invert(Jet::constant(2, 3, c)) == Jet::constant(2, 3, c.inverse()));

  const Jet a = Jet::constant(2, 1, CycloScalar(2)) + t(2, 1, 0) + t(2, 1, 1);
  const Jet expected = Jet::constant(2, 1, Rational(1, 2)) - t(2, 1, 0) * CycloScalar(Rational(1, 4)) -
                       t(2, 1, 1) * CycloScalar(Rational(1, 4));
  CHECK(jet_invert(a) == expected);
  CHECK(a * expected == one(2, 1));

  CHECK_THROWS_AS(jet_invert(t(2, 3, 0)), NonUnit);
}

TEST_CASE("ring axioms and truncation homomorphism") {
  std::mt19937 gen(5);
  for (int i = 0; i < 60; ++i) {
    const int tau = 3, order = 4;
    const auto a = random_jet(gen, tau, order), b = random_jet(gen, tau, order), c = random_jet(gen, tau, order);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Jet(tau, order));
    for (int lower = 0; lower <= order; ++lower) {
      CHECK((a * b).truncate(lower) == a.truncate(lower) * b.truncate(lower));
      CHECK((a + b).truncate(lower) == a.truncate(lower) + b.truncate(lower));
    }
    if (!a.constant_term().is_zero()) {
      const auto inv = jet_invert(a);
      CHECK(a * inv == one(tau, order));
      CHECK(inv * a == one(tau, order));
    }
  }
}

TEST_CASE("components, derivatives and substitution") {
  const int tau = 2, order = 3;
  const Jet x = t(tau, order, 0), y = t(tau, order, 1);
  const Jet p = one(tau, order) + x * CycloScalar(2) + x * y * CycloScalar(3) + x * x * y;
  CHECK(p.valuation() == 0);
  CHECK(p.component(2) == x * y * CycloScalar(3));
  CHECK(p.component(3) == x * x * y);
  CHECK(p.derivative(0) == Jet::constant(tau, order, CycloScalar(2)) + y * CycloScalar(3) + x * y * CycloScalar(2));
  CHECK(p.linear_coefficient(0) == CycloScalar(2));
  CHECK(p.linear_coefficient(1) == CycloScalar());
  // t1 -> t1 + t2, t2 -> t2
  CHECK(p.substitute({x + y, y}) == one(tau, order) + (x + y) * CycloScalar(2) + (x + y) * y * CycloScalar(3) +
                                        (x + y) * (x + y) * y);
  CHECK_THROWS(x + t(tau, order + 1, 0));
}

TEST_CASE("keys pack up to eight factors") {
  const auto k = JetKey::from_vars({0, 2, 2, 5});
  CHECK(k.degree() == 4);
  CHECK(k.exponent(2) == 2);
  CHECK(k.without(2) == JetKey::from_vars({0, 2, 5}));
  CHECK(k * JetKey::variable(1) == JetKey::from_vars({0, 1, 2, 2, 5}));
  CHECK(JetKey::from_vars({3, 3, 3, 3, 3, 3, 3, 3}).degree() == JetKey::kMaxDegree);
  CHECK(JetKey::variable(0) < JetKey::from_vars({0, 0}));
}

TEST_CASE("polynomials with jet coefficients") {
  const Polynomial f = Polynomial::parse("x0^3 + x1^3", 2);
  const auto jf = JetPolynomial::from_polynomial(f, 1, 2);
  CHECK(jf.constant_part() == f);
  JetPolynomial g(2, 1, 2);
  g.add_term(Monomial(2, {1, 0}), t(1, 2, 0));
  auto h = jf;
  h += g;
  CHECK(h.coefficient(Monomial(2, {1, 0})) == t(1, 2, 0));
  CHECK(h.derivative(0).coefficient(Monomial(2, {0, 0})) == t(1, 2, 0));
  CHECK((g * g).coefficient(Monomial(2, {2, 0})) == t(1, 2, 0) * t(1, 2, 0));
}
