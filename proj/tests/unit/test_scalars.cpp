#include <doctest.h>

#include <random>

#include "hodge/cyclotomic.hpp"

using hodge::CycloScalar;
using hodge::Rational;

namespace {

CycloScalar random_scalar(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  CycloScalar::Coefficients c{Rational(num(gen), den(gen)), Rational(num(gen), den(gen))};
  for (auto& q : c) q.canonicalize();
  return CycloScalar(c);
}

// Inverse of p + q z by Cramer's rule on the multiplication matrix in the basis 1, z.
CycloScalar cramer_inverse(const CycloScalar& x) {
  const Rational p = x[0], q = x[1];
  // x * (a + b z) = (p a - q b) + (q a + (p + q) b) z
  const Rational det = p * (p + q) + q * q;
  const Rational a = (p + q) / det;
  const Rational b = -q / det;
  return CycloScalar(CycloScalar::Coefficients{a, b});
}

}  // namespace

TEST_CASE("zeta powers reduce modulo z^2 - z + 1") {
  const auto z = CycloScalar::zeta();
  CHECK(z * z == z - CycloScalar(1));
  CHECK(z.pow(3) == CycloScalar(-1));
  CHECK(z.pow(6) == CycloScalar(1));
  CHECK(CycloScalar::zeta(5) == z.pow(5));
  CHECK(CycloScalar::zeta(-1) == CycloScalar::zeta(5));
  CHECK(CycloScalar::zeta(7) == z);
}

TEST_CASE("inverse agrees with the linear-system solution") {
  const auto z = CycloScalar::zeta();
  CHECK(z.inverse() == cramer_inverse(z));
  CHECK(z.inverse() * z == CycloScalar(1));
  CHECK(CycloScalar(1).inverse() == CycloScalar(1));
  CHECK(CycloScalar(-1).inverse() == CycloScalar(-1));
  std::mt19937 gen(7);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_scalar(gen);
    if (x.is_zero()) continue;
    CHECK(x.inverse() == cramer_inverse(x));
  }
  CHECK_THROWS_AS(CycloScalar().inverse(), hodge::DivisionByZero);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 gen(2024);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_scalar(gen), b = random_scalar(gen), c = random_scalar(gen);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == CycloScalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloScalar(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("conjugation is an involutive automorphism") {
  const auto z = CycloScalar::zeta();
  CHECK(z.conj() == z.pow(5));
  std::mt19937 gen(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_scalar(gen), b = random_scalar(gen);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("text form round trips") {
  const auto z = CycloScalar::zeta();
  CHECK(CycloScalar().str() == "0");
  CHECK(CycloScalar(Rational(-1, 2)).str() == "-1/2");
  CHECK(z.str() == "z");
  CHECK(CycloScalar::parse("1 - 2*z") == CycloScalar(1) - CycloScalar(2) * z);
  CHECK(CycloScalar::parse("z^2") == z - CycloScalar(1));
  std::mt19937 gen(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_scalar(gen);
    CHECK(CycloScalar::parse(a.str()) == a);
  }
  CHECK_THROWS(CycloScalar::parse("1 + y"));
}

TEST_CASE("gaussian rationals") {
  using G = hodge::Cyclotomic<2>;
  const auto i = G::zeta();
  CHECK(i * i == G(-1));
  CHECK(i.inverse() == -i);
  CHECK(i.conj() == -i);
}
