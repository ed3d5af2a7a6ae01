#include <doctest.h>

#include <gmpxx.h>

#include "hodge/geometry.hpp"
#include "hodge/groebner.hpp"
#include "hodge/polynomial.hpp"

using namespace hodge;

namespace {

Polynomial P(const std::string& s, std::size_t nv) { return Polynomial::parse(s, nv); }

std::size_t binom(std::size_t n, std::size_t k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b.get_ui();
}

std::vector<std::string> compact(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.compact_str());
  return out;
}

}  // namespace

TEST_CASE("degrevlex with x0 > x1 > ...") {
  CHECK(degrevlex_greater(Monomial(3, {1, 0, 0}), Monomial(3, {0, 1, 0})));
  CHECK(degrevlex_greater(Monomial(3, {0, 2, 0}), Monomial(3, {1, 0, 1})));
  CHECK(degrevlex_greater(Monomial(3, {0, 0, 2}), Monomial(3, {1, 0, 0})));
  const auto cubics = monomials_of_degree(6, 3);
  CHECK(cubics.size() == binom(8, 3));
  for (std::size_t i = 1; i < cubics.size(); ++i) CHECK(degrevlex_greater(cubics[i - 1], cubics[i]));
  CHECK(squarefree_monomials(6, 3).size() == binom(6, 3));
}

TEST_CASE("parsing accepts the supported variable spellings") {
  const auto a = P("x0^3 + (1 - z)*x1*x2", 3);
  const auto b = Polynomial::parse("x_0^3 + (1 - z)*x_{1}*x2", 3);
  const auto c = Polynomial::parse("x(1)^3 + (1 - z)*x(2)*x(3)");
  CHECK(a == b);
  CHECK(a == c);
  CHECK(Polynomial::parse("x_{10}").nvars() == 11);
  CHECK(a.derivative(0) == P("3*x0^2", 3));
  CHECK(P("x0 + x1", 2).pow(2) == P("x0^2 + 2*x0*x1 + x1^2", 2));
}

TEST_CASE("groebner bases") {
  const auto gb = groebner_basis({P("x0", 2), P("x1", 2)});
  CHECK(gb.size() == 2);
  CHECK(gb[0] == P("x0", 2));
  CHECK(gb[1] == P("x1", 2));

  const std::vector<Polynomial> gens{P("x0^2", 2), P("x0*x1 - x1^2", 2)};
  const HomogeneousIdeal ideal(2, gens);
  for (const auto& g : gens) CHECK(ideal.normal_form(g).is_zero());
  // complete intersection of two quadrics in two variables: Hilbert series (1 + t)^2
  CHECK(ideal.graded_piece_dim(1) == 0);
  CHECK(ideal.graded_piece_dim(2) == 3 - 1);
  CHECK(ideal.graded_piece_dim(3) == 4);
  CHECK(ideal.contains(P("x1^3", 2)));
  CHECK_FALSE(ideal.contains(P("x1^2", 2)));
}

TEST_CASE("jacobian ideal of the fermat cubic") {
  for (int n : {2, 4}) {
    const auto jac = jacobian_ideal(fermat(n, 3));
    const auto& gb = jac.groebner_basis();
    CHECK(gb.size() == static_cast<std::size_t>(n + 2));
    for (const auto& g : gb) {
      CHECK(g.size() == 1);
      CHECK(g.leading_monomial().degree() == 2);
      CHECK(g.leading_monomial().support().size() == 1);
    }
  }
}

TEST_CASE("intersections") {
  const HomogeneousIdeal a(2, {P("x0", 2)});
  const HomogeneousIdeal b(2, {P("x1", 2)});
  const auto ab = ideal_intersect(a, b);
  const auto& gb = ab.groebner_basis();
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == P("x0*x1", 2));

  const HomogeneousIdeal i(3, {P("x0^2 - x1*x2", 3), P("x1^2", 3)});
  const auto ii = ideal_intersect(i, i);
  for (int deg = 0; deg <= 4; ++deg) CHECK(ii.graded_piece_dim(deg) == i.graded_piece_dim(deg));

  const HomogeneousIdeal j(3, {P("x0 + x2", 3)});
  const auto ij = ideal_intersect(i, j);
  for (const auto& g : ij.generators()) {
    CHECK(i.contains(g));
    CHECK(j.contains(g));
  }
  // graded identity dim(I ∩ J) = dim I + dim J - dim(I + J)
  auto sum_gens = i.generators();
  sum_gens.insert(sum_gens.end(), j.generators().begin(), j.generators().end());
  const HomogeneousIdeal sum(3, sum_gens);
  for (int deg = 1; deg <= 4; ++deg) {
    CHECK(ij.graded_piece_dim(deg) + sum.graded_piece_dim(deg) == i.graded_piece_dim(deg) + j.graded_piece_dim(deg));
    CHECK(graded_intersection(i, j, deg).size() == ij.graded_piece_dim(deg));
  }
}

TEST_CASE("linear-cycle pair ideal in degree 3") {
  const auto pair = sum_two_linear_cycles(4, 3, 0);
  const auto inter = ideal_intersect(pair.p.full_ideal(), pair.q.full_ideal(), 3);
  CHECK(inter.graded_piece_dim(3) == 56 - 2);
  CHECK(compact(inter.quotient_monomial_basis(3)) == std::vector<std::string>{"x1x2x5", "x1x3x5"});

  const auto pair4 = sum_two_linear_cycles(4, 3, -1);
  const auto inter4 = ideal_intersect(pair4.p.full_ideal(), pair4.q.full_ideal(), 3);
  CHECK(compact(inter4.quotient_monomial_basis(3)) == std::vector<std::string>{"x0x3x5", "x1x3x5"});

  const auto pair6 = sum_two_linear_cycles(6, 3, 1);
  const auto inter6 = ideal_intersect(pair6.p.full_ideal(), pair6.q.full_ideal(), 3);
  CHECK(inter6.graded_piece_dim(3) == binom(10, 3) - 8);
}

TEST_CASE("quotient basis and graded piece are complementary") {
  std::vector<HomogeneousIdeal> ideals{
      HomogeneousIdeal(3, {P("x0^2 - x1*x2", 3), P("x1^2", 3)}),
      HomogeneousIdeal(4, {P("x0*x1 - x2*x3", 4), P("x0^3 + x3^3", 4)}),
      jacobian_ideal(fermat(2, 3)),
      sum_two_linear_cycles(4, 3, 1).p.full_ideal(),
      HomogeneousIdeal::unit(3),
  };
  for (const auto& ideal : ideals) {
    for (int deg = 0; deg <= 4; ++deg) {
      const std::size_t total = binom(ideal.nvars() + deg - 1, static_cast<std::size_t>(deg));
      CHECK(ideal.quotient_monomial_basis(deg).size() + ideal.graded_piece_dim(deg) == total);
    }
  }
  CHECK(HomogeneousIdeal::unit(3).quotient_monomial_basis(3).empty());
  CHECK(HomogeneousIdeal(6, {}).graded_piece_dim(3) == 0);
}

TEST_CASE("graded dimensions survive a symmetry of the ideal") {
  // swapping x0 and x1 fixes the ideal; the Groebner computation sees different leading terms
  const std::vector<Polynomial> gens{P("x0*x1 + x2^2", 3), P("x0^3 + x1^3 - x2^3", 3), P("x0^2*x2 + x1^2*x2", 3)};
  const std::vector<Polynomial> swap{P("x0", 3), P("x1", 3), P("x2", 3)};
  std::vector<Polynomial> permuted;
  const std::vector<Polynomial> images{P("x1", 3), P("x0", 3), P("x2", 3)};
  for (const auto& g : gens) permuted.push_back(g.substitute(images));
  const HomogeneousIdeal a(3, gens);
  const HomogeneousIdeal b(3, permuted);
  for (const auto& g : permuted) CHECK(a.contains(g));
  for (int deg = 0; deg <= 6; ++deg) CHECK(a.graded_piece_dim(deg) == b.graded_piece_dim(deg));
  for (const auto& g : gens) CHECK(g.substitute(swap) == g);
}

TEST_CASE("sparse rows round trip") {
  const MonomialIndex index(monomials_of_degree(3, 2));
  const auto p = P("x0^2 - z*x1*x2 + 3*x2^2", 3);
  CHECK(from_row(to_row(p, index), index) == p);
}
