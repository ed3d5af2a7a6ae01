#include <doctest.h>

#include "hodge/geometry.hpp"
#include "hodge/periods.hpp"

using namespace hodge;

namespace {

Polynomial P(const std::string& s, std::size_t nv) { return Polynomial::parse(s, nv); }

std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

TEST_CASE("fermat polynomials") {
  CHECK(fermat(4, 3) == P("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 6));
  const auto f6 = fermat(6, 3);
  CHECK(f6.nvars() == 8);
  CHECK(f6.size() == 8);
  CHECK(f6.degree() == 3);
  CHECK(fermat(4, 2) == P("x0^2 + x1^2 + x2^2 + x3^2 + x4^2 + x5^2", 6));
}

TEST_CASE("the two linear cycles") {
  const auto z = CycloScalar::zeta();
  const auto pair = sum_two_linear_cycles(4, 3, 0);
  const std::vector<Polynomial> p{P("x0", 6) - P("x1", 6) * z, P("x2", 6) - P("x3", 6) * z,
                                  P("x4", 6) - P("x5", 6) * z};
  const std::vector<Polynomial> q{P("x0", 6) - P("x1", 6) * z, P("x2 + x3", 6), P("x4 + x5", 6)};
  CHECK(strs(pair.p.linear_forms()) == strs(p));
  CHECK(strs(pair.q.linear_forms()) == strs(q));
  const auto disjoint = sum_two_linear_cycles(4, 3, -1);
  CHECK(strs(disjoint.q.linear_forms()) == strs({P("x0 + x1", 6), P("x2 + x3", 6), P("x4 + x5", 6)}));
  CHECK_THROWS(sum_two_linear_cycles(5, 3, 0));
  CHECK_THROWS(sum_two_linear_cycles(4, 4, 0));
  CHECK_THROWS(sum_two_linear_cycles(4, 3, 3));
}

TEST_CASE("cycles lie on the fermat cubic") {
  for (int n : {2, 4, 6, 8}) {
    const auto f = fermat(n, 3);
    for (int m = -1; m <= n / 2; ++m) {
      const auto pair = sum_two_linear_cycles(n, 3, m);
      CHECK(pair.p.ideal().contains(f));
      CHECK(pair.q.ideal().contains(f));
      CHECK(pair.q.full_ideal().contains(f));
    }
    for (int a1 = 0; a1 < 3; ++a1)
      for (int a2 = 0; a2 < 3; ++a2) CHECK(twisted_linear_cycle(n, 3, a1, a2).ideal().contains(f));
  }
}

TEST_CASE("factorization into linear forms and complements") {
  const auto cycle = sum_two_linear_cycles(6, 3, 1).q;
  const auto lin = cycle.linear_forms();
  const auto comp = cycle.complements();
  for (std::size_t e = 0; e < lin.size(); ++e) {
    const std::string s = "x" + std::to_string(2 * e) + "^3 + x" + std::to_string(2 * e + 1) + "^3";
    CHECK(lin[e] * comp[e] == P(s, 8));
  }
}

TEST_CASE("intersection dimension equals m") {
  for (int n : {4, 6, 8, 10, 12})
    for (int m = -1; m <= n / 2; ++m) CHECK(intersection_dimension(sum_two_linear_cycles(n, 3, m).p, sum_two_linear_cycles(n, 3, m).q) == m);
}

TEST_CASE("twisted cycles") {
  for (int n : {4, 6, 8}) {
    CHECK(twisted_linear_cycle(n, 3, 0, 0) == sum_two_linear_cycles(n, 3, n / 2 - 2).p);
    CHECK(twisted_linear_cycle(n, 3, 1, 1) == sum_two_linear_cycles(n, 3, n / 2 - 2).q);
  }
  const auto parts = decompose_difference(4);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].label() == std::make_pair(0, 0));
  CHECK(parts[1].label() == std::make_pair(0, 1));
  CHECK(parts[2].label() == std::make_pair(2, 1));
  CHECK(LinearCycle::from_json(parts[2].to_json()) == parts[2]);
}

TEST_CASE("the twisted family is an orbit of the scaling group") {
  for (int n : {4, 6}) {
    const auto base = twisted_linear_cycle(n, 3, 0, 0);
    const std::size_t nv = base.nvars();
    for (int a1 = 0; a1 < 3; ++a1) {
      for (int a2 = 0; a2 < 3; ++a2) {
        const auto target = twisted_linear_cycle(n, 3, a1, a2);
        const Scaling e = scaling_between(base, target);
        REQUIRE(e.size() == nv);
        // g(base) is cut by f(g^{-1} x)
        std::vector<Polynomial> inverse;
        for (std::size_t j = 0; j < nv; ++j)
          inverse.push_back(Polynomial::variable(nv, j) * CycloScalar::zeta(-e[j]));
        for (const auto& f : base.linear_forms()) CHECK(target.ideal().contains(f.substitute(inverse)));
      }
    }
  }
}

TEST_CASE("determinantal cycles") {
  const auto cs = determinantal_ideal(CycleKind::cubic_ruled, 4);
  const auto minors = rank_one_minors(cs.entries);
  CHECK(minors.size() == 3);
  CHECK(strs(determinantal_quadrics(CycleKind::cubic_ruled, cs.entries)) == strs(minors));
  CHECK(minors[0] == P("x0*x3 - x1*x2", 6));

  const auto qs = determinantal_ideal(CycleKind::quartic_scroll, 4);
  const auto qsq = determinantal_quadrics(CycleKind::quartic_scroll, qs.entries);
  REQUIRE(qsq.size() == 6);
  CHECK(qsq[3] == P("x2*x3 - x0*x5", 6));
  CHECK(qsq[4] == P("x2^2 - x0*x4", 6));
  CHECK(qsq[5] == P("x3^2 - x1*x5", 6));

  const auto v = determinantal_ideal(CycleKind::veronese, 4);
  const auto vq = determinantal_quadrics(CycleKind::veronese, v.entries);
  REQUIRE(vq.size() == 6);
  CHECK(vq[0] == P("x0*x2 - x5^2", 6));
  CHECK(v.slices.empty());

  CHECK(determinantal_ideal(CycleKind::cubic_ruled, 8).slices.size() == 3);
  CHECK(determinantal_ideal(CycleKind::veronese, 8).slices.size() == 2);
  CHECK_THROWS(determinantal_ideal(CycleKind::linear, 4));
  CHECK(parse_cycle_kind("QS") == CycleKind::quartic_scroll);
  CHECK(to_string(CycleKind::veronese) == "veronese");
}

TEST_CASE("deformation families") {
  const std::vector<Monomial> table3{Monomial::product_of(6, {1, 2, 5}), Monomial::product_of(6, {1, 3, 5})};
  const auto fam = family_polynomial(4, 3, table3, 2);
  CHECK(fam.tau() == 2);
  CHECK(fam.constant_part() == fermat(4, 3));
  CHECK(fam.coefficient(table3[0]) == -Jet::variable(2, 2, 0));
  CHECK(fam.coefficient(table3[1]) == -Jet::variable(2, 2, 1));

  const std::vector<Monomial> table4{Monomial::product_of(6, {0, 3, 5}), Monomial::product_of(6, {1, 3, 5})};
  const auto fam4 = family_polynomial(4, 3, table4, 1);
  CHECK(fam4.coefficient(table4[0]) == -Jet::variable(2, 1, 0));
  CHECK(fam4.coefficient(Monomial::product_of(6, {1, 2, 5})).is_zero());

  const auto plain = family_polynomial(4, 3, {}, 3);
  CHECK(plain.tau() == 0);
  CHECK(plain.constant_part() == fermat(4, 3));
  CHECK_THROWS(family_polynomial(4, 3, {Monomial::product_of(6, {1, 1, 5})}, 1));
}
