#include <doctest.h>

#include <map>
#include <numeric>

#include "hodge/periods.hpp"

using namespace hodge;

namespace {

void check_hodge_vanishing(const PeriodVector& p, const GriffithsBasis& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].k <= basis.n() / 2) CHECK(p.values[i].is_zero());
}

std::size_t kernel_dim(const IvhsMatrices& m, const CycloScalar& x) { return m.kernel(x).size(); }

}  // namespace

TEST_CASE("periods of linear cycles are hodge") {
  for (int n : {4, 6}) {
    const GriffithsBasis basis(n);
    for (int m = -1; m <= n / 2; ++m) {
      const auto pair = sum_two_linear_cycles(n, 3, m);
      for (const auto& cycle : {pair.p, pair.q}) {
        const auto p = linear_cycle_periods(cycle, basis);
        CHECK_FALSE(p.is_zero());
        check_hodge_vanishing(p, basis);
        check_hodge_vanishing(transported_periods(cycle, basis), basis);
      }
    }
  }
}

TEST_CASE("surfaces carry no hodge condition") {
  // the F^2 block of a cubic surface is empty, so the functional is not determined
  CHECK_THROWS_AS(linear_cycle_periods(sum_two_linear_cycles(2, 3, 0).p, GriffithsBasis(2)), PeriodError);
}

TEST_CASE("direct and transported periods agree up to a scalar") {
  for (int n : {4, 6}) {
    const GriffithsBasis basis(n);
    const auto base = twisted_linear_cycle(n, 3, 0, 0);
    const auto p00 = linear_cycle_periods(base, basis);
    CHECK(p00.normalization == "first-nonzero-one");
    for (int a1 = 0; a1 < 3; ++a1) {
      for (int a2 = 0; a2 < 3; ++a2) {
        const auto cycle = twisted_linear_cycle(n, 3, a1, a2);
        const auto moved = transport_periods(p00, scaling_between(base, cycle), basis);
        CHECK(proportional(moved, linear_cycle_periods(cycle, basis)));
        CHECK(proportional(transported_periods(cycle, basis), moved));
      }
    }
  }
}

TEST_CASE("scaling action") {
  const GriffithsBasis basis(4);
  const auto p = linear_cycle_periods(twisted_linear_cycle(4, 3, 0, 0), basis);
  CHECK(transport_periods(p, Scaling(6, 0), basis) == p);
  const Scaling g{0, 0, 0, 2, 0, 4};
  Scaling g2(6);
  for (std::size_t j = 0; j < 6; ++j) g2[j] = 2 * g[j];
  CHECK(transport_periods(transport_periods(p, g, basis), g, basis) == transport_periods(p, g2, basis));
  const Scaling odd{1, 1, 1, 1, 1, 1};
  CHECK(transport_periods(p, odd, basis) == transport_periods(p, odd, basis));
  CHECK_THROWS_AS(transport_periods(p, Scaling{1, 0, 0, 0, 0, 0}, basis), std::invalid_argument);
}

TEST_CASE("the difference decomposes into three planes") {
  for (int n : {4, 6}) {
    const GriffithsBasis basis(n);
    const auto parts = decompose_difference(n);
    const auto lhs = transported_periods(parts[0], basis) + transported_periods(parts[1], basis) +
                     transported_periods(parts[2], basis);
    const auto rhs = transported_periods(twisted_linear_cycle(n, 3, 0, 0), basis) +
                     transported_periods(twisted_linear_cycle(n, 3, 1, 1), basis).scaled(CycloScalar(-1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("period vectors serialize") {
  const GriffithsBasis basis(4);
  const auto p = transported_periods(sum_two_linear_cycles(4, 3, 0).q, basis);
  const auto back = PeriodVector::from_json(p.to_json(basis), basis);
  CHECK(back == p);
  CHECK(back.normalization == p.normalization);
  CHECK_THROWS(PeriodVector::from_json(p.to_json(basis), GriffithsBasis(6)));
}

TEST_CASE("first-order infinitesimal variation") {
  const GriffithsBasis b4(4);
  const auto pair4 = sum_two_linear_cycles(4, 3, 0);
  const auto m4 = ivhs_matrices(pair4, choose_deformation_space(pair4), b4);
  CHECK(m4.a.rows() == 2);
  CHECK(m4.a.cols() == 1);
  for (long x : {1, 2, -3, 5}) CHECK(kernel_dim(m4, CycloScalar(x)) == 1);

  const GriffithsBasis b6(6);
  const auto pair61 = sum_two_linear_cycles(6, 3, 1);
  const auto m61 = ivhs_matrices(pair61, choose_deformation_space(pair61), b6);
  for (long x : {1, 2, -3}) CHECK(8 - kernel_dim(m61, CycloScalar(x)) == 6);

  const auto pair60 = sum_two_linear_cycles(6, 3, 0);
  const auto m60 = ivhs_matrices(pair60, choose_deformation_space(pair60), b6);
  for (long x : {1, 2, -3}) {
    CHECK(kernel_dim(m60, CycloScalar(x)) == 1);
    CHECK(8 - kernel_dim(m60, CycloScalar(x)) == 7);
  }
}

TEST_CASE("directions tangent to the cycle impose no condition") {
  const GriffithsBasis basis(4);
  const auto pair = sum_two_linear_cycles(4, 3, 0);
  DeformationSpace all;
  all.n = 4;
  all.monomials = monomials_of_degree(6, 3);
  const auto m = ivhs_matrices(pair, all, basis);
  const MonomialIndex index(all.monomials);
  auto piece = pair.p.full_ideal().graded_piece(3);
  CHECK(piece.rank() > 0);
  for (const auto& [lead, row] : piece.rows()) {
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      CycloScalar s;
      for (const auto& [col, v] : row) s += v * m.a(col, c);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("lattice discriminants") {
  CHECK(lattice_discriminant(1, 1, -1) == 14);
  CHECK(lattice_discriminant(1, -1, -1) == 18);
  CHECK(lattice_discriminant(2, 1, -1) == 36);
  for (long r = 1; r <= 10; ++r) {
    for (long rr = -10; rr <= 10; ++rr) {
      if (rr == 0 || std::gcd(r, rr) != 1) continue;
      const long d = lattice_discriminant(r, rr, -1);
      CHECK((d % 6 == 0 || d % 6 == 2));
    }
  }
  // Gram determinant of h^2, r P + rr Pc with h^4 = 3, h^2.P = 1, P^2 = 3 and P.Pc = 0, 1, -1
  const std::map<int, long> meet{{-1, 0}, {0, 1}, {1, -1}};
  for (const auto& [m, pq] : meet) {
    for (long r = -6; r <= 6; ++r) {
      for (long rr = -6; rr <= 6; ++rr) {
        const long t2 = 3 * r * r + 3 * rr * rr + 2 * r * rr * pq;
        CHECK(lattice_discriminant(r, rr, m) == 3 * t2 - (r + rr) * (r + rr));
      }
    }
  }
  CHECK_THROWS(lattice_discriminant(1, 1, 2));
}
