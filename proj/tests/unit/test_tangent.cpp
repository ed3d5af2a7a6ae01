#include <doctest.h>

#include <gmpxx.h>

#include "hodge/golden.hpp"
#include "hodge/tangent.hpp"

using namespace hodge;

namespace {

std::vector<std::string> compact(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.compact_str());
  return out;
}

std::size_t cubic_count(int n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + 4), 3);
  return b.get_ui();
}

}  // namespace

TEST_CASE("codimension of the pair ideal in degree 3") {
  CHECK(cubic_count(4) - tangent_of_pair(sum_two_linear_cycles(4, 3, 0)).graded_piece_dim(3) == 2);
  CHECK(cubic_count(8) - tangent_of_pair(sum_two_linear_cycles(8, 3, 2)).graded_piece_dim(3) == 19);
  CHECK(cubic_count(8) - tangent_of_pair(sum_two_linear_cycles(8, 3, 1)).graded_piece_dim(3) == 20);
}

TEST_CASE("deformation spaces match the published monomial lists") {
  CHECK(compact(choose_deformation_space(sum_two_linear_cycles(4, 3, 0)).monomials) ==
        std::vector<std::string>{"x1x2x5", "x1x3x5"});
  CHECK(compact(choose_deformation_space(sum_two_linear_cycles(6, 3, 0)).monomials) ==
        golden::kTable4Monomials.at(6));
  CHECK(compact(choose_deformation_space(sum_two_linear_cycles(6, 3, 1)).monomials) ==
        golden::kTable3Monomials.at(6));
  for (int n : {4, 6, 8}) {
    const auto s1 = choose_deformation_space(sum_two_linear_cycles(n, 3, n / 2 - 2));
    const auto s2 = choose_deformation_space(sum_two_linear_cycles(n, 3, n / 2 - 3));
    CHECK(static_cast<int>(s1.tau()) == golden::kTable1DimS.at(n));
    CHECK(static_cast<int>(s2.tau()) == golden::kTable2DimS.at(n));
    CHECK(s1.monomials.size() + s1.pair_ideal.graded_piece_dim(3) == cubic_count(n));
    CHECK(s2.monomials.size() + s2.pair_ideal.graded_piece_dim(3) == cubic_count(n));
    CHECK(rigidity_check(s1));
    CHECK(rigidity_check(s2));
  }
  const auto j = choose_deformation_space(sum_two_linear_cycles(4, 3, 0)).to_json();
  CHECK(j["dim_S"] == 2);
}

TEST_CASE("rigidity on constructed spaces") {
  DeformationSpace inside;
  inside.n = 1;
  inside.pair_ideal = HomogeneousIdeal(3, {Polynomial::variable(3, 0)});
  inside.monomials = {Monomial::product_of(3, {0, 1, 2})};
  CHECK_FALSE(rigidity_check(inside));
  inside.monomials = {Monomial::product_of(3, {1, 1, 2})};
  CHECK(rigidity_check(inside));
  DeformationSpace empty;
  empty.pair_ideal = inside.pair_ideal;
  CHECK(rigidity_check(empty));
}

TEST_CASE("branch counts") {
  // odd double factorial times a power of d
  const auto oracle = [](int n, int d) {
    mpz_class v = 1;
    for (int k = n + 1; k > 0; k -= 2) v *= k;
    for (int i = 0; i <= n / 2; ++i) v *= d;
    return v;
  };
  CHECK(branch_count(4, 3) == 405);
  CHECK(branch_count(6, 3) == 8505);
  CHECK(branch_count(4, 1) == 15);
  for (int n = 0; n <= 12; n += 2) CHECK(branch_count(n, 3) == oracle(n, 3));
}

TEST_CASE("sampled codimensions of special loci") {
  const auto lin = random_point_codim(CycleKind::linear, 6, 3, 1, 4);
  CHECK(lin.codim == 4);
  CHECK(lin.agreement >= 0.95);
  const auto cs = random_point_codim(CycleKind::cubic_ruled, 6, 3, 1, 4);
  CHECK(cs.codim == golden::kTable5.at(6).cubic_ruled);
  const auto v = random_point_codim(CycleKind::veronese, 6, 3, 1, 4, 2);
  CHECK(v.codim == golden::kTable5.at(6).veronese);
  CHECK(v.samples.size() == 4);
  const auto qs = random_point_codim(CycleKind::quartic_scroll, 8, 3, 1, 2);
  CHECK(qs.codim == golden::kTable5.at(8).quartic_scroll);
  CHECK(random_point_codim(CycleKind::linear, 8, 3, 1, 2).codim == 10);

  const auto a = random_point_codim_sample(CycleKind::cubic_ruled, 6, 3, 42);
  const auto b = random_point_codim_sample(CycleKind::cubic_ruled, 6, 3, 42);
  CHECK(a.rank == b.rank);
  CHECK(a.codim == 6);
  CHECK(a.smoothness == "unchecked");
  CHECK(random_point_codim_sample(CycleKind::veronese, 4, 3, 3).smoothness == "smooth");
}

TEST_CASE("smoothness modulo a prime") {
  CHECK(smooth_mod_p(fermat(4, 3)) == std::optional<bool>(true));
  const auto cone = Polynomial::parse("x0^3 + x1^3 + x2^3", 4);
  CHECK(smooth_mod_p(cone) == std::optional<bool>(false));
  CHECK_FALSE(smooth_mod_p(fermat(10, 3), 10).has_value());
}
