#pragma once

// Fermat hypersurfaces, linear cycles and their pairings, determinantal cycles,
// and the deformation family over a chosen monomial set.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hodge/groebner.hpp"
#include "hodge/jets.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

/// x_0^d + ... + x_{n+1}^d.
Polynomial fermat(int n, int d = 3);

/// The linear subspace x_{2e} - z^{r_e} x_{2e+1} = 0, e = 0..n/2, inside the Fermat cubic;
/// every r_e is odd (a root of x^3 + y^3 in the block).
class LinearCycle {
 public:
  LinearCycle() = default;
  LinearCycle(int n, std::vector<int> roots, std::optional<std::pair<int, int>> label = std::nullopt);

  int n() const { return n_; }
  std::size_t nvars() const { return static_cast<std::size_t>(n_ + 2); }
  const std::vector<int>& roots() const { return roots_; }
  const std::optional<std::pair<int, int>>& label() const { return label_; }

  /// f_1..f_s.
  std::vector<Polynomial> linear_forms() const;
  /// f_{s+1}..f_{2s}: the quadratic cofactors, f_i f_{s+i} = x_{2i}^3 + x_{2i+1}^3.
  std::vector<Polynomial> complements() const;
  HomogeneousIdeal ideal() const;
  /// <f_1, ..., f_{2s}>, whose degree-3 part is the tangent space of the cycle's locus.
  HomogeneousIdeal full_ideal() const;

  nlohmann::json to_json() const;
  static LinearCycle from_json(const nlohmann::json& j);

  friend bool operator==(const LinearCycle& a, const LinearCycle& b) {
    return a.n_ == b.n_ && a.roots_ == b.roots_;
  }

 private:
  int n_ = 0;
  std::vector<int> roots_;
  std::optional<std::pair<int, int>> label_;
};

struct CyclePair {
  LinearCycle p;
  LinearCycle q;  // the checked cycle
  int m = 0;
};

/// Projective dimension of the intersection of two linear cycles (-1 when empty).
int intersection_dimension(const LinearCycle& a, const LinearCycle& b);

CyclePair sum_two_linear_cycles(int n, int d, int m);

/// Standard blocks except the last two, twisted by z^{2 a1 + 1} and z^{2 a2 + 1}.
LinearCycle twisted_linear_cycle(int n, int d, int a1, int a2);

/// [P_{0,0}, P_{0,1}, P_{2,1}], whose sum has the primitive class of P_{0,0} - P_{1,1}.
std::vector<LinearCycle> decompose_difference(int n);

enum class CycleKind { linear, cubic_ruled, quartic_scroll, veronese };

std::string to_string(CycleKind kind);
CycleKind parse_cycle_kind(const std::string& text);

/// Rank-one 3x2 matrix conditions (with extra quadrics for the scroll and the
/// Veronese) cut by linear slices.
struct DeterminantalCycle {
  CycleKind kind = CycleKind::cubic_ruled;
  int n = 0;
  /// f11, f12, f21, f22, f31, f32.
  std::array<Polynomial, 6> entries;
  std::vector<Polynomial> slices;
  std::vector<Polynomial> generators;

  HomogeneousIdeal ideal() const { return HomogeneousIdeal(static_cast<std::size_t>(n + 2), generators); }
  nlohmann::json to_json() const;
};

/// The three 2x2 minors of the matrix of entries.
std::vector<Polynomial> rank_one_minors(const std::array<Polynomial, 6>& f);
/// Quadrics of the kind (minors included for the scroll, the six quadrics for the Veronese).
std::vector<Polynomial> determinantal_quadrics(CycleKind kind, const std::array<Polynomial, 6>& f);
/// Number of linear slices carried by a cycle of the kind.
int slice_count(CycleKind kind, int n);

/// Default instance: f_ij = x0..x5 and slices on the remaining coordinates.
DeterminantalCycle determinantal_ideal(CycleKind kind, int n);
DeterminantalCycle determinantal_ideal(CycleKind kind, int n, std::array<Polynomial, 6> entries,
                                       std::vector<Polynomial> slices);

/// Fermat minus sum_a t_a x^{alpha_a}, over R_N with tau = #monomials.
JetPolynomial family_polynomial(int n, int d, const std::vector<Monomial>& monomials, int order = 1);

}  // namespace hodge
