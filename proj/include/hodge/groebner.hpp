#pragma once

// Homogeneous ideals: Groebner bases, membership, graded pieces, intersections.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hodge/linalg.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

/// Reduced Groebner basis (degrevlex, monic) of a homogeneous generator list.
/// With max_degree >= 0 only S-pairs up to that degree are processed, so the
/// result is a Groebner basis of the ideal in degrees <= max_degree.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators, int max_degree = -1);

/// Remainder of p modulo a Groebner basis (full reduction, degrevlex).
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

class HomogeneousIdeal {
 public:
  HomogeneousIdeal() = default;
  HomogeneousIdeal(std::size_t nvars, std::vector<Polynomial> generators);

  /// The ideal generated by 1.
  static HomogeneousIdeal unit(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Cached; see the free function for the meaning of max_degree.
  const std::vector<Polynomial>& groebner_basis(int max_degree = -1) const;

  /// Normal form with respect to a Groebner basis valid through p's degree.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;

  /// Echelon basis of I_deg, columns indexed by monomials_of_degree(nvars, deg).
  SparseEchelon<CycloScalar> graded_piece(int deg) const;
  std::size_t graded_piece_dim(int deg) const;
  /// Standard monomials of degree deg, in descending degrevlex order.
  std::vector<Monomial> quotient_monomial_basis(int deg) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<const std::vector<Polynomial>>> bases;
  };

  std::size_t nvars_ = 0;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// I ∩ J by elimination: generators of (t I + (1 - t) J) free of t.
/// With max_degree >= 0 the result generates the intersection through that degree.
HomogeneousIdeal ideal_intersect(const HomogeneousIdeal& i, const HomogeneousIdeal& j, int max_degree = -1);

/// The degree-deg part of I ∩ J computed directly in the graded piece (Zassenhaus).
std::vector<Polynomial> graded_intersection(const HomogeneousIdeal& i, const HomogeneousIdeal& j, int deg);

HomogeneousIdeal jacobian_ideal(const Polynomial& f);

/// Sparse coordinate row of a homogeneous polynomial over an indexed monomial list.
SparseRow<CycloScalar> to_row(const Polynomial& p, const MonomialIndex& index);
Polynomial from_row(const SparseRow<CycloScalar>& row, const MonomialIndex& index);

}  // namespace hodge
