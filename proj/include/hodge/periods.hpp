#pragma once

// Periods of linear cycles at the Fermat point, transport by coordinate scalings,
// first-order IVHS matrices and lattice discriminants.

#include <vector>

#include <json.hpp>

#include "hodge/derham.hpp"
#include "hodge/geometry.hpp"
#include "hodge/linalg.hpp"
#include "hodge/tangent.hpp"

namespace hodge {

/// Values of the period functional on the Griffiths basis, up to one global scalar.
/// Entries outside the middle pole order n/2 + 1 vanish.
struct PeriodVector {
  int n = 0;
  std::vector<CycloScalar> values;  // indexed like GriffithsBasis(n)
  /// "first-nonzero-one" after linear_cycle_periods, "transported" or "combined" otherwise.
  std::string normalization;

  bool is_zero() const;
  /// Some nonzero c with a = c * b.
  friend bool proportional(const PeriodVector& a, const PeriodVector& b);
  friend bool operator==(const PeriodVector& a, const PeriodVector& b) { return a.n == b.n && a.values == b.values; }
  PeriodVector scaled(const CycloScalar& c) const;
  friend PeriodVector operator+(const PeriodVector& a, const PeriodVector& b);
  nlohmann::json to_json(const GriffithsBasis& basis) const;
  static PeriodVector from_json(const nlohmann::json& j, const GriffithsBasis& basis);
};

class PeriodError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The functional annihilating every iterated derivative of the lower Hodge-filtration
/// generators along the cycle's tangent directions; throws PeriodError unless the
/// solution space is one dimensional.
PeriodVector linear_cycle_periods(const LinearCycle& cycle, const GriffithsBasis& basis);

/// Exponents e_j with x_j -> z^{e_j} x_j.
using Scaling = std::vector<int>;

/// Periods of g(cycle) for g: x_j -> z^{e_j} x_j, given the periods of cycle.
PeriodVector transport_periods(const PeriodVector& base, const Scaling& scaling, const GriffithsBasis& basis);

/// The scaling carrying one linear cycle onto another (block by block).
Scaling scaling_between(const LinearCycle& from, const LinearCycle& to);

/// Periods of every cycle of the family, normalized through transport from
/// the standard cycle x_{2e} = z x_{2e+1}.
PeriodVector transported_periods(const LinearCycle& cycle, const GriffithsBasis& basis);

struct IvhsMatrices {
  Matrix<CycloScalar> a;        // dim(S) x h^{n/2+1, n/2-1}
  Matrix<CycloScalar> a_check;
  std::vector<std::size_t> columns;  // basis indices of the pole-n/2 block

  /// Left kernel of A + x A-check: the tangent space of the locus of [P] + x[P-check].
  std::vector<std::vector<CycloScalar>> kernel(const CycloScalar& x) const;
};

IvhsMatrices ivhs_matrices(const CyclePair& pair, const DeformationSpace& space, const GriffithsBasis& basis);

/// Discriminant of the lattice spanned by r[P] + rr[P-check] and the hyperplane class (n = 4).
long lattice_discriminant(long r, long rr, int m);

}  // namespace hodge
