#pragma once

// Griffiths residue basis of primitive cohomology of smooth cubic hypersurfaces,
// Griffiths-Dwork reduction over jets and the Gauss-Manin connection.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hodge/jets.hpp"
#include "hodge/linalg.hpp"
#include "hodge/polynomial.hpp"

namespace hodge {

/// omega_beta = Res(x^beta Omega / f^k), beta squarefree of degree 3k - n - 2.
struct GriffithsForm {
  Monomial beta;
  int k = 0;

  /// Indices of beta, ascending.
  std::vector<int> subset() const { return beta.support(); }
  std::string str() const;
  friend bool operator==(const GriffithsForm& a, const GriffithsForm& b) { return a.k == b.k && a.beta == b.beta; }
};

int min_pole_order(int n, int d = 3);
int max_pole_order(int n, int d = 3);

/// All forms ordered by k, then lexicographically by the subset beta.
std::vector<GriffithsForm> griffiths_basis(int n, int d = 3);

/// h^{n,0}, ..., h^{0,n} of the full middle cohomology.
std::vector<int> hodge_numbers(int n, int d = 3);

/// Fixed enumeration of the basis with lookup by beta.
class GriffithsBasis {
 public:
  explicit GriffithsBasis(int n);

  int n() const { return n_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<GriffithsForm>& forms() const { return forms_; }
  const GriffithsForm& operator[](std::size_t i) const { return forms_[i]; }
  /// Index of the form with this beta, or -1.
  long find(const Monomial& beta) const;
  /// Indices of forms with pole order k.
  std::vector<std::size_t> block(int k) const;

 private:
  int n_;
  std::vector<GriffithsForm> forms_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Closed reduction at the Fermat point: x^gamma Omega / F^k = coeff * x^beta Omega / F^{k'}
/// in cohomology, or nullopt when the class is zero.
struct FermatReduction {
  Rational coeff;
  Monomial beta;
  int k = 0;
};
std::optional<FermatReduction> fermat_reduce(const Monomial& gamma, int k);

/// Coordinates over the Griffiths basis, with Jet entries of a common (tau, N).
struct CohomologyVector {
  std::vector<Jet> coords;

  bool is_zero() const;
  CohomologyVector& operator+=(const CohomologyVector& o);
  friend bool operator==(const CohomologyVector& a, const CohomologyVector& b) { return a.coords == b.coords; }
};

/// Res(numerator Omega / family^k) in the Griffiths basis over R_N.
CohomologyVector griffiths_dwork_reduce(const JetPolynomial& numerator, int k, const JetPolynomial& family,
                                        const GriffithsBasis& basis);

/// matrices[a](beta, gamma) is the omega_gamma coordinate of nabla_{d/dt_a} omega_beta.
struct ConnectionMatrix {
  int n = 0;
  int tau = 0;
  int order = 0;
  std::vector<Matrix<Jet>> matrices;

  /// Entries only on pole orders <= k(beta) + 1.
  bool transversal(const GriffithsBasis& basis) const;
  /// d_a M_b + M_b M_a - d_b M_a - M_a M_b = 0 through degree order - 1.
  bool flat() const;
};

/// Gauss-Manin connection of f_t = F - sum t_a x^{alpha_a}; matrices are computed column by column.
ConnectionMatrix gauss_manin(int n, const std::vector<Monomial>& monomials, int order, const GriffithsBasis& basis,
                             int threads = 1);

/// Fermat-point coordinates of omega_beta(t) = Res(x^beta Omega / f_t^k) as jets:
/// sum over multi-indices |a| <= N of (k+|a|-1)!/((k-1)! a!) t^a x^{beta + a.alpha} / F^{k+|a|}.
/// Only the coordinates selected by keep (a basis index predicate) are returned, keyed by basis index.
std::vector<std::pair<std::size_t, Jet>> taylor_coordinates(const GriffithsForm& form, const std::vector<Monomial>& monomials,
                                                            int order, const GriffithsBasis& basis,
                                                            const std::vector<bool>& keep);

}  // namespace hodge
