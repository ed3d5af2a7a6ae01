#pragma once

// Tangent spaces of loci of hypersurfaces containing cycles, the reduced
// parameter space S, and sampled codimensions of determinantal loci.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "hodge/geometry.hpp"
#include "hodge/groebner.hpp"

namespace hodge {

struct DeformationSpace {
  int n = 0;
  int degree = 3;
  std::vector<Monomial> monomials;
  /// Generators of the pair ideal through the working degree.
  HomogeneousIdeal pair_ideal;

  std::size_t tau() const { return monomials.size(); }
  nlohmann::json to_json() const;
};

/// The intersection of the two full cycle ideals, generated by its degree-d piece.
HomogeneousIdeal tangent_of_pair(const CyclePair& pair, int d = 3);

/// Standard monomials of the pair ideal in degree d.
DeformationSpace choose_deformation_space(const CyclePair& pair, int d = 3);

/// span(S) ∩ I_d = {0}.
bool rigidity_check(const DeformationSpace& space);

/// 1 * 3 * ... * (n + 1) * d^{n/2 + 1}.
mpz_class branch_count(int n, int d);

struct CodimSample {
  std::uint64_t seed = 0;
  int rank = 0;
  int codim = 0;
  int draws = 0;
  /// "smooth", "unchecked" (too large to certify).
  std::string smoothness;
};

struct CodimReport {
  CycleKind kind = CycleKind::linear;
  int n = 0;
  int d = 3;
  int ambient = 0;  // dim C[x]_d
  int codim = 0;    // modal value
  double agreement = 0.0;
  std::vector<CodimSample> samples;

  nlohmann::json to_json() const;
};

/// Codimension of the image of the derivative of the parameterization at a random
/// point drawn from the seed (several confirmation draws, the largest rank wins).
CodimSample random_point_codim_sample(CycleKind kind, int n, int d, std::uint64_t seed, int confirmations = 2);

/// Modal value over seeds base_seed, base_seed + 1, ..., base_seed + batch - 1.
CodimReport random_point_codim(CycleKind kind, int n, int d, std::uint64_t base_seed, int batch = 20, int threads = 1);

/// Whether the Jacobian ideal of f contains every monomial of degree (n+2)(d-2)+1 modulo a large prime.
/// Returns nullopt when the check is too large to run.
std::optional<bool> smooth_mod_p(const Polynomial& f, std::size_t max_columns = 4000);

}  // namespace hodge
