#pragma once

// The N-th order Hodge-locus ideal of r[P] + rr[P-check], the formal
// smooth/reduced test, tangent codimensions and the table sweeps.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hodge/cache.hpp"
#include "hodge/derham.hpp"
#include "hodge/periods.hpp"
#include "hodge/tangent.hpp"

namespace hodge {

enum class Engine { residue, connection };

std::string to_string(Engine e);
Engine parse_engine(const std::string& text);

/// Everything about a pair (n, m) that does not depend on the coefficients or the order.
class LocusContext {
 public:
  LocusContext(int n, int m, std::optional<CacheStore> store = std::nullopt);
  LocusContext(CyclePair pair, DeformationSpace space, std::optional<CacheStore> store = std::nullopt);

  int n() const { return pair_.p.n(); }
  int m() const { return pair_.m; }
  const CyclePair& pair() const { return pair_; }
  const DeformationSpace& space() const { return space_; }
  const GriffithsBasis& basis() const { return *basis_; }
  const PeriodVector& periods() const { return p_; }
  const PeriodVector& periods_check() const { return q_; }
  /// Basis indices of the generating forms (pole order <= n/2).
  const std::vector<std::size_t>& generator_forms() const { return gen_forms_; }

  /// Fermat-point expansion coordinates of every generating form on the middle block, to order N.
  const std::vector<std::vector<std::pair<std::size_t, Jet>>>& expansions(int order, int threads = 1) const;
  const ConnectionMatrix& connection(int order, int threads = 1) const;
  const IvhsMatrices& ivhs() const;

 private:
  struct Cache;
  void init();

  CyclePair pair_;
  DeformationSpace space_;
  std::optional<CacheStore> store_;
  std::shared_ptr<const GriffithsBasis> basis_;
  PeriodVector p_;
  PeriodVector q_;
  std::vector<std::size_t> gen_forms_;
  std::shared_ptr<Cache> cache_;
};

struct HodgeLocusIdeal {
  int n = 0;
  int m = 0;
  long r = 0;
  long rr = 0;
  int order = 0;
  std::vector<Monomial> monomials;
  std::vector<std::size_t> forms;  // basis index of each generator
  std::vector<Jet> generators;

  int tau() const { return static_cast<int>(monomials.size()); }
  nlohmann::json to_json(const GriffithsBasis& basis) const;
};

/// Periods of the flat continuation of r[P] + rr[P-check] on the generating forms, as jets.
HodgeLocusIdeal hodge_ideal(const LocusContext& ctx, long r, long rr, int order, Engine engine = Engine::residue,
                            int threads = 1);
HodgeLocusIdeal hodge_ideal(const CyclePair& pair, const DeformationSpace& space, long r, long rr, int order,
                            Engine engine = Engine::residue);

/// The same construction for an arbitrary period functional (no coefficient bookkeeping).
HodgeLocusIdeal hodge_ideal_of(const LocusContext& ctx, const PeriodVector& periods, int order,
                               Engine engine = Engine::residue, int threads = 1);

/// Rank of the linear parts of the generators.
int tangent_codim(const HodgeLocusIdeal& ideal);

struct SmoothnessReport {
  bool smooth = false;
  int codim = 0;
  int order = 0;
  /// First surviving term after elimination, e.g. "w[1,2]/k=4: 3*t1*t5".
  std::optional<std::string> witness;

  nlohmann::json to_json() const;
};

/// Solves the pivot generators for c parameters order by order and substitutes into all generators.
SmoothnessReport smooth_reduced(const HodgeLocusIdeal& ideal, const GriffithsBasis& basis);

struct PencilReport {
  bool holds = false;
  int kernel_dim = -1;
  std::vector<int> kernel_dims;
};

/// ker(A + x A-check) for the sample values: equal dimensions and pairwise trivial intersections.
PencilReport pencil_check(const IvhsMatrices& m, const std::vector<CycloScalar>& sample);

struct TableConfig {
  int which = 1;  // 1: m = n/2 - 2, 2: m = n/2 - 3
  std::vector<int> ns{4, 6, 8};
  std::vector<int> orders{2, 3, 4};
  int range = 10;
  /// Explicit coefficient pairs; when empty all coprime pairs with r > 0 and |r|, |rr| <= range.
  std::vector<std::pair<long, long>> pairs;
  double budget_seconds = 0;  // 0: unlimited
  int threads = 1;
  Engine engine = Engine::residue;
  std::optional<CacheStore> store;
};

struct TableCell {
  int n = 0;
  long r = 0;
  long rr = 0;
  int order = 0;
  /// "smooth", "not_smooth" or "budget".
  std::string status;
  int codim = 0;
  std::optional<std::string> witness;
};

struct TableColumn {
  int n = 0;
  int m = 0;
  int dim_s = 0;
  int codim = -1;
  std::vector<std::string> monomials;
  bool rigid = false;
  /// Largest order in the sweep at which r = -rr = 1 is smooth, or -1.
  int max_smooth_difference = -1;
  bool pencil = false;
  int pencil_kernel_dim = -1;
};

struct TableReport {
  int which = 1;
  std::vector<TableColumn> columns;
  std::vector<TableCell> cells;

  nlohmann::json to_json() const;
};

/// Coprime pairs ordered by max(|r|, |rr|), then r, then rr.
std::vector<std::pair<long, long>> coefficient_sweep(int range);

TableReport run_theorem_tables(const TableConfig& config);

}  // namespace hodge
