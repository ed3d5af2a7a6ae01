#include "hodge/hodgeloci.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hodge/parallel.hpp"

namespace hodge {

std::string to_string(Engine e) { return e == Engine::residue ? "residue" : "connection"; }

Engine parse_engine(const std::string& text) {
  if (text == "residue") return Engine::residue;
  if (text == "connection") return Engine::connection;
  throw std::invalid_argument("unknown engine: " + text);
}

struct LocusContext::Cache {
  std::mutex mu;
  std::map<int, std::vector<std::vector<std::pair<std::size_t, Jet>>>> expansions;
  std::map<int, ConnectionMatrix> connections;
  std::optional<IvhsMatrices> ivhs;
};

LocusContext::LocusContext(int n, int m, std::optional<CacheStore> store) : store_(std::move(store)) {
  pair_ = sum_two_linear_cycles(n, 3, m);
  space_ = choose_deformation_space(pair_, 3);
  init();
}

LocusContext::LocusContext(CyclePair pair, DeformationSpace space, std::optional<CacheStore> store)
    : pair_(std::move(pair)), space_(std::move(space)), store_(std::move(store)) {
  init();
}

void LocusContext::init() {
  basis_ = std::make_shared<const GriffithsBasis>(pair_.p.n());
  const LinearCycle standard(n(), std::vector<int>(pair_.p.roots().size(), 1));
  const auto base = cached_periods(store_ ? &*store_ : nullptr, standard, *basis_);
  p_ = transport_periods(base, scaling_between(standard, pair_.p), *basis_);
  q_ = transport_periods(base, scaling_between(standard, pair_.q), *basis_);
  for (std::size_t i = 0; i < basis_->size(); ++i)
    if ((*basis_)[i].k <= n() / 2) gen_forms_.push_back(i);
  cache_ = std::make_shared<Cache>();
}

const std::vector<std::vector<std::pair<std::size_t, Jet>>>& LocusContext::expansions(int order, int threads) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->expansions.find(order);
  if (it != cache_->expansions.end()) return it->second;
  std::vector<bool> keep(basis_->size(), false);
  for (auto i : basis_->block(n() / 2 + 1)) keep[i] = true;
  std::vector<std::vector<std::pair<std::size_t, Jet>>> out(gen_forms_.size());
  parallel_for(gen_forms_.size(), threads, [&](std::size_t g) {
    out[g] = taylor_coordinates((*basis_)[gen_forms_[g]], space_.monomials, order, *basis_, keep);
  });
  return cache_->expansions.emplace(order, std::move(out)).first->second;
}

const ConnectionMatrix& LocusContext::connection(int order, int threads) const {
  std::lock_guard lock(cache_->mu);
  auto it = cache_->connections.find(order);
  if (it != cache_->connections.end()) return it->second;
  return cache_->connections.emplace(order, cached_connection(store_ ? &*store_ : nullptr, n(), space_.monomials, order, *basis_, threads)).first->second;
}

const IvhsMatrices& LocusContext::ivhs() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->ivhs) cache_->ivhs = ivhs_matrices(pair_, space_, *basis_);
  return *cache_->ivhs;
}

nlohmann::json HodgeLocusIdeal::to_json(const GriffithsBasis& basis) const {
  nlohmann::json gens = nlohmann::json::array();
  for (std::size_t i = 0; i < generators.size(); ++i)
    gens.push_back({{"form", basis[forms[i]].str()}, {"jet", generators[i].str()}});
  nlohmann::json mons = nlohmann::json::array();
  for (const auto& m : monomials) mons.push_back(m.compact_str());
  return {{"n", n}, {"m", m}, {"r", r}, {"rr", rr}, {"order", order}, {"monomials", mons}, {"generators", gens}};
}

namespace {

std::vector<Jet> flat_transport(const ConnectionMatrix& cm, const std::vector<CycloScalar>& initial, int order) {
  const int tau = cm.tau;
  std::vector<Jet> p;
  p.reserve(initial.size());
  for (const auto& v : initial) p.push_back(Jet::constant(tau, order, v));
  // (j + 1) P^{(j+1)} = sum_a t_a [M_a P]^{(j)}
  for (int j = 0; j < order; ++j) {
    std::vector<Jet> step(p.size(), Jet(tau, order));
    for (int a = 0; a < tau; ++a) {
      const auto& m = cm.matrices[static_cast<std::size_t>(a)];
      const Jet ta = Jet::variable(tau, order, a);
      for (std::size_t b = 0; b < p.size(); ++b) {
        Jet acc(tau, order);
        for (std::size_t g = 0; g < p.size(); ++g)
          if (!m(b, g).is_zero() && !p[g].is_zero()) acc += m(b, g) * p[g];
        if (!acc.is_zero()) step[b] += ta * acc.component(j);
      }
    }
    const CycloScalar s(Rational(1, j + 1));
    for (std::size_t b = 0; b < p.size(); ++b) {
      Jet c = step[b].component(j + 1);
      if (!c.is_zero()) p[b] += c * s;
    }
  }
  return p;
}

}  // namespace

HodgeLocusIdeal hodge_ideal_of(const LocusContext& ctx, const PeriodVector& periods, int order, Engine engine,
                               int threads) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  HodgeLocusIdeal out;
  out.n = ctx.n();
  out.m = ctx.m();
  out.order = order;
  out.monomials = ctx.space().monomials;
  out.forms = ctx.generator_forms();
  const int tau = out.tau();
  if (engine == Engine::residue) {
    const auto& ex = ctx.expansions(order, threads);
    for (const auto& coords : ex) {
      Jet g(tau, order);
      for (const auto& [idx, jet] : coords)
        if (!periods.values[idx].is_zero()) g += jet * periods.values[idx];
      out.generators.push_back(std::move(g));
    }
  } else {
    const auto& cm = ctx.connection(std::max(order, 1), threads);
    auto p = flat_transport(cm, periods.values, order);
    for (auto f : out.forms) out.generators.push_back(p[f]);
  }
  return out;
}

HodgeLocusIdeal hodge_ideal(const LocusContext& ctx, long r, long rr, int order, Engine engine, int threads) {
  if (std::gcd(r, rr) != 1) throw std::invalid_argument("coefficients must be coprime");
  const auto periods = ctx.periods().scaled(CycloScalar(r)) + ctx.periods_check().scaled(CycloScalar(rr));
  auto out = hodge_ideal_of(ctx, periods, order, engine, threads);
  out.r = r;
  out.rr = rr;
  return out;
}

HodgeLocusIdeal hodge_ideal(const CyclePair& pair, const DeformationSpace& space, long r, long rr, int order,
                            Engine engine) {
  const LocusContext ctx(pair, space);
  return hodge_ideal(ctx, r, rr, order, engine);
}

namespace {

std::vector<SparseRow<CycloScalar>> linear_rows(const HodgeLocusIdeal& ideal) {
  std::vector<SparseRow<CycloScalar>> rows;
  for (const auto& g : ideal.generators) {
    SparseRow<CycloScalar> row;
    for (const auto& [key, c] : g.terms())
      if (key.degree() == 1) row.emplace_back(static_cast<std::uint32_t>(key.vars()[0]), c);
      else if (key.degree() > 1) break;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int tangent_codim(const HodgeLocusIdeal& ideal) {
  if (ideal.order < 1) throw std::invalid_argument("tangent codimension needs order >= 1");
  SparseEchelon<CycloScalar> ech;
  for (auto& row : linear_rows(ideal)) ech.insert(std::move(row));
  return static_cast<int>(ech.rank());
}

nlohmann::json SmoothnessReport::to_json() const {
  nlohmann::json j{{"verdict", smooth ? "smooth" : "not_smooth"}, {"codim", codim}, {"order", order}};
  j["witness"] = witness ? nlohmann::json(*witness) : nlohmann::json(nullptr);
  return j;
}

SmoothnessReport smooth_reduced(const HodgeLocusIdeal& ideal, const GriffithsBasis& basis) {
  const int tau = ideal.tau();
  const int order = ideal.order;
  SmoothnessReport rep;
  rep.order = order;
  if (order < 1) {
    rep.smooth = true;
    return rep;
  }

  const auto rows = linear_rows(ideal);
  SparseEchelon<CycloScalar> ech;
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (ech.insert(rows[i])) selected.push_back(i);
  const std::size_t c = selected.size();
  rep.codim = static_cast<int>(c);

  // [L_sel | I] -> [E | T] with T L_sel = E in reduced echelon form
  Matrix<CycloScalar> aug(c, static_cast<std::size_t>(tau) + c);
  for (std::size_t r = 0; r < c; ++r) {
    for (const auto& [col, v] : rows[selected[r]]) aug(r, col) = v;
    aug(r, static_cast<std::size_t>(tau) + r) = CycloScalar(1);
  }
  const auto pivots = rref(aug);
  std::vector<Jet> h(c, Jet(tau, order));
  for (std::size_t r = 0; r < c; ++r)
    for (std::size_t j = 0; j < c; ++j) {
      const auto& t = aug(r, static_cast<std::size_t>(tau) + j);
      if (!t.is_zero()) h[r] += ideal.generators[selected[j]] * t;
    }

  std::vector<Jet> images;
  for (int a = 0; a < tau; ++a) images.push_back(Jet::variable(tau, order, a));
  for (std::size_t r = 0; r < c; ++r) images[pivots[r]] = Jet(tau, order);
  // u_r = t_{u_r} - H_r(images), iterated to a fixed point in R_N
  for (int it = 0; it < order; ++it) {
    std::vector<Jet> next = images;
    for (std::size_t r = 0; r < c; ++r) {
      const Jet phi = Jet::variable(tau, order, static_cast<int>(pivots[r])) - h[r];
      next[pivots[r]] = phi.substitute(images);
    }
    if (next == images) break;
    images = std::move(next);
  }

  rep.smooth = true;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const Jet rest = ideal.generators[i].substitute(images);
    if (rest.is_zero()) continue;
    rep.smooth = false;
    const auto& [key, coef] = rest.terms().front();
    std::ostringstream os;
    os << basis[ideal.forms[i]].str() << ": (" << coef.str() << ")*" << key.str();
    rep.witness = os.str();
    break;
  }
  return rep;
}

PencilReport pencil_check(const IvhsMatrices& m, const std::vector<CycloScalar>& sample) {
  PencilReport rep;
  std::vector<std::vector<std::vector<CycloScalar>>> kernels;
  for (const auto& x : sample) {
    kernels.push_back(m.kernel(x));
    rep.kernel_dims.push_back(static_cast<int>(kernels.back().size()));
  }
  rep.holds = true;
  if (!kernels.empty()) rep.kernel_dim = rep.kernel_dims.front();
  for (auto d : rep.kernel_dims)
    if (d != rep.kernel_dim) rep.holds = false;
  const std::size_t dim = m.a.rows();
  for (std::size_t i = 0; i < kernels.size() && rep.holds; ++i)
    for (std::size_t j = i + 1; j < kernels.size() && rep.holds; ++j) {
      Matrix<CycloScalar> stack(kernels[i].size() + kernels[j].size(), dim);
      std::size_t r = 0;
      for (const auto* k : {&kernels[i], &kernels[j]})
        for (const auto& v : *k) {
          for (std::size_t col = 0; col < dim; ++col) stack(r, col) = v[col];
          ++r;
        }
      if (rank(stack) != stack.rows()) rep.holds = false;
    }
  return rep;
}

std::vector<std::pair<long, long>> coefficient_sweep(int range) {
  std::vector<std::pair<long, long>> out;
  for (long r = 1; r <= range; ++r)
    for (long rr = -range; rr <= range; ++rr)
      if (rr != 0 && std::gcd(r, rr) == 1) out.emplace_back(r, rr);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::max(a.first, std::abs(a.second)) < std::max(b.first, std::abs(b.second));
  });
  return out;
}

nlohmann::json TableReport::to_json() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) {
    nlohmann::json j{{"n", c.n},          {"m", c.m},         {"dim_s", c.dim_s},
                     {"codim", c.codim},  {"monomials", c.monomials}, {"rigid", c.rigid},
                     {"max_smooth_difference", c.max_smooth_difference}};
    if (which == 2) {
      j["pencil"] = c.pencil;
      j["pencil_kernel_dim"] = c.pencil_kernel_dim;
    }
    cols.push_back(j);
  }
  nlohmann::json cells_j = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json j{{"n", c.n}, {"r", c.r}, {"rr", c.rr}, {"order", c.order}, {"status", c.status}, {"codim", c.codim}};
    j["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
    cells_j.push_back(j);
  }
  return {{"table", which}, {"columns", cols}, {"cells", cells_j}};
}

TableReport run_theorem_tables(const TableConfig& config) {
  if (config.which != 1 && config.which != 2) throw std::invalid_argument("table must be 1 or 2");
  const auto start = std::chrono::steady_clock::now();
  const auto over_budget = [&] {
    if (config.budget_seconds <= 0) return false;
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    return el.count() > config.budget_seconds;
  };
  const auto pairs = config.pairs.empty() ? coefficient_sweep(config.range) : config.pairs;
  const int top_order = config.orders.empty() ? 1 : *std::max_element(config.orders.begin(), config.orders.end());

  TableReport rep;
  rep.which = config.which;
  for (int n : config.ns) {
    const int m = config.which == 1 ? n / 2 - 2 : n / 2 - 3;
    const LocusContext ctx(n, m, config.store);
    TableColumn col;
    col.n = n;
    col.m = m;
    col.dim_s = static_cast<int>(ctx.space().tau());
    for (const auto& mon : ctx.space().monomials) col.monomials.push_back(mon.compact_str());
    col.rigid = rigidity_check(ctx.space());
    if (config.which == 2) {
      const std::vector<CycloScalar> xs{CycloScalar(1), CycloScalar(-1), CycloScalar(2), CycloScalar(Rational(1, 2)),
                                        CycloScalar(3)};
      const auto pc = pencil_check(ctx.ivhs(), xs);
      col.pencil = pc.holds;
      col.pencil_kernel_dim = pc.kernel_dim;
    }
    if (!over_budget()) ctx.expansions(std::max(top_order, 1), config.threads);

    std::vector<std::vector<TableCell>> slots(pairs.size());
    parallel_for(pairs.size(), config.threads, [&](std::size_t i) {
      const auto [r, rr] = pairs[i];
      auto& out = slots[i];
      for (int order : config.orders) out.push_back({n, r, rr, order, "budget", 0, std::nullopt});
      if (over_budget()) return;
      const auto full = hodge_ideal(ctx, r, rr, std::max(top_order, 1), config.engine, 1);
      for (auto& cell : out) {
        if (over_budget()) return;
        HodgeLocusIdeal ideal = full;
        ideal.order = cell.order;
        for (auto& g : ideal.generators) g = g.truncate(cell.order);
        const auto s = smooth_reduced(ideal, ctx.basis());
        cell.status = s.smooth ? "smooth" : "not_smooth";
        cell.codim = s.codim;
        cell.witness = s.witness;
      }
    });
    for (const auto& s : slots)
      for (const auto& cell : s) {
        if (cell.status != "budget" && col.codim < 0) col.codim = cell.codim;
        if (cell.r == 1 && cell.rr == -1 && cell.status == "smooth")
          col.max_smooth_difference = std::max(col.max_smooth_difference, cell.order);
        rep.cells.push_back(cell);
      }
    if (col.codim < 0 && !over_budget()) col.codim = tangent_codim(hodge_ideal(ctx, 1, 1, 1, config.engine));
    rep.columns.push_back(std::move(col));
  }
  return rep;
}

}  // namespace hodge
