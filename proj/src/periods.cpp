#include "hodge/periods.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hodge/parallel.hpp"

namespace hodge {

bool PeriodVector::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const CycloScalar& v) { return v.is_zero(); });
}

bool proportional(const PeriodVector& a, const PeriodVector& b) {
  if (a.n != b.n || a.values.size() != b.values.size() || a.is_zero() || b.is_zero()) return false;
  std::size_t i = 0;
  while (b.values[i].is_zero()) ++i;
  const CycloScalar c = a.values[i] / b.values[i];
  if (c.is_zero()) return false;
  for (std::size_t j = 0; j < a.values.size(); ++j)
    if (a.values[j] != c * b.values[j]) return false;
  return true;
}

PeriodVector PeriodVector::scaled(const CycloScalar& c) const {
  PeriodVector out = *this;
  for (auto& v : out.values) v = c * v;
  return out;
}

PeriodVector operator+(const PeriodVector& a, const PeriodVector& b) {
  if (a.n != b.n || a.values.size() != b.values.size()) throw std::invalid_argument("period vector size mismatch");
  PeriodVector out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  out.normalization = "combined";
  return out;
}

nlohmann::json PeriodVector::to_json(const GriffithsBasis& basis) const {
  nlohmann::json vals = nlohmann::json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) vals.push_back({{"form", basis[i].str()}, {"subset", basis[i].subset()}, {"k", basis[i].k},
                                              {"value", values[i].str()}});
  return {{"n", n}, {"normalization", normalization}, {"values", vals}};
}

PeriodVector PeriodVector::from_json(const nlohmann::json& j, const GriffithsBasis& basis) {
  PeriodVector p;
  p.n = j.at("n").get<int>();
  if (p.n != basis.n()) throw std::invalid_argument("period vector belongs to a different dimension");
  p.normalization = j.at("normalization").get<std::string>();
  p.values.assign(basis.size(), CycloScalar());
  const std::size_t nv = static_cast<std::size_t>(p.n + 2);
  for (const auto& e : j.at("values")) {
    const auto beta = Monomial::product_of(nv, e.at("subset").get<std::vector<int>>());
    const long idx = basis.find(beta);
    if (idx < 0) throw std::invalid_argument("unknown form in period vector");
    p.values[static_cast<std::size_t>(idx)] = CycloScalar::parse(e.at("value").get<std::string>());
  }
  return p;
}

namespace {

// Basis of the degree-3 part of the cycle's full ideal, as polynomials.
std::vector<Polynomial> tangent_basis(const LinearCycle& cycle) {
  const auto nv = cycle.nvars();
  const MonomialIndex index(monomials_of_degree(nv, 3));
  auto piece = cycle.full_ideal().graded_piece(3);
  piece.make_reduced();
  std::vector<Polynomial> out;
  for (const auto& [lead, row] : piece.rows()) out.push_back(from_row(row, index));
  return out;
}

}  // namespace

PeriodVector linear_cycle_periods(const LinearCycle& cycle, const GriffithsBasis& basis) {
  const int n = basis.n();
  if (cycle.n() != n) throw std::invalid_argument("cycle and basis dimensions differ");
  const int top = n / 2 + 1;
  const auto block = basis.block(top);
  std::vector<long> column(basis.size(), -1);
  for (std::size_t c = 0; c < block.size(); ++c) column[block[c]] = static_cast<long>(c);
  const auto vs = tangent_basis(cycle);
  const std::size_t ncols = block.size();

  SparseEchelon<CycloScalar> ech;
  auto add_numerator = [&](const Polynomial& num) {
    std::map<std::uint32_t, CycloScalar> acc;
    for (const auto& [m, c] : num.terms()) {
      auto r = fermat_reduce(m, top);
      if (!r || r->k != top) continue;
      const long col = column[static_cast<std::size_t>(basis.find(r->beta))];
      acc[static_cast<std::uint32_t>(col)] += c * r->coeff;
    }
    SparseRow<CycloScalar> row;
    for (auto& [c, v] : acc)
      if (!v.is_zero()) row.emplace_back(c, std::move(v));
    if (!row.empty()) ech.insert(std::move(row));
  };

  // nabla_{v_1} ... nabla_{v_j} omega_beta lands at pole k + j = top; constant factors are dropped
  std::vector<int> chosen;
  for (int j = 1; top - j >= min_pole_order(n) && ech.rank() + 1 < ncols; ++j) {
    const int k = top - j;
    std::vector<Monomial> betas;
    for (auto idx : basis.block(k)) betas.push_back(basis[idx].beta);
    std::function<void(std::size_t, const Polynomial&)> walk = [&](std::size_t start, const Polynomial& prod) {
      if (ech.rank() + 1 >= ncols) return;
      if (static_cast<int>(chosen.size()) == j) {
        for (const auto& b : betas) add_numerator(prod.multiply(b));
        return;
      }
      for (std::size_t v = start; v < vs.size(); ++v) {
        chosen.push_back(static_cast<int>(v));
        walk(v, prod * vs[v]);
        chosen.pop_back();
      }
    };
    walk(0, Polynomial::constant(cycle.nvars(), CycloScalar(1)));
  }
  if (ech.rank() + 1 != ncols)
    throw PeriodError("period solution space has dimension " + std::to_string(ncols - ech.rank()) + ", expected 1");

  ech.make_reduced();
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : ech.pivots()) is_pivot[p] = true;
  const auto free_col = static_cast<std::size_t>(std::find(is_pivot.begin(), is_pivot.end(), false) - is_pivot.begin());
  std::vector<CycloScalar> v(ncols);
  v[free_col] = CycloScalar(1);
  for (const auto& [lead, row] : ech.rows())
    for (const auto& [c, x] : row)
      if (c == free_col) v[lead] = -x;

  PeriodVector out;
  out.n = n;
  out.normalization = "first-nonzero-one";
  out.values.assign(basis.size(), CycloScalar());
  CycloScalar first;
  for (const auto& x : v)
    if (!x.is_zero()) {
      first = x;
      break;
    }
  const CycloScalar s = first.inverse();
  for (std::size_t c = 0; c < ncols; ++c) out.values[block[c]] = v[c] * s;
  return out;
}

PeriodVector transport_periods(const PeriodVector& base, const Scaling& scaling, const GriffithsBasis& basis) {
  const std::size_t nv = static_cast<std::size_t>(base.n + 2);
  if (scaling.size() != nv) throw std::invalid_argument("scaling has the wrong number of coordinates");
  // F(g x) = c F with c = z^{3 e_j} for every j
  const auto parity = [](long e) { return ((e % 2) + 2) % 2; };
  for (auto e : scaling)
    if (parity(e) != parity(scaling[0])) throw std::invalid_argument("scaling is not a symmetry of the Fermat variety");
  const bool odd = parity(scaling[0]) == 1;
  PeriodVector out = base;
  out.normalization = "transported";
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    if (base.values[i].is_zero()) continue;
    const auto& form = basis[i];
    long e = 0;
    for (std::size_t j = 0; j < nv; ++j) e += static_cast<long>(scaling[j]) * (form.beta[j] + 1);
    if (odd && form.k % 2 == 1) e += 3;
    out.values[i] = CycloScalar::zeta(e) * base.values[i];
  }
  return out;
}

Scaling scaling_between(const LinearCycle& from, const LinearCycle& to) {
  if (from.n() != to.n()) throw std::invalid_argument("cycles live in different dimensions");
  Scaling s(from.nvars(), 0);
  for (std::size_t e = 0; e < from.roots().size(); ++e) s[2 * e + 1] = from.roots()[e] - to.roots()[e];
  return s;
}

PeriodVector transported_periods(const LinearCycle& cycle, const GriffithsBasis& basis) {
  const LinearCycle standard(cycle.n(), std::vector<int>(cycle.roots().size(), 1));
  const auto base = linear_cycle_periods(standard, basis);
  return transport_periods(base, scaling_between(standard, cycle), basis);
}

std::vector<std::vector<CycloScalar>> IvhsMatrices::kernel(const CycloScalar& x) const {
  return left_kernel(a + x * a_check);
}

IvhsMatrices ivhs_matrices(const CyclePair& pair, const DeformationSpace& space, const GriffithsBasis& basis) {
  const int n = basis.n();
  const int k = n / 2;
  const auto p = transported_periods(pair.p, basis);
  const auto q = transported_periods(pair.q, basis);
  IvhsMatrices out;
  out.columns = basis.block(k);
  out.a = Matrix<CycloScalar>(space.tau(), out.columns.size());
  out.a_check = Matrix<CycloScalar>(space.tau(), out.columns.size());
  for (std::size_t a = 0; a < space.tau(); ++a) {
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      const auto r = fermat_reduce(space.monomials[a] * basis[out.columns[c]].beta, k + 1);
      if (!r || r->k != k + 1) continue;
      const auto idx = static_cast<std::size_t>(basis.find(r->beta));
      const Rational f = r->coeff * k;
      out.a(a, c) = f * p.values[idx];
      out.a_check(a, c) = f * q.values[idx];
    }
  }
  return out;
}

long lattice_discriminant(long r, long rr, int m) {
  const long base = 8 * (r * r + rr * rr);
  switch (m) {
    case -1: return base - 2 * r * rr;
    case 0: return base + 4 * r * rr;
    case 1: return base - 8 * r * rr;
    default: throw std::invalid_argument("m must be -1, 0 or 1");
  }
}

}  // namespace hodge
