#include "hodge/groebner.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hodge {

namespace {

using Term = std::pair<Monomial, CycloScalar>;

// Monomial order used inside Buchberger. With elim >= 0 the variable x_elim is
// compared first (block order) and carries weight zero in the grading.
struct Order {
  int elim = -1;

  bool greater(const Monomial& a, const Monomial& b) const {
    if (elim >= 0 && a[elim] != b[elim]) return a[elim] > b[elim];
    return degrevlex_greater(a, b);
  }
  int weight(const Monomial& m) const { return m.degree() - (elim >= 0 ? m[elim] : 0); }
};

struct GPoly {
  std::vector<Term> terms;  // descending in the order, nonzero
  const Monomial& lm() const { return terms.front().first; }
  bool zero() const { return terms.empty(); }
};

struct Accumulator {
  explicit Accumulator(const Order& o) : terms([o](const Monomial& a, const Monomial& b) { return o.greater(a, b); }) {}
  std::map<Monomial, CycloScalar, std::function<bool(const Monomial&, const Monomial&)>> terms;

  void add(const Monomial& m, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

GPoly to_gpoly(const Polynomial& p, const Order& order) {
  GPoly g;
  g.terms.assign(p.terms().begin(), p.terms().end());
  if (order.elim >= 0)
    std::sort(g.terms.begin(), g.terms.end(),
              [&](const Term& a, const Term& b) { return order.greater(a.first, b.first); });
  return g;
}

Polynomial to_polynomial(const GPoly& g, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& [m, c] : g.terms) p.add_term(m, c);
  return p;
}

void make_monic(GPoly& g) {
  if (g.zero() || g.terms.front().second.is_one()) return;
  const CycloScalar s = g.terms.front().second.inverse();
  for (auto& t : g.terms) t.second = t.second * s;
}

// Full reduction of p by the basis; tail terms are reduced too.
GPoly reduce(const GPoly& p, const std::vector<GPoly>& basis, const Order& order) {
  Accumulator acc(order);
  for (const auto& [m, c] : p.terms) acc.add(m, c);
  GPoly out;
  while (!acc.terms.empty()) {
    auto it = acc.terms.begin();
    const Monomial m = it->first;
    const CycloScalar c = it->second;
    const GPoly* divisor = nullptr;
    for (const auto& b : basis) {
      if (b.lm().divides(m)) {
        divisor = &b;
        break;
      }
    }
    if (!divisor) {
      out.terms.emplace_back(m, c);
      acc.terms.erase(it);
      continue;
    }
    const Monomial q = m / divisor->lm();
    const CycloScalar f = -c;  // basis elements are monic
    acc.terms.erase(it);
    for (std::size_t k = 1; k < divisor->terms.size(); ++k)
      acc.add(divisor->terms[k].first * q, f * divisor->terms[k].second);
  }
  return out;
}

GPoly spoly(const GPoly& a, const GPoly& b) {
  const Monomial l = lcm(a.lm(), b.lm());
  const Monomial qa = l / a.lm();
  const Monomial qb = l / b.lm();
  GPoly s;
  // both monic: S = qa*a - qb*b; leading terms cancel
  std::vector<Term> ta, tb;
  for (std::size_t k = 1; k < a.terms.size(); ++k) ta.emplace_back(a.terms[k].first * qa, a.terms[k].second);
  for (std::size_t k = 1; k < b.terms.size(); ++k) tb.emplace_back(b.terms[k].first * qb, -b.terms[k].second);
  s.terms = std::move(ta);
  s.terms.insert(s.terms.end(), tb.begin(), tb.end());
  return s;
}

GPoly normalize(const GPoly& g, const Order& order) {
  Accumulator acc(order);
  for (const auto& [m, c] : g.terms) acc.add(m, c);
  GPoly out;
  out.terms.assign(acc.terms.begin(), acc.terms.end());
  return out;
}

std::vector<GPoly> buchberger(std::vector<GPoly> input, const Order& order, int max_degree) {
  struct Pair {
    int degree;
    std::size_t i, j;  // j == npos marks an input generator i
  };
  constexpr std::size_t kInput = static_cast<std::size_t>(-1);

  std::vector<GPoly> basis;
  std::vector<Pair> pending;
  for (std::size_t i = 0; i < input.size(); ++i) {
    if (input[i].zero()) continue;
    pending.push_back({order.weight(input[i].lm()), i, kInput});
  }

  auto add_to_basis = [&](GPoly g) {
    make_monic(g);
    const std::size_t idx = basis.size();
    for (std::size_t k = 0; k < idx; ++k) {
      const Monomial l = lcm(basis[k].lm(), g.lm());
      const int w = order.weight(l);
      if (max_degree >= 0 && w > max_degree) continue;
      if (coprime(basis[k].lm(), g.lm())) continue;
      pending.push_back({w, k, idx});
    }
    basis.push_back(std::move(g));
  };

  while (!pending.empty()) {
    auto lowest = std::min_element(pending.begin(), pending.end(),
                                   [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
    const int deg = lowest->degree;
    if (max_degree >= 0 && deg > max_degree) break;
    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (const auto& p : pending) (p.degree == deg ? batch : rest).push_back(p);
    pending = std::move(rest);

    for (const auto& p : batch) {
      GPoly s;
      if (p.j == kInput) {
        s = input[p.i];
      } else {
        // chain criterion; the companion pairs have strictly lower degree
        const Monomial l = lcm(basis[p.i].lm(), basis[p.j].lm());
        bool redundant = false;
        for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
          if (k == p.i || k == p.j) continue;
          if (!basis[k].lm().divides(l)) continue;
          if (order.weight(lcm(basis[k].lm(), basis[p.i].lm())) < deg &&
              order.weight(lcm(basis[k].lm(), basis[p.j].lm())) < deg)
            redundant = true;
        }
        if (redundant) continue;
        s = normalize(spoly(basis[p.i], basis[p.j]), order);
      }
      GPoly r = reduce(s, basis, order);
      if (!r.zero()) add_to_basis(std::move(r));
    }
  }

  // interreduce to the reduced basis
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool keep = true;
    for (std::size_t k = 0; k < basis.size() && keep; ++k) {
      if (k == i) continue;
      if (basis[k].lm().divides(basis[i].lm()) && (basis[k].lm() != basis[i].lm() || k < i)) keep = false;
    }
    if (keep) minimal.push_back(basis[i]);
  }
  std::vector<GPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    GPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    GPoly r = reduce(tail, others, order);
    GPoly g;
    g.terms.push_back(minimal[i].terms.front());
    g.terms.insert(g.terms.end(), r.terms.begin(), r.terms.end());
    reduced.push_back(std::move(g));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GPoly& a, const GPoly& b) { return order.greater(a.lm(), b.lm()); });
  return reduced;
}

void check_homogeneous(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw std::invalid_argument("generator is not homogeneous: " + g.str());
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators, int max_degree) {
  check_homogeneous(generators);
  if (generators.empty()) return {};
  const Order order;
  std::vector<GPoly> input;
  for (const auto& g : generators) input.push_back(to_gpoly(g, order));
  std::vector<Polynomial> out;
  const std::size_t nvars = generators.front().nvars();
  for (const auto& g : buchberger(std::move(input), order, max_degree)) out.push_back(to_polynomial(g, nvars));
  return out;
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  const Order order;
  std::vector<GPoly> b;
  for (const auto& g : basis) {
    GPoly gp = to_gpoly(g, order);
    make_monic(gp);
    b.push_back(std::move(gp));
  }
  return to_polynomial(reduce(to_gpoly(p, order), b, order), p.nvars());
}

HomogeneousIdeal::HomogeneousIdeal(std::size_t nvars, std::vector<Polynomial> generators)
    : nvars_(nvars), generators_(std::move(generators)) {
  check_homogeneous(generators_);
  std::erase_if(generators_, [](const Polynomial& p) { return p.is_zero(); });
  for (const auto& g : generators_)
    if (g.nvars() != nvars_) throw std::invalid_argument("generator ring mismatch");
}

HomogeneousIdeal HomogeneousIdeal::unit(std::size_t nvars) {
  return HomogeneousIdeal(nvars, {Polynomial::constant(nvars, CycloScalar(1))});
}

const std::vector<Polynomial>& HomogeneousIdeal::groebner_basis(int max_degree) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  const int key = max_degree < 0 ? -1 : max_degree;
  auto it = cache_->bases.find(key);
  if (it == cache_->bases.end()) {
    auto basis = std::make_unique<const std::vector<Polynomial>>(hodge::groebner_basis(generators_, key));
    it = cache_->bases.emplace(key, std::move(basis)).first;
  }
  return *it->second;
}

Polynomial HomogeneousIdeal::normal_form(const Polynomial& p) const {
  if (p.is_zero()) return p;
  return hodge::normal_form(p, groebner_basis(p.degree()));
}

bool HomogeneousIdeal::contains(const Polynomial& p) const {
  if (!p.is_homogeneous()) {
    // split into homogeneous components
    std::map<int, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) {
      auto [it, ins] = parts.try_emplace(m.degree(), Polynomial(p.nvars()));
      it->second.add_term(m, c);
    }
    for (const auto& [d, q] : parts)
      if (!normal_form(q).is_zero()) return false;
    return true;
  }
  return normal_form(p).is_zero();
}

SparseRow<CycloScalar> to_row(const Polynomial& p, const MonomialIndex& index) {
  SparseRow<CycloScalar> row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(static_cast<std::uint32_t>(index.at(m)), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Polynomial from_row(const SparseRow<CycloScalar>& row, const MonomialIndex& index) {
  Polynomial p(index.monomials().empty() ? 0 : index.monomials().front().nvars());
  for (const auto& [c, v] : row) p.add_term(index.monomials()[c], v);
  return p;
}

SparseEchelon<CycloScalar> HomogeneousIdeal::graded_piece(int deg) const {
  const MonomialIndex index(monomials_of_degree(nvars_, deg));
  SparseEchelon<CycloScalar> ech;
  for (const auto& g : generators_) {
    const int e = g.degree();
    if (e > deg) continue;
    for (const auto& m : monomials_of_degree(nvars_, deg - e)) {
      ech.insert(to_row(g.multiply(m), index));
      if (ech.rank() == index.size()) return ech;
    }
  }
  return ech;
}

std::size_t HomogeneousIdeal::graded_piece_dim(int deg) const {
  if (deg < 0) return 0;
  return graded_piece(deg).rank();
}

std::vector<Monomial> HomogeneousIdeal::quotient_monomial_basis(int deg) const {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  const auto& basis = groebner_basis(deg);
  for (const auto& m : monomials_of_degree(nvars_, deg)) {
    bool standard = true;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    }
    if (standard) out.push_back(m);
  }
  return out;
}

HomogeneousIdeal ideal_intersect(const HomogeneousIdeal& i, const HomogeneousIdeal& j, int max_degree) {
  if (i.nvars() != j.nvars()) throw std::invalid_argument("ideal ring mismatch");
  const std::size_t n = i.nvars();
  const std::size_t t = n;  // auxiliary variable index
  const Order order{static_cast<int>(t)};
  const Polynomial tvar = Polynomial::variable(n + 1, t);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, CycloScalar(1)) - tvar;
  std::vector<GPoly> input;
  for (const auto& g : i.generators()) input.push_back(to_gpoly(tvar * g.extend(n + 1), order));
  for (const auto& g : j.generators()) input.push_back(to_gpoly(one_minus_t * g.extend(n + 1), order));
  std::vector<Polynomial> gens;
  for (const auto& g : buchberger(std::move(input), order, max_degree)) {
    if (g.lm()[t] != 0) continue;
    Polynomial p(n);
    for (const auto& [m, c] : g.terms) {
      Monomial r(n);
      for (std::size_t k = 0; k < n; ++k) r.set(k, m[k]);
      p.add_term(r, c);
    }
    gens.push_back(std::move(p));
  }
  return HomogeneousIdeal(n, std::move(gens));
}

std::vector<Polynomial> graded_intersection(const HomogeneousIdeal& i, const HomogeneousIdeal& j, int deg) {
  if (i.nvars() != j.nvars()) throw std::invalid_argument("ideal ring mismatch");
  const MonomialIndex index(monomials_of_degree(i.nvars(), deg));
  auto rows_of = [&](const HomogeneousIdeal& ideal) {
    std::vector<SparseRow<CycloScalar>> rows;
    const auto piece = ideal.graded_piece(deg);
    for (const auto& [lead, row] : piece.rows()) rows.push_back(row);
    return rows;
  };
  std::vector<Polynomial> out;
  for (const auto& row : intersect_spans(rows_of(i), rows_of(j), static_cast<std::uint32_t>(index.size())))
    out.push_back(from_row(row, index));
  return out;
}

HomogeneousIdeal jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < f.nvars(); ++k) gens.push_back(f.derivative(k));
  return HomogeneousIdeal(f.nvars(), std::move(gens));
}

}  // namespace hodge
