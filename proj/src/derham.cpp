#include "hodge/derham.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "hodge/geometry.hpp"
#include "hodge/parallel.hpp"

namespace hodge {

std::string GriffithsForm::str() const {
  std::ostringstream os;
  os << "w[";
  bool first = true;
  for (int i : subset()) {
    if (!first) os << ",";
    first = false;
    os << i;
  }
  os << "]/k=" << k;
  return os.str();
}

int min_pole_order(int n, int d) {
  if (d != 3) throw std::invalid_argument("the Griffiths basis is implemented for cubics only");
  return (n + 2 + 2) / 3;
}

int max_pole_order(int n, int d) {
  if (d != 3) throw std::invalid_argument("the Griffiths basis is implemented for cubics only");
  return 2 * (n + 2) / 3;
}

std::vector<GriffithsForm> griffiths_basis(int n, int d) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("n must be even");
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  std::vector<GriffithsForm> out;
  for (int k = min_pole_order(n, d); k <= max_pole_order(n, d); ++k) {
    const int size = 3 * k - n - 2;
    auto mons = squarefree_monomials(nv, size);
    // lexicographic on the ascending index lists
    std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return a.support() < b.support(); });
    for (auto& m : mons) out.push_back({m, k});
  }
  return out;
}

std::vector<int> hodge_numbers(int n, int d) {
  std::vector<int> h(static_cast<std::size_t>(n + 1), 0);
  for (const auto& f : griffiths_basis(n, d)) ++h[static_cast<std::size_t>(f.k - 1)];
  ++h[static_cast<std::size_t>(n / 2)];
  return h;
}

GriffithsBasis::GriffithsBasis(int n) : n_(n), forms_(griffiths_basis(n, 3)) {
  for (std::size_t i = 0; i < forms_.size(); ++i) index_.emplace(forms_[i].beta, i);
}

long GriffithsBasis::find(const Monomial& beta) const {
  auto it = index_.find(beta);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::vector<std::size_t> GriffithsBasis::block(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < forms_.size(); ++i)
    if (forms_[i].k == k) out.push_back(i);
  return out;
}

std::optional<FermatReduction> fermat_reduce(const Monomial& gamma, int k) {
  FermatReduction r{Rational(1), gamma, k};
  for (std::size_t i = 0; i < gamma.nvars(); ++i) {
    int e = r.beta[i];
    while (e >= 2) {
      if (e == 2) return std::nullopt;
      if (r.k <= 1) throw std::logic_error("pole order underflow in reduction");
      r.coeff *= Rational(e - 2, 3 * (r.k - 1));
      e -= 3;
      --r.k;
    }
    r.beta.set(i, e);
  }
  return r;
}

bool CohomologyVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Jet& j) { return j.is_zero(); });
}

CohomologyVector& CohomologyVector::operator+=(const CohomologyVector& o) {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("cohomology vector size mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

namespace {

struct PartialData {
  Jet unit_inverse;           // u_i^{-1}
  JetPolynomial correction;   // u_i^{-1} r_i
};

std::vector<PartialData> split_partials(const JetPolynomial& family) {
  std::vector<PartialData> out;
  const std::size_t nv = family.nvars();
  for (std::size_t i = 0; i < nv; ++i) {
    const JetPolynomial partial = family.derivative(i);
    Monomial sq(nv);
    sq.set(i, 2);
    const Jet u = partial.coefficient(sq);
    if (u.constant_term().is_zero())
      throw std::domain_error("family is not smooth at t = 0: x_" + std::to_string(i) + "^2 missing from its partial");
    PartialData d{jet_invert(u), JetPolynomial(nv, family.tau(), family.order())};
    for (const auto& [m, c] : partial.terms())
      if (m != sq) d.correction.add_term(m, c * d.unit_inverse);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

CohomologyVector griffiths_dwork_reduce(const JetPolynomial& numerator, int k, const JetPolynomial& family,
                                        const GriffithsBasis& basis) {
  const int n = basis.n();
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  if (family.nvars() != nv || numerator.nvars() != nv) throw std::invalid_argument("ring mismatch in reduction");
  const int tau = family.tau();
  const int order = family.order();
  CohomologyVector out;
  out.coords.assign(basis.size(), Jet(tau, order));
  for (const auto& [m, c] : numerator.terms())
    if (m.degree() != 3 * k - n - 2)
      throw std::invalid_argument("numerator degree " + std::to_string(m.degree()) + " does not match pole order " +
                                  std::to_string(k));
  const auto partials = split_partials(family);

  JetPolynomial current = numerator;
  while (!current.is_zero()) {
    std::vector<JetPolynomial> a(nv, JetPolynomial(nv, tau, order));
    JetPolynomial::Terms work = current.terms();
    while (!work.empty()) {
      auto it = work.begin();
      const Monomial m = it->first;
      const Jet c = std::move(it->second);
      work.erase(it);
      std::size_t i = 0;
      while (i < nv && m[i] < 2) ++i;
      if (i == nv) {
        const long idx = basis.find(m);
        if (idx < 0 || basis[static_cast<std::size_t>(idx)].k != k)
          throw std::logic_error("reduced monomial " + m.str() + " is not a basis element at pole " + std::to_string(k));
        out.coords[static_cast<std::size_t>(idx)] += c;
        continue;
      }
      Monomial q = m;
      q.set(i, m[i] - 2);
      // x_i^2 = u^{-1} d_i f - u^{-1} r_i
      a[i].add_term(q, c * partials[i].unit_inverse);
      for (const auto& [rm, rc] : partials[i].correction.terms()) {
        Jet v = -(c * rc);
        if (v.is_zero()) continue;
        const Monomial target = rm * q;
        auto [wit, inserted] = work.try_emplace(target, v);
        if (!inserted) {
          wit->second += v;
          if (wit->second.is_zero()) work.erase(wit);
        }
      }
    }
    bool any = false;
    JetPolynomial next(nv, tau, order);
    for (std::size_t i = 0; i < nv; ++i) {
      if (a[i].is_zero()) continue;
      any = true;
      next += a[i].derivative(i);
    }
    if (!any) break;
    if (k <= 1) throw std::logic_error("pole order underflow in reduction");
    const CycloScalar scale = CycloScalar(Rational(1, k - 1));
    JetPolynomial scaled(nv, tau, order);
    for (const auto& [m, c] : next.terms()) scaled.add_term(m, c * scale);
    current = std::move(scaled);
    --k;
  }
  return out;
}

namespace {

struct SparseJetMatrix {
  // rows[i] = (column, entry)
  std::vector<std::vector<std::pair<std::size_t, const Jet*>>> rows;
};

SparseJetMatrix sparse_view(const Matrix<Jet>& m) {
  SparseJetMatrix s;
  s.rows.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) s.rows[i].emplace_back(j, &m(i, j));
  return s;
}

Matrix<Jet> multiply(const Matrix<Jet>& a, const Matrix<Jet>& b, int tau, int order) {
  Matrix<Jet> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = Jet(tau, order);
  const auto sa = sparse_view(a);
  const auto sb = sparse_view(b);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [k, x] : sa.rows[i])
      for (const auto& [j, y] : sb.rows[k]) out(i, j) += (*x) * (*y);
  return out;
}

}  // namespace

bool ConnectionMatrix::transversal(const GriffithsBasis& basis) const {
  for (const auto& m : matrices)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && basis[j].k > basis[i].k + 1) return false;
  return true;
}

bool ConnectionMatrix::flat() const {
  if (order < 1) return true;
  for (int a = 0; a < tau; ++a) {
    for (int b = a + 1; b < tau; ++b) {
      const auto mbma = multiply(matrices[b], matrices[a], tau, order);
      const auto mamb = multiply(matrices[a], matrices[b], tau, order);
      for (std::size_t i = 0; i < mbma.rows(); ++i) {
        for (std::size_t j = 0; j < mbma.cols(); ++j) {
          Jet c = matrices[b](i, j).derivative(a) - matrices[a](i, j).derivative(b) + mbma(i, j) - mamb(i, j);
          if (!c.truncate(order - 1).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

ConnectionMatrix gauss_manin(int n, const std::vector<Monomial>& monomials, int order, const GriffithsBasis& basis,
                             int threads) {
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  const int tau = static_cast<int>(monomials.size());
  const JetPolynomial family = family_polynomial(n, 3, monomials, order);
  ConnectionMatrix cm;
  cm.n = n;
  cm.tau = tau;
  cm.order = order;
  cm.matrices.resize(static_cast<std::size_t>(tau));
  for (auto& m : cm.matrices) m = Matrix<Jet>(basis.size(), basis.size());
  const std::size_t jobs = static_cast<std::size_t>(tau) * basis.size();
  parallel_for(jobs, threads, [&](std::size_t job) {
    const std::size_t a = job / basis.size();
    const std::size_t beta = job % basis.size();
    const auto& form = basis[beta];
    JetPolynomial numerator(nv, tau, order);
    numerator.add_term(form.beta * monomials[a], Jet::constant(tau, order, CycloScalar(form.k)));
    const auto v = griffiths_dwork_reduce(numerator, form.k + 1, family, basis);
    for (std::size_t g = 0; g < basis.size(); ++g) cm.matrices[a](beta, g) = v.coords[g];
  });
  return cm;
}

std::vector<std::pair<std::size_t, Jet>> taylor_coordinates(const GriffithsForm& form, const std::vector<Monomial>& monomials,
                                                            int order, const GriffithsBasis& basis,
                                                            const std::vector<bool>& keep) {
  const int tau = static_cast<int>(monomials.size());
  std::unordered_map<std::size_t, std::vector<Jet::Term>> acc;
  std::vector<int> chosen;
  // factorials up to k + order
  std::vector<Rational> fact(static_cast<std::size_t>(form.k + order + 2), Rational(1));
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<long>(i);

  std::function<void(int, const Monomial&, Rational)> walk = [&](int start, const Monomial& gamma, Rational inv_afact) {
    const int len = static_cast<int>(chosen.size());
    const int pole = form.k + len;
    if (auto r = fermat_reduce(gamma, pole)) {
      const long idx = basis.find(r->beta);
      if (idx >= 0 && keep[static_cast<std::size_t>(idx)]) {
        const Rational coef = fact[static_cast<std::size_t>(pole - 1)] / fact[static_cast<std::size_t>(form.k - 1)] *
                              inv_afact * r->coeff;
        if (sgn(coef) != 0) acc[static_cast<std::size_t>(idx)].emplace_back(JetKey::from_vars(chosen), CycloScalar(coef));
      }
    }
    if (len == order) return;
    for (int a = start; a < tau; ++a) {
      // multiplicity of a after appending
      int mult = 1;
      for (int v : chosen)
        if (v == a) ++mult;
      chosen.push_back(a);
      walk(a, gamma * monomials[a], inv_afact / mult);
      chosen.pop_back();
    }
  };
  walk(0, form.beta, Rational(1));
  std::vector<std::pair<std::size_t, Jet>> out;
  for (auto& [idx, terms] : acc) out.emplace_back(idx, Jet::from_terms(tau, order, std::move(terms)));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace hodge
