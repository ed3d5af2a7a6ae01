#include "hodge/geometry.hpp"

#include <stdexcept>

#include "hodge/linalg.hpp"

namespace hodge {

namespace {

void require_even_n(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("n must be an even integer >= 2, got " + std::to_string(n));
}

void require_cubic(int d) {
  if (d != 3) throw std::invalid_argument("linear cycles are implemented for d = 3 only");
}

Polynomial block_form(std::size_t nvars, int e, int root) {
  return Polynomial::variable(nvars, 2 * e) -
         Polynomial::variable(nvars, 2 * e + 1) * CycloScalar::zeta(root);
}

Polynomial x(std::size_t nvars, int i) { return Polynomial::variable(nvars, static_cast<std::size_t>(i)); }

}  // namespace

Polynomial fermat(int n, int d) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  Polynomial f(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    Monomial m(nv);
    m.set(i, d);
    f.add_term(m, CycloScalar(1));
  }
  return f;
}

LinearCycle::LinearCycle(int n, std::vector<int> roots, std::optional<std::pair<int, int>> label)
    : n_(n), roots_(std::move(roots)), label_(label) {
  require_even_n(n);
  if (roots_.size() != static_cast<std::size_t>(n / 2 + 1)) throw std::invalid_argument("one root per block required");
  for (auto& r : roots_) {
    r = ((r % 6) + 6) % 6;
    if (r % 2 == 0) throw std::invalid_argument("block roots must be odd powers of z");
  }
}

std::vector<Polynomial> LinearCycle::linear_forms() const {
  std::vector<Polynomial> out;
  for (std::size_t e = 0; e < roots_.size(); ++e) out.push_back(block_form(nvars(), static_cast<int>(e), roots_[e]));
  return out;
}

std::vector<Polynomial> LinearCycle::complements() const {
  std::vector<Polynomial> out;
  for (std::size_t e = 0; e < roots_.size(); ++e) {
    Polynomial q = Polynomial::constant(nvars(), CycloScalar(1));
    for (int r : {1, 3, 5})
      if (r != roots_[e]) q = q * block_form(nvars(), static_cast<int>(e), r);
    out.push_back(std::move(q));
  }
  return out;
}

HomogeneousIdeal LinearCycle::ideal() const { return HomogeneousIdeal(nvars(), linear_forms()); }

HomogeneousIdeal LinearCycle::full_ideal() const {
  auto gens = linear_forms();
  for (auto& q : complements()) gens.push_back(std::move(q));
  return HomogeneousIdeal(nvars(), std::move(gens));
}

nlohmann::json LinearCycle::to_json() const {
  nlohmann::json j;
  j["kind"] = "linear";
  j["n"] = n_;
  j["roots"] = roots_;
  std::vector<std::string> forms;
  for (const auto& f : linear_forms()) forms.push_back(f.str());
  j["forms"] = forms;
  j["label"] = label_ ? nlohmann::json::array({label_->first, label_->second}) : nlohmann::json(nullptr);
  return j;
}

LinearCycle LinearCycle::from_json(const nlohmann::json& j) {
  std::optional<std::pair<int, int>> label;
  if (j.contains("label") && !j["label"].is_null()) label = std::make_pair(j["label"][0].get<int>(), j["label"][1].get<int>());
  return LinearCycle(j.at("n").get<int>(), j.at("roots").get<std::vector<int>>(), label);
}

int intersection_dimension(const LinearCycle& a, const LinearCycle& b) {
  if (a.n() != b.n()) throw std::invalid_argument("cycles live in different spaces");
  const std::size_t nv = a.nvars();
  const MonomialIndex index(monomials_of_degree(nv, 1));
  SparseEchelon<CycloScalar> ech;
  for (const auto& f : a.linear_forms()) ech.insert(to_row(f, index));
  for (const auto& f : b.linear_forms()) ech.insert(to_row(f, index));
  return static_cast<int>(nv) - static_cast<int>(ech.rank()) - 1;
}

CyclePair sum_two_linear_cycles(int n, int d, int m) {
  require_even_n(n);
  require_cubic(d);
  if (m < -1 || m > n / 2) throw std::invalid_argument("m must satisfy -1 <= m <= n/2");
  const int s = n / 2 + 1;
  std::vector<int> p(s, 1), q(s, 1);
  for (int e = m + 1; e < s; ++e) q[e] = 3;
  return {LinearCycle(n, p), LinearCycle(n, q), m};
}

LinearCycle twisted_linear_cycle(int n, int d, int a1, int a2) {
  require_even_n(n);
  require_cubic(d);
  if (n < 2 || a1 < 0 || a1 > 2 || a2 < 0 || a2 > 2) throw std::invalid_argument("twist labels must lie in 0..2");
  const int s = n / 2 + 1;
  std::vector<int> roots(s, 1);
  roots[s - 2] = 2 * a1 + 1;
  roots[s - 1] = 2 * a2 + 1;
  return LinearCycle(n, roots, std::make_pair(a1, a2));
}

std::vector<LinearCycle> decompose_difference(int n) {
  return {twisted_linear_cycle(n, 3, 0, 0), twisted_linear_cycle(n, 3, 0, 1), twisted_linear_cycle(n, 3, 2, 1)};
}

std::string to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::linear: return "linear";
    case CycleKind::cubic_ruled: return "cubic_ruled";
    case CycleKind::quartic_scroll: return "quartic_scroll";
    case CycleKind::veronese: return "veronese";
  }
  return "?";
}

CycleKind parse_cycle_kind(const std::string& text) {
  if (text == "linear" || text == "L") return CycleKind::linear;
  if (text == "cubic_ruled" || text == "CS") return CycleKind::cubic_ruled;
  if (text == "quartic_scroll" || text == "QS") return CycleKind::quartic_scroll;
  if (text == "veronese" || text == "V") return CycleKind::veronese;
  throw std::invalid_argument("unknown cycle kind '" + text + "'");
}

std::vector<Polynomial> rank_one_minors(const std::array<Polynomial, 6>& f) {
  const auto& [f11, f12, f21, f22, f31, f32] = f;
  return {f11 * f22 - f12 * f21, f11 * f32 - f12 * f31, f21 * f32 - f22 * f31};
}

std::vector<Polynomial> determinantal_quadrics(CycleKind kind, const std::array<Polynomial, 6>& f) {
  const auto& [f11, f12, f21, f22, f31, f32] = f;
  switch (kind) {
    case CycleKind::cubic_ruled: return rank_one_minors(f);
    case CycleKind::quartic_scroll: {
      auto out = rank_one_minors(f);
      out.push_back(f21 * f22 - f11 * f32);
      out.push_back(f21 * f21 - f11 * f31);
      out.push_back(f22 * f22 - f12 * f32);
      return out;
    }
    case CycleKind::veronese:
      return {f11 * f21 - f32 * f32, f11 * f31 - f22 * f22, f21 * f31 - f12 * f12,
              f12 * f22 - f31 * f32, f12 * f32 - f21 * f22, f22 * f32 - f11 * f12};
    case CycleKind::linear: break;
  }
  throw std::invalid_argument("linear cycles have no determinantal quadrics");
}

int slice_count(CycleKind kind, int n) {
  switch (kind) {
    case CycleKind::linear: return n / 2 + 1;
    case CycleKind::cubic_ruled: return n / 2 - 1;
    case CycleKind::quartic_scroll:
    case CycleKind::veronese: return n / 2 - 2;
  }
  return 0;
}

DeterminantalCycle determinantal_ideal(CycleKind kind, int n) {
  require_even_n(n);
  if (n < 4) throw std::invalid_argument("determinantal cycles need n >= 4");
  if (kind == CycleKind::linear) throw std::invalid_argument("linear cycles are not determinantal");
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  std::array<Polynomial, 6> entries;
  for (int i = 0; i < 6; ++i) entries[i] = x(nv, i);
  std::vector<Polynomial> slices;
  const int count = slice_count(kind, n);
  if (n == 4 && count == 1) {
    slices.push_back(x(nv, 1) - x(nv, 2));  // f12 - f21
  } else {
    if (6 + count > n + 2) throw std::invalid_argument("not enough free coordinates for the linear slices");
    for (int i = 0; i < count; ++i) slices.push_back(x(nv, 6 + i));
  }
  return determinantal_ideal(kind, n, std::move(entries), std::move(slices));
}

DeterminantalCycle determinantal_ideal(CycleKind kind, int n, std::array<Polynomial, 6> entries,
                                       std::vector<Polynomial> slices) {
  require_even_n(n);
  if (static_cast<int>(slices.size()) != slice_count(kind, n))
    throw std::invalid_argument("expected " + std::to_string(slice_count(kind, n)) + " linear slices");
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  for (const auto& f : entries)
    if (f.nvars() != nv || f.degree() != 1 || !f.is_homogeneous()) throw std::invalid_argument("matrix entries must be linear forms");
  for (const auto& g : slices)
    if (g.nvars() != nv || g.degree() != 1 || !g.is_homogeneous()) throw std::invalid_argument("slices must be linear forms");
  DeterminantalCycle c;
  c.kind = kind;
  c.n = n;
  c.entries = std::move(entries);
  c.slices = std::move(slices);
  c.generators = c.slices;
  for (auto& q : determinantal_quadrics(kind, c.entries)) c.generators.push_back(std::move(q));
  return c;
}

nlohmann::json DeterminantalCycle::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["n"] = n;
  std::vector<std::string> e, s, g;
  for (const auto& f : entries) e.push_back(f.str());
  for (const auto& f : slices) s.push_back(f.str());
  for (const auto& f : generators) g.push_back(f.str());
  j["entries"] = e;
  j["slices"] = s;
  j["generators"] = g;
  return j;
}

JetPolynomial family_polynomial(int n, int d, const std::vector<Monomial>& monomials, int order) {
  const int tau = static_cast<int>(monomials.size());
  JetPolynomial f = JetPolynomial::from_polynomial(fermat(n, d), tau, order);
  for (int a = 0; a < tau; ++a) {
    const Monomial& m = monomials[a];
    if (m.nvars() != static_cast<std::size_t>(n + 2)) throw std::invalid_argument("monomial ring mismatch");
    if (m.degree() != d) throw std::invalid_argument("family monomial " + m.str() + " has the wrong degree");
    if (d == 3 && !m.is_squarefree()) throw std::invalid_argument("family monomials must be squarefree");
    if (order >= 1) f.add_term(m, -Jet::variable(tau, order, a));
  }
  return f;
}

}  // namespace hodge
