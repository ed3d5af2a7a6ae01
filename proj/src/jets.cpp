#include "hodge/jets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace hodge {

JetKey JetKey::variable(int a) {
  if (a < 0 || a >= kMaxArity) throw std::out_of_range("jet variable index");
  return JetKey(static_cast<std::uint64_t>(a + 1));
}

JetKey JetKey::from_vars(std::vector<int> vars) {
  if (vars.size() > static_cast<std::size_t>(kMaxDegree)) throw std::out_of_range("jet monomial degree");
  std::sort(vars.begin(), vars.end());
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 0 || vars[i] >= kMaxArity) throw std::out_of_range("jet variable index");
    bits |= static_cast<std::uint64_t>(vars[i] + 1) << (8 * i);
  }
  return JetKey(bits);
}

int JetKey::degree() const { return (std::bit_width(bits_) + 7) / 8; }

std::vector<int> JetKey::vars() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b >>= 8) out.push_back(static_cast<int>(b & 0xff) - 1);
  return out;
}

int JetKey::exponent(int a) const {
  int e = 0;
  for (std::uint64_t b = bits_; b != 0; b >>= 8)
    if (static_cast<int>(b & 0xff) == a + 1) ++e;
  return e;
}

JetKey operator*(JetKey a, JetKey b) {
  if (a.bits_ == 0) return b;
  if (b.bits_ == 0) return a;
  std::uint64_t out = 0;
  int shift = 0;
  std::uint64_t x = a.bits_, y = b.bits_;
  while (x != 0 || y != 0) {
    std::uint64_t v;
    if (y == 0 || (x != 0 && (x & 0xff) <= (y & 0xff))) {
      v = x & 0xff;
      x >>= 8;
    } else {
      v = y & 0xff;
      y >>= 8;
    }
    if (shift >= 64) throw std::out_of_range("jet monomial degree");
    out |= v << shift;
    shift += 8;
  }
  return JetKey(out);
}

JetKey JetKey::without(int a) const {
  auto v = vars();
  auto it = std::find(v.begin(), v.end(), a);
  if (it == v.end()) throw std::invalid_argument("variable not present in jet monomial");
  v.erase(it);
  return from_vars(std::move(v));
}

std::string JetKey::str() const {
  if (bits_ == 0) return "1";
  std::ostringstream os;
  const auto v = vars();
  bool first = true;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << "t" << v[i] + 1;
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Jet::Jet(int tau, int order) : tau_(tau), order_(order) {
  if (tau < 0 || tau > JetKey::kMaxArity) throw std::out_of_range("jet arity");
  if (order < 0 || order > JetKey::kMaxDegree) throw std::out_of_range("jet order");
}

Jet Jet::constant(int tau, int order, const CycloScalar& c) { return monomial(tau, order, JetKey(), c); }

Jet Jet::variable(int tau, int order, int a) {
  if (a < 0 || a >= tau) throw std::out_of_range("jet variable index");
  return monomial(tau, order, JetKey::variable(a), CycloScalar(1));
}

Jet Jet::monomial(int tau, int order, JetKey key, const CycloScalar& c) {
  Jet j(tau, order);
  if (!c.is_zero() && key.degree() <= order) j.terms_.emplace_back(key, c);
  return j;
}

Jet Jet::from_terms(int tau, int order, std::vector<Term> terms) {
  Jet j(tau, order);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (t.first.degree() > order) continue;
    if (!j.terms_.empty() && j.terms_.back().first == t.first) {
      j.terms_.back().second += t.second;
    } else {
      j.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(j.terms_, [](const Term& t) { return t.second.is_zero(); });
  return j;
}

void Jet::check_compatible(const Jet& o) const {
  if (tau_ != o.tau_ || order_ != o.order_)
    throw std::invalid_argument("jet arity/order mismatch (" + std::to_string(tau_) + "," +
                                std::to_string(order_) + ") vs (" + std::to_string(o.tau_) + "," +
                                std::to_string(o.order_) + ")");
}

CycloScalar Jet::coefficient(JetKey key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, JetKey k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return it->second;
  return CycloScalar();
}

int Jet::valuation() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

Jet Jet::component(int j) const {
  Jet out(tau_, order_);
  for (const auto& t : terms_)
    if (t.first.degree() == j) out.terms_.push_back(t);
  return out;
}

namespace {

std::vector<Jet::Term> merge(const std::vector<Jet::Term>& a, const std::vector<Jet::Term>& b, bool subtract) {
  std::vector<Jet::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      CycloScalar v = subtract ? i->second - j->second : i->second + j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(o);
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Jet& Jet::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second = t.second * c;
  }
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  Jet out(a.tau_, a.order_);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  const int n = a.order_;
  if (b.terms_.size() == 1 && b.terms_.front().first.degree() == 0) return a * b.terms_.front().second;
  if (a.terms_.size() == 1 && a.terms_.front().first.degree() == 0) return b * a.terms_.front().second;
  std::unordered_map<std::uint64_t, std::pair<JetKey, CycloScalar>> acc;
  for (const auto& [ka, ca] : a.terms_) {
    const int da = ka.degree();
    if (da > n) break;
    for (const auto& [kb, cb] : b.terms_) {
      if (da + kb.degree() > n) break;
      const JetKey k = ka * kb;
      auto [it, inserted] = acc.try_emplace(k.raw(), k, ca * cb);
      if (!inserted) it->second.second += ca * cb;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [raw, t] : acc)
    if (!t.second.is_zero()) out.terms_.push_back(std::move(t));
  std::sort(out.terms_.begin(), out.terms_.end(), [](const Jet::Term& x, const Jet::Term& y) { return x.first < y.first; });
  return out;
}

Jet Jet::truncate(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise jet order");
  Jet out(tau_, order);
  for (const auto& t : terms_)
    if (t.first.degree() <= order) out.terms_.push_back(t);
  return out;
}

Jet Jet::derivative(int a) const {
  std::vector<Term> terms;
  for (const auto& [k, c] : terms_) {
    const int e = k.exponent(a);
    if (e == 0) continue;
    terms.emplace_back(k.without(a), c * CycloScalar(e));
  }
  return from_terms(tau_, order_, std::move(terms));
}

Jet Jet::substitute(const std::vector<Jet>& images) const {
  if (images.size() != static_cast<std::size_t>(tau_)) throw std::invalid_argument("jet substitution arity");
  const int tau = images.empty() ? 0 : images.front().tau();
  const int order = images.empty() ? order_ : images.front().order();
  Jet out(tau, order);
  std::map<std::uint64_t, Jet> memo;
  memo.emplace(0, Jet::constant(tau, order, CycloScalar(1)));
  std::function<const Jet&(JetKey)> power = [&](JetKey k) -> const Jet& {
    auto it = memo.find(k.raw());
    if (it != memo.end()) return it->second;
    const auto v = k.vars();
    const Jet& head = power(k.without(v.back()));
    Jet value = head * images[v.back()];
    return memo.emplace(k.raw(), std::move(value)).first->second;
  };
  for (const auto& [k, c] : terms_) out += power(k) * c;
  return out;
}

std::string Jet::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = k.degree() == 0;
    if (c.is_rational()) {
      if (unit) {
        os << c.str();
      } else if (c.is_one()) {
        os << k.str();
      } else {
        os << c.str() << "*" << k.str();
      }
    } else {
      os << "(" << c.str() << ")";
      if (!unit) os << "*" << k.str();
    }
  }
  return os.str();
}

Jet jet_invert(const Jet& a) {
  const CycloScalar c0 = a.constant_term();
  if (c0.is_zero()) throw NonUnit("jet with zero constant term is not invertible");
  const CycloScalar c0inv = c0.inverse();
  // a = c0 (1 - u) with u in m; a^{-1} = c0^{-1} (1 + u + ... + u^N)
  Jet u = Jet::constant(a.tau(), a.order(), CycloScalar(1)) - a * c0inv;
  Jet sum = Jet::constant(a.tau(), a.order(), CycloScalar(1));
  Jet power = sum;
  for (int k = 1; k <= a.order(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * c0inv;
}

// ---------------------------------------------------------------------------

JetPolynomial JetPolynomial::from_polynomial(const Polynomial& p, int tau, int order) {
  JetPolynomial out(p.nvars(), tau, order);
  for (const auto& [m, c] : p.terms()) out.add_term(m, Jet::constant(tau, order, c));
  return out;
}

void JetPolynomial::add_term(const Monomial& m, const Jet& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Jet JetPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Jet(tau_, order_) : it->second;
}

Polynomial JetPolynomial::constant_part() const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_) p.add_term(m, c.constant_term());
  return p;
}

JetPolynomial JetPolynomial::derivative(std::size_t i) const {
  JetPolynomial out(nvars_, tau_, order_);
  for (const auto& [m, c] : terms_) {
    const int e = m[i];
    if (e == 0) continue;
    Monomial d = m;
    d.set(i, e - 1);
    out.add_term(d, c * CycloScalar(e));
  }
  return out;
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

JetPolynomial JetPolynomial::multiply(const Monomial& m, const Jet& c) const {
  JetPolynomial out(nvars_, tau_, order_);
  for (const auto& [mm, cc] : terms_) out.add_term(mm * m, cc * c);
  return out;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  JetPolynomial out(a.nvars_, a.tau_, a.order_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string JetPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.degree() > 0) os << "*" << m.str();
  }
  return os.str();
}

}  // namespace hodge
