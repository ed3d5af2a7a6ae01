#include "hodge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hodge {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables for Monomial");
}

Monomial::Monomial(std::size_t nvars, std::initializer_list<int> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw std::invalid_argument("exponent count mismatch");
  std::size_t i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(const std::vector<int>& exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(i, exponents[i]);
  return m;
}

Monomial Monomial::product_of(std::size_t nvars, std::initializer_list<int> vars) {
  return product_of(nvars, std::vector<int>(vars));
}

Monomial Monomial::product_of(std::size_t nvars, const std::vector<int>& vars) {
  Monomial m(nvars);
  for (int v : vars) {
    if (v < 0 || static_cast<std::size_t>(v) >= nvars) throw std::out_of_range("variable index");
    m.set(v, m[v] + 1);
  }
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= nvars_) throw std::out_of_range("monomial variable index");
  if (e < 0 || e > 255) throw std::out_of_range("monomial exponent");
  degree_ = static_cast<std::uint8_t>(degree_ - exp_[i] + e);
  exp_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::is_squarefree() const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > 1) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exp_[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("monomial ring mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    const int e = a.exp_[i] + b.exp_[i];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint8_t>(a.degree_ + b.degree_);
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    if (b.exp_[i] > a.exp_[i]) throw std::invalid_argument("monomial does not divide");
    r.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
  }
  r.degree_ = static_cast<std::uint8_t>(a.degree_ - b.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  int deg = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    deg += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint8_t>(deg);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars_; ++i)
    if (a.exp_[i] > 0 && b.exp_[i] > 0) return false;
  return true;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (exp_[i] > 1) os << "^" << int(exp_[i]);
  }
  return first ? "1" : os.str();
}

std::string Monomial::compact_str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < nvars_; ++i) {
    for (int k = 0; k < exp_[i]; ++k) os << "x" << i;
  }
  const auto s = os.str();
  return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
  std::size_t h = nvars_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 131 + exp_[i];
  return h;
}

bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

void enumerate(std::size_t nvars, int degree, int max_exp, std::vector<Monomial>& out) {
  Monomial m(nvars);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var + 1 == nvars) {
      if (left <= max_exp) {
        m.set(var, left);
        out.push_back(m);
        m.set(var, 0);
      }
      return;
    }
    for (int e = std::min(left, max_exp); e >= 0; --e) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(m);
    return;
  }
  rec(0, degree);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  enumerate(nvars, degree, degree, out);
  std::sort(out.begin(), out.end(), DegRevLexGreater{});
  return out;
}

std::vector<Monomial> squarefree_monomials(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || static_cast<std::size_t>(degree) > nvars) return out;
  enumerate(nvars, degree, 1, out);
  std::sort(out.begin(), out.end(), DegRevLexGreater{});
  return out;
}

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

long MonomialIndex::find(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("monomial not indexed: " + m.str());
  return it->second;
}

// ---------------------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const CycloScalar& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  return term(Monomial::product_of(nvars, {static_cast<int>(i)}));
}

Polynomial Polynomial::term(const Monomial& m, const CycloScalar& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const CycloScalar& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

CycloScalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycloScalar() : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Polynomial::add_term(const Monomial& m, const CycloScalar& c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial ring mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = v * c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial ring mismatch");
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::multiply(const Monomial& m, const CycloScalar& c) const {
  Polynomial r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, cc * c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[i];
    if (e == 0) continue;
    Monomial d = m;
    d.set(i, e - 1);
    r.add_term(d, c * CycloScalar(e));
  }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial r = constant(nvars_, CycloScalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution arity mismatch");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t = t * images[i];
    r += t;
  }
  return r;
}

Polynomial Polynomial::extend(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink polynomial ring");
  Polynomial r(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial e(nvars);
    for (std::size_t i = 0; i < nvars_; ++i) e.set(i, m[i]);
    r.add_term(e, c);
  }
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool unit_monomial = m.degree() == 0;
    if (c.is_rational()) {
      const Rational& q = c[0];
      const bool neg = sgn(q) < 0;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      const Rational mag = abs(q);
      if (unit_monomial) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << m.str();
      }
    } else {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (!unit_monomial) os << "*" << m.str();
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }
  int max_index() const { return max_index_; }

 private:
  static constexpr std::size_t kWide = Monomial::kMaxVars;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "' at " +
                                std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Polynomial expr() {
    Polynomial v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Polynomial term() {
    Polynomial v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        Polynomial d = unary();
        if (d.degree() > 0 || d.is_zero()) fail("division by a non-constant");
        v *= d.leading_coefficient().inverse();
      } else {
        return v;
      }
    }
  }
  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Polynomial power() {
    Polynomial base = primary();
    if (eat('^')) return base.pow(static_cast<int>(integer()));
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  Polynomial variable(long index) {
    if (index < 0 || static_cast<std::size_t>(index) >= kWide) fail("variable index out of range");
    max_index_ = std::max<int>(max_index_, static_cast<int>(index));
    return Polynomial::variable(kWide, static_cast<std::size_t>(index));
  }
  Polynomial primary() {
    skip();
    if (eat('(')) {
      Polynomial v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == 'z') {
      ++pos_;
      return Polynomial::constant(kWide, CycloScalar::zeta(1));
    }
    if (c == 'x') {
      ++pos_;
      if (eat('(')) {
        long idx = integer();
        if (!eat(')')) fail("missing ')' after x(");
        return variable(idx - 1);
      }
      if (eat('_')) {
        if (eat('{')) {
          long idx = integer();
          if (!eat('}')) fail("missing '}'");
          return variable(idx);
        }
      }
      return variable(integer());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Polynomial::constant(kWide, CycloScalar(Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int max_index_ = -1;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
  PolyParser parser(text);
  const Polynomial wide = parser.parse();
  const std::size_t target = nvars == 0 ? static_cast<std::size_t>(parser.max_index() + 1) : nvars;
  if (parser.max_index() >= static_cast<int>(target))
    throw std::invalid_argument("polynomial uses variables beyond the ring: " + std::string(text));
  Polynomial r(target);
  for (const auto& [m, c] : wide.terms()) {
    Monomial t(target);
    for (std::size_t i = 0; i < target; ++i) t.set(i, m[i]);
    r.add_term(t, c);
  }
  return r;
}

}  // namespace hodge
