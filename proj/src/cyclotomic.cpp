#include "hodge/cyclotomic.hpp"

#include <cctype>
#include <sstream>

namespace hodge {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

std::vector<long> cyclotomic_polynomial(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact integer division.
  std::vector<long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const int dn = static_cast<int>(den.size()) - 1;
    std::vector<long> quot(num.size() - dn, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
      const long c = num[i];  // den is monic
      quot[i - dn] = c;
      for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace detail

template <int D>
const std::vector<Rational>& Cyclotomic<D>::modulus() {
  static const std::vector<Rational> poly = [] {
    std::vector<Rational> out;
    for (long c : detail::cyclotomic_polynomial(kOrder)) out.emplace_back(c);
    return out;
  }();
  return poly;
}

template <int D>
Cyclotomic<D> Cyclotomic<D>::multiply(const Cyclotomic& a, const Cyclotomic& b) {
  if constexpr (D == 3) {
    // z^2 = z - 1
    const Rational& a0 = a.c_[0];
    const Rational& a1 = a.c_[1];
    const Rational& b0 = b.c_[0];
    const Rational& b1 = b.c_[1];
    Cyclotomic r;
    if (sgn(a1) == 0 && sgn(b1) == 0) {
      r.c_[0] = a0 * b0;
      return r;
    }
    Rational hi = a1 * b1;
    r.c_[0] = a0 * b0 - hi;
    r.c_[1] = a0 * b1 + a1 * b0 + hi;
    return r;
  } else {
    std::array<Rational, 2 * kDegree - 1> prod{};
    for (int i = 0; i < kDegree; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < kDegree; ++j) {
        if (sgn(b.c_[j]) == 0) continue;
        prod[i + j] += a.c_[i] * b.c_[j];
      }
    }
    const auto& m = modulus();
    for (int i = 2 * kDegree - 2; i >= kDegree; --i) {
      if (sgn(prod[i]) == 0) continue;
      const Rational c = prod[i];
      for (int j = 0; j <= kDegree; ++j) prod[i - kDegree + j] -= c * m[j];
    }
    Cyclotomic r;
    for (int i = 0; i < kDegree; ++i) r.c_[i] = std::move(prod[i]);
    return r;
  }
}

template <int D>
Cyclotomic<D> Cyclotomic<D>::zeta(long e) {
  e %= kOrder;
  if (e < 0) e += kOrder;
  Cyclotomic z;
  if constexpr (kDegree == 1) {
    z.c_[0] = (e == 0) ? 1 : -1;  // 2d = 2: z = -1
    return z;
  } else {
    z.c_[1] = 1;
    Cyclotomic r(1);
    for (long i = 0; i < e; ++i) r = r * z;
    return r;
  }
}

template <int D>
Cyclotomic<D> Cyclotomic<D>::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in cyclotomic field");
  if constexpr (D == 3) {
    // conj(a + b z) = (a + b) - b z ; norm = a^2 + a b + b^2
    const Rational& a = c_[0];
    const Rational& b = c_[1];
    Rational norm = a * a + a * b + b * b;
    Cyclotomic r;
    r.c_[0] = (a + b) / norm;
    r.c_[1] = -b / norm;
    return r;
  } else {
    // Solve (multiplication-by-this) * x = e_0 over Q.
    std::array<Cyclotomic, kDegree> cols;
    for (int j = 0; j < kDegree; ++j) {
      Cyclotomic e;
      e.c_[j] = 1;
      cols[j] = *this * e;
    }
    std::vector<std::vector<Rational>> m(kDegree, std::vector<Rational>(kDegree + 1));
    for (int i = 0; i < kDegree; ++i) {
      for (int j = 0; j < kDegree; ++j) m[i][j] = cols[j].c_[i];
      m[i][kDegree] = (i == 0) ? 1 : 0;
    }
    for (int col = 0; col < kDegree; ++col) {
      int piv = col;
      while (sgn(m[piv][col]) == 0) ++piv;
      std::swap(m[piv], m[col]);
      const Rational inv = 1 / m[col][col];
      for (auto& x : m[col]) x *= inv;
      for (int i = 0; i < kDegree; ++i) {
        if (i == col || sgn(m[i][col]) == 0) continue;
        const Rational f = m[i][col];
        for (int j = 0; j <= kDegree; ++j) m[i][j] -= f * m[col][j];
      }
    }
    Cyclotomic r;
    for (int i = 0; i < kDegree; ++i) r.c_[i] = m[i][kDegree];
    return r;
  }
}

template <int D>
Cyclotomic<D> Cyclotomic<D>::conj() const {
  if constexpr (D == 3) {
    Cyclotomic r;
    r.c_[0] = c_[0] + c_[1];
    r.c_[1] = -c_[1];
    return r;
  } else {
    Cyclotomic r;
    for (int i = 0; i < kDegree; ++i) {
      if (sgn(c_[i]) == 0) continue;
      r += zeta(-i) * Cyclotomic(c_[i]);
    }
    return r;
  }
}

template <int D>
Cyclotomic<D> Cyclotomic<D>::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

template <int D>
std::string Cyclotomic<D>::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    const Rational& q = c_[i];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

namespace {

template <int D>
class ScalarParser {
 public:
  using K = Cyclotomic<D>;
  explicit ScalarParser(std::string_view s) : s_(s) {}

  K parse() {
    K v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(s_) + "': " + what);
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
  K expr() {
    K v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  K term() {
    K v = unary();
    for (;;) {
      if (eat('*')) v *= unary();
      else if (eat('/')) v /= unary();
      else return v;
    }
  }
  K unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  K power() {
    K base = primary();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      long e = integer();
      return base.pow(neg ? -e : e);
    }
    return base;
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  K primary() {
    skip();
    if (eat('(')) {
      K v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && s_[pos_] == 'z') {
      ++pos_;
      return K::zeta(1);
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected character");
    return K(Rational(std::string(s_.substr(start, pos_ - start))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

template <int D>
Cyclotomic<D> Cyclotomic<D>::parse(std::string_view text) {
  return ScalarParser<D>(text).parse();
}

template <int D>
std::size_t Cyclotomic<D>::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& q : c_) {
    h ^= std::hash<std::string>{}(q.get_str());
    h *= 1099511628211ull;
  }
  return h;
}

template class Cyclotomic<3>;
template class Cyclotomic<2>;

}  // namespace hodge
