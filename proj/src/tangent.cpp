#include "hodge/tangent.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "hodge/linalg.hpp"
#include "hodge/parallel.hpp"

namespace hodge {

nlohmann::json DeformationSpace::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["degree"] = degree;
  std::vector<std::string> mons;
  for (const auto& m : monomials) mons.push_back(m.compact_str());
  j["monomials"] = mons;
  j["dim_S"] = tau();
  return j;
}

HomogeneousIdeal tangent_of_pair(const CyclePair& pair, int d) {
  const auto i = pair.p.full_ideal();
  const auto j = pair.q.full_ideal();
  return HomogeneousIdeal(i.nvars(), graded_intersection(i, j, d));
}

DeformationSpace choose_deformation_space(const CyclePair& pair, int d) {
  DeformationSpace s;
  s.n = pair.p.n();
  s.degree = d;
  s.pair_ideal = tangent_of_pair(pair, d);
  s.monomials = s.pair_ideal.quotient_monomial_basis(d);
  return s;
}

bool rigidity_check(const DeformationSpace& space) {
  if (space.monomials.empty()) return true;
  const std::size_t nv = space.monomials.front().nvars();
  const MonomialIndex index(monomials_of_degree(nv, space.degree));
  auto ech = space.pair_ideal.graded_piece(space.degree);
  const std::size_t before = ech.rank();
  for (const auto& m : space.monomials) ech.insert(to_row(Polynomial::term(m), index));
  return ech.rank() == before + space.monomials.size();
}

mpz_class branch_count(int n, int d) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("n must be even");
  mpz_class out = 1;
  for (int k = 1; k <= n + 1; k += 2) out *= k;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n / 2 + 1));
  return out * power;
}

nlohmann::json CodimReport::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["n"] = n;
  j["d"] = d;
  j["ambient"] = ambient;
  j["codim"] = codim;
  j["agreement"] = agreement;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : samples)
    rows.push_back({{"seed", s.seed}, {"rank", s.rank}, {"codim", s.codim}, {"draws", s.draws}, {"smoothness", s.smoothness}});
  j["samples"] = rows;
  return j;
}

namespace {

constexpr int kCoefficientBound = 20;

class Sampler {
 public:
  Sampler(std::size_t nvars, std::uint64_t seed) : nvars_(nvars), rng_(seed), dist_(-kCoefficientBound, kCoefficientBound) {}

  Polynomial form(int degree) {
    Polynomial p(nvars_);
    for (const auto& m : monomials_of_degree(nvars_, degree)) p.add_term(m, CycloScalar(static_cast<long>(dist_(rng_))));
    return p;
  }

 private:
  std::size_t nvars_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_;
};

// Polynomial in symbolic entries e_0..e_{k-1}.
Polynomial symbol(std::size_t count, std::size_t i) { return Polynomial::variable(count, i); }

Polynomial det3(const std::vector<Polynomial>& e) {
  return e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6]) + e[2] * (e[3] * e[7] - e[4] * e[6]);
}

struct Parameterization {
  std::vector<Polynomial> tangent;  // spanning set of the image of the derivative
  Polynomial value;                  // the sampled hypersurface
};

void add_multiples(std::vector<Polynomial>& out, const Polynomial& p, std::size_t nvars, int degree) {
  if (p.is_zero() || degree < 0) return;
  for (const auto& m : monomials_of_degree(nvars, degree)) out.push_back(p.multiply(m));
}

Parameterization sample(CycleKind kind, int n, int d, Sampler& rng) {
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  Parameterization out;
  out.value = Polynomial(nv);
  const int slices = slice_count(kind, n);
  // sum g_i *_i with linear g_i
  for (int i = 0; i < slices; ++i) {
    Polynomial g = rng.form(1);
    Polynomial h = rng.form(d - 1);
    add_multiples(out.tangent, h, nv, 1);
    add_multiples(out.tangent, g, nv, d - 1);
    out.value += g * h;
  }
  if (kind == CycleKind::linear) return out;

  if (kind == CycleKind::cubic_ruled) {
    // columns 1, 2 linear, column 3 of degree d - 2
    std::vector<Polynomial> entries;
    std::vector<int> degrees;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        const int deg = c < 2 ? 1 : d - 2;
        degrees.push_back(deg);
        entries.push_back(rng.form(deg));
      }
    std::vector<Polynomial> sym;
    for (std::size_t k = 0; k < 9; ++k) sym.push_back(symbol(9, k));
    const Polynomial det = det3(sym);
    for (std::size_t k = 0; k < 9; ++k)
      add_multiples(out.tangent, det.derivative(k).substitute(entries), nv, degrees[k]);
    out.value += det.substitute(entries);
    return out;
  }

  std::array<Polynomial, 6> sym;
  for (std::size_t k = 0; k < 6; ++k) sym[k] = symbol(6, k);
  const auto quadrics = determinantal_quadrics(kind, sym);
  std::vector<Polynomial> f;
  for (int k = 0; k < 6; ++k) f.push_back(rng.form(1));
  std::vector<Polynomial> cof;
  for (std::size_t j = 0; j < quadrics.size(); ++j) cof.push_back(rng.form(d - 2));
  for (std::size_t j = 0; j < quadrics.size(); ++j) {
    const Polynomial q = quadrics[j].substitute(f);
    add_multiples(out.tangent, q, nv, d - 2);
    out.value += q * cof[j];
  }
  for (std::size_t k = 0; k < 6; ++k) {
    Polynomial partial(nv);
    for (std::size_t j = 0; j < quadrics.size(); ++j) partial += quadrics[j].derivative(k).substitute(f) * cof[j];
    add_multiples(out.tangent, partial, nv, 1);
  }
  return out;
}

constexpr std::uint64_t kRankPrimes[] = {2147483647ull, 2147483629ull};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Rank modulo p of integer rows; a lower bound for the rank over Q.
std::size_t modular_rank(const std::vector<Polynomial>& polys, const MonomialIndex& index, std::uint64_t p) {
  const std::size_t ncols = index.size();
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<long> row_of_pivot(ncols, -1);
  for (const auto& poly : polys) {
    std::vector<std::uint64_t> row(ncols, 0);
    for (const auto& [m, c] : poly.terms()) {
      if (!c.is_rational() || c[0].get_den() != 1) throw std::logic_error("sampled polynomial is not integral");
      const long v = c[0].get_num().get_si() % static_cast<long>(p);
      row[index.at(m)] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<long>(p) : v);
    }
    for (std::size_t col = 0; col < ncols; ++col) {
      if (row[col] == 0) continue;
      const long r = row_of_pivot[col];
      if (r < 0) {
        const std::uint64_t inv = invmod(row[col], p);
        for (auto& v : row) v = mulmod(v, inv, p);
        row_of_pivot[col] = static_cast<long>(basis.size());
        basis.push_back(std::move(row));
        break;
      }
      const std::uint64_t factor = p - row[col];
      const auto& b = basis[static_cast<std::size_t>(r)];
      for (std::size_t k = col; k < ncols; ++k)
        if (b[k]) row[k] = (row[k] + mulmod(factor, b[k], p)) % p;
    }
    if (basis.size() == ncols) break;
  }
  return basis.size();
}

}  // namespace

CodimSample random_point_codim_sample(CycleKind kind, int n, int d, std::uint64_t seed, int confirmations) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("n must be even and >= 4");
  if (d < 2) throw std::invalid_argument("d must be >= 2");
  const std::size_t nv = static_cast<std::size_t>(n + 2);
  const MonomialIndex index(monomials_of_degree(nv, d));
  Sampler rng(nv, seed);
  CodimSample out;
  out.seed = seed;
  constexpr int kMaxDraws = 16;
  int accepted = 0;
  bool any_unchecked = false;
  while (accepted < confirmations) {
    if (out.draws >= kMaxDraws) throw std::runtime_error("sampling budget exhausted: no smooth sample found");
    ++out.draws;
    const Parameterization p = sample(kind, n, d, rng);
    const auto smooth = smooth_mod_p(p.value);
    if (smooth.has_value() && !*smooth) continue;
    if (!smooth.has_value()) any_unchecked = true;
    for (auto prime : kRankPrimes)
      out.rank = std::max(out.rank, static_cast<int>(modular_rank(p.tangent, index, prime)));
    ++accepted;
  }
  out.codim = static_cast<int>(index.size()) - out.rank;
  out.smoothness = any_unchecked ? "unchecked" : "smooth";
  return out;
}

CodimReport random_point_codim(CycleKind kind, int n, int d, std::uint64_t base_seed, int batch, int threads) {
  if (batch <= 0) throw std::invalid_argument("batch must be positive");
  CodimReport report;
  report.kind = kind;
  report.n = n;
  report.d = d;
  report.ambient = static_cast<int>(monomials_of_degree(static_cast<std::size_t>(n + 2), d).size());
  report.samples.resize(static_cast<std::size_t>(batch));
  parallel_for(report.samples.size(), threads, [&](std::size_t i) {
    report.samples[i] = random_point_codim_sample(kind, n, d, base_seed + i);
  });
  std::map<int, int> counts;
  for (const auto& s : report.samples) ++counts[s.codim];
  int best = -1;
  for (const auto& [codim, count] : counts)
    if (best < 0 || count > counts[best]) best = codim;
  report.codim = best;
  report.agreement = static_cast<double>(counts[best]) / batch;
  return report;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ull;  // 2^31 - 1, congruent to 1 mod 6

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t zeta_mod() {
  for (std::uint64_t a = 2;; ++a) {
    const std::uint64_t z = pow_mod(a, (kPrime - 1) / 6);
    if (z * z % kPrime != 1 && pow_mod(z, 3) != 1) return z;
  }
}

std::uint64_t reduce_rational(const Rational& q) {
  mpz_class num = q.get_num() % mpz_class(static_cast<unsigned long>(kPrime));
  if (num < 0) num += static_cast<unsigned long>(kPrime);
  mpz_class den = q.get_den() % mpz_class(static_cast<unsigned long>(kPrime));
  const std::uint64_t d = den.get_ui();
  if (d == 0) throw std::domain_error("denominator divisible by the modulus");
  return num.get_ui() * pow_mod(d, kPrime - 2) % kPrime;
}

std::uint64_t reduce_scalar(const CycloScalar& c, std::uint64_t z) {
  return (reduce_rational(c[0]) + reduce_rational(c[1]) * z) % kPrime;
}

}  // namespace

std::optional<bool> smooth_mod_p(const Polynomial& f, std::size_t max_columns) {
  const std::size_t nv = f.nvars();
  const int d = f.degree();
  if (d < 2) return true;
  const int top = static_cast<int>(nv) * (d - 2) + 1;
  const auto cols = monomials_of_degree(nv, top);
  if (cols.size() > max_columns) return std::nullopt;
  const MonomialIndex index(cols);
  const std::uint64_t z = zeta_mod();
  // x mod 2^31 - 1 for x < 2^62
  const auto fold = [](std::uint64_t x) {
    x = (x & kPrime) + (x >> 31);
    x = (x & kPrime) + (x >> 31);
    return x >= kPrime ? x - kPrime : x;
  };
  std::vector<std::vector<std::uint64_t>> basis;  // echelon rows, leading entry 1
  std::vector<long> row_of_pivot(cols.size(), -1);
  std::vector<std::uint32_t> nonzero;
  for (std::size_t i = 0; i < nv; ++i) {
    const Polynomial g = f.derivative(i);
    std::vector<std::pair<Monomial, std::uint64_t>> gterms;
    for (const auto& [mm, c] : g.terms()) gterms.emplace_back(mm, reduce_scalar(c, z));
    for (const auto& m : monomials_of_degree(nv, top - (d - 1))) {
      std::vector<std::uint64_t> row(cols.size(), 0);
      for (const auto& [mm, c] : gterms) row[index.at(mm * m)] = c;
      for (std::size_t col = 0; col < row.size(); ++col) {
        if (row[col] == 0) continue;
        const long r = row_of_pivot[col];
        if (r < 0) {
          const std::uint64_t inv = pow_mod(row[col], kPrime - 2);
          for (auto& v : row) v = fold(v * inv);
          row_of_pivot[col] = static_cast<long>(basis.size());
          basis.push_back(std::move(row));
          break;
        }
        const std::uint64_t factor = kPrime - row[col];
        const auto& b = basis[static_cast<std::size_t>(r)];
        for (std::size_t k = col; k < row.size(); ++k)
          if (b[k]) row[k] = fold(row[k] + factor * b[k]);
      }
      if (basis.size() == cols.size()) return true;
    }
  }
  return basis.size() == cols.size();
}

}  // namespace hodge
