#include "hodge/cache.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hodge {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t monomial_set_hash(const std::vector<Monomial>& monomials) {
  std::string text;
  for (const auto& m : monomials) text += m.str() + ";";
  return fnv1a(text);
}

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

}  // namespace

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << kind << "-n" << n << "-d" << d << "-N" << order << "-" << hex(monomials);
  if (!extra.empty()) os << "-" << hex(fnv1a(extra));
  os << "-v" << kCacheSchema << ".json";
  return os.str();
}

nlohmann::json CacheKey::to_json() const {
  return {{"kind", kind}, {"n", n},     {"d", d}, {"monomials", hex(monomials)}, {"order", order},
          {"extra", extra}, {"schema", kCacheSchema}};
}

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

std::optional<CacheStore> CacheStore::from_env() {
  const char* dir = std::getenv(kCacheEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return CacheStore(dir);
}

std::optional<nlohmann::json> CacheStore::load(const CacheKey& key) const {
  const fs::path path = dir_ / key.file_name();
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    const auto payload = doc.at("payload");
    if (doc.at("key") != key.to_json() || doc.at("checksum").get<std::string>() != hex(fnv1a(payload.dump())))
      throw std::runtime_error("checksum mismatch");
    return payload;
  } catch (const std::exception&) {
    in.close();
    std::error_code ec;
    fs::remove(path, ec);
    return std::nullopt;
  }
}

bool CacheStore::store(const CacheKey& key, const nlohmann::json& payload) const {
  static std::atomic<unsigned> counter{0};
  const fs::path path = dir_ / key.file_name();
  const fs::path lock = path.string() + ".lock";
  const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) return false;
  ::close(fd);
  bool ok = false;
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    const nlohmann::json doc{{"key", key.to_json()}, {"checksum", hex(fnv1a(payload.dump()))}, {"payload", payload}};
    out << doc.dump();
    ok = static_cast<bool>(out);
  }
  std::error_code ec;
  if (ok) fs::rename(tmp, path, ec);
  if (!ok || ec) fs::remove(tmp, ec);
  fs::remove(lock, ec);
  return ok;
}

namespace {

nlohmann::json jet_to_json(const Jet& j) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : j.terms()) terms.push_back({key.vars(), c.str()});
  return terms;
}

Jet jet_from_json(const nlohmann::json& j, int tau, int order) {
  std::vector<Jet::Term> terms;
  for (const auto& t : j) {
    auto vars = t.at(0).get<std::vector<int>>();
    for (int v : vars)
      if (v < 0 || v >= tau) throw std::runtime_error("jet variable out of range");
    terms.emplace_back(JetKey::from_vars(std::move(vars)), CycloScalar::parse(t.at(1).get<std::string>()));
  }
  return Jet::from_terms(tau, order, std::move(terms));
}

}  // namespace

nlohmann::json connection_to_json(const ConnectionMatrix& cm) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t a = 0; a < cm.matrices.size(); ++a) {
    const auto& m = cm.matrices[a];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) entries.push_back({a, i, j, jet_to_json(m(i, j))});
  }
  return {{"n", cm.n}, {"tau", cm.tau}, {"order", cm.order}, {"entries", entries}};
}

ConnectionMatrix connection_from_json(const nlohmann::json& j, const GriffithsBasis& basis) {
  ConnectionMatrix cm;
  try {
    cm.n = j.at("n").get<int>();
    cm.tau = j.at("tau").get<int>();
    cm.order = j.at("order").get<int>();
    if (cm.n != basis.n() || cm.tau < 0 || cm.order < 0) throw std::runtime_error("connection header mismatch");
    const std::size_t size = basis.size();
    cm.matrices.assign(static_cast<std::size_t>(cm.tau), Matrix<Jet>(size, size));
    for (auto& m : cm.matrices)
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) m(i, k) = Jet(cm.tau, cm.order);
    for (const auto& e : j.at("entries")) {
      const auto a = e.at(0).get<std::size_t>();
      const auto r = e.at(1).get<std::size_t>();
      const auto c = e.at(2).get<std::size_t>();
      if (a >= cm.matrices.size() || r >= size || c >= size) throw std::runtime_error("connection entry out of range");
      cm.matrices[a](r, c) = jet_from_json(e.at(3), cm.tau, cm.order);
    }
  } catch (const nlohmann::json::exception& ex) {
    throw std::runtime_error(std::string("malformed connection payload: ") + ex.what());
  }
  if (!cm.transversal(basis)) throw std::runtime_error("cached connection violates transversality");
  return cm;
}

PeriodVector cached_periods(const CacheStore* store, const LinearCycle& cycle, const GriffithsBasis& basis) {
  CacheKey key{"periods", cycle.n(), 3, 0, 0, cycle.to_json().dump()};
  if (store) {
    if (auto payload = store->load(key)) {
      try {
        auto p = PeriodVector::from_json(*payload, basis);
        if (!p.is_zero()) return p;
      } catch (const std::exception&) {
      }
    }
  }
  auto p = linear_cycle_periods(cycle, basis);
  if (store) store->store(key, p.to_json(basis));
  return p;
}

ConnectionMatrix cached_connection(const CacheStore* store, int n, const std::vector<Monomial>& monomials, int order,
                                   const GriffithsBasis& basis, int threads) {
  CacheKey key{"connection", n, 3, monomial_set_hash(monomials), order, ""};
  if (store) {
    if (auto payload = store->load(key)) {
      try {
        auto cm = connection_from_json(*payload, basis);
        if (cm.tau == static_cast<int>(monomials.size()) && cm.order == order) return cm;
      } catch (const std::exception&) {
      }
    }
  }
  auto cm = gauss_manin(n, monomials, order, basis, threads);
  if (store) store->store(key, connection_to_json(cm));
  return cm;
}

}  // namespace hodge
