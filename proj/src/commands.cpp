#include "hodge/commands.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>

#include "hodge/golden.hpp"
#include "hodge/parallel.hpp"

namespace hodge {

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("unknown format '" + text + "' (expected text, csv or json)");
}

void RunConfig::validate(const std::string& command) const {
  if (ns.empty()) throw ConfigError("at least one n is required");
  for (int n : ns) {
    if (n < 2 || n % 2 != 0) throw ConfigError("n must be an even integer >= 2, got " + std::to_string(n));
    if (n + 2 > static_cast<int>(Monomial::kMaxVars)) throw ConfigError("n is limited to " + std::to_string(Monomial::kMaxVars - 2));
  }
  if (d != 3) throw ConfigError("only cubic hypersurfaces (d = 3) are supported");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (budget_seconds < 0) throw ConfigError("budget must be >= 0");
  if (command == "tangent" || command == "locus") {
    if (ns.size() != 1) throw ConfigError(command + " takes a single n");
    const int mm = m_or_default();
    if (mm < -1 || mm > n() / 2) throw ConfigError("m must lie in [-1, n/2]");
  }
  if (command == "locus") {
    if (r.has_value() != rr.has_value()) throw ConfigError("--r and --rr must be given together");
    if (r && (*r == 0 || *rr == 0 || std::gcd(*r, *rr) != 1))
      throw ConfigError("r and rr must be non-zero and coprime");
    if (!r && range < 1) throw ConfigError("range must be >= 1");
    if (orders.empty()) throw ConfigError("at least one order is required");
    for (int o : orders)
      if (o < 1 || o > JetKey::kMaxDegree) throw ConfigError("orders must lie in [1, 8]");
    if (m_or_default() >= n() / 2) throw ConfigError("the cycles must be distinct (m < n/2)");
  }
  if (command == "special-loci" && batch < 1) throw ConfigError("batch must be >= 1");
  if (command == "tables" && which != 1 && which != 2 && which != 5) throw ConfigError("--which must be 1, 2 or 5");
}

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::optional<CacheStore> open_store(const RunConfig& c) {
  if (c.cache_dir) return CacheStore(*c.cache_dir);
  return CacheStore::from_env();
}

void append_mismatches(std::ostringstream& os, const std::vector<std::string>& mm, Format f) {
  if (f == Format::json || mm.empty()) return;
  for (const auto& s : mm) os << (f == Format::csv ? "# mismatch: " : "MISMATCH: ") << s << "\n";
}

std::vector<std::string> monomial_strings(const DeformationSpace& space) {
  std::vector<std::string> out;
  for (const auto& mo : space.monomials) out.push_back(mo.compact_str());
  return out;
}

std::vector<std::string> check_space(int n, int m, const std::vector<std::string>& got, bool rigid) {
  std::vector<std::string> out;
  const auto table = golden::table_of(n, m);
  if (!table) return out;
  const auto& dims = *table == 1 ? golden::kTable1DimS : golden::kTable2DimS;
  const auto& mons = *table == 1 ? golden::kTable3Monomials : golden::kTable4Monomials;
  if (auto it = dims.find(n); it != dims.end() && it->second != static_cast<int>(got.size()))
    out.push_back("n=" + std::to_string(n) + " dim(S)=" + std::to_string(got.size()) + ", published " +
                  std::to_string(it->second));
  if (auto it = mons.find(n); it != mons.end() && got != it->second)
    out.push_back("n=" + std::to_string(n) + " monomial set differs from the published list");
  if (!rigid) out.push_back("n=" + std::to_string(n) + " deformation space is not rigid");
  return out;
}

// Expected verdict for a cell, if the published tables pin one.
std::optional<bool> expected_verdict(int n, int m, long r, long rr, int order) {
  const auto table = golden::table_of(n, m);
  if (!table) return std::nullopt;
  const bool difference = r == -rr;
  if (*table == 1) {
    if (difference) {
      if (auto it = golden::kTable1Difference.find(n); it != golden::kTable1Difference.end() && order <= it->second)
        return true;
    }
    auto col = golden::kTable1Verdict.find(n);
    if (col == golden::kTable1Verdict.end()) return std::nullopt;
    auto v = col->second.find(order);
    if (v == col->second.end()) return std::nullopt;
    if (v->second) return true;
    if (!difference) return false;
    return std::nullopt;
  }
  if (auto it = golden::kTable2Smooth.find(n); it != golden::kTable2Smooth.end() && order <= it->second) return true;
  return std::nullopt;
}

std::optional<int> expected_codim(int n, int m) {
  const auto table = golden::table_of(n, m);
  if (!table) return std::nullopt;
  const auto& codims = *table == 1 ? golden::kTable1Codim : golden::kTable2Codim;
  if (auto it = codims.find(n); it != codims.end()) return it->second;
  return std::nullopt;
}

void check_cell(const TableCell& c, int m, std::vector<std::string>& out) {
  if (c.status == "budget") return;
  const std::string where = "n=" + std::to_string(c.n) + " m=" + std::to_string(m) + " (r,rr)=(" + std::to_string(c.r) +
                            "," + std::to_string(c.rr) + ") N=" + std::to_string(c.order);
  if (auto e = expected_verdict(c.n, m, c.r, c.rr, c.order); e && *e != (c.status == "smooth"))
    out.push_back(where + " computed " + c.status + ", published " + (*e ? "smooth" : "not_smooth"));
  if (auto e = expected_codim(c.n, m); e && *e != c.codim)
    out.push_back(where + " tangent codim " + std::to_string(c.codim) + ", published " + std::to_string(*e));
}

std::string verdict_mark(const std::vector<const TableCell*>& cells) {
  bool any_budget = false, all_smooth = true, all_x = true;
  for (const auto* c : cells) {
    if (c->status == "budget") {
      any_budget = true;
      continue;
    }
    if (c->status != "smooth") all_smooth = false;
    if (c->r != -c->rr && c->status == "smooth") all_x = false;
  }
  if (any_budget) return "?";
  if (all_smooth) return "✓";
  if (all_x) return "X";
  return "mixed";
}

std::string render_table(const TableReport& rep, const std::vector<int>& orders, const std::vector<std::string>& mm) {
  std::ostringstream os;
  const int w = 8;
  auto row = [&](const std::string& label, auto value) {
    os << std::left << std::setw(26) << label;
    for (const auto& col : rep.columns) {
      const std::string v = value(col);
      const auto width = std::count_if(v.begin(), v.end(), [](char ch) { return (ch & 0xC0) != 0x80; });
      os << std::string(static_cast<std::size_t>(std::max<long>(0, w - width)), ' ') << v;
    }
    os << "\n";
  };
  os << "Table " << rep.which << (rep.which == 1 ? " (m = n/2 - 2)" : " (m = n/2 - 3)") << "\n";
  row("n", [](const TableColumn& c) { return std::to_string(c.n); });
  row("dim(S)", [](const TableColumn& c) { return std::to_string(c.dim_s); });
  row("codim(V^1)", [](const TableColumn& c) { return std::to_string(c.codim); });
  for (int order : orders) {
    row("N=" + std::to_string(order), [&](const TableColumn& col) {
      std::vector<const TableCell*> cells;
      for (const auto& c : rep.cells)
        if (c.n == col.n && c.order == order) cells.push_back(&c);
      return verdict_mark(cells);
    });
  }
  row(rep.which == 1 ? "P - P-check smooth to N" : "(1,-1) smooth to N", [](const TableColumn& c) {
    return c.max_smooth_difference < 0 ? std::string("-") : std::to_string(c.max_smooth_difference);
  });
  row("rigid", [](const TableColumn& c) { return std::string(c.rigid ? "yes" : "no"); });
  if (rep.which == 2)
    row("pencil (kernel dim)", [](const TableColumn& c) {
      return std::string(c.pencil ? "yes" : "no") + "(" + std::to_string(c.pencil_kernel_dim) + ")";
    });
  append_mismatches(os, mm, Format::text);
  return os.str();
}

std::string render_cells_csv(const std::vector<TableCell>& cells, const std::function<int(int)>& m_of_n) {
  std::ostringstream os;
  os << "n,m,r,rr,N,verdict,codim,witness\n";
  for (const auto& c : cells)
    os << c.n << "," << m_of_n(c.n) << "," << c.r << "," << c.rr << "," << c.order << "," << c.status << ","
       << c.codim << "," << csv_field(c.witness.value_or("")) << "\n";
  return os.str();
}

int m_for_table(int n, int which) { return which == 1 ? n / 2 - 2 : n / 2 - 3; }

}  // namespace

CommandResult cmd_tangent(const RunConfig& config) {
  config.validate("tangent");
  const int n = config.n();
  const int m = config.m_or_default();
  const auto pair = sum_two_linear_cycles(n, config.d, m);
  const auto space = choose_deformation_space(pair, config.d);
  const bool rigid = rigidity_check(space);
  CommandResult res;
  const auto mons = monomial_strings(space);
  res.mismatches = check_space(n, m, mons, rigid);
  std::ostringstream os;
  switch (config.format) {
    case Format::text:
      os << "n=" << n << " d=" << config.d << " m=" << m << "\n"
         << "P       = " << join([&] {
              std::vector<std::string> v;
              for (const auto& f : pair.p.linear_forms()) v.push_back(f.str());
              return v;
            }(), ", ")
         << "\n"
         << "P-check = " << join([&] {
              std::vector<std::string> v;
              for (const auto& f : pair.q.linear_forms()) v.push_back(f.str());
              return v;
            }(), ", ")
         << "\n"
         << "dim(S) = " << space.tau() << "\n"
         << "monomials: " << join(mons, " ") << "\n"
         << "rigid: " << (rigid ? "true" : "false") << "\n"
         << "branches: " << branch_count(n, config.d).get_str() << "\n";
      break;
    case Format::csv:
      os << "n,d,m,dim_s,rigid,monomials\n"
         << n << "," << config.d << "," << m << "," << space.tau() << "," << (rigid ? "true" : "false") << ","
         << join(mons, " ") << "\n";
      break;
    case Format::json: {
      nlohmann::json j = space.to_json();
      j["m"] = m;
      j["rigid"] = rigid;
      j["p"] = pair.p.to_json();
      j["p_check"] = pair.q.to_json();
      j["branches"] = branch_count(n, config.d).get_str();
      j["mismatches"] = res.mismatches;
      os << j.dump(2) << "\n";
      break;
    }
  }
  append_mismatches(os, res.mismatches, config.format);
  res.output = os.str();
  return res;
}

CommandResult cmd_locus(const RunConfig& config) {
  config.validate("locus");
  TableConfig tc;
  const int n = config.n();
  const int m = config.m_or_default();
  tc.ns = {n};
  tc.orders = config.orders;
  std::sort(tc.orders.begin(), tc.orders.end());
  tc.orders.erase(std::unique(tc.orders.begin(), tc.orders.end()), tc.orders.end());
  tc.range = config.range;
  if (config.r) tc.pairs = {{*config.r, *config.rr}};
  tc.budget_seconds = config.budget_seconds;
  tc.threads = config.threads;
  tc.engine = config.engine;
  tc.store = open_store(config);

  const LocusContext ctx(n, m, tc.store);
  const auto pairs = tc.pairs.empty() ? coefficient_sweep(tc.range) : tc.pairs;
  const int top = tc.orders.back();
  ctx.expansions(top, config.threads);

  const auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<TableCell>> slots(pairs.size());
  parallel_for(pairs.size(), config.threads, [&](std::size_t i) {
    const auto [r, rr] = pairs[i];
    for (int order : tc.orders) slots[i].push_back({n, r, rr, order, "budget", 0, std::nullopt});
    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    if (tc.budget_seconds > 0 && el.count() > tc.budget_seconds) return;
    const auto full = hodge_ideal(ctx, r, rr, top, tc.engine, 1);
    for (auto& cell : slots[i]) {
      HodgeLocusIdeal ideal = full;
      ideal.order = cell.order;
      for (auto& g : ideal.generators) g = g.truncate(cell.order);
      const auto s = smooth_reduced(ideal, ctx.basis());
      cell.status = s.smooth ? "smooth" : "not_smooth";
      cell.codim = s.codim;
      cell.witness = s.witness;
    }
  });

  CommandResult res;
  res.mismatches = check_space(n, m, monomial_strings(ctx.space()), rigidity_check(ctx.space()));
  std::vector<TableCell> cells;
  for (const auto& s : slots)
    for (const auto& c : s) {
      check_cell(c, m, res.mismatches);
      cells.push_back(c);
    }
  std::ostringstream os;
  switch (config.format) {
    case Format::text: {
      os << "n=" << n << " m=" << m << " dim(S)=" << ctx.space().tau() << " generators=" << ctx.generator_forms().size()
         << " engine=" << to_string(config.engine) << "\n";
      os << std::left << std::setw(6) << "r" << std::setw(6) << "rr" << std::setw(4) << "N" << std::setw(12) << "verdict"
         << std::setw(7) << "codim"
         << "witness\n";
      for (const auto& c : cells)
        os << std::left << std::setw(6) << c.r << std::setw(6) << c.rr << std::setw(4) << c.order << std::setw(12)
           << c.status << std::setw(7) << c.codim << c.witness.value_or("-") << "\n";
      break;
    }
    case Format::csv:
      os << render_cells_csv(cells, [m](int) { return m; });
      break;
    case Format::json: {
      nlohmann::json j;
      j["config"] = {{"n", n},           {"m", m},           {"orders", tc.orders},
                     {"range", tc.range}, {"engine", to_string(config.engine)}};
      j["space"] = ctx.space().to_json();
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : cells) {
        nlohmann::json e{{"r", c.r}, {"rr", c.rr}, {"order", c.order}, {"verdict", c.status}, {"codim", c.codim}};
        e["witness"] = c.witness ? nlohmann::json(*c.witness) : nlohmann::json(nullptr);
        arr.push_back(e);
      }
      j["cells"] = arr;
      j["mismatches"] = res.mismatches;
      os << j.dump(2) << "\n";
      break;
    }
  }
  append_mismatches(os, res.mismatches, config.format);
  res.output = os.str();
  return res;
}

namespace {

struct SpecialRow {
  int n;
  std::vector<CodimReport> reports;
  std::vector<int> hodge;
};

SpecialRow special_row(const RunConfig& config, int n) {
  SpecialRow row{n, {}, hodge_numbers(n, config.d)};
  for (auto kind : config.kinds)
    row.reports.push_back(random_point_codim(kind, n, config.d, config.seed, config.batch, config.threads));
  return row;
}

void check_special(const SpecialRow& row, std::vector<std::string>& out) {
  const auto g = golden::kTable5.find(row.n);
  if (g != golden::kTable5.end()) {
    for (const auto& rep : row.reports) {
      int expected = 0;
      switch (rep.kind) {
        case CycleKind::linear: expected = g->second.linear; break;
        case CycleKind::cubic_ruled: expected = g->second.cubic_ruled; break;
        case CycleKind::quartic_scroll: expected = g->second.quartic_scroll; break;
        case CycleKind::veronese: expected = g->second.veronese; break;
      }
      if (rep.codim != expected)
        out.push_back("n=" + std::to_string(row.n) + " " + to_string(rep.kind) + " codim " + std::to_string(rep.codim) +
                      ", published " + std::to_string(expected));
    }
  }
  if (auto h = golden::kHodgeNumbers.find(row.n); h != golden::kHodgeNumbers.end()) {
    auto expected = h->second;
    for (const auto& [where, value] : golden::kHodgeNumberErrata)
      if (where.first == row.n) expected[static_cast<std::size_t>(where.second)] = value;
    if (expected != row.hodge) out.push_back("n=" + std::to_string(row.n) + " Hodge numbers differ from the published row");
  }
}

std::string hodge_str(const std::vector<int>& h) {
  std::vector<std::string> s;
  for (int x : h) s.push_back(std::to_string(x));
  return join(s, ",");
}

std::string render_special(const std::vector<SpecialRow>& rows, const RunConfig& config,
                           const std::vector<std::string>& mm) {
  std::ostringstream os;
  switch (config.format) {
    case Format::text: {
      os << std::left << std::setw(4) << "n" << std::setw(8) << "dim(T)";
      for (auto k : config.kinds) os << std::setw(18) << to_string(k);
      os << "Hodge numbers\n";
      for (const auto& row : rows) {
        os << std::left << std::setw(4) << row.n << std::setw(8) << row.reports.front().ambient - (row.n + 2) * (row.n + 2);
        for (const auto& rep : row.reports) {
          std::ostringstream cell;
          cell << rep.codim << " (" << std::fixed << std::setprecision(0) << rep.agreement * 100 << "%)";
          os << std::setw(18) << cell.str();
        }
        os << hodge_str(row.hodge) << "\n";
      }
      os << "seeds " << config.seed << ".." << config.seed + static_cast<std::uint64_t>(config.batch) - 1
         << "; smoothness of sampled points: ";
      std::map<std::string, int> tally;
      for (const auto& row : rows)
        for (const auto& rep : row.reports)
          for (const auto& s : rep.samples) ++tally[s.smoothness];
      std::vector<std::string> parts;
      for (const auto& [k, v] : tally) parts.push_back(k + "=" + std::to_string(v));
      os << join(parts, ", ") << "\n";
      break;
    }
    case Format::csv:
      os << "n,kind,ambient,codim,agreement,hodge\n";
      for (const auto& row : rows)
        for (const auto& rep : row.reports)
          os << row.n << "," << to_string(rep.kind) << "," << rep.ambient << "," << rep.codim << "," << rep.agreement
             << "," << csv_field(hodge_str(row.hodge)) << "\n";
      break;
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json reps = nlohmann::json::array();
        for (const auto& rep : row.reports) reps.push_back(rep.to_json());
        arr.push_back({{"n", row.n}, {"hodge_numbers", row.hodge}, {"loci", reps}});
      }
      os << nlohmann::json{{"seed", config.seed}, {"batch", config.batch}, {"rows", arr}, {"mismatches", mm}}.dump(2)
         << "\n";
      break;
    }
  }
  append_mismatches(os, mm, config.format);
  return os.str();
}

}  // namespace

CommandResult cmd_special_loci(const RunConfig& config) {
  config.validate("special-loci");
  std::vector<SpecialRow> rows;
  CommandResult res;
  for (int n : config.ns) {
    rows.push_back(special_row(config, n));
    check_special(rows.back(), res.mismatches);
  }
  res.output = render_special(rows, config, res.mismatches);
  return res;
}

CommandResult cmd_tables(const RunConfig& config) {
  config.validate("tables");
  if (config.which == 5) return cmd_special_loci(config);
  TableConfig tc;
  tc.which = config.which;
  tc.ns = config.ns;
  tc.orders = config.orders;
  tc.range = config.range;
  if (config.r) tc.pairs = {{*config.r, *config.rr}};
  tc.budget_seconds = config.budget_seconds;
  tc.threads = config.threads;
  tc.engine = config.engine;
  tc.store = open_store(config);
  const auto rep = run_theorem_tables(tc);

  CommandResult res;
  for (const auto& col : rep.columns) {
    for (auto& s : check_space(col.n, col.m, col.monomials, col.rigid)) res.mismatches.push_back(s);
    if (config.which == 2 && !col.pencil)
      res.mismatches.push_back("n=" + std::to_string(col.n) + " kernels do not form a pencil");
  }
  for (const auto& c : rep.cells) check_cell(c, m_for_table(c.n, config.which), res.mismatches);

  std::ostringstream os;
  switch (config.format) {
    case Format::text: os << render_table(rep, config.orders, res.mismatches); break;
    case Format::csv:
      os << render_cells_csv(rep.cells, [&](int n) { return m_for_table(n, config.which); });
      append_mismatches(os, res.mismatches, Format::csv);
      break;
    case Format::json: {
      auto j = rep.to_json();
      j["mismatches"] = res.mismatches;
      os << j.dump(2) << "\n";
      break;
    }
  }
  res.output = os.str();
  return res;
}

}  // namespace hodge
