#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodge/commands.hpp"

int main(int argc, char** argv) {
  using namespace hodge;
  CLI::App app{"Exact Hodge loci of cubic Fermat hypersurfaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  std::string engine = "residue";
  std::vector<std::string> kinds;
  std::string cache_dir;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();
    sub->add_option("--cache-dir", cache_dir, std::string("cache directory (default: $") + kCacheEnv + ")");
    sub->add_option("--budget", cfg.budget_seconds, "time budget in seconds (0: unlimited)")->capture_default_str();
  };

  auto* tangent = app.add_subcommand("tangent", "deformation space S of a pair of linear cycles");
  tangent->add_option("--n", cfg.ns, "dimension")->expected(1)->required();
  tangent->add_option("--d", cfg.d, "degree")->capture_default_str();
  tangent->add_option("--m", cfg.m, "dimension of the intersection (default n/2 - 2)");
  common(tangent);

  auto* locus = app.add_subcommand("locus", "Hodge locus of r[P] + rr[P-check] to order N");
  locus->add_option("--n", cfg.ns, "dimension")->expected(1)->required();
  locus->add_option("--m", cfg.m, "dimension of the intersection (default n/2 - 2)");
  locus->add_option("--r", cfg.r, "coefficient of P");
  locus->add_option("--rr", cfg.rr, "coefficient of P-check");
  locus->add_option("--order", cfg.orders, "orders N (comma separated)")->delimiter(',');
  locus->add_option("--range", cfg.range, "sweep coprime pairs with |r|, |rr| <= range")->capture_default_str();
  locus->add_option("--engine", engine, "residue or connection")->capture_default_str();
  common(locus);

  auto* special = app.add_subcommand("special-loci", "codimensions of loci of special cycles at random points");
  special->add_option("--n", cfg.ns, "dimensions (comma separated)")->delimiter(',')->required();
  special->add_option("--kinds", kinds, "linear, cubic_ruled, quartic_scroll, veronese")->delimiter(',');
  special->add_option("--seed", cfg.seed, "first seed")->capture_default_str();
  special->add_option("--batch", cfg.batch, "number of seeds")->capture_default_str();
  common(special);

  auto* tables = app.add_subcommand("tables", "reproduce a table (1, 2 or 5)");
  tables->add_option("--which", cfg.which, "1, 2 or 5")->required();
  tables->add_option("--n", cfg.ns, "dimensions (comma separated)")->delimiter(',');
  tables->add_option("--order", cfg.orders, "orders N (comma separated)")->delimiter(',');
  tables->add_option("--range", cfg.range, "coefficient range")->capture_default_str();
  tables->add_option("--r", cfg.r, "single coefficient of P");
  tables->add_option("--rr", cfg.rr, "single coefficient of P-check");
  tables->add_option("--seed", cfg.seed, "first seed (table 5)")->capture_default_str();
  tables->add_option("--batch", cfg.batch, "number of seeds (table 5)")->capture_default_str();
  tables->add_option("--engine", engine, "residue or connection")->capture_default_str();
  common(tables);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = parse_format(format);
    cfg.engine = parse_engine(engine);
    if (!cache_dir.empty()) cfg.cache_dir = cache_dir;
    if (!kinds.empty()) {
      cfg.kinds.clear();
      for (const auto& k : kinds) cfg.kinds.push_back(parse_cycle_kind(k));
    }
    CommandResult res;
    if (tangent->parsed()) {
      res = cmd_tangent(cfg);
    } else if (locus->parsed()) {
      res = cmd_locus(cfg);
    } else if (special->parsed()) {
      res = cmd_special_loci(cfg);
    } else {
      if (tables->count("--n") == 0) cfg.ns = {4, 6, 8};
      if (tables->count("--order") == 0) cfg.orders = cfg.which == 2 ? std::vector<int>{2, 3} : std::vector<int>{2, 3, 4};
      if (tables->count("--range") == 0) cfg.range = 10;
      res = cmd_tables(cfg);
    }
    std::cout << res.output;
    if (res.exit_code() != 0) std::cerr << res.mismatches.size() << " cell(s) contradict the published tables\n";
    return res.exit_code();
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
