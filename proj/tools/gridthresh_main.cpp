// Command-line front end: exact counts, verification suites, and the
// prediction/convergence tables, with bit-exact CSV/JSON output.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>

#include "gridthresh/asymptotics.hpp"
#include "gridthresh/census.hpp"
#include "gridthresh/errors.hpp"
#include "gridthresh/numtheory.hpp"
#include "gridthresh/proper_pairs.hpp"
#include "gridthresh/table_io.hpp"
#include "gridthresh/threshold.hpp"

namespace {

using namespace gridthresh;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::int64_t m = 0, n = 0;
  std::vector<std::int64_t> sweep;
  std::int64_t census_guard = kCensusMaxCells;
  int threads = 0;  // 0: leave the OpenMP default
  std::string output_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::vector<std::string> fields;  // count: explicitly requested fields
  std::int64_t max_mn = 4;          // verify: exhaustive suite bound
  std::int64_t random_pairs = 100000;
  std::string bounds_k;     // table: "A..B"
  std::int64_t census_max = 0;  // table: emit census rows for u,v <= census_max
  bool inject_fault = false;
};

void apply_threads(const RunConfig& cfg) {
  int threads = cfg.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("GRIDTHRESH_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) omp_set_num_threads(threads);
}

void emit(const Table& t, const RunConfig& cfg) {
  std::ostringstream buf;
  if (cfg.format == "json")
    write_json(t, buf);
  else
    write_csv(t, buf);
  if (cfg.output_path.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output_path);
    out << buf.str();
  }
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& cfg) {
  const GridDims dims(cfg.m, cfg.n);
  const std::int64_t cells = dims.cells();

  const bool explicit_fields = !cfg.fields.empty();
  for (const auto& f : cfg.fields)
    if (f != "t" && f != "q" && f != "p" && f != "t2")
      throw std::invalid_argument("count: unknown field '" + f + "'");
  auto wanted = [&cfg, explicit_fields](const char* f) {
    if (!explicit_fields) return true;
    for (const auto& s : cfg.fields)
      if (s == f) return true;
    return false;
  };
  auto feasibility_error = [](const char* field, const char* guard) {
    std::cerr << "{\"error\":\"resource-limit\",\"field\":\"" << field << "\",\"guard\":\""
              << guard << "\"}\n";
    return kExitResourceLimit;
  };

  Table t;
  t.columns = {"m",       "n",       "t_exact", "t_method", "q_exact",
               "p_exact", "p_method", "t2_exact"};
  std::vector<Table::Cell> row;
  row.emplace_back(cfg.m);
  row.emplace_back(cfg.n);

  // t: enumeration while it is cheap, segment-count formula beyond that.
  if (wanted("t")) {
    if (cells <= 1024) {
      row.emplace_back(static_cast<std::int64_t>(enumerate_threshold(dims).size()));
      row.emplace_back(std::string("enumeration"));
    } else {
      row.emplace_back(count_threshold(dims));
      row.emplace_back(std::string("segment-count"));
    }
  } else {
    row.emplace_back(std::monostate{});
    row.emplace_back(std::monostate{});
  }

  if (wanted("q")) {
    if (cells > kProperPairMaxCells) {
      if (explicit_fields) return feasibility_error("q", "m*n <= 256");
      row.emplace_back(std::monostate{});
    } else {
      row.emplace_back(count_proper_pairs(dims));
    }
  } else {
    row.emplace_back(std::monostate{});
  }

  if (wanted("p")) {
    if (cells <= kConvexPairMaxCells) {
      row.emplace_back(count_convex_position_pairs(dims));
      row.emplace_back(std::string("pair-enumeration"));
    } else if (cfg.m * cfg.n <= cfg.census_guard) {
      row.emplace_back(reconstruct_p(dims, cfg.census_guard));
      row.emplace_back(std::string("census-reconstruction"));
    } else if (explicit_fields) {
      return feasibility_error("p", "census guard");
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
  } else {
    row.emplace_back(std::monostate{});
    row.emplace_back(std::monostate{});
  }

  if (wanted("t2")) {
    if (cells > kTwoThresholdMaxCells) {
      if (explicit_fields) return feasibility_error("t2", "m*n <= 144");
      row.emplace_back(std::monostate{});
    } else {
      row.emplace_back(count_two_threshold(dims));
    }
  } else {
    row.emplace_back(std::monostate{});
  }

  t.add_row(std::move(row));
  emit(t, cfg);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyContext {
  int failures = 0;

  void report(bool ok, const std::string& name, const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

void verify_pair_classification(const RunConfig& cfg, VerifyContext& ctx) {
  // exhaustive small grids
  std::int64_t mismatches = 0, pairs = 0;
  for (std::int64_t m = 1; m <= cfg.max_mn; ++m)
    for (std::int64_t n = 1; n <= cfg.max_mn; ++n) {
      const GridDims dims(m, n);
      const auto segs = oriented_prime_segments(dims);
      for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
          const SegmentPair pair(segs[i], segs[j]);
          const bool proper = is_proper_pair(dims, pair);
          const bool classified =
              classify_pair_geometric(pair) != PairClass::NotProper;
          ++pairs;
          if (proper != classified) ++mismatches;
        }
    }
  ctx.report(mismatches == 0, "pair_classification_exhaustive",
             std::to_string(pairs) + " pairs, " + std::to_string(mismatches) + " mismatches");

  // seeded random pairs on 8x8
  std::mt19937_64 rng(cfg.seed);
  const GridDims dims(8, 8);
  std::uniform_int_distribution<std::int64_t> coord(0, 7);
  std::int64_t rnd_mismatches = 0;
  std::int64_t samples = 0;
  while (samples < cfg.random_pairs) {
    const GridPoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
    const GridPoint c{coord(rng), coord(rng)}, d{coord(rng), coord(rng)};
    if (a == b || c == d) continue;
    if (!is_prime_segment(a, b) || !is_prime_segment(c, d)) continue;
    const OrientedSegment s1(a, b), s2(c, d);
    if (s1 == s2) continue;
    ++samples;
    const SegmentPair pair(s1, s2);
    if (is_proper_pair(dims, pair) !=
        (classify_pair_geometric(pair) != PairClass::NotProper))
      ++rnd_mismatches;
  }
  ctx.report(rnd_mismatches == 0, "pair_classification_random_8x8",
             std::to_string(samples) + " seeded samples, " +
                 std::to_string(rnd_mismatches) + " mismatches");
}

void verify_mobius_counts(const RunConfig& cfg, VerifyContext& ctx) {
  const ArithTables tables = build_tables(4096);
  std::int64_t mismatches = 0, triangles = 0;
  const std::int64_t g = std::min<std::int64_t>(cfg.max_mn + 3, 7);
  std::vector<GridPoint> pts;
  for (std::int64_t y = 0; y < g; ++y)
    for (std::int64_t x = 0; x < g; ++x) pts.push_back(GridPoint{x, y});
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (cross_sign(pts[i], pts[j], pts[k]) == 0) continue;
        const LatticeTriangle tri(pts[i], pts[j], pts[k]);
        ++triangles;
        if (prime_points_in_triangle_direct(tri, pts[i]) !=
            prime_points_in_triangle_mobius(tri, pts[i], tables))
          ++mismatches;
      }
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_int_distribution<std::int64_t> coord(0, 99);
  std::int64_t random_done = 0;
  while (random_done < 500) {
    const GridPoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)},
        c{coord(rng), coord(rng)};
    if (cross_sign(a, b, c) == 0) continue;
    const LatticeTriangle tri(a, b, c);
    ++random_done;
    if (prime_points_in_triangle_direct(tri, a) !=
        prime_points_in_triangle_mobius(tri, a, tables))
      ++mismatches;
  }
  ctx.report(mismatches == 0, "mobius_prime_count_vs_direct",
             std::to_string(triangles) + " exhaustive + " + std::to_string(random_done) +
                 " random triangles, " + std::to_string(mismatches) + " mismatches");
}

void verify_total1(const RunConfig& cfg, VerifyContext& ctx) {
  bool ok = true;
  std::string detail;
  for (std::int64_t m = 2; m <= cfg.max_mn + 1 && ok; ++m)
    for (std::int64_t n = 2; n <= cfg.max_mn + 1 && ok; ++n) {
      const GridDims dims(m, n);
      std::int64_t lhs = reconstruct_p(dims, cfg.census_guard);
      if (cfg.inject_fault && m == 2 && n == 2) ++lhs;
      const std::int64_t rhs = count_convex_position_pairs(dims);
      if (lhs != rhs) {
        ok = false;
        detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " census sum " +
                 std::to_string(lhs) + " != direct " + std::to_string(rhs);
      }
    }
  ctx.report(ok, "eq_total1_reconciliation", detail);
}

int cmd_verify(const RunConfig& cfg) {
  VerifyContext ctx;
  for (std::int64_t m = 1; m <= cfg.max_mn; ++m)
    for (std::int64_t n = m; n <= cfg.max_mn; ++n) {
      const GridDims dims(m, n);
      const UniquenessReport u = verify_uniqueness(dims);
      ctx.report(u.passed(),
                 "uniqueness_" + std::to_string(m) + "x" + std::to_string(n),
                 std::to_string(u.proper_pairs) + " pairs, " +
                     std::to_string(u.violations) + " violations, " +
                     std::to_string(u.multi_preimage_no_boundary) +
                     " multi-preimage interior functions");
      const DecompositionReport d = verify_decomposition(dims);
      ctx.report(d.passed(),
                 "decomposition_" + std::to_string(m) + "x" + std::to_string(n),
                 "t2=" + std::to_string(d.t2) + " t=" + std::to_string(d.t) +
                     " q=" + std::to_string(d.q));
      const DistanceReport dist = verify_distance_claim(dims);
      ctx.report(dist.passed(),
                 "distance_claim_" + std::to_string(m) + "x" + std::to_string(n),
                 std::to_string(dist.pairs_checked) + " interior pairs checked");
    }
  verify_pair_classification(cfg, ctx);
  verify_mobius_counts(cfg, ctx);
  verify_total1(cfg, ctx);
  std::cout << (ctx.failures == 0 ? "all checks passed\n"
                                  : std::to_string(ctx.failures) + " checks failed\n");
  return ctx.failures == 0 ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int cmd_table(const RunConfig& cfg) {
  if (!cfg.bounds_k.empty()) {
    const auto sep = cfg.bounds_k.find("..");
    if (sep == std::string::npos)
      throw std::invalid_argument("--bounds-k expects A..B");
    const int lo = std::stoi(cfg.bounds_k.substr(0, sep));
    const int hi = std::stoi(cfg.bounds_k.substr(sep + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("--bounds-k range invalid");
    Table t;
    t.columns = {"k", "trivial_coeff_pred", "improved_coeff_pred", "improved_smaller_exact"};
    for (int k = lo; k <= hi; ++k) {
      const KBoundComparison c = k_threshold_bounds(k, 1, 1);
      t.add_row({static_cast<std::int64_t>(k), c.trivial_main, c.improved_main,
                 static_cast<std::int64_t>(c.improved_is_smaller ? 1 : 0)});
    }
    emit(t, cfg);
    return kExitOk;
  }

  if (cfg.census_max > 0) {
    Table t;
    t.columns = {"u", "v", "z0", "z1a", "z1b", "z2a", "z2b", "z2c", "z3", "z4", "total"};
    for (std::int64_t u = 1; u <= cfg.census_max; ++u)
      for (std::int64_t v = 1; v <= cfg.census_max; ++v) {
        const ZCensus c = census(u, v);
        t.add_row({u, v, c.z[0], c.z1a, c.z1b, c.z2a, c.z2b, c.z2c, c.z[3], c.z[4],
                   c.total()});
      }
    emit(t, cfg);
    return kExitOk;
  }

  if (cfg.sweep.empty()) throw std::invalid_argument("table: --sweep is empty");
  ConvergenceOptions opt;
  opt.census_guard = cfg.census_guard;
  const std::vector<ConvergenceRow> rows = convergence_table(cfg.sweep, opt);
  Table t;
  t.columns = {"n",       "p_exact",  "p_pred",   "p_ratio",    "t_exact",   "t_pred",
               "t_ratio", "q_exact",  "t2_exact", "t2_q_ratio", "t2_p_ratio"};
  for (const ConvergenceRow& r : rows) {
    std::vector<Table::Cell> row{r.n, r.p_exact, r.p_pred, r.p_ratio};
    row.emplace_back(r.t_exact ? Table::Cell{*r.t_exact} : Table::Cell{});
    row.emplace_back(r.t_pred);
    row.emplace_back(r.t_ratio ? Table::Cell{*r.t_ratio} : Table::Cell{});
    row.emplace_back(r.q_exact ? Table::Cell{*r.q_exact} : Table::Cell{});
    row.emplace_back(r.t2_exact ? Table::Cell{*r.t2_exact} : Table::Cell{});
    row.emplace_back(r.t2_q_ratio ? Table::Cell{*r.t2_q_ratio} : Table::Cell{});
    row.emplace_back(r.t2_p_ratio ? Table::Cell{*r.t2_p_ratio} : Table::Cell{});
    t.add_row(std::move(row));
  }
  emit(t, cfg);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact threshold / 2-threshold grid function counts and verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "OpenMP thread count (env GRIDTHRESH_THREADS)");
    sub->add_option("--output", cfg.output_path, "write output to this file");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized property samples");
    sub->add_option("--census-guard", cfg.census_guard,
                    "max (u+1)(v+1) for a single census");
  };

  CLI::App* count = app.add_subcommand("count", "exact t, q, p, t2 for one grid");
  count->add_option("--m", cfg.m, "grid width")->required();
  count->add_option("--n", cfg.n, "grid height")->required();
  count->add_option("--fields", cfg.fields,
                    "restrict to these fields (t,q,p,t2); infeasible requests fail");
  add_common(count);

  CLI::App* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--max-mn", cfg.max_mn, "exhaustive suite bound (default 4)");
  verify->add_option("--random-pairs", cfg.random_pairs, "random pair samples on 8x8");
  verify->add_flag("--inject-fault", cfg.inject_fault,
                   "corrupt one census total to exercise the failure path");
  add_common(verify);

  CLI::App* table = app.add_subcommand("table", "convergence / bounds / census tables");
  table->add_option("--sweep", cfg.sweep, "square sizes for the convergence table")
      ->delimiter(',');
  table->add_option("--bounds-k", cfg.bounds_k, "k range A..B for the bound crossovers");
  table->add_option("--census-max", cfg.census_max, "emit census rows for u,v <= this");
  add_common(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    apply_threads(cfg);
    if (count->parsed()) return cmd_count(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (table->parsed()) return cmd_table(cfg);
    return kExitUsage;
  } catch (const resource_limit_error& e) {
    std::cerr << "{\"error\":\"resource-limit\",\"what\":\"" << e.what() << "\"}\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "{\"error\":\"usage\",\"what\":\"" << e.what() << "\"}\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"internal\",\"what\":\"" << e.what() << "\"}\n";
    return 70;
  }
}
