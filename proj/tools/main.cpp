// Command-line harness: exact/ma/hybrid solvers with seeded replicates and
// append-only JSONL result records, plus desk-scale self-checks (verify),
// record aggregation (summary), and mini-bucket table prebuilds (tables).
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stillife/beam_hybrid.hpp"
#include "stillife/bucket_elim.hpp"
#include "stillife/domain.hpp"
#include "stillife/life.hpp"
#include "stillife/memetic.hpp"
#include "stillife/minibucket.hpp"
#include "stillife/oracle.hpp"
#include "stillife/run_record.hpp"
#include "stillife/wcsp.hpp"

using namespace stillife;
using nlohmann::json;

namespace {

std::string out_dir() {
  const char* v = std::getenv("STILLIFE_OUT_DIR");
  return (v && *v) ? std::string(v) : std::string(".");
}

std::string default_record_path() { return out_dir() + "/runs.jsonl"; }

double default_budget_s(int n) { return 180.0 + 60.0 * std::max(0, n - 12); }

void print_board(const Board& b) { std::fputs(b.to_text().c_str(), stdout); }

void emit(const RunRecord& rec, const std::string& path, bool no_record) {
  if (no_record) return;
  append_record(path, rec);
}

int announce_dry_run(const json& cfg) {
  std::printf("%s\n", cfg.dump().c_str());
  std::printf("configuration valid; dry run, not executing\n");
  return 0;
}

// ---------------------------------------------------------------- exact ----

struct ExactOpts {
  int n = 0;
  std::string domain = "full";
  bool plain = false;       // skip the half-table symmetry optimization
  bool low_memory = false;
  bool force = false;       // allow full domains beyond the desk-scale cap
  bool dry = false;
  bool no_record = false;
  std::string out = default_record_path();
};

int cmd_exact(const ExactOpts& o) {
  if (o.n < 1 || o.n > kMaxN) {
    std::fprintf(stderr, "exact: n must be in 1..%d\n", kMaxN);
    return 1;
  }
  json cfg = {{"n", o.n},
              {"domain", o.domain},
              {"algorithm", o.plain ? "be" : "be-symmetric-opt"},
              {"low_memory", o.low_memory}};
  if (o.domain == "full" && o.n > 10 && !o.force) {
    std::fprintf(stderr,
                 "exact: full domain beyond n=10 needs --force "
                 "(2^%d rows per level)\n",
                 o.n);
    return 1;
  }
  if (o.dry) return announce_dry_run(cfg);

  auto t0 = std::chrono::steady_clock::now();
  Cost opt = Cost::inf();
  std::optional<Board> board;
  if (o.n < 3) {  // elimination needs three rows; defer to the oracle
    OracleResult r = exhaustive_opt(o.n);
    opt = r.opt;
    board = r.board;
  } else {
    Domain dom = o.domain == "symmetric" ? Domain::symmetric(o.n)
                                         : Domain::full(o.n, o.force);
    BEOptions opts;
    opts.low_memory = o.low_memory;
    BESolution sol = o.plain ? be_solve(o.n, dom, opts)
                             : be_solve_symmetric_opt(o.n, dom, opts);
    opt = sol.opt;
    board = sol.board;
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();

  RunRecord rec;
  rec.solver = "exact";
  rec.config = cfg;
  rec.seed = 0;
  rec.n = o.n;
  rec.total_time_s = dt;
  rec.time_to_best_s = dt;
  if (opt.is_finite()) {
    rec.best_cost = opt.value();
    rec.board = board;
    rec.trace.emplace_back(dt, opt.value());
  }
  emit(rec, o.out, o.no_record);

  if (opt.is_finite()) {
    std::printf("n=%d domain=%s opt=%lld live=%lld time=%.3fs\n", o.n,
                o.domain.c_str(), static_cast<long long>(opt.value()),
                static_cast<long long>(std::int64_t(o.n) * o.n - opt.value()),
                dt);
    print_board(*board);
  } else {
    std::printf("n=%d domain=%s infeasible (no stable board in domain)\n", o.n,
                o.domain.c_str());
  }
  return 0;
}

// ------------------------------------------------------------------- ma ----

struct MaOpts {
  int n = 12;
  std::string variant = "be";
  int arity = 2;
  int popsize = 100;
  double px = 0.9;
  double pm = -1;
  int ts_iters = -1;
  bool no_columns = false;
  std::uint64_t seed = 1;
  int replicates = 1;
  int jobs = 0;
  double time_budget = -1;  // <0: default schedule 180+60*max(0, n-12) s
  std::int64_t max_gens = -1;
  std::int64_t target = -1;
  bool dry = false;
  bool no_record = false;
  std::string out = default_record_path();
};

MAConfig ma_config_from(const MaOpts& o) {
  MAConfig c;
  c.n = o.n;
  c.variant = *variant_from_name(o.variant);
  c.arity = o.arity;
  c.popsize = o.popsize;
  c.p_x = o.px;
  c.p_m = o.pm;
  c.ts_iters = o.ts_iters;
  c.use_columns = !o.no_columns;
  c.seed = o.seed;
  c.time_budget_s = o.time_budget < 0 ? default_budget_s(o.n) : o.time_budget;
  if (o.max_gens >= 0) c.max_generations = o.max_gens;
  if (o.target >= 0) c.target_cost = o.target;
  return c;
}

json ma_config_echo(const MAConfig& c, const MaOpts& o) {
  return {{"n", c.n},
          {"variant", variant_name(c.variant)},
          {"arity", c.arity},
          {"popsize", c.popsize},
          {"p_x", c.p_x},
          {"p_m", c.mutation_rate()},
          {"ts_iters", c.tabu_iters()},
          {"use_columns", c.use_columns},
          {"time_budget_s", *c.time_budget_s},
          {"max_generations",
           c.max_generations ? json(*c.max_generations) : json()},
          {"target", c.target_cost ? json(*c.target_cost) : json()},
          {"replicates", o.replicates},
          {"base_seed", o.seed}};
}

void fill_from_trace(RunRecord& rec, const std::vector<TracePoint>& trace) {
  for (const TracePoint& tp : trace) rec.trace.emplace_back(tp.t_s, tp.fit);
}

int run_replicated(int replicates, int jobs,
                   const std::function<RunRecord(int)>& one,
                   const std::string& out, bool no_record,
                   std::int64_t target) {
  if (jobs <= 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, replicates);

  std::atomic<int> next{0};
  std::mutex mu;
  int feasible = 0, hits = 0;
  std::optional<std::int64_t> best;
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < replicates;) {
        RunRecord rec = one(i);
        std::lock_guard<std::mutex> lock(mu);
        emit(rec, out, no_record);
        if (rec.best_cost) {
          ++feasible;
          if (!best || *rec.best_cost < *best) best = *rec.best_cost;
          if (target >= 0 && *rec.best_cost <= target) ++hits;
        }
        std::printf(
            "replicate %d/%d seed=%llu best=%s t_best=%.1fs total=%.1fs\n",
            i + 1, replicates, static_cast<unsigned long long>(rec.seed),
            rec.best_cost ? std::to_string(*rec.best_cost).c_str() : "-",
            rec.time_to_best_s, rec.total_time_s);
      }
    });
  for (auto& t : pool) t.join();

  std::printf("feasible %d/%d", feasible, replicates);
  if (best) std::printf(", best %lld", static_cast<long long>(*best));
  if (target >= 0) std::printf(", reached target %lld in %d/%d",
                               static_cast<long long>(target), hits, replicates);
  std::printf("\n");
  return 0;
}

int cmd_ma(const MaOpts& o) {
  MAConfig base;
  try {
    base = ma_config_from(o);
    base.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ma: %s\n", e.what());
    return 1;
  }
  json cfg = ma_config_echo(base, o);
  if (o.dry) return announce_dry_run(cfg);

  auto one = [&](int i) {
    MAConfig c = base;
    c.seed = Rng::derive(o.seed, static_cast<std::uint64_t>(i));
    MAResult res = ma_run(c);
    RunRecord rec;
    rec.solver = "ma";
    rec.config = cfg;
    rec.config["replicate"] = i;
    rec.seed = c.seed;
    rec.n = c.n;
    rec.total_time_s = res.total_time_s;
    rec.time_to_best_s = res.time_to_best_s;
    if (res.best.feasible()) {
      rec.best_cost = res.best.fit;
      rec.board = res.best.board;
    }
    fill_from_trace(rec, res.trace);
    return rec;
  };
  return run_replicated(o.replicates, o.jobs, one, o.out, o.no_record,
                        o.target);
}

// --------------------------------------------------------------- hybrid ----

struct HybridOpts {
  int n = 12;
  int beam_width = 2000;
  double kma_frac = 0.75;
  std::string bound = "mb";
  int segments = 3;
  int scope_cap = MiniBucketTables::kDefaultScopeCap;
  bool no_mb_cache = false;
  std::string mb_cache = out_dir();
  bool no_ma = false;
  std::int64_t ma_generations = 1000;
  std::string variant = "be";
  int arity = 4;
  int popsize = 100;
  double px = 0.9;
  double pm = -1;
  int ts_iters = -1;
  bool no_columns = false;
  std::uint64_t seed = 1;
  int replicates = 1;
  int jobs = 0;
  double time_budget = -1;  // <0: none (runs all n levels)
  std::int64_t target = -1;
  bool dry = false;
  bool no_record = false;
  std::string out = default_record_path();
};

int cmd_hybrid(const HybridOpts& o) {
  HybridConfig base;
  base.n = o.n;
  base.beam_width = o.beam_width;
  base.ma_level_fraction = o.kma_frac;
  base.ma_enabled = !o.no_ma;
  base.ma_generations = o.ma_generations;
  base.bound = *bound_kind_from_name(o.bound);
  base.segments = o.segments;
  base.scope_cap = o.scope_cap;
  base.mb_cache_dir = o.no_mb_cache ? "" : o.mb_cache;
  base.seed = o.seed;
  if (o.time_budget >= 0) base.time_budget_s = o.time_budget;
  if (o.target >= 0) base.target_cost = o.target;
  base.ma.n = o.n;
  base.ma.variant = *variant_from_name(o.variant);
  base.ma.arity = o.arity;
  base.ma.popsize = o.popsize;
  base.ma.p_x = o.px;
  base.ma.p_m = o.pm;
  base.ma.ts_iters = o.ts_iters;
  base.ma.use_columns = !o.no_columns;
  try {
    base.validate();
    if (base.ma_enabled) {
      MAConfig sub = base.ma;  // what hybrid_run will execute per level
      sub.max_generations = base.ma_generations;
      sub.validate();
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hybrid: %s\n", e.what());
    return 1;
  }

  json cfg = {{"n", o.n},
              {"beam_width", o.beam_width},
              {"kma_frac", o.kma_frac},
              {"ma_start_level", base.ma_start_level()},
              {"bound", o.bound},
              {"segments", o.segments},
              {"scope_cap", o.scope_cap},
              {"mb_cache", base.mb_cache_dir},
              {"ma_enabled", base.ma_enabled},
              {"ma_generations", o.ma_generations},
              {"variant", o.variant},
              {"arity", o.arity},
              {"popsize", o.popsize},
              {"p_x", base.ma.p_x},
              {"p_m", base.ma.mutation_rate()},
              {"ts_iters", base.ma.tabu_iters()},
              {"use_columns", base.ma.use_columns},
              {"time_budget_s",
               base.time_budget_s ? json(*base.time_budget_s) : json()},
              {"target", base.target_cost ? json(*base.target_cost) : json()},
              {"replicates", o.replicates},
              {"base_seed", o.seed}};
  if (o.dry) return announce_dry_run(cfg);

  if (!base.mb_cache_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(base.mb_cache_dir, ec);
  }

  auto one = [&](int i) {
    HybridConfig c = base;
    c.seed = Rng::derive(o.seed, static_cast<std::uint64_t>(i));
    HybridResult res = hybrid_run(c);
    RunRecord rec;
    rec.solver = "hybrid";
    rec.config = cfg;
    rec.config["replicate"] = i;
    rec.seed = c.seed;
    rec.n = c.n;
    rec.total_time_s = res.total_time_s;
    rec.time_to_best_s = res.time_to_best_s;
    if (res.best_cost.is_finite()) {
      rec.best_cost = res.best_cost.value();
      rec.board = res.board;
    }
    fill_from_trace(rec, res.trace);
    return rec;
  };
  return run_replicated(o.replicates, o.jobs, one, o.out, o.no_record,
                        o.target);
}

// --------------------------------------------------------------- verify ----

struct SuiteOutcome {
  const char* name;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
};

SuiteOutcome suite_oracle_exact() {
  SuiteOutcome s{"oracle-exact"};
  for (int n = 3; n <= 4; ++n) {
    OracleResult ref = exhaustive_opt(n);
    BESolution sol = be_solve(n, Domain::full(n));
    ++s.checks;
    if (sol.opt != ref.opt) ++s.violations;
  }
  return s;
}

SuiteOutcome suite_fitness(Rng& rng) {
  SuiteOutcome s{"fitness-normativity"};
  auto check = [&](const Board& b) {
    ++s.checks;
    int n = b.size();
    bool zero_penalty = fitness(b) <= std::int64_t(n) * n;
    bool still = is_still_life(b);
    bool fixpoint = step(b) == embed(b);
    bool cost_ok = total_cost(b).is_finite() == still &&
                   (!still || total_cost(b).value() == fitness(b));
    if (zero_penalty != still || still != fixpoint || !cost_ok) ++s.violations;
  };
  for (std::uint32_t code = 0; code < 512; ++code) {
    Board b(3);
    for (int i = 0; i < 3; ++i) b.set_row(i, (code >> (3 * i)) & 7u);
    check(b);
  }
  for (int i = 0; i < 20000; ++i)
    check(random_board(4 + static_cast<int>(rng.below(7)), rng));
  return s;
}

SuiteOutcome suite_delta(Rng& rng) {
  SuiteOutcome s{"delta-exactness"};
  for (int i = 0; i < 2000; ++i) {
    int n = 3 + static_cast<int>(rng.below(8));
    Board b = random_board(n, rng);
    int ci = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int cj = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    Board f = b;
    f.flip(ci, cj);
    ++s.checks;
    if (fitness(f) - fitness(b) != delta_fitness(b, ci, cj)) ++s.violations;
  }
  return s;
}

SuiteOutcome suite_mb_admissible() {
  SuiteOutcome s{"mb-admissibility"};
  const int n = 5;
  MiniBucketTables mb(n, 2);
  std::vector<std::vector<std::uint32_t>> prefixes;
  std::vector<std::uint32_t> cur;
  // All stable prefixes of length 2..4 over the full row domain.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth >= 2) prefixes.push_back(cur);
    if (depth == 4) return;
    for (std::uint32_t r = 0; r < (1u << n); ++r) {
      cur.push_back(r);
      if (partial_cost(cur, n).is_finite()) self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  for (const auto& p : prefixes) {
    Cost pc = partial_cost(p, n);
    Cost truth = exhaustive_best_completion(p, n).opt;
    Cost lb = mb.lower_bound(p);
    s.checks += 2;
    if (lb > truth) ++s.violations;
    if (lb < pc) ++s.violations;
  }
  return s;
}

SuiteOutcome suite_recombination(Rng& rng) {
  SuiteOutcome s{"recombination-dominance"};
  const int n = 8;
  std::vector<Board> pool;
  while (pool.size() < 12) {
    Individual ind = tabu_search(random_board(n, rng), 4 * n * n, rng);
    if (ind.feasible()) pool.push_back(ind.board);
  }
  for (int t = 0; t < 100; ++t) {
    const Board& x = pool[rng.below(pool.size())];
    const Board& y = pool[rng.below(pool.size())];
    BESolution child = be_recombine({x, y}, true);
    Cost best_parent = std::min(total_cost(x), total_cost(y));
    std::set<std::uint32_t> allowed;
    for (const Board* p : {&x, &y})
      for (int i = 0; i < n; ++i) {
        allowed.insert(p->row(i));
        allowed.insert(p->column(i));
      }
    ++s.checks;
    bool ok = child.opt <= best_parent;
    for (int i = 0; ok && i < n; ++i)
      if (!allowed.count(child.board->row(i))) ok = false;
    if (!ok) ++s.violations;
  }
  return s;
}

int cmd_verify() {
  Rng rng(20260823);
  std::vector<SuiteOutcome> suites;
  suites.push_back(suite_oracle_exact());
  suites.push_back(suite_fitness(rng));
  suites.push_back(suite_delta(rng));
  suites.push_back(suite_mb_admissible());
  suites.push_back(suite_recombination(rng));
  std::uint64_t bad = 0;
  for (const SuiteOutcome& s : suites) {
    std::printf("suite %-24s %8llu checks  %llu violations\n", s.name,
                static_cast<unsigned long long>(s.checks),
                static_cast<unsigned long long>(s.violations));
    bad += s.violations;
  }
  std::printf(bad ? "VERIFY FAILED\n" : "verify ok\n");
  return bad ? 1 : 0;
}

// -------------------------------------------------------------- summary ----

double nearest_rank(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  size_t idx = static_cast<size_t>(q * (v.size() - 1) + 0.5);
  return v[std::min(idx, v.size() - 1)];
}

int cmd_summary(const std::string& path, std::int64_t target) {
  std::vector<RunRecord> recs;
  try {
    recs = read_records(path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "summary: %s\n", e.what());
    return 1;
  }
  std::map<std::pair<std::string, int>, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : recs) groups[{r.solver, r.n}].push_back(&r);

  std::printf("%-8s %4s %5s %9s %6s  %-20s %-20s", "solver", "n", "runs",
              "feasible", "best", "cost q1/med/q3", "t_best q1/med/q3 [s]");
  if (target >= 0) std::printf("  hits<=%lld", static_cast<long long>(target));
  std::printf("\n");
  for (const auto& [key, rs] : groups) {
    std::vector<double> costs, times;
    int hits = 0;
    std::optional<std::int64_t> best;
    for (const RunRecord* r : rs)
      if (r->best_cost) {
        costs.push_back(static_cast<double>(*r->best_cost));
        times.push_back(r->time_to_best_s);
        if (!best || *r->best_cost < *best) best = *r->best_cost;
        if (target >= 0 && *r->best_cost <= target) ++hits;
      }
    std::printf("%-8s %4d %5zu %9zu %6s  ", key.first.c_str(), key.second,
                rs.size(), costs.size(),
                best ? std::to_string(*best).c_str() : "-");
    if (costs.empty()) {
      std::printf("%-20s %-20s", "-", "-");
    } else {
      char cbuf[64], tbuf[64];
      std::snprintf(cbuf, sizeof cbuf, "%.0f/%.0f/%.0f",
                    nearest_rank(costs, 0.25), nearest_rank(costs, 0.5),
                    nearest_rank(costs, 0.75));
      std::snprintf(tbuf, sizeof tbuf, "%.1f/%.1f/%.1f",
                    nearest_rank(times, 0.25), nearest_rank(times, 0.5),
                    nearest_rank(times, 0.75));
      std::printf("%-20s %-20s", cbuf, tbuf);
    }
    if (target >= 0) std::printf("  %d/%zu", hits, rs.size());
    std::printf("\n");
  }
  return 0;
}

// --------------------------------------------------------------- tables ----

int cmd_tables(int n, int segments, int scope_cap, const std::string& dir) {
  try {
    auto t0 = std::chrono::steady_clock::now();
    MiniBucketTables mb(n, segments, scope_cap);
    double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = dir + "/" + MiniBucketTables::cache_name(n, segments);
    if (!mb.save(path)) {
      std::fprintf(stderr, "tables: cannot write %s\n", path.c_str());
      return 1;
    }
    std::printf("built mini-bucket tables n=%d M=%d in %.2fs -> %s (%ju bytes)\n",
                n, segments, dt, path.c_str(),
                static_cast<std::uintmax_t>(std::filesystem::file_size(path)));
    for (const Segment& s : mb.segments())
      std::printf("  segment owns [%d,%d) scope [%d,%d)\n", s.own_start,
                  s.own_start + s.own_len, s.scope_start,
                  s.scope_start + s.scope_len);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tables: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum-density still life toolkit"};
  app.require_subcommand(1);

  auto ex = std::make_shared<ExactOpts>();
  CLI::App* cex = app.add_subcommand("exact", "Exact bucket-elimination solve");
  cex->add_option("--n", ex->n, "board size")->required();
  cex->add_option("--domain", ex->domain, "row domain")
      ->check(CLI::IsMember({"full", "symmetric"}));
  cex->add_flag("--plain", ex->plain, "disable the half-table symmetry trick");
  cex->add_flag("--low-memory", ex->low_memory,
                "second backward pass instead of retained tables");
  cex->add_flag("--force", ex->force, "lift the full-domain size cap");
  cex->add_flag("--dry-run", ex->dry, "validate and echo the config only");
  cex->add_flag("--no-record", ex->no_record, "skip the JSONL record");
  cex->add_option("--out", ex->out, "JSONL record path");
  cex->callback([ex] { std::exit(cmd_exact(*ex)); });

  auto ma = std::make_shared<MaOpts>();
  CLI::App* cma = app.add_subcommand("ma", "Memetic algorithm replicates");
  cma->add_option("--n", ma->n, "board size")->required();
  cma->add_option("--variant", ma->variant, "recombination variant")
      ->check(CLI::IsMember({"ts", "be", "be1f", "be2f"}));
  cma->add_option("--arity", ma->arity, "parents per recombination");
  cma->add_option("--popsize", ma->popsize, "population size");
  cma->add_option("--px", ma->px, "recombination probability");
  cma->add_option("--pm", ma->pm, "per-cell mutation probability (<0: 1/n^2)");
  cma->add_option("--ts-iters", ma->ts_iters, "tabu iterations (<0: n^2)");
  cma->add_flag("--no-columns", ma->no_columns,
                "exclude parent columns from the recombination pool");
  cma->add_option("--seed", ma->seed, "base seed");
  cma->add_option("--replicates", ma->replicates, "independent seeded runs")
      ->check(CLI::PositiveNumber);
  cma->add_option("--jobs", ma->jobs, "parallel workers (0: hardware)");
  cma->add_option("--time-budget", ma->time_budget,
                  "seconds per replicate (<0: 180+60*(n-12))");
  cma->add_option("--max-generations", ma->max_gens,
                  "generation cap (<0: none)");
  cma->add_option("--target", ma->target, "stop once this cost is reached");
  cma->add_flag("--dry-run", ma->dry, "validate and echo the config only");
  cma->add_flag("--no-record", ma->no_record, "skip the JSONL record");
  cma->add_option("--out", ma->out, "JSONL record path");
  cma->callback([ma] { std::exit(cmd_ma(*ma)); });

  auto hy = std::make_shared<HybridOpts>();
  CLI::App* chy =
      app.add_subcommand("hybrid", "Beam search interleaved with memetic runs");
  chy->add_option("--n", hy->n, "board size")->required();
  chy->add_option("--beam-width", hy->beam_width, "beam width");
  chy->add_option("--kma-frac", hy->kma_frac,
                  "level fraction where memetic runs start");
  chy->add_option("--bound", hy->bound, "partial-solution bound")
      ->check(CLI::IsMember({"simple", "mb"}));
  chy->add_option("--segments", hy->segments, "mini-bucket segment count");
  chy->add_option("--scope-cap", hy->scope_cap, "max scope width in bits");
  chy->add_flag("--no-mb-cache", hy->no_mb_cache,
                "do not persist mini-bucket tables");
  chy->add_option("--mb-cache", hy->mb_cache, "mini-bucket table cache dir");
  chy->add_flag("--no-ma", hy->no_ma, "beam search only");
  chy->add_option("--ma-generations", hy->ma_generations,
                  "generations per memetic run");
  chy->add_option("--variant", hy->variant, "inner recombination variant")
      ->check(CLI::IsMember({"ts", "be", "be1f", "be2f"}));
  chy->add_option("--arity", hy->arity, "parents per recombination");
  chy->add_option("--popsize", hy->popsize, "inner population size");
  chy->add_option("--px", hy->px, "recombination probability");
  chy->add_option("--pm", hy->pm, "per-cell mutation probability (<0: 1/n^2)");
  chy->add_option("--ts-iters", hy->ts_iters, "tabu iterations (<0: n^2)");
  chy->add_flag("--no-columns", hy->no_columns,
                "exclude parent columns from the recombination pool");
  chy->add_option("--seed", hy->seed, "base seed");
  chy->add_option("--replicates", hy->replicates, "independent seeded runs")
      ->check(CLI::PositiveNumber);
  chy->add_option("--jobs", hy->jobs, "parallel workers (0: hardware)");
  chy->add_option("--time-budget", hy->time_budget,
                  "seconds per replicate (<0: no limit, n levels)");
  chy->add_option("--target", hy->target, "stop once this cost is reached");
  chy->add_flag("--dry-run", hy->dry, "validate and echo the config only");
  chy->add_flag("--no-record", hy->no_record, "skip the JSONL record");
  chy->add_option("--out", hy->out, "JSONL record path");
  chy->callback([hy] { std::exit(cmd_hybrid(*hy)); });

  CLI::App* cvf = app.add_subcommand("verify", "Desk-scale self-check suites");
  cvf->callback([] { std::exit(cmd_verify()); });

  auto sm_path = std::make_shared<std::string>(default_record_path());
  auto sm_target = std::make_shared<std::int64_t>(-1);
  CLI::App* csm = app.add_subcommand("summary", "Aggregate a JSONL record log");
  csm->add_option("--in", *sm_path, "JSONL record path");
  csm->add_option("--target", *sm_target, "count runs reaching this cost");
  csm->callback([sm_path, sm_target] {
    std::exit(cmd_summary(*sm_path, *sm_target));
  });

  auto tb = std::make_shared<std::tuple<int, int, int, std::string>>(
      12, 3, MiniBucketTables::kDefaultScopeCap, out_dir());
  CLI::App* ctb =
      app.add_subcommand("tables", "Prebuild mini-bucket suffix tables");
  ctb->add_option("--n", std::get<0>(*tb), "board size")->required();
  ctb->add_option("--segments", std::get<1>(*tb), "segment count");
  ctb->add_option("--scope-cap", std::get<2>(*tb), "max scope width in bits");
  ctb->add_option("--dir", std::get<3>(*tb), "cache directory");
  ctb->callback([tb] {
    std::exit(cmd_tables(std::get<0>(*tb), std::get<1>(*tb), std::get<2>(*tb),
                         std::get<3>(*tb)));
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
