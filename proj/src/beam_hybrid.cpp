#include "stillife/beam_hybrid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "stillife/domain.hpp"
#include "stillife/oracle.hpp"

namespace stillife {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

bool node_less(const BeamNode& a, const BeamNode& b) {
  if (a.bound != b.bound) return a.bound < b.bound;
  return a.part.rows < b.part.rows;
}

BeamSelector::BeamSelector(int capacity) {
  if (capacity < 1) throw std::invalid_argument("beam width must be positive");
  cap_ = static_cast<size_t>(capacity);
  heap_.reserve(cap_ + 1);
}

bool BeamSelector::may_accept(Cost bound) const {
  return heap_.size() < cap_ || bound <= heap_.front().bound;
}

void BeamSelector::offer(BeamNode node) {
  if (heap_.size() < cap_) {
    heap_.push_back(std::move(node));
    std::push_heap(heap_.begin(), heap_.end(), node_less);
    return;
  }
  if (!node_less(node, heap_.front())) return;
  std::pop_heap(heap_.begin(), heap_.end(), node_less);
  heap_.back() = std::move(node);
  std::push_heap(heap_.begin(), heap_.end(), node_less);
}

std::vector<BeamNode> BeamSelector::take_sorted() {
  std::sort_heap(heap_.begin(), heap_.end(), node_less);
  return std::exchange(heap_, {});
}

const char* bound_kind_name(BoundKind k) {
  return k == BoundKind::simple ? "simple" : "mb";
}

std::optional<BoundKind> bound_kind_from_name(const std::string& name) {
  if (name == "simple") return BoundKind::simple;
  if (name == "mb") return BoundKind::mb;
  return std::nullopt;
}

int HybridConfig::ma_start_level() const {
  return static_cast<int>(std::ceil(ma_level_fraction * n));
}

void HybridConfig::validate() const {
  if (n < 3 || n > kMaxN) throw std::invalid_argument("need 3 <= n <= 32");
  if (beam_width < 1) throw std::invalid_argument("beam width must be positive");
  if (ma_enabled && beam_width < ma.popsize)
    throw std::invalid_argument("beam width must cover the memetic population");
  if (ma_level_fraction <= 0 || ma_level_fraction > 1)
    throw std::invalid_argument("memetic level fraction must be in (0, 1]");
  if (ma_generations < 0)
    throw std::invalid_argument("negative memetic generation limit");
  if (bound == BoundKind::mb) {
    if (segments < 2 || 2 * segments > n)
      throw std::invalid_argument("segment count must be in 2..n/2");
    for (const Segment& seg : make_segments(n, segments))
      if (seg.scope_len > scope_cap)
        throw std::invalid_argument(
            "segment scope exceeds the word cap; use more segments");
  }
  if (time_budget_s && *time_budget_s < 0)
    throw std::invalid_argument("negative time budget");
}

namespace {

Cost node_bound(const PartialSolution& part, int n,
                const std::optional<MiniBucketTables>& mb) {
  int k = part.depth();
  if (!part.cost.is_finite()) return Cost::inf();
  if (k == n)
    return part.cost + last_row_cost(part.rows[static_cast<size_t>(k - 2)],
                                     part.rows[static_cast<size_t>(k - 1)], n);
  if (mb && k >= 2)
    return part.cost +
           mb->suffix_bound(k, part.rows[static_cast<size_t>(k - 2)],
                            part.rows[static_cast<size_t>(k - 1)]);
  return part.cost;
}

bool contains_board(const std::vector<Individual>& pop, const Board& b) {
  for (const Individual& p : pop)
    if (p.board == b) return true;
  return false;
}

// Last-resort uniqueness fix: random flips until the board is fresh.
void force_unique(std::vector<Individual>& pop, Individual ind, int n, Rng& rng) {
  while (contains_board(pop, ind.board)) {
    ind.board.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                   static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    ind.fit = fitness(ind.board);
  }
  pop.push_back(std::move(ind));
}

}  // namespace

Board complete_randomly(const PartialSolution& partial, int n, Rng& rng) {
  std::vector<std::uint32_t> rows = partial.rows;
  if (static_cast<int>(rows.size()) > n)
    throw std::invalid_argument("prefix longer than the board");
  while (static_cast<int>(rows.size()) < n)
    rows.push_back(static_cast<std::uint32_t>(rng.next_u64()) & row_mask(n));
  return Board::from_rows(rows, n);
}

HybridResult hybrid_run(const HybridConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  int n = cfg.n;
  HybridResult res;

  std::optional<MiniBucketTables> mb;
  if (cfg.bound == BoundKind::mb) {
    std::string cache;
    if (!cfg.mb_cache_dir.empty()) {
      cache = cfg.mb_cache_dir + "/" + MiniBucketTables::cache_name(n, cfg.segments);
      auto loaded = MiniBucketTables::load(cache);
      if (loaded && loaded->n() == n && loaded->m() == cfg.segments)
        mb = std::move(loaded);
    }
    if (!mb) {
      mb.emplace(n, cfg.segments, cfg.scope_cap);
      if (!cache.empty()) mb->save(cache);
    }
  }

  auto out_of_time = [&]() {
    return cfg.time_budget_s && seconds_since(t0) >= *cfg.time_budget_s;
  };
  auto target_hit = [&]() {
    return cfg.target_cost && res.best_cost.is_finite() &&
           res.best_cost.value() <= *cfg.target_cost;
  };
  auto fold = [&](Cost total, const std::vector<std::uint32_t>& rows,
                  int level, double at_s) {
    if (!total.is_finite()) return;
    if (res.best_cost.is_finite() && total.value() >= res.best_cost.value())
      return;
    res.best_cost = total;
    res.board = Board::from_rows(rows, n);
    res.time_to_best_s = at_s;
    res.trace.push_back({at_s, level, total.value()});
  };

  const Domain palindromes = Domain::symmetric(n);
  int ma_from = cfg.ma_start_level();

  std::vector<BeamNode> beam;
  for (int level = 1; level <= n && !out_of_time() && !target_hit(); ++level) {
    BeamSelector sel(cfg.beam_width);
    if (level == 1) {
      for (std::uint32_t r : palindromes.values()) {
        PartialSolution part{{r}, Cost::finite(0)};
        sel.offer(BeamNode{part, node_bound(part, n, mb)});
      }
    } else {
      for (const BeamNode& parent : beam) {
        if (!parent.bound.is_finite()) continue;  // can never complete
        for (std::uint32_t r : palindromes.values()) {
          PartialSolution child = extended(parent.part, r, n);
          Cost bound = node_bound(child, n, mb);
          if (level == n)
            fold(bound, child.rows, level, seconds_since(t0));
          if (!sel.may_accept(bound)) continue;
          sel.offer(BeamNode{std::move(child), bound});
        }
      }
    }
    beam = sel.take_sorted();
    res.levels_completed = level;
    if (beam.empty()) break;
    if (target_hit() || out_of_time()) break;

    if (cfg.ma_enabled && level >= ma_from && cfg.ma_generations > 0) {
      Rng rng(Rng::derive(cfg.seed, static_cast<std::uint64_t>(level)));
      MAConfig sub = cfg.ma;
      sub.n = n;
      sub.max_generations = cfg.ma_generations;
      sub.target_cost = cfg.target_cost;
      if (cfg.time_budget_s) {
        double left = *cfg.time_budget_s - seconds_since(t0);
        if (left <= 0) break;
        sub.time_budget_s = left;
      }

      std::vector<Individual> seeds;
      seeds.reserve(static_cast<size_t>(sub.popsize));
      for (const BeamNode& node : beam) {
        if (static_cast<int>(seeds.size()) >= sub.popsize) break;
        if (!node.bound.is_finite()) break;
        // Duplicates after completion are re-randomized from the same prefix.
        Individual ind = tabu_search(complete_randomly(node.part, n, rng),
                                     sub.tabu_iters(), rng);
        int guard = 0;
        while (contains_board(seeds, ind.board) && guard++ < 20)
          ind = tabu_search(complete_randomly(node.part, n, rng),
                            sub.tabu_iters(), rng);
        force_unique(seeds, std::move(ind), n, rng);
      }
      while (static_cast<int>(seeds.size()) < sub.popsize) {
        Individual ind = tabu_search(random_board(n, rng), sub.tabu_iters(), rng);
        int guard = 0;
        while (contains_board(seeds, ind.board) && guard++ < 20)
          ind = tabu_search(random_board(n, rng), sub.tabu_iters(), rng);
        force_unique(seeds, std::move(ind), n, rng);
      }

      double ma_start = seconds_since(t0);
      MAResult ma = ma_run(sub, rng, std::move(seeds));
      ++res.ma_runs;
      for (const TracePoint& tp : ma.trace) {
        if (res.best_cost.is_finite() && tp.fit >= res.best_cost.value())
          continue;
        if (tp.fit > std::int64_t(n) * n) continue;  // infeasible incumbent
        res.best_cost = Cost::finite(tp.fit);
        res.time_to_best_s = ma_start + tp.t_s;
        res.trace.push_back({ma_start + tp.t_s, level, tp.fit});
      }
      if (ma.best.feasible() && res.best_cost.is_finite() &&
          ma.best.fit == res.best_cost.value()) {
        // The trace fold above can only have lowered best_cost to the memetic
        // best; attach its board unless the incumbent already matches.
        if (!res.board || total_cost(*res.board) != res.best_cost)
          res.board = ma.best.board;
      }
    }
  }

  res.total_time_s = seconds_since(t0);
  if (res.board) {
    if (total_cost(*res.board) != res.best_cost)
      throw std::logic_error("hybrid incumbent does not re-evaluate to its cost");
  } else if (res.best_cost.is_finite()) {
    throw std::logic_error("finite incumbent without a board");
  }
  return res;
}

}  // namespace stillife
