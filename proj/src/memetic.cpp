#include "stillife/memetic.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stillife/oracle.hpp"

namespace stillife {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool contains_board(const std::vector<Individual>& pop, const Board& b) {
  for (const Individual& ind : pop)
    if (ind.board == b) return true;
  return false;
}

int worst_index(const std::vector<Individual>& pop) {
  int w = 0;
  for (int i = 1; i < static_cast<int>(pop.size()); ++i)
    if (pop[static_cast<size_t>(i)].fit > pop[static_cast<size_t>(w)].fit) w = i;
  return w;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::ts: return "ts";
    case Variant::be: return "be";
    case Variant::be_1f: return "be1f";
    case Variant::be_2f: return "be2f";
  }
  return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
  if (name == "ts") return Variant::ts;
  if (name == "be") return Variant::be;
  if (name == "be1f" || name == "be_1f") return Variant::be_1f;
  if (name == "be2f" || name == "be_2f") return Variant::be_2f;
  return std::nullopt;
}

void MAConfig::validate() const {
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("n must be in 1..32");
  if (popsize < 2)
    throw std::invalid_argument("population needs at least 2 members");
  if (arity < 2 || arity > 8)
    throw std::invalid_argument("recombination arity must be in 2..8");
  if (p_x < 0 || p_x > 1)
    throw std::invalid_argument("p_x must be in [0, 1]");
  if (p_m > 1)
    throw std::invalid_argument("p_m must be at most 1");
  if (!time_budget_s && !max_generations)
    throw std::invalid_argument("no stop criterion (time budget or generations)");
  if (time_budget_s && *time_budget_s < 0)
    throw std::invalid_argument("negative time budget");
  if (max_generations && *max_generations < 0)
    throw std::invalid_argument("negative generation limit");
}

Individual tabu_search(const Board& start, int iters, Rng& rng) {
  int n = start.size();
  Board cur = start;
  FitnessValue cur_fit = fitness(cur);
  Board best = cur;
  FitnessValue best_fit = cur_fit;
  // tenure drawn in [n/2, 3n/2], rounded half away from zero
  std::int64_t tenure_lo = std::llround(n / 2.0);
  std::int64_t tenure_hi = std::llround(1.5 * n);
  std::vector<std::int64_t> expiry(static_cast<size_t>(n) * n, -1);

  for (int t = 0; t < iters; ++t) {
    int move = -1;
    FitnessValue move_delta = 0;
    int fallback = -1;
    FitnessValue fallback_delta = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int cell = i * n + j;
        FitnessValue d = delta_fitness(cur, i, j);
        if (fallback < 0 || d < fallback_delta) {
          fallback = cell;
          fallback_delta = d;
        }
        bool tabu = expiry[static_cast<size_t>(cell)] >= t;
        if (tabu && cur_fit + d >= best_fit) continue;  // no aspiration
        if (move < 0 || d < move_delta) {
          move = cell;
          move_delta = d;
        }
      }
    if (move < 0) {  // everything tabu and nothing aspirates: move anyway
      move = fallback;
      move_delta = fallback_delta;
    }
    cur.flip(move / n, move % n);
    cur_fit += move_delta;
    expiry[static_cast<size_t>(move)] = t + rng.uniform(tenure_lo, tenure_hi);
    if (cur_fit < best_fit) {
      best = cur;
      best_fit = cur_fit;
    }
  }
  return Individual{std::move(best), best_fit};
}

Board mutate(const Board& b, double p, Rng& rng) {
  int n = b.size();
  Board out = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.bernoulli(p)) out.flip(i, j);
  return out;
}

Board blind_crossover(const Board& x, const Board& y, int cut_i, int cut_j) {
  int n = x.size();
  if (y.size() != n) throw std::invalid_argument("crossover size mismatch");
  Board child(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool from_x = (i < cut_i && j < cut_j) || (i >= cut_i && j >= cut_j);
      child.set_cell(i, j, (from_x ? x : y).cell(i, j));
    }
  return child;
}

Board blind_crossover(const Board& x, const Board& y, Rng& rng) {
  int n = x.size();
  int cut_i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  int cut_j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  return blind_crossover(x, y, cut_i, cut_j);
}

int tournament_select(const std::vector<Individual>& pop, Rng& rng) {
  int s = static_cast<int>(pop.size());
  if (s < 2) throw std::invalid_argument("tournament needs >= 2 members");
  int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(s)));
  int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(s) - 1));
  if (j >= i) ++j;
  return pop[static_cast<size_t>(j)].fit < pop[static_cast<size_t>(i)].fit ? j
                                                                           : i;
}

Board recombine(const std::vector<Individual>& parents, const MAConfig& cfg,
                Rng& rng, BEStats* stats) {
  if (static_cast<int>(parents.size()) < 2)
    throw std::invalid_argument("recombination needs >= 2 parents");
  if (cfg.variant != Variant::ts && cfg.n >= 3) {
    int feasible = 0;
    for (const Individual& p : parents) feasible += p.feasible() ? 1 : 0;
    bool gate = cfg.variant == Variant::be ||
                (cfg.variant == Variant::be_1f && feasible >= 1) ||
                (cfg.variant == Variant::be_2f &&
                 feasible == static_cast<int>(parents.size()));
    if (gate) {
      std::vector<Board> boards;
      boards.reserve(parents.size());
      for (const Individual& p : parents) boards.push_back(p.board);
      BESolution sol = be_recombine(boards, cfg.use_columns, stats);
      if (sol.opt.is_finite()) return *sol.board;
      // empty feasible pool: fall through to blind crossover
    }
  }
  return blind_crossover(parents[0].board, parents[1].board, rng);
}

MAResult ma_run(const MAConfig& cfg, Rng& rng,
                std::optional<std::vector<Individual>> initial) {
  cfg.validate();
  auto t0 = Clock::now();
  int n = cfg.n;
  double p_m = cfg.mutation_rate();
  int ts_iters = cfg.tabu_iters();

  std::vector<Individual> pop;
  if (initial) {
    pop = std::move(*initial);
    if (static_cast<int>(pop.size()) != cfg.popsize)
      throw std::invalid_argument("initial population size != popsize");
    for (const Individual& ind : pop) {
      if (ind.board.size() != n)
        throw std::invalid_argument("initial population board size != n");
      if (ind.fit != fitness(ind.board))
        throw std::invalid_argument("initial population fitness out of date");
    }
    for (size_t i = 0; i < pop.size(); ++i)
      for (size_t j = i + 1; j < pop.size(); ++j)
        if (pop[i].board == pop[j].board)
          throw std::invalid_argument("initial population has duplicates");
  } else {
    pop.reserve(static_cast<size_t>(cfg.popsize));
    while (static_cast<int>(pop.size()) < cfg.popsize) {
      Individual ind = tabu_search(random_board(n, rng), ts_iters, rng);
      int guard = 0;
      while (contains_board(pop, ind.board) && guard++ < 50)
        ind = tabu_search(random_board(n, rng), ts_iters, rng);
      while (contains_board(pop, ind.board)) {  // forced perturbation
        ind.board.flip(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                       static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        ind.fit = fitness(ind.board);
      }
      pop.push_back(std::move(ind));
    }
  }

  MAResult res{pop[static_cast<size_t>(0)], {}, 0, 0, 0};
  for (const Individual& ind : pop)
    if (ind.fit < res.best.fit) res.best = ind;
  res.time_to_best_s = seconds_since(t0);
  res.trace.push_back({res.time_to_best_s, 0, res.best.fit});

  auto stop_reached = [&]() {
    if (cfg.target_cost && res.best.fit <= *cfg.target_cost) return true;
    if (cfg.max_generations && res.generations >= *cfg.max_generations)
      return true;
    if (cfg.time_budget_s && seconds_since(t0) >= *cfg.time_budget_s)
      return true;
    return false;
  };

  while (!stop_reached()) {
    ++res.generations;
    Board child(n);
    if (rng.bernoulli(cfg.p_x)) {
      std::vector<Individual> parents;
      parents.reserve(static_cast<size_t>(cfg.arity));
      for (int a = 0; a < cfg.arity; ++a)
        parents.push_back(pop[static_cast<size_t>(tournament_select(pop, rng))]);
      if (cfg.variant == Variant::ts) {
        child = recombine(parents, cfg, rng);
        child = mutate(child, p_m, rng);
      } else {
        // mutation precedes exact recombination so it can still inject noise
        for (Individual& p : parents) {
          p.board = mutate(p.board, p_m, rng);
          p.fit = fitness(p.board);
        }
        child = recombine(parents, cfg, rng);
      }
    } else {
      child = mutate(
          pop[static_cast<size_t>(tournament_select(pop, rng))].board, p_m, rng);
    }
    Individual improved = tabu_search(child, ts_iters, rng);
    assert(improved.fit == fitness(improved.board));  // cached-fitness audit
    int w = worst_index(pop);
    if (improved.fit < pop[static_cast<size_t>(w)].fit &&
        !contains_board(pop, improved.board))
      pop[static_cast<size_t>(w)] = improved;
    if (improved.fit < res.best.fit) {
      res.best = improved;
      res.time_to_best_s = seconds_since(t0);
      res.trace.push_back({res.time_to_best_s, res.generations, res.best.fit});
    }
  }
  res.total_time_s = seconds_since(t0);
  return res;
}

MAResult ma_run(const MAConfig& cfg) {
  Rng rng(cfg.seed);
  return ma_run(cfg, rng, std::nullopt);
}

}  // namespace stillife
