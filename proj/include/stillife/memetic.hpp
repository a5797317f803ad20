#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stillife/board.hpp"
#include "stillife/bucket_elim.hpp"
#include "stillife/life.hpp"
#include "stillife/rng.hpp"

namespace stillife {

struct Individual {
  Board board;
  FitnessValue fit;

  static Individual evaluated(Board b) {
    FitnessValue f = fitness(b);
    return Individual{std::move(b), f};
  }
  // Zero penalty part <=> still life; a penalized board scores >= 5n^4.
  bool feasible() const {
    return fit <= std::int64_t(board.size()) * board.size();
  }
};

enum class Variant {
  ts,     // blind crossover, mutation after recombination
  be,     // exact recombination always
  be_1f,  // exact recombination when at least one parent is feasible
  be_2f,  // exact recombination only when all parents are feasible
};

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

struct MAConfig {
  int n = 12;
  Variant variant = Variant::be;
  int arity = 2;               // parents per recombination (2 or 4)
  int popsize = 100;
  double p_x = 0.9;            // recombination probability per offspring
  double p_m = -1;             // per-cell mutation probability; <0 = 1/n^2
  int ts_iters = -1;           // tabu iterations per improvement; <0 = n^2
  bool use_columns = true;     // admit parent columns into the recombination pool
  std::uint64_t seed = 1;

  // Stop criteria; at least one of the first two must be set.
  std::optional<double> time_budget_s;
  std::optional<std::int64_t> max_generations;
  std::optional<std::int64_t> target_cost;  // stop once best fitness <= target

  double mutation_rate() const { return p_m >= 0 ? p_m : 1.0 / (n * n); }
  int tabu_iters() const { return ts_iters >= 0 ? ts_iters : n * n; }
  void validate() const;  // throws std::invalid_argument
};

struct TracePoint {
  double t_s;
  std::int64_t generation;
  FitnessValue fit;
};

struct MAResult {
  Individual best;
  std::vector<TracePoint> trace;  // best-so-far improvements, non-increasing
  std::int64_t generations = 0;
  double total_time_s = 0;
  double time_to_best_s = 0;
};

// Tabu search over single-cell flips: every iteration scans all n^2 flips via
// delta_fitness, applies the best admissible one (non-tabu, or tabu but
// improving on the best seen this run), and marks the cell tabu for a random
// tenure in [n/2, 3n/2]. Uphill moves are taken when nothing better exists.
// Returns the best board seen.
Individual tabu_search(const Board& start, int iters, Rng& rng);

// Each cell flips independently with probability p.
Board mutate(const Board& b, double p, Rng& rng);

// Two-dimensional two-point crossover: cut the grid at (cut_i, cut_j); the
// child takes x's top-left and bottom-right quadrants and y's other two.
Board blind_crossover(const Board& x, const Board& y, int cut_i, int cut_j);
Board blind_crossover(const Board& x, const Board& y, Rng& rng);

// Binary tournament: two distinct members drawn uniformly, lower fitness
// wins, ties favor the first drawn. Returns the winner's index.
int tournament_select(const std::vector<Individual>& pop, Rng& rng);

// Variant dispatch around be_recombine: the feasibility gates look at the
// individuals handed in (the memetic loop passes mutated copies), and any
// failed gate or empty pool falls back to blind crossover of the first two.
Board recombine(const std::vector<Individual>& parents, const MAConfig& cfg,
                Rng& rng, BEStats* stats = nullptr);

// Steady-state memetic loop: one offspring per generation (recombination with
// probability p_x, else a mutated clone), improved by tabu search, replacing
// the worst member when better and not already present. The population never
// contains duplicate boards. An initial population (size popsize, unique,
// evaluated) may be supplied; otherwise random boards improved by tabu search
// seed it.
MAResult ma_run(const MAConfig& cfg, Rng& rng,
                std::optional<std::vector<Individual>> initial = std::nullopt);
MAResult ma_run(const MAConfig& cfg);  // fresh rng from cfg.seed

}  // namespace stillife
