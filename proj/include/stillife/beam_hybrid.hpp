#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stillife/board.hpp"
#include "stillife/cost.hpp"
#include "stillife/memetic.hpp"
#include "stillife/minibucket.hpp"
#include "stillife/wcsp.hpp"

namespace stillife {

// A beam entry: a prefix of rows with its cached partial cost plus the
// selection key. The bound is the partial cost, optionally sharpened by
// mini-bucket suffix tables, and becomes the exact total at the last level.
struct BeamNode {
  PartialSolution part;
  Cost bound = Cost::inf();
};

// Strict weak order used for beam selection: bound first, then the row
// vector lexicographically so selection is deterministic.
bool node_less(const BeamNode& a, const BeamNode& b);

// Keeps the k smallest nodes under node_less from a stream of candidates.
// Equivalent to collecting everything, sorting, and truncating to k; nodes
// with infinite bound survive only while fewer than k better ones exist.
class BeamSelector {
 public:
  explicit BeamSelector(int capacity);

  // Cheap pre-test: false means a node with this bound is rejected for sure
  // (ties still need the full comparison, so true does not promise a seat).
  bool may_accept(Cost bound) const;
  void offer(BeamNode node);
  std::vector<BeamNode> take_sorted();  // ascending node_less, clears state

 private:
  size_t cap_;
  std::vector<BeamNode> heap_;  // max-heap under node_less
};

enum class BoundKind { simple, mb };
const char* bound_kind_name(BoundKind k);
std::optional<BoundKind> bound_kind_from_name(const std::string& name);

struct HybridConfig {
  int n = 12;
  int beam_width = 2000;
  // Memetic runs start at level ceil(ma_level_fraction * n) and repeat at
  // every later level, seeded from the beam front.
  double ma_level_fraction = 0.75;
  bool ma_enabled = true;
  std::int64_t ma_generations = 1000;
  MAConfig ma;  // variant, arity, popsize, tabu settings for the inner runs

  BoundKind bound = BoundKind::mb;
  int segments = 3;
  int scope_cap = MiniBucketTables::kDefaultScopeCap;
  std::string mb_cache_dir;  // empty: build suffix tables in memory only

  std::uint64_t seed = 1;
  std::optional<double> time_budget_s;
  std::optional<std::int64_t> target_cost;  // stop once matched or beaten

  int ma_start_level() const;
  void validate() const;  // throws std::invalid_argument
};

// The prefix plus uniformly random remaining rows over the full row space
// (the memetic phase is not restricted to palindromes).
Board complete_randomly(const PartialSolution& partial, int n, Rng& rng);

struct HybridResult {
  Cost best_cost = Cost::inf();
  std::optional<Board> board;
  std::vector<TracePoint> trace;  // generation field carries the beam level
  int levels_completed = 0;
  int ma_runs = 0;
  double total_time_s = 0;
  double time_to_best_s = 0;
};

// Beam search over vertically symmetric row prefixes, interleaved with
// memetic runs over full boards seeded from the beam front. Levels advance
// 1..n; at each level all palindromic next rows extend every finite-bound
// node and the selector keeps beam_width of them. Complete boards are folded
// into the incumbent at the last level and after every memetic run.
// Deterministic for a fixed config.
HybridResult hybrid_run(const HybridConfig& cfg);

}  // namespace stillife
