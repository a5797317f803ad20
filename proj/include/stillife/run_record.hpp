#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "stillife/board.hpp"

namespace stillife {

// One solver run, serialized as a single JSON line so sweeps are append-only
// and crash-tolerant. Self-validating: the embedded board must re-evaluate to
// the reported cost, and the trace must be time-ordered and non-increasing.
struct RunRecord {
  static constexpr int kSchemaVersion = 1;

  std::string solver;      // "exact", "ma", "hybrid"
  nlohmann::json config;   // effective configuration echo
  std::uint64_t seed = 0;
  int n = 0;
  std::optional<std::int64_t> best_cost;  // set iff a feasible board was found
  std::optional<Board> board;
  double time_to_best_s = 0;
  double total_time_s = 0;
  // (seconds, best-so-far value); fitness scale, which equals the dead-cell
  // cost once feasible.
  std::vector<std::pair<double, std::int64_t>> trace;

  bool feasible() const { return best_cost.has_value(); }
  void validate() const;  // throws std::logic_error on any inconsistency
  nlohmann::json to_json() const;
  static RunRecord from_json(const nlohmann::json& j);
};

void append_record(const std::string& path, const RunRecord& rec);
std::vector<RunRecord> read_records(const std::string& path);

}  // namespace stillife
