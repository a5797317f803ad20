#include "stillife/run_record.hpp"

#include <fstream>
#include <stdexcept>

#include "stillife/wcsp.hpp"

namespace stillife {

void RunRecord::validate() const {
  if (best_cost.has_value() != board.has_value())
    throw std::logic_error("record: cost and board must come together");
  if (board) {
    if (board->size() != n)
      throw std::logic_error("record: board size disagrees with n");
    Cost c = total_cost(*board);
    if (!c.is_finite() || c.value() != *best_cost)
      throw std::logic_error("record: board does not re-evaluate to best_cost");
  }
  for (size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].first < trace[i - 1].first)
      throw std::logic_error("record: trace times must be non-decreasing");
    if (trace[i].second > trace[i - 1].second)
      throw std::logic_error("record: trace values must be non-increasing");
  }
}

nlohmann::json RunRecord::to_json() const {
  validate();
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["solver"] = solver;
  j["config"] = config;
  j["seed"] = seed;
  j["n"] = n;
  j["feasible"] = feasible();
  j["best_cost"] = best_cost ? nlohmann::json(*best_cost) : nlohmann::json();
  if (board) {
    j["board"] = {{"text", board->to_lines()}, {"rle", board->to_rle()}};
  } else {
    j["board"] = nullptr;
  }
  j["time_to_best_s"] = time_to_best_s;
  j["total_time_s"] = total_time_s;
  auto& tr = j["trace"] = nlohmann::json::array();
  for (const auto& [t, v] : trace) tr.push_back({{"t_s", t}, {"value", v}});
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::logic_error("record: unknown schema version");
  RunRecord r;
  r.solver = j.at("solver").get<std::string>();
  r.config = j.at("config");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.n = j.at("n").get<int>();
  if (!j.at("best_cost").is_null())
    r.best_cost = j.at("best_cost").get<std::int64_t>();
  if (!j.at("board").is_null()) {
    std::string text;
    for (const auto& line : j.at("board").at("text"))
      text += line.get<std::string>() + "\n";
    r.board = Board::parse(text);
    if (j.at("board").at("rle").get<std::string>() != r.board->to_rle())
      throw std::logic_error("record: RLE disagrees with board text");
  }
  if (j.at("feasible").get<bool>() != r.best_cost.has_value())
    throw std::logic_error("record: feasible flag disagrees with best_cost");
  r.time_to_best_s = j.at("time_to_best_s").get<double>();
  r.total_time_s = j.at("total_time_s").get<double>();
  for (const auto& tp : j.at("trace"))
    r.trace.emplace_back(tp.at("t_s").get<double>(),
                         tp.at("value").get<std::int64_t>());
  r.validate();
  return r;
}

void append_record(const std::string& path, const RunRecord& rec) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open record file: " + path);
  out << rec.to_json().dump() << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<RunRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record file: " + path);
  std::vector<RunRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(RunRecord::from_json(nlohmann::json::parse(line)));
  }
  return out;
}

}  // namespace stillife
