#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "doctest.h"
#include "stillife/bucket_elim.hpp"
#include "stillife/run_record.hpp"
#include "stillife/wcsp.hpp"

using namespace stillife;
using nlohmann::json;

namespace {

RunRecord sample_record() {
  BESolution s = be_solve(4, Domain::full(4));
  RunRecord r;
  r.solver = "exact";
  r.config = json{{"n", 4}, {"solver", "exact"}};
  r.seed = 42;
  r.n = 4;
  r.best_cost = s.opt.value();
  r.board = s.board;
  r.time_to_best_s = 0.25;
  r.total_time_s = 0.5;
  r.trace = {{0.1, 12}, {0.2, 10}, {0.25, 8}};
  return r;
}

}  // namespace

TEST_CASE("records survive the json round trip") {
  RunRecord r = sample_record();
  CHECK_NOTHROW(r.validate());
  CHECK(r.feasible());

  json j = r.to_json();
  CHECK(j.at("schema_version") == RunRecord::kSchemaVersion);
  CHECK(j.at("feasible") == true);
  CHECK(j.at("best_cost") == 8);
  CHECK(j.at("board").at("text").size() == 4);
  CHECK(j.at("trace").size() == 3);
  CHECK(j.at("trace")[0].at("value") == 12);

  RunRecord back = RunRecord::from_json(j);
  CHECK(back.solver == r.solver);
  CHECK(back.config == r.config);
  CHECK(back.seed == r.seed);
  CHECK(back.n == r.n);
  CHECK(back.best_cost == r.best_cost);
  CHECK(back.board == r.board);
  CHECK(back.trace == r.trace);
  CHECK(back.time_to_best_s == r.time_to_best_s);
  CHECK(back.total_time_s == r.total_time_s);
}

TEST_CASE("an infeasible record carries neither cost nor board") {
  RunRecord r = sample_record();
  r.best_cost.reset();
  r.board.reset();
  r.trace.clear();
  CHECK_NOTHROW(r.validate());
  CHECK(!r.feasible());
  json j = r.to_json();
  CHECK(j.at("best_cost").is_null());
  CHECK(j.at("board").is_null());
  CHECK(j.at("feasible") == false);
  RunRecord back = RunRecord::from_json(j);
  CHECK(!back.best_cost.has_value());
  CHECK(!back.board.has_value());
}

TEST_CASE("validation rejects every inconsistency") {
  // Cost without board and board without cost.
  RunRecord r = sample_record();
  r.board.reset();
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  r = sample_record();
  r.best_cost.reset();
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  // Board that does not re-evaluate to the claimed cost.
  r = sample_record();
  r.best_cost = *r.best_cost - 1;
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  // Board size conflicting with n.
  r = sample_record();
  r.n = 5;
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  // Trace going backwards in time or upwards in value.
  r = sample_record();
  r.trace = {{0.2, 10}, {0.1, 8}};
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  r = sample_record();
  r.trace = {{0.1, 10}, {0.2, 11}};
  CHECK_THROWS_AS(r.validate(), std::logic_error);
  // An infeasible board behind a finite cost.
  r = sample_record();
  r.board = Board(4);  // empty boards are feasible but cost 16, not 8
  CHECK_THROWS_AS(r.validate(), std::logic_error);
}

TEST_CASE("tampered json is refused on load") {
  json good = sample_record().to_json();

  json j = good;
  j["schema_version"] = 999;
  CHECK_THROWS_AS(RunRecord::from_json(j), std::logic_error);

  j = good;
  j["feasible"] = false;  // contradicts the present best_cost
  CHECK_THROWS_AS(RunRecord::from_json(j), std::logic_error);

  j = good;
  j["board"]["rle"] = "x = 4, y = 4, rule = B3/S23\n4o!\n";
  CHECK_THROWS_AS(RunRecord::from_json(j), std::logic_error);

  j = good;
  j["best_cost"] = 7;  // board no longer matches
  CHECK_THROWS_AS(RunRecord::from_json(j), std::logic_error);

  j = good;
  j.erase("solver");
  CHECK_THROWS_AS(RunRecord::from_json(j), json::exception);
}

TEST_CASE("jsonl files append and read back in order") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "stillife_rr_test";
  fs::create_directories(dir);
  fs::path file = dir / "runs.jsonl";
  fs::remove(file);

  RunRecord a = sample_record();
  RunRecord b = sample_record();
  b.seed = 43;
  b.solver = "ma";
  RunRecord c = sample_record();
  c.best_cost.reset();
  c.board.reset();
  c.trace.clear();
  c.seed = 44;

  append_record(file.string(), a);
  append_record(file.string(), b);
  append_record(file.string(), c);
  // Blank lines between records are tolerated.
  {
    std::ofstream out(file, std::ios::app);
    out << "\n";
  }
  append_record(file.string(), a);

  auto records = read_records(file.string());
  REQUIRE(records.size() == 4);
  CHECK(records[0].seed == 42);
  CHECK(records[1].seed == 43);
  CHECK(records[1].solver == "ma");
  CHECK(records[2].seed == 44);
  CHECK(!records[2].feasible());
  CHECK(records[3].seed == 42);
  CHECK(records[0].board == a.board);

  CHECK_THROWS_AS(read_records((dir / "absent.jsonl").string()),
                  std::runtime_error);
  // A corrupt line surfaces as a parse error.
  {
    std::ofstream out(file, std::ios::app);
    out << "{not json}\n";
  }
  CHECK_THROWS(read_records(file.string()));

  fs::remove_all(dir);
}
