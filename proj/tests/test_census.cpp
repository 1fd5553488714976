#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "verocensus/census.hpp"
#include "verocensus/tabledata.hpp"

using namespace vrc;

TEST_CASE("formula evaluation is exact") {
  CHECK(eval_formula("q+1", 3) == 4);
  CHECK(eval_formula("q^3+(3*q^2+q)/2", 3) == 42);
  CHECK(eval_formula("(q^2-q)/2", 3) == 3);
  CHECK(eval_formula("q^4-q^2", 3) == 72);
  CHECK(eval_formula("q^2*(q-1)*(2*q^2+3*q+1)/(2*(q+1))", 3) == 63);
  CHECK(eval_formula("-q+5", 3) == 2);
  CHECK(eval_formula("q^2*(q^2-1)*(q^2-2)/24", 3) == 21);
  CHECK_THROWS_AS(eval_formula("q/2", 3), std::domain_error);
  CHECK_THROWS_AS(eval_formula("q+", 3), std::invalid_argument);
  CHECK_THROWS_AS(eval_formula("((q)", 3), std::invalid_argument);
}

TEST_CASE("table definitions are loadable") {
  const TableDef& t1 = table_def("T1");
  CHECK(t1.parity == "odd");
  CHECK(t1.rows.size() == 4);
  CHECK(t1.row_values("P1", 3) == std::vector<long long>{4, 42, 3, 72});
  CHECK(table_def("T4").rows.size() == 15);
  CHECK_THROWS_AS(table_def("T9"), std::invalid_argument);
  CHECK(orbit_size_row("points_odd", 3) ==
        std::vector<long long>{13, 78, 39, 234});
  CHECK(orbit_size_row("hyperplanes", 2) ==
        std::vector<long long>{7, 21, 7, 28});
}

TEST_CASE("point tables reproduce") {
  const FieldCtx f3(3, 1);
  const TableReport t1 = reproduce_table("T1", f3);
  CHECK(t1.pass);
  // Exhaustive cells present at q=3.
  bool saw_exhaustive = false;
  for (const CellResult& c : t1.cells)
    saw_exhaustive = saw_exhaustive || c.col == "exhaustive_od4_matches";
  CHECK(saw_exhaustive);

  const FieldCtx f2(2, 1);
  CHECK(reproduce_table("T2", f2).pass);
  CHECK_THROWS_AS(reproduce_table("T1", f2), std::invalid_argument);
  CHECK_THROWS_AS(reproduce_table("T2", f3), std::invalid_argument);

  // Representative-only mode above the threshold.
  const FieldCtx f5(5, 1);
  CensusConfig cheap;
  cheap.exhaustive_point_max_q = 3;
  const TableReport t1_reps = reproduce_table("T1", f5, cheap);
  CHECK(t1_reps.pass);
  for (const CellResult& c : t1_reps.cells)
    CHECK(c.col != "exhaustive_od4_matches");
}

TEST_CASE("web and line tables reproduce") {
  const FieldCtx f3(3, 1);
  CHECK(reproduce_table("T3", f3).pass);
  CHECK(reproduce_table("T5", f3).pass);
  const FieldCtx f2(2, 1);
  CHECK(reproduce_table("T4", f2).pass);
  CHECK(reproduce_table("T6", f2).pass);
  const FieldCtx f4(2, 2);
  CHECK(reproduce_table("T6", f4).pass);
}

TEST_CASE("hyperplane line-census tables reproduce") {
  const FieldCtx f3(3, 1);
  const TableReport odd = reproduce_table("OD2H_odd", f3);
  CHECK(odd.pass);
  CHECK(odd.cells.size() == 4 * 16);  // 15 rows + column sum, per class

  const FieldCtx f2(2, 1);
  CHECK(reproduce_table("OD2H_even", f2).pass);

  CensusConfig cfg;
  cfg.od1_max_q = 3;
  const FieldCtx f4(2, 2);
  CHECK_THROWS_AS(reproduce_table("OD2H_even", f4, cfg),
                  std::invalid_argument);
}

TEST_CASE("solid duality at q=3") {
  const FieldCtx f3(3, 1);
  const TableReport t7 = solid_duality_check(f3);
  CHECK(t7.pass);
  const FieldCtx f2(2, 1);
  CHECK_THROWS_AS(solid_duality_check(f2), std::invalid_argument);
}

TEST_CASE("corollary suite") {
  const FieldCtx f3(3, 1);
  const TableReport odd = corollary_suite(f3);
  CHECK(odd.pass);

  // q=2: every clause holds except the joint completeness of
  // (double_lines, nonsingular), where the rank-1 and the generic
  // rank-2 squab classes tie at (q+1, q^4-q^2).
  const FieldCtx f2(2, 1);
  const TableReport even = corollary_suite(f2);
  CHECK_FALSE(even.pass);
  for (const CellResult& c : even.cells) {
    if (c.row.find("(double_lines, nonsingular) pair") == 0) {
      CHECK_FALSE(c.match);
      CHECK(c.note.find("P1") != std::string::npos);
      CHECK(c.note.find("P2s") != std::string::npos);
    } else {
      CHECK(c.match);
    }
  }
}

TEST_CASE("report serialization") {
  const FieldCtx f2(2, 1);
  const TableReport t = reproduce_table("T2", f2);
  const std::string j = report_to_json(t);
  CHECK(j.find("\"id\": \"T2\"") != std::string::npos);
  CHECK(j.find("\"pass\": true") != std::string::npos);
  const std::string csv = report_to_csv(t);
  CHECK(csv.rfind("table,q,row,col", 0) == 0);
  const std::string md = report_to_markdown(t);
  CHECK(md.find("| P1 |") != std::string::npos);
}

TEST_CASE("config file round trip") {
  const std::string path = "census_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"oracle_max_q": 3, "od1_max_q": 2})";
  }
  const CensusConfig cfg = CensusConfig::from_file(path);
  CHECK(cfg.oracle_max_q == 3);
  CHECK(cfg.od1_max_q == 2);
  CHECK(cfg.max_q == FieldCtx::kDefaultBound);  // untouched default
  std::remove(path.c_str());
  CHECK_THROWS_AS(CensusConfig::from_file("missing_config.json"),
                  std::runtime_error);
}

TEST_CASE("census id lists") {
  const auto odd = census_ids(false);
  CHECK(odd == std::vector<std::string>{"T1", "T3", "T5", "OD2H_odd",
                                        "T7check", "corollaries"});
  const auto even = census_ids(true);
  CHECK(even == std::vector<std::string>{"T2", "T4", "T6", "OD2H_even",
                                         "corollaries"});
}

TEST_CASE("reports are identical across worker counts") {
  const FieldCtx f3(3, 1);
  setenv("VEROCENSUS_WORKERS", "1", 1);
  const std::string one = report_to_json(reproduce_table("T1", f3));
  setenv("VEROCENSUS_WORKERS", "3", 1);
  const std::string three = report_to_json(reproduce_table("T1", f3));
  const std::string cor1 = report_to_json(corollary_suite(f3));
  setenv("VEROCENSUS_WORKERS", "1", 1);
  const std::string cor3 = report_to_json(corollary_suite(f3));
  unsetenv("VEROCENSUS_WORKERS");
  CHECK(one == three);
  CHECK(cor1 == cor3);
}

TEST_CASE("stored tables satisfy the global sum identities") {
  // Row sums: a point lies on (q^5-1)/(q-1) hyperplanes, a line on
  // q^3+q^2+q+1, and a line carries q+1 points.
  for (const long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL}) {
    for (const TableRow& r : table_def("T1").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == num_points_pg(4, q));
    }
    for (const TableRow& r : table_def("T3").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == q * q * q + q * q + q + 1);
    }
    for (const TableRow& r : table_def("T5").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == q + 1);
    }
    // Column sums of the hyperplane line-census table hit the line
    // count of PG(4,q).
    const TableDef& od2h = table_def("OD2H_odd");
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (const TableRow& r : od2h.rows) s += eval_formula(r.cells[j], q);
      CHECK(s == num_lines_pg(4, q));
    }
  }
  for (const long long q : {2LL, 4LL, 8LL, 16LL}) {
    for (const TableRow& r : table_def("T2").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == num_points_pg(4, q));
    }
    for (const TableRow& r : table_def("T4").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == q * q * q + q * q + q + 1);
    }
    for (const TableRow& r : table_def("T6").rows) {
      long long s = 0;
      for (const auto& c : r.cells) s += eval_formula(c, q);
      CHECK(s == q + 1);
    }
    const TableDef& od2h = table_def("OD2H_even");
    for (int j = 0; j < 4; ++j) {
      long long s = 0;
      for (const TableRow& r : od2h.rows) s += eval_formula(r.cells[j], q);
      CHECK(s == num_lines_pg(4, q));
    }
  }
}

TEST_CASE("stored orbit sizes sum to the space sizes") {
  for (const long long q : {3LL, 5LL, 7LL, 9LL}) {
    long long s = 0;
    for (const long long n : orbit_size_row("points_odd", q)) s += n;
    CHECK(s == num_points_pg(5, q));
  }
  for (const long long q : {2LL, 4LL, 8LL}) {
    long long s = 0;
    for (const long long n : orbit_size_row("points_even", q)) s += n;
    CHECK(s == num_points_pg(5, q));
  }
}

TEST_CASE("hyperplane line censuses at q=5") {
  CensusConfig cfg;
  cfg.od1_max_q = 5;
  const FieldCtx f5(5, 1);
  CHECK(reproduce_table("OD2H_odd", f5, cfg).pass);
}
