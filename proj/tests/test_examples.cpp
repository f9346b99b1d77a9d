#include <catch2/catch_amalgamated.hpp>

#include "exq/examples.hpp"

using namespace exq;

TEST_CASE("SL(4) example report") {
  ExampleReport rep = run_example_sl4();
  CAPTURE(rep.example);
  for (const auto& f : rep.facts) {
    CAPTURE(f.name, f.computed, f.expected);
    CHECK(f.pass);
  }
  REQUIRE(rep.all_pass());
  REQUIRE_FALSE(rep.external_fact_failed());
}

TEST_CASE("GL(n) example reports") {
  for (int n = 1; n <= 4; ++n) {
    ExampleReport rep = run_example_gln(n);
    for (const auto& f : rep.facts) {
      CAPTURE(n, f.name, f.computed, f.expected);
      CHECK(f.pass);
    }
    REQUIRE(rep.all_pass());
  }
  REQUIRE_THROWS(run_example_gln(7));
  REQUIRE_THROWS(run_example_gln(0));
}

TEST_CASE("lowest cell example report") {
  SECTION("default GL(3) datum") {
    ExampleReport rep = run_example_lowest_cell_default();
    for (const auto& f : rep.facts) {
      CAPTURE(f.name, f.computed, f.expected);
      CHECK(f.pass);
    }
    REQUIRE(rep.all_pass());
  }
  SECTION("rank zero datum gives an empty passing report") {
    RootDatum rd;
    rd.rank = 0;
    rd.name = "rank0";
    InertialDatum chi;
    ExampleReport rep = run_example_lowest_cell(rd, chi);
    REQUIRE(rep.all_pass());
  }
  SECTION("klein example context") {
    ExampleReport rep = run_example_lowest_cell(pgl_datum(4), sl4_example_chi(), WsMode::stabilizer);
    for (const auto& f : rep.facts) {
      CAPTURE(f.name, f.computed, f.expected);
      CHECK(f.pass);
    }
    REQUIRE(rep.all_pass());
  }
}

TEST_CASE("reports are deterministic") {
  ExampleReport a = run_example_sl4();
  ExampleReport b = run_example_sl4();
  REQUIRE(a.facts.size() == b.facts.size());
  for (std::size_t i = 0; i < a.facts.size(); ++i) {
    REQUIRE(a.facts[i].name == b.facts[i].name);
    REQUIRE(a.facts[i].computed == b.facts[i].computed);
  }
}
