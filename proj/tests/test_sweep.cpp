#include <cmath>

#include "doctest.h"
#include "opact/errors.hpp"
#include "opact/sweep.hpp"

using namespace opact;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.epsilon = {0.0, 0.4, 0.2};
  s.phi = {0.0, 1.0, 0.5};
  s.runs_per_cell = 3;
  s.seed = 42;
  s.base.n = 40;
  s.base.horizon = 30;
  return s;
}

}  // namespace

TEST_CASE("grid axes are inclusive") {
  CHECK(GridAxis{0.0, 0.5, 0.05}.points().size() == 11);
  CHECK(GridAxis{0.0, 1.0, 0.05}.points().size() == 21);
  auto pts = GridAxis{0.0, 1.0, 0.1}.points();
  CHECK(pts.size() == 11);
  CHECK(pts[3] == 0.3);
  CHECK(pts.back() == 1.0);
}

TEST_CASE("sweep spec validation") {
  auto s = small_spec();
  s.epsilon.step = 0.15;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = small_spec();
  s.runs_per_cell = 0;
  CHECK_THROWS_AS(s.validate(), ConfigError);
  s = small_spec();
  s.phi = {0.6, 0.4, 0.1};
  CHECK_THROWS_AS(s.validate(), ConfigError);
}

TEST_CASE("alignment line classification") {
  CHECK(above_alignment_line(0.25, 0.7));
  CHECK_FALSE(above_alignment_line(0.1, 0.7));
  CHECK(above_alignment_line(0.3, 0.3));
  CHECK(above_alignment_line(0.2, 0.5));  // exactly on the line
  CHECK(above_alignment_line(GridAxis{0.0, 0.5, 0.1}.points()[2], GridAxis{0.0, 1.0, 0.1}.points()[5]));
}

TEST_CASE("run_sweep") {
  auto spec = small_spec();
  auto r = run_sweep(spec);
  CHECK(r.cells.size() == 9);
  CHECK(r.epsilon_count == 3);
  CHECK(r.phi_count == 3);
  for (const auto& c : r.cells) {
    CHECK(c.runs == 3);
    CHECK(c.mean_d >= 0.0);
    CHECK(c.mean_d <= 1.0);
    CHECK(c.std_d >= 0.0);
    if (c.phi == 1.0) CHECK(c.mean_d == 0.0);
  }
  CHECK(r.at(2, 1).epsilon == 0.4);
  CHECK(r.at(2, 1).phi == 0.5);

  SUBCASE("thread count does not change the output") {
    auto p = run_sweep(spec, 4);
    for (std::size_t i = 0; i < r.cells.size(); ++i) {
      CHECK(p.cells[i].mean_d == r.cells[i].mean_d);
      CHECK(p.cells[i].std_d == r.cells[i].std_d);
    }
  }
  SUBCASE("replicate seeds depend only on (master, cell, replicate)") {
    CHECK(replicate_seed(1, 2, 3) == replicate_seed(1, 2, 3));
    CHECK(replicate_seed(1, 2, 3) != replicate_seed(1, 3, 2));
    CHECK(replicate_seed(1, 2, 3) != replicate_seed(2, 2, 3));
  }
}

TEST_CASE("boundary_report") {
  SweepResult r;
  r.cells = {{0.0, 1.0, 0.0, 0.0, 1},   // below line, aligned -> misclassified
             {0.3, 0.3, 0.0, 0.0, 1},   // above, aligned
             {0.1, 0.3, 0.2, 0.0, 1},   // below, divergent
             {0.5, 1.0, 0.05, 0.0, 1}}; // above, divergent -> misclassified
  auto rep = boundary_report(r, 0.01);
  CHECK(rep.above.cells == 2);
  CHECK(rep.below.cells == 2);
  CHECK(rep.above.misclassified == 1);
  CHECK(rep.below.misclassified == 1);
  CHECK(rep.consistent_fraction == 0.5);
  CHECK(rep.above.max_mean_d == 0.05);
  CHECK(rep.below.mean_of_mean_d == doctest::Approx(0.1));
}
