#include <set>
#include <sstream>

#include "doctest.h"
#include "opact/errors.hpp"
#include "opact/graph.hpp"

using namespace opact;

TEST_CASE("complete_graph edge counts") {
  CHECK(complete_graph(1).edge_count() == 0);
  auto k4 = complete_graph(4);
  CHECK(k4.edge_count() == 6);
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v) CHECK(k4.has_edge(u, v) == (u != v));
  CHECK(complete_graph(300).edge_count() == 44850);
  CHECK(complete_graph(300).is_complete());
  CHECK_THROWS_AS(complete_graph(0), ConfigError);
}

TEST_CASE("Graph rejects invalid edges") {
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), ConfigError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), ConfigError);
  std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, range), ConfigError);
}

TEST_CASE("watts_strogatz") {
  SUBCASE("p = 0 is the ring lattice") {
    Rng rng(1);
    auto g = watts_strogatz(20, 4, 0.0, rng);
    CHECK(g.edge_count() == 40);
    for (NodeId u = 0; u < 20; ++u) {
      CHECK(g.degree(u) == 4);
      CHECK(g.has_edge(u, (u + 1) % 20));
      CHECK(g.has_edge(u, (u + 2) % 20));
    }
  }
  SUBCASE("edge count is n k / 2 for every p") {
    for (double p : {0.0, 0.1, 0.5, 0.8, 1.0}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed);
        CHECK(watts_strogatz(300, 6, p, rng).edge_count() == 900);
      }
    }
  }
  SUBCASE("rewiring makes degrees non-uniform") {
    Rng rng(3);
    auto g = watts_strogatz(300, 6, 0.8, rng);
    std::set<std::size_t> degrees;
    for (NodeId u = 0; u < 300; ++u) degrees.insert(g.degree(u));
    CHECK(degrees.size() > 1);
  }
  SUBCASE("dense lattice where no rewiring target exists") {
    Rng rng(9);
    // n = k + 1 is rejected; n = k + 2 leaves each node one non-neighbor
    auto g = watts_strogatz(6, 4, 1.0, rng);
    CHECK(g.edge_count() == 12);
  }
  SUBCASE("parameter errors") {
    Rng rng(0);
    CHECK_THROWS_WITH_AS(watts_strogatz(300, 5, 0.8, rng), "k must be even", ConfigError);
    CHECK_THROWS_AS(watts_strogatz(6, 6, 0.1, rng), ConfigError);
    CHECK_THROWS_AS(watts_strogatz(10, 0, 0.1, rng), ConfigError);
    CHECK_THROWS_AS(watts_strogatz(10, 2, 1.5, rng), ConfigError);
  }
}

TEST_CASE("barabasi_albert") {
  SUBCASE("n == m0 is the seed clique") {
    Rng rng(0);
    auto g = barabasi_albert(9, 9, 6, rng);
    CHECK(g == complete_graph(9));
  }
  SUBCASE("edge count formula and growth-node degree") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Rng rng(seed);
      auto g = barabasi_albert(300, 9, 6, rng);
      CHECK(g.edge_count() == 1782);
      for (NodeId u = 9; u < 300; ++u) CHECK(g.degree(u) >= 6);
    }
  }
  SUBCASE("tree growth is connected") {
    Rng rng(4);
    auto g = barabasi_albert(50, 5, 1, rng);
    CHECK(g.edge_count() == 55);
    CHECK(g.component_count() == 1);
  }
  SUBCASE("single-node seed") {
    Rng rng(4);
    auto g = barabasi_albert(10, 1, 1, rng);
    CHECK(g.edge_count() == 9);
    CHECK(g.component_count() == 1);
  }
  SUBCASE("parameter errors") {
    Rng rng(0);
    CHECK_THROWS_AS(barabasi_albert(10, 3, 4, rng), ConfigError);
    CHECK_THROWS_AS(barabasi_albert(5, 9, 6, rng), ConfigError);
    CHECK_THROWS_AS(barabasi_albert(10, 3, 0, rng), ConfigError);
  }
}

TEST_CASE("generators are deterministic in the seed") {
  Rng a(11), b(11), c(12);
  CHECK(watts_strogatz(100, 6, 0.5, a) == watts_strogatz(100, 6, 0.5, b));
  Rng d(11), e(11);
  CHECK(barabasi_albert(100, 9, 6, d) == barabasi_albert(100, 9, 6, e));
  Rng f(11);
  CHECK_FALSE(watts_strogatz(100, 6, 0.5, f) == watts_strogatz(100, 6, 0.5, c));
}

TEST_CASE("preferential attachment grows bigger hubs than the small world") {
  double ba = 0, ws = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r1(seed), r2(seed);
    ba += static_cast<double>(barabasi_albert(300, 9, 6, r1).max_degree());
    ws += static_cast<double>(watts_strogatz(300, 6, 0.8, r2).max_degree());
  }
  CHECK(ba / 20 > ws / 20);
}

TEST_CASE("edge list format") {
  SUBCASE("K3 text") {
    std::ostringstream out;
    write_edge_list(complete_graph(3), out);
    CHECK(out.str() == "3\n0 1\n0 2\n1 2\n");
  }
  SUBCASE("empty graph is header only") {
    std::ostringstream out;
    write_edge_list(Graph(5), out);
    CHECK(out.str() == "5\n");
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == Graph(5));
  }
  SUBCASE("round trip of generated graphs") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      Rng rng(seed);
      auto g = barabasi_albert(80, 5, 3, rng);
      std::stringstream io;
      write_edge_list(g, io);
      auto back = read_edge_list(io);
      CHECK(back == g);
      CHECK(back.node_count() == 80);
    }
  }
  SUBCASE("parse errors carry line numbers") {
    auto fails_on = [](const char* text, std::size_t line) {
      std::istringstream in(text);
      try {
        read_edge_list(in);
      } catch (const ParseError& e) {
        return e.line() == line;
      }
      return false;
    };
    CHECK(fails_on("3\n0 1\n2 2\n", 3));
    CHECK(fails_on("3\n0 1\n1 0\n", 3));
    CHECK(fails_on("3\n0 3\n", 2));
    CHECK(fails_on("3\n0 x\n", 2));
    CHECK(fails_on("3\n0 1 2\n", 2));
    CHECK(fails_on("three\n", 1));
    CHECK(fails_on("", 1));
  }
}
