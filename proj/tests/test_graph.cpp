#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "crystal/elements.hpp"
#include "crystal/graph.hpp"
#include "crystal/json_io.hpp"

using namespace crystal;

TEST_CASE("breadth-first closure of a finite highest weight crystal") {
  auto g = bfs_generate(make_mla_element(Weight({1, 1})));
  CHECK(g.vertices.size() == 8);
  CHECK(g.edges.size() == 8);
  CHECK(g.root == 0);
  CHECK_FALSE(g.truncated);
  CHECK(g.vertices[0].key == "Y1(-1)^1*Y2(-2)^1");
}

TEST_CASE("depth-limited closure of the marginally large model") {
  auto g = bfs_generate(TableauInfElem{t_infinity(Rank(2))}, 2);
  CHECK(g.vertices.size() == 7);  // 1 + 2 + 4
  CHECK(g.truncated);
  CHECK(g.depth_limit == 2);
}

TEST_CASE("trivial crystal of the zero weight") {
  auto g = bfs_generate(make_mla_element(Weight({0, 0})));
  CHECK(g.vertices.size() == 1);
  CHECK(g.edges.empty());
  CHECK_FALSE(g.truncated);
}

TEST_CASE("infinite models demand a depth limit") {
  CHECK_THROWS_AS(bfs_generate(TableauInfElem{t_infinity(Rank(2))}), std::invalid_argument);
  CHECK_THROWS_AS(bfs_generate(make_minf_element(Rank(2))), std::invalid_argument);
}

TEST_CASE("a graph is isomorphic to itself") {
  auto g = bfs_generate(make_mla_element(Weight({1, 1})));
  CHECK(graphs_isomorphic(g, g));
  CHECK(graphs_isomorphic(g, g, false));
}

TEST_CASE("monomial and tableau realizations of one highest weight crystal agree") {
  Weight lambda({1, 1});
  auto gm = bfs_generate(make_mla_element(lambda));
  auto gt = bfs_generate(TableauBlaElem{highest_weight_tableau(Rank(2), lambda)});
  CHECK(graphs_isomorphic(gm, gt));
}

TEST_CASE("crystals of distinct fundamental weights differ") {
  auto g1 = bfs_generate(make_mla_element(Weight({1, 0})));
  auto g2 = bfs_generate(make_mla_element(Weight({0, 1})));
  CHECK(g1.vertices.size() == g2.vertices.size());
  CHECK_FALSE(graphs_isomorphic(g1, g2));  // root edges carry different colors
}

TEST_CASE("isomorphism ignores vertex order") {
  auto g = bfs_generate(make_mla_element(Weight({1, 1})));
  CrystalGraph h = g;
  // swap two non-root vertices and rewire
  std::swap(h.vertices[3], h.vertices[5]);
  for (auto& e : h.edges) {
    auto fix = [](int v) { return v == 3 ? 5 : v == 5 ? 3 : v; };
    e.src = fix(e.src);
    e.dst = fix(e.dst);
  }
  detail::recompute_depths(h);
  CHECK(graphs_isomorphic(g, h));
}

TEST_CASE("truncated graphs compare up to the common depth") {
  auto g2 = bfs_generate(TableauInfElem{t_infinity(Rank(2))}, 2);
  auto g3 = bfs_generate(TableauInfElem{t_infinity(Rank(2))}, 3);
  CHECK(graphs_isomorphic(g2, g3));
  auto m3 = bfs_generate(make_minf_element(Rank(2)), 3);
  CHECK(graphs_isomorphic(g3, m3));
  CHECK(graphs_isomorphic(g2, m3));
}

TEST_CASE("dot export") {
  auto g = bfs_generate(make_mla_element(Weight({0, 0})));
  std::string dot = export_dot(g);
  CHECK(dot == "digraph crystal {\n  v0 [label=\"1\"];\n}\n");

  auto g8 = bfs_generate(make_mla_element(Weight({1, 1})));
  std::string dot8 = export_dot(g8);
  CHECK(dot8.find("digraph crystal {") == 0);
  CHECK(dot8.find("label=\"1\", color=\"#e41a1c\"") != std::string::npos);
  CHECK(dot8.find("label=\"2\", color=\"#377eb8\"") != std::string::npos);
}

TEST_CASE("json export round trip") {
  auto g = bfs_generate(TableauInfElem{t_infinity(Rank(2))}, 2);
  auto back = parse_graph_json(export_json(g));
  CHECK(back == g);
  CHECK(back.depth_limit == g.depth_limit);
}

TEST_CASE("repeated generation is byte-identical and scheduling independent") {
  auto run = [] {
    auto g = bfs_generate(TableauInfElem{t_infinity(Rank(3))}, 4);
    return export_json(g) + export_dot(g) + export_text(g);
  };
  std::string base = run();
  CHECK(run() == base);

  setenv("CRYSTAL_THREADS", "4", 1);
  std::string parallel = run();
  setenv("CRYSTAL_THREADS", "0", 1);
  std::string sequential = run();
  unsetenv("CRYSTAL_THREADS");
  CHECK(parallel == base);
  CHECK(sequential == base);
}

TEST_CASE("edges are mirrored by the raising operators") {
  auto lambda = Weight({2, 1});
  auto g = bfs_generate(TableauBlaElem{highest_weight_tableau(Rank(2), lambda)});
  // rebuild elements keyed by serialization to check e along every edge
  std::map<std::string, Tableau> by_key;
  std::vector<Tableau> all{highest_weight_tableau(Rank(2), lambda)};
  for (size_t at = 0; at < all.size(); ++at) {
    by_key.emplace(serialize(all[at]), all[at]);
    for (int i = 1; i <= 2; ++i) {
      auto child = f_bla(all[at], i);
      if (child && by_key.find(serialize(*child)) == by_key.end()) all.push_back(*child);
    }
  }
  for (const auto& e : g.edges) {
    const Tableau& src = by_key.at(g.vertices[static_cast<size_t>(e.src)].key);
    const Tableau& dst = by_key.at(g.vertices[static_cast<size_t>(e.dst)].key);
    CHECK(f_bla(src, e.color) == dst);
    CHECK(e_bla(dst, e.color) == src);
  }
  // and conversely, every operator application appears as an edge
  size_t op_edges = 0;
  for (const auto& [key, t] : by_key)
    for (int i = 1; i <= 2; ++i)
      if (f_bla(t, i)) ++op_edges;
  CHECK(op_edges == g.edges.size());
}
