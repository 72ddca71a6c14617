#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sombor/canonical.hpp"
#include "sombor/errors.hpp"
#include "sombor/graph.hpp"
#include "sombor/io.hpp"
#include "sombor/rooted.hpp"

using namespace sombor;

namespace {

Graph from(int n, const oracle::EdgeList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph star(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

// Spider with the given leg lengths; centre is vertex 0.
Graph spider(std::initializer_list<int> legs) {
  int n = 1;
  for (int l : legs) n += l;
  Graph g(n);
  Vertex next = 1;
  for (int l : legs) {
    Vertex prev = 0;
    for (int i = 0; i < l; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("edge bookkeeping") {
    Graph g(4);
    g.add_edge(2, 0);
    g.add_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK(g.degree(2) == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK_FALSE(g.is_connected());
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 2), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 7), InvalidArgument);
    g.add_edge(3, 1);
    CHECK(g.is_tree());
    g.remove_edge(0, 2);
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.is_tree());
  }

  TEST_CASE("known Sombor values") {
    CHECK(sombor_index(path(2)).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sombor_index(path(5)).value == doctest::Approx(2 * std::sqrt(5.0) + 2 * std::sqrt(8.0)));
    for (int n = 3; n <= 12; ++n)
      CHECK(sombor_index(star(n)).value ==
            doctest::Approx((n - 1) * std::sqrt(double(n - 1) * (n - 1) + 1)).epsilon(1e-14));
    CHECK(sombor_index(spider({2, 2, 1})).value == doctest::Approx(14.845516166).epsilon(1e-10));
    CHECK(sombor_index(spider({3, 1, 1})).value == doctest::Approx(14.994601698).epsilon(1e-10));
    CHECK(sombor_index(Graph(1)).value == 0.0);
  }

  TEST_CASE("alpha variants agree with a direct sum") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
      const int n = 2 + int(rng() % 15);
      oracle::EdgeList edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(int(rng() % v), v);
      const auto g = from(n, edges);
      for (double alpha : {0.5, 1.0, -0.5, 2.0, 0.3})
        CHECK(sombor_index(g, alpha).value == doctest::Approx(oracle::sombor(n, edges, alpha)).epsilon(1e-12));
    }
  }

  TEST_CASE("edge-type multiset is the equality key") {
    // Endpoint order is irrelevant.
    EdgeTypeMultiset a, b;
    a.add(7, 1);
    a.add(5, 5);
    b.add(1, 7);
    b.add(5, 5);
    CHECK(a == b);
    CHECK(a.to_string() == "{1,7}x1 {5,5}x1");
    CHECK(a.total() == 2);
    CHECK(edge_type_multiset(spider({2, 2, 1})) != edge_type_multiset(spider({3, 1, 1})));
    CHECK(edge_type_multiset(star(5)).counts().at(DegreePair{1, 4}) == 4);
  }
}

TEST_SUITE("io") {
  TEST_CASE("parse and serialize round trip") {
    const auto g = parse_edge_list("# a path\n4\n0 1\n2 1\n\n2 3 # tail\n");
    CHECK(g.vertex_count() == 4);
    CHECK(serialize_edge_list(g) == "4\n0 1\n1 2\n2 3\n");
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("-2\n"), ParseError);
  }

  TEST_CASE("dot export") {
    const auto dot = export_dot(path(3));
    CHECK(dot.rfind("graph G {", 0) == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("1 [label=\"1 (2)\"];") != std::string::npos);
    CHECK(dot.back() == '\n');
  }
}

TEST_SUITE("canonical") {
  TEST_CASE("codes separate classes exactly as brute-force isomorphism does") {
    for (int n = 2; n <= 7; ++n) {
      const auto labeled = oracle::labeled_trees(n);
      const auto reps = oracle::classes(n, labeled);
      std::set<CanonicalCode> codes;
      for (const auto& t : labeled) codes.insert(canonical_form(from(n, t)));
      CHECK(codes.size() == reps.size());
      // Each labelled tree's code must be the code of its class representative.
      for (std::size_t i = 0; i < labeled.size(); i += 37) {
        const auto code = canonical_form(from(n, labeled[i]));
        for (const auto& r : reps)
          if (oracle::isomorphic(n, labeled[i], r)) CHECK(code == canonical_form(from(n, r)));
      }
    }
  }

  TEST_CASE("spiders on six vertices") {
    CHECK(canonical_form(spider({2, 2, 1})) != canonical_form(spider({3, 1, 1})));
    CHECK(canonical_form(spider({2, 1, 2})) == canonical_form(spider({2, 2, 1})));
  }

  TEST_CASE("centroids") {
    CHECK(centroids(path(4)) == std::vector<Vertex>{1, 2});
    CHECK(centroids(path(5)) == std::vector<Vertex>{2});
    CHECK(centroids(star(6)) == std::vector<Vertex>{0});
  }

  TEST_CASE("invariant under relabelling") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
      const int n = 2 + int(rng() % 30);
      oracle::EdgeList edges;
      for (int v = 1; v < n; ++v) edges.emplace_back(int(rng() % v), v);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      oracle::EdgeList moved;
      for (auto [u, v] : edges) moved.emplace_back(perm[u], perm[v]);
      CHECK(canonical_form(from(n, edges)) == canonical_form(from(n, moved)));
    }
  }
}

TEST_SUITE("rooted") {
  TEST_CASE("vertex and edge roots") {
    const auto p = path(4);
    const auto rv = rooted_view(p, Root::at_vertex(1));
    CHECK(rv.level(1) == 1);
    CHECK(rv.level(3) == 3);
    CHECK(rv.parent(3) == 2);
    CHECK_FALSE(rv.parent(1).has_value());
    CHECK(rv.level_count() == 3);
    CHECK(leveled_degree_sequence(rv).to_string() == "2/2,1/1");

    const auto re = rooted_view(p, Root::at_edge(1, 2));
    CHECK(re.level(1) == 1);
    CHECK(re.level(2) == 1);
    CHECK(re.level(0) == 2);
    CHECK(leveled_degree_sequence(re).edge_rooted());
    CHECK(leveled_degree_sequence(re).to_string() == "2,2/1,1");
    CHECK(re.in_branch(0, 1));
    CHECK_FALSE(re.in_branch(3, 1));

    CHECK_THROWS_AS(rooted_view(p, Root::at_edge(0, 2)), InvalidArgument);
    CHECK_THROWS_AS(rooted_view(p, Root::at_vertex(4)), InvalidArgument);
  }

  TEST_CASE("all roots") {
    const auto roots = all_roots(star(4));
    CHECK(roots.size() == 4 + 3);
    CHECK_FALSE(roots.front().is_edge());
    CHECK(roots.back().is_edge());
  }

  TEST_CASE("leveled sequences") {
    const auto l = LeveledDegreeSequence::parse("3/1,2,2;1,1");
    CHECK(l.levels()[1] == std::vector<int>{2, 2, 1});
    CHECK(l.vertex_count() == 6);
    CHECK(l.is_consistent());
    CHECK_FALSE(LeveledDegreeSequence::parse("3/2,2/1,1").is_consistent());
    CHECK(LeveledDegreeSequence::parse("0").is_consistent());
    CHECK(LeveledDegreeSequence::parse("1,1").is_consistent());
    CHECK_THROWS_AS(LeveledDegreeSequence::parse("3,3,3/1"), ParseError);
    CHECK_THROWS_AS(LeveledDegreeSequence({{3, 3, 3}, {1}}), InvalidArgument);
    CHECK_THROWS_AS(LeveledDegreeSequence::parse("3/a"), ParseError);

    // Every rooting of every small tree yields a consistent sequence.
    for (int n = 2; n <= 6; ++n)
      for (const auto& t : oracle::classes(n, oracle::labeled_trees(n))) {
        const auto g = from(n, t);
        for (const auto& r : all_roots(g)) CHECK(leveled_degree_sequence(rooted_view(g, r)).is_consistent());
      }
  }
}
