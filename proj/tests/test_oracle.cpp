#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sombor/canonical.hpp"
#include "sombor/errors.hpp"
#include "sombor/extremal.hpp"
#include "sombor/oracle.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

using namespace sombor;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence::validate(std::move(v)); }

oracle::EdgeList edges_of(const Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

Graph from(int n, const oracle::EdgeList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<int> sorted_degrees(int n, const oracle::EdgeList& e) {
  auto d = oracle::degrees(n, e);
  std::sort(d.rbegin(), d.rend());
  return d;
}

struct BruteClass {
  std::set<std::string> codes;
  double min = INFINITY;
  double max = -INFINITY;
  std::size_t labeled = 0;
};

// Classes of all labelled trees on n vertices, bucketed by degree sequence.
std::map<std::vector<int>, BruteClass> brute(int n) {
  std::map<std::vector<int>, BruteClass> out;
  for (const auto& t : oracle::labeled_trees(n)) {
    auto& c = out[sorted_degrees(n, t)];
    c.codes.insert(oracle::tree_code(n, t));
    const double v = oracle::sombor(n, t);
    c.min = std::min(c.min, v);
    c.max = std::max(c.max, v);
    ++c.labeled;
  }
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("matches brute force over all labelled trees") {
    for (int n = 3; n <= 8; ++n) {
      const auto classes = brute(n);
      CHECK(classes.size() == all_tree_degree_sequences(n).size());
      for (const auto& d : all_tree_degree_sequences(n)) {
        const auto& b = classes.at(d.entries());
        const auto trees = enumerate_trees(d);
        std::set<std::string> codes;
        for (const auto& t : trees) {
          CHECK(DegreeSequence::validate(degree_sequence_of(t)) == d);
          codes.insert(oracle::tree_code(n, edges_of(t)));
        }
        CHECK(trees.size() == codes.size());
        CHECK(codes == b.codes);

        const auto scan = extremal_scan(d);
        CHECK(scan.tree_count == b.codes.size());
        CHECK(scan.min_value.value == doctest::Approx(b.min).epsilon(1e-12));
        CHECK(scan.max_value.value == doctest::Approx(b.max).epsilon(1e-12));
        // The labelled count is over vertex-labelled trees with vertex i of
        // degree d_i; brute force counts every assignment of the multiset.
        std::map<int, int> mult;
        for (int x : d.entries()) ++mult[x];
        double assignments = std::tgamma(n + 1.0);
        for (auto [deg, m] : mult) assignments /= std::tgamma(m + 1.0);
        CHECK(double(labeled_tree_count(d)) * assignments == doctest::Approx(double(b.labeled)));
      }
    }
  }

  TEST_CASE("documented examples") {
    const auto spiders = enumerate_trees(seq({3, 2, 2, 1, 1, 1}));
    CHECK(spiders.size() == 2);
    CHECK(labeled_tree_count(seq({3, 2, 2, 1, 1, 1})) == 12);
    CHECK(enumerate_trees(seq({6, 1, 1, 1, 1, 1, 1})).size() == 1);
    CHECK(enumerate_trees(seq({3, 3, 1, 1, 1, 1})).size() == 1);
    CHECK(enumerate_trees(seq({0})).size() == 1);
    CHECK(enumerate_trees(seq({1, 1})).size() == 1);

    const auto scan = extremal_scan(seq({3, 2, 2, 1, 1, 1}));
    CHECK(scan.min_value.value == doctest::Approx(2 * std::sqrt(13.0) + 2 * std::sqrt(5.0) + std::sqrt(10.0)));
    CHECK(scan.max_value.value ==
          doctest::Approx(std::sqrt(13.0) + std::sqrt(8.0) + std::sqrt(5.0) + 2 * std::sqrt(10.0)));
    CHECK(scan.argmin.size() == 1);
    CHECK(scan.argmax.size() == 1);

    const auto path = extremal_scan(seq({2, 2, 2, 2, 2, 1, 1}));
    CHECK(path.min_value.edge_types == path.max_value.edge_types);
    CHECK(path.argmin == path.argmax);
  }

  TEST_CASE("cap") {
    const auto d = seq({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1});
    CHECK(labeled_tree_count(d) == 87178291200ULL);
    CHECK_THROWS_AS(enumerate_trees(d), CapExceeded);
    CHECK_THROWS_AS(enumerate_trees(seq({3, 2, 2, 1, 1, 1}), {11}), CapExceeded);
    std::vector<int> long_path(60, 2);
    long_path.insert(long_path.end(), {1, 1});
    CHECK(labeled_tree_count(seq(long_path)) == UINT64_MAX);
  }

  TEST_CASE("Prüfer decoding agrees with the reference decoder") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 500; ++rep) {
      const int n = 3 + int(rng() % 20);
      std::vector<int> code(n - 2);
      for (auto& c : code) c = int(rng() % n);
      const auto g = decode_pruefer(code, n);
      auto expected = oracle::decode(code, n);
      std::sort(expected.begin(), expected.end());
      CHECK(edges_of(g) == expected);
    }
  }
}

TEST_SUITE("small graphs") {
  TEST_CASE("canonical form agrees with brute-force isomorphism") {
    std::mt19937 rng(17);
    std::vector<std::pair<int, oracle::EdgeList>> graphs;
    for (int rep = 0; rep < 400; ++rep) {
      const int n = 3 + int(rng() % 5);
      oracle::EdgeList e;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng() % 3 == 0) e.emplace_back(u, v);
      graphs.emplace_back(n, e);
      // A relabelled copy.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      oracle::EdgeList moved;
      for (auto [u, v] : e) moved.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
      graphs.emplace_back(n, moved);
    }
    for (std::size_t i = 0; i < graphs.size(); i += 3)
      for (std::size_t j = i; j < graphs.size(); j += 5) {
        const auto& [n1, a] = graphs[i];
        const auto& [n2, b] = graphs[j];
        if (n1 != n2) continue;
        CHECK((small_graph_canonical_form(from(n1, a)) == small_graph_canonical_form(from(n2, b))) ==
              oracle::isomorphic(n1, a, b));
      }
  }

  TEST_CASE("girth and diameter") {
    CHECK(girth(tailed_cycle(7, 5)) == 5);
    CHECK(girth(greedy_tree(seq({3, 1, 1, 1}))) == 0);
    CHECK(diameter(tailed_cycle(7, 3)) == 5);
    CHECK(diameter(tailed_cycle(6, 6)) == 3);
  }

  TEST_CASE("unicyclic families") {
    // Connected unicyclic graphs on n = 3..9 vertices.
    const std::map<int, std::size_t> known{{3, 1}, {4, 2}, {5, 5}, {6, 13}, {7, 33}, {8, 89}, {9, 240}};
    for (auto [n, count] : known) {
      std::size_t total = 0;
      for (int k = 3; k <= n; ++k) {
        const auto family = unicyclic_graphs(n, k);
        total += family.size();
        for (const auto& g : family) {
          CHECK(g.vertex_count() == n);
          CHECK(g.edge_count() == std::size_t(n));
          CHECK(g.is_connected());
          CHECK(girth(g) == k);
        }
        if (n <= 7)
          for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
              CHECK_FALSE(oracle::isomorphic(n, edges_of(family[i]), edges_of(family[j])));
      }
      CHECK(total == count);
    }
    CHECK_THROWS_AS(unicyclic_graphs(11, 3), InvalidArgument);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("report shape") {
    const auto r = verify(Theorem::Greedy, VerifyScope{8, std::nullopt, std::nullopt});
    CHECK(r.passed());
    CHECK(r.instances == 11);
    const auto j = r.to_json(true);
    CHECK(j["theorem"] == "greedy");
    CHECK(j["scope"]["n"] == 8);
    CHECK(j["verdict"] == "pass");
    CHECK(j["failures"].empty());
    CHECK(j.contains("elapsed_ms"));
    CHECK_FALSE(r.to_json(false).contains("elapsed_ms"));
  }

  TEST_CASE("thread count does not change the report") {
    for (auto t : {Theorem::Extremal, Theorem::Alter, Theorem::Alter2, Theorem::DiffDegree, Theorem::Rooted,
                   Theorem::Unicyclic, Theorem::CorollaryLeaves}) {
      const VerifyScope scope{7, std::nullopt, std::nullopt};
      const auto one = verify(t, scope, {kDefaultEnumerationCap, 1}).to_json(false).dump();
      const auto many = verify(t, scope, {kDefaultEnumerationCap, 5}).to_json(false).dump();
      CHECK(one == many);
    }
  }

  TEST_CASE("diffdegree spot chain") {
    const auto r = verify(Theorem::DiffDegree,
                          VerifyScope{std::nullopt, seq({2, 2, 2, 2, 1, 1}), seq({5, 1, 1, 1, 1, 1})});
    REQUIRE(r.passed());
    const auto& chain = r.details["chain"];
    REQUIRE(chain.size() == 5);
    const double expected[] = {12.957, 14.995, 16.892, 19.078, 25.495};
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(std::abs(chain[i]["sombor"].get<double>() - expected[i]) < 5e-4);
    CHECK(chain[4]["sombor"].get<double>() == doctest::Approx(5 * std::sqrt(26.0)).epsilon(1e-11));
  }

  TEST_CASE("scope errors") {
    CHECK_THROWS_AS(parse_theorem("nope"), InvalidArgument);
    CHECK(parse_theorem("alter2") == Theorem::Alter2);
    CHECK_THROWS_AS(verify(Theorem::Unicyclic, VerifyScope{11, std::nullopt, std::nullopt}), InvalidArgument);
    CHECK_THROWS_AS(verify(Theorem::DiffDegree,
                           VerifyScope{std::nullopt, seq({5, 1, 1, 1, 1, 1}), seq({2, 2, 2, 2, 1, 1})}),
                    InvalidArgument);
    CHECK_THROWS_AS(verify(Theorem::CorollaryLeaves, VerifyScope{std::nullopt, seq({2, 1, 1}), std::nullopt}),
                    InvalidArgument);
  }

  TEST_CASE("report numbers carry 12 significant digits") {
    CHECK(report_number(25.495097567963924) == 25.4950975680);
    CHECK(report_number(0.0) == 0.0);
  }
}
