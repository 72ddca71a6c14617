#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sombor/degseq.hpp"
#include "sombor/errors.hpp"
#include "sombor/oracle.hpp"

using namespace sombor;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence::validate(std::move(v)); }

}  // namespace

TEST_SUITE("degree sequences") {
  TEST_CASE("parsing") {
    CHECK(parse_sequence("3,2,2,1,1,1") == std::vector<int>{3, 2, 2, 1, 1, 1});
    CHECK(parse_sequence(" 3^2, 2 ,1^4 ") == std::vector<int>{3, 3, 2, 1, 1, 1, 1});
    CHECK_THROWS_AS(parse_sequence(""), ParseError);
    CHECK_THROWS_AS(parse_sequence("3,,1"), ParseError);
    CHECK_THROWS_AS(parse_sequence("3,a"), ParseError);
    CHECK_THROWS_AS(parse_sequence("2^x"), ParseError);
  }

  TEST_CASE("validation") {
    CHECK(seq({1, 1, 3, 1}).entries() == std::vector<int>{3, 1, 1, 1});
    CHECK(seq({0}).order() == 1);
    CHECK(seq({1, 1}).leaf_count() == 2);
    CHECK_THROWS_AS(seq({3, 3, 1, 1}), NonRealizable);
    CHECK_THROWS_AS(seq({2, 2, 2}), NonRealizable);
    CHECK_THROWS_AS(seq({2, 0, 1, 1}), NonRealizable);
    CHECK_THROWS_AS(seq({}), NonRealizable);
    CHECK_THROWS_AS(seq({0, 0}), NonRealizable);
    // Twelve entries summing to 21: one leaf too many.
    CHECK_THROWS_AS(seq({3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1, 1}), NonRealizable);
    CHECK(seq({3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1}).order() == 11);
  }

  TEST_CASE("reduction keeps the leaf count recoverable") {
    for (int n = 2; n <= 12; ++n)
      for (const auto& d : all_tree_degree_sequences(n)) {
        const auto r = reduce(d);
        CHECK(r.implied_leaves() == d.leaf_count());
        CHECK(r.order() == n);
        CHECK(expand(r) == d);
      }
    CHECK(reduce(seq({0})).internal().empty());
    CHECK(expand(reduce(seq({0}))) == seq({1, 1}));
    CHECK(ReducedDegreeSequence::from_internal({3, 3, 2}).implied_leaves() == 4);
    CHECK_THROWS_AS(ReducedDegreeSequence::from_internal({3, 1}), NonRealizable);
  }

  TEST_CASE("partition generation") {
    CHECK(all_tree_degree_sequences(1) == std::vector<DegreeSequence>{seq({0})});
    CHECK(all_tree_degree_sequences(4) == std::vector<DegreeSequence>{seq({3, 1, 1, 1}), seq({2, 2, 1, 1})});
    CHECK(all_tree_degree_sequences(5) ==
          std::vector<DegreeSequence>{seq({4, 1, 1, 1, 1}), seq({3, 2, 1, 1, 1}), seq({2, 2, 2, 1, 1})});
    for (int n = 2; n <= 16; ++n) {
      const auto all = all_tree_degree_sequences(n);
      CHECK(long(all.size()) == oracle::partitions_exact(2 * (n - 1), n));
      CHECK(std::is_sorted(all.rbegin(), all.rend()));
    }
    CHECK(all_tree_degree_sequences(10).size() == 22);
  }

  TEST_CASE("majorization") {
    CHECK(majorizes(seq({2, 2, 2, 2, 1, 1}), seq({5, 1, 1, 1, 1, 1})));
    CHECK_FALSE(majorizes(seq({5, 1, 1, 1, 1, 1}), seq({2, 2, 2, 2, 1, 1})));
    CHECK(majorizes(seq({3, 2, 1, 1, 1}), seq({3, 2, 1, 1, 1})));
    CHECK_THROWS_AS(majorizes(seq({1, 1}), seq({2, 1, 1})), InvalidArgument);
    for (int n = 2; n <= 10; ++n) {
      const auto all = all_tree_degree_sequences(n);
      for (const auto& a : all)
        for (const auto& b : all) CHECK(majorizes(a, b) == oracle::majorized(a.entries(), b.entries()));
    }
  }

  TEST_CASE("spot chain at n = 6") {
    const auto chain = majorization_chain(seq({2, 2, 2, 2, 1, 1}), seq({5, 1, 1, 1, 1, 1}));
    REQUIRE(chain.size() == 5);
    CHECK(chain[1] == seq({3, 2, 2, 1, 1, 1}));
    CHECK(chain[2] == seq({3, 3, 1, 1, 1, 1}));
    CHECK(chain[3] == seq({4, 2, 1, 1, 1, 1}));
  }

  TEST_CASE("every chain is a sequence of two-entry unit moves") {
    for (int n = 2; n <= 11; ++n) {
      const auto all = all_tree_degree_sequences(n);
      for (const auto& a : all)
        for (const auto& b : all) {
          if (!oracle::majorized(a.entries(), b.entries())) {
            CHECK_THROWS_AS(majorization_chain(a, b), InvalidArgument);
            continue;
          }
          const auto chain = majorization_chain(a, b);
          CHECK(chain.front() == a);
          CHECK(chain.back() == b);
          for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const auto& x = chain[i].entries();
            const auto& y = chain[i + 1].entries();
            CHECK(oracle::majorized(x, y));
            CHECK(oracle::majorized(y, b.entries()));
            std::vector<std::size_t> diff;
            for (std::size_t p = 0; p < x.size(); ++p)
              if (x[p] != y[p]) diff.push_back(p);
            REQUIRE(diff.size() == 2);
            CHECK(y[diff[0]] == x[diff[0]] + 1);
            CHECK(y[diff[1]] == x[diff[1]] - 1);
          }
        }
    }
  }

  TEST_CASE("corollary sequences") {
    CHECK(corollary_sequence(CorollaryKind::Leaves, 8, 4) == seq({4, 2, 2, 2, 1, 1, 1, 1}));
    CHECK(corollary_sequence(CorollaryKind::Diameter, 8, 4) == seq({5, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(corollary_sequence(CorollaryKind::Branching, 10, 2) == seq({3, 3, 2, 2, 2, 2, 1, 1, 1, 1}));
    CHECK(corollary_sequence(CorollaryKind::MaxDegree, 8, 3) == seq({3, 3, 3, 1, 1, 1, 1, 1}));
    CHECK(corollary_sequence(CorollaryKind::MaxDegree, 9, 3) == seq({3, 3, 3, 2, 1, 1, 1, 1, 1}));
    CHECK(corollary_sequence(CorollaryKind::MaxDegree, 7, 6) == seq({6, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(corollary_sequence(CorollaryKind::MaxDegree, 8, 8), NonRealizable);
    CHECK_THROWS_AS(corollary_sequence(CorollaryKind::Leaves, 8, 1), NonRealizable);
    CHECK_THROWS_AS(corollary_sequence(CorollaryKind::Diameter, 8, 8), NonRealizable);
    CHECK_THROWS_AS(corollary_sequence(CorollaryKind::Branching, 8, 4), NonRealizable);
    CHECK(parse_corollary_kind("max_degree") == CorollaryKind::MaxDegree);
    CHECK(to_string(CorollaryKind::Leaves) == "leaves");

    // Max-degree sequences: the largest entry is D and the remainder is a
    // single entry r + 1 with 0 <= r < D - 1.
    for (int n = 3; n <= 14; ++n)
      for (int D = 2; D < n; ++D) {
        const auto s = corollary_sequence(CorollaryKind::MaxDegree, n, D);
        CHECK(s.max_degree() == D);
        const auto big = std::count(s.entries().begin(), s.entries().end(), D);
        CHECK(big == (n - 2) / (D - 1));
      }
  }
}
