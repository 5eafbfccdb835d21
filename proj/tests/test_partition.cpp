#include <doctest.h>

#include <algorithm>
#include <set>

#include "hyperoct/error.hpp"
#include "hyperoct/partition.hpp"
#include "oracles.hpp"

using namespace hyperoct;

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{{}});
  CHECK(partitions_of(1) == std::vector<Partition>{{1}});
  CHECK(partitions_of(4) ==
        std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  // counts follow the usual sequence
  int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == (size_t)expected[n]);
}

TEST_CASE("bipartition enumeration") {
  // 1, 2, 5, 10, 20, 36, 65, 110 pairs
  size_t expected[] = {1, 2, 5, 10, 20, 36, 65, 110};
  for (int n = 0; n <= 7; ++n) {
    auto bps = bipartitions_of(n);
    CHECK(bps.size() == expected[n]);
    std::set<Bipartition> dedup(bps.begin(), bps.end());
    CHECK(dedup.size() == bps.size());
    for (const auto& bp : bps) CHECK(size_of(bp) == n);
  }
}

TEST_CASE("dominance") {
  CHECK(dominates({4}, {2, 2}));
  CHECK(dominates({2, 2}, {2, 1, 1}));
  CHECK(dominates({3, 3}, {3, 3}));
  CHECK(!dominates({2, 2}, {4}));
  CHECK(!dominates({3, 1, 1, 1}, {2, 2, 2}));
  CHECK(!dominates({2, 2, 2}, {3, 1, 1, 1}));
  CHECK_THROWS_AS(dominates({3}, {2}), error);
}

TEST_CASE("regularity") {
  CHECK(is_p_regular({2, 1}, 3));
  CHECK(is_p_regular({5, 5}, 3));
  CHECK(!is_p_regular({1, 1, 1}, 3));
  CHECK(!is_p_regular({4, 2, 2, 2, 1}, 3));
  CHECK(is_p_regular({}, 3));
  CHECK(!is_p_regular({3, 3, 3, 3, 3}, 5));
  CHECK(is_p_regular({3, 3, 3, 3}, 5));
}

TEST_CASE("core and weight against strip removal") {
  for (int mod : {3, 5}) {
    for (int n = 0; n <= 11; ++n) {
      for (const auto& lam : partitions_of(n)) {
        CAPTURE(mod);
        CAPTURE(lam);
        CHECK(p_core(lam, mod) == oracles::strip_core(lam, mod));
        CHECK(p_weight(lam, mod) == oracles::strip_weight(lam, mod));
      }
    }
  }
}

TEST_CASE("known cores") {
  CHECK(p_core({3}, 3) == Partition{});
  CHECK(p_core({2, 1}, 3) == Partition{});
  CHECK(p_core({1, 1, 1}, 3) == Partition{});
  CHECK(p_core({4}, 3) == Partition{1});
  CHECK(p_core({2, 2}, 3) == Partition{1});
  CHECK(p_core({4, 2}, 3) == Partition{4, 2});  // no removable strip of size 3
  CHECK(p_core({5, 3, 1}, 3) == Partition{5, 3, 1});  // a core stays put
  CHECK(p_weight({5, 3, 1}, 3) == 0);
  CHECK(p_weight({9}, 3) == 3);
}

TEST_CASE("odd part counting") {
  CHECK(odd_parts_count({}) == 0);
  CHECK(odd_parts_count({2, 2}) == 0);
  CHECK(odd_parts_count({3, 2, 1}) == 2);
  CHECK(odd_parts_count({1, 1, 1, 1}) == 4);
}

TEST_CASE("hook additions enumerate by filtering") {
  // partitions of |core| + w*p with the prescribed core; (3,1) and
  // (2,1,1) are 3-cores themselves so they stay out
  auto both = add_hooks_enum({1}, 3, 1);
  std::vector<Partition> expect = {{4}, {2, 2}, {1, 1, 1, 1}};
  CHECK(both == expect);
  CHECK(add_hooks_enum({}, 3, 0) == std::vector<Partition>{{}});
  // refuse a seed that is not itself a core
  CHECK_THROWS_AS(add_hooks_enum({3}, 3, 1), error);
}

TEST_CASE("minimal-weight sets") {
  // E_1(empty) at p=3 first appears at w=1
  ESet e = w_and_E({}, 3, 1);
  CHECK(e.w == 1);
  CHECK(e.elements == std::vector<Partition>{{3}, {2, 1}});

  // three signed cycles forces the all-odd partition
  ESet e3 = w_and_E({}, 3, 3);
  CHECK(e3.w == 1);
  CHECK(e3.elements == std::vector<Partition>{{1, 1, 1}});

  // b = 0 is satisfied by the core itself
  ESet e0 = w_and_E({}, 3, 0);
  CHECK(e0.w == 0);
  CHECK(e0.elements == std::vector<Partition>{{}});

  ESet e2 = w_and_E({}, 3, 2);
  CHECK(e2.w == 2);
  CHECK(e2.elements == std::vector<Partition>{{5, 1}, {4, 1, 1}, {3, 3}, {3, 2, 1}});

  // with core (1): one odd part is already there
  ESet f0 = w_and_E({1}, 3, 0);
  CHECK(f0.w == 1);
  CHECK(f0.elements == std::vector<Partition>{{4}, {2, 2}});

  ESet g1 = w_and_E({2}, 3, 1);
  CHECK(g1.w == 1);
  CHECK(g1.elements == std::vector<Partition>{{5}, {2, 2, 1}});

  ESet h1 = w_and_E({1, 1}, 3, 1);
  CHECK(h1.w == 1);
  CHECK(h1.elements == std::vector<Partition>{{4, 1}, {3, 2}});
}

TEST_CASE("minimal-weight membership is exactly the filter") {
  // every element of E_b must have the right size, core and odd count,
  // and no smaller weight may admit any
  for (int b : {0, 1, 2}) {
    ESet e = w_and_E({1}, 3, b);
    for (const auto& q : e.elements) {
      CHECK(p_core(q, 3) == Partition{1});
      CHECK((int)odd_parts_count(q) == b);
      CHECK(size_of(q) == 1 + 3 * e.w);
    }
    for (int w = 0; w < e.w; ++w)
      for (const auto& q : add_hooks_enum({1}, 3, w))
        CHECK((int)odd_parts_count(q) != b);
  }
}

TEST_CASE("hypothesis check") {
  CHECK(hypothesis_check({}, 3, 0));
  CHECK(hypothesis_check({}, 3, 1));
  CHECK(hypothesis_check({}, 3, 2));
  CHECK(!hypothesis_check({}, 3, 3));
  CHECK(!hypothesis_check({}, 3, 4));
  CHECK(!hypothesis_check({}, 3, 6));
  CHECK(hypothesis_check({1}, 3, 0));
  CHECK(!hypothesis_check({1}, 3, 4));
  CHECK(!hypothesis_check({2}, 3, 3));
  CHECK(!hypothesis_check({1, 1}, 3, 5));
  CHECK(hypothesis_check({3, 1}, 3, 2));
  CHECK(hypothesis_check({3, 1, 1}, 3, 3));
}

TEST_CASE("maximal elements under dominance") {
  // (5,1) dominates all of (4,1,1), (3,3) and (3,2,1)
  std::vector<Partition> in = {{5, 1}, {4, 1, 1}, {3, 3}, {3, 2, 1}};
  auto out = maximal_elements(in);
  CHECK(out == std::vector<Partition>{{5, 1}});
  std::vector<Partition> two = {{4, 1, 1}, {3, 3}};
  CHECK(maximal_elements(two) == two);  // incomparable: everything maximal
  // incomparable family: everything maximal
  std::vector<Partition> inc = {{3, 1, 1, 1}, {2, 2, 2}};
  CHECK(maximal_elements(inc) == inc);
}

TEST_CASE("format and parse") {
  CHECK(format_partition({5, 1}) == "5,1");
  CHECK(format_partition({}) == "");
  CHECK(parse_partition("5,1") == Partition{5, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(parse_partition(" 4, 2 ,2") == Partition{4, 2, 2});
  CHECK_THROWS_AS(parse_partition("1,2"), error);
  CHECK_THROWS_AS(parse_partition("a"), error);
  CHECK(format_bipartition({{2, 1}, {1}}) == "2,1|1");
  CHECK(parse_bipartition("2,1|1") == Bipartition{{2, 1}, {1}});
  CHECK(parse_bipartition("|") == Bipartition{{}, {}});
  CHECK_THROWS_AS(parse_bipartition("1"), error);
  CHECK_THROWS_AS(parse_bipartition("1|2|3"), error);
  // round trip across everything small
  for (int n = 0; n <= 6; ++n)
    for (const auto& bp : bipartitions_of(n))
      CHECK(parse_bipartition(format_bipartition(bp)) == bp);
}
