#include "doctest.h"
#include "opgb/errors.hpp"
#include "opgb/hilbert.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace opgb;
using opgb::testing::cached_basis;

TEST_SUITE("hilbert") {
  TEST_CASE("gd counts") {
    const auto& b = cached_basis("gd", 5);
    auto d = normal_counts(b, 5);
    CHECK(d[1] == 1);
    CHECK(d[3] == 17);
    CHECK(d[4] == 140);
    CHECK(normal_monomials(b, 4).size() == 140);
    CHECK_THROWS_AS(normal_counts(b, 6), ArityError);
  }

  TEST_CASE("wsgd arity 5") { CHECK(normal_counts(cached_basis("wsgd", 5), 5)[5] == 1219); }

  TEST_CASE("normal monomials are exactly the irreducible ones") {
    const auto& b = cached_basis("gd", 4);
    Reducer r(b);
    for (int n = 1; n <= 4; ++n) {
      auto normal = normal_monomials(b, n);
      std::set<TreeMonomial> set(normal.begin(), normal.end());
      CHECK(set.size() == normal.size());
      std::size_t irreducible = 0;
      for (const auto& t : enumerate_monomials(b.signature, n)) {
        bool is_normal = r.is_normal(t);
        irreducible += is_normal;
        CHECK(is_normal == (set.count(t) == 1));
      }
      CHECK(irreducible == normal.size());
    }
  }

  TEST_CASE("tables") {
    auto lie = dimension_table(cached_basis("lie", 5));
    CHECK(lie.to_csv() == "n,dim\n1,1\n2,1\n3,2\n4,6\n5,24\n");
    auto gd = dimension_table(cached_basis("gd", 5), 3);
    CHECK(gd.rows == std::vector<std::pair<int, std::uint64_t>>{{1, 1}, {2, 3}, {3, 17}});
    CHECK(dimension_table(cached_basis("wsgd", 5), 3).rows == gd.rows);
    auto full = dimension_table(cached_basis("gd", 5));
    CHECK(full.to_text() ==
          "gd\n"
          "  n | 1 2  3   4    5\n"
          "dim | 1 3 17 140 1524\n");
    CHECK(full.to_csv() == "n,dim\n1,1\n2,3\n3,17\n4,140\n5,1524\n");
  }

  TEST_CASE("monotone under added relations") {
    auto gd = normal_counts(cached_basis("gd", 5), 5);
    auto ws = normal_counts(cached_basis("wsgd", 5), 5);
    for (int n = 1; n <= 5; ++n) CHECK(ws[n] <= gd[n]);
    CHECK(ws[4] == 130);
  }
}
