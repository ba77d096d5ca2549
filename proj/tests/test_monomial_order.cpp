#include <algorithm>
#include <random>

#include "doctest.h"
#include "opgb/errors.hpp"
#include "opgb/monomial_order.hpp"
#include "test_support.hpp"

using namespace opgb;
using opgb::testing::M;
using opgb::testing::rng;
using opgb::testing::xyz;

namespace {

void check_admissible(const MonomialOrder& order, int max_arity, int samples) {
  std::vector<std::vector<TreeMonomial>> by_arity(max_arity + 1);
  for (int n = 2; n <= max_arity; ++n) by_arity[n] = enumerate_monomials(xyz(), n);
  int checked = 0;
  for (int s = 0; s < samples; ++s) {
    int n = 3 + static_cast<int>(rng()() % (max_arity - 2));
    const auto& hosts = by_arity[n];
    const auto& host = hosts[rng()() % hosts.size()];
    std::vector<Occurrence> occs;
    std::vector<int> arities;
    for_each_divisor(host, [&](const TreeMonomial& p, const Occurrence& o) {
      occs.push_back(o);
      arities.push_back(p.arity());
    });
    std::size_t pick = rng()() % occs.size();
    int k = arities[pick];
    const auto& pool = by_arity[k];
    auto a = pool[rng()() % pool.size()];
    auto b = pool[rng()() % pool.size()];
    if (a == b) continue;
    if (order.less(b, a)) std::swap(a, b);
    auto ca = graft_monomial(host, occs[pick], a);
    auto cb = graft_monomial(host, occs[pick], b);
    CHECK(order.less(ca, cb));
    ++checked;
  }
  CHECK(checked > samples / 2);
}

}  // namespace

TEST_SUITE("monomial_order") {
  TEST_CASE("basic comparisons") {
    auto order = MonomialOrder::by_id("pathlex");
    CHECK(order.compare(TreeMonomial::leaf(1), TreeMonomial::leaf(1)) == 0);
    CHECK(order.less(M("x(1 2)"), M("y(1 2)")));
    CHECK(order.less(M("y(1 2)"), M("z(1 2)")));
    auto rev = MonomialOrder::by_id("pathlex-rev");
    CHECK(rev.less(M("z(1 2)"), M("x(1 2)")));
    CHECK_THROWS_AS(order.compare(M("x(1 2)"), M("x(x(1 2) 3)")), ArityError);
    CHECK_THROWS_AS(MonomialOrder::by_id("deglex"), std::invalid_argument);
  }

  TEST_CASE("total order on arity 3 and 4") {
    for (const auto& id : MonomialOrder::available()) {
      auto order = MonomialOrder::by_id(id);
      for (int n = 3; n <= 4; ++n) {
        auto all = enumerate_monomials(xyz(), n);
        std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) { return order.less(a, b); });
        for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(order.compare(all[i], all[i + 1]) < 0);
        if (n == 3) {
          // exhaustive pairwise antisymmetry and transitivity
          for (const auto& a : all)
            for (const auto& b : all) {
              CHECK(order.compare(a, b) == -order.compare(b, a));
              CHECK((order.compare(a, b) == 0) == (a == b));
              for (const auto& c : all)
                if (order.less(a, b) && order.less(b, c)) CHECK(order.less(a, c));
            }
        }
      }
    }
  }

  TEST_CASE("admissibility under composition contexts") {
    for (const auto& id : MonomialOrder::available()) check_admissible(MonomialOrder::by_id(id), 5, 3000);
  }
}
