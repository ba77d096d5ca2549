#include <sstream>

#include "doctest.h"
#include "opgb/errors.hpp"
#include "opgb/groebner.hpp"
#include "opgb/hilbert.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace opgb;
using opgb::testing::cached_basis;
using opgb::testing::rng;

namespace {

std::vector<std::uint64_t> dims(const GroebnerBasis& b) {
  auto d = normal_counts(b, b.max_arity);
  return {d.begin() + 1, d.end()};
}

OperadElement random_element(const Signature& sig, int arity, int terms) {
  static std::map<std::pair<std::string, int>, std::vector<TreeMonomial>> cache;
  auto& all = cache[{sig.to_string(), arity}];
  if (all.empty()) all = enumerate_monomials(sig, arity);
  std::vector<OperadElement::Term> out;
  for (int i = 0; i < terms; ++i) {
    Rational c(static_cast<long>(rng()() % 9) - 4, 1 + rng()() % 4);
    c.canonicalize();
    out.emplace_back(all[rng()() % all.size()], c);
  }
  return OperadElement::from_terms(out);
}

OperadElement image(const std::string& identity) {
  return shuffle_image(named_identities().at(identity), gd_signature());
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("gd dimensions through arity 5") {
    CHECK(dims(cached_basis("gd", 5)) == std::vector<std::uint64_t>{1, 3, 17, 140, 1524});
  }

  TEST_CASE("wsgd dimensions through arity 5") {
    CHECK(dims(cached_basis("wsgd", 5)) == std::vector<std::uint64_t>{1, 3, 17, 130, 1219});
  }

  TEST_CASE("dimensions do not depend on the order") {
    for (const char* name : {"gd", "wsgd", "novikov", "lie"})
      CHECK(dims(cached_basis(name, 5, "pathlex-rev")) == dims(cached_basis(name, 5)));
  }

  TEST_CASE("lie: (n-1)! normal monomials, matching the Lyndon count") {
    auto d = dims(cached_basis("lie", 6));
    std::uint64_t f = 1;
    for (int n = 1; n <= 6; ++n) {
      CHECK(d[n - 1] == f);
      CHECK(d[n - 1] == opgb::testing::lyndon_count(n));
      f *= n;
    }
  }

  TEST_CASE("normal counts agree with brute-force linear algebra up to arity 4") {
    for (const char* name : {"lie", "novikov", "gd", "wsgd"}) {
      CAPTURE(name);
      const auto& p = builtin_presentation(name);
      auto d = dims(cached_basis(name, 4));
      for (int n = 2; n <= 4; ++n) CHECK(d[n - 1] == opgb::testing::brute_quotient_dimension(p, n));
    }
  }

  TEST_CASE("relations reduce to zero") {
    for (const char* name : {"lie", "novikov", "gd", "wsgd"}) {
      Reducer r(cached_basis(name, 5));
      for (const auto& rel : builtin_presentation(name).relations) CHECK(r.reduce(rel).is_zero());
    }
  }

  TEST_CASE("rule polynomials reduce to zero and the basis is interreduced") {
    const auto& b = cached_basis("gd", 5);
    CHECK(validate_basis(b).empty());
    Reducer r(b);
    for (const auto& rule : b.rules) {
      CHECK(r.reduce(rule.polynomial()).is_zero());
      CHECK(rule.lead.arity() <= 5);
    }
  }

  TEST_CASE("special identities: membership") {
    Reducer gd(cached_basis("gd", 5));
    Reducer ws(cached_basis("wsgd", 5));
    for (const char* s : {"spec3", "spec4", "spec5"}) {
      CAPTURE(s);
      auto f = image(s);
      CHECK(f.arity() == 5);
      CHECK(!f.is_zero());
      CHECK(ws.reduce(f).is_zero());
      CHECK(!gd.reduce(f).is_zero());
    }
    for (const char* s : {"spec1", "spec2"}) {
      CAPTURE(s);
      auto f = image(s);
      CHECK(f.arity() == 4);
      CHECK(!gd.reduce(f).is_zero());
      CHECK(ws.reduce(f).is_zero());
    }
  }

  TEST_CASE("whole orbits of the degree-5 identities lie in wsgd") {
    Reducer ws(cached_basis("wsgd", 5));
    for (const char* s : {"spec3", "spec4", "spec5"})
      for (const auto& f : symmetric_to_shuffle(named_identities().at(s), gd_signature())) CHECK(ws.reduce(f).is_zero());
  }

  TEST_CASE("s-polynomials") {
    const auto& lie = cached_basis("lie", 4);
    auto arity3 = lie.rules_of_arity(3);
    REQUIRE(arity3.size() == 1);
    const auto& jac = *arity3[0];
    auto sp = s_polynomials(jac, jac, 4);
    CHECK(!sp.empty());
    Reducer r(lie);
    for (const auto& f : sp) CHECK(r.reduce(f).is_zero());
    CHECK(s_polynomials(jac, jac, 3).empty());

    const auto& gd = cached_basis("gd", 4);
    auto rules = gd.rules_of_arity(3);
    for (std::size_t i = 0; i < rules.size(); i += 3)
      for (std::size_t j = 0; j < rules.size(); j += 2) {
        auto a = s_polynomials(*rules[i], *rules[j], 4);
        auto b = s_polynomials(*rules[j], *rules[i], 4);
        CHECK(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k)
          CHECK(std::find(b.begin(), b.end(), -a[k]) != b.end());
      }
  }

  TEST_CASE("randomized strategies agree with the deterministic one") {
    const auto& b = cached_basis("gd", 5);
    Reducer r(b);
    for (int s = 0; s < 60; ++s) {
      auto f = random_element(b.signature, 3 + s % 3, 1 + s % 4);
      auto nf = r.reduce(f);
      CHECK(r.reduce_randomized(f, rng()) == nf);
      CHECK(r.reduce(nf) == nf);
      for (const auto& [t, c] : nf.terms()) CHECK(r.is_normal(t));
    }
  }

  TEST_CASE("reduction respects the arity range and order tag") {
    const auto& b = cached_basis("gd", 4);
    Reducer r(b);
    CHECK_THROWS_AS(r.reduce(random_element(b.signature, 5, 1)), ArityError);
    auto f = random_element(b.signature, 4, 2);
    CHECK(r.reduce(f, "pathlex") == r.reduce(f));
    CHECK_THROWS_AS(r.reduce(f, "pathlex-rev"), std::invalid_argument);
  }

  TEST_CASE("budget") {
    BuchbergerOptions o;
    o.max_arity = 5;
    o.monomial_budget = 1000;
    CHECK_THROWS_AS(buchberger(builtin_presentation("gd"), o), BudgetExceeded);
    CHECK_THROWS_AS(buchberger(builtin_presentation("wsgd"), 3), ArityError);
  }

  TEST_CASE("progress callback sees every arity") {
    std::vector<int> seen;
    BuchbergerOptions o;
    o.max_arity = 4;
    o.on_progress = [&](const BuchbergerProgress& p) { seen.push_back(p.arity); };
    auto b = buchberger(builtin_presentation("gd"), o);
    CHECK(seen.back() == 4);
    CHECK(b.max_arity == 4);
  }

  TEST_CASE("save and load") {
    const auto& b = cached_basis("wsgd", 4);
    std::stringstream ss;
    save_basis(b, ss);
    std::string text = ss.str();
    std::istringstream in(text);
    auto back = load_basis(in);
    CHECK(back.presentation_name == "wsgd");
    CHECK(back.order_id == b.order_id);
    CHECK(back.max_arity == 4);
    REQUIRE(back.rules.size() == b.rules.size());
    for (std::size_t i = 0; i < b.rules.size(); ++i) {
      CHECK(back.rules[i].lead == b.rules[i].lead);
      CHECK(back.rules[i].tail == b.rules[i].tail);
    }
    std::stringstream again;
    save_basis(back, again);
    CHECK(again.str() == text);

    // flip one coefficient in a rule line
    auto pos = text.find("=> ");
    REQUIRE(pos != std::string::npos);
    std::string tampered = text;
    auto star = tampered.find('*', pos);
    tampered[star - 1] = tampered[star - 1] == '2' ? '3' : '2';
    std::istringstream bad(tampered);
    CHECK_THROWS_AS(load_basis(bad), ParseError);

    std::string versioned = text;
    versioned.replace(versioned.find("v1"), 2, "v9");
    std::istringstream bad2(versioned);
    CHECK_THROWS_AS(load_basis(bad2), ParseError);

    std::istringstream empty("");
    CHECK_THROWS_AS(load_basis(empty), ParseError);
  }

#ifdef OPGB_EXTENDED
  TEST_CASE("gd arity 6") {
    CHECK(dims(cached_basis("gd", 6)).back() == 20699);
  }
#endif
}
