#include <algorithm>
#include <regex>

#include "doctest.h"
#include "opgb/errors.hpp"
#include "golden.hpp"
#include "opgb/presentation.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace opgb;
using namespace opgb::golden;
using opgb::testing::M;

TEST_SUITE("presentation") {
  TEST_CASE("printed relations parse and monomials round trip byte for byte") {
    const std::regex mono(R"([xyz]\([^()]*(\([^()]*(\([^()]*\)[^()]*)*\)[^()]*)*\))");
    for (const auto& s : all_printed()) {
      OperadElement f;
      REQUIRE_NOTHROW(f = P(s));
      CHECK(!f.is_zero());
      int monomials = 0;
      for (std::sregex_iterator it(s.begin(), s.end(), mono), end; it != end; ++it) {
        ++monomials;
        CHECK(TreeMonomial::parse(it->str(), gd_signature()).to_string(gd_signature()) == it->str());
      }
      CHECK(monomials == static_cast<int>(f.size()));
      auto canonical = f.to_string(gd_signature());
      CHECK(P(canonical) == f);
      CHECK(P(canonical).to_string(gd_signature()) == canonical);
    }
  }

  TEST_CASE("canonical text of the Jacobi relation") {
    auto f = P(kPrintedJacobi);
    CHECK(f.to_string(gd_signature()) == "1*z(z(1 2) 3) - 1*z(z(1 3) 2) - 1*z(1 z(2 3))");
    CHECK(P("1*z(z(1 2) 3) - 1*z(1 z(2 3)) - 1*z(z(1 3) 2)") == f);
  }

  TEST_CASE("right commutativity parses") {
    auto f = P("x(x(1 2) 3) - x(x(1 3) 2)");
    CHECK(f.size() == 2);
    CHECK(f.coefficient(M("x(x(1 3) 2)")) == -1);
  }

  TEST_CASE("non-shuffle labelling is rejected") {
    CHECK_THROWS_AS(P("x(2 1)"), ParseError);
    CHECK_THROWS_AS(parse_presentation("operad bad\ngenerators x/2\nrelations:\nx(2 1)\n"), ParseError);
  }

  TEST_CASE("builtin presentations") {
    const auto& gd = builtin_presentation("gd");
    CHECK(gd.signature.size() == 3);
    CHECK(gd.relations.size() == 10);
    CHECK(gd.relations_of_arity(3).size() == 10);
    const auto& ws = builtin_presentation("wsgd");
    CHECK(ws.relations.size() == 28);
    CHECK(ws.relations_of_arity(4).size() == 18);
    CHECK(ws.max_relation_arity() == 4);
    CHECK(parse_all(all_printed()) == ws.relations);
    // lie: generator z and its single relation
    const auto& lie = builtin_presentation("lie");
    REQUIRE(lie.signature.size() == 1);
    CHECK(lie.signature[0].name == "z");
    REQUIRE(lie.relations.size() == 1);
    CHECK(lie.relations[0].to_string(lie.signature) == P(kPrintedJacobi).to_string(gd_signature()));
    CHECK(builtin_presentation("novikov").relations.size() == 6);
    CHECK_THROWS_AS(builtin_presentation("nope"), std::invalid_argument);
  }

  TEST_CASE("orbits of the Novikov identities reproduce the printed list") {
    auto got = concat(orbit("lsymm"), orbit("rcomm"));
    CHECK(got.size() == 6);
    CHECK(same_up_to_scalars(got, parse_all(kPrintedNovikov)));
  }

  TEST_CASE("Jacobi orbit collapses to the printed relation") {
    auto got = orbit("jacobi");
    REQUIRE(got.size() == 1);
    CHECK(proportional(got[0], P(kPrintedJacobi)));
  }

  TEST_CASE("orbit of the mixed identity reproduces the printed relations") {
    auto got = orbit("gd1");
    CHECK(got.size() == 3);
    CHECK(same_up_to_scalars(got, parse_all(kPrintedMixed)));
  }

  TEST_CASE("arity-3 quotients agree with the symmetric brute force") {
    const auto& ids = named_identities();
    using opgb::testing::symmetric_quotient_dimension;
    std::vector<SymmetricRelation> nov{ids.at("lsymm"), ids.at("rcomm")};
    std::vector<SymmetricRelation> all{ids.at("lsymm"), ids.at("rcomm"), ids.at("jacobi"), ids.at("gd1")};
    CHECK(symmetric_quotient_dimension({}, 3) == 27);
    CHECK(symmetric_quotient_dimension(nov, 3) == 27 - span_rank(parse_all(kPrintedNovikov)));
    CHECK(symmetric_quotient_dimension(all, 3) == 17);
    CHECK(27 - span_rank(builtin_presentation("gd").relations) == 17);
    std::vector<SymmetricRelation> jac{ids.at("jacobi")};
    CHECK(symmetric_quotient_dimension(jac, 3) == 26);
  }

  TEST_CASE("printed special relations span their orbits modulo the GD ideal") {
    auto gd_ideal = opgb::testing::ideal_component(builtin_presentation("gd"), 4);
    auto first = parse_all({kPrintedSpecial.begin(), kPrintedSpecial.begin() + 12});
    auto second = parse_all({kPrintedSpecial.begin() + 12, kPrintedSpecial.end()});
    auto o1 = orbit("spec1"), o2 = orbit("spec2");
    CHECK(o1.size() == 24);
    CHECK(o2.size() == 12);
    CHECK(same_span(concat(gd_ideal, o1), concat(gd_ideal, first)));
    CHECK(same_span(concat(gd_ideal, o2), concat(gd_ideal, second)));
    auto base = span_rank(gd_ideal);
    CHECK(base == 265);
    CHECK(span_rank(concat(gd_ideal, first)) == base + 4);
    CHECK(span_rank(concat(gd_ideal, second)) == base + 6);
    CHECK(span_rank(concat(concat(gd_ideal, first), second)) == base + 10);
  }

  TEST_CASE("symmetric identity parser") {
    auto r = SymmetricRelation::parse("(a∘b)∘c = (a∘c)∘b");
    CHECK(r.arity == 3);
    CHECK(r.terms.size() == 2);
    CHECK(SymmetricRelation::parse("(a.b).c - (a.c).b").arity == 3);
    CHECK_THROWS_AS(SymmetricRelation::parse("(a∘b)∘a"), ParseError);
    CHECK_THROWS_AS(SymmetricRelation::parse("[a,b"), ParseError);
    ConversionDictionary bad;
    bad.bracket_gen = "w";
    CHECK_THROWS_AS(symmetric_to_shuffle(r, gd_signature(), bad), ArityError);
  }

  TEST_CASE("presentation files") {
    const char* text =
        "# a small example\n"
        "operad mine\n"
        "generators: x/2 y/2 z/2\n"
        "relations:\n"
        "  x(x(1 2) 3) - x(x(1 3) 2)   # right commutativity\n"
        "symmetric: [[a,b],c] - [a,[b,c]] - [[a,c],b] = 0\n";
    auto p = parse_presentation(text);
    CHECK(p.name == "mine");
    CHECK(p.relations.size() == 2);
    CHECK(parse_presentation(p.to_text()).relations == p.relations);

    auto ext = parse_presentation("operad more\nextends gd\nrelations:\nsymmetric: [c,a∘d]∘b + ([a,c]∘d)∘b = [c,(a∘b)∘d] - [c,a∘b]∘d\n");
    CHECK(ext.relations.size() == 10 + 24);
    CHECK(ext.signature == gd_signature());
  }

  TEST_CASE("presentation errors carry positions") {
    auto expect = [](const std::string& text, int line, int col) {
      try {
        parse_presentation(text);
        FAIL("no error for: " << text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == col);
      }
    };
    expect("operad a\ngenerators x/2\nrelations:\nx(1 w(2 3))\n", 4, 5);
    expect("operad a\ngenerators x/2 y\n", 2, 16);
    expect("operad a\ngenerators x/1\n", 2, 12);
    expect("operad a\nextends nothing\n", 2, 9);
    expect("operad a\nbogus\n", 2, 1);
    expect("operad a\ngenerators x/2\nrelations:\nx(1 2) +\n", 4, 9);
    CHECK_THROWS_AS(parse_presentation("generators x/2\n"), ParseError);
  }
}
