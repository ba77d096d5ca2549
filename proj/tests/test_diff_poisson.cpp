#include <set>

#include "doctest.h"
#include "opgb/diff_poisson.hpp"
#include "opgb/errors.hpp"
#include "opgb/hilbert.hpp"
#include "opgb/linear_algebra.hpp"
#include "opgb/poisson_envelope.hpp"
#include "test_support.hpp"

using namespace opgb;
using namespace opgb::dp;
using opgb::testing::cached_basis;

namespace {

SymPtr var(char c) { return SymTree::variable(c - 'a' + 1); }

DMonomial mono(const std::string& text) {
  auto p = parse_monomial(text);
  REQUIRE(p.size() == 1);
  return p.terms().begin()->second.first;
}

std::vector<OperadElement> reduced_orbit(const std::string& name, Reducer& r) {
  std::vector<OperadElement> out;
  for (const auto& f : symmetric_to_shuffle(named_identities().at(name), gd_signature())) out.push_back(r.reduce(f));
  return out;
}

const std::vector<Ambiguity>& ambiguities(int n) {
  static std::map<int, std::vector<Ambiguity>> cache;
  auto& a = cache[n];
  if (a.empty()) a = enumerate_ambiguities(n);
  return a;
}

std::string pair_kind(const Ambiguity& a) { return a.first.id() + "/" + a.second.id(); }

long stirling1(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n == 0 || k == 0) return 0;
  return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k);
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("diff_poisson") {
  TEST_CASE("weights") {
    CHECK(mono("a").weight() == -1);
    CHECK(mono("a b'").weight() == -1);
    CHECK(mono("{a,b'}").weight() == 0);
    CHECK(mono("a b {c,d''}").weight() == -1);
    CHECK(mono("a^(4)").weight() == 3);
    CHECK_THROWS_AS(normal_form(parse_monomial("{a,b'}")), std::invalid_argument);
    CHECK_THROWS_AS(normal_form(parse_monomial("a b")), std::invalid_argument);
  }

  TEST_CASE("parsing and printing") {
    CHECK(parse_monomial("{b,a'}").to_string() == "-1*{a',b}");
    CHECK(parse_monomial("c' {a,b}").to_string() == "1*c' {a,b}");
    CHECK(parse_monomial("a^(5)").to_string() == "1*a^(5)");
    CHECK_THROWS_AS(parse_monomial("{a,a}"), ParseError);
    CHECK(DiffLetter{SymTree::circ(var('a'), var('b')), 1}.to_string() == "(a∘b)'");
    CHECK(DiffLetter{SymTree::bracket(var('a'), var('b')), 2}.to_string() == "[a,b]''");
    CHECK_THROWS_AS(parse_monomial(""), ParseError);
    CHECK_THROWS_AS(parse_monomial("a{b"), ParseError);
    CHECK_THROWS_AS(parse_monomial("a{b;c}"), ParseError);
    CHECK_THROWS_AS(parse_monomial("A"), ParseError);
  }

  TEST_CASE("letter order") {
    CHECK(letter_less({var('a'), 0}, {var('b'), 0}));
    CHECK(letter_less({var('a'), 2}, {var('a'), 1}));
    CHECK(!letter_less({var('a'), 1}, {var('a'), 1}));
    CHECK(letter_less({var('c'), 0}, {SymTree::circ(var('a'), var('b')), 0}));
  }

  TEST_CASE("lie rule in order one") {
    // {b,c'} = [b,c]' - {b',c}
    auto comb = lie_rule({var('b'), 0}, {var('c'), 1});
    REQUIRE(comb.size() == 2);
    DPoly got;
    for (const auto& [c, t] : comb) got.add(DMonomial({t}), c);
    DPoly want = parse_monomial("{c,b'}");
    want.add(DMonomial({LieNode::leaf({SymTree::bracket(var('b'), var('c')), 1})}), 1);
    CHECK(got == want);
    CHECK_THROWS_AS(lie_rule({var('b'), 1}, {var('c'), 1}), std::invalid_argument);
  }

  TEST_CASE("lie rule in order two carries binomial coefficients") {
    auto comb = lie_rule({var('b'), 0}, {var('c'), 2});
    DPoly got;
    for (const auto& [c, t] : comb) got.add(DMonomial({t}), c);
    // [b,c]'' - 2{b',c'} - {b'',c}
    DPoly want = parse_monomial("{c,b''}");
    want.add(parse_monomial("{b',c'}"), -2);
    want.add(DMonomial({LieNode::leaf({SymTree::bracket(var('b'), var('c')), 2})}), 1);
    CHECK(got == want);
  }

  TEST_CASE("commutative rule") {
    auto r = com_rule({var('a'), 0}, {var('b'), 2});
    DPoly want = parse_monomial("a' b'");
    want = [&] {
      DPoly w;
      w.add(want, -1);
      w.add(DMonomial({LieNode::leaf({SymTree::circ(var('a'), var('b')), 1})}), 1);
      return w;
    }();
    CHECK(r == want);
    CHECK_THROWS_AS(com_rule({var('a'), 0}, {var('b'), 0}), std::invalid_argument);
  }

  TEST_CASE("normal form of a{b,c'} with trace") {
    std::vector<TraceStep> trace;
    auto nf = normal_form(parse_monomial("a{b,c'}"), &trace);
    CHECK(nf.to_string() == "1*[a,b]∘c - 1*[a∘c,b]");
    std::vector<std::string> rules;
    for (const auto& s : trace) rules.push_back(s.rule);
    CHECK(rules == std::vector<std::string>{"pois", "collapse", "com", "collapse"});
    CHECK(trace.front().to_string() == "pois: a {b,c'} -> 1*c' {a,b} - 1*{a∘c,b}");
  }

  TEST_CASE("ab'{c,d'}: both routes end in single letters and differ by the first special identity") {
    auto m = mono("a b' {c,d'}");
    auto sites = find_sites(m);
    const Site* com = nullptr;
    const Site* pois = nullptr;
    for (const auto& s : sites) {
      if (s.kind == SiteKind::Com) com = &s;
      if (s.kind == SiteKind::Pois && m.factors()[s.other]->key == "{c,d'}") pois = &s;
    }
    REQUIRE(com);
    REQUIRE(pois);
    auto left = normal_form(apply_site(m, *com));
    auto right = normal_form(apply_site(m, *pois));
    for (const auto* p : {&left, &right})
      for (const auto& [k, t] : p->terms()) CHECK(t.first.factors().size() == 1);
    DPoly diff = left;
    diff.add(right, -1);
    auto residue = to_operad(diff, 4);
    auto spec1 = shuffle_image(named_identities().at("spec1"), gd_signature());
    Reducer gd(cached_basis("gd", 5));
    CHECK(!gd.reduce(residue).is_zero());
    CHECK((gd.reduce(residue - spec1).is_zero() || gd.reduce(residue + spec1).is_zero()));
  }

  TEST_CASE("every weight -1 monomial in four letters normalizes") {
    for (const auto& m : weight_minus_one_monomials(4)) {
      CAPTURE(m.to_string());
      DPoly nf;
      CHECK_NOTHROW(nf = normal_form(DPoly(m)));
      for (const auto& [k, t] : nf.terms()) {
        REQUIRE(t.first.factors().size() == 1);
        CHECK(t.first.factors()[0]->is_leaf());
        CHECK(t.first.factors()[0]->orders == 0);
        CHECK(t.first.degree() == 4);
      }
    }
  }

  TEST_CASE("ambiguity families") {
    std::set<std::string> f3;
    for (const auto& a : ambiguities(3)) f3.insert(a.family);
    CHECK(f3 == std::set<std::string>{"a {b,c'}"});
    CHECK(ambiguities(3).size() == 3);

    std::map<std::string, int> f4;
    for (const auto& a : ambiguities(4)) f4[a.family]++;
    CHECK(f4 == std::map<std::string, int>{{"A1", 4}, {"A2", 8}, {"A3", 48}, {"A4", 36}, {"A5", 24}});

    std::set<std::string> f5;
    for (const auto& a : ambiguities(5)) f5.insert(a.pattern);
    CHECK(f5 == std::set<std::string>{"a b c {d',e''}", "a b c {d,e'''}", "a b c' {d',e'}", "a b c' {d,e''}",
                                      "a b c'' {d,e'}", "a b {c',{d,e'}}", "a b {c,{d',e'}}", "a b {c,{d,e''}}",
                                      "a b' c' {d,e'}", "a b' {c,{d,e'}}", "a {b,c'} {d,e'}",
                                      "a {b,{c,{d,e'}}}"});
    CHECK_THROWS_AS(enumerate_ambiguities(6), std::invalid_argument);
  }

  TEST_CASE("degree 3 ambiguities resolve modulo gd") {
    Reducer gd(cached_basis("gd", 5));
    for (const auto& a : ambiguities(3)) CHECK(resolve(a, gd).reduced.is_zero());
  }

  TEST_CASE("degree 4 residues span exactly the two special identities") {
    Reducer gd(cached_basis("gd", 5));
    auto s1 = reduced_orbit("spec1", gd);
    auto s2 = reduced_orbit("spec2", gd);
    auto both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    std::vector<OperadElement> all, a3, a5;
    for (const auto& a : ambiguities(4)) {
      auto r = resolve(a, gd);
      all.push_back(r.reduced);
      const auto kind = pair_kind(a);
      if (a.family == "A1" || a.family == "A2" || kind == "lie/com") CHECK(r.reduced.is_zero());
      if (a.family == "A3" && kind == "com/pois") a3.push_back(r.reduced);
      if (a.family == "A5" && kind == "pois/pois") a5.push_back(r.reduced);
    }
    CHECK(span_rank(all) == 10);
    CHECK(span_rank(both) == 10);
    CHECK(span_rank(s1) == 4);
    CHECK(span_rank(s2) == 6);
    CHECK(same_span(all, both));
    CHECK(same_span(a3, s1));
    auto with_s1 = a5;
    with_s1.insert(with_s1.end(), s1.begin(), s1.end());
    CHECK(span_rank(a5) > 0);
    CHECK(span_rank(with_s1) == span_rank(s1));
  }

  TEST_CASE("degree 5 ambiguities resolve modulo wsgd") {
    Reducer ws(cached_basis("wsgd", 5));
    Reducer gd(cached_basis("gd", 5));
    std::size_t nonzero_mod_gd = 0;
    for (const auto& a : ambiguities(5)) {
      auto r = resolve(a, ws);
      CHECK(r.reduced.is_zero());
      nonzero_mod_gd += !gd.reduce(r.residue).is_zero();
    }
    CHECK(nonzero_mod_gd > 0);
  }

  TEST_CASE("resolution traces") {
    Reducer gd(cached_basis("gd", 5));
    const auto& a = ambiguities(3).front();
    auto r = resolve(a, gd, true);
    CHECK(!r.left_trace.empty());
    CHECK(!r.right_trace.empty());
    auto plain = resolve(a, gd);
    CHECK(plain.left_trace.empty());
    CHECK(plain.left == r.left);
  }

  TEST_CASE("envelope: dimensions of the image agree with wsgd") {
    const auto& gd = cached_basis("gd", 5);
    std::vector<std::size_t> ranks;
    for (int n = 1; n <= 5; ++n) ranks.push_back(envelope_rank(normal_monomials(gd, n)));
    CHECK(ranks == std::vector<std::size_t>{1, 3, 17, 130, 1219});
  }

  TEST_CASE("envelope: special identities and residues vanish") {
    for (const char* s : {"spec1", "spec2", "spec3", "spec4", "spec5", "gd1"}) {
      CAPTURE(s);
      CHECK(evaluate_in_envelope(shuffle_image(named_identities().at(s), gd_signature())).is_zero());
    }
    Reducer gd(cached_basis("gd", 5));
    for (const auto& a : ambiguities(4)) CHECK(evaluate_in_envelope(resolve(a, gd).residue).is_zero());
    auto t = TreeMonomial::parse("x(1 2)", gd_signature());
    CHECK(!evaluate_in_envelope(t).is_zero());
  }

  TEST_CASE("reduced Lyndon-Shirshov words") {
    std::vector<DiffLetter> ab1{{var('a'), 0}, {var('b'), 1}};
    CHECK(is_lyndon(ab1));
    CHECK(matches_reduced_pattern(ab1));
    std::vector<DiffLetter> b1a{{var('b'), 1}, {var('a'), 0}};
    CHECK(!matches_reduced_pattern(b1a));
    std::vector<DiffLetter> ba1{{var('b'), 0}, {var('a'), 1}};
    CHECK(!matches_reduced_pattern(ba1));
    std::vector<SymPtr> alphabet{var('a'), var('b'), var('c')};
    std::vector<std::string> words;
    for (const auto& w : ls_basis(alphabet, 2, 0)) words.push_back(w.to_string() + " " + w.bracketed());
    CHECK(words == std::vector<std::string>{"ab' {a,b'}", "ac' {a,c'}", "bc' {b,c'}"});
  }

  TEST_CASE("reduced words count the multilinear free Lie part") {
    // sum_m c(n,m) W(m,D) = C(D+n-1,n-1) (n-1)!
    for (int n = 1; n <= 4; ++n)
      for (int d = 0; d <= 3; ++d) {
        long lhs = 0;
        for (int m = 1; m <= n; ++m) {
          std::vector<SymPtr> alphabet;
          for (int i = 1; i <= m; ++i) alphabet.push_back(SymTree::variable(i));
          lhs += stirling1(n, m) * static_cast<long>(ls_basis(alphabet, m, d - 1).size());
        }
        long f = 1;
        for (int i = 2; i < n; ++i) f *= i;
        CAPTURE(n);
        CAPTURE(d);
        CHECK(lhs == binom(d + n - 1, n - 1) * f);
      }
  }
}
