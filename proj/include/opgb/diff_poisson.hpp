#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opgb/groebner.hpp"
#include "opgb/presentation.hpp"

namespace opgb::dp {

using SymPtr = std::shared_ptr<const SymTree>;

/// b^(order) for a GD expression b (a letter of the alphabet B^(omega)).
struct DiffLetter {
  SymPtr base;
  int order = 0;

  int degree() const { return base->arity(); }
  int weight() const { return order - 1; }
  std::string to_string() const;  // a, a', a'', a^(3), (a∘b)'
};

/// Letter order: bases compared first (variables by index, compound bases by
/// text), then higher derivative order is smaller.
bool letter_less(const DiffLetter& a, const DiffLetter& b);

struct LieNode;
using LiePtr = std::shared_ptr<const LieNode>;

/// Bracket monomial over letters. Children are stored in a canonical
/// orientation (smaller key on the left), so {u,v} and -{v,u} coincide.
struct LieNode {
  std::optional<DiffLetter> letter;
  LiePtr left, right;
  std::string key;
  int letters = 1;
  int orders = 0;  // total derivative order
  int degree = 1;

  bool is_leaf() const { return letter.has_value(); }
  int weight() const { return orders - 1; }

  static LiePtr leaf(DiffLetter l);
  /// {l, r} as sign * node; sign is 0 when l and r coincide.
  static std::pair<int, LiePtr> bracket(const LiePtr& l, const LiePtr& r);
};

using LieCombination = std::vector<std::pair<Rational, LiePtr>>;

/// Commutative product of bracket monomials, factors sorted by key.
class DMonomial {
 public:
  DMonomial() = default;
  explicit DMonomial(std::vector<LiePtr> factors);

  const std::vector<LiePtr>& factors() const { return factors_; }
  const std::string& key() const { return key_; }
  int weight() const;
  int degree() const;
  int letters() const;
  /// Factors that are a single letter of order 0.
  int underived_singles() const;
  std::string to_string() const { return key_; }

  DMonomial without(std::initializer_list<std::size_t> drop) const;
  DMonomial with(const LiePtr& extra) const;
  DMonomial times(const DMonomial& other) const;

  bool operator==(const DMonomial& o) const { return key_ == o.key_; }

 private:
  std::vector<LiePtr> factors_;
  std::string key_;
};

/// Element of the symmetric algebra on bracket monomials.
class DPoly {
 public:
  DPoly() = default;
  explicit DPoly(const DMonomial& m, const Rational& c = 1) { add(m, c); }

  void add(const DMonomial& m, const Rational& c);
  void add(const DPoly& p, const Rational& c = 1);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, std::pair<DMonomial, Rational>>& terms() const { return terms_; }
  std::string to_string() const;
  bool operator==(const DPoly& o) const;

 private:
  std::map<std::string, std::pair<DMonomial, Rational>> terms_;
};

/// Parses e.g. "a b' {c,d'}" or "a{b,{c,d'}}": single-letter variables, primes
/// or ^(n) for derivatives, braces for the Poisson bracket, juxtaposition for
/// the product. The result is +-1 times a monomial (orientation sign).
/// Throws ParseError.
DPoly parse_monomial(const std::string& text);

// ------------------------------------------------------------------ rules

/// {p, q^(n)} -> [p,q]^(n) - sum_{i=1..n} C(n,i) {p^(i), q^(n-i)}.
LieCombination lie_rule(const DiffLetter& p, const DiffLetter& q);
/// a b^(n) -> (a∘b)^(n-1) - sum_{i=1..n-1} C(n-1,i) a^(i) b^(n-i), n >= 1.
DPoly com_rule(const DiffLetter& a, const DiffLetter& b);
/// a * factor, moving a along `path` (0 = left child, 1 = right child) to the
/// derived leaf there and applying com_rule at the leaf.
DPoly pois_rule(const DiffLetter& a, const LiePtr& factor, const std::vector<int>& path);
/// {u, m} expanded by the Leibniz rule.
DPoly bracket_with(const LiePtr& u, const DMonomial& m);

enum class SiteKind { Lie, Com, Pois };

/// One applicable rule in a monomial.
struct Site {
  SiteKind kind;
  std::size_t factor = 0;  // Lie: the factor; Com/Pois: the underived letter factor
  std::size_t other = 0;   // Com/Pois: the factor holding the derived leaf
  std::vector<int> path;   // Lie: the bracket node; Pois: the derived leaf
  std::string id() const;  // "lie", "com", "pois"
  std::string describe(const DMonomial& m) const;
};

/// Lie sites need n >= 1 and p > q; the multiplication-table case n = 0 is
/// handled by collapsing.
std::vector<Site> find_sites(const DMonomial& m);
DPoly apply_site(const DMonomial& m, const Site& s);

struct TraceStep {
  std::string rule;
  std::string before;
  std::string after;
  std::string to_string() const { return rule + ": " + before + " -> " + after; }
};

/// Rewrites a weight -1 element to a combination of single underived letters.
/// Strategy: collapse underived brackets; otherwise take the first underived
/// letter factor and the first derived factor, applying com_rule or pushing
/// along the first derived leaf. Each step strictly lowers (letters,
/// underived single-letter factors) lexicographically; a violation throws
/// std::logic_error. Throws std::invalid_argument for other weights.
DPoly normal_form(const DPoly& f, std::vector<TraceStep>* trace = nullptr);

/// The single-letter combination as a GD expression of arity n, over the
/// x, y, z shuffle signature.
OperadElement to_operad(const DPoly& gd_part, int arity);

// ------------------------------------------------------------- ambiguities

struct Ambiguity {
  std::string family;   // A1..A5 in degree 4, the unlabeled pattern otherwise
  std::string pattern;  // e.g. "a b' {c,d'}"
  DMonomial monomial;
  Site first, second;
};

/// All collapsed multilinear monomials of weight -1 in n letters with a
/// bracket and at least two factors.
std::vector<DMonomial> weight_minus_one_monomials(int n);
std::string unlabeled_pattern(const DMonomial& m);

/// Pairs of distinct sites on one monomial, skipping pairs of two Lie sites and
/// pairs of two Com sites.
std::vector<Ambiguity> enumerate_ambiguities(int n);

struct Resolution {
  DPoly left, right;  // normal forms of the two one-step rewrites
  std::vector<TraceStep> left_trace, right_trace;
  OperadElement residue;  // left - right
  OperadElement reduced;  // residue modulo the supplied basis
};

Resolution resolve(const Ambiguity& a, Reducer& modulo, bool keep_trace = false);

// ------------------------------------------------ Lyndon-Shirshov words

/// Word over letters of B^(omega) with the Lyndon convention (strictly smaller
/// than each proper rotation, letters compared by letter_less).
struct LSWord {
  std::vector<DiffLetter> letters;
  std::string to_string() const;
  /// Standard bracketing from the longest proper Lyndon suffix.
  std::string bracketed() const;
};

bool is_lyndon(const std::vector<DiffLetter>& w);
/// Reduced words: x_11..x_1l a_1^(k_1) .. x_m1..x_ml a_m^(k_m), k_i >= 1,
/// x_i1 <= .. <= x_il <= a_i (underived x), plus single letters of any order.
bool matches_reduced_pattern(const std::vector<DiffLetter>& w);

/// Reduced Lyndon words using `degree` distinct letters of the alphabet (each
/// at most once) with weight `weight` (total derivative order weight + 1).
std::vector<LSWord> ls_basis(const std::vector<SymPtr>& alphabet, int degree, int weight);

}  // namespace opgb::dp
