#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgb/commutative_poly.hpp"
#include "opgb/rational.hpp"

namespace opgb {

using Vec = std::vector<Rational>;

/// Structure constants of a finite-dimensional algebra with a product ∘ and a
/// bracket [,]: circ[i][j] = e_i ∘ e_j, bracket[i][j] = [e_i, e_j].
struct GDTable {
  int dim = 0;
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> circ, bracket;

  explicit GDTable(int dim = 0);
  Vec circ_of(const Vec& a, const Vec& b) const;
  Vec bracket_of(const Vec& a, const Vec& b) const;
  Vec basis(int i) const;

  /// Text format:
  ///   dim 2
  ///   basis u v            (optional; default e1 e2 ...)
  ///   bracket u v = 0 1
  ///   circ 1 1 = 0 1       (indices are 1-based numbers or basis names)
  /// Missing entries are zero; bracket j i defaults to -(bracket i j).
  /// Throws ParseError, also for a non-antisymmetric bracket.
  static GDTable parse(std::string_view text);
  std::string to_string() const;
  bool operator==(const GDTable& o) const { return dim == o.dim && circ == o.circ && bracket == o.bracket; }
};

struct AxiomCheck {
  std::string axiom;  // left-symmetry, right-commutativity, antisymmetry, jacobi, gd1
  bool pass = true;
  std::array<int, 3> witness{};  // 1-based basis indices of a failing triple
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  std::string to_string(const GDTable& t) const;
};

/// Evaluates every axiom on all basis triples.
AxiomReport check_gd_axioms(const GDTable& t);

enum class GDCase { Novikov, Case1, Case2, Case3, LieOnly };

struct Classification {
  GDCase kind = GDCase::Novikov;
  Rational alpha, gamma, delta;
  /// Normalized basis in the original coordinates (u, v); empty for Novikov.
  std::vector<Vec> basis;
  /// The table in the normalized basis: [u,v] = v with u∘u = αu+δv, u∘v = γv,
  /// v∘u = αv (Case 1); the α-scaled table of Case 2; [u,v]=v, u∘u=v (Case 3).
  GDTable normalized;
  std::string label() const;
};

/// Throws std::invalid_argument when dim != 2 or an axiom fails.
Classification classify_2dim(const GDTable& t);

/// Commutative algebra with relations, a bracket and a derivation given on
/// generators, plus images of a table basis.
struct EnvelopeSpec {
  std::vector<std::string> vars;
  std::vector<CPoly> relations;
  std::map<std::pair<int, int>, CPoly> bracket;  // i < j
  std::vector<CPoly> derivation;                 // d(var_i)
  std::vector<CPoly> embedding;                  // image of e_k

  int nvars() const { return static_cast<int>(vars.size()); }
  CPoly var(int i) const { return CPoly::variable(nvars(), i); }
  CPoly generator_bracket(int i, int j) const;
  /// Leibniz extension: sum over variables of df/dx_a dg/dx_b {x_a, x_b}.
  CPoly bracket_of(const CPoly& f, const CPoly& g) const;
  CPoly d(const CPoly& f) const;
  CPoly normal_form(const CPoly& f) const { return remainder(f, relations); }
};

struct EmbeddingReport {
  bool ok = true;
  std::vector<std::string> failures;
  int pairs_checked = 0;
  std::string to_string() const;
};

/// Checks: Jacobi on generator triples and bracket-closure of the ideal; d
/// preserves the ideal and d{f,g} = {df,g} + {f,dg} on all pairs of standard
/// monomials of degree <= truncation; the embedding preserves x∘y = x d(y) and
/// the bracket; the images are independent. Throws std::invalid_argument if the
/// relations are not a Groebner basis or sizes disagree.
EmbeddingReport verify_embedding(const GDTable& t, const EnvelopeSpec& e, int truncation = 6);

/// Structure constants re-derived from the envelope, nullopt if a product of
/// images leaves their span.
std::optional<GDTable> recover_table(const EnvelopeSpec& e);

GDTable case2_table(const Rational& alpha);
GDTable case3_table();
/// k[x,e]/(e^2), {x,e} = e/α, d = ∂/∂x, u -> x, v -> ex.
EnvelopeSpec case2_envelope(const Rational& alpha);
/// The same with d(e) = e/α as displayed alongside the construction.
EnvelopeSpec case2_envelope_displayed(const Rational& alpha);
/// k[u,v,u',v'] modulo the eight relations, bracket on generators, d(u)=u',
/// d(v)=v', d(u')=d(v')=0.
EnvelopeSpec case3_envelope();

/// {x^(m), y^(n)} = ((n-1) x^(m+1) y^(n) - (m-1) x^(m) y^(n+1)) / (γ-α) for
/// x, y in {u, v}, extended by Leibniz. Returns whether Jacobi holds on all
/// generator triples and d{a,b} = {da,b} + {a,db} on all generator pairs with
/// orders <= max_order. Throws std::invalid_argument when α = γ.
bool bracket1_check(const Rational& alpha, const Rational& gamma, int max_order, std::string* witness = nullptr);
/// The bracket above on two generators, over variables u^(k) = 2k, v^(k) = 2k+1.
CPoly bracket1(const Rational& alpha, const Rational& gamma, int nvars, int x, int m, int y, int n);
/// For a Case 1 table: {x,y} - [x,y] lies in the span of x y' - x∘y (x, y in
/// {u, v}), so the bracket is preserved in the Novikov envelope.
bool case1_bracket_consistent(const Classification& c);

}  // namespace opgb
