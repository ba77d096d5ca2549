#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "opgb/operad_element.hpp"
#include "opgb/rational.hpp"
#include "opgb/tree_monomial.hpp"

namespace opgb {

/// Multilinear expression in a GD-type algebra: variables, the product
/// `a∘b` (also written `a.b`) and the bracket `[a,b]`.
struct SymTree {
  enum class Kind { Var, Circ, Bracket };
  Kind kind = Kind::Var;
  int var = 0;  // 1-based, for Var
  std::shared_ptr<const SymTree> left, right;

  static std::shared_ptr<const SymTree> variable(int v);
  static std::shared_ptr<const SymTree> circ(std::shared_ptr<const SymTree> a, std::shared_ptr<const SymTree> b);
  static std::shared_ptr<const SymTree> bracket(std::shared_ptr<const SymTree> a, std::shared_ptr<const SymTree> b);

  int arity() const;
  std::string to_string() const;
};

/// A symmetric identity, stored as `sum c_i T_i = 0` over variables 1..n.
struct SymmetricRelation {
  std::vector<std::pair<Rational, std::shared_ptr<const SymTree>>> terms;
  int arity = 0;

  /// Parses e.g. "[c,a∘d]∘b + ([a,c]∘d)∘b = [c,(a∘b)∘d] - [c,a∘b]∘d".
  /// Variables are single letters, numbered by alphabetical rank.
  static SymmetricRelation parse(std::string_view text);
  std::string to_string() const;
};

/// Images of the symmetric generators in the shuffle signature:
/// circ(A,B) -> circ_forward(A,B) when min A < min B, else circ_backward(B,A);
/// bracket(A,B) -> bracket_gen(A,B) or -bracket_gen(B,A).
struct ConversionDictionary {
  std::string circ_forward = "x";
  std::string circ_backward = "y";
  std::string bracket_gen = "z";
};

/// The shuffle image of a single relabelled instance (labels as given).
OperadElement shuffle_image(const SymmetricRelation& rel, const Signature& sig,
                            const ConversionDictionary& dict = {});

/// Orbit of the relation under all permutations of its variables, rewritten
/// over the shuffle signature; one representative per line through the origin.
/// Throws ArityError if the dictionary names a generator missing from sig.
std::vector<OperadElement> symmetric_to_shuffle(const SymmetricRelation& rel, const Signature& sig,
                                                const ConversionDictionary& dict = {});

struct Presentation {
  std::string name;
  Signature signature;
  std::vector<OperadElement> relations;

  std::vector<OperadElement> relations_of_arity(int n) const;
  int max_relation_arity() const;
  /// DSL text; parse(to_text()) reproduces the presentation.
  std::string to_text() const;
};

/// DSL:
///   operad <name>
///   extends <builtin>            (optional)
///   generators x/2 y/2 z/2
///   relations:
///   <polynomial>                 one per line
///   symmetric: <identity>        orbit added via the x,y,z dictionary
/// `#` starts a comment. Errors carry line and column.
Presentation parse_presentation(std::string_view text);

/// lie, novikov, gd, wsgd.
const std::map<std::string, Presentation>& builtin_presentations();
const Presentation& builtin_presentation(const std::string& name);

/// Symmetric forms of the defining and special identities, keyed by name
/// (gd1, lsymm, rcomm, jacobi, spec1 .. spec5).
const std::map<std::string, SymmetricRelation>& named_identities();

/// The three-generator signature x/2 y/2 z/2.
const Signature& gd_signature();

}  // namespace opgb
