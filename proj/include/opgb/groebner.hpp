#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "opgb/linear_algebra.hpp"
#include "opgb/monomial_order.hpp"
#include "opgb/operad_element.hpp"
#include "opgb/presentation.hpp"

namespace opgb {

/// lead -> tail, standing for the monic polynomial lead - tail.
struct RewriteRule {
  TreeMonomial lead;
  OperadElement tail;

  OperadElement polynomial() const { return OperadElement(lead) - tail; }
};

struct GroebnerBasis {
  Signature signature;
  std::vector<RewriteRule> rules;  // by arity, then ascending lead
  int max_arity = 0;
  std::string presentation_name;
  std::string order_id = "pathlex";

  MonomialOrder order() const { return MonomialOrder::by_id(order_id); }
  std::vector<const RewriteRule*> rules_of_arity(int n) const;
};

/// Normal forms modulo a set of rules. Keeps per-arity caches of one-step
/// rewrites and of full normal forms; not thread-safe.
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& basis);

  const GroebnerBasis& basis() const { return *basis_; }

  /// The deterministic rewriting site of m: the first host vertex in preorder
  /// at which some lead occurs, and the lowest-index rule there.
  struct Site {
    int rule;
    Occurrence occurrence;
  };
  std::optional<Site> first_site(const TreeMonomial& m) const;
  bool is_normal(const TreeMonomial& m) const { return !first_site(m); }

  /// Throws ArityError if f's arity exceeds the basis' completed range.
  OperadElement reduce(const OperadElement& f);
  /// Same, but refuses (std::invalid_argument) a request made under another order.
  OperadElement reduce(const OperadElement& f, std::string_view order_id);
  /// Rewrites at uniformly random sites; the result agrees with reduce()
  /// when the basis is complete.
  OperadElement reduce_randomized(const OperadElement& f, std::mt19937_64& rng) const;

  /// Internal interface for the completion loop.
  void add_rules(std::vector<RewriteRule> rules);
  /// Normal form of a monomial as (monomial, coefficient) pairs.
  const std::vector<OperadElement::Term>& monomial_normal_form(const TreeMonomial& m);
  void clear_cache();

 private:
  const GroebnerBasis* basis_;
  std::unique_ptr<GroebnerBasis> owned_;
  std::unordered_map<TreeMonomial, int> lead_index_;
  std::vector<int> lead_arities_;
  std::unordered_map<TreeMonomial, std::vector<OperadElement::Term>> nf_cache_;

  void index_rules();
};

/// For each common multiple of the two leads (arity <= max_arity), the
/// difference of the two one-step rewrites.
std::vector<OperadElement> s_polynomials(const RewriteRule& r1, const RewriteRule& r2, int max_arity);

struct BuchbergerProgress {
  int arity;
  std::size_t candidates;
  std::size_t new_rules;
  std::size_t total_rules;
  double seconds;
};

struct BuchbergerOptions {
  int max_arity = 5;
  std::string order_id = "pathlex";
  /// Completion refuses to start when some arity would exceed this many monomials.
  std::uint64_t monomial_budget = 3'000'000;
  std::function<void(const BuchbergerProgress&)> on_progress;
};

/// Arity-stratified completion. Throws BudgetExceeded when the monomial budget
/// would be exceeded, ArityError for relations above max_arity.
GroebnerBasis buchberger(const Presentation& p, const BuchbergerOptions& options);
inline GroebnerBasis buchberger(const Presentation& p, int max_arity) {
  BuchbergerOptions o;
  o.max_arity = max_arity;
  return buchberger(p, o);
}

/// Structural checks: leads exceed tails, no lead divides another lead, no
/// tail monomial is divisible by a lead. Returns an error message or empty.
std::string validate_basis(const GroebnerBasis& basis);

/// Text persistence with a checksum over the rule lines.
void save_basis(const GroebnerBasis& basis, std::ostream& out);
/// Throws ParseError on malformed input, checksum mismatch or a failed
/// structural check.
GroebnerBasis load_basis(std::istream& in);

}  // namespace opgb
