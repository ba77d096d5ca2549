#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opgb/monomial_order.hpp"
#include "opgb/rational.hpp"
#include "opgb/tree_monomial.hpp"

namespace opgb {

/// Exact linear combination of tree monomials of one arity.
///
/// Terms are kept sorted by the structural monomial comparison with no zero
/// coefficients, so equality and hashing are linear in the number of terms.
/// Leading terms and printing take an explicit MonomialOrder.
class OperadElement {
 public:
  using Term = std::pair<TreeMonomial, Rational>;

  /// The zero element; compatible with every arity.
  OperadElement() = default;
  explicit OperadElement(const TreeMonomial& t, const Rational& c = 1);
  /// Combines equal monomials and drops zeros. Throws ArityError on mixed arities.
  static OperadElement from_terms(std::vector<Term> terms);

  /// 0 for the zero element.
  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(const TreeMonomial& t) const;

  /// Terms in descending order.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;
  /// Throws std::logic_error on zero.
  const TreeMonomial& leading(const MonomialOrder& order) const;
  const Rational& leading_coefficient(const MonomialOrder& order) const;

  OperadElement operator+(const OperadElement& g) const;
  OperadElement operator-(const OperadElement& g) const;
  OperadElement operator-() const;
  OperadElement operator*(const Rational& c) const;
  OperadElement& operator+=(const OperadElement& g) { return *this = *this + g; }
  OperadElement& operator-=(const OperadElement& g) { return *this = *this - g; }

  bool operator==(const OperadElement& g) const { return arity_ == g.arity_ && terms_ == g.terms_; }

  /// "1*z(z(1 2) 3) - 1*z(1 z(2 3))", terms descending; "0" for zero.
  std::string to_string(const Signature& sig, const MonomialOrder& order = {}) const;
  /// Accepts the printed form; coefficients may be omitted ("x(1 2) - y(1 2)").
  /// A bare number is a leaf. `line` is used for error positions.
  static OperadElement parse(std::string_view text, const Signature& sig, int line = 1);

 private:
  std::vector<Term> terms_;
  int arity_ = 0;
};

inline OperadElement operator*(const Rational& c, const OperadElement& f) { return f * c; }

/// gamma_pi(f; g_1..g_m): g_i grafted on input i of f with labels taken from
/// block i of pi. Throws ArityError when shapes do not fit.
TreeMonomial shuffle_compose(const TreeMonomial& f, const ShufflePartition& pi, std::span<const TreeMonomial> gs);
OperadElement shuffle_compose(const OperadElement& f, const ShufflePartition& pi, std::span<const OperadElement> gs);

/// host with the divisor at occ replaced by `replacement`, linearly.
OperadElement graft_at(const TreeMonomial& host, const Occurrence& occ, const OperadElement& replacement);

}  // namespace opgb
