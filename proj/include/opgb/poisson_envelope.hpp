#pragma once

#include <map>
#include <string>
#include <vector>

#include "opgb/operad_element.hpp"

namespace opgb {

/// Multilinear elements of the free differential Poisson algebra, realized
/// inside the symmetric algebra on the free associative algebra: a monomial is
/// a multiset of words, each letter coded as variable * 16 + derivative order.
class PoissonElement {
 public:
  using Key = std::vector<std::string>;

  static PoissonElement variable(int v);

  PoissonElement operator+(const PoissonElement& o) const;
  PoissonElement operator*(const PoissonElement& o) const;
  PoissonElement derivative() const;
  PoissonElement bracket(const PoissonElement& o) const;
  PoissonElement scaled(const Rational& c) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }

 private:
  std::map<Key, Rational> terms_;
  void add(Key k, const Rational& c);
};

/// Evaluates x(A,B) = A d(B), y(A,B) = B d(A), z(A,B) = {A,B} (generators
/// 0, 1, 2 of the GD signature) on distinct variables.
PoissonElement evaluate_in_envelope(const TreeMonomial& t);
PoissonElement evaluate_in_envelope(const OperadElement& f);

/// Dimension of the span of the images of the given monomials.
std::size_t envelope_rank(const std::vector<TreeMonomial>& monomials);

}  // namespace opgb
