#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "opgb/operad_element.hpp"
#include "opgb/rational.hpp"

namespace opgb {

using SparseVector = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

/// Incremental row echelon form over Q. Each stored row has a distinct pivot
/// (its smallest column) with coefficient 1.
class RowEchelon {
 public:
  /// Reduces v against the stored rows; returns the remainder.
  SparseVector reduce(const SparseVector& v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  const std::map<int, SparseVector>& rows() const { return rows_; }

 private:
  std::map<int, SparseVector> rows_;
};

/// Assigns consecutive column indices to monomials on first sight.
class MonomialIndex {
 public:
  int index(const TreeMonomial& t);
  const TreeMonomial& monomial(int i) const { return monomials_[i]; }
  std::size_t size() const { return monomials_.size(); }
  SparseVector vectorize(const OperadElement& f);
  OperadElement element(const SparseVector& v) const;

 private:
  std::unordered_map<TreeMonomial, int> ids_;
  std::vector<TreeMonomial> monomials_;
};

/// Dimension of the span of the given elements.
std::size_t span_rank(const std::vector<OperadElement>& elements);
/// Whether the two families span the same subspace.
bool same_span(const std::vector<OperadElement>& a, const std::vector<OperadElement>& b);

}  // namespace opgb
