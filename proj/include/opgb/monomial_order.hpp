#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opgb/tree_monomial.hpp"

namespace opgb {

/// Graded path-lexicographic order on monomials of one arity.
///
/// Monomials are compared by degree, then by the words of generators read from
/// the root to leaves 1..n (each word compared length first, then letter by
/// letter), then by the planar leaf permutation in reverse-lexicographic order.
/// "pathlex-rev" is the same order with the generator ranks reversed.
class MonomialOrder {
 public:
  MonomialOrder() = default;  // pathlex

  /// Throws std::invalid_argument for an unknown id.
  static MonomialOrder by_id(std::string_view id);
  static std::vector<std::string> available();

  const std::string& id() const { return id_; }

  /// Byte string whose lexicographic order is the monomial order (for equal
  /// arities). Distinct monomials have distinct keys.
  std::string key(const TreeMonomial& t) const;

  /// -1, 0, 1. Throws ArityError when the arities differ.
  int compare(const TreeMonomial& a, const TreeMonomial& b) const;
  bool less(const TreeMonomial& a, const TreeMonomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& other) const { return id_ == other.id_; }

 private:
  std::string id_ = "pathlex";
  bool reversed_ranks_ = false;
};

}  // namespace opgb
