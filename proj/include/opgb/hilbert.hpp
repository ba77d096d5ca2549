#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opgb/groebner.hpp"

namespace opgb {

/// Standard monomials of arity n that no lead divides, built bottom-up:
/// children of a normal monomial are normal, so only divisors through the
/// root vertex need checking.
std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& basis, int n);

/// dims[n] for n = 1..max_arity (dims[0] unused). Throws ArityError when
/// max_arity exceeds the basis range.
std::vector<std::uint64_t> normal_counts(const GroebnerBasis& basis, int max_arity);

struct DimensionTable {
  std::string name;
  std::vector<std::pair<int, std::uint64_t>> rows;

  /// Two aligned rows: "n   | 1 2 3 ..." and "dim | 1 3 17 ...".
  std::string to_text() const;
  /// "n,dim" header then one line per arity.
  std::string to_csv() const;
};

/// Arities 1..up_to (0 means the whole completed range).
DimensionTable dimension_table(const GroebnerBasis& basis, int up_to = 0);

}  // namespace opgb
