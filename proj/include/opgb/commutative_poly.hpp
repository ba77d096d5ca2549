#pragma once

#include <map>
#include <string>
#include <vector>

#include "opgb/rational.hpp"

namespace opgb {

using Exponents = std::vector<int>;

/// Degree-lexicographic comparison, variable 0 largest.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial over Q in a fixed number of commuting variables, terms kept in
/// descending deglex order.
class CPoly {
 public:
  explicit CPoly(int nvars = 0) : nvars_(nvars) {}
  static CPoly constant(int nvars, const Rational& c);
  static CPoly variable(int nvars, int i, const Rational& c = 1);
  static CPoly term(Exponents e, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational, DegLexGreater>& terms() const { return terms_; }
  const Exponents& leading() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }
  int degree() const;

  void add(const Exponents& e, const Rational& c);
  CPoly operator+(const CPoly& o) const;
  CPoly operator-(const CPoly& o) const;
  CPoly operator*(const CPoly& o) const;
  CPoly operator-() const { return scaled(-1); }
  CPoly scaled(const Rational& c) const;
  CPoly partial(int i) const;
  bool operator==(const CPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// "u*v' - 2*v" with the given variable names.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponents, Rational, DegLexGreater> terms_;
};

inline CPoly operator*(const Rational& c, const CPoly& p) { return p.scaled(c); }

/// Full remainder of f by the list (multivariate division).
CPoly remainder(const CPoly& f, const std::vector<CPoly>& divisors);
CPoly s_polynomial(const CPoly& a, const CPoly& b);
/// All pairwise S-polynomials reduce to zero.
bool is_groebner(const std::vector<CPoly>& basis);
/// Monomials of total degree <= max_degree divisible by no leading monomial,
/// in ascending deglex order.
std::vector<Exponents> standard_monomials(const std::vector<CPoly>& basis, int nvars, int max_degree);

}  // namespace opgb
