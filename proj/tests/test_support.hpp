#pragma once

#include <random>
#include <string>

#include "opgb/tree_monomial.hpp"

namespace opgb::testing {

inline const Signature& xyz() {
  static const Signature s({{"x", 2}, {"y", 2}, {"z", 2}});
  return s;
}

inline TreeMonomial M(const std::string& text) { return TreeMonomial::parse(text, xyz()); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

}  // namespace opgb::testing

#include <map>
#include <tuple>

#include "opgb/groebner.hpp"

namespace opgb::testing {

// Completed bases are shared between test cases.
inline const GroebnerBasis& cached_basis(const std::string& name, int max_arity,
                                         const std::string& order = "pathlex") {
  static std::map<std::tuple<std::string, int, std::string>, GroebnerBasis> cache;
  auto key = std::make_tuple(name, max_arity, order);
  auto it = cache.find(key);
  if (it == cache.end()) {
    BuchbergerOptions o;
    o.max_arity = max_arity;
    o.order_id = order;
    it = cache.emplace(key, buchberger(builtin_presentation(name), o)).first;
  }
  return it->second;
}

}  // namespace opgb::testing
