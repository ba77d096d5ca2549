#include "opgb/monomial_order.hpp"

#include <stdexcept>

#include "opgb/errors.hpp"

namespace opgb {

MonomialOrder MonomialOrder::by_id(std::string_view id) {
  MonomialOrder o;
  if (id == "pathlex") {
    o.id_ = "pathlex";
  } else if (id == "pathlex-rev") {
    o.id_ = "pathlex-rev";
    o.reversed_ranks_ = true;
  } else {
    throw std::invalid_argument("unknown monomial order '" + std::string(id) + "'");
  }
  return o;
}

std::vector<std::string> MonomialOrder::available() { return {"pathlex", "pathlex-rev"}; }

std::string MonomialOrder::key(const TreeMonomial& t) const {
  const int n = t.arity();
  std::vector<std::string> paths(n + 1);
  std::vector<int> planar;
  std::string word;
  // iterative preorder walk with an explicit stack of remaining children
  std::vector<int> remaining;
  for (int i = 0; i < t.node_count(); ++i) {
    const auto& node = t.node(i);
    if (node.is_leaf()) {
      paths[node.value] = word;
      planar.push_back(node.value);
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        word.pop_back();
      }
    } else {
      int rank = reversed_ranks_ ? 127 - node.gen : node.gen;
      word.push_back(static_cast<char>(rank + 1));
      remaining.push_back(node.value);
    }
  }
  std::string key;
  key.push_back(static_cast<char>(t.degree()));
  for (int j = 1; j <= n; ++j) {
    key.push_back(static_cast<char>(paths[j].size()));
    key += paths[j];
  }
  for (auto it = planar.rbegin(); it != planar.rend(); ++it) key.push_back(static_cast<char>(*it));
  for (const auto& node : t.nodes()) {
    key.push_back(static_cast<char>(node.gen));
    key.push_back(static_cast<char>(node.value));
  }
  return key;
}

int MonomialOrder::compare(const TreeMonomial& a, const TreeMonomial& b) const {
  if (a.arity() != b.arity()) throw ArityError("comparing monomials of different arity");
  auto ka = key(a), kb = key(b);
  int c = ka.compare(kb);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace opgb
