#pragma once

// Independent brute-force computations used as test oracles.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "opgb/linear_algebra.hpp"
#include "opgb/presentation.hpp"

namespace opgb::testing {

// The arity-n component of the ideal generated by the relations: every
// relation grafted into every context of arity n.
inline std::vector<OperadElement> ideal_component(const Presentation& p, int n) {
  std::vector<OperadElement> out;
  std::set<std::pair<TreeMonomial, std::uint64_t>> seen;
  for (const auto& m : enumerate_monomials(p.signature, n)) {
    for_each_divisor(m, [&](const TreeMonomial& pattern, const Occurrence& occ) {
      bool any = false;
      for (const auto& r : p.relations) any |= r.arity() == pattern.arity();
      if (!any) return;
      // the context is identified by where a fixed filler (the left comb
      // x(x(...x(1 2)...) k), preorder "x x ... x 1 2 ... k") lands
      int k = pattern.arity();
      std::vector<TreeMonomial::Node> nodes;
      for (int i = 1; i < k; ++i) nodes.push_back({0, 2});
      for (int i = 1; i <= k; ++i) nodes.push_back({-1, static_cast<std::uint8_t>(i)});
      auto filler = TreeMonomial::from_nodes(nodes);
      auto key_tree = graft_monomial(m, occ, filler);
      std::uint64_t where = static_cast<std::uint64_t>(occ.root);
      if (!seen.emplace(key_tree, where).second) return;
      for (const auto& r : p.relations)
        if (r.arity() == k) out.push_back(graft_at(m, occ, r));
    });
  }
  return out;
}

inline std::uint64_t brute_quotient_dimension(const Presentation& p, int n) {
  auto total = count_monomials(p.signature, n);
  return total - span_rank(ideal_component(p, n));
}

// Multilinear Lyndon words on letters 1..n: words strictly smaller than each
// proper rotation.
inline std::uint64_t lyndon_count(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::uint64_t count = 0;
  do {
    bool lyndon = true;
    for (int r = 1; r < n && lyndon; ++r) {
      std::vector<int> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      lyndon = w < rot;
    }
    count += lyndon;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

}  // namespace opgb::testing

namespace opgb::testing {

// Multilinear monomials of the free symmetric operad on a binary product and
// an antisymmetric bracket, as canonical strings. Bracket arguments are
// ordered by their smallest variable.
struct SymTerm {
  std::string text;
  int min_var;
  int sign;
};

inline SymTerm sym_canonical(const SymTree& t, const std::vector<int>& perm) {
  if (t.kind == SymTree::Kind::Var) return {std::to_string(perm[t.var - 1]), perm[t.var - 1], 1};
  auto l = sym_canonical(*t.left, perm), r = sym_canonical(*t.right, perm);
  int sign = l.sign * r.sign;
  if (t.kind == SymTree::Kind::Circ) return {"(" + l.text + "o" + r.text + ")", std::min(l.min_var, r.min_var), sign};
  if (l.min_var > r.min_var) {
    std::swap(l, r);
    sign = -sign;
  }
  return {"[" + l.text + "," + r.text + "]", l.min_var, sign};
}

inline void sym_monomials(const std::vector<int>& vars, std::vector<std::string>& out_text) {
  if (vars.size() == 1) {
    out_text.push_back(std::to_string(vars[0]));
    return;
  }
  int n = static_cast<int>(vars.size());
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    std::vector<int> a, b;
    for (int i = 0; i < n; ++i) (mask >> i & 1 ? a : b).push_back(vars[i]);
    std::vector<std::string> ta, tb;
    sym_monomials(a, ta);
    sym_monomials(b, tb);
    for (const auto& x : ta)
      for (const auto& y : tb) {
        out_text.push_back("(" + x + "o" + y + ")");
        if (a[0] < b[0]) out_text.push_back("[" + x + "," + y + "]");
      }
  }
}

// Quotient dimension of the arity-n multilinear component of the free
// symmetric operad modulo the given identities of arity n.
inline std::uint64_t symmetric_quotient_dimension(const std::vector<SymmetricRelation>& rels, int n) {
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  std::vector<std::string> monos;
  sym_monomials(vars, monos);
  std::map<std::string, int> index;
  for (const auto& m : monos) index.emplace(m, static_cast<int>(index.size()));
  RowEchelon ech;
  for (const auto& rel : rels) {
    if (rel.arity != n) continue;
    std::vector<int> perm = vars;
    do {
      std::map<int, Rational> row;
      for (const auto& [c, t] : rel.terms) {
        auto term = sym_canonical(*t, perm);
        row[index.at(term.text)] += c * term.sign;
      }
      SparseVector v;
      for (const auto& [i, c] : row)
        if (c != 0) v.emplace_back(i, c);
      ech.insert(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return index.size() - ech.rank();
}

}  // namespace opgb::testing
