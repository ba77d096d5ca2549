#include "opgb/linear_algebra.hpp"

#include <algorithm>

namespace opgb {

SparseVector RowEchelon::reduce(const SparseVector& v) const {
  std::map<int, Rational> work(v.begin(), v.end());
  SparseVector rest;
  while (!work.empty()) {
    auto it = work.begin();
    int col = it->first;
    Rational c = it->second;
    work.erase(it);
    if (c == 0) continue;
    auto row = rows_.find(col);
    if (row == rows_.end()) {
      rest.emplace_back(col, c);
      continue;
    }
    for (std::size_t k = 1; k < row->second.size(); ++k) {
      const auto& [j, a] = row->second[k];
      Rational& slot = work[j];
      slot -= c * a;
      if (slot == 0) work.erase(j);
    }
  }
  return rest;
}

bool RowEchelon::insert(const SparseVector& v) {
  auto r = reduce(v);
  if (r.empty()) return false;
  Rational lead = r.front().second;
  for (auto& [j, a] : r) a /= lead;
  int pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

int MonomialIndex::index(const TreeMonomial& t) {
  auto [it, fresh] = ids_.emplace(t, static_cast<int>(monomials_.size()));
  if (fresh) monomials_.push_back(t);
  return it->second;
}

SparseVector MonomialIndex::vectorize(const OperadElement& f) {
  SparseVector v;
  for (const auto& [t, c] : f.terms()) v.emplace_back(index(t), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

OperadElement MonomialIndex::element(const SparseVector& v) const {
  std::vector<OperadElement::Term> terms;
  for (const auto& [j, c] : v) terms.emplace_back(monomials_[j], c);
  return OperadElement::from_terms(std::move(terms));
}

std::size_t span_rank(const std::vector<OperadElement>& elements) {
  MonomialIndex idx;
  RowEchelon ech;
  for (const auto& f : elements) ech.insert(idx.vectorize(f));
  return ech.rank();
}

bool same_span(const std::vector<OperadElement>& a, const std::vector<OperadElement>& b) {
  MonomialIndex idx;
  RowEchelon ea, eb;
  for (const auto& f : a) ea.insert(idx.vectorize(f));
  for (const auto& f : b) eb.insert(idx.vectorize(f));
  if (ea.rank() != eb.rank()) return false;
  for (const auto& f : b)
    if (!ea.contains(idx.vectorize(f))) return false;
  return true;
}

}  // namespace opgb
