#include "opgb/poisson_envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "opgb/linear_algebra.hpp"

namespace opgb {

void PoissonElement::add(Key k, const Rational& c) {
  if (c == 0) return;
  std::sort(k.begin(), k.end());
  auto [it, fresh] = terms_.emplace(std::move(k), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

PoissonElement PoissonElement::variable(int v) {
  if (v < 1 || v > 15) throw std::invalid_argument("envelope variables are 1..15");
  PoissonElement e;
  e.add({std::string(1, static_cast<char>(v * 16))}, 1);
  return e;
}

PoissonElement PoissonElement::operator+(const PoissonElement& o) const {
  PoissonElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

PoissonElement PoissonElement::scaled(const Rational& c) const {
  PoissonElement r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

PoissonElement PoissonElement::operator*(const PoissonElement& o) const {
  PoissonElement r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Key k = a;
      k.insert(k.end(), b.begin(), b.end());
      r.add(std::move(k), ca * cb);
    }
  return r;
}

PoissonElement PoissonElement::derivative() const {
  PoissonElement r;
  for (const auto& [k, c] : terms_)
    for (std::size_t w = 0; w < k.size(); ++w)
      for (std::size_t i = 0; i < k[w].size(); ++i) {
        Key d = k;
        auto& ch = d[w][i];
        if ((ch & 15) == 15) throw std::overflow_error("derivative order too high");
        ch = static_cast<char>(ch + 1);
        r.add(std::move(d), c);
      }
  return r;
}

PoissonElement PoissonElement::bracket(const PoissonElement& o) const {
  PoissonElement r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_)
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
          Key rest;
          for (std::size_t p = 0; p < a.size(); ++p)
            if (p != i) rest.push_back(a[p]);
          for (std::size_t q = 0; q < b.size(); ++q)
            if (q != j) rest.push_back(b[q]);
          Key k1 = rest, k2 = rest;
          k1.push_back(a[i] + b[j]);
          k2.push_back(b[j] + a[i]);
          r.add(std::move(k1), ca * cb);
          r.add(std::move(k2), -ca * cb);
        }
  return r;
}

namespace {

PoissonElement eval(const TreeMonomial& t, int i) {
  const auto& n = t.node(i);
  if (n.is_leaf()) return PoissonElement::variable(n.value);
  auto ch = t.children(i);
  if (ch.size() != 2) throw std::invalid_argument("envelope evaluation needs binary generators");
  auto a = eval(t, ch[0]), b = eval(t, ch[1]);
  switch (n.gen) {
    case 0:
      return a * b.derivative();
    case 1:
      return b * a.derivative();
    case 2:
      return a.bracket(b);
  }
  throw std::invalid_argument("envelope evaluation expects the x, y, z signature");
}

}  // namespace

PoissonElement evaluate_in_envelope(const TreeMonomial& t) { return eval(t, 0); }

PoissonElement evaluate_in_envelope(const OperadElement& f) {
  PoissonElement r;
  for (const auto& [t, c] : f.terms()) r = r + evaluate_in_envelope(t).scaled(c);
  return r;
}

std::size_t envelope_rank(const std::vector<TreeMonomial>& monomials) {
  std::map<PoissonElement::Key, int> columns;
  RowEchelon ech;
  for (const auto& t : monomials) {
    SparseVector row;
    auto image = evaluate_in_envelope(t);
    for (const auto& [k, c] : image.terms()) {
      auto [it, fresh] = columns.emplace(k, static_cast<int>(columns.size()));
      row.emplace_back(it->second, c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(row);
  }
  return ech.rank();
}

}  // namespace opgb
