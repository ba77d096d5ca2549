#include "opgb/commutative_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace opgb {

bool DegLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

CPoly CPoly::constant(int nvars, const Rational& c) {
  CPoly p(nvars);
  p.add(Exponents(nvars, 0), c);
  return p;
}

CPoly CPoly::variable(int nvars, int i, const Rational& c) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  Exponents e(nvars, 0);
  e[i] = 1;
  CPoly p(nvars);
  p.add(e, c);
  return p;
}

CPoly CPoly::term(Exponents e, const Rational& c) {
  CPoly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void CPoly::add(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CPoly CPoly::operator+(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

CPoly CPoly::operator-(const CPoly& o) const {
  CPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

CPoly CPoly::operator*(const CPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  CPoly r(nvars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = a[i] + b[i];
      r.add(e, ca * cb);
    }
  return r;
}

CPoly CPoly::scaled(const Rational& c) const {
  CPoly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

CPoly CPoly::partial(int i) const {
  CPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    r.add(f, c * e[i]);
  }
  return r;
}

std::string CPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = abs(c);
    std::string coef = opgb::to_string(a);
    std::string t = mono.empty() ? coef : (a == 1 ? mono : coef + "*" + mono);
    if (first)
      out += (c < 0 ? "-" : "") + t;
    else
      out += (c < 0 ? " - " : " + ") + t;
    first = false;
  }
  return out;
}

CPoly remainder(const CPoly& f, const std::vector<CPoly>& divisors) {
  CPoly p = f, r(f.nvars());
  while (!p.is_zero()) {
    const Exponents lt = p.leading();
    const Rational lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : divisors) {
      if (g.is_zero() || !divides(g.leading(), lt)) continue;
      Exponents q(lt.size());
      for (std::size_t i = 0; i < lt.size(); ++i) q[i] = lt[i] - g.leading()[i];
      p = p - CPoly::term(q, lc / g.leading_coefficient()) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add(lt, lc);
      p.add(lt, -lc);
    }
  }
  return r;
}

CPoly s_polynomial(const CPoly& a, const CPoly& b) {
  const auto& la = a.leading();
  const auto& lb = b.leading();
  Exponents l(la.size()), qa(la.size()), qb(la.size());
  for (std::size_t i = 0; i < la.size(); ++i) {
    l[i] = std::max(la[i], lb[i]);
    qa[i] = l[i] - la[i];
    qb[i] = l[i] - lb[i];
  }
  return CPoly::term(qa, 1 / a.leading_coefficient()) * a - CPoly::term(qb, 1 / b.leading_coefficient()) * b;
}

bool is_groebner(const std::vector<CPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!remainder(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

std::vector<Exponents> standard_monomials(const std::vector<CPoly>& basis, int nvars, int max_degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  // enumerate by total degree
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      for (const auto& g : basis)
        if (divides(g.leading(), e)) return;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  for (int d = 0; d <= max_degree && nvars > 0; ++d) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return DegLexGreater()(b, a); });
  return out;
}

}  // namespace opgb
