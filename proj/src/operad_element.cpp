#include "opgb/operad_element.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "opgb/errors.hpp"

namespace opgb {

OperadElement::OperadElement(const TreeMonomial& t, const Rational& c) {
  if (c != 0) {
    terms_.emplace_back(t, c);
    arity_ = t.arity();
  }
}

OperadElement OperadElement::from_terms(std::vector<Term> terms) {
  OperadElement f;
  if (terms.empty()) return f;
  int arity = terms.front().first.arity();
  for (const auto& [t, c] : terms)
    if (t.arity() != arity) throw ArityError("terms of different arity in one element");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& term : terms) {
    if (!f.terms_.empty() && f.terms_.back().first == term.first) {
      f.terms_.back().second += term.second;
      if (f.terms_.back().second == 0) f.terms_.pop_back();
    } else if (term.second != 0) {
      f.terms_.push_back(std::move(term));
    }
  }
  if (!f.terms_.empty()) f.arity_ = arity;
  return f;
}

Rational OperadElement::coefficient(const TreeMonomial& t) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), t,
                             [](const Term& a, const TreeMonomial& b) { return a.first < b; });
  if (it != terms_.end() && it->first == t) return it->second;
  return 0;
}

std::vector<OperadElement::Term> OperadElement::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) keys.emplace_back(order.key(terms_[i].first), i);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& k : keys) out.push_back(terms_[k.second]);
  return out;
}

const TreeMonomial& OperadElement::leading(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::logic_error("zero element has no leading term");
  std::size_t best = 0;
  std::string best_key = order.key(terms_[0].first);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    auto k = order.key(terms_[i].first);
    if (k > best_key) {
      best_key = std::move(k);
      best = i;
    }
  }
  return terms_[best].first;
}

const Rational& OperadElement::leading_coefficient(const MonomialOrder& order) const {
  const auto& lead = leading(order);
  for (const auto& t : terms_)
    if (t.first == lead) return t.second;
  throw std::logic_error("unreachable");
}

namespace {

void check_compatible(const OperadElement& f, const OperadElement& g) {
  if (!f.is_zero() && !g.is_zero() && f.arity() != g.arity())
    throw ArityError("adding elements of arity " + std::to_string(f.arity()) + " and " + std::to_string(g.arity()));
}

}  // namespace

OperadElement OperadElement::operator+(const OperadElement& g) const {
  check_compatible(*this, g);
  OperadElement out;
  auto a = terms_.begin(), b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.terms_.emplace_back(a->first, c);
      ++a;
      ++b;
    }
  }
  if (!out.terms_.empty()) out.arity_ = out.terms_.front().first.arity();
  return out;
}

OperadElement OperadElement::operator-() const {
  OperadElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

OperadElement OperadElement::operator-(const OperadElement& g) const { return *this + (-g); }

OperadElement OperadElement::operator*(const Rational& c) const {
  if (c == 0) return {};
  OperadElement out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

std::string OperadElement::to_string(const Signature& sig, const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : sorted_terms(order)) {
    Rational a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += opgb::to_string(a) + "*" + t.to_string(sig);
    first = false;
  }
  return out;
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const Signature& sig, int line) : text_(text), sig_(sig), line_(line) {}

  OperadElement run() {
    std::vector<OperadElement::Term> terms;
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    for (;;) {
      skip();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      std::size_t term_start = pos_;
      Rational coef = 1;
      bool zero_literal = false;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::size_t save = pos_;
        std::string number = read_number();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          coef = parse_coef(number, save);
        } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          coef = parse_coef(number, save);
        } else if (number == "0") {
          zero_literal = true;
        } else {
          pos_ = save;  // a leaf
        }
      }
      if (zero_literal) continue;
      skip();
      std::size_t mono_start = pos_;
      std::size_t end = monomial_end();
      if (end == mono_start) {
        pos_ = term_start;
        fail("expected a monomial");
      }
      try {
        auto t = TreeMonomial::parse(text_.substr(mono_start, end - mono_start), sig_);
        terms.emplace_back(t, coef * sign);
      } catch (const ParseError& e) {
        throw ParseError(strip_location(e.what()), line_, static_cast<int>(mono_start) + e.column());
      } catch (const ArityError& e) {
        pos_ = mono_start;
        fail(e.what());
      }
      pos_ = end;
    }
    try {
      return OperadElement::from_terms(std::move(terms));
    } catch (const ArityError& e) {
      pos_ = 0;
      fail(e.what());
    }
  }

 private:
  std::string_view text_;
  const Signature& sig_;
  int line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, static_cast<int>(pos_) + 1); }

  static std::string strip_location(const std::string& what) {
    auto p = what.find(": ");
    return what.rfind("line ", 0) == 0 && p != std::string::npos ? what.substr(p + 2) : what;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string read_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational parse_coef(const std::string& number, std::size_t at) {
    try {
      Rational q = parse_rational(number);
      return q;
    } catch (const std::invalid_argument& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  // End of the monomial starting at pos_: a number, or a name with a balanced
  // parenthesized argument list.
  std::size_t monomial_end() const {
    std::size_t p = pos_;
    if (p >= text_.size()) return p;
    if (std::isdigit(static_cast<unsigned char>(text_[p]))) {
      while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
      return p;
    }
    while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_')) ++p;
    if (p == pos_) return p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != '(') return p;
    int depth = 0;
    for (; p < text_.size(); ++p) {
      if (text_[p] == '(') ++depth;
      if (text_[p] == ')' && --depth == 0) return p + 1;
    }
    return p;
  }
};

}  // namespace

OperadElement OperadElement::parse(std::string_view text, const Signature& sig, int line) {
  return ElementParser(text, sig, line).run();
}

TreeMonomial shuffle_compose(const TreeMonomial& f, const ShufflePartition& pi, std::span<const TreeMonomial> gs) {
  const int m = f.arity();
  if (static_cast<int>(gs.size()) != m || pi.size() != m) throw ArityError("composition needs one input per leaf");
  for (int i = 0; i < m; ++i)
    if (gs[i].arity() != static_cast<int>(pi.blocks()[i].size()))
      throw ArityError("block size does not match the arity of input " + std::to_string(i + 1));
  std::vector<TreeMonomial::Node> nodes;
  for (const auto& n : f.nodes()) {
    if (!n.is_leaf()) {
      nodes.push_back(n);
      continue;
    }
    auto g = gs[n.value - 1].relabeled(pi.blocks()[n.value - 1]);
    auto gn = g.nodes();
    nodes.insert(nodes.end(), gn.begin(), gn.end());
  }
  if (static_cast<int>(nodes.size()) > TreeMonomial::kMaxNodes) throw ArityError("monomial too large");
  return TreeMonomial::from_nodes(nodes);
}

OperadElement shuffle_compose(const OperadElement& f, const ShufflePartition& pi, std::span<const OperadElement> gs) {
  const int m = f.arity();
  if (f.is_zero()) return {};
  if (static_cast<int>(gs.size()) != m || pi.size() != m) throw ArityError("composition needs one input per leaf");
  for (int i = 0; i < m; ++i) {
    if (gs[i].is_zero()) return {};
    if (gs[i].arity() != static_cast<int>(pi.blocks()[i].size()))
      throw ArityError("block size does not match the arity of input " + std::to_string(i + 1));
  }
  std::vector<OperadElement::Term> out;
  std::vector<std::size_t> idx(m, 0);
  std::vector<TreeMonomial> pick(m);
  for (const auto& [t, c] : f.terms()) {
    std::fill(idx.begin(), idx.end(), 0);
    for (;;) {
      Rational coef = c;
      for (int i = 0; i < m; ++i) {
        pick[i] = gs[i].terms()[idx[i]].first;
        coef *= gs[i].terms()[idx[i]].second;
      }
      out.emplace_back(shuffle_compose(t, pi, pick), coef);
      int k = 0;
      while (k < m && ++idx[k] == gs[k].size()) idx[k++] = 0;
      if (k == m) break;
    }
  }
  return OperadElement::from_terms(std::move(out));
}

OperadElement graft_at(const TreeMonomial& host, const Occurrence& occ, const OperadElement& replacement) {
  if (replacement.is_zero()) return {};
  if (replacement.arity() != static_cast<int>(occ.inputs.size()))
    throw ArityError("replacement arity does not match the occurrence");
  if (occ.root < 0 || occ.root >= host.node_count() || host.node(occ.root).is_leaf())
    throw ArityError("invalid occurrence");
  std::vector<OperadElement::Term> out;
  out.reserve(replacement.size());
  for (const auto& [t, c] : replacement.terms()) out.emplace_back(graft_monomial(host, occ, t), c);
  return OperadElement::from_terms(std::move(out));
}

}  // namespace opgb
