#include "opgb/diff_poisson.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "opgb/errors.hpp"

namespace opgb::dp {

namespace {

Rational binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

DiffLetter with_order(const DiffLetter& l, int order) { return {l.base, order}; }

}  // namespace

// ---------------------------------------------------------------- letters

std::string DiffLetter::to_string() const {
  std::string s = base->to_string();
  if (order > 0 && base->kind == SymTree::Kind::Circ) s = "(" + s + ")";
  if (order <= 3) return s + std::string(order, '\'');
  return s + "^(" + std::to_string(order) + ")";
}

bool letter_less(const DiffLetter& a, const DiffLetter& b) {
  const auto& x = *a.base;
  const auto& y = *b.base;
  if (x.kind == SymTree::Kind::Var && y.kind == SymTree::Kind::Var) {
    if (x.var != y.var) return x.var < y.var;
  } else {
    int dx = x.arity(), dy = y.arity();
    if (dx != dy) return dx < dy;
    auto sx = x.to_string(), sy = y.to_string();
    if (sx != sy) return sx < sy;
  }
  return a.order > b.order;
}

LiePtr LieNode::leaf(DiffLetter l) {
  auto n = std::make_shared<LieNode>();
  n->key = l.to_string();
  n->orders = l.order;
  n->degree = l.degree();
  n->letter = std::move(l);
  return n;
}

std::pair<int, LiePtr> LieNode::bracket(const LiePtr& l, const LiePtr& r) {
  if (l->key == r->key) return {0, nullptr};
  int sign = 1;
  const LiePtr* a = &l;
  const LiePtr* b = &r;
  if (l->key > r->key) {
    std::swap(a, b);
    sign = -1;
  }
  auto n = std::make_shared<LieNode>();
  n->left = *a;
  n->right = *b;
  n->key = "{" + (*a)->key + "," + (*b)->key + "}";
  n->letters = l->letters + r->letters;
  n->orders = l->orders + r->orders;
  n->degree = l->degree + r->degree;
  return {sign, n};
}

// -------------------------------------------------------------- monomials

DMonomial::DMonomial(std::vector<LiePtr> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), [](const LiePtr& a, const LiePtr& b) { return a->key < b->key; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) key_ += ' ';
    key_ += factors_[i]->key;
  }
}

int DMonomial::weight() const {
  int w = 0;
  for (const auto& f : factors_) w += f->weight();
  return w;
}

int DMonomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f->degree;
  return d;
}

int DMonomial::letters() const {
  int d = 0;
  for (const auto& f : factors_) d += f->letters;
  return d;
}

int DMonomial::underived_singles() const {
  int c = 0;
  for (const auto& f : factors_) c += f->is_leaf() && f->orders == 0;
  return c;
}

DMonomial DMonomial::without(std::initializer_list<std::size_t> drop) const {
  std::vector<LiePtr> keep;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(factors_[i]);
  return DMonomial(std::move(keep));
}

DMonomial DMonomial::with(const LiePtr& extra) const {
  auto f = factors_;
  f.push_back(extra);
  return DMonomial(std::move(f));
}

DMonomial DMonomial::times(const DMonomial& other) const {
  auto f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return DMonomial(std::move(f));
}

void DPoly::add(const DMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m.key());
  if (it == terms_.end()) {
    terms_.emplace(m.key(), std::make_pair(m, c));
    return;
  }
  it->second.second += c;
  if (it->second.second == 0) terms_.erase(it);
}

void DPoly::add(const DPoly& p, const Rational& c) {
  for (const auto& [k, t] : p.terms_) add(t.first, t.second * c);
}

std::string DPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, t] : terms_) {
    const auto& c = t.second;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    out += opgb::to_string(abs(c)) + "*" + k;
    first = false;
  }
  return out;
}

bool DPoly::operator==(const DPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [k, t] : terms_) {
    auto it = o.terms_.find(k);
    if (it == o.terms_.end() || it->second.second != t.second) return false;
  }
  return true;
}

namespace {

DPoly times(const DPoly& p, const DMonomial& m) {
  DPoly out;
  for (const auto& [k, t] : p.terms()) out.add(t.first.times(m), t.second);
  return out;
}

class MonomialParser {
 public:
  explicit MonomialParser(const std::string& text) : text_(text) {}

  DPoly run() {
    std::vector<LiePtr> factors;
    int sign = 1;
    skip();
    if (pos_ == text_.size()) fail("empty monomial");
    while (pos_ < text_.size()) {
      auto [s, f] = factor();
      sign *= s;
      factors.push_back(f);
      skip();
    }
    DPoly out;
    if (sign != 0) out.add(DMonomial(std::move(factors)), sign);
    return out;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, static_cast<int>(pos_) + 1); }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<int, LiePtr> factor() {
    skip();
    if (pos_ >= text_.size()) fail("expected a letter or '{'");
    char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      auto [s1, l] = factor();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ','");
      ++pos_;
      auto [s2, r] = factor();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
      ++pos_;
      auto [s3, node] = LieNode::bracket(l, r);
      if (s3 == 0) fail("bracket of equal arguments");
      return {s1 * s2 * s3, node};
    }
    if (c < 'a' || c > 'z') fail("expected a letter or '{'");
    ++pos_;
    int order = 0;
    while (pos_ < text_.size() && text_[pos_] == '\'') {
      ++order;
      ++pos_;
    }
    if (text_.compare(pos_, 2, "^(") == 0) {
      pos_ += 2;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || pos_ >= text_.size() || text_[pos_] != ')') fail("expected ^(n)");
      order += std::stoi(text_.substr(start, pos_ - start));
      ++pos_;
    }
    return {1, LieNode::leaf({SymTree::variable(c - 'a' + 1), order})};
  }
};

}  // namespace

DPoly parse_monomial(const std::string& text) { return MonomialParser(text).run(); }

// ------------------------------------------------------------------ rules

LieCombination lie_rule(const DiffLetter& p, const DiffLetter& q) {
  if (p.order != 0) throw std::invalid_argument("lie_rule needs an underived first letter");
  const int n = q.order;
  LieCombination out;
  out.emplace_back(1, LieNode::leaf({SymTree::bracket(p.base, q.base), n}));
  for (int i = 1; i <= n; ++i) {
    auto [s, node] = LieNode::bracket(LieNode::leaf(with_order(p, i)), LieNode::leaf(with_order(q, n - i)));
    if (s != 0) out.emplace_back(-binomial(n, i) * s, node);
  }
  return out;
}

DPoly com_rule(const DiffLetter& a, const DiffLetter& b) {
  if (a.order != 0 || b.order < 1) throw std::invalid_argument("com_rule needs a and b^(n), n >= 1");
  const int n = b.order;
  DPoly out;
  out.add(DMonomial({LieNode::leaf({SymTree::circ(a.base, b.base), n - 1})}), 1);
  for (int i = 1; i <= n - 1; ++i)
    out.add(DMonomial({LieNode::leaf(with_order(a, i)), LieNode::leaf(with_order(b, n - i))}), -binomial(n - 1, i));
  return out;
}

DPoly bracket_with(const LiePtr& u, const DMonomial& m) {
  DPoly out;
  const auto& fs = m.factors();
  for (std::size_t j = 0; j < fs.size(); ++j) {
    auto [s, node] = LieNode::bracket(u, fs[j]);
    if (s != 0) out.add(m.without({j}).with(node), s);
  }
  return out;
}

namespace {

DPoly bracket_with(const LiePtr& u, const DPoly& p) {
  DPoly out;
  for (const auto& [k, t] : p.terms()) out.add(bracket_with(u, t.first), t.second);
  return out;
}

DPoly push(const DiffLetter& a, const LiePtr& t, const std::vector<int>& path, std::size_t depth) {
  if (depth == path.size()) {
    if (!t->is_leaf()) throw std::invalid_argument("path does not end at a leaf");
    return com_rule(a, *t->letter);
  }
  if (t->is_leaf()) throw std::invalid_argument("path runs past a leaf");
  // a{u,T} = {u, aT} - {u,a}T, and {T,u} = -{u,T}
  const LiePtr& target = path[depth] == 1 ? t->right : t->left;
  const LiePtr& u = path[depth] == 1 ? t->left : t->right;
  Rational sign = path[depth] == 1 ? 1 : -1;
  DPoly out = bracket_with(u, push(a, target, path, depth + 1));
  auto [s, ua] = LieNode::bracket(u, LieNode::leaf(a));
  if (s != 0) out.add(DMonomial({ua, target}), -s);
  DPoly signed_out;
  signed_out.add(out, sign);
  return signed_out;
}

LieCombination replace_at(const LiePtr& t, const std::vector<int>& path, std::size_t depth,
                          const LieCombination& with) {
  if (depth == path.size()) return with;
  bool right = path[depth] == 1;
  auto inner = replace_at(right ? t->right : t->left, path, depth + 1, with);
  LieCombination out;
  for (const auto& [c, node] : inner) {
    auto [s, rebuilt] = right ? LieNode::bracket(t->left, node) : LieNode::bracket(node, t->right);
    if (s != 0) out.emplace_back(c * s, rebuilt);
  }
  return out;
}

const LieNode& node_at(const LiePtr& t, const std::vector<int>& path) {
  const LieNode* n = t.get();
  for (int step : path) n = (step == 1 ? n->right : n->left).get();
  return *n;
}

void derived_leaves(const LiePtr& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  if (t->is_leaf()) {
    if (t->orders > 0) out.push_back(path);
    return;
  }
  path.push_back(0);
  derived_leaves(t->left, path, out);
  path.back() = 1;
  derived_leaves(t->right, path, out);
  path.pop_back();
}

void lie_nodes(const LiePtr& t, std::vector<int>& path, std::vector<std::vector<int>>& out) {
  if (t->is_leaf()) return;
  if (t->left->is_leaf() && t->right->is_leaf()) {
    const auto& l = *t->left->letter;
    const auto& r = *t->right->letter;
    const DiffLetter* p = l.order == 0 ? &l : &r;
    const DiffLetter* q = l.order == 0 ? &r : &l;
    if (p->order == 0 && q->order >= 1 && letter_less(*q, *p)) out.push_back(path);
  }
  path.push_back(0);
  lie_nodes(t->left, path, out);
  path.back() = 1;
  lie_nodes(t->right, path, out);
  path.pop_back();
}

}  // namespace

DPoly pois_rule(const DiffLetter& a, const LiePtr& factor, const std::vector<int>& path) {
  if (a.order != 0) throw std::invalid_argument("pois_rule needs an underived letter");
  return push(a, factor, path, 0);
}

std::string Site::id() const {
  switch (kind) {
    case SiteKind::Lie:
      return "lie";
    case SiteKind::Com:
      return "com";
    case SiteKind::Pois:
      return "pois";
  }
  return {};
}

std::string Site::describe(const DMonomial& m) const {
  const auto& fs = m.factors();
  switch (kind) {
    case SiteKind::Lie:
      return "lie at " + node_at(fs[factor], path).key;
    case SiteKind::Com:
      return "com on " + fs[factor]->key + " " + fs[other]->key;
    case SiteKind::Pois:
      return "pois " + fs[factor]->key + " into " + fs[other]->key + " at " + node_at(fs[other], path).key;
  }
  return {};
}

std::vector<Site> find_sites(const DMonomial& m) {
  std::vector<Site> out;
  const auto& fs = m.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::vector<int> path;
    std::vector<std::vector<int>> nodes;
    lie_nodes(fs[i], path, nodes);
    for (auto& p : nodes) out.push_back({SiteKind::Lie, i, 0, std::move(p)});
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i]->is_leaf() || fs[i]->orders != 0) continue;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (j == i || fs[j]->orders == 0) continue;
      if (fs[j]->is_leaf()) {
        out.push_back({SiteKind::Com, i, j, {}});
        continue;
      }
      std::vector<int> path;
      std::vector<std::vector<int>> leaves;
      derived_leaves(fs[j], path, leaves);
      for (auto& p : leaves) out.push_back({SiteKind::Pois, i, j, std::move(p)});
    }
  }
  return out;
}

DPoly apply_site(const DMonomial& m, const Site& s) {
  const auto& fs = m.factors();
  DPoly out;
  switch (s.kind) {
    case SiteKind::Lie: {
      const auto& node = node_at(fs[s.factor], s.path);
      const auto& l = *node.left->letter;
      const auto& r = *node.right->letter;
      bool left_underived = l.order == 0;
      auto comb = lie_rule(left_underived ? l : r, left_underived ? r : l);
      if (!left_underived)
        for (auto& [c, n] : comb) c = -c;
      auto rest = m.without({s.factor});
      for (const auto& [c, tree] : replace_at(fs[s.factor], s.path, 0, comb)) out.add(rest.with(tree), c);
      return out;
    }
    case SiteKind::Com:
      return times(com_rule(*fs[s.factor]->letter, *fs[s.other]->letter), m.without({s.factor, s.other}));
    case SiteKind::Pois:
      return times(pois_rule(*fs[s.factor]->letter, fs[s.other], s.path), m.without({s.factor, s.other}));
  }
  return out;
}

// ------------------------------------------------------------ normal form

namespace {

// Collapse the first underived bracket of two letters; returns the sign of the
// rebuilt factor, 0 if nothing collapses.
int collapse_factor(const LiePtr& t, LiePtr& out) {
  if (t->is_leaf()) return 0;
  if (t->left->is_leaf() && t->right->is_leaf() && t->orders == 0) {
    out = LieNode::leaf({SymTree::bracket(t->left->letter->base, t->right->letter->base), 0});
    return 1;
  }
  LiePtr sub;
  if (int s = collapse_factor(t->left, sub)) {
    auto [s2, n] = LieNode::bracket(sub, t->right);
    out = n;
    return s * s2;
  }
  if (int s = collapse_factor(t->right, sub)) {
    auto [s2, n] = LieNode::bracket(t->left, sub);
    out = n;
    return s * s2;
  }
  return 0;
}

struct Step {
  std::string rule;
  DPoly result;
};

std::optional<Step> rewrite_step(const DMonomial& m) {
  const auto& fs = m.factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    LiePtr repl;
    if (int s = collapse_factor(fs[i], repl)) {
      DPoly out;
      out.add(m.without({i}).with(repl), s);
      return Step{"collapse", out};
    }
  }
  if (fs.size() == 1 && fs[0]->is_leaf() && fs[0]->orders == 0) return std::nullopt;
  std::optional<std::size_t> a, f;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!a && fs[i]->is_leaf() && fs[i]->orders == 0) a = i;
    if (!f && fs[i]->orders > 0) f = i;
  }
  if (!a || !f) throw std::logic_error("no rule applies to " + m.to_string());
  if (fs[*f]->is_leaf())
    return Step{"com", times(com_rule(*fs[*a]->letter, *fs[*f]->letter), m.without({*a, *f}))};
  std::vector<int> path;
  std::vector<std::vector<int>> leaves;
  derived_leaves(fs[*f], path, leaves);
  return Step{"pois", times(pois_rule(*fs[*a]->letter, fs[*f], leaves.front()), m.without({*a, *f}))};
}

}  // namespace

DPoly normal_form(const DPoly& f, std::vector<TraceStep>* trace) {
  for (const auto& [k, t] : f.terms())
    if (t.first.weight() != -1)
      throw std::invalid_argument("normal_form needs weight -1, got " + std::to_string(t.first.weight()) + " for " + k);
  DPoly pending = f, done;
  while (!pending.is_zero()) {
    auto [key, term] = *pending.terms().begin();
    auto [m, c] = term;
    pending.add(m, -c);
    auto step = rewrite_step(m);
    if (!step) {
      done.add(m, c);
      continue;
    }
    const int letters = m.letters(), singles = m.underived_singles();
    for (const auto& [k, t] : step->result.terms()) {
      int l2 = t.first.letters(), s2 = t.first.underived_singles();
      if (!(l2 < letters || (l2 == letters && s2 < singles)))
        throw std::logic_error("termination measure did not decrease: " + m.to_string() + " -> " + k);
    }
    if (trace) trace->push_back({step->rule, m.to_string(), step->result.to_string()});
    pending.add(step->result, c);
  }
  return done;
}

OperadElement to_operad(const DPoly& p, int arity) {
  if (p.is_zero()) return {};
  SymmetricRelation rel;
  rel.arity = arity;
  for (const auto& [k, t] : p.terms()) {
    const auto& fs = t.first.factors();
    if (fs.size() != 1 || !fs[0]->is_leaf() || fs[0]->orders != 0)
      throw std::invalid_argument("not a GD expression: " + k);
    if (fs[0]->degree != arity) throw ArityError("GD expression of the wrong arity: " + k);
    rel.terms.emplace_back(t.second, fs[0]->letter->base);
  }
  return shuffle_image(rel, gd_signature());
}

// ------------------------------------------------------------ ambiguities

namespace {

void set_partitions(int n, int i, std::vector<std::vector<int>>& cur, std::vector<std::vector<std::vector<int>>>& out) {
  if (i > n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(i);
    set_partitions(n, i + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({i});
  set_partitions(n, i + 1, cur, out);
  cur.pop_back();
}

// Bracket shapes on a block, leaves holding variable numbers; one per
// antisymmetry class (the smallest variable goes left at each split).
struct Shape {
  int var = 0;
  std::shared_ptr<const Shape> left, right;
};
using ShapePtr = std::shared_ptr<const Shape>;

std::vector<ShapePtr> shapes(const std::vector<int>& block) {
  if (block.size() == 1) {
    auto s = std::make_shared<Shape>();
    s->var = block[0];
    return {s};
  }
  std::vector<ShapePtr> out;
  const int rest = static_cast<int>(block.size()) - 1;
  for (int mask = 0; mask < (1 << rest) - 1; ++mask) {
    std::vector<int> a{block[0]}, b;
    for (int j = 0; j < rest; ++j) (mask >> j & 1 ? a : b).push_back(block[j + 1]);
    for (const auto& l : shapes(a))
      for (const auto& r : shapes(b)) {
        auto s = std::make_shared<Shape>();
        s->left = l;
        s->right = r;
        out.push_back(s);
      }
  }
  return out;
}

LiePtr build(const Shape& s, const std::vector<int>& orders) {
  if (!s.left) return LieNode::leaf({SymTree::variable(s.var), orders[s.var]});
  return LieNode::bracket(build(*s.left, orders), build(*s.right, orders)).second;
}

bool collapsed(const LiePtr& t) {
  if (t->is_leaf()) return true;
  return t->orders > 0 && collapsed(t->left) && collapsed(t->right);
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::string unlabeled(const LiePtr& t) {
  if (t->is_leaf()) {
    std::string s = "#";
    int o = t->orders;
    return o <= 3 ? s + std::string(o, '\'') : s + "^(" + std::to_string(o) + ")";
  }
  auto a = unlabeled(t->left), b = unlabeled(t->right);
  auto rank = [](const LiePtr& n, const std::string& k) { return std::make_pair(n->letters, k); };
  if (rank(t->right, b) < rank(t->left, a)) std::swap(a, b);
  return "{" + a + "," + b + "}";
}

std::string family_of_degree4(const DMonomial& m, const std::string& pattern) {
  if (pattern == "a b' {c,d'}") return "A3";
  if (pattern == "a b {c',d'}") return "A4";
  if (pattern == "a b {c,d''}") return "A5";
  if (pattern == "a {b,{c,d'}}") {
    for (const auto& f : m.factors()) {
      if (f->letters != 3) continue;
      const auto& outer = f->left->is_leaf() ? f->left : f->right;
      const auto& inner = f->left->is_leaf() ? f->right : f->left;
      const auto& derived = inner->left->orders > 0 ? inner->left : inner->right;
      return letter_less(*derived->letter, *outer->letter) ? "A2" : "A1";
    }
  }
  return pattern;
}

}  // namespace

std::vector<DMonomial> weight_minus_one_monomials(int n) {
  std::vector<std::vector<std::vector<int>>> parts;
  std::vector<std::vector<int>> cur;
  set_partitions(n, 1, cur, parts);
  std::map<std::string, DMonomial> found;
  for (const auto& p : parts) {
    const int k = static_cast<int>(p.size());
    if (k < 2 || std::all_of(p.begin(), p.end(), [](const auto& b) { return b.size() == 1; })) continue;
    std::vector<std::vector<ShapePtr>> options;
    for (const auto& b : p) options.push_back(shapes(b));
    std::vector<std::vector<int>> orders;
    std::vector<int> tmp;
    compositions(k - 1, n, tmp, orders);
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
      for (const auto& ord : orders) {
        std::vector<int> by_var(n + 1, 0);
        for (int v = 1; v <= n; ++v) by_var[v] = ord[v - 1];
        std::vector<LiePtr> factors;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
          factors.push_back(build(*options[j][pick[j]], by_var));
          ok = collapsed(factors.back());
        }
        if (!ok) continue;
        DMonomial m(std::move(factors));
        found.emplace(m.key(), m);
      }
      int j = 0;
      while (j < k && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j == k) break;
    }
  }
  std::vector<DMonomial> out;
  for (auto& [k, m] : found) out.push_back(m);
  return out;
}

std::string unlabeled_pattern(const DMonomial& m) {
  std::vector<std::pair<std::pair<int, std::string>, int>> fs;
  for (const auto& f : m.factors()) fs.push_back({{f->letters, unlabeled(f)}, 0});
  std::sort(fs.begin(), fs.end());
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? " " : "") + fs[i].first.second;
  char next = 'a';
  for (auto& ch : s)
    if (ch == '#') ch = next++;
  return s;
}

std::vector<Ambiguity> enumerate_ambiguities(int n) {
  if (n < 3 || n > 5) throw std::invalid_argument("ambiguities are enumerated for degrees 3..5");
  std::vector<Ambiguity> out;
  for (const auto& m : weight_minus_one_monomials(n)) {
    auto sites = find_sites(m);
    if (sites.size() < 2) continue;
    auto pattern = unlabeled_pattern(m);
    auto family = n == 4 ? family_of_degree4(m, pattern) : pattern;
    for (std::size_t i = 0; i < sites.size(); ++i)
      for (std::size_t j = i + 1; j < sites.size(); ++j) {
        if (sites[i].kind == sites[j].kind && sites[i].kind != SiteKind::Pois) continue;
        out.push_back({family, pattern, m, sites[i], sites[j]});
      }
  }
  return out;
}

Resolution resolve(const Ambiguity& a, Reducer& modulo, bool keep_trace) {
  Resolution r;
  r.left = normal_form(apply_site(a.monomial, a.first), keep_trace ? &r.left_trace : nullptr);
  r.right = normal_form(apply_site(a.monomial, a.second), keep_trace ? &r.right_trace : nullptr);
  DPoly diff = r.left;
  diff.add(r.right, -1);
  r.residue = to_operad(diff, a.monomial.degree());
  r.reduced = modulo.reduce(r.residue);
  return r;
}

// ---------------------------------------------------- Lyndon-Shirshov words

namespace {

bool word_less(const std::vector<DiffLetter>& a, const std::vector<DiffLetter>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

std::string bracketing(const std::vector<DiffLetter>& w) {
  if (w.size() == 1) return w[0].to_string();
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::vector<DiffLetter> v(w.begin() + static_cast<long>(i), w.end());
    if (is_lyndon(v)) {
      std::vector<DiffLetter> u(w.begin(), w.begin() + static_cast<long>(i));
      return "{" + bracketing(u) + "," + bracketing(v) + "}";
    }
  }
  return {};
}

}  // namespace

std::string LSWord::to_string() const {
  std::string s;
  for (const auto& l : letters) s += l.to_string();
  return s;
}

std::string LSWord::bracketed() const { return bracketing(letters); }

bool is_lyndon(const std::vector<DiffLetter>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<DiffLetter> rot(w.begin() + static_cast<long>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (!word_less(w, rot)) return false;
  }
  return !w.empty();
}

bool matches_reduced_pattern(const std::vector<DiffLetter>& w) {
  if (w.size() == 1) return true;
  if (w.empty() || w.back().order == 0) return false;
  std::vector<const DiffLetter*> run;
  for (const auto& l : w) {
    if (l.order == 0) {
      if (!run.empty() && letter_less(l, *run.back())) return false;
      run.push_back(&l);
      continue;
    }
    DiffLetter base{l.base, 0};
    for (const auto* x : run)
      if (letter_less(base, *x)) return false;
    run.clear();
  }
  return true;
}

std::vector<LSWord> ls_basis(const std::vector<SymPtr>& alphabet, int degree, int weight) {
  std::vector<LSWord> out;
  if (degree < 1 || degree > static_cast<int>(alphabet.size()) || weight < -1) return out;
  const int orders_total = weight + 1;
  std::vector<std::vector<int>> orders;
  std::vector<int> tmp;
  compositions(orders_total, degree, tmp, orders);
  // ordered selections of `degree` distinct letters
  std::vector<int> sel(degree);
  std::function<void(int, std::vector<bool>&)> rec = [&](int pos, std::vector<bool>& used) {
    if (pos == degree) {
      for (const auto& ord : orders) {
        std::vector<DiffLetter> w;
        for (int i = 0; i < degree; ++i) w.push_back({alphabet[sel[i]], ord[i]});
        if (is_lyndon(w) && matches_reduced_pattern(w)) out.push_back({w});
      }
      return;
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      sel[pos] = static_cast<int>(i);
      rec(pos + 1, used);
      used[i] = false;
    }
  };
  std::vector<bool> used(alphabet.size(), false);
  rec(0, used);
  return out;
}

}  // namespace opgb::dp
