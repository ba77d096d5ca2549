#include "opgb/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "opgb/errors.hpp"

namespace opgb {

using SymPtr = std::shared_ptr<const SymTree>;

// ------------------------------------------------------------------ SymTree

SymPtr SymTree::variable(int v) {
  auto t = std::make_shared<SymTree>();
  t->kind = Kind::Var;
  t->var = v;
  return t;
}

SymPtr SymTree::circ(SymPtr a, SymPtr b) {
  auto t = std::make_shared<SymTree>();
  t->kind = Kind::Circ;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

SymPtr SymTree::bracket(SymPtr a, SymPtr b) {
  auto t = std::make_shared<SymTree>();
  t->kind = Kind::Bracket;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

int SymTree::arity() const { return kind == Kind::Var ? 1 : left->arity() + right->arity(); }

std::string SymTree::to_string() const {
  switch (kind) {
    case Kind::Var:
      return std::string(1, static_cast<char>('a' + var - 1));
    case Kind::Bracket:
      return "[" + left->to_string() + "," + right->to_string() + "]";
    case Kind::Circ: {
      auto wrap = [](const SymTree& t) {
        return t.kind == Kind::Circ ? "(" + t.to_string() + ")" : t.to_string();
      };
      return wrap(*left) + "∘" + wrap(*right);
    }
  }
  return {};
}

namespace {

using SymPoly = std::vector<std::pair<Rational, SymPtr>>;

void collect_vars(const SymTree& t, std::vector<int>& out) {
  if (t.kind == SymTree::Kind::Var) {
    out.push_back(t.var);
    return;
  }
  collect_vars(*t.left, out);
  collect_vars(*t.right, out);
}

SymPtr remap(const SymPtr& t, const std::vector<int>& map) {
  switch (t->kind) {
    case SymTree::Kind::Var:
      return SymTree::variable(map[t->var]);
    case SymTree::Kind::Circ:
      return SymTree::circ(remap(t->left, map), remap(t->right, map));
    case SymTree::Kind::Bracket:
      return SymTree::bracket(remap(t->left, map), remap(t->right, map));
  }
  return t;
}

class SymParser {
 public:
  explicit SymParser(std::string_view text) : text_(text) {}

  SymPoly run() {
    SymPoly lhs = sum();
    skip();
    if (peek('=')) {
      ++pos_;
      SymPoly rhs = sum();
      for (auto& [c, t] : rhs) lhs.emplace_back(-c, t);
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return lhs;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, static_cast<int>(pos_) + 1); }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_circ() {
    skip();
    if (text_.substr(pos_, 3) == "∘") return true;
    return pos_ < text_.size() && text_[pos_] == '.';
  }

  SymPoly sum() {
    SymPoly out;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      for (auto& [c, t] : term()) out.emplace_back(c * sign, t);
    }
    return out;
  }

  SymPoly term() {
    skip();
    Rational coef = 1;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      try {
        coef = parse_rational(text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
      if (peek('*')) {
        ++pos_;
      } else if (coef == 0 && (pos_ == text_.size() || !(peek('(') || peek('[') || std::isalpha(static_cast<unsigned char>(text_[pos_]))))) {
        return {};
      }
    }
    SymPoly p = product();
    for (auto& [c, t] : p) c *= coef;
    return p;
  }

  SymPoly product() {
    SymPoly acc = atom();
    while (at_circ()) {
      pos_ += text_[pos_] == '.' ? 1 : 3;
      SymPoly rhs = atom();
      SymPoly next;
      for (const auto& [c1, t1] : acc)
        for (const auto& [c2, t2] : rhs) next.emplace_back(c1 * c2, SymTree::circ(t1, t2));
      acc = std::move(next);
    }
    return acc;
  }

  SymPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of identity");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SymPoly inner = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      SymPoly a = sum();
      if (!peek(',')) fail("expected ','");
      ++pos_;
      SymPoly b = sum();
      if (!peek(']')) fail("expected ']'");
      ++pos_;
      SymPoly out;
      for (const auto& [c1, t1] : a)
        for (const auto& [c2, t2] : b) out.emplace_back(c1 * c2, SymTree::bracket(t1, t2));
      return out;
    }
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
        fail("variables are single letters");
      return {{Rational(1), SymTree::variable(c - 'a' + 1)}};
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

SymmetricRelation SymmetricRelation::parse(std::string_view text) {
  SymPoly poly = SymParser(text).run();
  SymmetricRelation rel;
  if (poly.empty()) throw ParseError("empty identity", 1, 1);
  std::vector<int> first;
  collect_vars(*poly.front().second, first);
  std::vector<int> sorted = first;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError("identity must be multilinear", 1, 1);
  for (const auto& [c, t] : poly) {
    std::vector<int> vs;
    collect_vars(*t, vs);
    std::sort(vs.begin(), vs.end());
    if (vs != sorted) throw ParseError("every term must use each variable exactly once", 1, 1);
  }
  std::vector<int> map(27, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) map[sorted[i]] = static_cast<int>(i) + 1;
  for (const auto& [c, t] : poly)
    if (c != 0) rel.terms.emplace_back(c, remap(t, map));
  rel.arity = static_cast<int>(sorted.size());
  return rel;
}

std::string SymmetricRelation::to_string() const {
  std::string out;
  for (const auto& [c, t] : terms) {
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    Rational a = abs(c);
    if (a != 1) out += opgb::to_string(a) + "*";
    out += t->to_string();
  }
  return (out.empty() ? "0" : out) + " = 0";
}

// --------------------------------------------------------------- conversion

namespace {

struct Converted {
  int sign;
  TreeMonomial tree;
};

Converted convert(const SymTree& t, const std::vector<int>& labels, int gx, int gy, int gz) {
  if (t.kind == SymTree::Kind::Var) return {1, TreeMonomial::leaf(labels[t.var - 1])};
  auto a = convert(*t.left, labels, gx, gy, gz);
  auto b = convert(*t.right, labels, gx, gy, gz);
  bool in_order = a.tree.min_label(0) < b.tree.min_label(0);
  std::vector<TreeMonomial> kids = in_order ? std::vector<TreeMonomial>{a.tree, b.tree}
                                            : std::vector<TreeMonomial>{b.tree, a.tree};
  int sign = a.sign * b.sign;
  int gen;
  if (t.kind == SymTree::Kind::Circ) {
    gen = in_order ? gx : gy;
  } else {
    gen = gz;
    if (!in_order) sign = -sign;
  }
  return {sign, TreeMonomial::vertex(gen, kids)};
}

int require_generator(const Signature& sig, const std::string& name) {
  auto g = sig.find(name);
  if (!g) throw ArityError("conversion dictionary names unknown generator '" + name + "'");
  if (sig[*g].arity != 2) throw ArityError("generator '" + name + "' must be binary");
  return *g;
}

OperadElement image_with_labels(const SymmetricRelation& rel, const std::vector<int>& labels, int gx, int gy,
                                int gz) {
  std::vector<OperadElement::Term> terms;
  for (const auto& [c, t] : rel.terms) {
    auto conv = convert(*t, labels, gx, gy, gz);
    terms.emplace_back(conv.tree, c * conv.sign);
  }
  return OperadElement::from_terms(std::move(terms));
}

}  // namespace

OperadElement shuffle_image(const SymmetricRelation& rel, const Signature& sig, const ConversionDictionary& dict) {
  int gx = require_generator(sig, dict.circ_forward);
  int gy = require_generator(sig, dict.circ_backward);
  int gz = require_generator(sig, dict.bracket_gen);
  std::vector<int> labels(rel.arity);
  std::iota(labels.begin(), labels.end(), 1);
  return image_with_labels(rel, labels, gx, gy, gz);
}

std::vector<OperadElement> symmetric_to_shuffle(const SymmetricRelation& rel, const Signature& sig,
                                                const ConversionDictionary& dict) {
  int gx = require_generator(sig, dict.circ_forward);
  int gy = require_generator(sig, dict.circ_backward);
  int gz = require_generator(sig, dict.bracket_gen);
  std::vector<int> perm(rel.arity);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<OperadElement> out;
  std::set<std::vector<std::pair<std::string, std::string>>> seen;
  do {
    auto f = image_with_labels(rel, perm, gx, gy, gz);
    if (f.is_zero()) continue;
    // normalize: first structural term gets coefficient 1
    Rational lead = f.terms().front().second;
    std::vector<std::pair<std::string, std::string>> key;
    for (const auto& [t, c] : f.terms()) key.emplace_back(t.to_string(sig), opgb::to_string(c / lead));
    if (seen.insert(key).second) out.push_back(f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ------------------------------------------------------------- Presentation

std::vector<OperadElement> Presentation::relations_of_arity(int n) const {
  std::vector<OperadElement> out;
  for (const auto& r : relations)
    if (r.arity() == n) out.push_back(r);
  return out;
}

int Presentation::max_relation_arity() const {
  int m = 0;
  for (const auto& r : relations) m = std::max(m, r.arity());
  return m;
}

std::string Presentation::to_text() const {
  std::string out = "operad " + name + "\n";
  out += "generators " + signature.to_string() + "\n";
  out += "relations:\n";
  for (const auto& r : relations) out += r.to_string(signature) + "\n";
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; });
}

Presentation parse_presentation_impl(std::string_view text, bool allow_extends) {
  Presentation p;
  bool have_name = false, have_generators = false, in_relations = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < line.size() && std::isspace(static_cast<unsigned char>(line[indent]))) ++indent;
    line = trim(line);
    if (line.empty()) continue;
    int col = static_cast<int>(indent) + 1;
    auto keyword = [&](const std::string& kw) {
      return line.rfind(kw, 0) == 0 && (line.size() == kw.size() || std::isspace(static_cast<unsigned char>(line[kw.size()])) || line[kw.size()] == ':');
    };
    if (!in_relations && keyword("operad")) {
      std::string name = trim(std::string_view(line).substr(6));
      if (!is_identifier(name)) throw ParseError("expected an operad name", line_no, col + 7);
      p.name = name;
      have_name = true;
    } else if (!in_relations && keyword("extends")) {
      if (!allow_extends) throw ParseError("nested extends", line_no, col);
      std::string base = trim(std::string_view(line).substr(7));
      auto& all = builtin_presentations();
      auto it = all.find(base);
      if (it == all.end()) throw ParseError("unknown base presentation '" + base + "'", line_no, col + 8);
      if (have_generators) throw ParseError("extends must come before generators", line_no, col);
      p.signature = it->second.signature;
      p.relations = it->second.relations;
      have_generators = true;
    } else if (!in_relations && keyword("generators")) {
      std::string rest = trim(std::string_view(line).substr(10));
      if (!rest.empty() && rest[0] == ':') rest = trim(std::string_view(rest).substr(1));
      std::vector<GeneratorSymbol> gens;
      std::istringstream words(rest);
      std::string w;
      while (words >> w) {
        auto slash = w.find('/');
        int wcol = col + static_cast<int>(line.find(w));
        if (slash == std::string::npos) throw ParseError("generator must be written name/arity", line_no, wcol);
        GeneratorSymbol g;
        g.name = w.substr(0, slash);
        try {
          std::size_t used = 0;
          g.arity = std::stoi(w.substr(slash + 1), &used);
          if (used != w.size() - slash - 1) throw std::invalid_argument("arity");
        } catch (const std::exception&) {
          throw ParseError("bad arity in '" + w + "'", line_no, wcol);
        }
        if (g.arity < 2) throw ParseError("generators must have arity at least 2", line_no, wcol);
        gens.push_back(g);
      }
      if (gens.empty()) throw ParseError("no generators given", line_no, col);
      try {
        Signature sig(gens);
        if (have_generators && !(sig == p.signature))
          throw ParseError("generators differ from the extended presentation", line_no, col);
        p.signature = std::move(sig);
      } catch (const ArityError& e) {
        throw ParseError(e.what(), line_no, col);
      }
      have_generators = true;
    } else if (!in_relations && keyword("relations")) {
      if (!have_generators) throw ParseError("relations before generators", line_no, col);
      in_relations = true;
    } else if (in_relations && keyword("symmetric")) {
      std::size_t start = line.find_first_not_of(" \t", 9);
      if (start != std::string::npos && line[start] == ':') ++start;
      std::string body = line.substr(std::min(start, line.size()));
      try {
        auto rel = SymmetricRelation::parse(body);
        for (auto& f : symmetric_to_shuffle(rel, p.signature)) p.relations.push_back(std::move(f));
      } catch (const ParseError& e) {
        std::string what = e.what();
        auto pos = what.find(": ");
        throw ParseError(pos == std::string::npos ? what : what.substr(pos + 2), line_no,
                         col + static_cast<int>(line.size() - body.size()) + e.column() - 1);
      } catch (const ArityError& e) {
        throw ParseError(e.what(), line_no, col);
      }
    } else if (in_relations) {
      auto f = OperadElement::parse(std::string_view(raw).substr(0, hash), p.signature, line_no);
      if (f.is_zero()) throw ParseError("relation is zero", line_no, col);
      p.relations.push_back(std::move(f));
    } else {
      throw ParseError("expected 'operad', 'extends', 'generators' or 'relations:'", line_no, col);
    }
  }
  if (!have_name) throw ParseError("missing 'operad <name>' header", 0, 0);
  if (!have_generators) throw ParseError("missing generators", 0, 0);
  return p;
}

// Printed shuffle forms of the defining relations.
constexpr const char* kNovikov = R"(
x(x(1 2) 3) - x(1 x(2 3)) - x(y(1 2) 3) + y(x(1 3) 2)
x(x(1 3) 2) - x(1 y(2 3)) - x(y(1 3) 2) + y(x(1 2) 3)
y(1 x(2 3)) - y(y(1 3) 2) - y(1 y(2 3)) + y(y(1 2) 3)
x(x(1 2) 3) - x(x(1 3) 2)
x(y(1 2) 3) - y(1 x(2 3))
x(y(1 3) 2) - y(1 y(2 3))
)";

constexpr const char* kJacobi = R"(
z(z(1 2) 3) - z(1 z(2 3)) - z(z(1 3) 2)
)";

constexpr const char* kMixed = R"(
z(1 x(2 3)) + z(y(1 2) 3) - x(z(1 2) 3) - y(1 z(2 3)) - y(z(1 3) 2)
-z(x(1 3) 2) + z(x(1 2) 3) + x(z(1 2) 3) - x(z(1 3) 2) - x(1 z(2 3))
-y(z(1 2) 3) + z(1 y(2 3)) + z(y(1 3) 2) - x(z(1 3) 2) + y(1 z(2 3))
)";

constexpr const char* kSpecial = R"(
z(1 x(x(2 3) 4)) - x(z(1 x(2 3)) 4) - x(z(1 x(2 4)) 3) + x(x(z(1 2) 3) 4)
z(1 x(y(2 3) 4)) - x(z(1 y(2 3)) 4) - x(z(1 x(3 4)) 2) + x(x(z(1 3) 2) 4)
z(1 y(2 y(3 4))) - x(z(1 y(3 4)) 2) - x(z(1 y(2 4)) 3) + x(x(z(1 4) 2) 3)
-z(x(x(1 3) 4) 2) + x(z(x(1 3) 2) 4) + x(z(x(1 4) 2) 3) - x(x(z(1 2) 3) 4)
-z(x(y(1 3) 4) 2) + x(z(y(1 3) 2) 4) - y(1 z(2 x(3 4))) + x(y(1 z(2 3)) 4)
-z(x(y(1 4) 3) 2) + x(z(y(1 4) 2) 3) - y(1 z(2 y(3 4))) + x(y(1 z(2 4)) 3)
-z(x(x(1 2) 4) 3) + x(z(x(1 2) 3) 4) + x(z(x(1 4) 3) 2) - x(x(z(1 3) 2) 4)
-z(x(y(1 2) 4) 3) + x(z(y(1 2) 3) 4) + y(1 z(x(2 4) 3)) - y(1 x(z(2 3) 4))
-z(x(y(1 4) 2) 3) + x(z(y(1 4) 3) 2) + y(1 z(y(2 4) 3)) + y(1 y(2 z(3 4)))
-z(x(x(1 2) 3) 4) + x(z(x(1 2) 4) 3) + x(z(x(1 3) 4) 2) - x(x(z(1 4) 2) 3)
-z(x(y(1 2) 3) 4) + x(z(y(1 2) 4) 3) + y(1 z(x(2 3) 4)) - x(y(1 z(2 4)) 3)
-z(x(y(1 3) 2) 4) + x(z(y(1 3) 4) 2) + y(1 z(y(2 3) 4)) - x(y(1 z(3 4)) 2)
z(x(1 2) x(3 4)) - x(z(x(1 2) 3) 4) - x(z(1 x(3 4)) 2) + 2 x(x(z(1 3) 2) 4) + z(x(1 4) y(2 3)) - x(z(1 y(2 3)) 4) - x(z(x(1 4) 3) 2)
z(x(1 3) x(2 4)) - x(z(1 x(2 4)) 3) - x(z(x(1 3) 2) 4) + 2 x(x(z(1 2) 3) 4) + z(x(1 4) x(2 3)) - x(z(1 x(2 3)) 4) - x(z(x(1 4) 2) 3)
z(y(1 2) y(3 4)) - y(1 z(2 y(3 4))) - x(z(y(1 2) 4) 3) + 2 y(1 x(z(2 4) 3)) - z(y(1 4) x(2 3)) + x(z(y(1 4) 2) 3) - y(1 z(x(2 3) 4))
z(y(1 2) x(3 4)) - y(1 z(2 x(3 4))) - x(z(y(1 2) 3) 4) + 2 y(1 x(z(2 3) 4)) - z(y(1 3) x(2 4)) + x(z(y(1 3) 2) 4) - y(1 z(x(2 4) 3))
z(y(1 3) y(2 4)) + y(1 z(y(2 4) 3)) - x(z(y(1 3) 4) 2) + 2 y(1 y(2 z(3 4))) - z(y(1 4) y(2 3)) - y(1 z(y(2 3) 4)) + x(z(y(1 4) 3) 2)
z(x(1 2) y(3 4)) - x(z(1 y(3 4)) 2) - x(z(x(1 2) 4) 3) + 2 x(x(z(1 4) 2) 3) + z(x(1 3) y(2 4)) - x(z(x(1 3) 4) 2) - x(z(1 y(2 4)) 3)
)";

}  // namespace

Presentation parse_presentation(std::string_view text) { return parse_presentation_impl(text, true); }

const Signature& gd_signature() {
  static const Signature sig({{"x", 2}, {"y", 2}, {"z", 2}});
  return sig;
}

const std::map<std::string, Presentation>& builtin_presentations() {
  static const std::map<std::string, Presentation> all = [] {
    std::map<std::string, Presentation> m;
    auto make = [&](const std::string& name, const std::string& gens, const std::string& body) {
      m[name] = parse_presentation_impl("operad " + name + "\ngenerators " + gens + "\nrelations:\n" + body, false);
    };
    make("lie", "z/2", kJacobi);
    make("novikov", "x/2 y/2", kNovikov);
    make("gd", "x/2 y/2 z/2", std::string(kNovikov) + kJacobi + kMixed);
    make("wsgd", "x/2 y/2 z/2", std::string(kNovikov) + kJacobi + kMixed + kSpecial);
    return m;
  }();
  return all;
}

const Presentation& builtin_presentation(const std::string& name) {
  auto& all = builtin_presentations();
  auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown presentation '" + name + "'");
  return it->second;
}

const std::map<std::string, SymmetricRelation>& named_identities() {
  static const std::map<std::string, SymmetricRelation> all = [] {
    std::map<std::string, SymmetricRelation> m;
    m["gd1"] = SymmetricRelation::parse("b∘[a,c] = [a,b∘c] - [c,b∘a] + [b,a]∘c - [b,c]∘a");
    m["lsymm"] = SymmetricRelation::parse("(a∘b)∘c - a∘(b∘c) = (b∘a)∘c - b∘(a∘c)");
    m["rcomm"] = SymmetricRelation::parse("(a∘b)∘c = (a∘c)∘b");
    m["jacobi"] = SymmetricRelation::parse("[[a,b],c] - [a,[b,c]] - [[a,c],b] = 0");
    m["spec1"] = SymmetricRelation::parse("[c,a∘d]∘b + ([a,c]∘d)∘b = [c,(a∘b)∘d] - [c,a∘b]∘d");
    m["spec2"] = SymmetricRelation::parse(
        "2([a,b]∘c)∘d = [b∘c,a∘d] - [a∘c,b∘d] + ([a,b∘c] - [b,a∘c])∘d + ([a,b∘d] - [b,a∘d])∘c");
    m["spec3"] = SymmetricRelation::parse(
        "[c,[a,e∘b]∘d] = [a,[c,e∘d]∘b] - [a,[c,e∘d]]∘b - [a,[c,e]∘b]∘d + ([a,[c,e]]∘d)∘b"
        " + [c,[a,e]∘d]∘b + [c,[a,e∘b]]∘d - ([c,[a,e]]∘d)∘b");
    m["spec4"] = SymmetricRelation::parse(
        "[d∘a,[b,e∘c]] = [e∘a,[b,d∘c]] + [d,[b,e∘c]∘a] - [d,[b,e]∘a]∘c + ([d,[b,e]]∘c)∘a"
        " - [d,[b,e∘c]]∘a - [e∘a,[b,d]∘c] - [e,[b,d∘c]]∘a + [e,[b,d]∘c]∘a + [d∘a,[b,e]∘c]"
        " + [d,[b,e∘c]]∘a - [d,[b,e]∘c]∘a - [e,[b,d∘c]∘a] + [e,[b,d]∘a]∘c - ([e,[b,d]]∘c)∘a"
        " + [e,[b,d∘c]]∘a");
    m["spec5"] = SymmetricRelation::parse(
        "[a,d∘b]∘(c∘e) = [a,c∘b]∘(d∘e) + ([a,d∘b]∘c)∘e + ([a,d]∘(c∘e))∘b - (([a,d]∘c)∘e)∘b"
        " - ([a,c∘b]∘d)∘e - ([a,c]∘(d∘e))∘b + (([a,c]∘d)∘e)∘b");
    return m;
  }();
  return all;
}

}  // namespace opgb
