#include "opgb/tree_monomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "opgb/errors.hpp"

namespace opgb {

// ---------------------------------------------------------------- Signature

Signature::Signature(std::vector<GeneratorSymbol> generators) : generators_(std::move(generators)) {
  if (generators_.size() > 100) throw ArityError("too many generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (g.arity < 1) throw ArityError("generator " + g.name + " must have arity >= 1");
    if (g.name.empty() || !(std::isalpha(static_cast<unsigned char>(g.name[0])) || g.name[0] == '_'))
      throw ArityError("bad generator name '" + g.name + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == g.name) throw ArityError("duplicate generator " + g.name);
  }
}

std::optional<int> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

std::string Signature::to_string() const {
  std::string out;
  for (const auto& g : generators_) {
    if (!out.empty()) out += ' ';
    out += g.name + "/" + std::to_string(g.arity);
  }
  return out;
}

// ------------------------------------------------------------- TreeMonomial

TreeMonomial::TreeMonomial() {
  nodes_[0] = Node{-1, 1};
  size_ = 1;
}

TreeMonomial TreeMonomial::leaf(int label) {
  if (label < 1 || label > 255) throw ArityError("leaf label out of range");
  TreeMonomial t;
  t.nodes_[0] = Node{-1, static_cast<std::uint8_t>(label)};
  return t;
}

TreeMonomial TreeMonomial::vertex(int gen, std::span<const TreeMonomial> children) {
  if (children.empty()) throw ArityError("a vertex needs at least one child");
  TreeMonomial t;
  t.size_ = 0;
  int total = 1;
  for (const auto& c : children) total += c.size_;
  if (total > kMaxNodes) throw ArityError("monomial too large");
  t.nodes_[t.size_++] = Node{static_cast<std::int8_t>(gen), static_cast<std::uint8_t>(children.size())};
  int previous_min = 0;
  std::uint64_t seen[4] = {0, 0, 0, 0};
  for (const auto& c : children) {
    int m = c.min_label(0);
    if (m <= previous_min) throw ArityError("shuffle condition violated at root");
    previous_min = m;
    for (int i = 0; i < c.size_; ++i) {
      const Node& n = c.nodes_[i];
      if (n.is_leaf()) {
        auto& word = seen[n.value / 64];
        std::uint64_t bit = std::uint64_t{1} << (n.value % 64);
        if (word & bit) throw ArityError("duplicate leaf label");
        word |= bit;
      }
      t.nodes_[t.size_++] = n;
    }
  }
  return t;
}

TreeMonomial TreeMonomial::from_nodes(std::span<const Node> nodes) {
  if (nodes.empty() || nodes.size() > kMaxNodes) throw ArityError("bad node count");
  TreeMonomial t;
  t.size_ = static_cast<int>(nodes.size());
  std::copy(nodes.begin(), nodes.end(), t.nodes_.begin());
  t.validate();
  return t;
}

void TreeMonomial::validate() const {
  // Shape: preorder must consume exactly size_ nodes.
  int need = 1;
  for (int i = 0; i < size_; ++i) {
    if (need == 0) throw ArityError("trailing nodes");
    --need;
    const Node& n = nodes_[i];
    if (n.is_leaf()) {
      if (n.value == 0) throw ArityError("leaf label must be positive");
    } else {
      if (n.value == 0) throw ArityError("vertex without children");
      need += n.value;
    }
  }
  if (need != 0) throw ArityError("truncated monomial");
  std::vector<int> labels;
  for (int i = 0; i < size_; ++i)
    if (nodes_[i].is_leaf()) labels.push_back(nodes_[i].value);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) throw ArityError("duplicate leaf label");
  for (int i = 0; i < size_; ++i) {
    if (nodes_[i].is_leaf()) continue;
    int prev = 0;
    for (int c : children(i)) {
      int m = min_label(c);
      if (m <= prev) throw ArityError("shuffle condition violated");
      prev = m;
    }
  }
}

int TreeMonomial::arity() const {
  int n = 0;
  for (int i = 0; i < size_; ++i) n += nodes_[i].is_leaf();
  return n;
}

int TreeMonomial::degree() const { return size_ - arity(); }

int TreeMonomial::subtree_end(int i) const {
  int need = 1;
  while (need > 0) {
    --need;
    if (!nodes_[i].is_leaf()) need += nodes_[i].value;
    ++i;
  }
  return i;
}

std::vector<int> TreeMonomial::children(int i) const {
  std::vector<int> out;
  if (nodes_[i].is_leaf()) return out;
  int c = i + 1;
  for (int k = 0; k < nodes_[i].value; ++k) {
    out.push_back(c);
    c = subtree_end(c);
  }
  return out;
}

int TreeMonomial::min_label(int i) const {
  int end = subtree_end(i);
  int m = 1 << 20;
  for (int k = i; k < end; ++k)
    if (nodes_[k].is_leaf()) m = std::min<int>(m, nodes_[k].value);
  return m;
}

TreeMonomial TreeMonomial::subtree(int i) const {
  TreeMonomial t;
  int end = subtree_end(i);
  t.size_ = end - i;
  std::copy(nodes_.begin() + i, nodes_.begin() + end, t.nodes_.begin());
  return t;
}

std::vector<int> TreeMonomial::leaf_sequence() const {
  std::vector<int> out;
  for (int i = 0; i < size_; ++i)
    if (nodes_[i].is_leaf()) out.push_back(nodes_[i].value);
  return out;
}

bool TreeMonomial::is_standard() const {
  auto seq = leaf_sequence();
  std::sort(seq.begin(), seq.end());
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] != static_cast<int>(i) + 1) return false;
  return true;
}

TreeMonomial TreeMonomial::standardized() const {
  auto seq = leaf_sequence();
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  TreeMonomial t = *this;
  for (int i = 0; i < size_; ++i) {
    if (!t.nodes_[i].is_leaf()) continue;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), t.nodes_[i].value);
    t.nodes_[i].value = static_cast<std::uint8_t>(it - sorted.begin() + 1);
  }
  return t;
}

TreeMonomial TreeMonomial::relabeled(std::span<const int> labels) const {
  TreeMonomial t = *this;
  for (int i = 0; i < size_; ++i) {
    if (!t.nodes_[i].is_leaf()) continue;
    int j = t.nodes_[i].value;
    if (j < 1 || j > static_cast<int>(labels.size())) throw ArityError("relabeling does not cover label");
    t.nodes_[i].value = static_cast<std::uint8_t>(labels[j - 1]);
  }
  return t;
}

std::size_t TreeMonomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint8_t>(nodes_[i].gen);
    h *= 1099511628211ull;
    h ^= nodes_[i].value;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool TreeMonomial::operator==(const TreeMonomial& other) const {
  return size_ == other.size_ && std::equal(nodes_.begin(), nodes_.begin() + size_, other.nodes_.begin());
}

std::strong_ordering TreeMonomial::operator<=>(const TreeMonomial& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(nodes_.begin(), nodes_.begin() + size_, other.nodes_.begin(),
                                                other.nodes_.begin() + other.size_);
}

std::string TreeMonomial::to_string(const Signature& signature) const {
  std::string out;
  std::function<int(int)> emit = [&](int i) -> int {
    const Node& n = nodes_[i];
    if (n.is_leaf()) {
      out += std::to_string(n.value);
      return i + 1;
    }
    out += signature[n.gen].name;
    out += '(';
    int c = i + 1;
    for (int k = 0; k < n.value; ++k) {
      if (k) out += ' ';
      c = emit(c);
    }
    out += ')';
    return c;
  };
  emit(0);
  return out;
}

namespace {

class MonomialParser {
 public:
  MonomialParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  TreeMonomial run() {
    skip();
    std::vector<TreeMonomial::Node> nodes;
    parse_node(nodes);
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    if (static_cast<int>(nodes.size()) > TreeMonomial::kMaxNodes) fail("monomial too large");
    TreeMonomial t;
    try {
      t = TreeMonomial::from_nodes(nodes);
    } catch (const ArityError& e) {
      fail(e.what());
    }
    if (!t.is_standard()) fail("leaf labels must be exactly 1.." + std::to_string(t.arity()));
    return t;
  }

 private:
  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void parse_node(std::vector<TreeMonomial::Node>& nodes) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of monomial");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        if (value > 255) fail("leaf label too large");
        ++pos_;
      }
      if (value == 0) fail("leaf labels start at 1");
      nodes.push_back({-1, static_cast<std::uint8_t>(value)});
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail(std::string("unexpected character '") + c + "'");
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto gen = sig_.find(name);
    if (!gen) {
      pos_ = start;
      fail("unknown generator '" + name + "'");
    }
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' after " + name);
    ++pos_;
    std::size_t slot = nodes.size();
    nodes.push_back({static_cast<std::int8_t>(*gen), 0});
    int count = 0;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) fail("unclosed '('");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      parse_node(nodes);
      ++count;
    }
    if (count != sig_[*gen].arity)
      fail("generator " + name + " expects " + std::to_string(sig_[*gen].arity) + " arguments, got " +
           std::to_string(count));
    nodes[slot].value = static_cast<std::uint8_t>(count);
  }
};

std::vector<int> path_to(const TreeMonomial& host, int target) {
  std::vector<int> path;
  int i = 0;
  while (i != target) {
    auto kids = host.children(i);
    int k = 0;
    while (k + 1 < static_cast<int>(kids.size()) && kids[k + 1] <= target) ++k;
    path.push_back(k);
    i = kids[k];
  }
  return path;
}

}  // namespace

TreeMonomial TreeMonomial::parse(std::string_view text, const Signature& signature) {
  return MonomialParser(text, signature).run();
}

// -------------------------------------------------------- ShufflePartition

ShufflePartition::ShufflePartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all;
  int prev_min = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw ArityError("empty block in shuffle partition");
    std::sort(b.begin(), b.end());
    if (b.front() <= prev_min) throw ArityError("block minima must increase");
    prev_min = b.front();
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) throw ArityError("blocks must partition {1..n}");
  total_ = static_cast<int>(all.size());
}

namespace {

// Partitions of the sorted `labels` into blocks of the given sizes with
// increasing minima; blocks are returned as label lists.
void shuffle_split(const std::vector<int>& labels, std::span<const int> sizes, std::size_t k,
                   std::vector<std::vector<int>>& current, std::vector<std::vector<std::vector<int>>>& out) {
  if (k == sizes.size()) {
    if (labels.empty()) out.push_back(current);
    return;
  }
  int need = sizes[k];
  if (need < 1 || static_cast<int>(labels.size()) < need) return;
  // The block takes the smallest remaining label plus need-1 others.
  std::vector<int> rest(labels.begin() + 1, labels.end());
  std::vector<int> pick(rest.size(), 0);
  std::fill(pick.begin(), pick.begin() + (need - 1), 1);
  do {
    std::vector<int> block{labels.front()};
    std::vector<int> remaining;
    for (std::size_t i = 0; i < rest.size(); ++i) (pick[i] ? block : remaining).push_back(rest[i]);
    current.push_back(block);
    shuffle_split(remaining, sizes, k + 1, current, out);
    current.pop_back();
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

std::vector<std::vector<std::vector<int>>> split_labels(const std::vector<int>& labels, std::span<const int> sizes) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  shuffle_split(labels, sizes, 0, current, out);
  return out;
}

}  // namespace

std::vector<ShufflePartition> shuffle_partitions(int n, std::span<const int> sizes) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<ShufflePartition> out;
  for (auto& blocks : split_labels(labels, sizes)) out.emplace_back(std::move(blocks));
  return out;
}

// ---------------------------------------------------------------- Divisors

namespace {

bool match_at(const TreeMonomial& pattern, int pi, const TreeMonomial& host, int hi, std::vector<int>& inputs,
              std::vector<int>& vertices, int& pnext, int& hnext) {
  const auto& pn = pattern.node(pi);
  if (pn.is_leaf()) {
    inputs[pn.value - 1] = hi;
    pnext = pi + 1;
    hnext = host.subtree_end(hi);
    return true;
  }
  const auto& hn = host.node(hi);
  if (hn.is_leaf() || hn.gen != pn.gen || hn.value != pn.value) return false;
  vertices.push_back(hi);
  int p = pi + 1, h = hi + 1;
  for (int k = 0; k < pn.value; ++k) {
    if (!match_at(pattern, p, host, h, inputs, vertices, p, h)) return false;
  }
  pnext = p;
  hnext = h;
  return true;
}

}  // namespace

std::vector<Occurrence> find_occurrences(const TreeMonomial& pattern, const TreeMonomial& host) {
  std::vector<Occurrence> out;
  if (pattern.is_leaf()) return out;
  int k = pattern.arity();
  for (int v = 0; v < host.node_count(); ++v) {
    if (host.node(v).is_leaf()) continue;
    std::vector<int> inputs(k, -1), vertices;
    int pn = 0, hn = 0;
    if (!match_at(pattern, 0, host, v, inputs, vertices, pn, hn)) continue;
    bool ordered = true;
    for (int j = 1; j < k && ordered; ++j) ordered = host.min_label(inputs[j - 1]) < host.min_label(inputs[j]);
    if (!ordered) continue;
    Occurrence occ;
    occ.root = v;
    occ.path = path_to(host, v);
    occ.inputs = std::move(inputs);
    occ.vertices = std::move(vertices);
    out.push_back(std::move(occ));
  }
  return out;
}

std::pair<TreeMonomial, Occurrence> divisor_at(const TreeMonomial& host, int root, std::uint64_t mask) {
  std::vector<TreeMonomial::Node> nodes;
  std::vector<int> hanging;  // host nodes that become pattern leaves, in planar order
  Occurrence occ;
  occ.root = root;
  std::function<void(int)> walk = [&](int i) {
    bool inside = !host.node(i).is_leaf() && (mask >> i & 1);
    if (!inside) {
      nodes.push_back({-1, static_cast<std::uint8_t>(host.min_label(i))});
      hanging.push_back(i);
      return;
    }
    occ.vertices.push_back(i);
    nodes.push_back(host.node(i));
    for (int c : host.children(i)) walk(c);
  };
  walk(root);
  TreeMonomial raw = TreeMonomial::from_nodes(nodes);
  TreeMonomial pattern = raw.standardized();
  occ.inputs.assign(hanging.size(), -1);
  {
    int h = 0;
    for (int i = 0; i < pattern.node_count(); ++i)
      if (pattern.node(i).is_leaf()) occ.inputs[pattern.node(i).value - 1] = hanging[h++];
  }
  occ.path = path_to(host, root);
  return {pattern, occ};
}

std::vector<std::uint64_t> connected_vertex_sets(const TreeMonomial& host, int root) {
  std::function<std::vector<std::uint64_t>(int)> sets = [&](int v) {
    std::vector<std::uint64_t> acc{std::uint64_t{1} << v};
    for (int c : host.children(v)) {
      if (host.node(c).is_leaf()) continue;
      auto sub = sets(c);
      std::vector<std::uint64_t> next = acc;  // child cut
      for (auto a : acc)
        for (auto s : sub) next.push_back(a | s);
      acc = std::move(next);
    }
    return acc;
  };
  if (host.node(root).is_leaf()) return {};
  return sets(root);
}

void for_each_divisor(const TreeMonomial& host,
                      const std::function<void(const TreeMonomial&, const Occurrence&)>& visit) {
  for (int v = 0; v < host.node_count(); ++v) {
    if (host.node(v).is_leaf()) continue;
    for (auto mask : connected_vertex_sets(host, v)) {
      auto [pattern, occ] = divisor_at(host, v, mask);
      visit(pattern, occ);
    }
  }
}

TreeMonomial graft_monomial(const TreeMonomial& host, const Occurrence& occ, const TreeMonomial& replacement) {
  if (replacement.arity() != static_cast<int>(occ.inputs.size()))
    throw ArityError("replacement arity does not match the occurrence");
  std::vector<TreeMonomial::Node> nodes;
  auto hn = host.nodes();
  nodes.insert(nodes.end(), hn.begin(), hn.begin() + occ.root);
  for (const auto& n : replacement.nodes()) {
    if (!n.is_leaf()) {
      nodes.push_back(n);
      continue;
    }
    int h = occ.inputs.at(n.value - 1);
    int end = host.subtree_end(h);
    nodes.insert(nodes.end(), hn.begin() + h, hn.begin() + end);
  }
  int root_end = host.subtree_end(occ.root);
  nodes.insert(nodes.end(), hn.begin() + root_end, hn.end());
  if (static_cast<int>(nodes.size()) > TreeMonomial::kMaxNodes) throw ArityError("monomial too large");
  return TreeMonomial::from_nodes(nodes);
}

TreeMonomial reassemble(const TreeMonomial& host, const Occurrence& occ) {
  std::uint64_t mask = 0;
  for (int v : occ.vertices) mask |= std::uint64_t{1} << v;
  auto [pattern, again] = divisor_at(host, occ.root, mask);
  if (again.inputs != occ.inputs) throw ArityError("inconsistent occurrence");
  return graft_monomial(host, occ, pattern);
}

// ----------------------------------------------------------- Enumeration

namespace {

// Cartesian product over per-child candidate lists.
void product_compose(int gen, const std::vector<std::vector<TreeMonomial>>& options, std::size_t k,
                     std::vector<TreeMonomial>& current, std::vector<TreeMonomial>& out) {
  if (k == options.size()) {
    out.push_back(TreeMonomial::vertex(gen, current));
    return;
  }
  for (const auto& t : options[k]) {
    current.push_back(t);
    product_compose(gen, options, k + 1, current, out);
    current.pop_back();
  }
}

void compositions(int n, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(current);
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    current.push_back(first);
    compositions(n - first, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<TreeMonomial> enumerate_monomials(const Signature& signature, int arity) {
  if (arity < 1) throw ArityError("arity must be positive");
  std::vector<std::vector<TreeMonomial>> by_arity(arity + 1);
  by_arity[1] = {TreeMonomial::leaf(1)};
  for (int n = 2; n <= arity; ++n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    for (int g = 0; g < signature.size(); ++g) {
      int k = signature[g].arity;
      if (k == 1) continue;  // unary vertices are added below
      std::vector<std::vector<int>> sizes;
      std::vector<int> cur;
      compositions(n, k, cur, sizes);
      for (const auto& sz : sizes) {
        for (const auto& blocks : split_labels(labels, sz)) {
          std::vector<std::vector<TreeMonomial>> options(k);
          for (int i = 0; i < k; ++i)
            for (const auto& t : by_arity[sz[i]]) options[i].push_back(t.relabeled(blocks[i]));
          std::vector<TreeMonomial> current;
          product_compose(g, options, 0, current, by_arity[n]);
        }
      }
    }
  }
  for (int g = 0; g < signature.size(); ++g)
    if (signature[g].arity == 1) throw ArityError("unary generators give infinite components; not supported");
  return by_arity[arity];
}

std::uint64_t count_monomials(const Signature& signature, int arity) {
  std::vector<std::uint64_t> c(arity + 1, 0);
  c[1] = 1;
  // Number of shuffle splittings with sizes s1..sk of an n-set:
  // prod_i C(remaining_i - 1, s_i - 1).
  auto binom = [](int n, int k) {
    if (k < 0 || k > n) return std::uint64_t{0};
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (int n = 2; n <= arity; ++n) {
    for (int g = 0; g < signature.size(); ++g) {
      int k = signature[g].arity;
      if (k == 1) throw ArityError("unary generators give infinite components; not supported");
      std::vector<std::vector<int>> sizes;
      std::vector<int> cur;
      compositions(n, k, cur, sizes);
      for (const auto& sz : sizes) {
        std::uint64_t ways = 1;
        int remaining = n;
        for (int s : sz) {
          ways *= binom(remaining - 1, s - 1) * c[s];
          remaining -= s;
        }
        c[n] += ways;
      }
    }
  }
  return c[arity];
}

std::vector<TreeMonomial> all_labelings(const TreeMonomial& shape) {
  std::function<std::vector<std::vector<TreeMonomial::Node>>(int, const std::vector<int>&)> label =
      [&](int i, const std::vector<int>& labels) {
        std::vector<std::vector<TreeMonomial::Node>> out;
        const auto& n = shape.node(i);
        if (n.is_leaf()) {
          out.push_back({{-1, static_cast<std::uint8_t>(labels.front())}});
          return out;
        }
        auto kids = shape.children(i);
        std::vector<int> sizes;
        for (int c : kids) sizes.push_back(shape.subtree(c).arity());
        for (const auto& blocks : split_labels(labels, sizes)) {
          std::vector<std::vector<TreeMonomial::Node>> partial{{n}};
          for (std::size_t k = 0; k < kids.size(); ++k) {
            auto sub = label(kids[k], blocks[k]);
            std::vector<std::vector<TreeMonomial::Node>> next;
            for (const auto& p : partial)
              for (const auto& s : sub) {
                auto q = p;
                q.insert(q.end(), s.begin(), s.end());
                next.push_back(std::move(q));
              }
            partial = std::move(next);
          }
          out.insert(out.end(), partial.begin(), partial.end());
        }
        return out;
      };
  std::vector<int> labels(shape.arity());
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<TreeMonomial> result;
  for (const auto& nodes : label(0, labels)) result.push_back(TreeMonomial::from_nodes(nodes));
  return result;
}

// ------------------------------------------------------- Common multiples

namespace {

// Planar union of t1 and t2 with t2's root identified with t1 node `anchor`.
// Nodes of the result record which t1/t2 node they came from.
struct UnionBuilder {
  const TreeMonomial& t1;
  const TreeMonomial& t2;
  std::vector<TreeMonomial::Node> nodes;
  std::vector<int> from1, from2;
  bool ok = true;

  void emit(TreeMonomial::Node n, int a, int b) {
    nodes.push_back(n);
    from1.push_back(a);
    from2.push_back(b);
  }

  // a, b: node indices in t1, t2 or -1 (outside that tree).
  void joint(int a, int b) {
    bool ai = a >= 0 && !t1.node(a).is_leaf();
    bool bi = b >= 0 && !t2.node(b).is_leaf();
    if (ai && bi) {
      if (t1.node(a).gen != t2.node(b).gen || t1.node(a).value != t2.node(b).value) {
        ok = false;
        return;
      }
      emit(t1.node(a), a, b);
      auto ka = t1.children(a), kb = t2.children(b);
      for (std::size_t k = 0; k < ka.size() && ok; ++k) joint(ka[k], kb[k]);
    } else if (ai) {
      emit(t1.node(a), a, -1);
      for (int c : t1.children(a)) joint(c, -1);
    } else if (bi) {
      emit(t2.node(b), -1, b);
      for (int c : t2.children(b)) joint(-1, c);
    } else {
      emit({-1, 1}, -1, -1);
    }
  }

  void outer(int a, int anchor) {
    if (a == anchor) {
      joint(a, 0);
      return;
    }
    if (t1.node(a).is_leaf()) {
      emit({-1, 1}, -1, -1);
      return;
    }
    emit(t1.node(a), a, -1);
    for (int c : t1.children(a)) {
      if (!ok) return;
      outer(c, anchor);
    }
  }
};

}  // namespace

std::vector<CommonMultiple> common_multiples(const TreeMonomial& t1, const TreeMonomial& t2, int max_arity,
                                             int only_arity) {
  std::vector<CommonMultiple> out;
  if (t1.is_leaf() || t2.is_leaf()) return out;

  auto add_configuration = [&](const TreeMonomial& first, const TreeMonomial& second, int anchor, bool swapped) {
    UnionBuilder ub{first, second, {}, {}, {}};
    ub.outer(0, anchor);
    if (!ub.ok) return;
    // Shape with placeholder labels 1..k in planar order.
    int label = 0;
    for (auto& n : ub.nodes)
      if (n.is_leaf()) n.value = static_cast<std::uint8_t>(++label);
    if (label > max_arity || (only_arity > 0 && label != only_arity)) return;
    TreeMonomial shape = TreeMonomial::from_nodes(ub.nodes);
    std::uint64_t mask1 = 0, mask2 = 0;
    int root1 = 0, root2 = -1;
    for (int i = 0; i < static_cast<int>(ub.nodes.size()); ++i) {
      if (ub.nodes[i].is_leaf()) continue;
      if (ub.from1[i] >= 0) mask1 |= std::uint64_t{1} << i;
      if (ub.from2[i] >= 0) {
        mask2 |= std::uint64_t{1} << i;
        if (root2 < 0) root2 = i;
      }
    }
    if (mask1 == mask2 && first == second) return;  // the identical occurrence
    for (const auto& m : all_labelings(shape)) {
      auto [p1, o1] = divisor_at(m, root1, mask1);
      if (p1 != first) continue;
      auto [p2, o2] = divisor_at(m, root2, mask2);
      if (p2 != second) continue;
      if (swapped)
        out.push_back({m, o2, o1});
      else
        out.push_back({m, o1, o2});
    }
  };

  // t2 rooted at a vertex of t1 (including the root), then t1 rooted strictly
  // below the root of t2.
  for (int a = 0; a < t1.node_count(); ++a)
    if (!t1.node(a).is_leaf()) add_configuration(t1, t2, a, false);
  for (int b = 1; b < t2.node_count(); ++b)
    if (!t2.node(b).is_leaf()) add_configuration(t2, t1, b, true);
  return out;
}

}  // namespace opgb
