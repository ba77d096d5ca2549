#include "opgb/hilbert.hpp"

#include <unordered_set>

#include "opgb/errors.hpp"

namespace opgb {

namespace {

void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    cur.push_back(first);
    compositions(n - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

class NormalBuilder {
 public:
  explicit NormalBuilder(const GroebnerBasis& basis) : basis_(basis) {
    for (const auto& r : basis.rules) leads_.insert(r.lead);
    levels_.push_back({});
    levels_.push_back({TreeMonomial::leaf(1)});
  }

  const std::vector<TreeMonomial>& level(int n) {
    while (static_cast<int>(levels_.size()) <= n) build(static_cast<int>(levels_.size()));
    return levels_[n];
  }

 private:
  const GroebnerBasis& basis_;
  std::unordered_set<TreeMonomial> leads_;
  std::vector<std::vector<TreeMonomial>> levels_;

  bool root_is_clean(const TreeMonomial& t) const {
    for (auto mask : connected_vertex_sets(t, 0))
      if (leads_.count(divisor_at(t, 0, mask).first)) return false;
    return true;
  }

  void build(int n) {
    std::vector<TreeMonomial> out;
    const auto& sig = basis_.signature;
    for (int g = 0; g < sig.size(); ++g) {
      int k = sig[g].arity;
      if (k < 2) throw ArityError("unary generators are not supported");
      std::vector<std::vector<int>> sizes;
      std::vector<int> cur;
      compositions(n, k, cur, sizes);
      for (const auto& sz : sizes) {
        for (int s : sz) level(s);
        for (const auto& part : shuffle_partitions(n, sz)) {
          std::vector<std::size_t> idx(k, 0);
          bool empty = false;
          for (int i = 0; i < k; ++i) empty |= levels_[sz[i]].empty();
          if (empty) continue;
          std::vector<TreeMonomial> kids(k);
          for (;;) {
            for (int i = 0; i < k; ++i) kids[i] = levels_[sz[i]][idx[i]].relabeled(part.blocks()[i]);
            auto t = TreeMonomial::vertex(g, kids);
            if (root_is_clean(t)) out.push_back(t);
            int i = 0;
            while (i < k && ++idx[i] == levels_[sz[i]].size()) idx[i++] = 0;
            if (i == k) break;
          }
        }
      }
    }
    levels_.push_back(std::move(out));
  }
};

}  // namespace

std::vector<TreeMonomial> normal_monomials(const GroebnerBasis& basis, int n) {
  if (n < 1) throw ArityError("arity must be positive");
  if (n > basis.max_arity) throw ArityError("arity beyond the completed range of the basis");
  NormalBuilder b(basis);
  return b.level(n);
}

std::vector<std::uint64_t> normal_counts(const GroebnerBasis& basis, int max_arity) {
  if (max_arity > basis.max_arity) throw ArityError("arity beyond the completed range of the basis");
  NormalBuilder b(basis);
  std::vector<std::uint64_t> dims(max_arity + 1, 0);
  for (int n = 1; n <= max_arity; ++n) dims[n] = b.level(n).size();
  return dims;
}

std::string DimensionTable::to_text() const {
  std::vector<std::string> top{"n"}, bottom{"dim"};
  for (const auto& [n, d] : rows) {
    top.push_back(std::to_string(n));
    bottom.push_back(std::to_string(d));
  }
  std::string a, b;
  for (std::size_t i = 0; i < top.size(); ++i) {
    std::size_t w = std::max(top[i].size(), bottom[i].size());
    std::string sep = i == 0 ? " | " : (i + 1 < top.size() ? " " : "");
    a += std::string(w - top[i].size(), ' ') + top[i] + sep;
    b += std::string(w - bottom[i].size(), ' ') + bottom[i] + sep;
  }
  return (name.empty() ? "" : name + "\n") + a + "\n" + b + "\n";
}

std::string DimensionTable::to_csv() const {
  std::string out = "n,dim\n";
  for (const auto& [n, d] : rows) out += std::to_string(n) + "," + std::to_string(d) + "\n";
  return out;
}

DimensionTable dimension_table(const GroebnerBasis& basis, int up_to) {
  if (up_to <= 0) up_to = basis.max_arity;
  DimensionTable t;
  t.name = basis.presentation_name;
  auto dims = normal_counts(basis, up_to);
  for (int n = 1; n <= up_to; ++n) t.rows.emplace_back(n, dims[n]);
  return t;
}

}  // namespace opgb
