#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace opgb {

struct GeneratorSymbol {
  std::string name;
  int arity = 2;

  bool operator==(const GeneratorSymbol&) const = default;
};

/// Ordered generator alphabet. The index of a generator is its rank in the
/// default monomial order (declaration order: x < y < z for the GD presets).
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<GeneratorSymbol> generators);

  int size() const { return static_cast<int>(generators_.size()); }
  const GeneratorSymbol& operator[](int i) const { return generators_[i]; }
  const std::vector<GeneratorSymbol>& generators() const { return generators_; }
  std::optional<int> find(std::string_view name) const;

  /// "x/2 y/2 z/2"
  std::string to_string() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<GeneratorSymbol> generators_;
};

/// A shuffle tree monomial stored in preorder.
///
/// Leaves carry distinct positive labels; internal vertices carry a generator
/// index and their child count. At every vertex the minimal leaf labels of the
/// child subtrees increase from left to right. A monomial is *standard* when its
/// labels are exactly {1,...,arity}; all public constructors except the
/// label-preserving helpers produce standard monomials.
class TreeMonomial {
 public:
  static constexpr int kMaxNodes = 40;

  struct Node {
    std::int8_t gen;      // < 0 for a leaf
    std::uint8_t value;   // leaf label, or child count of a vertex

    bool is_leaf() const { return gen < 0; }
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
  };

  /// The identity monomial: a single leaf labelled 1.
  TreeMonomial();

  static TreeMonomial leaf(int label = 1);

  /// gen(children...) with the children's labels kept as they are. Throws
  /// ArityError when labels collide or the shuffle condition fails at the root.
  static TreeMonomial vertex(int gen, std::span<const TreeMonomial> children);

  /// Validates the full invariant set (shape, distinct labels, shuffle
  /// condition everywhere); throws ArityError otherwise.
  static TreeMonomial from_nodes(std::span<const Node> nodes);

  /// Canonical text form, e.g. "x(y(1 3) 2)".
  static TreeMonomial parse(std::string_view text, const class Signature& signature);
  std::string to_string(const Signature& signature) const;

  int node_count() const { return size_; }
  const Node& node(int i) const { return nodes_[i]; }
  std::span<const Node> nodes() const { return {nodes_.data(), static_cast<std::size_t>(size_)}; }

  int arity() const;
  /// Number of internal vertices.
  int degree() const;
  bool is_leaf() const { return size_ == 1; }

  /// One past the last preorder index of the subtree rooted at i.
  int subtree_end(int i) const;
  std::vector<int> children(int i) const;
  int min_label(int i) const;
  /// Subtree rooted at node i, labels unchanged.
  TreeMonomial subtree(int i) const;

  /// Leaf labels from left to right.
  std::vector<int> leaf_sequence() const;
  bool is_standard() const;
  /// Order-preserving renumbering of the labels to {1,...,arity}.
  TreeMonomial standardized() const;
  /// Replaces label j (of a standard monomial) by labels[j-1].
  TreeMonomial relabeled(std::span<const int> labels) const;

  std::size_t hash() const;

  bool operator==(const TreeMonomial& other) const;
  std::strong_ordering operator<=>(const TreeMonomial& other) const;

 private:
  std::array<Node, kMaxNodes> nodes_{};
  int size_ = 0;

  void validate() const;
};

struct TreeMonomialHash {
  std::size_t operator()(const TreeMonomial& t) const { return t.hash(); }
};

/// Blocks I_1,...,I_m of {1,...,n} with min I_1 < ... < min I_m.
class ShufflePartition {
 public:
  explicit ShufflePartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  int total() const { return total_; }

 private:
  std::vector<std::vector<int>> blocks_;
  int total_ = 0;
};

/// All shuffle partitions of {1,...,n} whose block sizes are `sizes` in order.
std::vector<ShufflePartition> shuffle_partitions(int n, std::span<const int> sizes);

/// An embedding of a pattern as a divisor of a host monomial.
struct Occurrence {
  int root = 0;                 // host node index of the pattern root
  std::vector<int> path;        // child positions from the host root to `root`
  std::vector<int> inputs;      // inputs[j-1]: host node hanging at pattern leaf j
  std::vector<int> vertices;    // host internal nodes covered, in preorder

  bool operator==(const Occurrence&) const = default;
};

/// Every occurrence of `pattern` in `host`, ordered by host preorder of the
/// pattern root. The identity pattern (a leaf) has no occurrences.
std::vector<Occurrence> find_occurrences(const TreeMonomial& pattern, const TreeMonomial& host);

/// The standardized divisor at (root, vertices), with its occurrence data.
std::pair<TreeMonomial, Occurrence> divisor_at(const TreeMonomial& host, int root, std::uint64_t vertex_mask);

/// Vertex masks (bit i = host node i) of the connected vertex sets whose
/// topmost vertex is `root`.
std::vector<std::uint64_t> connected_vertex_sets(const TreeMonomial& host, int root);

/// Every connected divisor of `host` (at least one vertex), grouped by root in
/// preorder. The callback receives the standardized pattern and its occurrence.
void for_each_divisor(const TreeMonomial& host,
                      const std::function<void(const TreeMonomial&, const Occurrence&)>& visit);

/// Replaces the divisor at `occ` by `replacement` (same arity as the divisor).
TreeMonomial graft_monomial(const TreeMonomial& host, const Occurrence& occ, const TreeMonomial& replacement);

/// Recovers the host from the occurrence: the divisor and the hanging
/// complements, reassembled. Equals `host` for every valid occurrence.
TreeMonomial reassemble(const TreeMonomial& host, const Occurrence& occ);

struct CommonMultiple {
  TreeMonomial monomial;
  Occurrence first;
  Occurrence second;
};

/// Small common multiples: monomials of arity <= max_arity whose internal
/// vertices are exactly the union of an occurrence of t1 and an occurrence of
/// t2, the two sharing at least one vertex. Identical occurrences of the same
/// monomial are excluded. With only_arity > 0, just that arity is produced.
std::vector<CommonMultiple> common_multiples(const TreeMonomial& t1, const TreeMonomial& t2, int max_arity,
                                             int only_arity = 0);

/// All standard shuffle tree monomials of the given arity.
std::vector<TreeMonomial> enumerate_monomials(const Signature& signature, int arity);

/// Number of standard monomials of the given arity (no enumeration).
std::uint64_t count_monomials(const Signature& signature, int arity);

/// All standard shuffle labelings of the planar shape of `shape`.
std::vector<TreeMonomial> all_labelings(const TreeMonomial& shape);

}  // namespace opgb

template <>
struct std::hash<opgb::TreeMonomial> {
  std::size_t operator()(const opgb::TreeMonomial& t) const { return t.hash(); }
};
