#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace stirperm {

/// Rooted tree in which every vertex has optional left, vertical and right
/// children. Nodes are immutable and share subtrees.
class TernaryTree {
public:
    enum Slot { left = 0, vertical = 1, right = 2 };

    struct EdgeCounts {
        int left = 0;
        int vertical = 0;
        int right = 0;
        friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
    };

    TernaryTree() = default;  // a single vertex, no edges
    TernaryTree(const TernaryTree* left, const TernaryTree* vertical, const TernaryTree* right);

    bool has_child(Slot s) const { return static_cast<bool>(child_[s]); }
    const TernaryTree& child(Slot s) const { return *child_[s]; }

    int edges() const;
    EdgeCounts edge_counts() const;

    /// Move the subtree in slot i to slot image[i], recursively.
    TernaryTree permute_slots(const std::array<Slot, 3>& image) const;

    /// "(L,V,R)" with "-" for a missing child; a lone vertex is "(-,-,-)".
    std::string to_string() const;
    static TernaryTree parse(std::string_view text);  // throws ParseError

    friend bool operator==(const TernaryTree& a, const TernaryTree& b);

private:
    std::array<std::shared_ptr<const TernaryTree>, 3> child_;
};

/// All ternary trees with the given number of edges.
std::vector<TernaryTree> all_ternary_trees(int edges);

/// Rooted plane tree; children are ordered left to right.
struct OrderedTree {
    std::vector<OrderedTree> children;

    int edges() const;
    /// Nested parentheses: a leaf is "()", a single edge "(())".
    std::string to_string() const;
    static OrderedTree parse(std::string_view text);  // throws ParseError

    friend bool operator==(const OrderedTree&, const OrderedTree&) = default;
};

std::vector<OrderedTree> all_ordered_trees(int edges);

/// Ordered tree where each parent marks one child (1-based `favorite`,
/// 0 on leaves).
struct FCOrderedTree {
    std::vector<FCOrderedTree> children;
    int favorite = 0;

    int edges() const;
    OrderedTree shape() const;
    bool valid() const;
    /// Like OrderedTree, with "@i" after each parent's closing parenthesis.
    std::string to_string() const;
    static FCOrderedTree parse(std::string_view text);  // throws ParseError

    friend bool operator==(const FCOrderedTree&, const FCOrderedTree&) = default;
};

/// Every favorite-child decoration of every ordered tree with `edges` edges.
std::vector<FCOrderedTree> all_fc_trees(int edges);

/// Preorder flattening: vertex 0 is the root; children[v] lists v's children
/// left to right.
struct FlatTree {
    std::vector<int> parent;  // -1 for the root
    std::vector<std::vector<int>> children;

    static FlatTree from(const OrderedTree& t);
};

/// Left-path labeling, indexed by preorder vertex number. The root gets 0;
/// then repeatedly the smallest labeled vertex with an unlabeled child has
/// the leftmost paths from its unlabeled children (left to right) labeled
/// with the smallest unused labels.
std::vector<int> left_path_labeling(const OrderedTree& t);

}  // namespace stirperm
