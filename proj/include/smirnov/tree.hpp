#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "smirnov/weight_poly.hpp"

namespace smirnov {

/// Multiset of node labels, label -> multiplicity (all >= 1).
using XMonomial = std::map<int, int>;

XMonomial xmon_mul(const XMonomial& a, const XMonomial& b);
int xmon_degree(const XMonomial& m);
std::string to_string(const XMonomial& m);  // x1^3*x2 style; "1" if empty

struct TreeNode;
/// Immutable labeled plane binary tree; never null for a real tree,
/// null denotes an absent child.
using Tree = std::shared_ptr<const TreeNode>;

struct TreeNode {
    int label;
    Tree left;
    Tree right;
};

Tree node(int label, Tree left = nullptr, Tree right = nullptr);

int node_count(const Tree& t);
bool tree_equal(const Tree& a, const Tree& b);

/// Compact text form: `label(left,right)` with `_` for an absent child.
std::string tree_to_text(const Tree& t);
Tree tree_from_text(const std::string& s);

nlohmann::json tree_to_json(const Tree& t);
Tree tree_from_json(const nlohmann::json& j);

using Word = std::vector<int>;

bool is_smirnov_word(const Word& w);

struct WordStats {
    int asc = 0;  // weak ascents w_i <= w_{i+1}
    int des = 0;  // strict descents w_i > w_{i+1}
};
WordStats word_stats(const Word& w);

bool is_smirnov_tree(const Tree& t);

struct TreeWeight {
    WeightPoly edge;   // single monomial for a single tree
    XMonomial xpart;
};
TreeWeight tree_weight(const Tree& t);

struct TreeStats {
    int rasc = 0, rdes = 0, lasc = 0, ldes = 0;
};
TreeStats tree_stats(const Tree& t);

struct PrincipalData {
    std::vector<Tree> path;  // root first, principal node last
    int principal_label = 0;  // a(T)
    int max_label = 0;        // M(T)
    int min_label = 0;        // m(T)
};

/// Walks the principal path: stop at a node with no right child; step left
/// when the left child shares the label (its right sibling is then smaller);
/// otherwise step right. Throws on non-Smirnov input.
PrincipalData principal_data(const Tree& t);

/// All Smirnov words of length n over [k], lexicographic. Stops early if the
/// visitor returns false.
void enumerate_smirnov_words(int n, int k, const std::function<bool(const Word&)>& visit);
std::vector<Word> smirnov_words(int n, int k);

/// All Smirnov trees with n nodes and labels in [k]; shape-major order
/// (shapes by left-subtree size, recursively), then label-lexicographic in
/// preorder. Stops early if the visitor returns false.
void enumerate_smirnov_trees(int n, int k, const std::function<bool(const Tree&)>& visit);
std::vector<Tree> smirnov_trees(int n, int k);

/// All labeled plane binary trees with n nodes, labels in [k], same order.
/// Test oracle for the Smirnov enumerator and workhorse for standard trees.
void enumerate_labeled_trees(int n, int k, const std::function<bool(const Tree&)>& visit);

/// Unlabeled shapes with n nodes (returned with label 1 throughout), in the
/// same shape order the labeled enumerators use.
const std::vector<Tree>& tree_shapes(int n);

/// Copy of shape with labels assigned in preorder.
Tree relabel_preorder(const Tree& shape, const std::vector<int>& labels);

}  // namespace smirnov
