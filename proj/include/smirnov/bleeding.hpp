#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "smirnov/partition.hpp"
#include "smirnov/symfunc.hpp"
#include "smirnov/tree.hpp"
#include "smirnov/weight_poly.hpp"

namespace smirnov {

struct RedNode;

/// Black node: positive label, red children hanging on black edges.
struct BlackNode {
    int label = 0;
    std::vector<std::shared_ptr<const RedNode>> children;
};

/// Red node: unlabeled; the first child is the designated red-edge child,
/// the rest hang on black edges. Children stored in canonical-form order.
struct RedNode {
    std::shared_ptr<const BlackNode> red_child;
    std::vector<std::shared_ptr<const BlackNode>> black_children;
};

/// Unordered red/black alternating tree, rooted at a red node.
using BleedingTree = std::shared_ptr<const RedNode>;

/// Canonical serialization; equality of canonical forms is isomorphism of
/// unordered bleeding trees.
std::string bleeding_canonical(const BleedingTree& u);

/// Weight of a black node with label r and k children on a black parent
/// edge: the double binomial sum over (i, j).
WeightPoly p_weight(int r, int k);
/// Same on a red parent edge.
WeightPoly pbar_weight(int r, int k);

/// Every structurally distinct bleeding tree whose black labels are exactly
/// the parts of pi, deduplicated by canonical form.
std::vector<BleedingTree> enumerate_bleeding(const Partition& pi);

/// Number of plane drawings with red-edge children leftmost: product over
/// nodes of k!/prod(mult!) over isomorphism classes of non-red-edge children.
mpz_class drawing_multiplicity(const BleedingTree& u);

/// drawing_multiplicity * product of black-node p/pbar weights.
WeightPoly bleeding_weight(const BleedingTree& u);

/// [e_pi] G as the weighted bleeding-tree sum.
WeightPoly e_coefficient(const Partition& pi);

/// Degree-graded monomial map of G: for each n <= max_degree, the weight sum
/// over Smirnov trees with n nodes and labels in [label_bound].
std::map<XMonomial, WeightPoly> g_monomials(int max_degree, int label_bound);

/// The degree-<=N truncation of G in the E basis, by direct enumeration
/// (n labels for the degree-n slice).
SymFunc g_truncated(int max_degree);

/// Truncated right-hand side of the tree functional equation, computed
/// degree by degree over words in [label_bound].
std::map<XMonomial, WeightPoly> g_from_words(int max_degree, int label_bound);

}  // namespace smirnov
