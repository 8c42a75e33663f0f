#include "smirnov/tree.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace smirnov {

XMonomial xmon_mul(const XMonomial& a, const XMonomial& b) {
    XMonomial r = a;
    for (auto [l, m] : b) r[l] += m;
    return r;
}

int xmon_degree(const XMonomial& m) {
    int d = 0;
    for (auto [l, mult] : m) d += mult;
    return d;
}

std::string to_string(const XMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto [l, mult] : m) {
        if (!first) out << "*";
        out << "x" << l;
        if (mult > 1) out << "^" << mult;
        first = false;
    }
    return out.str();
}

Tree node(int label, Tree left, Tree right) {
    if (label < 1) throw std::invalid_argument("tree labels must be >= 1");
    return std::make_shared<const TreeNode>(TreeNode{label, std::move(left), std::move(right)});
}

int node_count(const Tree& t) {
    if (!t) return 0;
    return 1 + node_count(t->left) + node_count(t->right);
}

bool tree_equal(const Tree& a, const Tree& b) {
    if (!a || !b) return !a && !b;
    return a->label == b->label && tree_equal(a->left, b->left) && tree_equal(a->right, b->right);
}

std::string tree_to_text(const Tree& t) {
    if (!t) return "_";
    return std::to_string(t->label) + "(" + tree_to_text(t->left) + "," + tree_to_text(t->right) + ")";
}

namespace {

Tree parse_tree(const std::string& s, size_t& pos) {
    if (pos < s.size() && s[pos] == '_') {
        ++pos;
        return nullptr;
    }
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("tree text: expected label at position " + std::to_string(pos));
    int label = std::stoi(s.substr(start, pos - start));
    Tree left, right;
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        left = parse_tree(s, pos);
        if (pos >= s.size() || s[pos] != ',') throw std::invalid_argument("tree text: expected ','");
        ++pos;
        right = parse_tree(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("tree text: expected ')'");
        ++pos;
    }
    return node(label, left, right);
}

}  // namespace

Tree tree_from_text(const std::string& s) {
    size_t pos = 0;
    Tree t = parse_tree(s, pos);
    if (pos != s.size()) throw std::invalid_argument("tree text: trailing characters");
    if (!t) throw std::invalid_argument("tree text: empty tree is not a value");
    return t;
}

nlohmann::json tree_to_json(const Tree& t) {
    if (!t) return nullptr;
    return {{"label", t->label}, {"left", tree_to_json(t->left)}, {"right", tree_to_json(t->right)}};
}

Tree tree_from_json(const nlohmann::json& j) {
    if (j.is_null()) return nullptr;
    return node(j.at("label").get<int>(),
                tree_from_json(j.value("left", nlohmann::json())),
                tree_from_json(j.value("right", nlohmann::json())));
}

bool is_smirnov_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("words are nonempty");
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

WordStats word_stats(const Word& w) {
    if (w.empty()) throw std::invalid_argument("words are nonempty");
    WordStats st;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        (w[i] > w[i + 1] ? st.des : st.asc)++;
    return st;
}

bool is_smirnov_tree(const Tree& t) {
    if (!t) return true;
    if (t->left && t->left->label == t->label &&
        !(t->right && t->right->label < t->label))
        return false;
    if (t->right && t->right->label == t->label &&
        !(t->left && t->left->label > t->label))
        return false;
    return is_smirnov_tree(t->left) && is_smirnov_tree(t->right);
}

namespace {

void accumulate_weight(const Tree& t, TreeWeight& w) {
    w.xpart[t->label]++;
    if (t->right) {
        // parent -> right child: weak ascent ra, strict descent rd
        Expo4 e{0, 0, 0, 0};
        e[t->label <= t->right->label ? 0 : 1] = 1;
        w.edge *= WeightPoly::monomial(e);
        accumulate_weight(t->right, w);
    }
    if (t->left) {
        // left child -> parent, read left to right: weak ascent la, descent ld
        Expo4 e{0, 0, 0, 0};
        e[t->left->label <= t->label ? 2 : 3] = 1;
        w.edge *= WeightPoly::monomial(e);
        accumulate_weight(t->left, w);
    }
}

}  // namespace

TreeWeight tree_weight(const Tree& t) {
    if (!t) throw std::invalid_argument("tree_weight: empty tree");
    TreeWeight w;
    w.edge = WeightPoly(1);
    accumulate_weight(t, w);
    return w;
}

TreeStats tree_stats(const Tree& t) {
    TreeWeight w = tree_weight(t);
    Expo4 e = w.edge.terms().begin()->first;
    return TreeStats{e[0], e[1], e[2], e[3]};
}

PrincipalData principal_data(const Tree& t) {
    if (!t) throw std::invalid_argument("principal_data: empty tree");
    if (!is_smirnov_tree(t)) throw std::invalid_argument("principal_data: tree is not Smirnov");
    PrincipalData pd;
    Tree cur = t;
    pd.max_label = 0;
    pd.min_label = cur->label;
    while (true) {
        pd.path.push_back(cur);
        pd.max_label = std::max(pd.max_label, cur->label);
        pd.min_label = std::min(pd.min_label, cur->label);
        if (!cur->right) break;
        if (cur->left && cur->left->label == cur->label)
            cur = cur->left;
        else
            cur = cur->right;
    }
    pd.principal_label = cur->label;
    return pd;
}

void enumerate_smirnov_words(int n, int k, const std::function<bool(const Word&)>& visit) {
    if (n < 1 || k < 1) throw std::invalid_argument("enumerate_smirnov_words: n, k >= 1");
    Word w(n);
    bool stop = false;
    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == n) {
            if (!visit(w)) stop = true;
            return;
        }
        for (int c = 1; c <= k && !stop; ++c) {
            if (i > 0 && w[i - 1] == c) continue;
            w[i] = c;
            rec(i + 1);
        }
    };
    rec(0);
}

std::vector<Word> smirnov_words(int n, int k) {
    std::vector<Word> out;
    enumerate_smirnov_words(n, k, [&](const Word& w) { out.push_back(w); return true; });
    return out;
}

namespace {

// Unlabeled shapes with n nodes, ordered by left-subtree size, recursively.
// Shapes are memoized as trees with label 1 throughout.
const std::vector<Tree>& shapes(int n) {
    static std::vector<std::vector<Tree>> cache{{nullptr}};  // cache[0] = {empty}
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        std::vector<Tree> out;
        for (int l = 0; l <= m - 1; ++l)
            for (const Tree& ls : cache[l])
                for (const Tree& rs : cache[m - 1 - l])
                    out.push_back(std::make_shared<const TreeNode>(TreeNode{1, ls, rs}));
        cache.push_back(std::move(out));
    }
    return cache[n];
}

Tree relabel(const Tree& shape, const std::vector<int>& labels, int& pos) {
    if (!shape) return nullptr;
    int label = labels[pos++];
    Tree l = relabel(shape->left, labels, pos);
    Tree r = relabel(shape->right, labels, pos);
    return node(label, l, r);
}

// Equivalent formulation of the Smirnov condition, kept separate from
// is_smirnov_tree so the enumerator and the filter oracle are independent
// code paths: wherever a parent shares a label with a child, both children
// exist and the left label exceeds the right label.
bool smirnov_by_sibling_rule(const Tree& t) {
    if (!t) return true;
    bool shares = (t->left && t->left->label == t->label) ||
                  (t->right && t->right->label == t->label);
    if (shares && !(t->left && t->right && t->left->label > t->right->label))
        return false;
    return smirnov_by_sibling_rule(t->left) && smirnov_by_sibling_rule(t->right);
}

void enumerate_with_filter(int n, int k, bool smirnov_only,
                           const std::function<bool(const Tree&)>& visit) {
    if (n < 1 || k < 1) throw std::invalid_argument("tree enumeration: n, k >= 1");
    std::vector<int> labels(n, 1);
    for (const Tree& shape : shapes(n)) {
        std::fill(labels.begin(), labels.end(), 1);
        while (true) {
            int pos = 0;
            Tree t = relabel(shape, labels, pos);
            if (!smirnov_only || smirnov_by_sibling_rule(t))
                if (!visit(t)) return;
            // next label vector, lexicographic in preorder
            int i = n - 1;
            while (i >= 0 && labels[i] == k) labels[i--] = 1;
            if (i < 0) break;
            ++labels[i];
        }
    }
}

}  // namespace

void enumerate_smirnov_trees(int n, int k, const std::function<bool(const Tree&)>& visit) {
    enumerate_with_filter(n, k, true, visit);
}

std::vector<Tree> smirnov_trees(int n, int k) {
    std::vector<Tree> out;
    enumerate_smirnov_trees(n, k, [&](const Tree& t) { out.push_back(t); return true; });
    return out;
}

void enumerate_labeled_trees(int n, int k, const std::function<bool(const Tree&)>& visit) {
    enumerate_with_filter(n, k, false, visit);
}

const std::vector<Tree>& tree_shapes(int n) { return shapes(n); }

Tree relabel_preorder(const Tree& shape, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != node_count(shape))
        throw std::invalid_argument("relabel_preorder: label count");
    int pos = 0;
    return relabel(shape, labels, pos);
}

}  // namespace smirnov
