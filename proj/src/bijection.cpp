#include "smirnov/bijection.hpp"

#include <stdexcept>

#include <json.hpp>

namespace smirnov {

Step Step::of_tree(Tree t) {
    if (!t) throw std::invalid_argument("step tree is empty");
    if (!is_smirnov_tree(t)) throw std::invalid_argument("step tree is not Smirnov");
    return {Kind::TreeStep, std::move(t)};
}

bool step_equal(const Step& a, const Step& b) {
    if (a.kind != b.kind) return false;
    return a.kind != Step::Kind::TreeStep || tree_equal(a.tree, b.tree);
}

nlohmann::json step_to_json(const Step& s) {
    switch (s.kind) {
        case Step::Kind::D: return "D";
        case Step::Kind::U: return "U";
        default: return tree_to_json(s.tree);
    }
}

Step step_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        auto v = j.get<std::string>();
        if (v == "D") return Step::down();
        if (v == "U") return Step::up();
        throw std::invalid_argument("step json: expected \"D\", \"U\" or a tree");
    }
    return Step::of_tree(tree_from_json(j));
}

nlohmann::json triple_to_json(const Triple& t) {
    return {{"T", tree_to_json(t.t)}, {"S", step_to_json(t.s)}, {"b", t.b}};
}

Triple triple_from_json(const nlohmann::json& j) {
    return Triple{tree_from_json(j.at("T")), step_from_json(j.at("S")), j.at("b").get<int>()};
}

std::string to_string(CaseId c) {
    switch (c) {
        case CaseId::C1a: return "1a";
        case CaseId::C1b: return "1b";
        case CaseId::C1c: return "1c";
        case CaseId::C2a: return "2a";
        case CaseId::C2b: return "2b";
        case CaseId::C2c: return "2c";
        case CaseId::C2d: return "2d";
        case CaseId::C3a: return "3a";
        case CaseId::C3b: return "3b";
        case CaseId::C3c: return "3c";
        case CaseId::C3d: return "3d";
        case CaseId::C4a: return "4a";
        case CaseId::C4b: return "4b";
        case CaseId::C5a: return "5a";
        case CaseId::C5b: return "5b";
    }
    return "?";
}

std::pair<WeightPoly, XMonomial> f_weight(int a, int b, const Step& y) {
    if (a == b) throw std::invalid_argument("f_weight: a and b must differ");
    Expo4 e{0, 0, 0, 0};
    XMonomial x;
    if (y.is_tree()) {
        TreeWeight w = tree_weight(y.tree);
        if (a < b) { e[0] = e[2] = 1; } else { e[1] = e[3] = 1; }
        return {WeightPoly::monomial(e) * w.edge, w.xpart};
    }
    bool down = y.kind == Step::Kind::D;
    if (a < b) e[down ? 0 : 2] = 1;   // ra for D, la for U
    else       e[down ? 1 : 3] = 1;   // rd for D, ld for U
    return {WeightPoly::monomial(e), x};
}

namespace {

void check_triple(const Triple& t) {
    if (!t.t) throw std::invalid_argument("triple: empty tree");
    if (t.b < 1) throw std::invalid_argument("triple: b must be >= 1");
    if (!is_smirnov_tree(t.t)) throw std::invalid_argument("triple: T is not Smirnov");
    if (t.s.is_tree() && !is_smirnov_tree(t.s.tree))
        throw std::invalid_argument("triple: step tree is not Smirnov");
}

}  // namespace

TreeWeight triple_weight(const Triple& t) {
    check_triple(t);
    int a = principal_data(t.t).principal_label;
    if (a == t.b) throw std::invalid_argument("triple: b equals the principal label");
    TreeWeight w = tree_weight(t.t);
    auto [fe, fx] = f_weight(a, t.b, t.s);
    w.edge *= fe;
    w.xpart = xmon_mul(w.xpart, fx);
    w.xpart[t.b]++;
    return w;
}

CaseId classify(const Triple& t) {
    check_triple(t);
    PrincipalData pd = principal_data(t.t);
    int a = pd.principal_label, M = pd.max_label, m = pd.min_label, b = t.b;
    if (a == b) throw std::invalid_argument("triple: b equals the principal label");

    // d = label of the last principal-path node crossing the b threshold
    std::optional<int> d;
    for (const Tree& n : pd.path)
        if (a < b ? n->label >= b : n->label <= b) d = n->label;

    switch (t.s.kind) {
        case Step::Kind::D:
            return CaseId::C1a;
        case Step::Kind::U:
            if (a < b) {
                if (M < b) return CaseId::C2a;
                return *d > b ? CaseId::C3a : CaseId::C4a;
            }
            if (m > b) return CaseId::C2b;
            return *d < b ? CaseId::C3b : CaseId::C5a;
        default: {
            int c = t.s.tree->label;
            if (a < b && c < b) return CaseId::C1b;
            if (a > b && c > b) return CaseId::C1c;
            if (a < b) {  // b <= c
                if (M < b) return CaseId::C2c;
                return *d > b ? CaseId::C3c : CaseId::C4b;
            }
            // a > b >= c
            if (m > b) return CaseId::C2d;
            return *d < b ? CaseId::C3d : CaseId::C5b;
        }
    }
}

namespace {

// Mutable scratch representation for the insertion surgeries.
struct MTree {
    struct MNode {
        int label;
        int left = -1;
        int right = -1;
    };
    std::vector<MNode> nodes;
    int root = -1;

    int add(int label) {
        nodes.push_back({label, -1, -1});
        return static_cast<int>(nodes.size()) - 1;
    }
    int add_subtree(const Tree& t) {
        if (!t) return -1;
        int l = add_subtree(t->left);
        int r = add_subtree(t->right);
        int i = add(t->label);
        nodes[i].left = l;
        nodes[i].right = r;
        return i;
    }
    Tree to_tree(int i) const {
        if (i < 0) return nullptr;
        return node(nodes[i].label, to_tree(nodes[i].left), to_tree(nodes[i].right));
    }
    Tree to_tree() const { return to_tree(root); }

    // Principal path from node i (assumed Smirnov below i).
    std::vector<int> ppath(int i) const {
        std::vector<int> path;
        while (i >= 0) {
            path.push_back(i);
            const MNode& n = nodes[i];
            if (n.right < 0) break;
            i = (n.left >= 0 && nodes[n.left].label == n.label) ? n.left : n.right;
        }
        return path;
    }

    int parent_of(int target) const {
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            if (nodes[i].left == target || nodes[i].right == target) return i;
        return -1;
    }
};

}  // namespace

Tree phi(const Triple& t) {
    CaseId cs = classify(t);

    MTree mt;
    mt.root = mt.add_subtree(t.t);
    std::vector<int> path = mt.ppath(mt.root);
    int alpha = path.back();
    int b = t.b;

    // delta: last path node crossing the b threshold
    int a = mt.nodes[alpha].label;
    int delta = -1;
    for (int i : path)
        if (a < b ? mt.nodes[i].label >= b : mt.nodes[i].label <= b) delta = i;

    // In every case except 1b/1c, a tree step is grafted as the right
    // subtree of the old principal node before the structural surgery.
    bool graft_at_alpha = t.s.is_tree() &&
                          cs != CaseId::C1b && cs != CaseId::C1c;
    if (graft_at_alpha) mt.nodes[alpha].right = mt.add_subtree(t.s.tree);

    switch (cs) {
        case CaseId::C1a:
        case CaseId::C1b:
        case CaseId::C1c: {
            int beta = mt.add(b);
            if (t.s.is_tree()) mt.nodes[beta].left = mt.add_subtree(t.s.tree);
            mt.nodes[alpha].right = beta;
            break;
        }
        case CaseId::C2a:
        case CaseId::C2b:
        case CaseId::C2c:
        case CaseId::C2d: {
            int beta = mt.add(b);
            mt.nodes[beta].left = mt.root;
            mt.root = beta;
            break;
        }
        case CaseId::C3a:
        case CaseId::C3b:
        case CaseId::C3c:
        case CaseId::C3d: {
            int beta = mt.add(b);
            mt.nodes[beta].left = mt.nodes[delta].right;
            mt.nodes[delta].right = beta;
            break;
        }
        case CaseId::C4a:
        case CaseId::C4b: {
            int beta = mt.add(b);
            mt.nodes[beta].left = mt.nodes[delta].left;
            mt.nodes[delta].left = beta;
            break;
        }
        case CaseId::C5a:
        case CaseId::C5b: {
            int beta = mt.add(b);
            mt.nodes[beta].left = mt.nodes[delta].left;
            mt.nodes[delta].left = mt.nodes[delta].right;
            mt.nodes[delta].right = beta;
            break;
        }
    }
    return mt.to_tree();
}

namespace {

// First node on the principal path from i whose label crosses b
// (>= b when above is true, <= b otherwise), or -1.
int first_crossing(const MTree& mt, int i, int b, bool above) {
    for (int n : mt.ppath(i))
        if (above ? mt.nodes[n].label >= b : mt.nodes[n].label <= b) return n;
    return -1;
}

}  // namespace

std::pair<Triple, CaseId> phi_inverse_with_case(const Tree& tp) {
    if (!tp) throw std::invalid_argument("phi_inverse: empty tree");
    if (node_count(tp) < 2) throw std::invalid_argument("phi_inverse: tree has a single node");
    if (!is_smirnov_tree(tp)) throw std::invalid_argument("phi_inverse: tree is not Smirnov");

    MTree mt;
    mt.root = mt.add_subtree(tp);
    std::vector<int> path = mt.ppath(mt.root);
    int beta = path.back();
    int b = mt.nodes[beta].label;

    // Detaches the subtree at gamma from its parent and returns it as a step.
    auto detach = [&](int gamma) {
        int par = mt.parent_of(gamma);
        if (mt.nodes[par].left == gamma) mt.nodes[par].left = -1;
        else mt.nodes[par].right = -1;
        return Step::of_tree(mt.to_tree(gamma));
    };

    if (beta == mt.root) {
        // 2-family: undo the new root.
        int sub = mt.nodes[beta].left;
        bool below = mt.nodes[sub].label < b;  // left child strictly differs from b
        int gamma = first_crossing(mt, sub, b, below);
        CaseId cs;
        Step s = Step::up();
        if (gamma < 0) {
            cs = below ? CaseId::C2a : CaseId::C2b;
        } else {
            cs = below ? CaseId::C2c : CaseId::C2d;
            s = detach(gamma);
        }
        return {Triple{mt.to_tree(sub), s, b}, cs};
    }

    int par = mt.parent_of(beta);
    int p = mt.nodes[par].label;

    if (mt.nodes[par].left == beta) {
        // 4-family: beta is a left child, parent label is also b.
        int rsub = mt.nodes[par].right;
        int gamma = first_crossing(mt, rsub, b, true);
        CaseId cs = gamma < 0 ? CaseId::C4a : CaseId::C4b;
        Step s = gamma < 0 ? Step::up() : detach(gamma);
        mt.nodes[par].left = mt.nodes[beta].left;  // splice beta out
        return {Triple{mt.to_tree(), s, b}, cs};
    }

    if (p == b) {
        // 5-family: beta is a right child of an equal-labeled parent.
        int lsub = mt.nodes[par].left;
        int gamma = first_crossing(mt, lsub, b, false);
        CaseId cs = gamma < 0 ? CaseId::C5a : CaseId::C5b;
        Step s = gamma < 0 ? Step::up() : detach(gamma);
        mt.nodes[par].right = mt.nodes[par].left;
        mt.nodes[par].left = mt.nodes[beta].left;
        return {Triple{mt.to_tree(), s, b}, cs};
    }

    if (mt.nodes[beta].left < 0) {
        // 1a: childless beta under a differently-labeled parent.
        mt.nodes[par].right = -1;
        return {Triple{mt.to_tree(), Step::down(), b}, CaseId::C1a};
    }

    int lchild = mt.nodes[beta].left;
    int l = mt.nodes[lchild].label;
    if ((p < b) == (l < b)) {
        // 1b/1c: parent and left child on the same side of b.
        Step s = Step::of_tree(mt.to_tree(lchild));
        mt.nodes[par].right = -1;
        return {Triple{mt.to_tree(), s, b}, p < b ? CaseId::C1b : CaseId::C1c};
    }

    // 3-family: parent and left child on opposite sides.
    bool parent_above = p > b;  // then gamma threshold is >= b
    int gamma = first_crossing(mt, lchild, b, parent_above);
    CaseId cs;
    Step s = Step::up();
    if (gamma < 0) {
        cs = parent_above ? CaseId::C3a : CaseId::C3b;
    } else {
        cs = parent_above ? CaseId::C3c : CaseId::C3d;
        s = detach(gamma);
    }
    mt.nodes[par].right = mt.nodes[beta].left;
    return {Triple{mt.to_tree(), s, b}, cs};
}

Triple phi_inverse(const Tree& tp) { return phi_inverse_with_case(tp).first; }

nlohmann::json wordsteps_to_json(const WordSteps& ws) {
    nlohmann::json steps = nlohmann::json::array();
    for (const Step& s : ws.steps) steps.push_back(step_to_json(s));
    return {{"w", ws.w}, {"steps", steps}};
}

WordSteps wordsteps_from_json(const nlohmann::json& j) {
    WordSteps ws;
    ws.w = j.at("w").get<std::vector<int>>();
    for (const auto& s : j.at("steps")) ws.steps.push_back(step_from_json(s));
    return ws;
}

namespace {

void check_wordsteps(const WordSteps& ws) {
    if (!is_smirnov_word(ws.w)) throw std::invalid_argument("wordsteps: word is not Smirnov");
    if (ws.steps.size() + 1 != ws.w.size())
        throw std::invalid_argument("wordsteps: need |w| - 1 steps");
}

}  // namespace

int wordsteps_size(const WordSteps& ws) {
    int n = static_cast<int>(ws.w.size());
    for (const Step& s : ws.steps)
        if (s.is_tree()) n += node_count(s.tree);
    return n;
}

TreeWeight wordsteps_weight(const WordSteps& ws) {
    check_wordsteps(ws);
    TreeWeight w;
    w.edge = WeightPoly(1);
    for (int letter : ws.w) w.xpart[letter]++;
    for (size_t i = 0; i < ws.steps.size(); ++i) {
        auto [fe, fx] = f_weight(ws.w[i], ws.w[i + 1], ws.steps[i]);
        w.edge *= fe;
        w.xpart = xmon_mul(w.xpart, fx);
    }
    return w;
}

Tree psi(const WordSteps& ws) {
    check_wordsteps(ws);
    Tree t = node(ws.w[0]);
    for (size_t i = 0; i < ws.steps.size(); ++i)
        t = phi(Triple{t, ws.steps[i], ws.w[i + 1]});
    return t;
}

WordSteps psi_inverse(const Tree& t) {
    if (!t) throw std::invalid_argument("psi_inverse: empty tree");
    if (!is_smirnov_tree(t)) throw std::invalid_argument("psi_inverse: tree is not Smirnov");
    WordSteps ws;
    Tree cur = t;
    while (node_count(cur) >= 2) {
        Triple tr = phi_inverse(cur);
        ws.w.push_back(tr.b);
        ws.steps.push_back(tr.s);
        cur = tr.t;
    }
    ws.w.push_back(cur->label);
    std::reverse(ws.w.begin(), ws.w.end());
    std::reverse(ws.steps.begin(), ws.steps.end());
    return ws;
}

}  // namespace smirnov
