#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smirnov/tree.hpp"

namespace smirnov {

/// Second component of a triple: down step, up step, or a Smirnov tree.
struct Step {
    enum class Kind { D, U, TreeStep } kind;
    Tree tree;  // set iff kind == TreeStep

    static Step down() { return {Kind::D, nullptr}; }
    static Step up() { return {Kind::U, nullptr}; }
    static Step of_tree(Tree t);

    bool is_tree() const { return kind == Kind::TreeStep; }
};

bool step_equal(const Step& a, const Step& b);
nlohmann::json step_to_json(const Step& s);
Step step_from_json(const nlohmann::json& j);

struct Triple {
    Tree t;   // Smirnov
    Step s;
    int b;    // b != a(t)
};

nlohmann::json triple_to_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);

/// The fifteen insertion cases.
enum class CaseId {
    C1a, C1b, C1c,
    C2a, C2b, C2c, C2d,
    C3a, C3b, C3c, C3d,
    C4a, C4b,
    C5a, C5b,
};
std::string to_string(CaseId c);

/// Edge/x weight contributed by one insertion step: for a < b it is
/// ra*la*weight(Y) / ra / la for tree / D / U, for a > b rd*ld*weight(Y) /
/// rd / ld. Throws on a == b.
std::pair<WeightPoly, XMonomial> f_weight(int a, int b, const Step& y);

/// x_b * weight(T) * f(a(T), b, S).
TreeWeight triple_weight(const Triple& t);

/// The unique applicable insertion case. Throws if the triple is invalid
/// (non-Smirnov T, b == a(T), non-positive b).
CaseId classify(const Triple& t);

/// One insertion step: a Smirnov tree with >= 2 nodes, principal label b,
/// and weight equal to triple_weight(t).
Tree phi(const Triple& t);

/// Unique preimage; throws on single-node or non-Smirnov input.
Triple phi_inverse(const Tree& t);
/// Same, also reporting which case produced the tree.
std::pair<Triple, CaseId> phi_inverse_with_case(const Tree& t);

struct WordSteps {
    Word w;                   // Smirnov, length n
    std::vector<Step> steps;  // length n - 1
};

nlohmann::json wordsteps_to_json(const WordSteps& ws);
WordSteps wordsteps_from_json(const nlohmann::json& j);

/// Total node count: |w| plus the nodes of all embedded step trees.
int wordsteps_size(const WordSteps& ws);

/// x_w * prod f(w_i, w_{i+1}, S_i).
TreeWeight wordsteps_weight(const WordSteps& ws);

/// Iterated insertion; the result has principal label w_n.
Tree psi(const WordSteps& ws);

/// Peels with phi_inverse down to a single node.
WordSteps psi_inverse(const Tree& t);

}  // namespace smirnov
