#include "smirnov/bleeding.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "smirnov/xpoly.hpp"

namespace smirnov {

namespace {

// The four composite quantities every node weight is built from.
const WeightPoly& RALA() { static WeightPoly v = WeightPoly::ra() * WeightPoly::la(); return v; }
const WeightPoly& RApLA() { static WeightPoly v = WeightPoly::ra() + WeightPoly::la(); return v; }
const WeightPoly& RDLD() { static WeightPoly v = WeightPoly::rd() * WeightPoly::ld(); return v; }
const WeightPoly& RDpLD() { static WeightPoly v = WeightPoly::rd() + WeightPoly::ld(); return v; }

WeightPoly node_weight_sum(int r, int k, int ilo, int offset) {
    // offset = 0 for a black parent edge, 1 for a red one; the second
    // binomial and the descent-pair exponent both lose `offset`.
    WeightPoly total;
    for (int i = ilo; i <= r - 1; ++i) {
        for (int j = 0; j <= i; ++j) {
            int drop = r - offset - k - j;  // exponent of (rd + ld)
            int dd = k - i + j;             // exponent of rd*ld
            if (drop < 0 || dd < 0) continue;
            mpz_class c = binomial(i, j) * binomial(r - offset - i, drop);
            if (c == 0) continue;
            total += c * RALA().pow(i - j) * RApLA().pow(j) * RDLD().pow(dd) * RDpLD().pow(drop);
        }
    }
    return total;
}

}  // namespace

WeightPoly p_weight(int r, int k) { return node_weight_sum(r, k, 1, 0); }
WeightPoly pbar_weight(int r, int k) { return node_weight_sum(r, k, 0, 1); }

namespace {

using Black = std::shared_ptr<const BlackNode>;

std::string canon_black(const Black& b);

std::string canon_red(const std::shared_ptr<const RedNode>& r) {
    std::vector<std::string> rest;
    for (const auto& c : r->black_children) rest.push_back(canon_black(c));
    std::sort(rest.begin(), rest.end());
    std::string s = "(" + canon_black(r->red_child);
    for (const auto& x : rest) s += "|" + x;
    return s + ")";
}

std::string canon_black(const Black& b) {
    std::vector<std::string> kids;
    for (const auto& c : b->children) kids.push_back(canon_red(c));
    std::sort(kids.begin(), kids.end());
    std::string s = std::to_string(b->label) + "[";
    for (size_t i = 0; i < kids.size(); ++i) s += (i ? "," : "") + kids[i];
    return s + "]";
}

// All set partitions of {0..n-1}, as block lists of index vectors.
void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) { visit(blocks); return; }
        // index-based: recursion grows and shrinks the vector, so references
        // into it do not survive the recursive call
        for (size_t bi = 0, nb = blocks.size(); bi < nb; ++bi) {
            blocks[bi].push_back(i);
            rec(i + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

std::vector<std::shared_ptr<const RedNode>> red_subtrees(const std::vector<int>& labels);

// Black-rooted subtrees over the label multiset; the parent edge color
// bounds the child count (< r on a red edge, <= r with r >= 2 on black).
std::vector<Black> black_subtrees(const std::vector<int>& labels, bool red_parent_edge) {
    std::vector<Black> out;
    std::set<int> distinct(labels.begin(), labels.end());
    for (int r : distinct) {
        if (!red_parent_edge && r == 1) continue;
        std::vector<int> rest = labels;
        rest.erase(std::find(rest.begin(), rest.end(), r));
        int max_children = red_parent_edge ? r - 1 : r;
        if (rest.empty()) {
            if (max_children >= 0) out.push_back(std::make_shared<BlackNode>(BlackNode{r, {}}));
            continue;
        }
        set_partitions(static_cast<int>(rest.size()), [&](const std::vector<std::vector<int>>& blocks) {
            if (static_cast<int>(blocks.size()) > max_children) return;
            std::vector<std::vector<std::shared_ptr<const RedNode>>> options;
            for (const auto& blk : blocks) {
                std::vector<int> sub;
                for (int i : blk) sub.push_back(rest[i]);
                options.push_back(red_subtrees(sub));
                if (options.back().empty()) return;
            }
            std::vector<std::shared_ptr<const RedNode>> pick(options.size());
            std::function<void(size_t)> assemble = [&](size_t d) {
                if (d == options.size()) {
                    out.push_back(std::make_shared<BlackNode>(BlackNode{r, pick}));
                    return;
                }
                for (const auto& c : options[d]) { pick[d] = c; assemble(d + 1); }
            };
            assemble(0);
        });
    }
    return out;
}

std::vector<std::shared_ptr<const RedNode>> red_subtrees(const std::vector<int>& labels) {
    std::vector<std::shared_ptr<const RedNode>> out;
    set_partitions(static_cast<int>(labels.size()), [&](const std::vector<std::vector<int>>& blocks) {
        for (size_t red_idx = 0; red_idx < blocks.size(); ++red_idx) {
            std::vector<int> red_block;
            for (int i : blocks[red_idx]) red_block.push_back(labels[i]);
            auto red_opts = black_subtrees(red_block, true);
            if (red_opts.empty()) continue;
            std::vector<std::vector<Black>> options;
            bool dead = false;
            for (size_t b = 0; b < blocks.size(); ++b) {
                if (b == red_idx) continue;
                std::vector<int> sub;
                for (int i : blocks[b]) sub.push_back(labels[i]);
                options.push_back(black_subtrees(sub, false));
                if (options.back().empty()) { dead = true; break; }
            }
            if (dead) continue;
            std::vector<Black> pick(options.size());
            std::function<void(size_t)> assemble = [&](size_t d) {
                if (d == options.size()) {
                    for (const auto& rc : red_opts)
                        out.push_back(std::make_shared<RedNode>(RedNode{rc, pick}));
                    return;
                }
                for (const auto& c : options[d]) { pick[d] = c; assemble(d + 1); }
            };
            assemble(0);
        }
    });
    return out;
}

mpz_class arrangement_count(const std::vector<std::string>& canon_forms) {
    std::map<std::string, int> mult;
    for (const auto& s : canon_forms) ++mult[s];
    mpz_class r = factorial(static_cast<int>(canon_forms.size()));
    for (const auto& [s, m] : mult) r /= factorial(m);
    return r;
}

mpz_class multiplicity_black(const Black& b);

mpz_class multiplicity_red(const std::shared_ptr<const RedNode>& r) {
    std::vector<std::string> forms;
    mpz_class m = multiplicity_black(r->red_child);
    for (const auto& c : r->black_children) {
        forms.push_back(canon_black(c));
        m *= multiplicity_black(c);
    }
    return m * arrangement_count(forms);
}

mpz_class multiplicity_black(const Black& b) {
    std::vector<std::string> forms;
    mpz_class m = 1;
    for (const auto& c : b->children) {
        forms.push_back(canon_red(c));
        m *= multiplicity_red(c);
    }
    return m * arrangement_count(forms);
}

WeightPoly weight_black(const Black& b, bool red_parent_edge) {
    WeightPoly w = red_parent_edge ? pbar_weight(b->label, static_cast<int>(b->children.size()))
                                   : p_weight(b->label, static_cast<int>(b->children.size()));
    for (const auto& c : b->children) {
        w *= weight_black(c->red_child, true);
        for (const auto& g : c->black_children) w *= weight_black(g, false);
    }
    return w;
}

}  // namespace

std::string bleeding_canonical(const BleedingTree& u) { return canon_red(u); }

std::vector<BleedingTree> enumerate_bleeding(const Partition& pi) {
    if (pi.parts().empty()) throw std::invalid_argument("enumerate_bleeding: empty partition");
    std::map<std::string, BleedingTree> by_form;
    for (const auto& u : red_subtrees(pi.parts())) by_form.try_emplace(canon_red(u), u);
    std::vector<BleedingTree> out;
    for (auto& [form, u] : by_form) out.push_back(std::move(u));
    return out;
}

mpz_class drawing_multiplicity(const BleedingTree& u) { return multiplicity_red(u); }

WeightPoly bleeding_weight(const BleedingTree& u) {
    WeightPoly w(1);
    w *= weight_black(u->red_child, true);
    for (const auto& c : u->black_children) w *= weight_black(c, false);
    return drawing_multiplicity(u) * w;
}

WeightPoly e_coefficient(const Partition& pi) {
    WeightPoly total;
    for (const auto& u : enumerate_bleeding(pi)) total += bleeding_weight(u);
    return total;
}

std::map<XMonomial, WeightPoly> g_monomials(int max_degree, int label_bound) {
    std::map<XMonomial, WeightPoly> out;
    for (int n = 1; n <= max_degree; ++n)
        enumerate_smirnov_trees(n, label_bound, [&](const Tree& t) {
            TreeWeight w = tree_weight(t);
            auto [it, fresh] = out.try_emplace(w.xpart, w.edge);
            if (!fresh) it->second += w.edge;
            return true;
        });
    return out;
}

SymFunc g_truncated(int max_degree) {
    SymFunc out(Basis::E, max_degree);
    for (int n = 1; n <= max_degree; ++n) {
        std::map<XMonomial, WeightPoly> data;
        enumerate_smirnov_trees(n, n, [&](const Tree& t) {
            TreeWeight w = tree_weight(t);
            auto [it, fresh] = data.try_emplace(w.xpart, w.edge);
            if (!fresh) it->second += w.edge;
            return true;
        });
        out += basis_convert(from_monomial_data(n, data), Basis::E);
    }
    return out;
}

std::map<XMonomial, WeightPoly> g_from_words(int max_degree, int label_bound) {
    using GP = XPoly<WeightPoly>;
    const int k = label_bound, N = max_degree;
    GP g(k, N);
    WeightPoly mul_s = WeightPoly::ra() * WeightPoly::la();
    WeightPoly mul_t = WeightPoly::rd() * WeightPoly::ld();
    for (int d = 1; d <= N; ++d) {
        GP sfac = g, tfac = g;
        sfac *= mul_s;
        tfac *= mul_t;
        sfac += GP::constant(k, N, WeightPoly::ra() + WeightPoly::la());
        tfac += GP::constant(k, N, WeightPoly::rd() + WeightPoly::ld());
        std::vector<GP> spow{GP::constant(k, N, WeightPoly(1))}, tpow = spow;
        for (int j = 1; j < d; ++j) {
            spow.push_back(spow.back() * sfac);
            tpow.push_back(tpow.back() * tfac);
        }
        GP rhs(k, N);
        for (int n = 1; n <= d; ++n)
            enumerate_smirnov_words(n, k, [&](const Word& w) {
                WordStats st = word_stats(w);
                GP term = spow[st.asc] * tpow[st.des];
                GP xw(k, N);
                XMonomial m;
                for (int c : w) ++m[c];
                xw.add_xmonomial(m, WeightPoly(1));
                rhs += term * xw;
                return true;
            });
        g += rhs.degree_part(d);
    }
    std::map<XMonomial, WeightPoly> out;
    for (const auto& [e, c] : g.terms()) {
        XMonomial m;
        for (int i = 0; i < k; ++i)
            if (e[i] > 0) m[i + 1] = e[i];
        out.emplace(m, c);
    }
    return out;
}

}  // namespace smirnov
