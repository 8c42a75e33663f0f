#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "smirnov/bijection.hpp"
#include "smirnov/bleeding.hpp"
#include "smirnov/specializations.hpp"
#include "smirnov/symfunc.hpp"
#include "smirnov/tree.hpp"

using nlohmann::json;
using namespace smirnov;

namespace {

json read_input(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return json::parse(in);
}

void emit(const json& j, bool text_requested = false, const std::string& text = "") {
    if (text_requested)
        std::cout << text << "\n";
    else
        std::cout << j.dump() << "\n";
}

json weight_json(const TreeWeight& w) {
    return {{"edge", weight_poly_to_json(w.edge)}, {"x", to_string(w.xpart)}};
}

std::vector<int> parse_parts(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(std::stoi(item));
    return parts;
}

// deterministic worker pool: fixed chunks, results merged in index order
template <typename Item, typename Check>
std::vector<std::string> sweep(const std::vector<Item>& items, int jobs, const Check& check) {
    jobs = std::max(1, jobs);
    std::vector<std::vector<std::string>> failures(jobs);
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) {
                std::string err = check(items[i]);
                if (!err.empty()) failures[w].push_back(std::move(err));
            }
        });
    for (auto& t : pool) t.join();
    std::vector<std::string> all;
    for (auto& f : failures) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    return all;
}

int report(const std::string& name, const std::vector<std::string>& failures, json extra = json::object()) {
    json out = {{"check", name}, {"ok", failures.empty()}};
    for (auto& [k, v] : extra.items()) out[k] = v;
    if (!failures.empty()) {
        json f = json::array();
        for (size_t i = 0; i < failures.size() && i < 20; ++i) f.push_back(failures[i]);
        out["failures"] = f;
        out["failure_count"] = failures.size();
    }
    std::cout << out.dump() << "\n";
    return failures.empty() ? 0 : 1;
}

int report(const std::string& name, const CheckReport& r) {
    std::vector<std::string> f;
    if (!r.ok) f.push_back(r.detail);
    return report(name, f);
}

std::vector<Triple> all_triples(int max_nodes, int max_label, int max_step_nodes) {
    std::vector<Triple> items;
    std::vector<Step> steps{Step::down(), Step::up()};
    for (int m = 1; m <= max_step_nodes; ++m)
        for (const Tree& s : smirnov_trees(m, max_label)) steps.push_back(Step::of_tree(s));
    for (int n = 1; n <= max_nodes; ++n)
        for (const Tree& t : smirnov_trees(n, max_label)) {
            int a = principal_data(t).principal_label;
            for (int b = 1; b <= max_label; ++b) {
                if (b == a) continue;
                for (const Step& s : steps) items.push_back({t, s, b});
            }
        }
    return items;
}

int verify_bijection(int max_nodes, int max_label, int max_step_nodes, int jobs) {
    auto items = all_triples(max_nodes, max_label, max_step_nodes);
    std::map<std::string, long> case_counts;
    for (const auto& tr : items) ++case_counts[to_string(classify(tr))];
    auto failures = sweep(items, jobs, [&](const Triple& tr) -> std::string {
        std::string tag = tree_to_text(tr.t) + " b=" + std::to_string(tr.b);
        Tree out = phi(tr);
        if (!is_smirnov_tree(out)) return "phi output not Smirnov: " + tag;
        if (principal_data(out).principal_label != tr.b) return "phi principal label: " + tag;
        TreeWeight got = tree_weight(out), want = triple_weight(tr);
        if (got.edge != want.edge || got.xpart != want.xpart) return "phi weight: " + tag;
        auto [back, c] = phi_inverse_with_case(out);
        if (!tree_equal(back.t, tr.t) || !step_equal(back.s, tr.s) || back.b != tr.b)
            return "phi round trip: " + tag;
        return "";
    });
    // the other direction: phi(phi_inverse(t)) = t on small Smirnov trees
    std::vector<Tree> trees;
    for (int n = 2; n <= max_nodes + 1; ++n)
        for (const Tree& t : smirnov_trees(n, max_label)) trees.push_back(t);
    auto failures2 = sweep(trees, jobs, [&](const Tree& t) -> std::string {
        if (!tree_equal(phi(phi_inverse(t)), t)) return "phi_inverse round trip: " + tree_to_text(t);
        return "";
    });
    failures.insert(failures.end(), failures2.begin(), failures2.end());
    json cases = json::object();
    for (auto& [k, v] : case_counts) cases[k] = v;
    return report("bijection", failures,
                  {{"triples", items.size()}, {"trees", trees.size()}, {"cases", cases}});
}

// exhaustive generation of word+step inputs with <= max_degree total nodes
void enumerate_wordsteps(int max_nodes, int max_label,
                         const std::function<void(const WordSteps&)>& visit) {
    WordSteps ws;
    std::function<void(int)> extend = [&](int nodes) {
        if (!ws.w.empty()) visit(ws);
        if (ws.w.empty()) {
            for (int c = 1; c <= max_label; ++c) {
                ws.w.push_back(c);
                extend(1);
                ws.w.pop_back();
            }
            return;
        }
        if (nodes >= max_nodes) return;
        for (int c = 1; c <= max_label; ++c) {
            if (c == ws.w.back()) continue;
            ws.w.push_back(c);
            for (int extra = 0; extra + nodes + 1 <= max_nodes; ++extra) {
                if (extra == 0) {
                    for (Step s : {Step::down(), Step::up()}) {
                        ws.steps.push_back(s);
                        extend(nodes + 1);
                        ws.steps.pop_back();
                    }
                } else {
                    for (const Tree& st : smirnov_trees(extra, max_label)) {
                        ws.steps.push_back(Step::of_tree(st));
                        extend(nodes + 1 + extra);
                        ws.steps.pop_back();
                    }
                }
            }
            ws.w.pop_back();
        }
    };
    extend(0);
}

int verify_functional_eq(int max_degree, int max_label, int jobs) {
    // psi is a weight-preserving bijection onto Smirnov trees, checked by
    // exhaustive generation from words and step sequences
    std::vector<std::string> failures;
    long total = 0;
    std::map<std::string, int> built;  // tree text -> times produced
    enumerate_wordsteps(max_degree, max_label, [&](const WordSteps& ws) {
        ++total;
        Tree t = psi(ws);
        ++built[tree_to_text(t)];
        if (node_count(t) != wordsteps_size(ws)) failures.push_back("psi size: " + tree_to_text(t));
        TreeWeight tw = tree_weight(t), ww = wordsteps_weight(ws);
        if (tw.edge != ww.edge || tw.xpart != ww.xpart)
            failures.push_back("psi weight: " + tree_to_text(t));
        if (psi_inverse(t).w != ws.w) failures.push_back("psi round trip: " + tree_to_text(t));
    });
    for (int n = 1; n <= max_degree; ++n)
        for (const Tree& t : smirnov_trees(n, max_label)) {
            auto it = built.find(tree_to_text(t));
            if (it == built.end() || it->second != 1)
                failures.push_back("psi not bijective at: " + tree_to_text(t));
            else
                built.erase(it);
        }
    for (auto& [text, count] : built) failures.push_back("psi image outside range: " + text);
    // independent route: fixed point of the functional equation
    if (g_from_words(max_degree, max_label) != g_monomials(max_degree, max_label))
        failures.push_back("functional-equation fixed point != tree enumeration");
    (void)jobs;
    std::sort(failures.begin(), failures.end());
    return report("functional-eq", failures, {{"wordsteps", total}});
}

int verify_e_positivity(int max_degree) {
    std::vector<std::string> failures;
    SymFunc g = g_truncated(max_degree);
    if (!g.is_integral()) failures.push_back("e-expansion has non-integral coefficients");
    for (int n = 1; n <= max_degree; ++n)
        for (const Partition& pi : partitions_of(n)) {
            WeightPoly direct = e_coefficient(pi);
            WeightPoly from_g = to_weight_poly(g.coeff(pi));
            if (direct != from_g)
                failures.push_back("bleeding sum != enumeration at e_" + std::to_string(n));
            for (const auto& [e, c] : from_g.terms())
                if (c < 0) failures.push_back("negative e-coefficient at degree " + std::to_string(n));
        }
    return report("e-positivity", failures, {{"max_degree", max_degree}});
}

int verify_sw(int max_n) {
    std::vector<std::string> failures;
    for (int n = 1; n <= max_n; ++n) {
        auto formula = sw_formula(n);
        // brute force over words in n variables, bivariate statistics
        std::map<XMonomial, STPoly> words;
        enumerate_smirnov_words(n, n, [&](const Word& w) {
            WordStats st = word_stats(w);
            XMonomial m;
            for (int c : w) ++m[c];
            words[m] += STPoly::s(st.asc) * STPoly::t(st.des);
            return true;
        });
        // expand the e-combination in n variables
        std::map<XMonomial, STPoly> expanded;
        for (const auto& [pi, stc] : formula) {
            SymFunc e_pi(Basis::E, n);
            e_pi.add(pi, QPoly(1));
            for (const auto& [m, q] : expand_in_variables(e_pi, n)) {
                mpq_class v = q.coeff({0, 0, 0, 0});
                if (v.get_den() != 1) { failures.push_back("non-integral expansion"); continue; }
                for (const auto& [st, c] : stc.terms())
                    expanded[m].add(st.first, st.second, c * v.get_num());
            }
        }
        for (auto it = expanded.begin(); it != expanded.end();) {
            if (it->second.is_zero()) it = expanded.erase(it);
            else ++it;
        }
        // the formula gives the descent form; rehomogenize words to match
        std::map<XMonomial, STPoly> des_only;
        for (const auto& [m, p] : words) des_only[m] = p.at_s1();
        std::map<XMonomial, STPoly> formula_t;
        for (const auto& [m, p] : expanded) formula_t[m] = p.at_s1();
        if (des_only != formula_t)
            failures.push_back("word sum mismatch at n=" + std::to_string(n));
    }
    return report("sw", failures, {{"max_n", max_n}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smirnov tree toolkit: enumeration, insertion bijection, e-expansion"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "json (default) or text")->capture_default_str();
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for verification sweeps")->capture_default_str();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list words, trees, or bleeding trees");
    enumerate->require_subcommand(1);
    int en_n = 3, en_label = 3;
    std::string en_pi = "3,2,1";
    auto* en_words = enumerate->add_subcommand("words", "Smirnov words of length n over [max-label]");
    en_words->add_option("--n", en_n);
    en_words->add_option("--max-label", en_label);
    auto* en_trees = enumerate->add_subcommand("trees", "Smirnov trees with n nodes over [max-label]");
    en_trees->add_option("--n", en_n);
    en_trees->add_option("--max-label", en_label);
    auto* en_std = enumerate->add_subcommand("standard", "trees labeled by a permutation of [n]");
    en_std->add_option("--n", en_n);
    auto* en_bleed = enumerate->add_subcommand("bleeding", "bleeding trees with labels pi");
    en_bleed->add_option("--pi", en_pi, "comma-separated partition");

    // bijection commands
    std::string in_path = "-";
    auto* phi_cmd = app.add_subcommand("phi", "apply the insertion step to a triple");
    phi_cmd->add_option("--in", in_path, "triple JSON file, - for stdin");
    auto* phinv_cmd = app.add_subcommand("phi-inverse", "recover the triple from a tree");
    phinv_cmd->add_option("--in", in_path, "tree JSON file, - for stdin");
    auto* psi_cmd = app.add_subcommand("psi", "build the tree from a word and step sequence");
    psi_cmd->add_option("--in", in_path, "word-steps JSON file, - for stdin");
    auto* psinv_cmd = app.add_subcommand("psi-inverse", "peel a tree back to word and steps");
    psinv_cmd->add_option("--in", in_path, "tree JSON file, - for stdin");
    auto* weight_cmd = app.add_subcommand("weight", "edge and x weight of a tree");
    weight_cmd->add_option("--in", in_path, "tree JSON file, - for stdin");
    std::string tree_text;
    weight_cmd->add_option("--tree", tree_text, "compact text form instead of JSON input");

    // e-expansion
    auto* eexp = app.add_subcommand("e-expansion", "coefficients of G in the elementary basis");
    std::string ee_pi;
    int ee_maxdeg = 0;
    std::string method = "bleeding";
    eexp->add_option("--pi", ee_pi, "single partition, comma-separated");
    eexp->add_option("--max-degree", ee_maxdeg, "all partitions up to this size");
    eexp->add_option("--method", method, "bleeding | enumerate | both")->capture_default_str();

    // char-table
    auto* ct = app.add_subcommand("char-table", "character table of the degree-n slice");
    int ct_n = 3;
    bool ct_no_omega = false;
    ct->add_option("--n", ct_n)->required();
    ct->add_flag("--no-omega", ct_no_omega, "skip the omega twist");

    // identities
    auto* ident = app.add_subcommand("identities", "standard-tree counting identities");
    int id_max_n = 5;
    ident->add_option("--max-n", id_max_n)->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->require_subcommand(1);
    int v_nodes = 4, v_label = 3, v_step_nodes = 2, v_degree = 4, v_sw_n = 4, v_trunc = 4;
    auto* v_bij = verify->add_subcommand("bijection", "exhaustive phi sweep");
    v_bij->add_option("--max-nodes", v_nodes)->capture_default_str();
    v_bij->add_option("--max-label", v_label)->capture_default_str();
    v_bij->add_option("--max-step-nodes", v_step_nodes)->capture_default_str();
    auto* v_fun = verify->add_subcommand("functional-eq", "psi bijectivity and the fixed point");
    v_fun->add_option("--max-degree", v_degree)->capture_default_str();
    v_fun->add_option("--max-label", v_label)->capture_default_str();
    auto* v_epos = verify->add_subcommand("e-positivity", "bleeding sums against enumeration");
    v_epos->add_option("--max-degree", v_degree)->capture_default_str();
    auto* v_ges = verify->add_subcommand("gessel", "both truncated functional-equation forms");
    v_ges->add_option("--trunc", v_trunc)->capture_default_str();
    auto* v_sw = verify->add_subcommand("sw", "the e-positive word formula");
    v_sw->add_option("--max-n", v_sw_n)->capture_default_str();
    auto* v_all = verify->add_subcommand("all", "everything at the chosen level");
    std::string level = "desk";
    v_all->add_option("--level", level, "desk (default) or quick")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    bool text = format == "text";
    try {
        if (en_words->parsed()) {
            json out = json::array();
            std::string lines;
            for (const Word& w : smirnov_words(en_n, en_label)) {
                out.push_back(w);
                for (size_t i = 0; i < w.size(); ++i) lines += (i ? " " : "") + std::to_string(w[i]);
                lines += "\n";
            }
            if (text) std::cout << lines;
            else std::cout << out.dump() << "\n";
            return 0;
        }
        if (en_trees->parsed() || en_std->parsed()) {
            std::vector<Tree> trees =
                en_std->parsed() ? standard_trees(en_n) : smirnov_trees(en_n, en_label);
            json out = json::array();
            for (const Tree& t : trees) {
                if (text) std::cout << tree_to_text(t) << "\n";
                else out.push_back(tree_to_text(t));
            }
            if (!text) std::cout << out.dump() << "\n";
            return 0;
        }
        if (en_bleed->parsed()) {
            Partition pi(parse_parts(en_pi));
            json out = json::array();
            for (const BleedingTree& u : enumerate_bleeding(pi)) {
                json item = {{"canonical", bleeding_canonical(u)},
                             {"multiplicity", drawing_multiplicity(u).get_str()},
                             {"weight", weight_poly_to_json(bleeding_weight(u))}};
                if (text) std::cout << bleeding_canonical(u) << "\n";
                else out.push_back(item);
            }
            if (!text) std::cout << out.dump() << "\n";
            return 0;
        }
        if (phi_cmd->parsed()) {
            Triple tr = triple_from_json(read_input(in_path));
            Tree out = phi(tr);
            TreeWeight w = tree_weight(out);
            emit({{"tree", tree_to_json(out)}, {"text", tree_to_text(out)},
                  {"case", to_string(classify(tr))}, {"weight", weight_json(w)}},
                 text, tree_to_text(out) + "  " + to_string(w.edge) + "  " + to_string(w.xpart));
            return 0;
        }
        if (phinv_cmd->parsed()) {
            auto [tr, c] = phi_inverse_with_case(tree_from_json(read_input(in_path)));
            json j = triple_to_json(tr);
            j["case"] = to_string(c);
            emit(j, text, tree_to_text(tr.t) + "  b=" + std::to_string(tr.b));
            return 0;
        }
        if (psi_cmd->parsed()) {
            WordSteps ws = wordsteps_from_json(read_input(in_path));
            Tree out = psi(ws);
            TreeWeight w = tree_weight(out);
            emit({{"tree", tree_to_json(out)}, {"text", tree_to_text(out)},
                  {"weight", weight_json(w)}},
                 text, tree_to_text(out) + "  " + to_string(w.edge) + "  " + to_string(w.xpart));
            return 0;
        }
        if (psinv_cmd->parsed()) {
            WordSteps ws = psi_inverse(tree_from_json(read_input(in_path)));
            emit(wordsteps_to_json(ws), false);
            return 0;
        }
        if (weight_cmd->parsed()) {
            Tree t = tree_text.empty() ? tree_from_json(read_input(in_path))
                                       : tree_from_text(tree_text);
            TreeWeight w = tree_weight(t);
            emit(weight_json(w), text, to_string(w.edge) + "  " + to_string(w.xpart));
            return 0;
        }
        if (eexp->parsed()) {
            std::vector<Partition> targets;
            if (!ee_pi.empty()) targets.push_back(Partition(parse_parts(ee_pi)));
            else {
                int d = ee_maxdeg > 0 ? ee_maxdeg : 3;
                for (int n = 1; n <= d; ++n)
                    for (const Partition& p : partitions_of(n)) targets.push_back(p);
            }
            int maxdeg = 0;
            for (const Partition& p : targets) maxdeg = std::max(maxdeg, p.size());
            SymFunc g(Basis::E, maxdeg);
            if (method == "enumerate" || method == "both") g = g_truncated(maxdeg);
            json out = json::array();
            bool ok = true;
            for (const Partition& p : targets) {
                WeightPoly c;
                if (method == "bleeding") c = e_coefficient(p);
                else c = to_weight_poly(g.coeff(p));
                if (method == "both" && c != e_coefficient(p)) ok = false;
                out.push_back({{"partition", p.parts()}, {"coeff", weight_poly_to_json(c)}});
            }
            if (method == "both") {
                std::cout << json({{"ok", ok}, {"coefficients", out}}).dump() << "\n";
                return ok ? 0 : 1;
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (ct->parsed()) {
            if (text || format == "csv") {
                std::cout << character_table_csv(ct_n, !ct_no_omega);
            } else {
                auto table = character_table(ct_n, !ct_no_omega);
                json out = json::array();
                for (const auto& [mono, row] : table) {
                    json values = json::array();
                    for (const mpz_class& v : row) values.push_back(v.get_str());
                    out.push_back({{"monomial", to_string(WeightPoly::monomial(mono))},
                                   {"values", values}});
                }
                std::cout << out.dump() << "\n";
            }
            return 0;
        }
        if (ident->parsed()) return report("identities", check_counting_identities(id_max_n));
        if (v_bij->parsed()) return verify_bijection(v_nodes, v_label, v_step_nodes, jobs);
        if (v_fun->parsed()) return verify_functional_eq(v_degree, v_label, jobs);
        if (v_epos->parsed()) return verify_e_positivity(v_degree);
        if (v_ges->parsed()) return report("gessel", check_gessel_equation(v_trunc));
        if (v_sw->parsed()) return verify_sw(v_sw_n);
        if (v_all->parsed()) {
            int nodes = level == "quick" ? 3 : 4;
            int degree = level == "quick" ? 3 : 4;
            int rc = 0;
            rc |= verify_bijection(nodes, 3, 2, jobs);
            rc |= verify_functional_eq(degree, 3, jobs);
            rc |= verify_e_positivity(degree);
            rc |= report("gessel", check_gessel_equation(degree));
            rc |= verify_sw(degree);
            rc |= report("identities", check_counting_identities(degree + 1));
            return rc ? 1 : 0;
        }
    } catch (const std::exception& e) {
        std::cout << json({{"error", e.what()}}).dump() << "\n";
        return 2;
    }
    return 2;
}
