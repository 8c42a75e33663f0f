#include "smirnov/specializations.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "smirnov/bleeding.hpp"
#include "smirnov/xpoly.hpp"

namespace smirnov {

void enumerate_standard_trees(int n, const std::function<bool(const Tree&)>& visit) {
    if (n < 1) throw std::invalid_argument("standard trees: n >= 1");
    std::vector<int> perm(n);
    for (const Tree& shape : tree_shapes(n)) {
        std::iota(perm.begin(), perm.end(), 1);
        do {
            if (!visit(relabel_preorder(shape, perm))) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

std::vector<Tree> standard_trees(int n) {
    std::vector<Tree> out;
    enumerate_standard_trees(n, [&](const Tree& t) { out.push_back(t); return true; });
    return out;
}

mpz_class catalan(int n) {
    static std::vector<mpz_class> cache{1};
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        mpz_class c = 0;
        for (int i = 0; i < m; ++i) c += cache[i] * cache[m - 1 - i];
        cache.push_back(c);
    }
    return cache[n];
}

PowerSeries<QPoly> b_series(int n_max) {
    PowerSeries<QPoly> b(n_max);
    for (int n = 1; n <= n_max; ++n) {
        WeightPoly sum;
        enumerate_standard_trees(n, [&](const Tree& t) {
            sum += tree_weight(t).edge;
            return true;
        });
        mpq_class inv_fact(1, 1);
        inv_fact /= factorial(n);
        b[n] = to_qpoly(sum) * QPoly(inv_fact);
    }
    return b;
}

PowerSeries<QPoly> exponential_specialization(const SymFunc& f, int n_max) {
    SymFunc fe = basis_convert(f, Basis::E);
    PowerSeries<QPoly> out(n_max);
    for (const auto& [lambda, c] : fe.coeffs()) {
        if (lambda.size() > n_max) continue;
        mpq_class factor = 1;
        for (int part : lambda.parts()) factor /= factorial(part);
        out[lambda.size()] += c * QPoly(factor);
    }
    return out;
}

CheckReport check_counting_identities(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        mpz_class total = 0, no_ldes = 0;
        enumerate_standard_trees(n, [&](const Tree& t) {
            ++total;
            if (tree_stats(t).ldes == 0) ++no_ldes;
            return true;
        });
        mpz_class want_total = factorial(n) * catalan(n);
        mpz_class want_no_ldes;
        mpz_pow_ui(want_no_ldes.get_mpz_t(), mpz_class(n + 1).get_mpz_t(), n - 1);
        if (total != want_total) {
            std::ostringstream m;
            m << "n=" << n << ": standard tree count " << total << " != n!*Cat_n = " << want_total;
            return {false, m.str()};
        }
        if (no_ldes != want_no_ldes) {
            std::ostringstream m;
            m << "n=" << n << ": ldes-free count " << no_ldes << " != (n+1)^(n-1) = " << want_no_ldes;
            return {false, m.str()};
        }
    }
    return {};
}

namespace {

using GP = XPoly<WeightPoly>;

// E(u) = sum_{n>=0} e_n(x) u^n in the truncated ring; u may have a nonzero
// (x-)constant term since e_n bounds the summation.
GP elementary_series_at(const GP& u, int nvars, int trunc) {
    GP total = GP::constant(nvars, trunc, WeightPoly(1));
    GP upow = total;
    for (int n = 1; n <= trunc; ++n) {
        upow *= u;
        total += elementary_xpoly<WeightPoly>(nvars, trunc, n) * upow;
    }
    return total;
}

}  // namespace

CheckReport check_gessel_equation(int trunc) {
    const int nv = trunc;
    // symmetric-function form, G from direct tree enumeration
    GP g(nv, trunc);
    for (const auto& [m, c] : g_monomials(trunc, nv)) g.add_xmonomial(m, c);
    WeightPoly ra = WeightPoly::ra(), rd = WeightPoly::rd();
    WeightPoly la = WeightPoly::la(), ld = WeightPoly::ld();
    GP one = GP::constant(nv, trunc, WeightPoly(1));
    auto shifted = [&](const WeightPoly& v) { GP r = g; r *= v; return r + one; };
    GP s = g, t = g;
    s *= ra * la;
    t *= rd * ld;
    s += GP::constant(nv, trunc, ra + la);
    t += GP::constant(nv, trunc, rd + ld);
    GP lhs = shifted(ra) * shifted(la) * elementary_series_at(t, nv, trunc);
    GP rhs = shifted(rd) * shifted(ld) * elementary_series_at(s, nv, trunc);
    if (lhs != rhs)
        return {false, "symmetric-function form fails at truncation " + std::to_string(trunc)};

    // exponential form over standard trees
    using QSeries = PowerSeries<QPoly>;
    QSeries b = b_series(trunc);
    QPoly qra = QPoly::ra(), qrd = QPoly::rd(), qla = QPoly::la(), qld = QPoly::ld();
    auto affine = [&](const QPoly& v) {
        QSeries r = b;
        for (int n = 0; n <= trunc; ++n) r[n] *= v;
        r[0] += QPoly(1);
        return r;
    };
    QSeries u(trunc);
    QPoly slope = qla * qra - qld * qrd;
    u[1] = qra + qla - qrd - qld;
    for (int n = 1; n < trunc; ++n) u[n + 1] = b[n] * slope;
    QSeries expu(trunc, QPoly(1));
    QSeries upow(trunc, QPoly(1));
    mpq_class inv_fact = 1;
    for (int k = 1; k <= trunc; ++k) {
        upow *= u;
        inv_fact /= k;
        QSeries term = upow;
        for (int n = 0; n <= trunc; ++n) term[n] *= QPoly(inv_fact);
        expu += term;
    }
    if (affine(qra) * affine(qla) != affine(qrd) * affine(qld) * expu)
        return {false, "exponential form fails at truncation " + std::to_string(trunc)};
    return {};
}

CheckReport check_sharewachs_c3(int trunc) {
    const int nv = trunc;
    using SP = XPoly<STPoly>;
    // W(z;1,t) - 1 over Smirnov words, z-degree identified with x-degree
    SP w(nv, trunc);
    SP wst(nv, trunc);  // bivariate companion for the rehomogenization check
    for (int n = 1; n <= trunc; ++n)
        enumerate_smirnov_words(n, nv, [&](const Word& word) {
            WordStats st = word_stats(word);
            XMonomial m;
            for (int c : word) ++m[c];
            w.add_xmonomial(m, STPoly::t(st.des));
            wst.add_xmonomial(m, STPoly::s(st.asc) * STPoly::t(st.des));
            return true;
        });
    SP e_z(nv, trunc), e_zt(nv, trunc);
    for (int n = 0; n <= trunc; ++n) {
        auto en = elementary_xpoly<mpz_class>(nv, trunc, n);
        for (const auto& [e, c] : en.terms()) {
            STPoly plain;
            plain.add(0, 0, WeightPoly(mpz_class(c)));
            e_z.add(e, plain);
            STPoly tn;
            tn.add(0, n, WeightPoly(mpz_class(c)));
            e_zt.add(e, tn);
        }
    }
    SP t_ez = e_z;
    {
        SP scaled(nv, trunc);
        for (const auto& [e, c] : e_z.terms()) scaled.add(e, STPoly::t(1) * c);
        t_ez = scaled;
    }
    if (w * (e_zt - t_ez) != e_z - e_zt)
        return {false, "elementary-basis identity fails at truncation " + std::to_string(trunc)};

    // rehomogenization: W(z;s,t) = 1 + s^{-1}(W(sz;1,t/s) - 1), degreewise
    SP rehom(nv, trunc);
    for (const auto& [e, c] : w.terms()) {
        int n = std::accumulate(e.begin(), e.end(), 0);
        STPoly lifted;
        for (const auto& [st, coeff] : c.terms()) lifted.add(n - 1 - st.second, st.second, coeff);
        rehom.add(e, lifted);
    }
    if (rehom != wst)
        return {false, "ascent-descent rehomogenization fails at truncation " + std::to_string(trunc)};
    return {};
}

std::map<Expo4, std::vector<mpz_class>> character_table(int n, bool apply_omega) {
    std::map<XMonomial, WeightPoly> data;
    enumerate_smirnov_trees(n, n, [&](const Tree& t) {
        TreeWeight w = tree_weight(t);
        auto [it, fresh] = data.try_emplace(w.xpart, w.edge);
        if (!fresh) it->second += w.edge;
        return true;
    });
    SymFunc gn = basis_convert(from_monomial_data(n, data), Basis::E);
    if (apply_omega) {
        SymFunc as_h(Basis::H, n);
        for (const auto& [p, c] : gn.coeffs()) as_h.add(p, c);
        gn = std::move(as_h);
    }
    std::set<Expo4, GrlexLess> monomials;
    for (const auto& [p, c] : gn.coeffs())
        for (const auto& [e, q] : c.terms()) monomials.insert(e);
    std::vector<Partition> cycle_types = partitions_of(n);
    std::reverse(cycle_types.begin(), cycle_types.end());  // (1^n) first
    std::map<Expo4, std::vector<mpz_class>> table;
    for (const Expo4& mono : monomials) {
        SymFunc f(gn.basis(), n);
        for (const auto& [p, c] : gn.coeffs()) {
            mpq_class v = c.coeff(mono);
            if (v != 0) f.add(p, QPoly(v));
        }
        SymFunc fp = basis_convert(f, Basis::P);
        std::vector<mpz_class> row;
        for (const Partition& nu : cycle_types) {
            QPoly c = fp.coeff(nu);
            for (const auto& [e, q] : c.terms())
                if (e != Expo4{0, 0, 0, 0})
                    throw std::logic_error("character table: non-constant p coefficient");
            mpq_class chi = c.coeff({0, 0, 0, 0}) * nu.z_number();
            if (chi.get_den() != 1) throw std::logic_error("character table: non-integral value");
            row.push_back(chi.get_num());
        }
        table.emplace(mono, std::move(row));
    }
    return table;
}

std::string character_table_csv(int n, bool apply_omega) {
    auto table = character_table(n, apply_omega);
    std::vector<Partition> cycle_types = partitions_of(n);
    std::reverse(cycle_types.begin(), cycle_types.end());
    std::ostringstream out;
    out << "monomial";
    for (const Partition& nu : cycle_types) {
        out << ",";
        for (int part : nu.parts()) out << part;
    }
    out << "\n";
    for (const auto& [mono, row] : table) {
        out << to_string(WeightPoly::monomial(mono));
        for (const mpz_class& v : row) out << "," << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace smirnov
