#include "smirnov/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "smirnov/xpoly.hpp"

namespace smirnov {

std::string to_string(Basis b) {
    switch (b) {
        case Basis::E: return "e";
        case Basis::H: return "h";
        case Basis::M: return "m";
        case Basis::P: return "p";
    }
    return "?";
}

QPoly SymFunc::coeff(const Partition& p) const {
    auto it = coeffs_.find(p);
    return it == coeffs_.end() ? QPoly() : it->second;
}

void SymFunc::add(const Partition& p, const QPoly& c) {
    if (p.size() > max_degree_)
        throw std::invalid_argument("symfunc: partition exceeds truncation bound");
    auto it = coeffs_.find(p);
    if (it == coeffs_.end()) {
        if (!c.is_zero()) coeffs_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.basis_ != basis_) throw std::invalid_argument("symfunc: mixed bases");
    if (o.max_degree_ > max_degree_) max_degree_ = o.max_degree_;
    for (const auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

bool SymFunc::is_integral() const {
    for (const auto& [p, c] : coeffs_)
        for (const auto& [e, q] : c.terms())
            if (q.get_den() != 1) return false;
    return true;
}

namespace {

using Mat = std::vector<std::vector<mpq_class>>;

XPoly<mpq_class> power_sum_xpoly(int nvars, int deg, int k) {
    XPoly<mpq_class> r(nvars, deg);
    for (int i = 0; i < nvars; ++i) {
        std::vector<int> e(nvars, 0);
        e[i] = k;
        r.add(e, 1);
    }
    return r;
}

XPoly<mpq_class> homogeneous_xpoly(int nvars, int deg, int k) {
    XPoly<mpq_class> r(nvars, deg);
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nvars - 1) {
            e[var] = remaining;
            r.add(e, 1);
            e[var] = 0;
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            e[var] = c;
            rec(var + 1, remaining - c);
        }
        e[var] = 0;
    };
    rec(0, k);
    return r;
}

XPoly<mpq_class> basis_element_xpoly(Basis b, int nvars, int deg, int k) {
    switch (b) {
        case Basis::E: return elementary_xpoly<mpq_class>(nvars, deg, k);
        case Basis::H: return homogeneous_xpoly(nvars, deg, k);
        case Basis::P: return power_sum_xpoly(nvars, deg, k);
        default: throw std::logic_error("basis_element_xpoly: monomial basis");
    }
}

Partition exponents_to_partition(const std::vector<int>& e) {
    std::vector<int> parts;
    for (int x : e)
        if (x > 0) parts.push_back(x);
    return Partition(parts);
}

// b_lambda = sum_mu A[lambda][mu] m_mu, computed by expansion in n variables.
Mat basis_to_monomial_matrix(Basis b, int n) {
    auto parts = partitions_of(n);
    int np = static_cast<int>(parts.size());
    Mat a(np, std::vector<mpq_class>(np, 0));
    std::map<Partition, int> index;
    for (int i = 0; i < np; ++i) index[parts[i]] = i;
    for (int i = 0; i < np; ++i) {
        XPoly<mpq_class> prod = XPoly<mpq_class>::constant(n, n, 1);
        for (int part : parts[i].parts()) prod *= basis_element_xpoly(b, n, n, part);
        // coefficient of m_mu = coefficient on the decreasing exponent vector
        for (const auto& [e, c] : prod.terms()) {
            std::vector<int> sorted = e;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            if (sorted == e) a[i][index.at(exponents_to_partition(e))] = c;
        }
    }
    return a;
}

Mat invert(Mat a) {
    int n = static_cast<int>(a.size());
    Mat inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::logic_error("transition matrix is singular");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        mpq_class d = a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    // forward[b]: basis -> monomial; inverse[b]: monomial -> basis
    std::map<Basis, Mat> forward, inverse;
};

// Write-once cache per degree, safe for concurrent readers afterwards.
const DegreeTables& tables(int n) {
    static std::mutex mu;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(n);
    for (int i = 0; i < static_cast<int>(t.parts.size()); ++i) t.index[t.parts[i]] = i;
    for (Basis b : {Basis::E, Basis::H, Basis::P}) {
        Mat a = basis_to_monomial_matrix(b, n);
        t.inverse[b] = invert(a);
        t.forward[b] = std::move(a);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

SymFunc basis_convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target, f.max_degree());
    for (const auto& [lambda, c] : f.coeffs()) {
        int n = lambda.size();
        if (n == 0) {
            // the constant term is basis independent
            out.add(lambda, c);
            continue;
        }
        const DegreeTables& t = tables(n);
        int row = t.index.at(lambda);
        // to monomial coefficients
        std::vector<mpq_class> mono(t.parts.size(), 0);
        if (f.basis() == Basis::M) {
            mono[row] = 1;
        } else {
            const Mat& a = t.forward.at(f.basis());
            for (size_t j = 0; j < t.parts.size(); ++j) mono[j] = a[row][j];
        }
        if (target == Basis::M) {
            for (size_t j = 0; j < t.parts.size(); ++j)
                if (mono[j] != 0) out.add(t.parts[j], c * QPoly(mpq_class(mono[j])));
        } else {
            const Mat& ainv = t.inverse.at(target);
            for (size_t k = 0; k < t.parts.size(); ++k) {
                mpq_class v = 0;
                for (size_t j = 0; j < t.parts.size(); ++j) v += mono[j] * ainv[j][k];
                if (v != 0) out.add(t.parts[k], c * QPoly(v));
            }
        }
    }
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc in_e = basis_convert(f, Basis::E);
    SymFunc as_h(Basis::H, in_e.max_degree());
    for (const auto& [p, c] : in_e.coeffs()) as_h.add(p, c);
    return basis_convert(as_h, f.basis());
}

QPoly hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fm = basis_convert(f, Basis::M);
    SymFunc gh = basis_convert(g, Basis::H);
    QPoly r;
    for (const auto& [p, c] : fm.coeffs()) {
        QPoly d = gh.coeff(p);
        if (!d.is_zero()) r += c * d;
    }
    return r;
}

namespace {

mpz_class orbit_size(const std::vector<int>& padded) {
    std::map<int, int> mult;
    for (int e : padded) ++mult[e];
    mpz_class size = factorial(static_cast<int>(padded.size()));
    for (auto [e, m] : mult) size /= factorial(m);
    return size;
}

}  // namespace

SymFunc from_monomial_data_q(int n, const std::map<XMonomial, QPoly>& data) {
    struct Orbit {
        QPoly coeff;
        mpz_class seen = 0;
    };
    std::map<Partition, Orbit> orbits;
    for (const auto& [mon, c] : data) {
        if (c.is_zero()) continue;
        if (xmon_degree(mon) != n)
            throw std::invalid_argument("from_monomial_data: monomial of degree != n");
        std::vector<int> padded(n, 0);
        for (auto [label, mult] : mon) {
            if (label < 1 || label > n)
                throw std::invalid_argument("from_monomial_data: label outside [n]");
            padded[label - 1] = mult;
        }
        std::sort(padded.begin(), padded.end(), std::greater<>());
        Partition mu = exponents_to_partition(padded);
        auto [it, fresh] = orbits.try_emplace(mu, Orbit{c, 0});
        if (!fresh && it->second.coeff != c)
            throw std::invalid_argument("from_monomial_data: asymmetric coefficients");
        it->second.seen += 1;
    }
    SymFunc out(Basis::M, n);
    for (auto& [mu, orbit] : orbits) {
        std::vector<int> padded = mu.parts();
        padded.resize(n, 0);
        if (orbit.seen != orbit_size(padded))
            throw std::invalid_argument("from_monomial_data: incomplete monomial orbit");
        out.add(mu, orbit.coeff);
    }
    return out;
}

SymFunc from_monomial_data(int n, const std::map<XMonomial, WeightPoly>& data) {
    std::map<XMonomial, QPoly> q;
    for (const auto& [m, c] : data) q.emplace(m, to_qpoly(c));
    return from_monomial_data_q(n, q);
}

std::map<XMonomial, QPoly> expand_in_variables(const SymFunc& f, int n) {
    SymFunc fm = basis_convert(f, Basis::M);
    std::map<XMonomial, QPoly> out;
    for (const auto& [mu, c] : fm.coeffs()) {
        std::vector<int> padded = mu.parts();
        if (static_cast<int>(padded.size()) > n)
            throw std::invalid_argument("expand_in_variables: more parts than variables");
        padded.resize(n, 0);
        std::sort(padded.begin(), padded.end());
        do {
            XMonomial mon;
            for (int i = 0; i < n; ++i)
                if (padded[i] > 0) mon[i + 1] = padded[i];
            auto [it, fresh] = out.try_emplace(mon, c);
            if (!fresh) it->second += c;
        } while (std::next_permutation(padded.begin(), padded.end()));
    }
    return out;
}

nlohmann::json symfunc_to_json(const SymFunc& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, c] : f.coeffs())
        terms.push_back({{"partition", p.parts()}, {"coeff", weight_poly_to_json(to_weight_poly(c))}});
    return {{"basis", to_string(f.basis())}, {"maxdeg", f.max_degree()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const nlohmann::json& j) {
    std::string b = j.at("basis").get<std::string>();
    Basis basis = b == "e" ? Basis::E : b == "h" ? Basis::H : b == "m" ? Basis::M
                : b == "p" ? Basis::P
                           : throw std::invalid_argument("symfunc json: unknown basis " + b);
    SymFunc f(basis, j.at("maxdeg").get<int>());
    for (const auto& term : j.at("terms"))
        f.add(Partition(term.at("partition").get<std::vector<int>>()),
              to_qpoly(weight_poly_from_json(term.at("coeff"))));
    return f;
}

// ---------------------------------------------------------------------------

void STPoly::add(int es, int et, const WeightPoly& c) {
    if (es < 0 || et < 0) throw std::invalid_argument("stpoly: negative exponent");
    if (c.is_zero()) return;
    auto key = std::make_pair(es, et);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

STPoly& STPoly::operator+=(const STPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
}

STPoly& STPoly::operator-=(const STPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
    return *this;
}

STPoly operator*(const STPoly& a, const STPoly& b) {
    STPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

WeightPoly STPoly::substitute(const WeightPoly& sval, const WeightPoly& tval) const {
    WeightPoly r;
    for (const auto& [e, c] : terms_)
        r += c * sval.pow(e.first) * tval.pow(e.second);
    return r;
}

STPoly STPoly::at_s1() const {
    STPoly r;
    for (const auto& [e, c] : terms_) r.add(0, e.second, c);
    return r;
}

std::string to_string(const STPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        out << "(" << to_string(c) << ")";
        if (e.first) out << "*s" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) out << "*t" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
        first = false;
    }
    return out.str();
}

std::map<Partition, STPoly> sw_formula(int n) {
    if (n < 1) throw std::invalid_argument("sw_formula: n >= 1");
    std::map<Partition, STPoly> out;
    std::vector<int> comp;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            std::vector<int> parts;
            parts.push_back(comp[0] - 1);
            for (size_t i = 1; i < comp.size(); ++i) parts.push_back(comp[i]);
            if (parts[0] == 0) parts.erase(parts.begin());  // k_1 = 1 never occurs (k_i >= 2)
            Partition pi(parts);
            // (s^{k1-2} + s^{k1-3} t + ... + t^{k1-2}) *
            // prod_{i>=2} (s^{ki-1} t + ... + s t^{ki-1})
            STPoly factor;
            for (int j = 0; j <= comp[0] - 2; ++j)
                factor.add(comp[0] - 2 - j, j, WeightPoly(1));
            for (size_t i = 1; i < comp.size(); ++i) {
                STPoly bracket;
                for (int j = 1; j <= comp[i] - 1; ++j)
                    bracket.add(comp[i] - j, j, WeightPoly(1));
                factor = factor * bracket;
            }
            auto [it, fresh] = out.try_emplace(pi, factor);
            if (!fresh) it->second += factor;
            return;
        }
        for (int k = 2; k <= remaining; ++k) {
            comp.push_back(k);
            rec(remaining - k);
            comp.pop_back();
        }
    };
    rec(n + 1);
    return out;
}

}  // namespace smirnov
