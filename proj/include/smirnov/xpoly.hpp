#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "smirnov/tree.hpp"

namespace smirnov {

/// Truncated polynomial in x_1..x_nvars with coefficients in C, all terms
/// of total degree > max_degree dropped. The ring used by the functional
/// equation and series identity checks.
template <typename C>
class XPoly {
public:
    using Key = std::vector<int>;

    XPoly(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {}

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }
    const std::map<Key, C>& terms() const { return terms_; }

    static XPoly constant(int nvars, int max_degree, C c) {
        XPoly p(nvars, max_degree);
        p.add(Key(nvars, 0), std::move(c));
        return p;
    }

    void add(const Key& e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("xpoly: arity");
        if (std::accumulate(e.begin(), e.end(), 0) > max_degree_) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!(c == C(0))) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    void add_xmonomial(const XMonomial& m, const C& c) {
        Key e(nvars_, 0);
        for (auto [label, mult] : m) {
            if (label > nvars_) throw std::invalid_argument("xpoly: label out of range");
            e[label - 1] = mult;
        }
        add(e, c);
    }

    C coeff(const Key& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(0) : it->second;
    }

    XPoly& operator+=(const XPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, C(0) - c);
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        a.check(b);
        XPoly r(a.nvars_, a.max_degree_);
        for (const auto& [ea, ca] : a.terms_) {
            int da = std::accumulate(ea.begin(), ea.end(), 0);
            for (const auto& [eb, cb] : b.terms_) {
                int db = std::accumulate(eb.begin(), eb.end(), 0);
                if (da + db > a.max_degree_) continue;
                Key e(a.nvars_);
                for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        }
        return r;
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    XPoly& operator*=(const C& c) {
        XPoly r(nvars_, max_degree_);
        for (const auto& [e, v] : terms_) r.add(e, v * c);
        return *this = std::move(r);
    }

    bool operator==(const XPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const XPoly& o) const { return !(*this == o); }

    /// Homogeneous slice of total degree d.
    XPoly degree_part(int d) const {
        XPoly r(nvars_, max_degree_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == d) r.add(e, c);
        return r;
    }

    XPoly pow(int n) const {
        XPoly r = constant(nvars_, max_degree_, C(1));
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

private:
    void check(const XPoly& o) const {
        if (nvars_ != o.nvars_ || max_degree_ != o.max_degree_)
            throw std::invalid_argument("xpoly: mixed rings");
    }

    int nvars_;
    int max_degree_;
    std::map<Key, C> terms_;
};

/// e_d(x_1..x_nvars) in the truncated ring.
template <typename C>
XPoly<C> elementary_xpoly(int nvars, int max_degree, int d) {
    XPoly<C> r(nvars, max_degree);
    std::vector<int> idx(d);
    // iterate over d-subsets of [nvars]
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            std::vector<int> e(nvars, 0);
            for (int i : idx) e[i] = 1;
            r.add(e, C(1));
            return;
        }
        for (int i = start; i < nvars; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (d <= nvars) rec(0, 0);
    return r;
}

}  // namespace smirnov
