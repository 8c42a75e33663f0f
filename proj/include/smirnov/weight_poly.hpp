#pragma once

#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace smirnov {

// Exponent vector over the four edge variables, in the fixed order
// (ra, rd, la, ld) = (weak right ascent, right descent, weak left ascent,
// left descent).
using Expo4 = std::array<int, 4>;

// Graded lexicographic order: total degree first, then lex on (ra,rd,la,ld).
struct GrlexLess {
    bool operator()(const Expo4& a, const Expo4& b) const {
        int da = a[0] + a[1] + a[2] + a[3];
        int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse polynomial in the four edge variables with exact coefficients.
/// Invariant: no stored term has a zero coefficient, so the zero polynomial
/// has an empty term map and equality is structural.
template <typename Coeff>
class SparsePoly4 {
public:
    using Terms = std::map<Expo4, Coeff, GrlexLess>;

    SparsePoly4() = default;
    SparsePoly4(int c) { if (c != 0) terms_[{0, 0, 0, 0}] = Coeff(c); }
    SparsePoly4(const Coeff& c) { if (c != 0) terms_[{0, 0, 0, 0}] = c; }

    static SparsePoly4 monomial(Expo4 e, Coeff c = Coeff(1)) {
        SparsePoly4 p;
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }
    static SparsePoly4 ra() { return monomial({1, 0, 0, 0}); }
    static SparsePoly4 rd() { return monomial({0, 1, 0, 0}); }
    static SparsePoly4 la() { return monomial({0, 0, 1, 0}); }
    static SparsePoly4 ld() { return monomial({0, 0, 0, 1}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(const Expo4& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    int total_degree() const {
        if (terms_.empty()) return 0;
        auto& e = terms_.rbegin()->first;  // grlex max
        return e[0] + e[1] + e[2] + e[3];
    }

    SparsePoly4& operator+=(const SparsePoly4& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly4& operator-=(const SparsePoly4& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, Coeff(-c));
        return *this;
    }
    friend SparsePoly4 operator+(SparsePoly4 a, const SparsePoly4& b) { return a += b; }
    friend SparsePoly4 operator-(SparsePoly4 a, const SparsePoly4& b) { return a -= b; }
    friend SparsePoly4 operator-(const SparsePoly4& a) { return SparsePoly4() - a; }

    friend SparsePoly4 operator*(const SparsePoly4& a, const SparsePoly4& b) {
        SparsePoly4 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Expo4 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
                r.add_term(e, ca * cb);
            }
        return r;
    }
    SparsePoly4& operator*=(const SparsePoly4& o) { return *this = *this * o; }

    SparsePoly4& operator*=(const Coeff& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend SparsePoly4 operator*(SparsePoly4 a, const Coeff& c) { return a *= c; }
    friend SparsePoly4 operator*(const Coeff& c, SparsePoly4 a) { return a *= c; }
    // exact matches so integer literals do not make the overloads ambiguous
    friend SparsePoly4 operator*(SparsePoly4 a, int c) { return a *= Coeff(c); }
    friend SparsePoly4 operator*(int c, SparsePoly4 a) { return a *= Coeff(c); }

    bool operator==(const SparsePoly4& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly4& o) const { return !(*this == o); }

    /// Substitutes the four values, in (ra, rd, la, ld) order.
    Coeff eval(const Coeff& vra, const Coeff& vrd, const Coeff& vla, const Coeff& vld) const {
        Coeff total(0);
        for (const auto& [e, c] : terms_) {
            Coeff t = c;
            for (int i = 0; i < e[0]; ++i) t *= vra;
            for (int i = 0; i < e[1]; ++i) t *= vrd;
            for (int i = 0; i < e[2]; ++i) t *= vla;
            for (int i = 0; i < e[3]; ++i) t *= vld;
            total += t;
        }
        return total;
    }

    SparsePoly4 pow(int n) const {
        SparsePoly4 r(1);
        for (int i = 0; i < n; ++i) r *= *this;
        return r;
    }

private:
    void add_term(const Expo4& e, Coeff c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(e, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

/// Edge-weight polynomial with arbitrary-precision integer coefficients.
using WeightPoly = SparsePoly4<mpz_class>;
/// Same monomial structure over exact rationals (internal: basis changes,
/// exponential specialization).
using QPoly = SparsePoly4<mpq_class>;

QPoly to_qpoly(const WeightPoly& p);
/// Fails if any coefficient has a nontrivial denominator.
WeightPoly to_weight_poly(const QPoly& p);

/// Canonical text form: terms in graded-lex order, `2*ra^3*rd^2 + ...`.
std::string to_string(const WeightPoly& p);
std::string to_string(const QPoly& p);

nlohmann::json weight_poly_to_json(const WeightPoly& p);
WeightPoly weight_poly_from_json(const nlohmann::json& j);

}  // namespace smirnov
