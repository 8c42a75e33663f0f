#pragma once

#include <stdexcept>
#include <vector>

namespace smirnov {

/// Truncated power series in one variable with exact coefficients.
/// coeffs[n] is the coefficient of x^n (callers track their own n!
/// normalization for exponential generating functions).
/// Length is always order + 1.
template <typename C>
class PowerSeries {
public:
    explicit PowerSeries(int order) : coeffs_(order + 1, C(0)) {}
    PowerSeries(int order, C constant) : coeffs_(order + 1, C(0)) {
        coeffs_[0] = std::move(constant);
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](int n) const { return coeffs_.at(n); }
    C& operator[](int n) { return coeffs_.at(n); }

    PowerSeries& operator+=(const PowerSeries& o) {
        check(o);
        for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& o) {
        check(o);
        for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.check(b);
        PowerSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == C(0)) continue;
            for (int j = 0; i + j <= a.order(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

    bool operator==(const PowerSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const PowerSeries& o) const { return !(*this == o); }

    /// Division by a series whose constant term is a unit. C must support
    /// exact division by that constant term (rationals, or unit constants).
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        a.check(b);
        if (b.coeffs_[0] == C(0))
            throw std::domain_error("series division: constant term is zero");
        PowerSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            C acc = a.coeffs_[n];
            for (int i = 0; i < n; ++i) acc -= r.coeffs_[i] * b.coeffs_[n - i];
            r.coeffs_[n] = acc / b.coeffs_[0];
        }
        return r;
    }

    /// Substitutes g (zero constant term required) for the variable.
    PowerSeries compose(const PowerSeries& g) const {
        check(g);
        if (g.coeffs_[0] != C(0))
            throw std::domain_error("series composition: nonzero constant term");
        PowerSeries r(order());
        PowerSeries gp(order(), C(1));  // g^k
        for (int k = 0; k <= order(); ++k) {
            for (int n = 0; n <= order(); ++n) r.coeffs_[n] += coeffs_[k] * gp.coeffs_[n];
            if (k < order()) gp *= g;
        }
        return r;
    }

private:
    void check(const PowerSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("series truncation orders differ");
    }

    std::vector<C> coeffs_;
};

}  // namespace smirnov
