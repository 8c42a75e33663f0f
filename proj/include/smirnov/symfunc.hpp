#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "smirnov/partition.hpp"
#include "smirnov/tree.hpp"
#include "smirnov/weight_poly.hpp"

namespace smirnov {

enum class Basis { E, H, M, P };
std::string to_string(Basis b);

/// Truncated symmetric function: partition-indexed coefficients in one of
/// the e/h/m/p bases. Coefficients are rational edge-variable polynomials
/// internally; everything the library emits is integral and checked.
class SymFunc {
public:
    explicit SymFunc(Basis basis, int max_degree)
        : basis_(basis), max_degree_(max_degree) {}

    Basis basis() const { return basis_; }
    int max_degree() const { return max_degree_; }
    const std::map<Partition, QPoly>& coeffs() const { return coeffs_; }

    QPoly coeff(const Partition& p) const;
    /// Adds c * basis_element(p); drops the term if it cancels.
    void add(const Partition& p, const QPoly& c);

    SymFunc& operator+=(const SymFunc& o);  // same basis required
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    bool operator==(const SymFunc& o) const;

    bool is_integral() const;

private:
    Basis basis_;
    int max_degree_;
    std::map<Partition, QPoly> coeffs_;
};

/// Re-expresses f in the target basis; exact, round trips are identities.
SymFunc basis_convert(const SymFunc& f, Basis target);

/// The standard involution: omega(e_lambda) = h_lambda. Result is returned
/// in f's basis.
SymFunc omega(const SymFunc& f);

/// Hall inner product, <p_lambda, p_mu> = z_mu delta.
QPoly hall_inner(const SymFunc& f, const SymFunc& g);

/// Builds the unique degree-n symmetric function (M basis) from monomial
/// data over labels in [n]. Throws if the data is not symmetric under
/// label permutations.
SymFunc from_monomial_data(int n, const std::map<XMonomial, WeightPoly>& data);
SymFunc from_monomial_data_q(int n, const std::map<XMonomial, QPoly>& data);

/// Expands f in n variables (degree-graded monomial map); inverse of
/// from_monomial_data for degree-n-homogeneous f.
std::map<XMonomial, QPoly> expand_in_variables(const SymFunc& f, int n);

/// JSON: requires integral coefficients.
nlohmann::json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------

/// Bivariate polynomial in the formal symbols s, t with edge-polynomial
/// coefficients. Exponent pair = (deg s, deg t).
class STPoly {
public:
    using Terms = std::map<std::pair<int, int>, WeightPoly>;

    STPoly() = default;
    STPoly(int c) { add(0, 0, WeightPoly(c)); }

    static STPoly s(int e = 1) { STPoly p; p.add(e, 0, WeightPoly(1)); return p; }
    static STPoly t(int e = 1) { STPoly p; p.add(0, e, WeightPoly(1)); return p; }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(int es, int et, const WeightPoly& c);

    STPoly& operator+=(const STPoly& o);
    STPoly& operator-=(const STPoly& o);
    friend STPoly operator+(STPoly a, const STPoly& b) { return a += b; }
    friend STPoly operator-(STPoly a, const STPoly& b) { return a -= b; }
    friend STPoly operator*(const STPoly& a, const STPoly& b);
    bool operator==(const STPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const STPoly& o) const { return !(*this == o); }

    /// Substitutes edge polynomials for s and t.
    WeightPoly substitute(const WeightPoly& sval, const WeightPoly& tval) const;
    /// Sets s = 1, leaving a polynomial in t alone.
    STPoly at_s1() const;

private:
    Terms terms_;
};

std::string to_string(const STPoly& p);

/// The e-positive expansion of the length-n Smirnov word generating
/// function, bihomogeneous in s (ascents) and t (descents): partition ->
/// s,t-polynomial. Setting s = 1 recovers the descent-only form.
std::map<Partition, STPoly> sw_formula(int n);

}  // namespace smirnov
