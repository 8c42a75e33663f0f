#include <doctest.h>

#include <json.hpp>

#include "smirnov/symfunc.hpp"

using namespace smirnov;

namespace {

SymFunc single(Basis b, std::vector<int> parts, int deg, QPoly c = QPoly(1)) {
    SymFunc f(b, deg);
    f.add(Partition(std::move(parts)), c);
    return f;
}

}  // namespace

TEST_CASE("textbook conversions at low degree") {
    // e2 = m11, h2 = m2 + m11, p2 = m2
    SymFunc e2 = basis_convert(single(Basis::E, {2}, 2), Basis::M);
    CHECK(e2.coeff(Partition({1, 1})) == QPoly(1));
    CHECK(e2.coeff(Partition({2})) == QPoly(0));
    SymFunc h2 = basis_convert(single(Basis::H, {2}, 2), Basis::M);
    CHECK(h2.coeff(Partition({2})) == QPoly(1));
    CHECK(h2.coeff(Partition({1, 1})) == QPoly(1));
    SymFunc p2 = basis_convert(single(Basis::P, {2}, 2), Basis::M);
    CHECK(p2.coeff(Partition({2})) == QPoly(1));
    CHECK(p2.coeff(Partition({1, 1})) == QPoly(0));
    // p2 = h1^2 - 2 h... rather e-expansion: p2 = e1^2 - 2 e2
    SymFunc p2e = basis_convert(single(Basis::P, {2}, 2), Basis::E);
    CHECK(p2e.coeff(Partition({1, 1})) == QPoly(1));
    CHECK(p2e.coeff(Partition({2})) == QPoly(-2));
}

TEST_CASE("basis round trips are identities up to degree 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (Basis from : {Basis::E, Basis::H, Basis::M, Basis::P})
                for (Basis to : {Basis::E, Basis::H, Basis::M, Basis::P}) {
                    SymFunc f = single(from, lambda.parts(), n);
                    CHECK(basis_convert(basis_convert(f, to), from) == f);
                }
}

TEST_CASE("omega is an involution and swaps e with h") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            SymFunc e = single(Basis::E, lambda.parts(), n);
            SymFunc h = single(Basis::H, lambda.parts(), n);
            CHECK(basis_convert(omega(e), Basis::H).coeff(lambda) == QPoly(1));
            CHECK(omega(omega(e)) == e);
            CHECK(basis_convert(omega(h), Basis::E).coeff(lambda) == QPoly(1));
        }
    // omega(p_k) = (-1)^(k-1) p_k
    for (int k = 1; k <= 6; ++k) {
        SymFunc p = single(Basis::P, {k}, k);
        QPoly expect(k % 2 == 1 ? 1 : -1);
        CHECK(omega(p).coeff(Partition({k})) == expect);
    }
}

TEST_CASE("hall inner product") {
    // <p_lambda, p_mu> = z_lambda delta
    for (int n = 1; n <= 5; ++n)
        for (const Partition& a : partitions_of(n))
            for (const Partition& b : partitions_of(n)) {
                QPoly v = hall_inner(single(Basis::P, a.parts(), n), single(Basis::P, b.parts(), n));
                if (a == b) CHECK(v == QPoly(mpq_class(a.z_number())));
                else CHECK(v.is_zero());
            }
    // <h_lambda, m_mu> = delta
    CHECK(hall_inner(single(Basis::H, {2, 1}, 3), single(Basis::M, {2, 1}, 3)) == QPoly(1));
    CHECK(hall_inner(single(Basis::H, {2, 1}, 3), single(Basis::M, {1, 1, 1}, 3)).is_zero());
}

TEST_CASE("monomial data round trip and symmetry check") {
    SymFunc f(Basis::M, 3);
    f.add(Partition({2, 1}), QPoly(3));
    f.add(Partition({1, 1, 1}), to_qpoly(WeightPoly::ra()));
    auto expanded = expand_in_variables(f, 3);
    // m21 in 3 variables has 6 monomials, m111 has 1
    CHECK(expanded.size() == 7);
    std::map<XMonomial, QPoly> data(expanded.begin(), expanded.end());
    CHECK(from_monomial_data_q(3, data) == f);
    // breaking one orbit member must throw
    data[XMonomial{{1, 2}, {2, 1}}] += QPoly(1);
    CHECK_THROWS(from_monomial_data_q(3, data));
}

TEST_CASE("symfunc json round trip") {
    SymFunc f(Basis::E, 3);
    f.add(Partition({2, 1}), to_qpoly(WeightPoly::ra() * 2 + WeightPoly::ld()));
    CHECK(symfunc_from_json(symfunc_to_json(f)) == f);
}

TEST_CASE("stpoly arithmetic and substitution") {
    STPoly p = STPoly::s(2) + STPoly::t(1) * STPoly(3);
    CHECK(p.substitute(WeightPoly(1), WeightPoly(1)) == WeightPoly(4));
    CHECK((p * p).substitute(WeightPoly(1), WeightPoly(1)) == WeightPoly(16));
    STPoly q = p.at_s1();
    CHECK(q.substitute(WeightPoly(0), WeightPoly(1)) == WeightPoly(4));
    CHECK((p - p).is_zero());
}

TEST_CASE("word formula at n = 3") {
    auto f = sw_formula(3);
    REQUIRE(f.size() == 2);
    // (1 + t + t^2) e_3 + t e_21
    STPoly e3 = f.at(Partition({3}));
    STPoly e21 = f.at(Partition({2, 1}));
    STPoly want3;
    want3.add(0, 0, WeightPoly(1));
    want3.add(0, 1, WeightPoly(1));
    want3.add(0, 2, WeightPoly(1));
    CHECK(e3.at_s1() == want3);
    STPoly want21;
    want21.add(0, 1, WeightPoly(1));
    CHECK(e21.at_s1() == want21);
    // bihomogeneous of degree n-1 = 2 in (s,t) jointly
    for (const auto& [e, c] : e3.terms()) CHECK(e.first + e.second == 2);
    for (const auto& [e, c] : e21.terms()) CHECK(e.first + e.second == 2);
}

TEST_CASE("word formula matches brute force in the x1 = ... = xk = 1 count") {
    // summing over all monomials of the expansion recovers the word count
    for (int n = 2; n <= 5; ++n) {
        auto f = sw_formula(n);
        mpz_class total = 0;
        for (const auto& [pi, stp] : f) {
            // e_pi at x1..xn = 1 in n variables: product of binomials C(n, part)
            mpz_class e_val = 1;
            for (int part : pi.parts()) e_val *= binomial(n, part);
            WeightPoly at_t1 = WeightPoly(e_val) * stp.substitute(WeightPoly(1), WeightPoly(1));
            total += at_t1.coeff({0, 0, 0, 0});
        }
        mpz_class words = n;  // k = n: n(n-1)^(n-1)
        for (int i = 1; i < n; ++i) words *= n - 1;
        CHECK(total == words);
    }
}
