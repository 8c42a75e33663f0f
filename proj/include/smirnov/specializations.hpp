#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "smirnov/partition.hpp"
#include "smirnov/series.hpp"
#include "smirnov/symfunc.hpp"
#include "smirnov/tree.hpp"
#include "smirnov/weight_poly.hpp"

namespace smirnov {

/// All plane binary trees on n nodes labeled by a permutation of [n];
/// count is n! * Cat_n.
void enumerate_standard_trees(int n, const std::function<bool(const Tree&)>& visit);
std::vector<Tree> standard_trees(int n);

/// Catalan numbers by the convolution recurrence.
mpz_class catalan(int n);

/// Exponential generating function for ascent/descent statistics over
/// standard trees: coefficient of x^n (as stored) is (1/n!) times the
/// statistic sum, i.e. the series is sum_n B_n x^n/n! with B_n integral.
PowerSeries<QPoly> b_series(int n_max);

/// Exponential specialization ex(e_n) = x^n/n! applied to a SymFunc.
PowerSeries<QPoly> exponential_specialization(const SymFunc& f, int n_max);

struct CheckReport {
    bool ok = true;
    std::string detail;  // empty when ok; first failure otherwise
};

/// [x_1..x_n] G at (1,1,1,1) = n! Cat_n and at (1,1,1,0) = (n+1)^{n-1},
/// read from standard-tree enumeration, for every n <= n_max.
CheckReport check_counting_identities(int n_max);

/// Both truncated functional-equation identities: the symmetric-function
/// form against E(s)/E(t) to total degree trunc in trunc variables, and
/// the exponential form against exp(((la*ra - ld*rd)B + ra+la-rd-ld)x).
CheckReport check_gessel_equation(int trunc);

/// The two Smirnov-word series identities: the elementary-basis form of
/// W(z;1,t) - 1 and the (s,t)-rehomogenization, both against brute-force
/// word sums to degree trunc.
CheckReport check_sharewachs_c3(int trunc);

/// Character table at degree n: edge-monomial row -> values per cycle type,
/// cycle types ordered as in partitions_of(n) reversed ((1^n) first).
/// chi(nu) = z_nu * [p_nu] F where F is the coefficient of the row monomial
/// in omega(G_n) (or G_n itself when apply_omega is false).
std::map<Expo4, std::vector<mpz_class>> character_table(int n, bool apply_omega = true);

/// CSV form: header row of cycle types, then graded-lex monomial rows.
std::string character_table_csv(int n, bool apply_omega = true);

}  // namespace smirnov
