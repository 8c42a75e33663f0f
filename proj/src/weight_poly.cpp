#include "smirnov/weight_poly.hpp"

#include <sstream>

#include <json.hpp>

namespace smirnov {

QPoly to_qpoly(const WeightPoly& p) {
    QPoly q;
    for (const auto& [e, c] : p.terms()) q += QPoly::monomial(e, mpq_class(c));
    return q;
}

WeightPoly to_weight_poly(const QPoly& p) {
    WeightPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1)
            throw std::domain_error("to_weight_poly: non-integer coefficient " + c.get_str());
        r += WeightPoly::monomial(e, c.get_num());
    }
    return r;
}

namespace {

constexpr const char* kVarNames[4] = {"ra", "rd", "la", "ld"};

template <typename Coeff>
std::string poly_to_string(const SparsePoly4<Coeff>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coeff abs_c = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_var = e[0] || e[1] || e[2] || e[3];
        bool coeff_shown = !(abs_c == 1) || !has_var;
        if (coeff_shown) out << abs_c;
        bool need_star = coeff_shown;
        for (int i = 0; i < 4; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << kVarNames[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

}  // namespace

std::string to_string(const WeightPoly& p) { return poly_to_string(p); }
std::string to_string(const QPoly& p) { return poly_to_string(p); }

nlohmann::json weight_poly_to_json(const WeightPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"e", {e[0], e[1], e[2], e[3]}}, {"c", c.get_str()}});
    return arr;
}

WeightPoly weight_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight poly json: expected array");
    WeightPoly p;
    for (const auto& term : j) {
        const auto& e = term.at("e");
        if (!e.is_array() || e.size() != 4)
            throw std::invalid_argument("weight poly json: bad exponent vector");
        Expo4 ev{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()};
        for (int x : ev)
            if (x < 0) throw std::invalid_argument("weight poly json: negative exponent");
        p += WeightPoly::monomial(ev, mpz_class(term.at("c").get<std::string>()));
    }
    return p;
}

}  // namespace smirnov
