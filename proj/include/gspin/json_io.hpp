#pragma once

// JSON serialization for the on-disk formats: root data, torus points,
// Satake data, exact matrices, character tables, and bound tables.

#include <json.hpp>

#include "gspin/character_table.hpp"
#include "gspin/matrix.hpp"
#include "gspin/monomial.hpp"
#include "gspin/poly.hpp"
#include "gspin/ramanujan.hpp"
#include "gspin/root_datum.hpp"
#include "gspin/satake.hpp"
#include "gspin/torus.hpp"

namespace gspin {

using json = nlohmann::json;

// ---- BasedRootDatum ----

inline json to_json(const BasedRootDatum& rd) {
    json j;
    j["rank"] = rd.rank;
    j["parity"] = to_string(rd.parity);
    j["roots"] = json::array();
    for (const auto& r : rd.roots) j["roots"].push_back(r.exp);
    j["coroots"] = json::array();
    for (const auto& c : rd.coroots) j["coroots"].push_back(c.exp);
    j["bijection"] = rd.bijection;
    j["simples"] = rd.simples;
    return j;
}

inline BasedRootDatum root_datum_from_json(const json& j) {
    BasedRootDatum rd;
    rd.rank = j.at("rank").get<std::size_t>();
    std::string p = j.at("parity").get<std::string>();
    if (p != "odd" && p != "even") throw std::invalid_argument("parity must be odd|even");
    rd.parity = (p == "odd") ? Parity::odd : Parity::even;
    for (const auto& r : j.at("roots")) rd.roots.push_back({r.get<std::vector<long long>>()});
    for (const auto& c : j.at("coroots"))
        rd.coroots.push_back({c.get<std::vector<long long>>()});
    rd.bijection = j.at("bijection").get<std::vector<std::size_t>>();
    rd.simples = j.at("simples").get<std::vector<std::size_t>>();
    if (rd.roots.size() != rd.coroots.size() || rd.bijection.size() != rd.roots.size())
        throw std::invalid_argument("root datum arrays inconsistent");
    for (auto s : rd.simples) rd.simple_coroots.push_back(rd.bijection.at(s));
    return rd;
}

// ---- CoefficientElement / TorusPoint ----

inline json to_json(const CoefficientElement& c) {
    json e = json::object();
    for (const auto& [sym, d] : c.doubled_exponents()) {
        if (d % 2 == 0)
            e[sym] = std::to_string(d / 2);
        else
            e[sym] = std::to_string(d) + "/2";
    }
    return json{{"sign", c.sign()}, {"exp", e}};
}

inline CoefficientElement coefficient_from_json(const json& j) {
    std::map<std::string, int> doubled;
    for (const auto& [sym, val] : j.at("exp").items()) {
        Rat r = parse_rational(val.get<std::string>());
        if (r.denominator() != 1 && r.denominator() != 2)
            throw std::invalid_argument("coefficient exponents must have denominator 1 or 2");
        doubled[sym] = static_cast<int>(r.numerator() * (2 / r.denominator()));
    }
    return CoefficientElement(j.at("sign").get<int>(), doubled);
}

inline json to_json(const TorusPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords) coords.push_back(to_json(c));
    return json{{"parity", to_string(p.parity)}, {"rank", p.rank}, {"coords", coords}};
}

inline TorusPoint torus_point_from_json(const json& j) {
    TorusPoint p;
    p.rank = j.at("rank").get<std::size_t>();
    p.parity = j.at("parity").get<std::string>() == "odd" ? Parity::odd : Parity::even;
    for (const auto& c : j.at("coords")) p.coords.push_back(coefficient_from_json(c));
    if (p.coords.size() != p.rank + 1)
        throw std::invalid_argument("torus point needs rank+1 coordinates");
    return p;
}

// ---- SatakeDatum / monomial lists ----

inline json to_json(const SatakeDatum& d) {
    json chars = json::array();
    for (const auto& c : d.chars) chars.push_back(c.str());
    return json{{"n", d.n}, {"case", to_string(d.cas)}, {"chars", chars}};
}

inline SatakeCase satake_case_from_string(const std::string& s) {
    if (s == "odd_split") return SatakeCase::odd_split;
    if (s == "even_split") return SatakeCase::even_split;
    if (s == "even_quasisplit") return SatakeCase::even_quasisplit;
    throw std::invalid_argument("unknown case " + s);
}

inline SatakeDatum satake_datum_from_json(const json& j) {
    SatakeDatum d;
    d.n = j.at("n").get<std::size_t>();
    d.cas = satake_case_from_string(j.at("case").get<std::string>());
    for (const auto& c : j.at("chars"))
        d.chars.push_back(parse_monomial(c.get<std::string>()));
    d.validate();
    return d;
}

inline json to_json(const MonomialMultiset& s) {
    json a = json::array();
    for (const auto& m : s) a.push_back(m.str());
    return a;
}

inline MonomialMultiset multiset_from_json(const json& j) {
    MonomialMultiset s;
    for (const auto& m : j) s.push_back(parse_monomial(m.get<std::string>()));
    canonicalize(s);
    return s;
}

// ---- exact matrices (row-major arrays of scalar strings) ----

inline json to_json(const Matrix<Rat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix<Rat> rat_matrix_from_json(const json& j) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) {
        std::vector<Rat> row;
        for (const auto& x : r) row.push_back(parse_rational(x.get<std::string>()));
        rows.push_back(row);
    }
    return Matrix<Rat>::from_rows(rows);
}

// ---- character tables ----

inline json to_json(const ClassFunctionTable& t) {
    json classes = json::array();
    for (const auto& c : t.classes) {
        json jc{{"size", c.size}, {"square", c.square}};
        if (!c.powers.empty()) jc["powers"] = c.powers;
        classes.push_back(jc);
    }
    json chars = json::array();
    CycElem unit = CycElem::zeta(t.exponent, 0); // aligns values into the zeta_N basis
    for (const auto& ch : t.characters) {
        json row = json::array();
        for (const auto& v : ch) {
            CycElem aligned = v * unit;
            json coeffs = json::array();
            for (const auto& c : aligned.coeffs()) coeffs.push_back(to_string(c));
            row.push_back(coeffs);
        }
        chars.push_back(row);
    }
    json j{{"order", t.order},
           {"exponent", t.exponent},
           {"classes", classes},
           {"characters", chars}};
    if (!t.name.empty()) j["name"] = t.name;
    if (!t.char_names.empty()) j["character_names"] = t.char_names;
    return j;
}

inline ClassFunctionTable table_from_json(const json& j) {
    ClassFunctionTable t;
    t.name = j.value("name", "");
    t.order = j.at("order").get<std::size_t>();
    t.exponent = j.at("exponent").get<std::size_t>();
    for (const auto& jc : j.at("classes")) {
        ConjClass c;
        c.size = jc.at("size").get<std::size_t>();
        c.square = jc.at("square").get<std::size_t>();
        if (jc.contains("powers")) c.powers = jc.at("powers").get<std::vector<std::size_t>>();
        t.classes.push_back(c);
    }
    for (const auto& row : j.at("characters")) {
        ClassFunction f;
        for (const auto& val : row) {
            CycElem v;
            std::size_t power = 0;
            for (const auto& coeff : val) {
                v += parse_rational(coeff.get<std::string>()) *
                     CycElem::zeta(t.exponent, static_cast<long long>(power));
                ++power;
            }
            f.push_back(v);
        }
        t.characters.push_back(f);
    }
    if (j.contains("character_names"))
        t.char_names = j.at("character_names").get<std::vector<std::string>>();
    else
        for (std::size_t i = 0; i < t.characters.size(); ++i)
            t.char_names.push_back("chi" + std::to_string(i));
    return t;
}

// ---- bound tables ----

inline json to_json(const BoundTable& t) {
    json j = json::object();
    for (const auto& [m, v] : t.theta) j[std::to_string(m)] = to_string(v);
    return j;
}

inline BoundTable bound_table_from_json(const json& j) {
    BoundTable t;
    for (const auto& [k, v] : j.items())
        t.theta[std::stoi(k)] = parse_rational(v.get<std::string>());
    return t;
}

} // namespace gspin
