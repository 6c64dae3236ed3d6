#pragma once

// Finite-group character tables with power maps, over exact cyclotomic
// arithmetic. Ships the small fixture groups used by the dichotomy lab.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/cyclotomic.hpp"
#include "gspin/rational.hpp"

namespace gspin {

using ClassFunction = std::vector<CycElem>; // one value per conjugacy class

struct ConjClass {
    std::size_t size = 0;
    std::size_t square = 0;            // class of g^2
    std::vector<std::size_t> powers;   // class of g^k for k = 0..exponent; may be empty
};

struct ClassFunctionTable {
    std::string name;
    std::size_t order = 0;
    std::size_t exponent = 0;
    std::vector<ConjClass> classes;
    std::vector<ClassFunction> characters; // irreducible characters, rows
    std::vector<std::string> char_names;

    std::size_t num_classes() const { return classes.size(); }

    /// Class index of g^k for g in class c.
    std::size_t power_class(std::size_t c, std::size_t k) const {
        const auto& cl = classes.at(c);
        if (!cl.powers.empty()) return cl.powers.at(k % exponent);
        // tables loaded without a full power map: iterated squaring only
        if (k == 0) return identity_class();
        std::size_t cur = c, kk = k;
        while (kk > 1) {
            if (kk % 2 != 0)
                throw std::domain_error("power map beyond squares is not available");
            cur = classes.at(cur).square;
            kk /= 2;
        }
        return cur;
    }

    std::size_t identity_class() const { return 0; } // convention: class 0 is {e}

    /// (1/|G|) sum_c |c| f(c) conj(g(c))
    CycElem inner_product(const ClassFunction& f, const ClassFunction& g) const {
        CycElem s;
        for (std::size_t c = 0; c < num_classes(); ++c)
            s += Rat(static_cast<long long>(classes[c].size)) * (f[c] * g[c].conj());
        return Rat(1, static_cast<long long>(order)) * s;
    }

    const ClassFunction& character(const std::string& name) const {
        for (std::size_t i = 0; i < characters.size(); ++i)
            if (char_names[i] == name) return characters[i];
        throw std::invalid_argument("no character named " + name + " in " + this->name);
    }

    long long degree(const ClassFunction& f) const {
        CycElem v = f.at(identity_class());
        Rat r = v.rational_value();
        if (r.denominator() != 1) throw std::domain_error("character degree is not an integer");
        return r.numerator();
    }

    struct ValidationReport {
        bool sizes_ok = false;       // sum of class sizes = |G|
        bool degrees_ok = false;     // sum of squared degrees = |G|
        bool orthogonality_ok = false; // <chi_i, chi_j> = delta_ij
        bool pass = false;
    };

    ValidationReport validate() const {
        ValidationReport rep;
        std::size_t total = 0;
        for (const auto& c : classes) total += c.size;
        rep.sizes_ok = (total == order);
        long long degsq = 0;
        for (const auto& ch : characters) {
            long long d = degree(ch);
            degsq += d * d;
        }
        rep.degrees_ok = (degsq == static_cast<long long>(order));
        rep.orthogonality_ok = true;
        for (std::size_t i = 0; i < characters.size() && rep.orthogonality_ok; ++i)
            for (std::size_t j = 0; j < characters.size(); ++j) {
                CycElem v = inner_product(characters[i], characters[j]);
                if (v != CycElem(Rat(i == j ? 1 : 0))) {
                    rep.orthogonality_ok = false;
                    break;
                }
            }
        rep.pass = rep.sizes_ok && rep.degrees_ok && rep.orthogonality_ok;
        return rep;
    }
};

namespace tables {

namespace detail {

inline ClassFunction rational_row(const std::vector<long long>& v) {
    ClassFunction f;
    for (auto x : v) f.emplace_back(Rat(x));
    return f;
}

/// powers[k] for a cyclic pattern: class of g^k determined by k mod period.
inline std::vector<std::size_t> cyclic_powers(std::size_t exponent,
                                              const std::vector<std::size_t>& pattern) {
    std::vector<std::size_t> p(exponent + 1);
    for (std::size_t k = 0; k <= exponent; ++k) p[k] = pattern[k % pattern.size()];
    return p;
}

} // namespace detail

inline ClassFunctionTable cyclic(std::size_t n) {
    ClassFunctionTable t;
    t.name = "C" + std::to_string(n);
    t.order = n;
    t.exponent = n;
    for (std::size_t c = 0; c < n; ++c) {
        ConjClass cl;
        cl.size = 1;
        cl.square = (2 * c) % n;
        std::vector<std::size_t> pat;
        for (std::size_t k = 0; k < n; ++k) pat.push_back((c * k) % n);
        cl.powers = detail::cyclic_powers(n, pat);
        t.classes.push_back(cl);
    }
    for (std::size_t j = 0; j < n; ++j) {
        ClassFunction f;
        for (std::size_t c = 0; c < n; ++c)
            f.push_back(CycElem::zeta(n, static_cast<long long>((j * c) % n)));
        t.characters.push_back(f);
        t.char_names.push_back(j == 0 ? "triv" : "z" + std::to_string(j));
    }
    return t;
}

inline ClassFunctionTable s3() {
    ClassFunctionTable t;
    t.name = "S3";
    t.order = 6;
    t.exponent = 6;
    t.classes = {
        {1, 0, detail::cyclic_powers(6, {0})},
        {3, 0, detail::cyclic_powers(6, {0, 1})},          // transpositions
        {2, 2, detail::cyclic_powers(6, {0, 2, 2})},       // 3-cycles
    };
    t.characters = {detail::rational_row({1, 1, 1}), detail::rational_row({1, -1, 1}),
                    detail::rational_row({2, 0, -1})};
    t.char_names = {"triv", "sgn", "2dim"};
    return t;
}

inline ClassFunctionTable d4() {
    ClassFunctionTable t;
    t.name = "D4";
    t.order = 8;
    t.exponent = 4;
    // classes: e, r^2, {r, r^3}, {s, r^2 s}, {rs, r^3 s}
    t.classes = {
        {1, 0, detail::cyclic_powers(4, {0})},
        {1, 0, detail::cyclic_powers(4, {0, 1})},
        {2, 1, detail::cyclic_powers(4, {0, 2, 1, 2})},
        {2, 0, detail::cyclic_powers(4, {0, 3})},
        {2, 0, detail::cyclic_powers(4, {0, 4})},
    };
    t.characters = {detail::rational_row({1, 1, 1, 1, 1}),
                    detail::rational_row({1, 1, 1, -1, -1}),
                    detail::rational_row({1, 1, -1, 1, -1}),
                    detail::rational_row({1, 1, -1, -1, 1}),
                    detail::rational_row({2, -2, 0, 0, 0})};
    t.char_names = {"triv", "det2", "b", "ab", "2dim"};
    return t;
}

inline ClassFunctionTable q8() {
    ClassFunctionTable t;
    t.name = "Q8";
    t.order = 8;
    t.exponent = 4;
    // classes: e, -1, {+-i}, {+-j}, {+-k}
    t.classes = {
        {1, 0, detail::cyclic_powers(4, {0})},
        {1, 0, detail::cyclic_powers(4, {0, 1})},
        {2, 1, detail::cyclic_powers(4, {0, 2, 1, 2})},
        {2, 1, detail::cyclic_powers(4, {0, 3, 1, 3})},
        {2, 1, detail::cyclic_powers(4, {0, 4, 1, 4})},
    };
    t.characters = {detail::rational_row({1, 1, 1, 1, 1}),
                    detail::rational_row({1, 1, 1, -1, -1}),
                    detail::rational_row({1, 1, -1, 1, -1}),
                    detail::rational_row({1, 1, -1, -1, 1}),
                    detail::rational_row({2, -2, 0, 0, 0})};
    t.char_names = {"triv", "li", "lj", "lk", "2dim"};
    return t;
}

inline ClassFunctionTable s4() {
    ClassFunctionTable t;
    t.name = "S4";
    t.order = 24;
    t.exponent = 12;
    // classes: e, (12), (12)(34), (123), (1234)
    t.classes = {
        {1, 0, detail::cyclic_powers(12, {0})},
        {6, 0, detail::cyclic_powers(12, {0, 1})},
        {3, 0, detail::cyclic_powers(12, {0, 2})},
        {8, 3, detail::cyclic_powers(12, {0, 3, 3})},
        {6, 2, detail::cyclic_powers(12, {0, 4, 2, 4})},
    };
    t.characters = {detail::rational_row({1, 1, 1, 1, 1}),
                    detail::rational_row({1, -1, 1, 1, -1}),
                    detail::rational_row({2, 0, 2, -1, 0}),
                    detail::rational_row({3, 1, -1, 0, -1}),
                    detail::rational_row({3, -1, -1, 0, 1})};
    t.char_names = {"triv", "sgn", "2dim", "3dim", "3dimsgn"};
    return t;
}

inline ClassFunctionTable c2() { return cyclic(2); }
inline ClassFunctionTable c3() { return cyclic(3); }
inline ClassFunctionTable c4() { return cyclic(4); }

inline std::vector<ClassFunctionTable> all_builtin() {
    return {c2(), c3(), c4(), s3(), d4(), q8(), s4()};
}

inline ClassFunctionTable builtin(const std::string& name) {
    for (auto& t : all_builtin())
        if (t.name == name) return t;
    throw std::invalid_argument("unknown group " + name);
}

} // namespace tables

} // namespace gspin
