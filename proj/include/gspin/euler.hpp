#pragma once

// Unramified local L-factors as inverse-root multisets: the factor is
// prod over the multiset of (1 - e X)^{-1} at X = q^{-s}. Products of
// factors correspond to multiset unions.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gspin/monomial.hpp"
#include "gspin/satake.hpp"

namespace gspin {

struct LocalFactor {
    MonomialMultiset inverse_roots; // sorted
    bool doubled_variable = false;  // factor lives at 2s; rendering maps X -> X^2

    static LocalFactor from(MonomialMultiset roots, bool doubled = false) {
        canonicalize(roots);
        return {std::move(roots), doubled};
    }

    friend LocalFactor operator*(const LocalFactor& a, const LocalFactor& b) {
        if (a.doubled_variable != b.doubled_variable)
            throw std::invalid_argument("cannot multiply factors at different variables");
        MonomialMultiset u = a.inverse_roots;
        u.insert(u.end(), b.inverse_roots.begin(), b.inverse_roots.end());
        return from(std::move(u), a.doubled_variable);
    }

    friend bool operator==(const LocalFactor& a, const LocalFactor& b) = default;

    std::string str() const {
        if (inverse_roots.empty()) return "1";
        const char* var = doubled_variable ? "X^2" : "X";
        std::ostringstream os;
        for (std::size_t i = 0; i < inverse_roots.size(); ++i) {
            if (i) os << " ";
            os << "(1 - ";
            if (!inverse_roots[i].is_one()) os << inverse_roots[i].str() << "*";
            os << var << ")^-1";
        }
        return os.str();
    }
};

inline LocalFactor standard_factor(const MonomialMultiset& s) { return LocalFactor::from(s); }

/// L(s, S x T) twisted: inverse roots {a b twist : a in S, b in T}.
inline LocalFactor tensor_factor(const MonomialMultiset& s, const MonomialMultiset& t,
                                 const CharacterMonomial& twist = {}) {
    MonomialMultiset out;
    out.reserve(s.size() * t.size());
    for (const auto& a : s)
        for (const auto& b : t) out.push_back(a * b * twist);
    return LocalFactor::from(std::move(out));
}

/// sym^2: products s_i s_j with i <= j over the canonical ordering of S.
inline LocalFactor sym2_factor(MonomialMultiset s, const CharacterMonomial& twist = {}) {
    canonicalize(s);
    MonomialMultiset out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i; j < s.size(); ++j) out.push_back(s[i] * s[j] * twist);
    return LocalFactor::from(std::move(out));
}

/// wedge^2: products s_i s_j with i < j.
inline LocalFactor wedge2_factor(MonomialMultiset s, const CharacterMonomial& twist = {}) {
    canonicalize(s);
    MonomialMultiset out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) out.push_back(s[i] * s[j] * twist);
    return LocalFactor::from(std::move(out));
}

/// L(S x S, twist) = sym^2(S, twist) * wedge^2(S, twist) as multisets.
inline bool check_tensor_factorization(const MonomialMultiset& s,
                                       const CharacterMonomial& twist = {}) {
    return tensor_factor(s, s, twist) == sym2_factor(s, twist) * wedge2_factor(s, twist);
}

/// Order of the pole at X = 1: multiplicity of the trivial inverse root.
inline std::size_t pole_multiplicity_at_one(const LocalFactor& f) {
    return static_cast<std::size_t>(
        std::count_if(f.inverse_roots.begin(), f.inverse_roots.end(),
                      [](const CharacterMonomial& m) { return m.is_one(); }));
}

struct UnramifiedRatio {
    LocalFactor numerator;   // L(s, pi x tau)
    LocalFactor denominator; // L(2s, tau, wedge^2 or sym^2 twisted by omega^-1)
};

/// Numerator L(s, pi x tau); denominator wedge^2 (odd case) or sym^2 (even
/// cases) of tau twisted by omega^{-1}, carried at the doubled variable.
inline UnramifiedRatio unramified_ratio(const SatakeDatum& pi, const MonomialMultiset& tau,
                                        const CharacterMonomial& omega) {
    if (tau.size() > pi.n)
        throw std::invalid_argument("unramified_ratio: need m <= n");
    UnramifiedRatio r;
    r.numerator = tensor_factor(transfer(pi), tau);
    LocalFactor den = (pi.cas == SatakeCase::odd_split)
                          ? wedge2_factor(tau, omega.inverse())
                          : sym2_factor(tau, omega.inverse());
    den.doubled_variable = true;
    r.denominator = den;
    return r;
}

} // namespace gspin
