#pragma once

// Unramified local transfer from GSpin(2n+1), GSpin(2n), GSpin*(2n) to
// GL(2n): inducing character lists as monomial multisets, the dual-group
// eigenvalue oracle, and the central-character / contragredient identities.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/monomial.hpp"

namespace gspin {

enum class SatakeCase { odd_split, even_split, even_quasisplit };

inline std::string to_string(SatakeCase c) {
    switch (c) {
        case SatakeCase::odd_split: return "odd_split";
        case SatakeCase::even_split: return "even_split";
        case SatakeCase::even_quasisplit: return "even_quasisplit";
    }
    return "?";
}

struct SatakeDatum {
    std::size_t n = 0;
    SatakeCase cas = SatakeCase::odd_split;
    std::vector<CharacterMonomial> chars; // chi_0 (central), chi_1, ..., chi_n

    /// Datum over the formal symbols chi0..chin. In the quasi-split case
    /// chi_n stands for the descent of the torus character through the norm
    /// and carries the relation chi_n^2 = chi_0.
    static SatakeDatum generic(std::size_t n, SatakeCase cas) {
        if (n < 1) throw std::invalid_argument("SatakeDatum: n must be >= 1");
        if (cas != SatakeCase::odd_split && n < 2)
            throw std::invalid_argument("SatakeDatum: even cases need n >= 2");
        SatakeDatum d;
        d.n = n;
        d.cas = cas;
        for (std::size_t i = 0; i <= n; ++i)
            d.chars.push_back(CharacterMonomial::symbol("chi" + std::to_string(i)));
        return d;
    }

    const CharacterMonomial& central() const { return chars.at(0); }

    void validate() const {
        if (chars.size() != n + 1)
            throw std::invalid_argument("SatakeDatum: need n+1 characters");
        if (n < 1 || (cas != SatakeCase::odd_split && n < 2))
            throw std::invalid_argument("SatakeDatum: invalid case/rank combination");
    }
};

/// A matrix with one nonzero monomial entry per column: column j carries
/// weight[j] into row dest[j]. Exactly what a Satake class looks like on
/// the diagonal torus, possibly twisted by the involution h.
struct MonomialMatrix {
    std::vector<std::size_t> dest;
    std::vector<CharacterMonomial> weight;

    std::size_t dim() const { return dest.size(); }

    /// Eigenvalue multiset via cycle decomposition: a k-cycle with weight
    /// product p contributes the k-th roots of p. Only k <= 2 occurs here;
    /// the second square root is the first times mu (mu plays the role of -1).
    MonomialMultiset eigenvalues() const {
        MonomialMultiset out;
        std::vector<bool> seen(dim(), false);
        for (std::size_t start = 0; start < dim(); ++start) {
            if (seen[start]) continue;
            CharacterMonomial prod;
            std::size_t len = 0, j = start;
            do {
                seen[j] = true;
                prod *= weight[j];
                ++len;
                j = dest[j];
            } while (j != start);
            if (len == 1) {
                out.push_back(prod);
            } else if (len == 2) {
                auto [r, rmu] = prod.sqrt_pair();
                out.push_back(r);
                out.push_back(rmu);
            } else {
                throw std::domain_error("eigenvalues: cycle longer than 2");
            }
        }
        canonicalize(out);
        return out;
    }
};

/// The dual-group torus class diag(chi_1..chi_n, chi_0/chi_n..chi_0/chi_1),
/// composed with h (swap of the two middle coordinates) in the quasi-split case.
inline MonomialMatrix satake_class(const SatakeDatum& d) {
    d.validate();
    std::size_t n = d.n;
    MonomialMatrix m;
    m.dest.resize(2 * n);
    m.weight.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        m.weight[i] = d.chars[i + 1];
        m.weight[2 * n - 1 - i] = d.central() * d.chars[i + 1].inverse();
    }
    for (std::size_t j = 0; j < 2 * n; ++j) m.dest[j] = j;
    if (d.cas == SatakeCase::even_quasisplit) {
        m.dest[n - 1] = n;
        m.dest[n] = n - 1;
    }
    return m;
}

/// Applies chi_0 = chi_n^2 to every element; only meaningful for the
/// quasi-split case, where the relation holds by construction.
inline MonomialMultiset quasisplit_canonical(const MonomialMultiset& s, std::size_t n) {
    std::string chin = "chi" + std::to_string(n);
    MonomialMultiset out;
    for (const auto& m : s) out.push_back(m.rewrite_square("chi0", chin));
    canonicalize(out);
    return out;
}

/// GL(2n) inducing character list. The quasi-split list is
/// (chi_1,...,chi_{n-1}, chi_n mu, chi_n^{-1} chi_0, chi_{n-1}^{-1} chi_0,
/// ..., chi_1^{-1} chi_0); the split lists come from the dual-group
/// eigenvalue oracle (diagonal Satake class).
inline MonomialMultiset transfer(const SatakeDatum& d) {
    d.validate();
    if (d.cas != SatakeCase::even_quasisplit) return satake_class(d).eigenvalues();
    std::size_t n = d.n;
    MonomialMultiset out;
    for (std::size_t i = 1; i < n; ++i) out.push_back(d.chars[i]);
    out.push_back(d.chars[n] * CharacterMonomial::mu());
    out.push_back(d.chars[n].inverse() * d.central());
    for (std::size_t i = n - 1; i >= 1; --i)
        out.push_back(d.chars[i].inverse() * d.central());
    canonicalize(out);
    return out;
}

/// Oracle route for the quasi-split case: eigenvalues of h * t, with the
/// half-exponent square roots resolved through chi_n^2 = chi_0.
inline MonomialMultiset transfer_oracle(const SatakeDatum& d) {
    return satake_class(d).eigenvalues();
}

inline CharacterMonomial central_character(const MonomialMultiset& transferred) {
    CharacterMonomial p;
    for (const auto& m : transferred) p *= m;
    return p;
}

/// True iff {omega * m^{-1}} equals the list as a multiset.
inline bool contragredient_twist_check(const MonomialMultiset& transferred,
                                       const CharacterMonomial& omega) {
    MonomialMultiset dual;
    for (const auto& m : transferred) dual.push_back(omega * m.inverse());
    canonicalize(dual);
    return dual == sorted(transferred);
}

/// central_character * omega^{-n}: trivial in the split cases, mu in the
/// quasi-split case.
inline CharacterMonomial split_quasisplit_discriminator(const MonomialMultiset& transferred,
                                                        const CharacterMonomial& omega) {
    if (transferred.size() % 2 != 0)
        throw std::invalid_argument("discriminator: list length must be even");
    int n = static_cast<int>(transferred.size() / 2);
    return central_character(transferred) * omega.pow(-n);
}

} // namespace gspin
