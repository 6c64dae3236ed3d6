#pragma once

// Finite-image parameter lab: twisted symmetric/exterior square
// multiplicities, the odd/even dichotomy, isobaric-sum analysis, and the
// determinant-based split/quasi-split discriminant. Pole orders at s = 1
// are modeled as trivial-constituent multiplicities (Artin formalism).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/character_table.hpp"

namespace gspin {

struct FiniteParameter {
    ClassFunctionTable table;
    ClassFunction chi;   // character of the 2n-dimensional parameter
    ClassFunction omega; // linear similitude/twist character
};

namespace fp_detail {

inline long long integral_value(const CycElem& v, const char* what) {
    if (!v.is_rational())
        throw std::domain_error(std::string(what) + ": cyclotomic average is irrational");
    Rat r = v.rational_value();
    if (r.denominator() != 1)
        throw std::domain_error(std::string(what) + ": multiplicity is not an integer");
    return r.numerator();
}

/// (1/|G|) sum_g [(chi(g)^2 + eps chi(g^2))/2] omega(g)^{-1}
inline long long square_multiplicity(const FiniteParameter& p, int eps, const char* what) {
    const auto& t = p.table;
    CycElem s;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        CycElem sq = p.chi[t.classes[c].square];
        CycElem term = p.chi[c] * p.chi[c] + Rat(eps) * sq;
        s += Rat(static_cast<long long>(t.classes[c].size)) *
             (Rat(1, 2) * term * p.omega[c].conj());
    }
    long long v = integral_value(Rat(1, static_cast<long long>(t.order)) * s, what);
    if (v < 0) throw std::domain_error(std::string(what) + ": negative multiplicity");
    return v;
}

inline ClassFunction conj_times(const ClassFunctionTable& t, const ClassFunction& f,
                                const ClassFunction& g) {
    ClassFunction r;
    for (std::size_t c = 0; c < t.num_classes(); ++c) r.push_back(f[c].conj() * g[c]);
    return r;
}

} // namespace fp_detail

/// Multiplicity of the trivial representation in sym^2(chi) tensor omega^{-1}.
inline long long twisted_sym2_mult(const FiniteParameter& p) {
    return fp_detail::square_multiplicity(p, +1, "twisted_sym2_mult");
}

/// Multiplicity of the trivial representation in wedge^2(chi) tensor omega^{-1}.
inline long long twisted_wedge2_mult(const FiniteParameter& p) {
    return fp_detail::square_multiplicity(p, -1, "twisted_wedge2_mult");
}

enum class DichotomyType { odd_type, even_type, not_self_dual, reducible };

inline std::string to_string(DichotomyType d) {
    switch (d) {
        case DichotomyType::odd_type: return "odd_type (symplectic)";
        case DichotomyType::even_type: return "even_type (orthogonal)";
        case DichotomyType::not_self_dual: return "not_self_dual";
        case DichotomyType::reducible: return "reducible";
    }
    return "?";
}

struct DichotomyResult {
    DichotomyType type = DichotomyType::reducible;
    long long sym2 = 0;
    long long wedge2 = 0;
    bool self_omega_dual = false;
};

/// For irreducible chi with conj(chi) omega = chi, exactly one of the twisted
/// square multiplicities is 1; wedge -> odd (symplectic dual), sym -> even
/// (orthogonal dual). Reducible input is reported, not an error.
inline DichotomyResult dichotomy(const FiniteParameter& p) {
    DichotomyResult r;
    CycElem norm = p.table.inner_product(p.chi, p.chi);
    if (norm != CycElem(Rat(1))) {
        r.type = DichotomyType::reducible;
        return r;
    }
    r.sym2 = twisted_sym2_mult(p);
    r.wedge2 = twisted_wedge2_mult(p);
    ClassFunction dual = fp_detail::conj_times(p.table, p.chi, p.omega);
    r.self_omega_dual = (dual == p.chi);
    if (!r.self_omega_dual) {
        r.type = DichotomyType::not_self_dual;
        return r;
    }
    if (r.wedge2 + r.sym2 != 1)
        throw std::domain_error("dichotomy: self-dual irreducible with mult sum != 1");
    r.type = (r.wedge2 == 1) ? DichotomyType::odd_type : DichotomyType::even_type;
    return r;
}

struct IsobaricReport {
    bool pairwise_distinct = false;
    std::vector<bool> self_omega_dual;          // per summand
    std::vector<DichotomyType> types;           // per summand
    std::vector<long long> degrees;             // per summand
    long long aggregate_pole_order = 0;         // sum_ij <chi_i, conj(chi_j) omega>
    bool admissible = false;                    // all self-dual, same parity, distinct, deg >= 2
    std::string verdict;                        // "odd", "even", or reason for rejection
};

/// Models the isobaric image shape: each summand must be self-omega-dual of
/// the same parity type, pairwise distinct, and of dimension at least 2.
inline IsobaricReport isobaric_analysis(const ClassFunctionTable& table,
                                        const std::vector<ClassFunction>& summands,
                                        const ClassFunction& omega) {
    if (summands.empty()) throw std::invalid_argument("isobaric_analysis: no summands");
    IsobaricReport rep;
    for (const auto& s : summands)
        if (table.inner_product(s, s) != CycElem(Rat(1)))
            throw std::invalid_argument("isobaric_analysis: summand is reducible");

    rep.pairwise_distinct = true;
    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = i + 1; j < summands.size(); ++j)
            if (summands[i] == summands[j]) rep.pairwise_distinct = false;

    for (const auto& s : summands) {
        FiniteParameter p{table, s, omega};
        DichotomyResult d = dichotomy(p);
        rep.self_omega_dual.push_back(d.self_omega_dual);
        rep.types.push_back(d.type);
        rep.degrees.push_back(table.degree(s));
    }

    for (std::size_t i = 0; i < summands.size(); ++i)
        for (std::size_t j = 0; j < summands.size(); ++j) {
            ClassFunction dual_j = fp_detail::conj_times(table, summands[j], omega);
            rep.aggregate_pole_order += fp_detail::integral_value(
                table.inner_product(summands[i], dual_j), "isobaric_analysis");
        }

    bool all_dual = true, degrees_ok = true, same_parity = true;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        all_dual = all_dual && rep.self_omega_dual[i];
        degrees_ok = degrees_ok && rep.degrees[i] >= 2;
        same_parity = same_parity && (rep.types[i] == rep.types[0]);
    }
    if (!all_dual)
        rep.verdict = "rejected: summand not self-omega-dual";
    else if (!rep.pairwise_distinct)
        rep.verdict = "rejected: repeated summand";
    else if (!degrees_ok)
        rep.verdict = "rejected: one-dimensional summand";
    else if (!same_parity)
        rep.verdict = "rejected: mixed parity types";
    else {
        rep.admissible = true;
        rep.verdict = (rep.types[0] == DichotomyType::odd_type) ? "odd" : "even";
    }
    return rep;
}

/// det(chi) omega^{-n} for 2n-dimensional chi; must square to the trivial
/// class function. Trivial <-> split model, nontrivial <-> quasi-split.
inline ClassFunction split_vs_quasisplit(const FiniteParameter& p) {
    const auto& t = p.table;
    ClassFunction dual = fp_detail::conj_times(t, p.chi, p.omega);
    if (dual != p.chi)
        throw std::domain_error("split_vs_quasisplit: chi is not self-omega-dual");
    long long d = t.degree(p.chi);
    if (d <= 0 || d % 2 != 0)
        throw std::domain_error("split_vs_quasisplit: degree must be even and positive");
    long long n = d / 2;

    // determinant character via Newton's identities from p_k = chi(g^k)
    ClassFunction det;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        std::vector<CycElem> e(static_cast<std::size_t>(d) + 1);
        e[0] = CycElem(Rat(1));
        for (long long k = 1; k <= d; ++k) {
            CycElem acc;
            for (long long i = 1; i <= k; ++i) {
                CycElem pk = p.chi[t.power_class(c, static_cast<std::size_t>(i))];
                CycElem term = e[static_cast<std::size_t>(k - i)] * pk;
                acc += (i % 2 == 1) ? term : -term;
            }
            e[static_cast<std::size_t>(k)] = Rat(1, k) * acc;
        }
        det.push_back(e[static_cast<std::size_t>(d)]);
    }

    ClassFunction mu;
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
        CycElem w = CycElem(Rat(1));
        for (long long i = 0; i < n; ++i) w *= p.omega[c].conj(); // omega^{-n}
        mu.push_back(det[c] * w);
    }
    for (std::size_t c = 0; c < t.num_classes(); ++c)
        if (mu[c] * mu[c] != CycElem(Rat(1)))
            throw std::domain_error("split_vs_quasisplit: mu is not quadratic");
    return mu;
}

inline bool is_trivial(const ClassFunction& f) {
    for (const auto& v : f)
        if (v != CycElem(Rat(1))) return false;
    return true;
}

} // namespace gspin
