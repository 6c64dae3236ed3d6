#pragma once

// Complex-dual side bookkeeping: the antidiagonal similitude forms defining
// GSp(2n) and GSO(2n), the outer involution h, the L-homomorphism twist,
// similitude factors, the invariant-form solver, and the wedge square.
//
// Form matrices keep their nonzero entries in {+1, -1}; that is all the
// antidiagonal conventions and the wedge pairing need, and it lets the
// similitude factor be computed without scalar division.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gspin/matrix.hpp"
#include "gspin/rational.hpp"

namespace gspin {

enum class FormKind { symmetric, alternating };

struct SimilitudeForm {
    Matrix<Rat> B;
    FormKind kind = FormKind::symmetric;
};

/// Antidiagonal alternating form of GSp(2n): +1 above the center, -1 below.
inline SimilitudeForm gsp_form(std::size_t n) {
    Matrix<Rat> B(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        B(i, 2 * n - 1 - i) = Rat(1);
        B(2 * n - 1 - i, i) = Rat(-1);
    }
    return {B, FormKind::alternating};
}

/// Antidiagonal symmetric form of GSO(2n).
inline SimilitudeForm gso_form(std::size_t n) {
    Matrix<Rat> B(2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) B(i, 2 * n - 1 - i) = Rat(1);
    return {B, FormKind::symmetric};
}

template <typename T>
Matrix<T> form_as(const Matrix<Rat>& B) {
    return map_entries(B, [](const Rat& r) {
        if (r.denominator() != 1) throw std::domain_error("form entry is not an integer");
        return T(r.numerator());
    });
}

/// The involution swapping coordinates n-1 and n (0-based) of C^{2n}.
template <typename T = Rat>
Matrix<T> outer_involution_h(std::size_t n) {
    if (n < 2) throw std::invalid_argument("outer_involution_h: need n >= 2");
    Matrix<T> h = Matrix<T>::identity(2 * n);
    h(n - 1, n - 1) = T(0);
    h(n, n) = T(0);
    h(n - 1, n) = T(1);
    h(n, n - 1) = T(1);
    return h;
}

/// (g, gamma) -> g on the Galois-trivial coset, h g h^{-1} on the other.
template <typename T>
Matrix<T> iota_L_hom(const Matrix<T>& g, bool frob_nontrivial, std::size_t n) {
    if (g.rows() != 2 * n || g.cols() != 2 * n)
        throw std::invalid_argument("iota_L_hom: matrix must be 2n x 2n");
    if (!frob_nontrivial) return g;
    Matrix<T> h = outer_involution_h<T>(n);
    return h * g * h;
}

/// mu(g) with g^T B g = mu(g) B, or nullopt when no such scalar exists.
template <typename T>
std::optional<T> similitude_factor(const Matrix<T>& g, const SimilitudeForm& form) {
    Matrix<T> B = form_as<T>(form.B);
    if (g.rows() != B.rows() || !g.square())
        throw std::invalid_argument("similitude_factor: dimension mismatch");
    Matrix<T> M = g.transpose() * B * g;
    std::optional<T> mu;
    for (std::size_t i = 0; i < B.rows() && !mu; ++i)
        for (std::size_t j = 0; j < B.cols() && !mu; ++j)
            if (!(B(i, j) == T(0))) mu = M(i, j) * B(i, j); // B entries are +-1
    if (!mu) throw std::invalid_argument("similitude_factor: zero form");
    if (M == *mu * B) return mu;
    return std::nullopt;
}

enum class FormClass { alternating, symmetric, none, ambiguous };

template <typename F>
struct FormSolution {
    FormClass cls = FormClass::none;
    Matrix<F> form;       // a representative invariant form, when one exists
    std::size_t dimension = 0; // of the full solution space
};

/// Solves g_i^T B g_i = mu_i B for all i and classifies the solution space:
/// every solution alternating / every solution symmetric / zero / mixed.
template <typename F>
FormSolution<F> invariant_form_solver(const std::vector<Matrix<F>>& generators,
                                      const std::vector<F>& similitudes) {
    if (generators.empty())
        throw std::invalid_argument("invariant_form_solver: no generators");
    if (generators.size() != similitudes.size())
        throw std::invalid_argument("invariant_form_solver: similitude count mismatch");
    std::size_t d = generators.front().rows();
    for (const auto& g : generators)
        if (!g.square() || g.rows() != d)
            throw std::invalid_argument("invariant_form_solver: generator shape mismatch");

    // unknowns B_{ab}, row index (gen, i, j)
    Matrix<F> sys(generators.size() * d * d, d * d);
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
        const auto& g = generators[gi];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::size_t row = (gi * d + i) * d + j;
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b)
                        sys(row, a * d + b) += g(a, i) * g(b, j);
                sys(row, i * d + j) -= similitudes[gi];
            }
    }

    auto basis = nullspace(sys);
    FormSolution<F> sol;
    sol.dimension = basis.size();
    if (basis.empty()) {
        sol.cls = FormClass::none;
        return sol;
    }
    bool any_sym = false, any_alt = false;
    F half = F(1) / F(2);
    for (const auto& v : basis) {
        Matrix<F> B(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) B(a, b) = v[a * d + b];
        if (!(half * (B + B.transpose())).is_zero()) any_sym = true;
        if (!(half * (B - B.transpose())).is_zero()) any_alt = true;
        if (sol.form.rows() == 0) sol.form = B;
    }
    if (any_sym && any_alt)
        sol.cls = FormClass::ambiguous;
    else
        sol.cls = any_alt ? FormClass::alternating : FormClass::symmetric;
    return sol;
}

namespace detail {
inline constexpr std::array<std::array<std::size_t, 2>, 6> wedge_basis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

/// Matrix of 2x2 minors on the basis e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4.
template <typename T>
Matrix<T> wedge_square(const Matrix<T>& a) {
    if (a.rows() != 4 || a.cols() != 4)
        throw std::invalid_argument("wedge_square: matrix must be 4 x 4");
    Matrix<T> w(6, 6);
    for (std::size_t p = 0; p < 6; ++p) {
        auto [i, j] = detail::wedge_basis[p];
        for (std::size_t q = 0; q < 6; ++q) {
            auto [k, l] = detail::wedge_basis[q];
            w(p, q) = a(i, k) * a(j, l) - a(i, l) * a(j, k);
        }
    }
    return w;
}

/// The symmetric pairing on wedge^2 C^4 induced by e1^e2^e3^e4.
inline SimilitudeForm wedge_pairing_form() {
    Matrix<Rat> B(6, 6);
    // (e_i^e_j, e_k^e_l) = sign of (i,j,k,l) when it is a permutation of 1..4
    B(0, 5) = B(5, 0) = Rat(1);  // 12,34
    B(1, 4) = B(4, 1) = Rat(-1); // 13,24
    B(2, 3) = B(3, 2) = Rat(1);  // 14,23
    return {B, FormKind::symmetric};
}

} // namespace gspin
