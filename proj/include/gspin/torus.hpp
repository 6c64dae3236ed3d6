#pragma once

// Formal torus points of GSpin groups: products e_0*(c_0) ... e_n*(c_n)
// whose coefficients live in the abelian group generated by signs and
// half-integer powers of formal symbols t_0, t_1, .... Half exponents are
// stored doubled, so every value is exact.

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/root_datum.hpp"

namespace gspin {

class CoefficientElement {
  public:
    CoefficientElement() = default;
    CoefficientElement(int sign, std::map<std::string, int> doubled)
        : sign_(sign), doubled_(std::move(doubled)) {
        if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +-1");
        prune();
    }

    /// The symbol name raised to num/2 (doubled exponent num).
    static CoefficientElement symbol(const std::string& name, int doubled_exp = 2) {
        return CoefficientElement(1, {{name, doubled_exp}});
    }
    static CoefficientElement one() { return CoefficientElement(); }
    static CoefficientElement minus_one() { return CoefficientElement(-1, {}); }

    int sign() const { return sign_; }
    const std::map<std::string, int>& doubled_exponents() const { return doubled_; }
    bool is_identity() const { return sign_ == 1 && doubled_.empty(); }

    friend CoefficientElement operator*(const CoefficientElement& a, const CoefficientElement& b) {
        CoefficientElement r = a;
        r.sign_ *= b.sign_;
        for (const auto& [sym, e] : b.doubled_) r.doubled_[sym] += e;
        r.prune();
        return r;
    }
    CoefficientElement& operator*=(const CoefficientElement& o) { return *this = *this * o; }

    CoefficientElement pow(long long k) const {
        CoefficientElement r;
        r.sign_ = (k % 2 == 0) ? 1 : sign_;
        for (const auto& [sym, e] : doubled_) r.doubled_[sym] = static_cast<int>(e * k);
        r.prune();
        return r;
    }

    CoefficientElement inverse() const { return pow(-1); }
    CoefficientElement negated() const {
        CoefficientElement r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    /// True when every exponent is an integer (no surviving half powers).
    bool integral() const {
        for (const auto& [sym, e] : doubled_)
            if (e % 2 != 0) return false;
        return true;
    }

    friend bool operator==(const CoefficientElement& a, const CoefficientElement& b) = default;

    std::string str() const {
        if (doubled_.empty()) return sign_ == 1 ? "1" : "-1";
        std::ostringstream os;
        if (sign_ == -1) os << "-";
        bool first = true;
        for (const auto& [sym, e] : doubled_) {
            if (!first) os << "*";
            first = false;
            os << sym;
            if (e != 2) {
                os << "^";
                if (e % 2 == 0)
                    os << e / 2;
                else
                    os << e << "/2";
            }
        }
        return os.str();
    }

  private:
    void prune() {
        for (auto it = doubled_.begin(); it != doubled_.end();)
            it = (it->second == 0) ? doubled_.erase(it) : std::next(it);
    }

    int sign_ = 1;
    std::map<std::string, int> doubled_;
};

struct TorusPoint {
    std::size_t rank = 0;
    Parity parity = Parity::odd;
    std::vector<CoefficientElement> coords; // length rank+1, index 0 = e_0* coordinate

    static TorusPoint identity(std::size_t rank, Parity parity) {
        TorusPoint p;
        p.rank = rank;
        p.parity = parity;
        p.coords.assign(rank + 1, CoefficientElement::one());
        return p;
    }

    /// The generic point e_0*(t_0) e_1*(t_1) ... e_rank*(t_rank).
    static TorusPoint generic(std::size_t rank, Parity parity, const std::string& prefix = "t") {
        TorusPoint p = identity(rank, parity);
        for (std::size_t i = 0; i <= rank; ++i)
            p.coords[i] = CoefficientElement::symbol(prefix + std::to_string(i));
        return p;
    }

    bool is_identity() const {
        for (const auto& c : coords)
            if (!c.is_identity()) return false;
        return true;
    }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) = default;

    std::string str() const {
        std::ostringstream os;
        bool any = false;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_identity()) continue;
            if (any) os << " ";
            any = true;
            os << "e" << i << "*(" << coords[i].str() << ")";
        }
        return any ? os.str() : "1";
    }
};

inline TorusPoint multiply(const TorusPoint& p, const TorusPoint& q) {
    if (p.rank != q.rank || p.parity != q.parity)
        throw std::invalid_argument("multiply: torus point shape mismatch");
    TorusPoint r = p;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] *= q.coords[i];
    return r;
}

inline CoefficientElement evaluate_character(const CharVector& x, const TorusPoint& p) {
    if (x.exp.size() != p.coords.size())
        throw std::invalid_argument("evaluate_character: shape mismatch");
    CoefficientElement r;
    for (std::size_t i = 0; i < x.exp.size(); ++i) r *= p.coords[i].pow(x.exp[i]);
    return r;
}

/// The point v(s) for a cocharacter v: coordinate i is s^{v_i}.
inline TorusPoint apply_cocharacter(const CocharVector& v, const CoefficientElement& s,
                                    Parity parity) {
    TorusPoint p = TorusPoint::identity(v.exp.size() - 1, parity);
    for (std::size_t i = 0; i < v.exp.size(); ++i) p.coords[i] = s.pow(v.exp[i]);
    return p;
}

/// Torus image of GSpin(2m) inside GSpin(2n+1):
/// e_0*(t_0)...e_m*(t_m) -> f_0*(t_0)...f_m*(t_m).
inline TorusPoint embed_even_in_odd(std::size_t m, std::size_t n, const TorusPoint& a) {
    if (m < 2 || m > n) throw std::invalid_argument("embed_even_in_odd: need 2 <= m <= n");
    if (a.parity != Parity::even || a.rank != m)
        throw std::invalid_argument("embed_even_in_odd: expected even-parity point of rank m");
    TorusPoint r = TorusPoint::identity(n, Parity::odd);
    for (std::size_t i = 0; i <= m; ++i) r.coords[i] = a.coords[i];
    return r;
}

/// Torus image of GSpin(2m+1) inside GSpin(2n):
/// e_0*(t_0)...e_m*(t_m) -> f_0*(-t_0) f_1*(t_1)...f_{m-1}*(t_{m-1}) f_m*(-t_m) f_n*(-1).
inline TorusPoint embed_odd_in_even(std::size_t m, std::size_t n, const TorusPoint& a) {
    if (m < 1 || m >= n) throw std::invalid_argument("embed_odd_in_even: need 1 <= m < n");
    if (a.parity != Parity::odd || a.rank != m)
        throw std::invalid_argument("embed_odd_in_even: expected odd-parity point of rank m");
    TorusPoint r = TorusPoint::identity(n, Parity::even);
    for (std::size_t i = 0; i <= m; ++i) r.coords[i] = a.coords[i];
    r.coords[0] = r.coords[0].negated();
    r.coords[m] = r.coords[m].negated();
    r.coords[n] = r.coords[n] * CoefficientElement::minus_one();
    return r;
}

/// The nontrivial element c of (derived group) ∩ (connected center), expanded
/// through the simple coroots and reduced. Both routes give e_0*(-1).
inline TorusPoint center_intersection_element(std::size_t m, Parity parity) {
    CoefficientElement neg = CoefficientElement::minus_one();
    if (parity == Parity::odd) {
        if (m < 1) throw std::invalid_argument("center_intersection_element: rank too small");
        // c = alpha_m^vee(-1) with alpha_m^vee = 2e_m* - e_0*
        CocharVector v{std::vector<long long>(m + 1, 0)};
        v.exp[m] = 2;
        v.exp[0] = -1;
        return apply_cocharacter(v, neg, Parity::odd);
    }
    if (m < 2) throw std::invalid_argument("center_intersection_element: rank too small");
    // c = alpha_{m-1}^vee(-1) alpha_m^vee(-1)
    //   = (e_{m-1}* - e_m*)(-1) (e_{m-1}* + e_m* - e_0*)(-1)
    CocharVector v1{std::vector<long long>(m + 1, 0)};
    v1.exp[m - 1] = 1;
    v1.exp[m] = -1;
    CocharVector v2{std::vector<long long>(m + 1, 0)};
    v2.exp[m - 1] = 1;
    v2.exp[m] = 1;
    v2.exp[0] = -1;
    return multiply(apply_cocharacter(v1, neg, Parity::even),
                    apply_cocharacter(v2, neg, Parity::even));
}

enum class EmbedDirection { odd_in_even, even_in_odd };

struct WellDefinedCertificate {
    TorusPoint central_route;
    TorusPoint derived_route;
    TorusPoint expected; // f_0*(-1)
    bool ok = false;
};

/// Checks that the two expressions for iota(c) agree. The central route
/// expands c through the simple coroots, reduces it to e_0*(-1), and applies
/// the center map e_0*(t) -> f_0*(t). The derived route multiplies the
/// coroot values dictated by alpha^vee(-1) = w_alpha^2.
inline WellDefinedCertificate check_embedding_well_defined(std::size_t m, std::size_t n,
                                                           EmbedDirection dir) {
    CoefficientElement neg = CoefficientElement::minus_one();
    WellDefinedCertificate cert;
    if (dir == EmbedDirection::odd_in_even) {
        if (!(m >= 1 && m < n)) throw std::invalid_argument("need 1 <= m < n");
        TorusPoint c = center_intersection_element(m, Parity::odd);
        cert.central_route = TorusPoint::identity(n, Parity::even);
        for (std::size_t i = 1; i <= m; ++i)
            if (!c.coords[i].is_identity())
                throw std::logic_error("center element did not reduce to e_0*(-1)");
        cert.central_route.coords[0] = c.coords[0];
        // (f_m - f_n)^vee(-1) * (-f_m - f_n)^vee(-1) in GSpin(2n)
        CocharVector v1{std::vector<long long>(n + 1, 0)};
        v1.exp[m] = 1;
        v1.exp[n] = -1;
        CocharVector v2{std::vector<long long>(n + 1, 0)};
        v2.exp[m] = -1;
        v2.exp[n] = -1;
        v2.exp[0] = 1;
        cert.derived_route = multiply(apply_cocharacter(v1, neg, Parity::even),
                                      apply_cocharacter(v2, neg, Parity::even));
        cert.expected = TorusPoint::identity(n, Parity::even);
    } else {
        if (!(m >= 2 && m <= n)) throw std::invalid_argument("need 2 <= m <= n");
        TorusPoint c = center_intersection_element(m, Parity::even);
        cert.central_route = TorusPoint::identity(n, Parity::odd);
        for (std::size_t i = 1; i <= m; ++i)
            if (!c.coords[i].is_identity())
                throw std::logic_error("center element did not reduce to e_0*(-1)");
        cert.central_route.coords[0] = c.coords[0];
        // (f_{m-1} - f_m)^vee(-1) * (f_{m-1} + f_m)^vee(-1) in GSpin(2n+1)
        CocharVector v1{std::vector<long long>(n + 1, 0)};
        v1.exp[m - 1] = 1;
        v1.exp[m] = -1;
        CocharVector v2{std::vector<long long>(n + 1, 0)};
        v2.exp[m - 1] = 1;
        v2.exp[m] = 1;
        v2.exp[0] = -1;
        cert.derived_route = multiply(apply_cocharacter(v1, neg, Parity::odd),
                                      apply_cocharacter(v2, neg, Parity::odd));
        cert.expected = TorusPoint::identity(n, Parity::odd);
    }
    cert.expected.coords[0] = neg;
    cert.ok = (cert.central_route == cert.expected) && (cert.derived_route == cert.expected);
    return cert;
}

} // namespace gspin
