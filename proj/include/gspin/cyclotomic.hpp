#pragma once

// Exact arithmetic in Q(zeta_N): elements are rational-coefficient vectors
// reduced modulo the N-th cyclotomic polynomial. No floating point.

#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/rational.hpp"

namespace gspin {

namespace cyc_detail {

using Coeffs = std::vector<Rat>; // index = power of x, no trailing zeros

inline void trim(Coeffs& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Exact quotient; throws if the division leaves a remainder.
inline Coeffs div_exact(Coeffs num, const Coeffs& den) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    Coeffs q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size()) {
        Rat c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        trim(num);
    }
    if (!num.empty()) throw std::domain_error("polynomial division is not exact");
    trim(q);
    return q;
}

inline const Coeffs& cyclotomic_poly(std::size_t n) {
    static std::map<std::size_t, Coeffs> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Coeffs xn_minus_1(n + 1, Rat(0));
    xn_minus_1[0] = Rat(-1);
    xn_minus_1[n] = Rat(1);
    Coeffs p = xn_minus_1;
    for (std::size_t d = 1; d < n; ++d)
        if (n % d == 0) p = div_exact(p, cyclotomic_poly(d));
    return cache.emplace(n, std::move(p)).first->second;
}

} // namespace cyc_detail

/// An element of Q(zeta_N) in the basis 1, zeta, ..., zeta^{phi(N)-1}.
class CycElem {
  public:
    CycElem() : n_(1) {}
    CycElem(Rat r) : n_(1) {
        if (r != 0) coeffs_ = {r};
    }
    CycElem(long long r) : CycElem(Rat(r)) {}

    static CycElem zeta(std::size_t n, long long power = 1) {
        CycElem e;
        e.n_ = n;
        long long k = ((power % static_cast<long long>(n)) + static_cast<long long>(n)) %
                      static_cast<long long>(n);
        e.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
        e.coeffs_[static_cast<std::size_t>(k)] = Rat(1);
        e.reduce();
        return e;
    }

    std::size_t order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    bool is_rational() const { return coeffs_.size() <= 1; }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return coeffs_.empty() ? Rat(0) : coeffs_[0];
    }

    /// Galois conjugation zeta -> zeta^{-1} (complex conjugation).
    CycElem conj() const {
        CycElem r;
        r.n_ = n_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            std::size_t p = (i == 0) ? 0 : n_ - i;
            if (r.coeffs_.size() <= p) r.coeffs_.resize(p + 1, Rat(0));
            r.coeffs_[p] += coeffs_[i];
        }
        r.reduce();
        return r;
    }

    friend CycElem operator+(const CycElem& a, const CycElem& b) {
        auto [x, y] = align(a, b);
        if (y.coeffs_.size() > x.coeffs_.size()) x.coeffs_.resize(y.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < y.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        x.reduce();
        return x;
    }
    friend CycElem operator-(const CycElem& a, const CycElem& b) { return a + (-b); }
    friend CycElem operator-(const CycElem& a) {
        CycElem r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend CycElem operator*(const CycElem& a, const CycElem& b) {
        auto [x, y] = align(a, b);
        x.coeffs_ = cyc_detail::mul(x.coeffs_, y.coeffs_);
        x.reduce();
        return x;
    }
    friend CycElem operator*(const Rat& c, const CycElem& a) { return CycElem(c) * a; }
    CycElem& operator+=(const CycElem& o) { return *this = *this + o; }
    CycElem& operator-=(const CycElem& o) { return *this = *this - o; }
    CycElem& operator*=(const CycElem& o) { return *this = *this * o; }

    friend bool operator==(const CycElem& a, const CycElem& b) {
        auto [x, y] = align(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (i == 0 || coeffs_[i] != 1) os << to_string(coeffs_[i]);
            if (i > 0) {
                if (coeffs_[i] != 1) os << "*";
                os << "z" << n_;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void reduce() {
        const auto& phi = cyc_detail::cyclotomic_poly(n_);
        std::size_t deg = phi.size() - 1;
        while (coeffs_.size() > deg) {
            // x^top = x^{top-deg} * (x^deg - phi) since phi is monic
            Rat lead = coeffs_.back();
            std::size_t shift = coeffs_.size() - 1 - deg;
            coeffs_.pop_back();
            for (std::size_t i = 0; i < deg; ++i) coeffs_[shift + i] -= lead * phi[i];
        }
        cyc_detail::trim(coeffs_);
    }

    /// Embeds both elements into Q(zeta_lcm).
    static std::pair<CycElem, CycElem> align(const CycElem& a, const CycElem& b) {
        if (a.n_ == b.n_) return {a, b};
        std::size_t l = std::lcm(a.n_, b.n_);
        return {a.raise(l), b.raise(l)};
    }

    CycElem raise(std::size_t l) const {
        if (l == n_) return *this;
        std::size_t k = l / n_;
        CycElem r;
        r.n_ = l;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (r.coeffs_.size() <= i * k) r.coeffs_.resize(i * k + 1, Rat(0));
            r.coeffs_[i * k] += coeffs_[i];
        }
        r.reduce();
        return r;
    }

    std::size_t n_;
    std::vector<Rat> coeffs_;
};

} // namespace gspin
