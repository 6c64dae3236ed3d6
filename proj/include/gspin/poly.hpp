#pragma once

// Sparse multivariate Laurent polynomials over the rationals, plus the
// fraction field needed for exact linear algebra with formal symbols.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gspin/rational.hpp"

namespace gspin {

using MonoExp = std::map<std::string, int>;

inline MonoExp mono_mul(const MonoExp& a, const MonoExp& b) {
    MonoExp r = a;
    for (const auto& [sym, e] : b) {
        int v = (r[sym] += e);
        if (v == 0) r.erase(sym);
    }
    return r;
}

class Poly {
  public:
    Poly() = default;
    Poly(Rat c) { // NOLINT: implicit from constants is intended
        if (c != 0) terms_[{}] = c;
    }
    Poly(long long c) : Poly(Rat(c)) {}

    static Poly symbol(const std::string& name, int exp = 1) {
        Poly p;
        if (exp == 0) return Poly(1);
        p.terms_[{{name, exp}}] = 1;
        return p;
    }

    static Poly monomial(const MonoExp& m, Rat c = Rat(1)) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const std::map<MonoExp, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rat constant_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Poly operator-(const Poly& a) { return Poly(0) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) { return a.terms_ < b.terms_; }

    /// Exact division by a single-term polynomial.
    Poly divide_by_monomial(const Poly& m) const {
        if (!m.is_monomial()) throw std::domain_error("divisor is not a monomial");
        const auto& [dm, dc] = *m.terms_.begin();
        MonoExp inv;
        for (const auto& [sym, e] : dm) inv[sym] = -e;
        Poly r;
        for (const auto& [mm, cc] : terms_) r.add_term(mono_mul(mm, inv), cc / dc);
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool coeff_shown = (c != 1) || m.empty();
            if (coeff_shown) os << to_string(c);
            bool star = coeff_shown;
            for (const auto& [sym, e] : m) {
                if (star) os << "*";
                star = true;
                os << sym;
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    void add_term(const MonoExp& m, Rat c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<MonoExp, Rat> terms_;
};

/// Quotient of two polynomials. Normalization keeps the denominator's
/// leading coefficient at 1 and cancels common monomial content; full
/// multivariate gcd is not attempted, so equality tests cross-multiply.
class PolyFrac {
  public:
    PolyFrac() : num_(0), den_(1) {}
    PolyFrac(Poly p) : num_(std::move(p)), den_(1) {}
    PolyFrac(Rat c) : num_(c), den_(1) {}
    PolyFrac(long long c) : num_(c), den_(1) {}
    PolyFrac(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend PolyFrac operator+(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFrac operator-(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PolyFrac operator-(const PolyFrac& a) { return PolyFrac(-a.num_, a.den_); }
    friend PolyFrac operator*(const PolyFrac& a, const PolyFrac& b) {
        return PolyFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PolyFrac operator/(const PolyFrac& a, const PolyFrac& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return PolyFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    PolyFrac& operator+=(const PolyFrac& o) { return *this = *this + o; }
    PolyFrac& operator-=(const PolyFrac& o) { return *this = *this - o; }
    PolyFrac& operator*=(const PolyFrac& o) { return *this = *this * o; }
    PolyFrac& operator/=(const PolyFrac& o) { return *this = *this / o; }

    friend bool operator==(const PolyFrac& a, const PolyFrac& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const PolyFrac& a, const PolyFrac& b) { return !(a == b); }

    std::string str() const {
        if (den_ == Poly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        if (den_.is_monomial()) {
            num_ = num_.divide_by_monomial(den_);
            den_ = Poly(1);
            return;
        }
        // scale so the denominator's first term has coefficient 1
        Rat lead = den_.terms().begin()->second;
        Poly scale = Poly(Rat(1) / lead);
        num_ = num_ * scale;
        den_ = den_ * scale;
    }

    Poly num_;
    Poly den_;
};

} // namespace gspin
