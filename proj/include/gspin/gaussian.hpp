#pragma once

// Gaussian rationals a + b*i, enough field arithmetic for complex
// matrix realizations of small finite groups.

#include <string>

#include "gspin/rational.hpp"

namespace gspin {

struct QI {
    Rat re{0};
    Rat im{0};

    QI() = default;
    QI(Rat r) : re(r) {}
    QI(long long r) : re(r) {}
    QI(Rat r, Rat i) : re(r), im(i) {}

    static QI i() { return QI(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    friend QI operator+(const QI& a, const QI& b) { return {a.re + b.re, a.im + b.im}; }
    friend QI operator-(const QI& a, const QI& b) { return {a.re - b.re, a.im - b.im}; }
    friend QI operator-(const QI& a) { return {-a.re, -a.im}; }
    friend QI operator*(const QI& a, const QI& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QI operator/(const QI& a, const QI& b) {
        Rat n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    QI& operator+=(const QI& o) { return *this = *this + o; }
    QI& operator-=(const QI& o) { return *this = *this - o; }
    QI& operator*=(const QI& o) { return *this = *this * o; }
    QI& operator/=(const QI& o) { return *this = *this / o; }

    friend bool operator==(const QI& a, const QI& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const QI& a, const QI& b) { return !(a == b); }

    std::string str() const {
        if (im == 0) return to_string(re);
        std::string s = (re == 0) ? "" : to_string(re) + "+";
        return s + to_string(im) + "i";
    }
};

} // namespace gspin
