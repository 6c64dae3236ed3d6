#pragma once

// Formal character monomials chi0^a * chi1^b * ... * mu^e with mu^2 = 1.
// Exponents are stored doubled so that the square roots produced by the
// dual-group eigenvalue computation stay exact.

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspin {

class CharacterMonomial {
  public:
    CharacterMonomial() = default;

    static CharacterMonomial one() { return {}; }
    static CharacterMonomial symbol(const std::string& name, int exp = 1) {
        CharacterMonomial m;
        if (exp != 0) m.doubled_[name] = 2 * exp;
        return m;
    }
    static CharacterMonomial mu() {
        CharacterMonomial m;
        m.mu_exp_ = 1;
        return m;
    }

    const std::map<std::string, int>& doubled_exponents() const { return doubled_; }
    int mu_exponent() const { return mu_exp_; }
    bool is_one() const { return doubled_.empty() && mu_exp_ == 0; }

    /// Integer exponent of a symbol; throws if a half power survives.
    int exponent(const std::string& name) const {
        auto it = doubled_.find(name);
        if (it == doubled_.end()) return 0;
        if (it->second % 2 != 0) throw std::domain_error("half exponent on " + name);
        return it->second / 2;
    }

    bool integral() const {
        for (const auto& [s, d] : doubled_)
            if (d % 2 != 0) return false;
        return true;
    }

    friend CharacterMonomial operator*(const CharacterMonomial& a, const CharacterMonomial& b) {
        CharacterMonomial r = a;
        for (const auto& [s, d] : b.doubled_) {
            int v = (r.doubled_[s] += d);
            if (v == 0) r.doubled_.erase(s);
        }
        r.mu_exp_ = (r.mu_exp_ + b.mu_exp_) % 2;
        return r;
    }
    CharacterMonomial& operator*=(const CharacterMonomial& o) { return *this = *this * o; }

    CharacterMonomial pow(int k) const {
        CharacterMonomial r;
        for (const auto& [s, d] : doubled_)
            if (d * k != 0) r.doubled_[s] = d * k;
        r.mu_exp_ = ((mu_exp_ * k) % 2 + 2) % 2;
        return r;
    }
    CharacterMonomial inverse() const { return pow(-1); }

    /// Both square roots, as {root, root*mu}; mu plays the role of -1.
    std::pair<CharacterMonomial, CharacterMonomial> sqrt_pair() const {
        if (mu_exp_ != 0) throw std::domain_error("square root of a mu-twisted monomial");
        CharacterMonomial r;
        for (const auto& [s, d] : doubled_) {
            if (d % 2 != 0)
                throw std::domain_error("square root would need quarter exponents");
            r.doubled_[s] = d / 2;
        }
        CharacterMonomial r2 = r;
        r2.mu_exp_ = 1;
        return {r, r2};
    }

    /// Eliminates a symbol via sym = replacement^2 (e.g. chi0 = chin^2).
    CharacterMonomial rewrite_square(const std::string& sym,
                                     const std::string& replacement) const {
        auto it = doubled_.find(sym);
        if (it == doubled_.end()) return *this;
        CharacterMonomial r = *this;
        int d = it->second;
        r.doubled_.erase(sym);
        int v = (r.doubled_[replacement] += 2 * d);
        if (v == 0) r.doubled_.erase(replacement);
        return r;
    }

    friend bool operator==(const CharacterMonomial& a, const CharacterMonomial& b) = default;
    friend bool operator<(const CharacterMonomial& a, const CharacterMonomial& b) {
        if (a.doubled_ != b.doubled_) return a.doubled_ < b.doubled_;
        return a.mu_exp_ < b.mu_exp_;
    }

    std::string str() const {
        if (is_one()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [s, d] : doubled_) {
            if (!first) os << "*";
            first = false;
            os << s;
            if (d != 2) {
                os << "^";
                if (d % 2 == 0)
                    os << d / 2;
                else
                    os << d << "/2";
            }
        }
        if (mu_exp_ == 1) {
            if (!first) os << "*";
            os << "mu";
        }
        return os.str();
    }

  private:
    std::map<std::string, int> doubled_;
    int mu_exp_ = 0; // modulo 2
};

using MonomialMultiset = std::vector<CharacterMonomial>; // kept sorted

inline void canonicalize(MonomialMultiset& s) { std::sort(s.begin(), s.end()); }

inline MonomialMultiset sorted(MonomialMultiset s) {
    canonicalize(s);
    return s;
}

/// Parses "chi1*chi0^-1*mu" style strings (integer exponents only).
inline CharacterMonomial parse_monomial(const std::string& text) {
    CharacterMonomial m;
    if (text == "1" || text.empty()) return m;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, '*')) {
        if (tok.empty()) throw std::invalid_argument("bad monomial: " + text);
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(tok.substr(caret + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in monomial: " + text);
            }
        }
        if (name == "mu")
            m *= CharacterMonomial::mu().pow(exp);
        else
            m *= CharacterMonomial::symbol(name, exp);
    }
    return m;
}

} // namespace gspin
