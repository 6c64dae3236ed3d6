#pragma once

// Based root data of the general spin groups GSpin(2n+1) (type B_n layout)
// and GSpin(2n) (type D_n layout). Lattice vectors have n+1 entries; index 0
// is the basis label attached to the connected center.
//
// The root-datum axioms checked here are the standard ones: <alpha,alpha^vee> = 2
// and stability of R, R^vee under the reflections s_alpha, s_{alpha^vee}.

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspin {

enum class Parity { odd, even };

inline std::string to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

struct CharVector {
    std::vector<long long> exp; // index 0 = e0

    friend bool operator==(const CharVector& a, const CharVector& b) = default;
    friend auto operator<=>(const CharVector& a, const CharVector& b) = default;
};

struct CocharVector {
    std::vector<long long> exp; // index 0 = e0*

    friend bool operator==(const CocharVector& a, const CocharVector& b) = default;
    friend auto operator<=>(const CocharVector& a, const CocharVector& b) = default;
};

inline long long pairing(const CharVector& x, const CocharVector& y) {
    if (x.exp.size() != y.exp.size())
        throw std::invalid_argument("pairing: length mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < x.exp.size(); ++i) s += x.exp[i] * y.exp[i];
    return s;
}

inline CharVector sub_scaled(const CharVector& x, long long c, const CharVector& a) {
    CharVector r = x;
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] -= c * a.exp[i];
    return r;
}

inline CocharVector sub_scaled(const CocharVector& y, long long c, const CocharVector& a) {
    CocharVector r = y;
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] -= c * a.exp[i];
    return r;
}

struct BasedRootDatum {
    std::size_t rank = 0;
    Parity parity = Parity::odd;
    std::vector<CharVector> roots;     // sorted lexicographically
    std::vector<CocharVector> coroots; // sorted lexicographically
    std::vector<std::size_t> bijection; // roots[i] <-> coroots[bijection[i]]
    std::vector<std::size_t> simples;        // indices into roots
    std::vector<std::size_t> simple_coroots; // indices into coroots, aligned with simples

    const CocharVector& coroot_of(std::size_t root_index) const {
        return coroots[bijection[root_index]];
    }

    /// s_alpha(x) = x - <x, alpha^vee> alpha
    CharVector reflect(const CharVector& x, std::size_t root_index) const {
        return sub_scaled(x, pairing(x, coroot_of(root_index)), roots[root_index]);
    }

    /// s_{alpha^vee}(y) = y - <alpha, y> alpha^vee
    CocharVector coreflect(const CocharVector& y, std::size_t root_index) const {
        return sub_scaled(y, pairing(roots[root_index], y), coroot_of(root_index));
    }
};

namespace detail {

inline CharVector basis_char(std::size_t len, std::size_t i, long long c = 1) {
    CharVector v{std::vector<long long>(len, 0)};
    v.exp[i] = c;
    return v;
}

inline void finalize(BasedRootDatum& rd,
                     std::vector<std::pair<CharVector, CocharVector>> pairs,
                     const std::vector<CharVector>& simple_roots) {
    std::sort(pairs.begin(), pairs.end());
    for (auto& [r, c] : pairs) rd.roots.push_back(r);
    std::vector<CocharVector> cs;
    for (auto& [r, c] : pairs) cs.push_back(c);
    rd.coroots = cs;
    std::sort(rd.coroots.begin(), rd.coroots.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto it = std::lower_bound(rd.coroots.begin(), rd.coroots.end(), pairs[i].second);
        rd.bijection.push_back(static_cast<std::size_t>(it - rd.coroots.begin()));
    }
    for (const auto& s : simple_roots) {
        auto it = std::lower_bound(rd.roots.begin(), rd.roots.end(), s);
        if (it == rd.roots.end() || *it != s)
            throw std::logic_error("simple root not in root list");
        std::size_t idx = static_cast<std::size_t>(it - rd.roots.begin());
        rd.simples.push_back(idx);
        rd.simple_coroots.push_back(rd.bijection[idx]);
    }
}

} // namespace detail

/// GSpin(2n+1): roots +-(e_i +- e_j), +-e_i; coroot of +-e_i is +-(2e_i* - e_0*).
inline BasedRootDatum build_gspin_odd(std::size_t n) {
    if (n < 1) throw std::invalid_argument("build_gspin_odd: rank must be >= 1");
    BasedRootDatum rd;
    rd.rank = n;
    rd.parity = Parity::odd;
    std::size_t len = n + 1;
    std::vector<std::pair<CharVector, CocharVector>> pairs;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            for (long long s : {1LL, -1LL}) {
                // +-(e_i - e_j) <-> +-(e_i* - e_j*)
                CharVector r{std::vector<long long>(len, 0)};
                r.exp[i] = s;
                r.exp[j] = -s;
                CocharVector c{r.exp};
                pairs.emplace_back(r, c);
                // +-(e_i + e_j) <-> +-(e_i* + e_j* - e_0*)
                CharVector r2{std::vector<long long>(len, 0)};
                r2.exp[i] = s;
                r2.exp[j] = s;
                CocharVector c2{std::vector<long long>(len, 0)};
                c2.exp[i] = s;
                c2.exp[j] = s;
                c2.exp[0] = -s;
                pairs.emplace_back(r2, c2);
            }
        }
        for (long long s : {1LL, -1LL}) {
            // +-e_i <-> +-(2e_i* - e_0*)
            CharVector r{std::vector<long long>(len, 0)};
            r.exp[i] = s;
            CocharVector c{std::vector<long long>(len, 0)};
            c.exp[i] = 2 * s;
            c.exp[0] = -s;
            pairs.emplace_back(r, c);
        }
    }
    std::vector<CharVector> simple_roots;
    for (std::size_t i = 1; i < n; ++i) {
        CharVector v{std::vector<long long>(len, 0)};
        v.exp[i] = 1;
        v.exp[i + 1] = -1;
        simple_roots.push_back(v);
    }
    simple_roots.push_back(detail::basis_char(len, n));
    detail::finalize(rd, std::move(pairs), simple_roots);
    return rd;
}

/// GSpin(2n): roots +-(e_i +- e_j); coroot of +-(e_i + e_j) is +-(e_i* + e_j* - e_0*).
inline BasedRootDatum build_gspin_even(std::size_t n) {
    if (n < 2) throw std::invalid_argument("build_gspin_even: rank must be >= 2");
    BasedRootDatum rd;
    rd.rank = n;
    rd.parity = Parity::even;
    std::size_t len = n + 1;
    std::vector<std::pair<CharVector, CocharVector>> pairs;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (long long s : {1LL, -1LL}) {
                CharVector r{std::vector<long long>(len, 0)};
                r.exp[i] = s;
                r.exp[j] = -s;
                CocharVector c{r.exp};
                pairs.emplace_back(r, c);
                CharVector r2{std::vector<long long>(len, 0)};
                r2.exp[i] = s;
                r2.exp[j] = s;
                CocharVector c2{std::vector<long long>(len, 0)};
                c2.exp[i] = s;
                c2.exp[j] = s;
                c2.exp[0] = -s;
                pairs.emplace_back(r2, c2);
            }
    std::vector<CharVector> simple_roots;
    for (std::size_t i = 1; i < n; ++i) {
        CharVector v{std::vector<long long>(len, 0)};
        v.exp[i] = 1;
        v.exp[i + 1] = -1;
        simple_roots.push_back(v);
    }
    {
        CharVector v{std::vector<long long>(len, 0)};
        v.exp[n - 1] = 1;
        v.exp[n] = 1;
        simple_roots.push_back(v);
    }
    detail::finalize(rd, std::move(pairs), simple_roots);
    return rd;
}

struct AxiomEntry {
    std::size_t root_index = 0;
    long long pairing_value = 0;
    bool pairing_ok = false;     // <alpha, alpha^vee> = 2
    bool reflection_ok = false;  // s_alpha(R) = R
    bool coreflection_ok = false; // s_{alpha^vee}(R^vee) = R^vee
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;
    bool pass = false;
};

inline AxiomReport check_axioms(const BasedRootDatum& rd) {
    AxiomReport rep;
    std::set<CharVector> root_set(rd.roots.begin(), rd.roots.end());
    std::set<CocharVector> coroot_set(rd.coroots.begin(), rd.coroots.end());
    rep.pass = true;
    for (std::size_t i = 0; i < rd.roots.size(); ++i) {
        AxiomEntry e;
        e.root_index = i;
        e.pairing_value = pairing(rd.roots[i], rd.coroot_of(i));
        e.pairing_ok = (e.pairing_value == 2);
        e.reflection_ok = true;
        for (const auto& beta : rd.roots)
            if (!root_set.count(rd.reflect(beta, i))) {
                e.reflection_ok = false;
                break;
            }
        e.coreflection_ok = true;
        for (const auto& bv : rd.coroots)
            if (!coroot_set.count(rd.coreflect(bv, i))) {
                e.coreflection_ok = false;
                break;
            }
        rep.pass = rep.pass && e.pairing_ok && e.reflection_ok && e.coreflection_ok;
        rep.entries.push_back(e);
    }
    return rep;
}

inline std::vector<std::vector<long long>> cartan_matrix(const BasedRootDatum& rd) {
    std::size_t k = rd.simples.size();
    std::vector<std::vector<long long>> c(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            c[i][j] = pairing(rd.roots[rd.simples[i]], rd.coroots[rd.simple_coroots[j]]);
    return c;
}

/// Orbits of R under the group generated by all reflections s_alpha.
inline std::vector<std::set<CharVector>> weyl_orbits(const BasedRootDatum& rd) {
    std::vector<std::set<CharVector>> orbits;
    std::set<CharVector> seen;
    for (const auto& r : rd.roots) {
        if (seen.count(r)) continue;
        std::set<CharVector> orbit{r};
        std::vector<CharVector> frontier{r};
        while (!frontier.empty()) {
            std::vector<CharVector> next;
            for (const auto& x : frontier)
                for (std::size_t i = 0; i < rd.roots.size(); ++i) {
                    CharVector y = rd.reflect(x, i);
                    if (orbit.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        for (const auto& x : orbit) seen.insert(x);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

inline std::string vector_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

} // namespace gspin
