#pragma once

// Exact-rational bookkeeping for the Ramanujan-bound calculus: the GL(m)
// bound theta_m = 1/2 - 1/(m^2+1), the GSpin corollary bound, and the
// max-over-partition rule for non-cuspidal transfers.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gspin/rational.hpp"

namespace gspin {

struct BoundTable {
    std::map<int, Rat> theta; // m -> theta_m

    static BoundTable default_table(int max_m) {
        BoundTable t;
        for (int m = 2; m <= max_m; ++m) t.theta[m] = theta_gl_formula(m);
        return t;
    }

    static BoundTable zero_table(int max_m) { // Ramanujan-conjecture input H(0)
        BoundTable t;
        for (int m = 2; m <= max_m; ++m) t.theta[m] = Rat(0);
        return t;
    }

    static Rat theta_gl_formula(int m) { return Rat(1, 2) - Rat(1, m * m + 1); }

    Rat at(int m) const {
        auto it = theta.find(m);
        if (it == theta.end()) throw std::invalid_argument("no bound for m=" + std::to_string(m));
        return it->second;
    }
};

/// theta_m = 1/2 - 1/(m^2 + 1)
inline Rat theta_gl(int m) {
    if (m < 2) throw std::invalid_argument("theta_gl: m must be >= 2");
    return BoundTable::theta_gl_formula(m);
}

/// (4n^2 - 1) / (2 (4n^2 + 1)); equals theta_gl(2n).
inline Rat gspin_bound(int n) {
    if (n < 1) throw std::invalid_argument("gspin_bound: n must be >= 1");
    long long q = 4LL * n * n;
    return Rat(q - 1, 2 * (q + 1));
}

/// max over the parts of an isobaric partition; parts must be >= 2 and sum to 2n.
inline Rat transfer_bound(const std::vector<int>& partition, const BoundTable& table) {
    if (partition.empty()) throw std::invalid_argument("transfer_bound: empty partition");
    long long sum = 0;
    for (int p : partition) {
        if (p < 2) throw std::invalid_argument("transfer_bound: parts must be >= 2");
        sum += p;
    }
    if (sum % 2 != 0) throw std::invalid_argument("transfer_bound: parts must sum to 2n");
    Rat best(0);
    bool first = true;
    for (int p : partition) {
        Rat v = table.at(p);
        if (first || best < v) best = v;
        first = false;
    }
    return best;
}

/// All partitions of total into parts >= 2, nonincreasing order.
inline std::vector<std::vector<int>> partitions_min2(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 2; --p) {
            if (rest - p == 1) continue; // a leftover of 1 can never be completed
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

} // namespace gspin
