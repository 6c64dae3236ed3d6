// Acceptance harness: nine go/no-go checks with pinned runtime budgets,
// one line of output per criterion. Exit status 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <gspin/verify.hpp>

using namespace gspin;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

bool run_suite(verify::CheckResult (*suite)(const verify::Options&), std::string& detail) {
    verify::Options opt;
    verify::CheckResult r = suite(opt);
    detail = r.pass ? r.detail : r.detail;
    return r.pass;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"root-datum axioms and counts, odd n<=8 / even n<=8", 5.0,
                        [](std::string& d) { return run_suite(verify::suite_root_data, d); }});

    criteria.push_back({"embedding well-definedness, both routes f0*(-1), m,n<=6", 5.0,
                        [](std::string& d) {
                            std::size_t count = 0;
                            for (std::size_t n = 2; n <= 6; ++n) {
                                for (std::size_t m = 1; m < n; ++m) {
                                    auto c = check_embedding_well_defined(
                                        m, n, EmbedDirection::odd_in_even);
                                    if (!c.ok || c.central_route != c.expected ||
                                        c.derived_route != c.expected) {
                                        d = "odd-in-even m=" + std::to_string(m) +
                                            " n=" + std::to_string(n);
                                        return false;
                                    }
                                    ++count;
                                }
                                for (std::size_t m = 2; m <= n; ++m) {
                                    auto c = check_embedding_well_defined(
                                        m, n, EmbedDirection::even_in_odd);
                                    if (!c.ok || c.central_route != c.expected ||
                                        c.derived_route != c.expected) {
                                        d = "even-in-odd m=" + std::to_string(m) +
                                            " n=" + std::to_string(n);
                                        return false;
                                    }
                                    ++count;
                                }
                            }
                            d = std::to_string(count) + " certificates";
                            return true;
                        }});

    criteria.push_back({"torus image formulas and homomorphism laws, m,n<=6", 5.0,
                        [](std::string& d) { return run_suite(verify::suite_embeddings, d); }});

    criteria.push_back({"satake transfer identities, all cases, n<=6", 10.0,
                        [](std::string& d) { return run_suite(verify::suite_transfer, d); }});

    criteria.push_back({"tensor = sym2 * wedge2 and size identities", 10.0,
                        [](std::string& d) { return run_suite(verify::suite_factorization, d); }});

    criteria.push_back({"finite dichotomy sweep with solver cross-checks", 10.0,
                        [](std::string& d) { return run_suite(verify::suite_dichotomy, d); }});

    criteria.push_back({"wedge-square similitude = det, 100 seeded matrices", 5.0,
                        [](std::string& d) { return run_suite(verify::suite_wedge, d); }});

    criteria.push_back({"ramanujan bound identities and partition max rule", 5.0,
                        [](std::string& d) { return run_suite(verify::suite_ramanujan, d); }});

    criteria.push_back({"verify-all aggregate under default config", 60.0,
                        [](std::string& d) {
                            auto rs = verify::run_all();
                            for (const auto& r : rs)
                                if (!r.pass) {
                                    d = r.name + ": " + r.detail;
                                    return false;
                                }
                            d = std::to_string(rs.size()) + " suites";
                            return true;
                        }});

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].budget_seconds) {
            ok = false;
            detail += " [over budget]";
        }
        std::printf("criterion %zu: %s - %s (%.3fs / %.0fs) %s\n", i + 1,
                    ok ? "PASS" : "FAIL", criteria[i].label.c_str(), secs,
                    criteria[i].budget_seconds, detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
