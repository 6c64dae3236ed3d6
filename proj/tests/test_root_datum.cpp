#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <gspin/root_datum.hpp>

using namespace gspin;

namespace {

CharVector cv(std::vector<long long> v) { return {std::move(v)}; }
CocharVector cc(std::vector<long long> v) { return {std::move(v)}; }

bool has_root(const BasedRootDatum& rd, const CharVector& r) {
    return std::binary_search(rd.roots.begin(), rd.roots.end(), r);
}

const CocharVector& coroot_of(const BasedRootDatum& rd, const CharVector& r) {
    auto it = std::lower_bound(rd.roots.begin(), rd.roots.end(), r);
    REQUIRE(it != rd.roots.end());
    REQUIRE(*it == r);
    return rd.coroot_of(static_cast<std::size_t>(it - rd.roots.begin()));
}

} // namespace

TEST_CASE("odd root data match the displayed lists") {
    auto rd1 = build_gspin_odd(1);
    CHECK(rd1.roots.size() == 2);
    CHECK(has_root(rd1, cv({0, 1})));
    CHECK(has_root(rd1, cv({0, -1})));
    CHECK(coroot_of(rd1, cv({0, 1})) == cc({-1, 2}));

    auto rd2 = build_gspin_odd(2);
    REQUIRE(rd2.simples.size() == 2);
    CHECK(rd2.roots[rd2.simples[0]] == cv({0, 1, -1}));
    CHECK(rd2.roots[rd2.simples[1]] == cv({0, 0, 1}));
    CHECK(rd2.coroots[rd2.simple_coroots[0]] == cc({0, 1, -1}));
    CHECK(rd2.coroots[rd2.simple_coroots[1]] == cc({-1, 0, 2}));

    CHECK(build_gspin_odd(3).roots.size() == 18);
    CHECK_THROWS_AS(build_gspin_odd(0), std::invalid_argument);
}

TEST_CASE("even root data match the displayed lists") {
    auto rd2 = build_gspin_even(2);
    CHECK(rd2.roots.size() == 4);
    CHECK(has_root(rd2, cv({0, 1, 1})));
    CHECK(has_root(rd2, cv({0, -1, 1})));

    auto rd3 = build_gspin_even(3);
    CHECK(coroot_of(rd3, cv({0, 1, 0, 1})) == cc({-1, 1, 0, 1}));
    CHECK(rd3.roots[rd3.simples.back()] == cv({0, 0, 1, 1}));
    CHECK(rd3.coroots[rd3.simple_coroots.back()] == cc({-1, 0, 1, 1}));

    CHECK(build_gspin_even(4).roots.size() == 24);
    CHECK_THROWS_AS(build_gspin_even(1), std::invalid_argument);
}

TEST_CASE("pairing is the standard dot product") {
    CHECK(pairing(cv({0, 1, 0}), cc({0, 1, 0})) == 1);
    CHECK(pairing(cv({0, 0, 1}), cc({-1, 0, 2})) == 2);
    CHECK(pairing(cv({0, 1, -1, 0}), cc({0, 0, 1, -1})) == -1);
    CHECK_THROWS_AS(pairing(cv({0, 1}), cc({0, 1, 0})), std::invalid_argument);
}

TEST_CASE("axiom checks pass for built data and catch corruption") {
    CHECK(check_axioms(build_gspin_odd(3)).pass);
    CHECK(check_axioms(build_gspin_even(4)).pass);

    auto bad = build_gspin_odd(2);
    // replace the coroot of e_2 by e_2*: RD1 now fails with pairing 1
    auto it = std::lower_bound(bad.roots.begin(), bad.roots.end(), cv({0, 0, 1}));
    std::size_t idx = static_cast<std::size_t>(it - bad.roots.begin());
    bad.coroots[bad.bijection[idx]] = cc({0, 0, 1});
    auto rep = check_axioms(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.entries[idx].pairing_value == 1);
}

TEST_CASE("cartan matrices") {
    CHECK(cartan_matrix(build_gspin_odd(1)) == std::vector<std::vector<long long>>{{2}});

    auto c2 = cartan_matrix(build_gspin_odd(2));
    long long det = c2[0][0] * c2[1][1] - c2[0][1] * c2[1][0];
    CHECK(det == 2);
    CHECK(c2[0][0] == 2);
    CHECK(c2[1][1] == 2);

    auto d2 = cartan_matrix(build_gspin_even(2));
    CHECK(d2 == std::vector<std::vector<long long>>{{2, 0}, {0, 2}});
}

TEST_CASE("root count formulas and center pairing across the range") {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto rd = build_gspin_odd(n);
        CHECK(rd.roots.size() == 2 * n * n);
        for (const auto& r : rd.roots) CHECK(r.exp[0] == 0);
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        auto rd = build_gspin_even(n);
        CHECK(rd.roots.size() == 2 * n * (n - 1));
        for (const auto& r : rd.roots) CHECK(r.exp[0] == 0);
    }
}

TEST_CASE("bijection satisfies RD1 everywhere") {
    for (auto rd : {build_gspin_odd(4), build_gspin_even(4)}) {
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < rd.roots.size(); ++i) {
            CHECK(pairing(rd.roots[i], rd.coroot_of(i)) == 2);
            seen.insert(rd.bijection[i]);
        }
        CHECK(seen.size() == rd.roots.size());
    }
}

TEST_CASE("weyl orbit counts: long/short split in type B, one orbit in type D") {
    CHECK(weyl_orbits(build_gspin_odd(1)).size() == 1);
    for (std::size_t n = 2; n <= 5; ++n) CHECK(weyl_orbits(build_gspin_odd(n)).size() == 2);
    CHECK(weyl_orbits(build_gspin_even(2)).size() == 2); // A1 x A1
    for (std::size_t n = 3; n <= 5; ++n) CHECK(weyl_orbits(build_gspin_even(n)).size() == 1);
}
