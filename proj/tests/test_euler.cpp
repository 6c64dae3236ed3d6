#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include <gspin/euler.hpp>

using namespace gspin;

namespace {

MonomialMultiset syms(const std::vector<std::string>& names) {
    MonomialMultiset out;
    for (const auto& s : names) out.push_back(parse_monomial(s));
    canonicalize(out);
    return out;
}

} // namespace

TEST_CASE("factor construction and rendering") {
    CHECK(standard_factor({}).str() == "1");
    CHECK(standard_factor(syms({"1", "1"})).str() == "(1 - X)^-1 (1 - X)^-1");
    LocalFactor f = standard_factor(syms({"chi1"}));
    CHECK(f.str() == "(1 - chi1*X)^-1");
    f.doubled_variable = true;
    CHECK(f.str() == "(1 - chi1*X^2)^-1");
}

TEST_CASE("tensor, sym2, wedge2 multisets") {
    MonomialMultiset ab = syms({"a", "b"});
    CharacterMonomial w_inv = parse_monomial("w^-1");

    CHECK(tensor_factor(ab, ab, w_inv).inverse_roots ==
          syms({"a^2*w^-1", "a*b*w^-1", "a*b*w^-1", "b^2*w^-1"}));
    CHECK(sym2_factor(ab, w_inv).inverse_roots == syms({"a^2*w^-1", "a*b*w^-1", "b^2*w^-1"}));
    CHECK(wedge2_factor(ab, w_inv).inverse_roots == syms({"a*b*w^-1"}));

    CHECK(wedge2_factor(syms({"a", "b", "c", "d"})).inverse_roots ==
          syms({"a*b", "a*c", "a*d", "b*c", "b*d", "c*d"}));

    CHECK(sym2_factor(syms({"1", "1"})).inverse_roots == syms({"1", "1", "1"}));
    CHECK(wedge2_factor(syms({"1", "1"})).inverse_roots == syms({"1"}));
}

TEST_CASE("factor product is multiset union") {
    LocalFactor a = standard_factor(syms({"a"}));
    LocalFactor b = standard_factor(syms({"b"}));
    CHECK((a * b).inverse_roots == syms({"a", "b"}));
    CHECK((a * b).inverse_roots == (b * a).inverse_roots);
    LocalFactor doubled = a;
    doubled.doubled_variable = true;
    CHECK_THROWS_AS(a * doubled, std::invalid_argument);
}

TEST_CASE("tensor factorization identity, exhaustive at small size") {
    std::vector<CharacterMonomial> pool = {parse_monomial("a"), parse_monomial("b"),
                                           parse_monomial("c")};
    CharacterMonomial w_inv = parse_monomial("w^-1");
    std::size_t count = 0;
    std::function<void(std::size_t, MonomialMultiset&)> rec = [&](std::size_t from,
                                                                  MonomialMultiset& cur) {
        CHECK(check_tensor_factorization(cur));
        CHECK(check_tensor_factorization(cur, w_inv));
        ++count;
        if (cur.size() == 8) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i, cur);
            cur.pop_back();
        }
    };
    MonomialMultiset start;
    rec(0, start);
    CHECK(count == 165); // sum of C(k+2,2) for k = 0..8
}

TEST_CASE("sym2 + wedge2 sizes add up to m^2") {
    for (std::size_t m = 0; m <= 12; ++m) {
        MonomialMultiset s;
        for (std::size_t i = 0; i < m; ++i)
            s.push_back(CharacterMonomial::symbol("x" + std::to_string(i)));
        std::size_t sym = sym2_factor(s).inverse_roots.size();
        std::size_t wedge = wedge2_factor(s).inverse_roots.size();
        CHECK(sym == m * (m + 1) / 2);
        CHECK(wedge == m * (m - 1) / 2);
        CHECK(sym + wedge == m * m);
    }
}

TEST_CASE("transfer outputs factor and their wedge picks up trivial roots") {
    CharacterMonomial chi0_inv = parse_monomial("chi0^-1");
    for (std::size_t n = 1; n <= 6; ++n) {
        MonomialMultiset out = transfer(SatakeDatum::generic(n, SatakeCase::odd_split));
        CHECK(check_tensor_factorization(out, chi0_inv));
        CHECK(pole_multiplicity_at_one(wedge2_factor(out, chi0_inv)) >= n);
    }
}

TEST_CASE("pole multiplicity counts trivial inverse roots") {
    CHECK(pole_multiplicity_at_one(standard_factor(syms({"1", "1"}))) == 2);
    CHECK(pole_multiplicity_at_one(standard_factor(syms({"a"}))) == 0);
}

TEST_CASE("unramified ratio shapes") {
    SatakeDatum odd1 = SatakeDatum::generic(1, SatakeCase::odd_split);
    MonomialMultiset tau1 = syms({"1"});
    auto r1 = unramified_ratio(odd1, tau1, CharacterMonomial::one());
    CHECK(r1.numerator.inverse_roots.size() == 2);
    CHECK(r1.denominator.inverse_roots.empty()); // wedge of a singleton
    CHECK(r1.denominator.doubled_variable);

    SatakeDatum even2 = SatakeDatum::generic(2, SatakeCase::even_split);
    auto r2 = unramified_ratio(even2, syms({"1", "1"}), CharacterMonomial::one());
    CHECK(r2.denominator.inverse_roots == syms({"1", "1", "1"}));
    CHECK(r2.denominator.doubled_variable);

    auto r3 = unramified_ratio(even2, syms({"eta1", "eta2"}), parse_monomial("w"));
    CHECK(r3.numerator.inverse_roots.size() == 8);
    CHECK(r3.denominator.inverse_roots.size() == 3);
    auto r4 = unramified_ratio(SatakeDatum::generic(2, SatakeCase::odd_split),
                               syms({"eta1", "eta2"}), parse_monomial("w"));
    CHECK(r4.denominator.inverse_roots.size() == 1);

    CHECK_THROWS_AS(unramified_ratio(odd1, syms({"eta1", "eta2"}), CharacterMonomial::one()),
                    std::invalid_argument);
}

TEST_CASE("transfer multisets are self dual under omega = chi0") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (auto cas : {SatakeCase::odd_split, SatakeCase::even_split}) {
            MonomialMultiset out = transfer(SatakeDatum::generic(n, cas));
            MonomialMultiset dual;
            for (const auto& m : out) dual.push_back(parse_monomial("chi0") * m.inverse());
            canonicalize(dual);
            CHECK(dual == out);
        }
}
