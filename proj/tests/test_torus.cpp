#include <catch2/catch_amalgamated.hpp>

#include <gspin/torus.hpp>

using namespace gspin;

namespace {

CoefficientElement sym(const std::string& s) { return CoefficientElement::symbol(s); }

TorusPoint point(std::size_t rank, Parity p,
                 std::vector<std::pair<std::size_t, CoefficientElement>> coords) {
    TorusPoint t = TorusPoint::identity(rank, p);
    for (auto& [i, c] : coords) t.coords[i] = c;
    return t;
}

} // namespace

TEST_CASE("coefficient group laws") {
    CoefficientElement t0 = sym("t0");
    CHECK((t0 * t0).str() == "t0^2");
    CHECK((t0 * t0.inverse()).is_identity());
    CHECK((CoefficientElement::minus_one() * CoefficientElement::minus_one()).is_identity());
    CHECK(CoefficientElement::symbol("t1", 1).str() == "t1^1/2");
    CHECK(CoefficientElement::symbol("t1", 1).pow(2) == sym("t1"));
    CHECK(t0.negated().str() == "-t0");
    CHECK(sym("a").integral());
    CHECK_FALSE(CoefficientElement::symbol("a", 3).integral());
}

TEST_CASE("torus point products and character evaluation") {
    TorusPoint p = point(2, Parity::odd, {{0, sym("t0")}});
    CHECK(multiply(p, p).coords[0].str() == "t0^2");

    TorusPoint q = point(2, Parity::odd, {{1, sym("t1")}, {2, sym("t2")}});
    CharVector x{{0, 1, -1}};
    CHECK(evaluate_character(x, q).str() == "t1*t2^-1");
    CHECK(evaluate_character(CharVector{{1, 0, 0}}, p) == sym("t0"));

    CocharVector v{{-1, 0, 2}};
    TorusPoint r = apply_cocharacter(v, CoefficientElement::minus_one(), Parity::odd);
    CHECK(r.coords[0] == CoefficientElement::minus_one());
    CHECK(r.coords[2].is_identity()); // (-1)^2
}

TEST_CASE("even-in-odd embedding is the plain inclusion") {
    TorusPoint a = TorusPoint::generic(2, Parity::even);
    TorusPoint img = embed_even_in_odd(2, 3, a);
    CHECK(img.rank == 3);
    CHECK(img.parity == Parity::odd);
    for (std::size_t i = 0; i <= 2; ++i) CHECK(img.coords[i] == a.coords[i]);
    CHECK(img.coords[3].is_identity());

    CHECK(embed_even_in_odd(2, 3, TorusPoint::identity(2, Parity::even)).is_identity());

    TorusPoint c = point(2, Parity::even, {{0, CoefficientElement::minus_one()}});
    CHECK(embed_even_in_odd(2, 3, c).coords[0] == CoefficientElement::minus_one());

    TorusPoint b = TorusPoint::generic(2, Parity::even, "s");
    CHECK(embed_even_in_odd(2, 3, multiply(a, b)) ==
          multiply(embed_even_in_odd(2, 3, a), embed_even_in_odd(2, 3, b)));

    CHECK_THROWS_AS(embed_even_in_odd(1, 3, TorusPoint::identity(1, Parity::even)),
                    std::invalid_argument);
    CHECK_THROWS_AS(embed_even_in_odd(4, 3, TorusPoint::identity(4, Parity::even)),
                    std::invalid_argument);
}

TEST_CASE("odd-in-even embedding carries the displayed sign pattern") {
    TorusPoint a = TorusPoint::generic(1, Parity::odd);
    TorusPoint img = embed_odd_in_even(1, 2, a);
    CHECK(img.coords[0].str() == "-t0");
    CHECK(img.coords[1].str() == "-t1");
    CHECK(img.coords[2] == CoefficientElement::minus_one());

    // the formula at the identity is the constant k = f0*(-1) fm*(-1) fn*(-1)
    TorusPoint k = embed_odd_in_even(1, 2, TorusPoint::identity(1, Parity::odd));
    CHECK(k.coords[0] == CoefficientElement::minus_one());
    CHECK(k.coords[1] == CoefficientElement::minus_one());
    CHECK(k.coords[2] == CoefficientElement::minus_one());
    CHECK(multiply(k, k).is_identity());

    // twisted homomorphism law: embed(ab) = embed(a) embed(b) embed(1)
    TorusPoint b = TorusPoint::generic(1, Parity::odd, "s");
    CHECK(embed_odd_in_even(1, 2, multiply(a, b)) ==
          multiply(multiply(embed_odd_in_even(1, 2, a), embed_odd_in_even(1, 2, b)), k));

    CHECK_THROWS_AS(embed_odd_in_even(2, 2, TorusPoint::identity(2, Parity::odd)),
                    std::invalid_argument);
}

TEST_CASE("center intersection element reduces to e0*(-1)") {
    for (std::size_t m : {1u, 2u, 5u}) {
        TorusPoint c = center_intersection_element(m, Parity::odd);
        CHECK(c.coords[0] == CoefficientElement::minus_one());
        for (std::size_t i = 1; i <= m; ++i) CHECK(c.coords[i].is_identity());
    }
    for (std::size_t m : {2u, 3u, 6u}) {
        TorusPoint c = center_intersection_element(m, Parity::even);
        CHECK(c.coords[0] == CoefficientElement::minus_one());
        for (std::size_t i = 1; i <= m; ++i) CHECK(c.coords[i].is_identity());
    }
    CHECK_THROWS_AS(center_intersection_element(1, Parity::even), std::invalid_argument);
}

TEST_CASE("well-definedness certificates: both routes give f0*(-1)") {
    auto c1 = check_embedding_well_defined(2, 3, EmbedDirection::even_in_odd);
    CHECK(c1.ok);
    CHECK(c1.expected.coords[0] == CoefficientElement::minus_one());
    CHECK(c1.central_route == c1.expected);
    CHECK(c1.derived_route == c1.expected);

    auto c2 = check_embedding_well_defined(1, 2, EmbedDirection::odd_in_even);
    CHECK(c2.ok);
    CHECK(c2.central_route == c2.expected);
    CHECK(c2.derived_route == c2.expected);

    for (std::size_t n = 2; n <= 6; ++n) {
        for (std::size_t m = 1; m < n; ++m)
            CHECK(check_embedding_well_defined(m, n, EmbedDirection::odd_in_even).ok);
        for (std::size_t m = 2; m <= n; ++m)
            CHECK(check_embedding_well_defined(m, n, EmbedDirection::even_in_odd).ok);
    }
}

TEST_CASE("coroot points at -1 square to the identity") {
    auto rd = build_gspin_odd(3);
    for (std::size_t i = 0; i < rd.coroots.size(); ++i) {
        TorusPoint p =
            apply_cocharacter(rd.coroots[i], CoefficientElement::minus_one(), Parity::odd);
        CHECK(multiply(p, p).is_identity());
    }
}

TEST_CASE("codomain roots pull back to integral characters") {
    // generic image of GSpin(5) inside GSpin(7): all roots of the big group
    // evaluate to integral monomials on the embedded torus
    TorusPoint img = embed_even_in_odd(2, 3, TorusPoint::generic(2, Parity::even));
    for (const auto& r : build_gspin_odd(3).roots)
        CHECK(evaluate_character(r, img).integral());
}
