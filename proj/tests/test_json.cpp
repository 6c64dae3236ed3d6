#include <catch2/catch_amalgamated.hpp>

#include <gspin/json_io.hpp>

using namespace gspin;

TEST_CASE("root datum json round-trip") {
    for (auto rd : {build_gspin_odd(3), build_gspin_even(3)}) {
        json j = to_json(rd);
        BasedRootDatum back = root_datum_from_json(j);
        CHECK(back.rank == rd.rank);
        CHECK(back.parity == rd.parity);
        CHECK(back.roots == rd.roots);
        CHECK(back.coroots == rd.coroots);
        CHECK(back.bijection == rd.bijection);
        CHECK(back.simples == rd.simples);
        CHECK(back.simple_coroots == rd.simple_coroots);
        CHECK(to_json(back) == j);
    }
    json bad = to_json(build_gspin_odd(2));
    bad["parity"] = "sideways";
    CHECK_THROWS_AS(root_datum_from_json(bad), std::invalid_argument);
}

TEST_CASE("torus point json round-trip keeps half exponents") {
    TorusPoint p = TorusPoint::generic(2, Parity::even);
    p.coords[1] = CoefficientElement(-1, {{"t1", 3}}); // -t1^{3/2}
    json j = to_json(p);
    CHECK(j["coords"][1]["exp"]["t1"] == "3/2");
    TorusPoint back = torus_point_from_json(j);
    CHECK(back == p);
    CHECK(to_json(back) == j);

    json bad = j;
    bad["coords"][1]["exp"]["t1"] = "1/3";
    CHECK_THROWS_AS(torus_point_from_json(bad), std::invalid_argument);
}

TEST_CASE("satake datum and multiset json round-trip") {
    SatakeDatum d = SatakeDatum::generic(2, SatakeCase::even_quasisplit);
    json j = to_json(d);
    CHECK(j["case"] == "even_quasisplit");
    SatakeDatum back = satake_datum_from_json(j);
    CHECK(back.n == d.n);
    CHECK(back.cas == d.cas);
    CHECK(back.chars == d.chars);

    MonomialMultiset out = transfer(d);
    MonomialMultiset again = multiset_from_json(to_json(out));
    CHECK(again == out);

    json badcase = j;
    badcase["case"] = "mystery";
    CHECK_THROWS_AS(satake_datum_from_json(badcase), std::invalid_argument);
}

TEST_CASE("rational matrix json round-trip") {
    Matrix<Rat> m = Matrix<Rat>::from_rows({{Rat(1, 2), Rat(-3)}, {Rat(0), Rat(7, 5)}});
    json j = to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(rat_matrix_from_json(j) == m);
}

TEST_CASE("character table json round-trip") {
    for (const auto& t : tables::all_builtin()) {
        json j = to_json(t);
        ClassFunctionTable back = table_from_json(j);
        CHECK(back.order == t.order);
        CHECK(back.exponent == t.exponent);
        CHECK(back.num_classes() == t.num_classes());
        CHECK(back.char_names == t.char_names);
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
            CHECK(back.classes[c].size == t.classes[c].size);
            CHECK(back.classes[c].square == t.classes[c].square);
            CHECK(back.classes[c].powers == t.classes[c].powers);
        }
        for (std::size_t i = 0; i < t.characters.size(); ++i)
            for (std::size_t c = 0; c < t.num_classes(); ++c)
                CHECK(back.characters[i][c] == t.characters[i][c]);
        CHECK(back.validate().pass);
    }
}

TEST_CASE("bound table json round-trip") {
    BoundTable t = BoundTable::default_table(8);
    BoundTable back = bound_table_from_json(to_json(t));
    CHECK(back.theta == t.theta);
}
