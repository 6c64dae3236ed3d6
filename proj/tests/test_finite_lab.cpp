#include <catch2/catch_amalgamated.hpp>

#include <gspin/finite_parameter.hpp>

using namespace gspin;

TEST_CASE("built-in tables validate") {
    for (const auto& t : tables::all_builtin()) {
        auto rep = t.validate();
        INFO(t.name);
        CHECK(rep.sizes_ok);
        CHECK(rep.degrees_ok);
        CHECK(rep.orthogonality_ok);
    }
}

TEST_CASE("a corrupted table fails orthogonality") {
    auto t = tables::s3();
    t.characters[2][1] = CycElem(Rat(1));
    auto rep = t.validate();
    CHECK_FALSE(rep.orthogonality_ok);
    CHECK_FALSE(rep.pass);
}

TEST_CASE("power maps are consistent with squares") {
    for (const auto& t : tables::all_builtin())
        for (std::size_t c = 0; c < t.num_classes(); ++c) {
            CHECK(t.power_class(c, 1) == c);
            CHECK(t.power_class(c, 2) == t.classes[c].square);
            CHECK(t.power_class(c, 0) == t.identity_class());
            CHECK(t.power_class(c, t.exponent) == t.identity_class());
        }
}

TEST_CASE("twisted square multiplicities match the worked examples") {
    // C2 with chi = triv + sgn
    auto c2 = tables::c2();
    ClassFunction chi = {CycElem(Rat(2)), CycElem(Rat(0))};
    FiniteParameter p{c2, chi, c2.character("triv")};
    CHECK(twisted_sym2_mult(p) == 2);
    CHECK(twisted_wedge2_mult(p) == 0);

    auto q8 = tables::q8();
    FiniteParameter pq{q8, q8.character("2dim"), q8.character("triv")};
    CHECK(twisted_sym2_mult(pq) == 0);
    CHECK(twisted_wedge2_mult(pq) == 1);

    auto s3 = tables::s3();
    FiniteParameter ps{s3, s3.character("2dim"), s3.character("triv")};
    CHECK(twisted_sym2_mult(ps) == 1);
    CHECK(twisted_wedge2_mult(ps) == 0);
}

TEST_CASE("dichotomy outcomes") {
    auto q8 = tables::q8();
    auto s3 = tables::s3();
    auto s4 = tables::s4();
    auto d4 = tables::d4();
    auto c3 = tables::c3();

    auto type_of = [](const ClassFunctionTable& t, const std::string& chi,
                      const std::string& omega) {
        return dichotomy({t, t.character(chi), t.character(omega)}).type;
    };

    CHECK(type_of(q8, "2dim", "triv") == DichotomyType::odd_type);
    CHECK(type_of(s3, "2dim", "triv") == DichotomyType::even_type);
    CHECK(type_of(s4, "2dim", "triv") == DichotomyType::even_type);
    CHECK(type_of(s4, "3dim", "triv") == DichotomyType::even_type);
    CHECK(type_of(s4, "3dimsgn", "triv") == DichotomyType::even_type);
    CHECK(type_of(d4, "2dim", "triv") == DichotomyType::even_type);
    // a genuinely twisted case: similitude character det2
    CHECK(type_of(d4, "2dim", "det2") == DichotomyType::odd_type);
    CHECK(type_of(c3, "z1", "triv") == DichotomyType::not_self_dual);

    // reducible input is reported, not fatal
    ClassFunction red = {CycElem(Rat(2)), CycElem(Rat(0))};
    auto c2 = tables::c2();
    CHECK(dichotomy({c2, red, c2.character("triv")}).type == DichotomyType::reducible);
}

TEST_CASE("mult sum equals the self-duality indicator over all tables") {
    for (const auto& t : tables::all_builtin()) {
        std::vector<std::size_t> linear;
        for (std::size_t i = 0; i < t.characters.size(); ++i)
            if (t.degree(t.characters[i]) == 1) linear.push_back(i);
        for (std::size_t ci = 0; ci < t.characters.size(); ++ci)
            for (auto oi : linear) {
                FiniteParameter p{t, t.characters[ci], t.characters[oi]};
                long long s = twisted_sym2_mult(p);
                long long w = twisted_wedge2_mult(p);
                ClassFunction dual = fp_detail::conj_times(t, p.chi, p.omega);
                INFO(t.name << " " << t.char_names[ci] << " " << t.char_names[oi]);
                CHECK(s + w == ((dual == p.chi) ? 1 : 0));
                CHECK(s * w == 0);
                CHECK(s >= 0);
                CHECK(w >= 0);
            }
    }
}

TEST_CASE("isobaric analysis") {
    auto s3 = tables::s3();
    auto s4 = tables::s4();
    ClassFunction two = s3.character("2dim");
    ClassFunction triv = s3.character("triv");

    auto rep = isobaric_analysis(s3, {two, two}, triv);
    CHECK_FALSE(rep.pairwise_distinct);
    CHECK_FALSE(rep.admissible);
    CHECK(rep.aggregate_pole_order == 4); // 2x2 all-ones inner-product matrix

    auto single = isobaric_analysis(tables::q8(), {tables::q8().character("2dim")},
                                    tables::q8().character("triv"));
    CHECK(single.admissible);
    CHECK(single.verdict == "odd");
    CHECK(single.aggregate_pole_order == 1);

    auto mixed = isobaric_analysis(s4, {s4.character("2dim"), s4.character("3dim")},
                                   s4.character("triv"));
    CHECK(mixed.admissible);
    CHECK(mixed.verdict == "even");
    CHECK(mixed.aggregate_pole_order == 2);

    auto with_char = isobaric_analysis(s3, {two, triv}, triv);
    CHECK_FALSE(with_char.admissible);
    CHECK(with_char.verdict == "rejected: one-dimensional summand");

    ClassFunction red = {CycElem(Rat(3)), CycElem(Rat(1)), CycElem(Rat(0))};
    CHECK_THROWS_AS(isobaric_analysis(s3, {red}, triv), std::invalid_argument);
}

TEST_CASE("split vs quasi-split discriminant") {
    auto q8 = tables::q8();
    CHECK(is_trivial(split_vs_quasisplit({q8, q8.character("2dim"), q8.character("triv")})));

    auto d4 = tables::d4();
    ClassFunction mu = split_vs_quasisplit({d4, d4.character("2dim"), d4.character("triv")});
    CHECK_FALSE(is_trivial(mu));
    CHECK(mu == d4.character("det2"));

    // trivial 2-dimensional chi = 1 + 1
    auto c2 = tables::c2();
    ClassFunction twice = {CycElem(Rat(2)), CycElem(Rat(2))};
    CHECK(is_trivial(split_vs_quasisplit({c2, twice, c2.character("triv")})));

    auto c3 = tables::c3();
    CHECK_THROWS_AS(
        split_vs_quasisplit({c3, c3.character("z1"), c3.character("triv")}),
        std::domain_error);
}
