#pragma once

// Batch verification sweeps used by the CLI verify-all command and the
// acceptance harness. Each suite returns a named pass/fail result with a
// short diagnostic; suites are pure and can run concurrently.

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gspin/dual.hpp"
#include "gspin/euler.hpp"
#include "gspin/finite_parameter.hpp"
#include "gspin/gaussian.hpp"
#include "gspin/monomial.hpp"
#include "gspin/ramanujan.hpp"
#include "gspin/root_datum.hpp"
#include "gspin/satake.hpp"
#include "gspin/torus.hpp"

namespace gspin::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Options {
    std::size_t max_rank = 6;
    std::uint64_t seed = 20240613;
    std::size_t jobs = 1;
    bool corrupt_fixture = false; // fault injection for the failure path
};

namespace detail {

inline void fail(CheckResult& r, const std::string& why) {
    r.pass = false;
    if (r.detail.empty()) r.detail = why;
}

} // namespace detail

inline CheckResult suite_root_data(const Options&) {
    CheckResult r{"root-datum axioms", true, "", 0};
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
        auto rd = build_gspin_odd(n);
        if (rd.roots.size() != 2 * n * n)
            detail::fail(r, "odd n=" + std::to_string(n) + " root count");
        if (!check_axioms(rd).pass) detail::fail(r, "odd n=" + std::to_string(n) + " axioms");
        ++count;
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        auto rd = build_gspin_even(n);
        if (rd.roots.size() != 2 * n * (n - 1))
            detail::fail(r, "even n=" + std::to_string(n) + " root count");
        if (!check_axioms(rd).pass) detail::fail(r, "even n=" + std::to_string(n) + " axioms");
        ++count;
    }
    if (r.pass) r.detail = std::to_string(count) + " data checked";
    return r;
}

inline CheckResult suite_embeddings(const Options& opt) {
    CheckResult r{"torus embeddings", true, "", 0};
    std::size_t N = opt.max_rank;
    std::size_t count = 0;
    for (std::size_t n = 2; n <= N; ++n)
        for (std::size_t m = 1; m < n; ++m) {
            auto cert = check_embedding_well_defined(m, n, EmbedDirection::odd_in_even);
            if (!cert.ok)
                detail::fail(r, "odd-in-even m=" + std::to_string(m) + " n=" + std::to_string(n));
            // displayed image: f0*(-t0) f1*(t1) ... fm*(-tm) fn*(-1)
            TorusPoint a = TorusPoint::generic(m, Parity::odd);
            TorusPoint img = embed_odd_in_even(m, n, a);
            TorusPoint want = TorusPoint::identity(n, Parity::even);
            for (std::size_t i = 0; i <= m; ++i) want.coords[i] = a.coords[i];
            want.coords[0] = want.coords[0].negated();
            want.coords[m] = want.coords[m].negated();
            want.coords[n] = CoefficientElement::minus_one();
            if (img != want) detail::fail(r, "odd-in-even image formula");
            // twisted homomorphism: embed(ab) = embed(a) embed(b) embed(1)
            TorusPoint b = TorusPoint::generic(m, Parity::odd, "s");
            TorusPoint lhs = embed_odd_in_even(m, n, multiply(a, b));
            TorusPoint rhs = multiply(multiply(img, embed_odd_in_even(m, n, b)),
                                      embed_odd_in_even(m, n, TorusPoint::identity(m, Parity::odd)));
            if (lhs != rhs) detail::fail(r, "odd-in-even twisted homomorphism");
            ++count;
        }
    for (std::size_t n = 2; n <= N; ++n)
        for (std::size_t m = 2; m <= n; ++m) {
            auto cert = check_embedding_well_defined(m, n, EmbedDirection::even_in_odd);
            if (!cert.ok)
                detail::fail(r, "even-in-odd m=" + std::to_string(m) + " n=" + std::to_string(n));
            TorusPoint a = TorusPoint::generic(m, Parity::even);
            TorusPoint b = TorusPoint::generic(m, Parity::even, "s");
            TorusPoint img = embed_even_in_odd(m, n, a);
            for (std::size_t i = 0; i <= m; ++i)
                if (img.coords[i] != a.coords[i]) detail::fail(r, "even-in-odd image formula");
            if (embed_even_in_odd(m, n, multiply(a, b)) !=
                multiply(img, embed_even_in_odd(m, n, b)))
                detail::fail(r, "even-in-odd homomorphism");
            // center line: e0*(s) -> f0*(s)
            TorusPoint z = TorusPoint::identity(m, Parity::even);
            z.coords[0] = CoefficientElement::symbol("s0");
            if (embed_even_in_odd(m, n, z).coords[0] != z.coords[0])
                detail::fail(r, "even-in-odd center line");
            ++count;
        }
    if (r.pass) r.detail = std::to_string(count) + " pairs checked";
    return r;
}

inline CheckResult suite_transfer(const Options& opt) {
    CheckResult r{"satake transfer", true, "", 0};
    std::size_t N = opt.max_rank;
    auto run_case = [&](std::size_t n, SatakeCase cas) {
        SatakeDatum d = SatakeDatum::generic(n, cas);
        bool qs = (cas == SatakeCase::even_quasisplit);
        MonomialMultiset out = transfer(d);
        if (out.size() != 2 * n) detail::fail(r, "list length");
        CharacterMonomial omega = d.central();
        CharacterMonomial want = omega.pow(static_cast<int>(n));
        if (qs) want *= CharacterMonomial::mu();
        if (central_character(out) != want)
            detail::fail(r, "central character, " + to_string(cas) + " n=" + std::to_string(n));
        MonomialMultiset canon = qs ? quasisplit_canonical(out, n) : out;
        CharacterMonomial omega_c = qs ? omega.rewrite_square("chi0", "chi" + std::to_string(n))
                                       : omega;
        if (!contragredient_twist_check(canon, omega_c))
            detail::fail(r, "contragredient, " + to_string(cas) + " n=" + std::to_string(n));
        CharacterMonomial disc = split_quasisplit_discriminator(out, omega);
        if (disc != (qs ? CharacterMonomial::mu() : CharacterMonomial::one()))
            detail::fail(r, "discriminator, " + to_string(cas));
        if (qs) {
            MonomialMultiset oracle = quasisplit_canonical(transfer_oracle(d), n);
            if (canon != oracle) detail::fail(r, "oracle mismatch n=" + std::to_string(n));
        }
    };
    for (std::size_t n = 1; n <= N; ++n) run_case(n, SatakeCase::odd_split);
    for (std::size_t n = 2; n <= N; ++n) {
        run_case(n, SatakeCase::even_split);
        run_case(n, SatakeCase::even_quasisplit);
    }
    if (r.pass) r.detail = "identities hold through n=" + std::to_string(N);
    return r;
}

inline CheckResult suite_factorization(const Options& opt) {
    CheckResult r{"euler factorization", true, "", 0};
    // exhaustive multisets of size <= 8 over three symbols
    std::vector<CharacterMonomial> syms = {CharacterMonomial::symbol("a"),
                                           CharacterMonomial::symbol("b"),
                                           CharacterMonomial::symbol("c")};
    CharacterMonomial w_inv = CharacterMonomial::symbol("w", -1);
    std::size_t count = 0;
    std::function<void(std::size_t, MonomialMultiset&)> rec =
        [&](std::size_t from, MonomialMultiset& cur) {
            if (!check_tensor_factorization(cur) || !check_tensor_factorization(cur, w_inv))
                detail::fail(r, "factorization failed at size " + std::to_string(cur.size()));
            ++count;
            if (cur.size() == 8) return;
            for (std::size_t i = from; i < syms.size(); ++i) {
                cur.push_back(syms[i]);
                rec(i, cur);
                cur.pop_back();
            }
        };
    MonomialMultiset start;
    rec(0, start);
    // transfer outputs, twist chi0^-1
    CharacterMonomial chi0_inv = CharacterMonomial::symbol("chi0", -1);
    for (std::size_t n = 1; n <= opt.max_rank; ++n) {
        std::vector<SatakeCase> cases = {SatakeCase::odd_split};
        if (n >= 2) {
            cases.push_back(SatakeCase::even_split);
            cases.push_back(SatakeCase::even_quasisplit);
        }
        for (auto cas : cases) {
            MonomialMultiset out = transfer(SatakeDatum::generic(n, cas));
            if (!check_tensor_factorization(out, chi0_inv))
                detail::fail(r, "transfer factorization " + to_string(cas));
            // split lists pair chi_i with chi0/chi_i, n trivial wedge roots;
            // the quasi-split middle pair contributes mu instead of 1
            std::size_t want_poles = (cas == SatakeCase::even_quasisplit) ? n - 1 : n;
            if (pole_multiplicity_at_one(wedge2_factor(out, chi0_inv)) < want_poles)
                detail::fail(r, "wedge pole count " + to_string(cas));
        }
    }
    // size identity C(m+1,2) + C(m,2) = m^2
    for (std::size_t m = 0; m <= 12; ++m) {
        MonomialMultiset s;
        for (std::size_t i = 0; i < m; ++i)
            s.push_back(CharacterMonomial::symbol("x" + std::to_string(i)));
        if (sym2_factor(s).inverse_roots.size() + wedge2_factor(s).inverse_roots.size() != m * m)
            detail::fail(r, "size identity m=" + std::to_string(m));
    }
    if (r.pass) r.detail = std::to_string(count) + " multisets checked";
    return r;
}

// Matrix fixtures for the dichotomy cross-check. Each fixture pins the
// expected twisted Frobenius-Schur outcome against the form solver on a
// faithful 2-dimensional realization.
inline CheckResult suite_dichotomy(const Options& opt) {
    CheckResult r{"finite dichotomy", true, "", 0};
    std::size_t pairs = 0;
    for (auto& t : tables::all_builtin()) {
        ClassFunctionTable table = t;
        if (opt.corrupt_fixture && table.name == "Q8")
            table.characters[4][2] = CycElem(Rat(1)); // breaks orthogonality
        auto rep = table.validate();
        if (!rep.pass) {
            detail::fail(r, table.name + ": " +
                                (rep.orthogonality_ok ? "table validation" : "orthogonality"));
            continue;
        }
        std::vector<std::size_t> linear;
        for (std::size_t i = 0; i < table.characters.size(); ++i)
            if (table.degree(table.characters[i]) == 1) linear.push_back(i);
        for (std::size_t ci = 0; ci < table.characters.size(); ++ci)
            for (auto oi : linear) {
                FiniteParameter p{table, table.characters[ci], table.characters[oi]};
                long long s = twisted_sym2_mult(p);
                long long w = twisted_wedge2_mult(p);
                ClassFunction dual =
                    fp_detail::conj_times(table, p.chi, p.omega);
                long long expect = (dual == p.chi) ? 1 : 0;
                if (s + w != expect)
                    detail::fail(r, table.name + "/" + table.char_names[ci] + "/" +
                                        table.char_names[oi] + ": mult sum");
                if (expect == 1 && s * w != 0)
                    detail::fail(r, table.name + ": both squares nonzero");
                ++pairs;
            }
    }
    // pinned outcomes
    auto type_of = [](const ClassFunctionTable& t, const std::string& chi,
                      const std::string& omega) {
        return dichotomy({t, t.character(chi), t.character(omega)}).type;
    };
    auto q8 = tables::q8();
    auto s3 = tables::s3();
    auto s4 = tables::s4();
    auto d4 = tables::d4();
    if (type_of(q8, "2dim", "triv") != DichotomyType::odd_type) detail::fail(r, "Q8 type");
    if (type_of(s3, "2dim", "triv") != DichotomyType::even_type) detail::fail(r, "S3 type");
    if (type_of(s4, "2dim", "triv") != DichotomyType::even_type) detail::fail(r, "S4 2dim type");
    if (type_of(s4, "3dim", "triv") != DichotomyType::even_type) detail::fail(r, "S4 3dim type");
    if (type_of(s4, "3dimsgn", "triv") != DichotomyType::even_type)
        detail::fail(r, "S4 3dimsgn type");
    if (type_of(d4, "2dim", "triv") != DichotomyType::even_type) detail::fail(r, "D4 type");
    if (type_of(d4, "2dim", "det2") != DichotomyType::odd_type) detail::fail(r, "D4 det2 type");

    // solver cross-checks on matrix realizations
    {
        Matrix<QI> gi = Matrix<QI>::diagonal({QI::i(), -QI::i()});
        Matrix<QI> gj = Matrix<QI>::from_rows({{QI(0), QI(1)}, {QI(-1), QI(0)}});
        auto sol = invariant_form_solver<QI>({gi, gj}, {QI(1), QI(1)});
        if (sol.cls != FormClass::alternating) detail::fail(r, "Q8 solver");
    }
    {
        Matrix<Rat> g3 = Matrix<Rat>::from_rows({{0, -1}, {1, -1}});
        Matrix<Rat> g2 = Matrix<Rat>::from_rows({{0, 1}, {1, 0}});
        auto sol = invariant_form_solver<Rat>({g3, g2}, {Rat(1), Rat(1)});
        if (sol.cls != FormClass::symmetric) detail::fail(r, "S3 solver");
    }
    {
        Matrix<Rat> rot = Matrix<Rat>::from_rows({{0, -1}, {1, 0}});
        Matrix<Rat> ref = Matrix<Rat>::from_rows({{1, 0}, {0, -1}});
        auto sym = invariant_form_solver<Rat>({rot, ref}, {Rat(1), Rat(1)});
        if (sym.cls != FormClass::symmetric) detail::fail(r, "D4 solver (omega = triv)");
        auto alt = invariant_form_solver<Rat>({rot, ref}, {Rat(1), Rat(-1)});
        if (alt.cls != FormClass::alternating) detail::fail(r, "D4 solver (omega = det2)");
    }
    // split vs quasi-split discriminants
    if (!is_trivial(split_vs_quasisplit({q8, q8.character("2dim"), q8.character("triv")})))
        detail::fail(r, "Q8 mu");
    if (split_vs_quasisplit({d4, d4.character("2dim"), d4.character("triv")}) !=
        d4.character("det2"))
        detail::fail(r, "D4 mu");
    if (r.pass) r.detail = std::to_string(pairs) + " (chi, omega) pairs";
    return r;
}

inline Matrix<Rat> random_invertible_4x4(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> dist(-4, 4);
    for (;;) {
        Matrix<Rat> a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = Rat(dist(rng));
        if (det(a) != Rat(0)) return a;
    }
}

inline CheckResult suite_wedge(const Options& opt) {
    CheckResult r{"wedge square", true, "", 0};
    std::mt19937_64 rng(opt.seed);
    SimilitudeForm b6 = wedge_pairing_form();
    Matrix<Rat> prev = Matrix<Rat>::identity(4);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix<Rat> a = random_invertible_4x4(rng);
        auto mu = similitude_factor(wedge_square(a), b6);
        if (!mu || *mu != det(a)) detail::fail(r, "similitude != det at trial " + std::to_string(trial));
        if (wedge_square(a * prev) != wedge_square(a) * wedge_square(prev))
            detail::fail(r, "wedge multiplicativity at trial " + std::to_string(trial));
        if (det(wedge_square(a)) != det(a) * det(a) * det(a))
            detail::fail(r, "det cube at trial " + std::to_string(trial));
        prev = a;
    }
    if (r.pass) r.detail = "100 random matrices";
    return r;
}

inline CheckResult suite_ramanujan(const Options&) {
    CheckResult r{"ramanujan bounds", true, "", 0};
    for (int n = 1; n <= 50; ++n)
        if (gspin_bound(n) != theta_gl(2 * n)) detail::fail(r, "bound identity n=" + std::to_string(n));
    BoundTable def = BoundTable::default_table(24);
    BoundTable zero = BoundTable::zero_table(24);
    for (int m = 3; m <= 24; ++m)
        if (def.at(m) < def.at(m - 1)) detail::fail(r, "monotonicity m=" + std::to_string(m));
    std::size_t checked = 0;
    for (int total = 4; total <= 24; total += 2) {
        int n = total / 2;
        for (const auto& part : partitions_min2(total)) {
            for (const BoundTable* table : {&def, &zero}) {
                Rat best(0);
                for (int p : part)
                    if (table->at(p) > best) best = table->at(p);
                Rat got = transfer_bound(part, *table);
                if (got != best) detail::fail(r, "max rule");
                if (got > gspin_bound(n) || got < Rat(0) || got >= Rat(1, 2))
                    detail::fail(r, "bound range");
                ++checked;
            }
        }
    }
    if (checked < 1000) detail::fail(r, "too few partitions: " + std::to_string(checked));
    if (r.pass) r.detail = std::to_string(checked) + " partition bounds";
    return r;
}

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
    std::vector<std::function<CheckResult()>> suites = {
        [&] { return suite_root_data(opt); },     [&] { return suite_embeddings(opt); },
        [&] { return suite_transfer(opt); },      [&] { return suite_factorization(opt); },
        [&] { return suite_dichotomy(opt); },     [&] { return suite_wedge(opt); },
        [&] { return suite_ramanujan(opt); },
    };
    std::vector<CheckResult> out(suites.size());
    auto timed = [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = suites[i]();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    };
    if (opt.jobs <= 1) {
        for (std::size_t i = 0; i < suites.size(); ++i) out[i] = timed(i);
        return out;
    }
    std::vector<std::future<CheckResult>> futs;
    for (std::size_t i = 0; i < suites.size(); ++i)
        futs.push_back(std::async(std::launch::async, timed, i));
    for (std::size_t i = 0; i < suites.size(); ++i) out[i] = futs[i].get();
    return out;
}

inline bool all_pass(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace gspin::verify
