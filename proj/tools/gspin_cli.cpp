// Command-line front end: single binary with subcommands over the library.
// Exit codes: 0 = pass, 1 = a check failed, 2 = usage / bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <gspin/json_io.hpp>
#include <gspin/verify.hpp>

using namespace gspin;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint64_t seed = 20240613;
    std::size_t jobs = 1;
};

bool json_mode(const GlobalOpts& g) { return g.format == "json"; }

std::string decimal(const Rat& r, int digits = 6) {
    long double v = static_cast<long double>(r.numerator()) /
                    static_cast<long double>(r.denominator());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lf", digits, v);
    return buf;
}

Parity parse_parity(const std::string& s) {
    if (s == "odd") return Parity::odd;
    if (s == "even") return Parity::even;
    throw CLI::ValidationError("--parity must be odd or even");
}

int cmd_root_datum(const GlobalOpts& g, const std::string& parity, std::size_t n) {
    BasedRootDatum rd =
        parse_parity(parity) == Parity::odd ? build_gspin_odd(n) : build_gspin_even(n);
    AxiomReport rep = check_axioms(rd);
    if (json_mode(g)) {
        json j = to_json(rd);
        j["axioms_pass"] = rep.pass;
        j["cartan"] = cartan_matrix(rd);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gspin " << parity << " n=" << n << ": " << rd.roots.size()
                  << " roots, axioms " << (rep.pass ? "pass" : "FAIL") << "\n";
        std::cout << "simples:";
        for (auto s : rd.simples) std::cout << " " << vector_str(rd.roots[s].exp);
        std::cout << "\ncartan:";
        for (const auto& row : cartan_matrix(rd)) std::cout << " " << vector_str(row);
        std::cout << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_embed_check(const GlobalOpts& g, std::size_t m, std::size_t n,
                    const std::string& direction) {
    EmbedDirection dir;
    if (direction == "odd-in-even")
        dir = EmbedDirection::odd_in_even;
    else if (direction == "even-in-odd")
        dir = EmbedDirection::even_in_odd;
    else
        throw CLI::ValidationError("--direction must be odd-in-even or even-in-odd");
    WellDefinedCertificate cert = check_embedding_well_defined(m, n, dir);
    if (json_mode(g)) {
        json j{{"m", m},
               {"n", n},
               {"direction", direction},
               {"central_route", to_json(cert.central_route)},
               {"derived_route", to_json(cert.derived_route)},
               {"expected", to_json(cert.expected)},
               {"ok", cert.ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "central route: " << cert.central_route.str() << "\n";
        std::cout << "derived route: " << cert.derived_route.str() << "\n";
        std::cout << "expected:      " << cert.expected.str() << "\n";
        std::cout << (cert.ok ? "well-defined" : "MISMATCH") << "\n";
    }
    return cert.ok ? 0 : 1;
}

SatakeCase parse_case(const std::string& s) {
    try {
        return satake_case_from_string(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--case must be odd_split, even_split or even_quasisplit");
    }
}

int cmd_transfer(const GlobalOpts& g, const std::string& cas_str, std::size_t n) {
    SatakeDatum d = SatakeDatum::generic(n, parse_case(cas_str));
    MonomialMultiset out = transfer(d);
    CharacterMonomial omega = d.central();
    CharacterMonomial wc = central_character(out);
    CharacterMonomial disc = split_quasisplit_discriminator(out, omega);
    if (json_mode(g)) {
        json j{{"datum", to_json(d)},
               {"transfer", to_json(out)},
               {"central_character", wc.str()},
               {"discriminator", disc.str()}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "transfer:";
        for (const auto& m : out) std::cout << " " << m.str();
        std::cout << "\ncentral character: " << wc.str() << "\n";
        std::cout << "mu = omega_Pi * omega^-" << n << ": " << disc.str() << "\n";
    }
    return 0;
}

int cmd_factors(const GlobalOpts& g, const std::string& cas_str, std::size_t n,
                std::size_t m) {
    if (m == 0) m = n;
    SatakeDatum d = SatakeDatum::generic(n, parse_case(cas_str));
    MonomialMultiset tau;
    for (std::size_t i = 1; i <= m; ++i)
        tau.push_back(CharacterMonomial::symbol("eta" + std::to_string(i)));
    UnramifiedRatio ratio = unramified_ratio(d, tau, d.central());
    MonomialMultiset out = transfer(d);
    bool fact_ok = check_tensor_factorization(out, d.central().inverse());
    if (json_mode(g)) {
        json j{{"numerator", to_json(ratio.numerator.inverse_roots)},
               {"denominator", to_json(ratio.denominator.inverse_roots)},
               {"denominator_at_2s", ratio.denominator.doubled_variable},
               {"tensor_factorization_ok", fact_ok},
               {"wedge_pole_multiplicity",
                pole_multiplicity_at_one(wedge2_factor(out, d.central().inverse()))}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "L(s, pi x tau) = " << ratio.numerator.str() << "\n";
        std::cout << "L(2s, tau, "
                  << (d.cas == SatakeCase::odd_split ? "wedge2" : "sym2")
                  << " x omega^-1) = " << ratio.denominator.str() << "\n";
        std::cout << "tensor = sym2 * wedge2: " << (fact_ok ? "ok" : "FAIL") << "\n";
        std::cout << "trivial wedge2 roots (twist chi0^-1): "
                  << pole_multiplicity_at_one(wedge2_factor(out, d.central().inverse()))
                  << "\n";
    }
    return fact_ok ? 0 : 1;
}

std::string form_class_str(FormClass c) {
    switch (c) {
        case FormClass::alternating: return "alternating";
        case FormClass::symmetric: return "symmetric";
        case FormClass::none: return "none";
        case FormClass::ambiguous: return "ambiguous";
    }
    return "?";
}

int cmd_detect(const GlobalOpts& g, const std::string& fixture, const std::string& input) {
    std::vector<Matrix<Rat>> gens;
    std::vector<Rat> sims;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw CLI::ValidationError("cannot open " + input);
        json j;
        in >> j;
        for (const auto& m : j.at("generators")) gens.push_back(rat_matrix_from_json(m));
        for (const auto& s : j.at("similitudes"))
            sims.push_back(parse_rational(s.get<std::string>()));
    } else if (fixture == "s3") {
        gens = {Matrix<Rat>::from_rows({{0, -1}, {1, -1}}),
                Matrix<Rat>::from_rows({{0, 1}, {1, 0}})};
        sims = {Rat(1), Rat(1)};
    } else if (fixture == "sl2") {
        gens = {Matrix<Rat>::from_rows({{0, 1}, {-1, 0}}),
                Matrix<Rat>::from_rows({{1, 1}, {0, 1}})};
        sims = {Rat(1), Rat(1)};
    } else if (fixture == "d4") {
        gens = {Matrix<Rat>::from_rows({{0, -1}, {1, 0}}),
                Matrix<Rat>::from_rows({{1, 0}, {0, -1}})};
        sims = {Rat(1), Rat(1)};
    } else if (fixture == "d4-twisted") {
        gens = {Matrix<Rat>::from_rows({{0, -1}, {1, 0}}),
                Matrix<Rat>::from_rows({{1, 0}, {0, -1}})};
        sims = {Rat(1), Rat(-1)};
    } else {
        throw CLI::ValidationError("need --input or --fixture s3|sl2|d4|d4-twisted");
    }
    auto sol = invariant_form_solver<Rat>(gens, sims);
    if (json_mode(g)) {
        json j{{"class", form_class_str(sol.cls)}, {"dimension", sol.dimension}};
        if (sol.dimension > 0) j["form"] = to_json(sol.form);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "invariant form space: " << form_class_str(sol.cls) << " (dimension "
                  << sol.dimension << ")\n";
        if (sol.dimension > 0)
            for (std::size_t i = 0; i < sol.form.rows(); ++i) {
                for (std::size_t k = 0; k < sol.form.cols(); ++k)
                    std::cout << (k ? " " : "  ") << to_string(sol.form(i, k));
                std::cout << "\n";
            }
    }
    return (sol.cls == FormClass::none) ? 1 : 0;
}

int cmd_fs(const GlobalOpts& g, const std::string& group, const std::string& chi,
           const std::string& omega, const std::string& table_path) {
    ClassFunctionTable table;
    if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in) throw CLI::ValidationError("cannot open " + table_path);
        json j;
        in >> j;
        table = table_from_json(j);
    } else {
        table = tables::builtin(group);
    }
    std::string omega_name = (omega == "trivial") ? "triv" : omega;
    FiniteParameter p{table, table.character(chi), table.character(omega_name)};
    DichotomyResult res = dichotomy(p);
    if (json_mode(g)) {
        json j{{"group", table.name},
               {"chi", chi},
               {"omega", omega_name},
               {"sym2_mult", res.sym2},
               {"wedge2_mult", res.wedge2},
               {"self_omega_dual", res.self_omega_dual},
               {"type", to_string(res.type)}};
        if (res.type == DichotomyType::odd_type || res.type == DichotomyType::even_type) {
            ClassFunction mu = split_vs_quasisplit(p);
            j["mu_trivial"] = is_trivial(mu);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(res.type) << "\n";
        std::cout << "sym2 mult " << res.sym2 << ", wedge2 mult " << res.wedge2 << "\n";
        if (res.type == DichotomyType::odd_type || res.type == DichotomyType::even_type)
            std::cout << "mu " << (is_trivial(split_vs_quasisplit(p)) ? "trivial (split model)"
                                                                      : "nontrivial (quasi-split model)")
                      << "\n";
    }
    return 0;
}

int cmd_ramanujan(const GlobalOpts& g, int n, const std::string& partition,
                  const std::string& table_path) {
    BoundTable table = BoundTable::default_table(std::max(2 * n, 4));
    if (!table_path.empty()) {
        std::ifstream in(table_path);
        if (!in) throw CLI::ValidationError("cannot open " + table_path);
        json j;
        in >> j;
        table = bound_table_from_json(j);
    }
    Rat bound;
    std::vector<int> parts;
    if (!partition.empty()) {
        std::stringstream ss(partition);
        std::string tok;
        while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
        bound = transfer_bound(parts, table);
    } else {
        bound = gspin_bound(n);
    }
    if (json_mode(g)) {
        json j{{"n", n}, {"bound", to_string(bound)}, {"decimal", decimal(bound)}};
        if (!parts.empty()) j["partition"] = parts;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(bound) << " (" << decimal(bound) << ")\n";
    }
    return 0;
}

int cmd_verify_all(const GlobalOpts& g, std::size_t max_rank, bool corrupt) {
    verify::Options opt;
    opt.max_rank = max_rank;
    opt.seed = g.seed;
    opt.jobs = g.jobs;
    opt.corrupt_fixture = corrupt;
    auto results = verify::run_all(opt);
    if (json_mode(g)) {
        json j = json::array();
        for (const auto& r : results)
            j.push_back({{"name", r.name},
                         {"pass", r.pass},
                         {"detail", r.detail},
                         {"seconds", r.seconds}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results)
            std::printf("%-22s %s  %s (%.3fs)\n", r.name.c_str(),
                        r.pass ? "pass" : "FAIL", r.detail.c_str(), r.seconds);
    }
    return verify::all_pass(results) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic toolkit for general spin transfer combinatorics"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "seed for randomized property checks");
    app.add_option("--jobs", g.jobs, "worker count for sweeps");

    std::string parity = "odd", direction = "odd-in-even", cas = "odd_split";
    std::size_t n = 2, m = 0;
    int rn = 2;
    std::string partition, table_path, fixture, input, group = "Q8", chi = "2dim",
                                                      omega = "trivial";
    std::size_t max_rank = 6;
    bool corrupt = false;

    auto* c_rd = app.add_subcommand("root-datum", "build a root datum and check the axioms");
    c_rd->add_option("--parity", parity, "odd or even")->required();
    c_rd->add_option("--n", n, "rank")->required();

    auto* c_embed = app.add_subcommand("embed-check", "center well-definedness certificate");
    c_embed->add_option("--m", m, "domain rank")->required();
    c_embed->add_option("--n", n, "codomain rank")->required();
    c_embed->add_option("--direction", direction, "odd-in-even or even-in-odd");

    auto* c_tr = app.add_subcommand("transfer", "unramified transfer to GL(2n)");
    c_tr->add_option("--case", cas, "odd_split, even_split or even_quasisplit")->required();
    c_tr->add_option("--n", n, "rank")->required();

    auto* c_fac = app.add_subcommand("factors", "local L-factor ratio and identities");
    c_fac->add_option("--case", cas, "odd_split, even_split or even_quasisplit")->required();
    c_fac->add_option("--n", n, "rank")->required();
    c_fac->add_option("--m", m, "tau rank (default n)");

    auto* c_det = app.add_subcommand("detect", "invariant bilinear form type of generators");
    c_det->add_option("--fixture", fixture, "s3, sl2, d4 or d4-twisted");
    c_det->add_option("--input", input, "JSON file with generators and similitudes");

    auto* c_fs = app.add_subcommand("fs", "twisted Frobenius-Schur dichotomy");
    c_fs->add_option("--group", group, "built-in table name (C2, C3, C4, S3, D4, Q8, S4)");
    c_fs->add_option("--chi", chi, "character name")->required();
    c_fs->add_option("--omega", omega, "linear character name, or 'trivial'");
    c_fs->add_option("--table", table_path, "JSON character table override");

    auto* c_ram = app.add_subcommand("ramanujan", "bound calculator");
    c_ram->add_option("--n", rn, "rank")->required();
    c_ram->add_option("--partition", partition, "comma-separated parts, e.g. 2,4");
    c_ram->add_option("--table", table_path, "JSON bound table override");

    auto* c_all = app.add_subcommand("verify-all", "run every verification sweep");
    c_all->add_option("--max-rank", max_rank, "sweep bound for rank loops");
    c_all->add_flag("--corrupt-fixture", corrupt, "inject a table fault (self-test)");

    try {
        app.parse(argc, argv);
        if (c_rd->parsed()) return cmd_root_datum(g, parity, n);
        if (c_embed->parsed()) return cmd_embed_check(g, m, n, direction);
        if (c_tr->parsed()) return cmd_transfer(g, cas, n);
        if (c_fac->parsed()) return cmd_factors(g, cas, n, m);
        if (c_det->parsed()) return cmd_detect(g, fixture, input);
        if (c_fs->parsed()) return cmd_fs(g, group, chi, omega, table_path);
        if (c_ram->parsed()) return cmd_ramanujan(g, rn, partition, table_path);
        if (c_all->parsed()) return cmd_verify_all(g, max_rank, corrupt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
