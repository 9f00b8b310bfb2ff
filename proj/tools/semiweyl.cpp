// semiweyl: exact computations in Weyl algebras, their parametric family,
// and the Poisson Weyl algebra, plus endomorphism transport and audit.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "semiweyl/audit.hpp"
#include "semiweyl/bridge.hpp"
#include "semiweyl/json_io.hpp"
#include "semiweyl/morphism.hpp"
#include "semiweyl/parse.hpp"
#include "semiweyl/random_gen.hpp"
#include "semiweyl/selftest.hpp"
#include "semiweyl/text.hpp"

namespace sw = semiweyl;

namespace {

void print_element(const sw::WeylElement& f) {
    std::cout << sw::to_string(f) << "\n" << sw::element_to_json(f).dump() << "\n";
}

void print_element(const sw::PoissonElement& f) {
    std::cout << sw::to_string(f) << "\n" << sw::element_to_json(f).dump() << "\n";
}

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) sw::fail(sw::errc::malformed_input, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

sw::json parse_json_text(const std::string& text, const std::string& what) {
    sw::json j = sw::json::parse(text, nullptr, false);
    if (j.is_discarded())
        sw::fail(sw::errc::malformed_input, "invalid JSON in " + what);
    return j;
}

sw::GenMorphism load_morphism(const std::string& path) {
    return sw::morphism_from_json(parse_json_text(read_source(path), path));
}

struct BenchRow {
    int n;
    int degree;
    long long fast_ns;
    long long oracle_ns;
    bool equal;
};

BenchRow bench_one(int n, int degree, std::uint64_t seed) {
    sw::detail::SplitMix64 rng{seed + static_cast<std::uint64_t>(degree)};
    sw::WeylContext ctx = sw::WeylContext::formal_t(n);
    sw::WeylElement f = sw::random_weyl_element(rng, ctx, degree, 3, 8);
    sw::WeylElement g = sw::random_weyl_element(rng, ctx, degree, 3, 8);

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    sw::WeylElement fast = sw::weyl_mul(f, g);
    auto t1 = clock::now();
    sw::WeylElement slow = sw::rewrite_oracle(f, g);
    auto t2 = clock::now();

    return BenchRow{
        n, degree,
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
        std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count(),
        fast == slow};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weyl / Poisson Weyl algebra toolkit"};
    app.require_subcommand(1);

    // --- element subcommands -------------------------------------------
    struct ElementArgs {
        std::string algebra = "Wn";
        int n = 1;
        std::string expr, expr2;
        std::string q = "1";
    } ea;

    auto add_algebra = [&](CLI::App* cmd, bool with_bn) {
        std::string help = with_bn ? "An|Wn|Aq=<r>|Aqhat|Bn" : "An|Wn|Aq=<r>|Aqhat";
        cmd->add_option("--algebra", ea.algebra, help);
        cmd->add_option("--n", ea.n, "number of symplectic pairs")->required();
    };

    CLI::App* normalform = app.add_subcommand("normalform", "normal form of an expression");
    add_algebra(normalform, true);
    normalform->add_option("expr", ea.expr)->required();

    CLI::App* comm = app.add_subcommand("commutator", "f*g - g*f in normal form");
    add_algebra(comm, false);
    comm->add_option("f", ea.expr)->required();
    comm->add_option("g", ea.expr2)->required();

    CLI::App* bracket = app.add_subcommand("bracket", "Poisson bracket {f,g} in Bn");
    bracket->add_option("--n", ea.n)->required();
    bracket->add_option("f", ea.expr)->required();
    bracket->add_option("g", ea.expr2)->required();

    CLI::App* scl = app.add_subcommand(
        "scl-bracket", "semiclassical bracket of Bn elements (lift, commute, divide by h)");
    scl->add_option("--n", ea.n)->required();
    scl->add_option("f", ea.expr)->required();
    scl->add_option("g", ea.expr2)->required();

    CLI::App* ghat = app.add_subcommand("gamma-hat", "evaluate coefficients at h=0 into Bn");
    ghat->add_option("--algebra", ea.algebra, "An|Aqhat")->default_val("Aqhat");
    ghat->add_option("--n", ea.n)->required();
    ghat->add_option("expr", ea.expr)->required();

    CLI::App* psi_cmd = app.add_subcommand("psi", "even-slot rescaling x_{2l} -> h*x_{2l}");
    psi_cmd->add_option("--n", ea.n)->required();
    psi_cmd->add_option("expr", ea.expr)->required();

    CLI::App* psi_inv_cmd = app.add_subcommand("psi-inv", "inverse of psi");
    psi_inv_cmd->add_option("--n", ea.n)->required();
    psi_inv_cmd->add_option("expr", ea.expr)->required();

    CLI::App* spec_cmd = app.add_subcommand("specialize", "evaluate coefficients at h=q");
    spec_cmd->add_option("--algebra", ea.algebra, "An|Aqhat")->default_val("An");
    spec_cmd->add_option("--n", ea.n)->required();
    spec_cmd->add_option("--q", ea.q, "nonzero rational")->required();
    spec_cmd->add_option("expr", ea.expr)->required();

    // --- morphism subcommands ------------------------------------------
    struct MorphArgs {
        std::string in = "-";
        std::string with;
        std::string expr;
    } ma;

    CLI::App* morph = app.add_subcommand("morphism", "operate on generator-image morphisms");
    morph->require_subcommand(1);
    CLI::App* mvalidate = morph->add_subcommand("validate", "check the defining relations");
    CLI::App* mapply = morph->add_subcommand("apply", "apply to an expression");
    CLI::App* mcompose = morph->add_subcommand("compose", "compose: (--in) after (--with)");
    CLI::App* mvarphi = morph->add_subcommand("varphi", "AHatEndo -> PoissonEndo via h=0");
    CLI::App* mtransport =
        morph->add_subcommand("psi-transport", "End(Wn) -> Poisson side via psi conjugation");
    for (CLI::App* c : {mvalidate, mapply, mcompose, mvarphi, mtransport})
        c->add_option("--in", ma.in, "morphism JSON file or - for stdin");
    mapply->add_option("expr", ma.expr)->required();
    mcompose->add_option("--with", ma.with, "morphism applied first")->required();

    // --- corpus / audit --------------------------------------------------
    struct CorpusArgs {
        int n = 1;
        std::uint64_t seed = 1;
        int size = 20;
        int max_word = 2;
    } ca;

    CLI::App* corpus = app.add_subcommand("corpus", "deterministic tame endomorphism corpus");
    corpus->add_option("--n", ca.n)->required();
    corpus->add_option("--seed", ca.seed)->required();
    corpus->add_option("--size", ca.size)->required();
    corpus->add_option("--max-word", ca.max_word, "max generator word length");

    struct AuditArgs {
        std::string corpus_path;
        std::string claims = "C1,C2,C3,C4,C5";
        std::string out;
    } aa;

    CLI::App* audit = app.add_subcommand("audit", "run transport claims over a corpus");
    audit->add_option("--corpus", aa.corpus_path, "morphism JSON list")->required();
    audit->add_option("--claims", aa.claims, "comma-separated subset of C1..C5");
    audit->add_option("--out", aa.out, "write the report JSON here");

    CLI::App* selftest = app.add_subcommand("selftest", "run the invariant suite");

    struct BenchArgs {
        int max_degree = 6;
        int n = 1;
        std::uint64_t seed = 42;
    } ba;

    CLI::App* bench = app.add_subcommand("bench", "weyl_mul vs rewrite_oracle timings (CSV)");
    bench->add_option("--max-degree", ba.max_degree)->required();
    bench->add_option("--n", ba.n);
    bench->add_option("--seed", ba.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*normalform) {
            if (ea.algebra == "Bn") {
                print_element(sw::parse_poisson(ea.expr, ea.n));
            } else {
                sw::WeylContext ctx = sw::context_from_algebra(ea.algebra, ea.n);
                print_element(sw::parse_weyl(ea.expr, ctx));
            }
        } else if (*comm) {
            sw::WeylContext ctx = sw::context_from_algebra(ea.algebra, ea.n);
            print_element(
                sw::commutator(sw::parse_weyl(ea.expr, ctx), sw::parse_weyl(ea.expr2, ctx)));
        } else if (*bracket) {
            print_element(sw::poisson_bracket(sw::parse_poisson(ea.expr, ea.n),
                                              sw::parse_poisson(ea.expr2, ea.n)));
        } else if (*scl) {
            print_element(sw::semiclassical_bracket(sw::parse_poisson(ea.expr, ea.n),
                                                    sw::parse_poisson(ea.expr2, ea.n)));
        } else if (*ghat) {
            sw::WeylContext ctx = sw::context_from_algebra(ea.algebra, ea.n);
            print_element(sw::gamma_hat(sw::parse_weyl(ea.expr, ctx)));
        } else if (*psi_cmd || *psi_inv_cmd) {
            sw::WeylContext ctx = sw::WeylContext::family_q(ea.n);
            sw::WeylElement f = sw::parse_weyl(ea.expr, ctx);
            print_element(*psi_cmd ? sw::psi(f) : sw::psi_inverse(f));
        } else if (*spec_cmd) {
            sw::WeylContext ctx = sw::context_from_algebra(ea.algebra, ea.n);
            print_element(
                sw::specialize(sw::parse_weyl(ea.expr, ctx), sw::Rational::from_string(ea.q)));
        } else if (*mvalidate) {
            std::cout << sw::morphism_to_json(sw::validate(load_morphism(ma.in))).dump(2)
                      << "\n";
        } else if (*mapply) {
            sw::GenMorphism m = sw::validate(load_morphism(ma.in));
            if (m.is_weyl_kind())
                print_element(sw::apply(m, sw::parse_weyl(ma.expr, m.context())));
            else
                print_element(sw::apply(m, sw::parse_poisson(ma.expr, m.n())));
        } else if (*mcompose) {
            sw::GenMorphism outer = sw::validate(load_morphism(ma.in));
            sw::GenMorphism inner = sw::validate(load_morphism(ma.with));
            std::cout << sw::morphism_to_json(sw::compose(outer, inner)).dump(2) << "\n";
        } else if (*mvarphi) {
            std::cout << sw::morphism_to_json(sw::varphi(sw::validate(load_morphism(ma.in))))
                             .dump(2)
                      << "\n";
        } else if (*mtransport) {
            std::cout << sw::morphism_to_json(
                             sw::psi_transport(sw::validate(load_morphism(ma.in))))
                             .dump(2)
                      << "\n";
        } else if (*corpus) {
            sw::json out = sw::json::array();
            for (const auto& m : sw::tame_corpus(ca.n, ca.seed, ca.size, ca.max_word))
                out.push_back(sw::morphism_to_json(m));
            std::cout << out.dump(2) << "\n";
        } else if (*audit) {
            sw::json raw = parse_json_text(read_source(aa.corpus_path), aa.corpus_path);
            if (!raw.is_array())
                sw::fail(sw::errc::malformed_input, "corpus must be a JSON array");
            std::vector<sw::GenMorphism> morphisms;
            for (const auto& j : raw)
                morphisms.push_back(sw::validate(sw::morphism_from_json(j)));
            std::set<std::string> claims;
            std::stringstream ss(aa.claims);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) claims.insert(item);
            sw::AuditReport report = sw::audit_psi(morphisms, claims);
            sw::json rj = sw::report_to_json(report);
            if (aa.out.empty()) {
                std::cout << rj.dump(2) << "\n";
            } else {
                std::ofstream out(aa.out);
                if (!out) sw::fail(sw::errc::malformed_input, "cannot write '" + aa.out + "'");
                out << rj.dump(2) << "\n";
            }
            for (const auto& [claim, counts] : report.summary)
                std::cerr << claim << ": " << counts.passed << " pass, " << counts.failed
                          << " fail\n";
        } else if (*selftest) {
            return sw::run_selftest(std::cout) ? 0 : 1;
        } else if (*bench) {
            std::cout << "n,degree,weyl_mul_ns,rewrite_oracle_ns,equal\n";
            for (int d = 1; d <= ba.max_degree; ++d) {
                BenchRow row = bench_one(ba.n, d, ba.seed);
                std::cout << row.n << "," << row.degree << "," << row.fast_ns << ","
                          << row.oracle_ns << "," << (row.equal ? "true" : "false") << "\n";
            }
        }
    } catch (const sw::error& e) {
        sw::json err{{"error", sw::errc_name(e.code())}, {"message", e.what()}};
        if (e.has_position()) err["position"] = e.position();
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << sw::json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 0;
}
