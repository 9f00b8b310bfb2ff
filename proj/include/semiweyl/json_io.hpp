#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "semiweyl/audit.hpp"
#include "semiweyl/morphism.hpp"
#include "semiweyl/parse.hpp"
#include "semiweyl/text.hpp"

namespace semiweyl {

using json = nlohmann::ordered_json;

// "An" | "Aqhat" | "Wn" | "Aq=<rational>"
inline WeylContext context_from_algebra(const std::string& algebra, int n) {
    if (algebra == "An") return WeylContext::formal_t(n);
    if (algebra == "Aqhat") return WeylContext::family_q(n);
    if (algebra == "Wn") return WeylContext::weyl(n);
    if (algebra.rfind("Aq=", 0) == 0)
        return WeylContext::numeric(n, Rational::from_string(algebra.substr(3)));
    fail(errc::malformed_input, "unknown algebra '" + algebra + "'");
}

// Elements: {"algebra", "n", "terms": [{"exps": [..2n..],
// "coeff": [[exp, "num/den"], ...]}]} with terms grlex-descending and
// coefficient pairs by descending exponent. Rationals are exact strings.
inline json element_to_json(const WeylElement& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json coeff = json::array();
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
            coeff.push_back(json::array({it->first, it->second.str()}));
        terms.push_back(json{{"exps", m.exps}, {"coeff", std::move(coeff)}});
    }
    return json{{"algebra", f.context().algebra_name()},
                {"n", f.context().n()},
                {"terms", std::move(terms)}};
}

inline json element_to_json(const PoissonElement& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json coeff = json::array();
        coeff.push_back(json::array({0, c.str()}));
        terms.push_back(json{{"exps", m.exps}, {"coeff", std::move(coeff)}});
    }
    return json{{"algebra", "Bn"}, {"n", f.n()}, {"terms", std::move(terms)}};
}

namespace detail {

inline void require_fields(const json& j, std::initializer_list<const char*> fields,
                           const char* what) {
    if (!j.is_object()) fail(errc::malformed_input, std::string(what) + ": expected object");
    for (const char* f : fields)
        if (!j.contains(f))
            fail(errc::malformed_input, std::string(what) + ": missing field '" + f + "'");
}

inline Monomial monomial_from_json(const json& exps, int vars) {
    if (!exps.is_array() || static_cast<int>(exps.size()) != vars)
        fail(errc::malformed_input, "exps must hold exactly 2n entries");
    Monomial m(vars);
    for (int i = 0; i < vars; ++i) {
        int e = exps[static_cast<std::size_t>(i)].get<int>();
        if (e < 0) fail(errc::malformed_input, "negative monomial exponent");
        m.exps[static_cast<std::size_t>(i)] = e;
    }
    return m;
}

inline ParamPoly coeff_from_json(const json& coeff) {
    if (!coeff.is_array()) fail(errc::malformed_input, "coeff must be an array");
    ParamPoly c;
    for (const auto& pair : coeff) {
        if (!pair.is_array() || pair.size() != 2)
            fail(errc::malformed_input, "coeff entries are [exp, \"rational\"]");
        c.add_term(pair[0].get<int>(), Rational::from_string(pair[1].get<std::string>()));
    }
    return c;
}

}  // namespace detail

inline WeylElement weyl_from_json(const json& j) {
    detail::require_fields(j, {"algebra", "n", "terms"}, "element");
    WeylContext ctx = context_from_algebra(j["algebra"].get<std::string>(), j["n"].get<int>());
    WeylElement f(ctx);
    for (const auto& term : j["terms"]) {
        detail::require_fields(term, {"exps", "coeff"}, "term");
        f.add_term(detail::monomial_from_json(term["exps"], ctx.vars()),
                   detail::coeff_from_json(term["coeff"]));
    }
    return f;
}

inline PoissonElement poisson_from_json(const json& j) {
    detail::require_fields(j, {"algebra", "n", "terms"}, "element");
    if (j["algebra"].get<std::string>() != "Bn")
        fail(errc::malformed_input, "expected a Bn element");
    int n = j["n"].get<int>();
    PoissonElement f(n);
    for (const auto& term : j["terms"]) {
        detail::require_fields(term, {"exps", "coeff"}, "term");
        ParamPoly c = detail::coeff_from_json(term["coeff"]);
        if (!c.is_constant()) fail(errc::malformed_input, "Bn coefficients are constants");
        f.add_term(detail::monomial_from_json(term["exps"], 2 * n), c.constant_value());
    }
    return f;
}

inline json word_to_json(const std::vector<WordLetter>& word) {
    json out = json::array();
    for (const auto& letter : word) {
        if (std::holds_alternative<LinearLetter>(letter)) {
            const auto& lin = std::get<LinearLetter>(letter);
            out.push_back(json{{"type", "linear"},
                               {"pair", lin.pair},
                               {"a", lin.a.str()},
                               {"b", lin.b.str()},
                               {"c", lin.c.str()},
                               {"d", lin.d.str()}});
        } else {
            const auto& sh = std::get<ShearLetter>(letter);
            out.push_back(json{{"type", sh.dual ? "dual_shear" : "shear"},
                               {"potential", to_string(sh.potential)}});
        }
    }
    return out;
}

inline std::vector<WordLetter> word_from_json(const json& j, int n) {
    std::vector<WordLetter> out;
    for (const auto& letter : j) {
        detail::require_fields(letter, {"type"}, "word letter");
        std::string type = letter["type"].get<std::string>();
        if (type == "linear") {
            detail::require_fields(letter, {"pair", "a", "b", "c", "d"}, "linear letter");
            out.push_back(LinearLetter{letter["pair"].get<int>(),
                                       Rational::from_string(letter["a"].get<std::string>()),
                                       Rational::from_string(letter["b"].get<std::string>()),
                                       Rational::from_string(letter["c"].get<std::string>()),
                                       Rational::from_string(letter["d"].get<std::string>())});
        } else if (type == "shear" || type == "dual_shear") {
            detail::require_fields(letter, {"potential"}, "shear letter");
            out.push_back(ShearLetter{
                type == "dual_shear",
                parse_poisson(letter["potential"].get<std::string>(), n)});
        } else {
            fail(errc::malformed_input, "unknown word letter type '" + type + "'");
        }
    }
    return out;
}

// Morphisms: {"kind", "algebra", "n", "images": [canonical text],
// "validated", "witness"?, "word"?}
inline json morphism_to_json(const GenMorphism& m) {
    json images = json::array();
    std::string algebra;
    if (m.is_weyl_kind()) {
        algebra = m.context().algebra_name();
        for (const auto& img : m.weyl_images()) images.push_back(to_string(img));
    } else {
        algebra = "Bn";
        for (const auto& img : m.poisson_images()) images.push_back(to_string(img));
    }
    json out{{"kind", kind_name(m.kind())},
             {"algebra", algebra},
             {"n", m.n()},
             {"images", std::move(images)},
             {"validated", validation_name(m.validation())}};
    if (m.witness()) {
        out["witness"] = json{{"pair", {m.witness()->j, m.witness()->i}},
                              {"computed", m.witness()->computed},
                              {"expected", m.witness()->expected}};
    }
    if (!m.word().empty()) out["word"] = word_to_json(m.word());
    return out;
}

inline GenMorphism morphism_from_json(const json& j) {
    detail::require_fields(j, {"kind", "n", "images"}, "morphism");
    std::string kind = j["kind"].get<std::string>();
    int n = j["n"].get<int>();

    GenMorphism m = [&] {
        if (kind == "PoissonEndo") {
            std::vector<PoissonElement> images;
            for (const auto& img : j["images"])
                images.push_back(parse_poisson(img.get<std::string>(), n));
            return GenMorphism::poisson_endo(n, std::move(images));
        }
        if (kind != "WeylEndo" && kind != "AHatEndo")
            fail(errc::malformed_input, "unknown morphism kind '" + kind + "'");
        std::string algebra = kind == "AHatEndo"
                                  ? "Aqhat"
                                  : j.value("algebra", std::string("Wn"));
        WeylContext ctx = context_from_algebra(algebra, n);
        std::vector<WeylElement> images;
        for (const auto& img : j["images"])
            images.push_back(parse_weyl(img.get<std::string>(), ctx));
        return kind == "AHatEndo" ? GenMorphism::ahat_endo(n, std::move(images))
                                  : GenMorphism::weyl_endo(ctx, std::move(images));
    }();

    if (j.contains("word")) m.set_word(word_from_json(j["word"], n));
    return m;
}

inline json report_to_json(const AuditReport& report) {
    json summary = json::object();
    for (const auto& [claim, counts] : report.summary)
        summary[claim] = json{{"pass", counts.passed}, {"fail", counts.failed}};
    json results = json::array();
    for (const auto& inst : report.results) {
        json r{{"claim", inst.claim}, {"instance", inst.instance}, {"pass", inst.pass}};
        if (!inst.witness.empty()) {
            json w = json::object();
            for (const auto& [k, v] : inst.witness) w[k] = v;
            r["witness"] = std::move(w);
        }
        results.push_back(std::move(r));
    }
    return json{{"corpus", report.corpus_desc},
                {"claims", report.claims},
                {"summary", std::move(summary)},
                {"results", std::move(results)}};
}

inline AuditReport report_from_json(const json& j) {
    detail::require_fields(j, {"corpus", "claims", "summary", "results"}, "report");
    AuditReport report;
    report.corpus_desc = j["corpus"].get<std::string>();
    for (const auto& c : j["claims"]) report.claims.push_back(c.get<std::string>());
    for (const auto& [claim, counts] : j["summary"].items())
        report.summary[claim] =
            AuditCounts{counts["pass"].get<int>(), counts["fail"].get<int>()};
    for (const auto& r : j["results"]) {
        detail::require_fields(r, {"claim", "instance", "pass"}, "result");
        AuditInstance inst{r["claim"].get<std::string>(),
                           r["instance"].get<std::string>(), r["pass"].get<bool>(), {}};
        if (r.contains("witness"))
            for (const auto& [k, v] : r["witness"].items())
                inst.witness.emplace_back(k, v.get<std::string>());
        report.results.push_back(std::move(inst));
    }
    return report;
}

}  // namespace semiweyl
