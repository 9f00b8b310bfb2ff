#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "semiweyl/morphism.hpp"
#include "semiweyl/text.hpp"

namespace semiweyl {

// One claim instance. A failing instance carries a reproducible witness:
// the inputs and both sides of the violated identity, in canonical text.
struct AuditInstance {
    std::string claim;
    std::string instance;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> witness;
};

struct AuditCounts {
    int passed = 0;
    int failed = 0;
};

struct AuditReport {
    std::string corpus_desc;
    std::vector<std::string> claims;
    std::vector<AuditInstance> results;
    std::map<std::string, AuditCounts> summary;

    void record(AuditInstance inst) {
        auto& counts = summary[inst.claim];
        (inst.pass ? counts.passed : counts.failed) += 1;
        results.push_back(std::move(inst));
    }

    bool all_pass(const std::string& claim) const {
        auto it = summary.find(claim);
        return it == summary.end() || it->second.failed == 0;
    }
};

// Empirical audit of the transport claims on a concrete corpus. The
// harness asserts nothing: every instance is measured and reported.
//   C1  psi_transport(s) validates as a Poisson endomorphism
//   C2  psi_transport(s.t) = psi_transport(s) . psi_transport(t)
//   C3  s != t  =>  transported generator images differ
//   C4  transport of the identity is the identity
//   C5  varphi(s.t) = varphi(s).varphi(t) on the A-hat pool
// The A-hat pool for C5 is the identity, every psi-conjugate of a corpus
// element that lands in the polynomial-coefficient subalgebra, and any
// AHatEndo present in the corpus itself.
inline AuditReport audit_psi(const std::vector<GenMorphism>& corpus,
                             const std::set<std::string>& claims) {
    AuditReport report;
    report.claims.assign(claims.begin(), claims.end());

    std::vector<GenMorphism> weyls;
    std::vector<GenMorphism> ahats;
    for (const auto& raw : corpus) {
        GenMorphism m = raw.validation() == Validation::unchecked ? validate(raw) : raw;
        if (m.validation() != Validation::valid)
            fail(errc::not_validated, "audit corpus contains an invalid morphism");
        if (m.kind() == MorKind::weyl_endo && m.context().mode() == AlgebraMode::numeric &&
            m.context().q().is_one())
            weyls.push_back(std::move(m));
        else if (m.kind() == MorKind::ahat_endo)
            ahats.push_back(std::move(m));
    }

    const int n = weyls.empty() ? (ahats.empty() ? 1 : ahats.front().n())
                                : weyls.front().context().n();

    // transports are reused across C1/C2/C3
    std::vector<GenMorphism> transported;
    transported.reserve(weyls.size());
    for (const auto& s : weyls) transported.push_back(psi_transport(s));

    auto name = [](std::size_t i) { return "sigma#" + std::to_string(i); };

    if (claims.count("C1")) {
        for (std::size_t i = 0; i < weyls.size(); ++i) {
            AuditInstance inst{"C1", name(i), true, {}};
            const GenMorphism& t = transported[i];
            if (t.validation() != Validation::valid) {
                inst.pass = false;
                if (t.witness()) {
                    inst.witness.emplace_back(
                        "pair", "{x" + std::to_string(t.witness()->j) + ",x" +
                                    std::to_string(t.witness()->i) + "}");
                    inst.witness.emplace_back("bracket", t.witness()->computed);
                    inst.witness.emplace_back("expected", t.witness()->expected);
                }
                for (int g = 0; g < 2 * n; ++g)
                    inst.witness.emplace_back(
                        "Psi(x" + std::to_string(g + 1) + ")",
                        to_string(t.poisson_images()[static_cast<std::size_t>(g)]));
            }
            report.record(std::move(inst));
        }
    }

    if (claims.count("C2")) {
        for (std::size_t i = 0; i < weyls.size(); ++i) {
            for (std::size_t j = 0; j < weyls.size(); ++j) {
                AuditInstance inst{"C2", name(i) + "." + name(j), true, {}};
                GenMorphism lhs = psi_transport(compose(weyls[i], weyls[j]));
                for (int g = 1; g <= 2 * n; ++g) {
                    PoissonElement left =
                        lhs.poisson_images()[static_cast<std::size_t>(g - 1)];
                    PoissonElement right = apply(
                        transported[i],
                        transported[j].poisson_images()[static_cast<std::size_t>(g - 1)]);
                    if (left != right) {
                        inst.pass = false;
                        inst.witness.emplace_back("generator", "x" + std::to_string(g));
                        inst.witness.emplace_back("Psi(compose)", to_string(left));
                        inst.witness.emplace_back("compose(Psi)", to_string(right));
                        break;
                    }
                }
                report.record(std::move(inst));
            }
        }
    }

    if (claims.count("C3")) {
        for (std::size_t i = 0; i < weyls.size(); ++i) {
            for (std::size_t j = i + 1; j < weyls.size(); ++j) {
                if (weyls[i] == weyls[j]) continue;  // not distinct as data
                AuditInstance inst{"C3", name(i) + "!=" + name(j), true, {}};
                if (transported[i] == transported[j]) {
                    inst.pass = false;
                    for (int g = 0; g < 2 * n; ++g)
                        inst.witness.emplace_back(
                            "Psi(x" + std::to_string(g + 1) + ")",
                            to_string(
                                transported[i].poisson_images()[static_cast<std::size_t>(g)]));
                }
                report.record(std::move(inst));
            }
        }
    }

    if (claims.count("C4")) {
        GenMorphism id = validate(GenMorphism::identity_weyl(WeylContext::weyl(n)));
        AuditInstance inst{"C4", "identity", true, {}};
        GenMorphism t = psi_transport(id);
        if (t != GenMorphism::identity_poisson(n)) {
            inst.pass = false;
            for (int g = 0; g < 2 * n; ++g)
                inst.witness.emplace_back(
                    "Psi(x" + std::to_string(g + 1) + ")",
                    to_string(t.poisson_images()[static_cast<std::size_t>(g)]));
        }
        report.record(std::move(inst));
    }

    if (claims.count("C5")) {
        std::vector<GenMorphism> pool;
        std::vector<std::string> pool_names;
        pool.push_back(validate(GenMorphism::identity_ahat(n)));
        pool_names.push_back("id");
        for (std::size_t i = 0; i < weyls.size(); ++i) {
            if (auto conj = conjugate_by_psi(weyls[i])) {
                pool.push_back(std::move(*conj));
                pool_names.push_back("conj(" + name(i) + ")");
            }
        }
        for (std::size_t i = 0; i < ahats.size(); ++i) {
            pool.push_back(ahats[i]);
            pool_names.push_back("ahat#" + std::to_string(i));
        }

        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = 0; j < pool.size(); ++j) {
                AuditInstance inst{"C5", pool_names[i] + "." + pool_names[j], true, {}};
                GenMorphism lhs = varphi(compose(pool[i], pool[j]));
                GenMorphism rhs = compose(varphi(pool[i]), varphi(pool[j]));
                if (lhs != rhs) {
                    inst.pass = false;
                    for (int g = 1; g <= 2 * n; ++g) {
                        PoissonElement left =
                            lhs.poisson_images()[static_cast<std::size_t>(g - 1)];
                        PoissonElement right =
                            rhs.poisson_images()[static_cast<std::size_t>(g - 1)];
                        if (left != right) {
                            inst.witness.emplace_back("generator", "x" + std::to_string(g));
                            inst.witness.emplace_back("varphi(compose)", to_string(left));
                            inst.witness.emplace_back("compose(varphi)", to_string(right));
                            break;
                        }
                    }
                }
                report.record(std::move(inst));
            }
        }

        report.corpus_desc = std::to_string(weyls.size()) + " WeylEndo(Wn), n=" +
                             std::to_string(n) + "; A-hat pool for C5: " +
                             std::to_string(pool.size()) +
                             " (identity + psi-conjugates with polynomial coefficients + " +
                             std::to_string(ahats.size()) + " given)";
    } else {
        report.corpus_desc = std::to_string(weyls.size()) + " WeylEndo(Wn), n=" +
                             std::to_string(n);
    }

    return report;
}

}  // namespace semiweyl
