#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semiweyl/bridge.hpp"
#include "semiweyl/error.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/rng.hpp"
#include "semiweyl/text.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

enum class MorKind { weyl_endo, ahat_endo, poisson_endo };

inline const char* kind_name(MorKind k) {
    switch (k) {
        case MorKind::weyl_endo: return "WeylEndo";
        case MorKind::ahat_endo: return "AHatEndo";
        case MorKind::poisson_endo: return "PoissonEndo";
    }
    return "?";
}

enum class Validation { unchecked, valid, invalid };

inline const char* validation_name(Validation v) {
    switch (v) {
        case Validation::unchecked: return "unchecked";
        case Validation::valid: return "valid";
        case Validation::invalid: return "invalid";
    }
    return "?";
}

// Witness for a violated defining relation: the generator pair and both
// sides in canonical text.
struct RelationWitness {
    int j = 0, i = 0;
    std::string computed;
    std::string expected;
};

// Generator word provenance, kept so an inverse witness can be built by
// reversing the word and inverting each letter.
struct LinearLetter {
    int pair = 1;  // acts on (x_{2*pair-1}, x_{2*pair})
    Rational a, b, c, d;  // det must be 1
};

struct ShearLetter {
    bool dual = false;         // false: even generators shift, true: odd
    PoissonElement potential;  // F in odd variables / G in even variables
};

using WordLetter = std::variant<LinearLetter, ShearLetter>;

// Endomorphism given by its 2n generator images. Immutable after
// construction; `validate` returns a copy carrying the verdict.
class GenMorphism {
public:
    static GenMorphism weyl_endo(const WeylContext& ctx, std::vector<WeylElement> images) {
        GenMorphism m(MorKind::weyl_endo, ctx.n());
        m.wctx_ = ctx;
        check_weyl_images(ctx, images);
        m.wimages_ = std::move(images);
        return m;
    }

    static GenMorphism ahat_endo(int n, std::vector<WeylElement> images) {
        GenMorphism m(MorKind::ahat_endo, n);
        WeylContext ctx = WeylContext::family_q(n);
        m.wctx_ = ctx;
        check_weyl_images(ctx, images);
        for (const auto& img : images)
            if (!in_A_hat(img))
                fail(errc::not_in_a_hat, "A-hat image carries negative powers of h");
        m.wimages_ = std::move(images);
        return m;
    }

    static GenMorphism poisson_endo(int n, std::vector<PoissonElement> images) {
        GenMorphism m(MorKind::poisson_endo, n);
        if (static_cast<int>(images.size()) != 2 * n)
            fail(errc::arity_mismatch, "need exactly 2n generator images");
        for (const auto& img : images)
            if (img.n() != n) fail(errc::arity_mismatch, "image arity mismatch");
        m.pimages_ = std::move(images);
        return m;
    }

    static GenMorphism identity_weyl(const WeylContext& ctx) {
        std::vector<WeylElement> images;
        for (int i = 1; i <= ctx.vars(); ++i)
            images.push_back(WeylElement::generator(ctx, i));
        return weyl_endo(ctx, std::move(images));
    }

    static GenMorphism identity_ahat(int n) {
        WeylContext ctx = WeylContext::family_q(n);
        std::vector<WeylElement> images;
        for (int i = 1; i <= ctx.vars(); ++i)
            images.push_back(WeylElement::generator(ctx, i));
        return ahat_endo(n, std::move(images));
    }

    static GenMorphism identity_poisson(int n) {
        std::vector<PoissonElement> images;
        for (int i = 1; i <= 2 * n; ++i)
            images.push_back(PoissonElement::generator(n, i));
        return poisson_endo(n, std::move(images));
    }

    MorKind kind() const { return kind_; }
    int n() const { return n_; }
    bool is_weyl_kind() const { return kind_ != MorKind::poisson_endo; }

    const WeylContext& context() const {
        if (!wctx_) fail(errc::kind_mismatch, "poisson morphism has no Weyl context");
        return *wctx_;
    }

    const std::vector<WeylElement>& weyl_images() const {
        if (!is_weyl_kind()) fail(errc::kind_mismatch, "not a Weyl-side morphism");
        return wimages_;
    }

    const std::vector<PoissonElement>& poisson_images() const {
        if (is_weyl_kind()) fail(errc::kind_mismatch, "not a Poisson morphism");
        return pimages_;
    }

    Validation validation() const { return validated_; }
    const std::optional<RelationWitness>& witness() const { return witness_; }

    const std::vector<WordLetter>& word() const { return word_; }
    void set_word(std::vector<WordLetter> w) { word_ = std::move(w); }

    void set_validation(Validation v, std::optional<RelationWitness> w = std::nullopt) {
        validated_ = v;
        witness_ = std::move(w);
    }

    // Same generator images (validation state and provenance ignored).
    friend bool operator==(const GenMorphism& a, const GenMorphism& b) {
        if (a.kind_ != b.kind_ || a.n_ != b.n_) return false;
        if (a.wctx_.has_value() != b.wctx_.has_value()) return false;
        if (a.wctx_ && *a.wctx_ != *b.wctx_) return false;
        return a.wimages_ == b.wimages_ && a.pimages_ == b.pimages_;
    }
    friend bool operator!=(const GenMorphism& a, const GenMorphism& b) { return !(a == b); }

private:
    GenMorphism(MorKind kind, int n) : kind_(kind), n_(n) {
        if (n < 1) fail(errc::index_out_of_range, "morphism needs n >= 1");
    }

    static void check_weyl_images(const WeylContext& ctx,
                                  const std::vector<WeylElement>& images) {
        if (static_cast<int>(images.size()) != ctx.vars())
            fail(errc::arity_mismatch, "need exactly 2n generator images");
        for (const auto& img : images)
            if (img.context() != ctx) fail(errc::context_mismatch, "image context mismatch");
    }

    MorKind kind_;
    int n_;
    std::optional<WeylContext> wctx_;
    std::vector<WeylElement> wimages_;
    std::vector<PoissonElement> pimages_;
    Validation validated_ = Validation::unchecked;
    std::optional<RelationWitness> witness_;
    std::vector<WordLetter> word_;
};

// Relation check on all generator pairs j > i: the images must satisfy
// [m(x_j), m(x_i)] = rel for symplectic pairs and commute otherwise
// (bracket instead of commutator on the Poisson side). Generator pairs
// decide morphism-hood for these presented algebras; invalidity is data,
// not an error.
inline GenMorphism validate(GenMorphism m) {
    const int vars = 2 * m.n();
    auto expected_is_pair = [](int j, int i) { return j % 2 == 0 && i == j - 1; };

    if (m.is_weyl_kind()) {
        const WeylContext& ctx = m.context();
        const ParamPoly rel = ctx.relation_constant();
        for (int j = 2; j <= vars; ++j) {
            for (int i = 1; i < j; ++i) {
                WeylElement got = commutator(m.weyl_images()[static_cast<std::size_t>(j - 1)],
                                             m.weyl_images()[static_cast<std::size_t>(i - 1)]);
                WeylElement want = expected_is_pair(j, i)
                                       ? WeylElement::constant(ctx, rel)
                                       : WeylElement::zero(ctx);
                if (got != want) {
                    m.set_validation(Validation::invalid,
                                     RelationWitness{j, i, to_string(got), to_string(want)});
                    return m;
                }
            }
        }
    } else {
        const int n = m.n();
        for (int j = 2; j <= vars; ++j) {
            for (int i = 1; i < j; ++i) {
                PoissonElement got =
                    poisson_bracket(m.poisson_images()[static_cast<std::size_t>(j - 1)],
                                    m.poisson_images()[static_cast<std::size_t>(i - 1)]);
                PoissonElement want = expected_is_pair(j, i) ? PoissonElement::one(n)
                                                             : PoissonElement::zero(n);
                if (got != want) {
                    m.set_validation(Validation::invalid,
                                     RelationWitness{j, i, to_string(got), to_string(want)});
                    return m;
                }
            }
        }
    }
    m.set_validation(Validation::valid);
    return m;
}

namespace detail {

// Weyl-kind application needs the relations to hold for the ordered product
// to define a morphism; Poisson-side substitution is an algebra map for any
// images, so there a known verdict (even `invalid`) suffices.
inline void require_applicable(const GenMorphism& m) {
    if (m.validation() == Validation::unchecked)
        fail(errc::not_validated, "validate the morphism before applying it");
    if (m.is_weyl_kind() && m.validation() != Validation::valid)
        fail(errc::not_validated, "cannot apply an invalid Weyl-side morphism");
}

}  // namespace detail

// m(f) for f in the matching algebra: each standard monomial goes to the
// ordered product of generator images, coefficients carried through.
inline WeylElement apply(const GenMorphism& m, const WeylElement& f) {
    detail::require_applicable(m);
    if (!m.is_weyl_kind()) fail(errc::kind_mismatch, "expected a Weyl-side morphism");
    if (f.context() != m.context())
        fail(errc::context_mismatch, "element context does not match morphism");
    WeylElement out = WeylElement::zero(f.context());
    for (const auto& [mono, c] : f.terms()) {
        WeylElement prod = WeylElement::one(f.context());
        for (int i = 0; i < f.context().vars(); ++i) {
            const WeylElement& img = m.weyl_images()[static_cast<std::size_t>(i)];
            for (int e = 0; e < mono.exps[static_cast<std::size_t>(i)]; ++e)
                prod = weyl_mul(prod, img);
        }
        out = out + prod.scaled(c);
    }
    return out;
}

inline PoissonElement apply(const GenMorphism& m, const PoissonElement& f) {
    detail::require_applicable(m);
    if (m.is_weyl_kind()) fail(errc::kind_mismatch, "expected a Poisson morphism");
    if (f.n() != m.n()) fail(errc::arity_mismatch, "element arity does not match morphism");
    PoissonElement out = PoissonElement::zero(f.n());
    for (const auto& [mono, c] : f.terms()) {
        PoissonElement prod = PoissonElement::one(f.n());
        for (int i = 0; i < f.vars(); ++i) {
            const PoissonElement& img = m.poisson_images()[static_cast<std::size_t>(i)];
            for (int e = 0; e < mono.exps[static_cast<std::size_t>(i)]; ++e)
                prod = prod * img;
        }
        out = out + prod.scaled(c);
    }
    return out;
}

// m2 after m1; the composite is re-validated rather than trusted.
inline GenMorphism compose(const GenMorphism& m2, const GenMorphism& m1) {
    if (m2.kind() != m1.kind() || m2.n() != m1.n())
        fail(errc::kind_mismatch, "composition needs matching kind and arity");
    detail::require_applicable(m2);
    detail::require_applicable(m1);

    GenMorphism out = [&] {
        if (m2.is_weyl_kind()) {
            if (m2.context() != m1.context())
                fail(errc::context_mismatch, "composition across contexts");
            std::vector<WeylElement> images;
            for (const auto& img : m1.weyl_images()) images.push_back(apply(m2, img));
            return m2.kind() == MorKind::ahat_endo
                       ? GenMorphism::ahat_endo(m2.n(), std::move(images))
                       : GenMorphism::weyl_endo(m2.context(), std::move(images));
        }
        std::vector<PoissonElement> images;
        for (const auto& img : m1.poisson_images()) images.push_back(apply(m2, img));
        return GenMorphism::poisson_endo(m2.n(), std::move(images));
    }();

    if (!m1.word().empty() || !m2.word().empty()) {
        std::vector<WordLetter> w = m1.word();  // m1 acts first
        w.insert(w.end(), m2.word().begin(), m2.word().end());
        out.set_word(std::move(w));
    }
    return validate(std::move(out));
}

// phi: evaluate every generator image at h = 0. Lands in the Poisson
// endomorphisms for every valid parameter-fixing A-hat endomorphism.
inline GenMorphism varphi(const GenMorphism& m) {
    if (m.kind() != MorKind::ahat_endo) fail(errc::kind_mismatch, "varphi expects an AHatEndo");
    if (m.validation() != Validation::valid)
        fail(errc::not_validated, "varphi needs a validated morphism");
    std::vector<PoissonElement> images;
    for (const auto& img : m.weyl_images()) images.push_back(gamma_hat(img));
    return validate(GenMorphism::poisson_endo(m.n(), std::move(images)));
}

// Multiply by the minimal h^k clearing all negative coefficient powers,
// then substitute h -> h+1 in every coefficient. Evaluating the result at
// h = 0 equals evaluating h^k * f at h = 1.
inline std::pair<WeylElement, int> clear_and_shift(const WeylElement& f) {
    if (f.context().mode() != AlgebraMode::family_q)
        fail(errc::context_mismatch, "clear_and_shift acts on family-mode elements");
    int k = 0;
    for (const auto& [m, c] : f.terms())
        if (!c.is_polynomial()) k = std::max(k, -c.min_exponent());
    WeylElement out(f.context());
    for (const auto& [m, c] : f.terms())
        out.add_term(m, c.times_param_pow(k).shifted());
    return {out, k};
}

// psi-conjugation of a Weyl endomorphism, one generator at a time:
// psi(x_i) is x_i or h*x_i, the endomorphism acts on the generator part,
// psi^{-1} rescales the result term by term.
inline WeylElement conjugated_image(const GenMorphism& s, int i) {  // 1-based
    const WeylElement& img = s.weyl_images()[static_cast<std::size_t>(i - 1)];
    WeylElement lifted = lift_numeric_to_family(img);
    if (i % 2 == 0) lifted = lifted.scaled(ParamPoly::param());
    return psi_inverse(lifted);
}

// Conjugate s through psi; an AHatEndo when all conjugated images have
// polynomial coefficients, nullopt otherwise.
inline std::optional<GenMorphism> conjugate_by_psi(const GenMorphism& s) {
    if (s.kind() != MorKind::weyl_endo || s.context().mode() != AlgebraMode::numeric ||
        !s.context().q().is_one())
        fail(errc::context_mismatch, "conjugation starts from an endomorphism of Wn");
    if (s.validation() != Validation::valid)
        fail(errc::not_validated, "conjugation needs a validated morphism");
    std::vector<WeylElement> images;
    for (int i = 1; i <= s.context().vars(); ++i) {
        WeylElement img = conjugated_image(s, i);
        if (!in_A_hat(img)) return std::nullopt;
        images.push_back(std::move(img));
    }
    GenMorphism out = validate(GenMorphism::ahat_endo(s.n(), std::move(images)));
    out.set_word(s.word());
    return out;
}

// The transport End(Wn) -> maps of B_n. Constructive path per generator:
// psi-conjugation, clear_and_shift, then evaluation at h = 0. The direct
// path reads the normal form of s(x_i) as a commutative polynomial; the two
// must agree, and a disagreement is a fatal invariant breach. The result is
// validated but NOT required to be a valid Poisson endomorphism: whether it
// is one is exactly what the audit measures.
inline GenMorphism psi_transport(const GenMorphism& s) {
    if (s.kind() != MorKind::weyl_endo) fail(errc::kind_mismatch, "transport expects a WeylEndo");
    if (s.context().mode() != AlgebraMode::numeric || !s.context().q().is_one())
        fail(errc::context_mismatch, "transport is defined on endomorphisms of Wn");
    if (s.validation() != Validation::valid)
        fail(errc::not_validated, "transport needs a validated morphism");

    std::vector<PoissonElement> images;
    for (int i = 1; i <= s.context().vars(); ++i) {
        auto [cleared, k] = clear_and_shift(conjugated_image(s, i));
        (void)k;
        PoissonElement constructive = gamma_hat(cleared);
        PoissonElement direct =
            coefficient_transfer(s.weyl_images()[static_cast<std::size_t>(i - 1)]);
        if (constructive != direct)
            fail(errc::path_disagreement,
                 "transport paths disagree on x" + std::to_string(i) + ": " +
                     to_string(constructive) + " vs " + to_string(direct));
        images.push_back(std::move(direct));
    }
    GenMorphism out = validate(GenMorphism::poisson_endo(s.n(), std::move(images)));
    out.set_word(s.word());
    return out;
}

// ---- tame corpus ---------------------------------------------------------

inline WordLetter invert_letter(const WordLetter& letter) {
    if (std::holds_alternative<LinearLetter>(letter)) {
        const auto& lin = std::get<LinearLetter>(letter);
        return LinearLetter{lin.pair, lin.d, -lin.b, -lin.c, lin.a};
    }
    const auto& sh = std::get<ShearLetter>(letter);
    return ShearLetter{sh.dual, -sh.potential};
}

inline std::vector<WordLetter> invert_word(const std::vector<WordLetter>& word) {
    std::vector<WordLetter> out;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push_back(invert_letter(*it));
    return out;
}

namespace detail {

// Odd/even-variable polynomial moved onto the Weyl side verbatim. Only used
// for potentials, whose variables commute with each other.
inline WeylElement poisson_to_weyl(const WeylContext& ctx, const PoissonElement& p) {
    WeylElement out(ctx);
    for (const auto& [m, c] : p.terms()) out.add_term(m, ParamPoly::constant(c));
    return out;
}

inline GenMorphism letter_to_morphism(const WeylContext& ctx, const WordLetter& letter) {
    std::vector<WeylElement> images;
    for (int i = 1; i <= ctx.vars(); ++i)
        images.push_back(WeylElement::generator(ctx, i));

    if (std::holds_alternative<LinearLetter>(letter)) {
        const auto& lin = std::get<LinearLetter>(letter);
        if (lin.a * lin.d - lin.b * lin.c != Rational(1))
            fail(errc::malformed_input, "linear letter must have determinant 1");
        const int p = 2 * lin.pair - 1, d = 2 * lin.pair;  // 1-based indices
        WeylElement xp = WeylElement::generator(ctx, p);
        WeylElement xd = WeylElement::generator(ctx, d);
        images[static_cast<std::size_t>(p - 1)] =
            xp.scaled(ParamPoly::constant(lin.a)) + xd.scaled(ParamPoly::constant(lin.b));
        images[static_cast<std::size_t>(d - 1)] =
            xp.scaled(ParamPoly::constant(lin.c)) + xd.scaled(ParamPoly::constant(lin.d));
    } else {
        const auto& sh = std::get<ShearLetter>(letter);
        const PoissonElement& pot = sh.potential;
        for (int l = 1; l <= ctx.n(); ++l) {
            if (!sh.dual) {
                // x_{2l} += dF/dx_{2l-1}, F in odd variables
                PoissonElement grad = partial(pot, 2 * l - 1);
                images[static_cast<std::size_t>(2 * l - 1)] =
                    images[static_cast<std::size_t>(2 * l - 1)] + poisson_to_weyl(ctx, grad);
            } else {
                // x_{2l-1} += dG/dx_{2l}, G in even variables
                PoissonElement grad = partial(pot, 2 * l);
                images[static_cast<std::size_t>(2 * l - 2)] =
                    images[static_cast<std::size_t>(2 * l - 2)] + poisson_to_weyl(ctx, grad);
            }
        }
    }
    GenMorphism m = validate(GenMorphism::weyl_endo(ctx, std::move(images)));
    m.set_word({letter});
    return m;
}

// Random polynomial in only the odd (or only the even) variables.
inline PoissonElement random_potential(SplitMix64& rng, int n, bool even_vars) {
    PoissonElement pot(n);
    int nterms = static_cast<int>(rng.below(2)) + 1;
    for (int t = 0; t < nterms; ++t) {
        Monomial m(2 * n);
        int deg = static_cast<int>(rng.below(3)) + 1;  // degree 1..3
        for (int d = 0; d < deg; ++d) {
            int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            m.exps[static_cast<std::size_t>(2 * l + (even_vars ? 1 : 0))] += 1;
        }
        long c = rng.range(-3, 3);
        pot.add_term(m, Rational(c == 0 ? 1 : c));
    }
    return pot;
}

inline LinearLetter random_linear(SplitMix64& rng, int n) {
    LinearLetter lin;
    lin.pair = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    // product of elementary SL2 matrices keeps the determinant at 1
    Rational a(1), b(0), c(0), d(1);
    for (int step = 0; step < 2; ++step) {
        switch (rng.below(3)) {
            case 0: {  // lower shear
                Rational u(rng.range(-3, 3));
                c += u * a;
                d += u * b;
                break;
            }
            case 1: {  // upper shear
                Rational u(rng.range(-3, 3));
                a += u * c;
                b += u * d;
                break;
            }
            default: {  // diagonal
                long s = rng.range(1, 3);
                if (rng.chance(30)) s = -s;
                Rational u(s);
                a = a * u;
                b = b * u;
                c = c / u;
                d = d / u;
                break;
            }
        }
    }
    lin.a = a;
    lin.b = b;
    lin.c = c;
    lin.d = d;
    return lin;
}

inline WordLetter random_letter(SplitMix64& rng, int n, std::uint64_t kind_pick) {
    switch (kind_pick % 3) {
        case 0: return random_linear(rng, n);
        case 1: return ShearLetter{false, random_potential(rng, n, false)};
        default: return ShearLetter{true, random_potential(rng, n, true)};
    }
}

}  // namespace detail

// Build the composite of a generator word, first letter applied first.
inline GenMorphism from_word(const WeylContext& ctx, const std::vector<WordLetter>& word) {
    if (word.empty()) return validate(GenMorphism::identity_weyl(ctx));
    GenMorphism m = detail::letter_to_morphism(ctx, word[0]);
    for (std::size_t i = 1; i < word.size(); ++i)
        m = compose(detail::letter_to_morphism(ctx, word[i]), m);
    return m;
}

// Deterministic corpus of tame endomorphisms of Wn: linear symplectic
// letters, shears, dual shears and short compositions. Every element comes
// back validated and carries its word.
inline std::vector<GenMorphism> tame_corpus(int n, std::uint64_t seed, int size,
                                            int max_word_len = 2) {
    if (size < 1) fail(errc::index_out_of_range, "corpus size must be >= 1");
    if (max_word_len < 1) fail(errc::index_out_of_range, "word length must be >= 1");
    WeylContext ctx = WeylContext::weyl(n);
    detail::SplitMix64 rng{seed ^ 0x77c0ffeeULL};

    std::vector<GenMorphism> out;
    std::set<std::string> seen;
    int attempts = 0;
    while (static_cast<int>(out.size()) < size && attempts < 50 * size) {
        ++attempts;
        int len = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_word_len))) + 1;
        std::vector<WordLetter> word;
        for (int i = 0; i < len; ++i) {
            // cycle the letter kind so single shears always show up early
            std::uint64_t kind_pick = (out.size() + static_cast<std::size_t>(i)) % 3 == 0
                                          ? 1
                                          : rng.next();
            word.push_back(detail::random_letter(rng, n, kind_pick));
        }
        GenMorphism m = from_word(ctx, word);
        std::string key;
        for (const auto& img : m.weyl_images()) key += to_string(img) + ";";
        if (!seen.insert(key).second) continue;  // skip duplicates
        out.push_back(std::move(m));
    }
    return out;
}

// Witness-based automorphism certificate: both composites must fix every
// generator. There is no general inversion here.
inline bool verify_inverse(const GenMorphism& m, const GenMorphism& w) {
    if (m.kind() != w.kind() || m.n() != w.n())
        fail(errc::kind_mismatch, "inverse witness of a different kind");
    detail::require_applicable(m);
    detail::require_applicable(w);
    GenMorphism id = m.is_weyl_kind() ? GenMorphism::identity_weyl(m.context())
                                      : GenMorphism::identity_poisson(m.n());
    return compose(m, w) == id && compose(w, m) == id;
}

// Deterministic corpus of validated parameter-fixing A-hat endomorphisms:
// potential shears with h-polynomial coefficients, diagonal rescalings,
// translations of odd generators, and pairwise composites.
inline std::vector<GenMorphism> ahat_corpus(int n, std::uint64_t seed, int size) {
    if (size < 1) fail(errc::index_out_of_range, "corpus size must be >= 1");
    WeylContext ctx = WeylContext::family_q(n);
    detail::SplitMix64 rng{seed ^ 0xa4a7ULL};

    auto gen_images = [&] {
        std::vector<WeylElement> images;
        for (int i = 1; i <= ctx.vars(); ++i)
            images.push_back(WeylElement::generator(ctx, i));
        return images;
    };

    auto make_single = [&]() -> GenMorphism {
        std::vector<WeylElement> images = gen_images();
        switch (rng.below(3)) {
            case 0: {  // even-side potential shear with an h-power coefficient
                PoissonElement F = detail::random_potential(rng, n, false);
                int hpow = static_cast<int>(rng.below(3));
                for (int l = 1; l <= n; ++l) {
                    WeylElement grad = detail::poisson_to_weyl(ctx, partial(F, 2 * l - 1));
                    images[static_cast<std::size_t>(2 * l - 1)] =
                        images[static_cast<std::size_t>(2 * l - 1)] +
                        grad.scaled(ParamPoly::param(hpow));
                }
                break;
            }
            case 1: {  // diagonal rescaling of one pair
                int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
                long s = rng.range(1, 3);
                Rational a(rng.chance(30) ? -s : s);
                images[static_cast<std::size_t>(2 * l - 2)] =
                    images[static_cast<std::size_t>(2 * l - 2)].scaled(ParamPoly::constant(a));
                images[static_cast<std::size_t>(2 * l - 1)] =
                    images[static_cast<std::size_t>(2 * l - 1)].scaled(
                        ParamPoly::constant(a.inverse()));
                break;
            }
            default: {  // translate an odd generator by a scalar in h
                int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
                ParamPoly c = ParamPoly::term(Rational(rng.range(1, 3)),
                                              static_cast<int>(rng.below(2)));
                images[static_cast<std::size_t>(2 * l - 2)] =
                    images[static_cast<std::size_t>(2 * l - 2)] + WeylElement::constant(ctx, c);
                break;
            }
        }
        return validate(GenMorphism::ahat_endo(n, std::move(images)));
    };

    std::vector<GenMorphism> out;
    std::set<std::string> seen;
    int attempts = 0;
    while (static_cast<int>(out.size()) < size && attempts < 50 * size) {
        ++attempts;
        GenMorphism m = make_single();
        if (rng.chance(40)) m = compose(make_single(), m);
        std::string key;
        for (const auto& img : m.weyl_images()) key += to_string(img) + ";";
        if (!seen.insert(key).second) continue;
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace semiweyl
