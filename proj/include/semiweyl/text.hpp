#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "semiweyl/param_poly.hpp"
#include "semiweyl/poisson.hpp"
#include "semiweyl/weyl.hpp"

namespace semiweyl {

namespace detail {

struct SignedAtom {
    bool negative = false;
    std::string body;
};

inline std::string join_atoms(const std::vector<SignedAtom>& atoms) {
    if (atoms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i == 0) {
            if (atoms[i].negative) out += "-";
        } else {
            out += atoms[i].negative ? " - " : " + ";
        }
        out += atoms[i].body;
    }
    return out;
}

// |r| * h^e with the usual 1-elisions; r must be nonzero.
inline std::string param_term_body(const Rational& r, int e) {
    Rational a = r.abs();
    if (e == 0) return a.str();
    std::string body;
    if (!a.is_one()) body = a.str() + "*";
    body += "h";
    if (e != 1) body += "^" + std::to_string(e);
    return body;
}

inline void append_param_atoms(const ParamPoly& p, std::vector<SignedAtom>& atoms,
                               const std::string& mono) {
    // descending exponents
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, r] = *it;
        SignedAtom atom;
        atom.negative = r.sign() < 0;
        if (mono.empty()) {
            atom.body = param_term_body(r, e);
        } else if (e == 0 && r.abs().is_one()) {
            atom.body = mono;
        } else if (e == 0) {
            atom.body = r.abs().str() + "*" + mono;
        } else {
            atom.body = param_term_body(r, e) + "*" + mono;
        }
        atoms.push_back(std::move(atom));
    }
}

inline std::string monomial_body(const Monomial& m) {
    std::string out;
    for (int i = 0; i < m.nvars(); ++i) {
        int e = m.exps[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace detail

inline std::string to_string(const ParamPoly& p) {
    std::vector<detail::SignedAtom> atoms;
    detail::append_param_atoms(p, atoms, "");
    return detail::join_atoms(atoms);
}

// Canonical element text: terms in grlex-descending order, generators in
// ascending index inside each term, e.g. `x1^2*x2^2 + 4*h*x1*x2 + 2*h^2`.
// Multi-term coefficients are parenthesized, `(h + 1)*x1`, except on the
// constant monomial where they continue the sign stream.
inline std::string to_string(const WeylElement& f) {
    std::vector<detail::SignedAtom> atoms;
    for (const auto& [m, c] : f.terms()) {
        std::string mono = detail::monomial_body(m);
        if (mono.empty() || c.terms().size() == 1) {
            detail::append_param_atoms(c, atoms, mono);
        } else {
            atoms.push_back({false, "(" + to_string(c) + ")*" + mono});
        }
    }
    return detail::join_atoms(atoms);
}

inline std::string to_string(const PoissonElement& f) {
    std::vector<detail::SignedAtom> atoms;
    for (const auto& [m, c] : f.terms()) {
        std::string mono = detail::monomial_body(m);
        detail::SignedAtom atom;
        atom.negative = c.sign() < 0;
        if (mono.empty()) {
            atom.body = c.abs().str();
        } else if (c.abs().is_one()) {
            atom.body = mono;
        } else {
            atom.body = c.abs().str() + "*" + mono;
        }
        atoms.push_back(std::move(atom));
    }
    return detail::join_atoms(atoms);
}

inline std::ostream& operator<<(std::ostream& os, const ParamPoly& p) {
    return os << to_string(p);
}
inline std::ostream& operator<<(std::ostream& os, const WeylElement& f) {
    return os << to_string(f);
}
inline std::ostream& operator<<(std::ostream& os, const PoissonElement& f) {
    return os << to_string(f);
}

}  // namespace semiweyl
