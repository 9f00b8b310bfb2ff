#pragma once

#include <numeric>
#include <vector>

#include "semiweyl/error.hpp"

namespace semiweyl {

// Standard monomial x1^e1 * ... * x_{2n}^e_{2n}: one exponent slot per
// generator, ascending index. Slot i (0-based) holds the exponent of x_{i+1}.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    static Monomial unit(int nvars) { return Monomial(nvars); }

    static Monomial generator(int nvars, int i) {  // i is 1-based
        if (i < 1 || i > nvars)
            fail(errc::unknown_variable, "generator index out of range");
        Monomial m(nvars);
        m.exps[static_cast<std::size_t>(i - 1)] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(exps.size()); }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool is_unit() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }

    // Exponent sum over even-indexed generators x2, x4, ... (0-based odd slots).
    int even_slot_sum() const {
        int s = 0;
        for (std::size_t i = 1; i < exps.size(); i += 2) s += exps[i];
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps == b.exps;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded lexicographic, larger first: higher total degree wins, ties broken
// by the lexicographically larger exponent vector. Canonical term order for
// serialization and map iteration.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) fail(errc::arity_mismatch, "monomial arity mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

// All standard monomials of total degree <= dmax, in grlex-descending order.
inline std::vector<Monomial> enumerate_standard_monomials(int nvars, int dmax) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    // depth-first over exponent slots with remaining-degree budget
    auto rec = [&](auto&& self, int slot, int budget) -> void {
        if (slot == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            cur.exps[static_cast<std::size_t>(slot)] = e;
            self(self, slot + 1, budget - e);
        }
        cur.exps[static_cast<std::size_t>(slot)] = 0;
    };
    rec(rec, 0, dmax);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return GrlexGreater{}(a, b);
    });
    return out;
}

}  // namespace semiweyl
