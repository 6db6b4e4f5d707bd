#pragma once

// Symmetric-function toolkit: elementary symmetric polynomials, power sums,
// symmetry tests, and the fundamental-theorem rewrite into the elementary
// basis, for one and two alphabets.
//
// The rewrite is the classical Gauss elimination on lex leading terms: if
// the leading exponent vector is (a1 >= a2 >= ... >= an), subtract
// coeff * prod_k e_k^(a_k - a_{k+1}) and iterate. The leading monomial
// strictly decreases every iteration, which is asserted as the termination
// witness.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lring/intpoly.hpp"

namespace lring {

// A block of underlying variables: x_1..x_n or y_1..y_n.
struct Alphabet {
    Alph kind;      // Alph::X or Alph::Y
    unsigned size;  // n >= 1
};

inline Alphabet alph_x(unsigned n) { return {Alph::X, n}; }
inline Alphabet alph_y(unsigned n) { return {Alph::Y, n}; }

// Elementary-symmetric output alphabet for a variable alphabet: x -> s, y -> t.
inline Alph output_alph(Alph a) {
    if (a == Alph::X) return Alph::S;
    if (a == Alph::Y) return Alph::T;
    throw Error("no elementary output alphabet for this variable alphabet");
}

// e_k(x_1..x_n): sum of all C(n,k) squarefree degree-k monomials; e_0 = 1.
inline Polynomial elementary(int k, Alphabet a) {
    if (k < 0 || static_cast<unsigned>(k) > a.size)
        throw Error("elementary: k out of range 0..n (k=" + std::to_string(k) +
                    ", n=" + std::to_string(a.size) + ")");
    // Incremental product (1 + x_1 z)...(1 + x_n z), reading off z^k.
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1);
    e[0] = Polynomial(1);
    for (unsigned i = 1; i <= a.size; ++i) {
        Polynomial xi = Polynomial::variable({a.kind, i});
        for (unsigned d = std::min<unsigned>(k, i); d >= 1; --d) e[d] += e[d - 1] * xi;
    }
    return e[static_cast<std::size_t>(k)];
}

inline Polynomial power_sum(int r, Alphabet a) {
    if (r < 1) throw Error("power_sum: r must be >= 1");
    Polynomial p;
    for (unsigned i = 1; i <= a.size; ++i)
        p += Polynomial::term(Monomial::variable({a.kind, i}, static_cast<unsigned>(r)), 1);
    return p;
}

// Swap variables (a, i) and (a, i+1) everywhere.
inline Polynomial swap_adjacent(const Polynomial& p, Alph a, unsigned i) {
    const VarId vi{a, i}, vj{a, i + 1};
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        Monomial swapped = m.map_vars([&](VarId v) {
            if (v == vi) return vj;
            if (v == vj) return vi;
            return v;
        });
        r += Polynomial::term(swapped, c);
    }
    return r;
}

// Invariance under the adjacent transpositions of one alphabet, ignoring
// variables of other alphabets (they ride along as inert coefficients).
inline bool is_symmetric_in(const Polynomial& p, Alph a, unsigned n) {
    for (unsigned i = 1; i + 1 <= n; ++i)
        if (!(swap_adjacent(p, a, i) == p)) return false;
    return true;
}

namespace detail {

inline void require_vars_within(const Polynomial& p, const std::vector<Alphabet>& allowed) {
    for (VarId v : p.variables()) {
        bool ok = false;
        for (const auto& a : allowed)
            if (v.alphabet == a.kind && v.index <= a.size) ok = true;
        if (!ok) throw Error("foreign variable " + var_name(v) + " for this alphabet");
    }
}

}  // namespace detail

inline bool is_symmetric(const Polynomial& p, Alphabet a) {
    detail::require_vars_within(p, {a});
    return is_symmetric_in(p, a.kind, a.size);
}

inline bool is_bisymmetric(const Polynomial& p, Alphabet ax, Alphabet ay) {
    detail::require_vars_within(p, {ax, ay});
    return is_symmetric_in(p, ax.kind, ax.size) && is_symmetric_in(p, ay.kind, ay.size);
}

// Core of the fundamental-theorem algorithm. Rewrites the `in`-alphabet part
// of p (which must be symmetric in that alphabet) as a polynomial in its
// elementary symmetric functions, emitted in the `out` alphabet. Variables
// of other alphabets are treated as inert coefficients.
inline Polynomial elementary_reduce(const Polynomial& p, Alph in, unsigned n, Alph out) {
    // Memoized e_k(in, n) and their products for the subtraction step.
    std::vector<Polynomial> elem(n + 1);
    for (unsigned k = 0; k <= n; ++k) elem[k] = elementary(static_cast<int>(k), {in, n});

    Polynomial work = p;
    Polynomial result;
    std::optional<Monomial> prev_lead;

    while (!work.is_zero()) {
        Monomial lead = work.leading_monomial_lex(in);
        Monomial lead_r = lead.restrict_to(in);
        if (lead_r.is_one()) {
            // Everything left is constant in the alphabet.
            result += work;
            break;
        }
        if (prev_lead && lex_cmp_in(in, lead_r, *prev_lead) >= 0)
            throw Error("elementary_reduce: leading monomial failed to decrease");
        prev_lead = lead_r;

        // Exponent vector of the leading monomial; symmetry forces it to be
        // weakly decreasing.
        std::vector<unsigned> exps(n + 2, 0);
        for (const auto& [v, e] : lead_r.entries()) {
            if (v.index > n)
                throw NonSymmetricInput("variable " + var_name(v) + " exceeds alphabet size " +
                                        std::to_string(n));
            exps[v.index] = e;
        }
        for (unsigned i = 1; i < n; ++i)
            if (exps[i] < exps[i + 1])
                throw NonSymmetricInput("input is not symmetric in alphabet " +
                                        std::string(1, alph_letter(in)));

        // Coefficient polynomial: all inert parts attached to this leading
        // alphabet-monomial.
        Polynomial cpoly;
        for (const auto& [m, c] : work.terms())
            if (m.restrict_to(in) == lead_r) cpoly += Polynomial::term(m.without(in), c);

        Polynomial gauss(1);
        Monomial image;
        for (unsigned k = 1; k <= n; ++k) {
            unsigned d = exps[k] - exps[k + 1];
            if (d == 0) continue;
            gauss *= elem[k].pow(d);
            image = image * Monomial::variable({out, k}, d);
        }
        work -= cpoly * gauss;
        result += cpoly * Polynomial::term(image, 1);
    }
    return result;
}

struct ElementaryBasisResult {
    Polynomial expression;
    bool checked = false;  // back-substitution roundtrip was executed
};

inline ElementaryBasisResult to_elementary_basis(const Polynomial& p, Alphabet a) {
    if (!is_symmetric(p, a)) throw NonSymmetricInput("to_elementary_basis: input not symmetric");
    const Alph out = output_alph(a.kind);
    Polynomial expr = elementary_reduce(p, a.kind, a.size, out);

    std::map<VarId, Polynomial> back;
    for (unsigned k = 1; k <= a.size; ++k)
        back.emplace(VarId{out, k}, elementary(static_cast<int>(k), a));
    if (!(expr.substitute(back) == p))
        throw Error("to_elementary_basis: roundtrip check failed");  // algorithm bug
    return {expr, true};
}

inline ElementaryBasisResult to_elementary_basis_2(const Polynomial& p, Alphabet ax, Alphabet ay) {
    if (ax.kind != Alph::X || ay.kind != Alph::Y)
        throw Error("to_elementary_basis_2: expects the x and y alphabets");
    if (!is_bisymmetric(p, ax, ay))
        throw NonSymmetricInput("to_elementary_basis_2: input not bisymmetric");

    // X first, then Y; any order gives the same unique answer.
    Polynomial stage1 = elementary_reduce(p, Alph::X, ax.size, Alph::S);
    Polynomial expr = elementary_reduce(stage1, Alph::Y, ay.size, Alph::T);

    std::map<VarId, Polynomial> back;
    for (unsigned k = 1; k <= ax.size; ++k)
        back.emplace(VarId{Alph::S, k}, elementary(static_cast<int>(k), ax));
    for (unsigned k = 1; k <= ay.size; ++k)
        back.emplace(VarId{Alph::T, k}, elementary(static_cast<int>(k), ay));
    if (!(expr.substitute(back) == p))
        throw Error("to_elementary_basis_2: roundtrip check failed");
    return {expr, true};
}

}  // namespace lring
