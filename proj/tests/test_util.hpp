#pragma once

// Shared helpers for the test suites: terse variable builders, a seeded
// deterministic RNG, and implementation-independent oracles.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "lring/intpoly.hpp"

namespace testutil {

using lring::Alph;
using lring::Int;
using lring::Monomial;
using lring::Polynomial;
using lring::VarId;

inline VarId vx(unsigned i) { return {Alph::X, i}; }
inline VarId vy(unsigned i) { return {Alph::Y, i}; }
inline VarId vs(unsigned i) { return {Alph::S, i}; }
inline VarId vt(unsigned i) { return {Alph::T, i}; }
inline VarId vu(unsigned i) { return {Alph::U, i}; }

inline Polynomial X(unsigned i) { return Polynomial::variable(vx(i)); }
inline Polynomial Y(unsigned i) { return Polynomial::variable(vy(i)); }
inline Polynomial S(unsigned i) { return Polynomial::variable(vs(i)); }
inline Polynomial T(unsigned i) { return Polynomial::variable(vt(i)); }
inline Polynomial U(unsigned i) { return Polynomial::variable(vu(i)); }

// mt19937_64 raw draws only: uniform_int_distribution is not reproducible
// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long long next(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(eng_() % span);
    }

private:
    std::mt19937_64 eng_;
};

// Random sparse polynomial with bounded shape: at most `max_vars`
// variables (x1..x4), exponents <= 4, |coeff| <= 20.
inline Polynomial random_poly(Rng& rng, int max_terms = 5, int max_vars = 4, int max_exp = 4,
                              int max_coeff = 20) {
    Polynomial p;
    const long long nterms = rng.next(0, max_terms);
    for (long long t = 0; t < nterms; ++t) {
        Monomial m;
        const long long nvars = rng.next(0, max_vars);
        for (long long v = 0; v < nvars; ++v) {
            unsigned idx = static_cast<unsigned>(rng.next(1, max_vars));
            unsigned exp = static_cast<unsigned>(rng.next(1, max_exp));
            m = m * Monomial::variable(vx(idx), exp);
        }
        long long c = rng.next(-max_coeff, max_coeff);
        p += Polynomial::term(m, Int(c));
    }
    return p;
}

// ---- independent oracles ----

// Dense term-list multiplication: no canonical maps, no sharing with
// Polynomial::operator*. Exponent vectors are dense over (alphabet, index).
using DenseTerm = std::pair<std::map<VarId, unsigned>, Int>;

inline std::vector<DenseTerm> to_dense(const Polynomial& p) {
    std::vector<DenseTerm> out;
    for (const auto& [m, c] : p.terms()) {
        std::map<VarId, unsigned> exps;
        for (const auto& [v, e] : m.entries()) exps[v] = e;
        out.emplace_back(exps, c);
    }
    return out;
}

inline std::vector<DenseTerm> dense_mul(const std::vector<DenseTerm>& a,
                                        const std::vector<DenseTerm>& b) {
    std::map<std::map<VarId, unsigned>, Int> acc;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            auto m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            acc[m] += ca * cb;
        }
    std::vector<DenseTerm> out;
    for (const auto& [m, c] : acc)
        if (c != 0) out.emplace_back(m, c);
    return out;
}

inline bool dense_equal(const Polynomial& p, std::vector<DenseTerm> expected) {
    auto got = to_dense(p);
    auto key = [](const DenseTerm& t) { return t.first; };
    std::sort(got.begin(), got.end(),
              [&](const auto& u, const auto& v) { return key(u) < key(v); });
    std::sort(expected.begin(), expected.end(),
              [&](const auto& u, const auto& v) { return key(u) < key(v); });
    return got == expected;
}

// Evaluation oracle: a random integer point covering both polynomials.
inline std::map<VarId, Int> random_point(Rng& rng, const Polynomial& p, const Polynomial& q) {
    std::map<VarId, Int> pt;
    for (VarId v : p.variables()) pt[v] = Int(rng.next(-9, 9));
    for (VarId v : q.variables()) pt.emplace(v, Int(rng.next(-9, 9)));
    return pt;
}

inline Int eval_at(const Polynomial& p, const std::map<VarId, Int>& pt) {
    return p.evaluate([&](VarId v) {
        auto it = pt.find(v);
        return it == pt.end() ? Int(0) : it->second;
    });
}

}  // namespace testutil
