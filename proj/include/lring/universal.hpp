#pragma once

// Generation of the universal polynomials:
//
//   Q_n   - the power sum x_1^n + ... + x_n^n rewritten in the elementary
//           basis (the Newton polynomial).
//   P_n   - the t^n coefficient of prod_{i,j=1..n} (1 + x_i y_j t), in the
//           elementary bases of both alphabets. Governs lambda of a product.
//   P_n,m - the t^n coefficient of prod over m-subsets (1 + x_i1...x_im t)
//           of nm variables, in the elementary basis. Governs composition
//           of lambda operations.
//
// Every polynomial is generated by two independent routes and the results
// are asserted equal; a mismatch signals a bug, not bad input. Generated
// bodies can be cached on disk as JSON and are re-validated against their
// weight invariants on load.

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lring/report.hpp"
#include "lring/symfun.hpp"

namespace lring {

enum class UKind { Q, P, Pnm };
enum class Route { Definition, Alternate };

inline std::string ukind_name(UKind k) {
    switch (k) {
        case UKind::Q: return "q";
        case UKind::P: return "p";
        case UKind::Pnm: return "pnm";
    }
    throw Error("invalid universal polynomial kind");
}

inline std::string route_name(Route r) { return r == Route::Definition ? "definition" : "alternate"; }

constexpr int kUniversalFormatVersion = 1;

struct UniversalPoly {
    UKind kind = UKind::Q;
    unsigned n = 0;
    unsigned m = 0;  // only for Pnm
    Polynomial body;
    Route route = Route::Definition;
    std::string cache_key;
};

inline std::string params_token(UKind kind, unsigned n, unsigned m) {
    return kind == UKind::Pnm ? std::to_string(n) + "-" + std::to_string(m) : std::to_string(n);
}

inline std::string universal_cache_key(UKind kind, unsigned n, unsigned m) {
    return ukind_name(kind) + "/" + params_token(kind, n, m) + "#v" +
           std::to_string(kUniversalFormatVersion);
}

// Weight invariants: Q_n is isobaric of S-weight n, P_n of S-weight n and
// T-weight n, P_{n,m} of S-weight nm. Throws on violation.
inline void validate_universal(const UniversalPoly& u) {
    const char* what = nullptr;
    for (const auto& [mono, c] : u.body.terms()) {
        for (const auto& [v, e] : mono.entries()) {
            if (v.alphabet != Alph::S && !(u.kind == UKind::P && v.alphabet == Alph::T))
                what = "unexpected alphabet";
        }
        switch (u.kind) {
            case UKind::Q:
                if (mono.weight_in(Alph::S) != u.n) what = "S-weight != n";
                break;
            case UKind::P:
                if (mono.weight_in(Alph::S) != u.n) what = "S-weight != n";
                if (mono.weight_in(Alph::T) != u.n) what = "T-weight != n";
                break;
            case UKind::Pnm:
                if (mono.weight_in(Alph::S) != u.n * u.m) what = "S-weight != n*m";
                break;
        }
        if (what)
            throw Error("universal polynomial " + universal_cache_key(u.kind, u.n, u.m) +
                        " violates weight invariant: " + what + " at " + monomial_text(mono));
    }
}

namespace detail {

// Coefficients of t^0..t^cap of a product, built up one factor at a time
// with everything above t^cap discarded immediately.
class TruncSeries {
public:
    explicit TruncSeries(unsigned cap) : coeff_(cap + 1) { coeff_[0] = Polynomial(1); }

    // Multiply by (1 + f * t^k).
    void mul_binomial(const Polynomial& f, unsigned k = 1) {
        if (k == 0 || k >= coeff_.size()) throw Error("TruncSeries: bad factor degree");
        for (unsigned d = static_cast<unsigned>(coeff_.size()) - 1; d >= k; --d) {
            coeff_[d] += coeff_[d - k] * f;
            if (d == k) break;
        }
    }

    // Multiply by a general truncated factor (factor[j] is the t^j coefficient).
    void mul_series(const std::vector<Polynomial>& factor) {
        std::vector<Polynomial> out(coeff_.size());
        for (unsigned d = 0; d < coeff_.size(); ++d)
            for (unsigned k = 0; k <= d && k < factor.size(); ++k)
                out[d] += coeff_[d - k] * factor[k];
        coeff_ = std::move(out);
    }

    const Polynomial& at(unsigned d) const { return coeff_.at(d); }

private:
    std::vector<Polynomial> coeff_;
};

// All m-subsets of {1..n} in ascending lex order of index tuples.
inline std::vector<std::vector<unsigned>> subsets_lex(unsigned n, unsigned m) {
    std::vector<std::vector<unsigned>> out;
    if (m > n) return out;
    std::vector<unsigned> idx(m);
    for (unsigned i = 0; i < m; ++i) idx[i] = i + 1;
    while (true) {
        out.push_back(idx);
        // advance
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - m + 1 + static_cast<unsigned>(i))
            --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline Int binomial_coefficient(unsigned n, unsigned k) {
    if (k > n) return 0;
    return binomial(Int(n), k);
}

inline void check_roundtrip_in_x(const Polynomial& reduced, const Polynomial& original,
                                 unsigned n) {
    std::map<VarId, Polynomial> back;
    for (unsigned k = 1; k <= n; ++k)
        back.emplace(VarId{Alph::S, k}, elementary(static_cast<int>(k), alph_x(n)));
    if (!(reduced.substitute(back) == original))
        throw Error("universal generation: elementary-basis roundtrip failed");
}

}  // namespace detail

struct UniversalOptions {
    unsigned newton_cap = 8;
    unsigned product_cap = 4;
    unsigned composition_cap = 8;
    bool force = false;
};

// Q_n by symmetrization of the power sum and, independently, by the Newton
// recursion Q_k = s1 Q_{k-1} - s2 Q_{k-2} + ... + (-1)^k s_{k-1} Q_1
//               + (-1)^{k+1} k s_k.
inline UniversalPoly newton_q(unsigned n) {
    if (n < 1) throw Error("newton_q: n must be >= 1");

    Polynomial definition = to_elementary_basis(power_sum(static_cast<int>(n), alph_x(n)),
                                                alph_x(n))
                                .expression;

    std::vector<Polynomial> q(n + 1);
    for (unsigned k = 1; k <= n; ++k) {
        Polynomial acc;
        for (unsigned i = 1; i < k; ++i) {
            Polynomial term = Polynomial::variable({Alph::S, i}) * q[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        Int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k+1}
        acc += Polynomial::variable({Alph::S, k}) * (sign * Int(k));
        q[k] = acc;
    }

    if (!(definition == q[n]))
        throw RouteMismatch("newton_q(" + std::to_string(n) + "): routes disagree");

    UniversalPoly u{UKind::Q, n, 0, definition, Route::Definition,
                    universal_cache_key(UKind::Q, n, 0)};
    validate_universal(u);
    return u;
}

// P_n via the defining product h(t) over both alphabets and, independently,
// via the single-alphabet form with formal t_j coefficients.
inline UniversalPoly product_p(unsigned n, const UniversalOptions& opts = {}) {
    if (n < 1) throw Error("product_p: n must be >= 1");
    if (n > opts.product_cap && !opts.force) {
        std::ostringstream msg;
        msg << "product_p(" << n << "): n exceeds cap " << opts.product_cap << " (expansion has "
            << n * n << " factors over " << 2 * n << " variables, ~"
            << detail::binomial_coefficient(n * n, n)
            << " products in the t^" << n << " coefficient); use force to override";
        throw CapExceeded(msg.str());
    }

    // Route Definition: h(t) = prod_{i,j} (1 + x_i y_j t).
    detail::TruncSeries h(n);
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = 1; j <= n; ++j) {
            Monomial xy = Monomial::variable({Alph::X, i}) * Monomial::variable({Alph::Y, j});
            h.mul_binomial(Polynomial::term(xy, 1));
        }
    Polynomial definition = to_elementary_basis_2(h.at(n), alph_x(n), alph_y(n)).expression;

    // Route Alternate: h~(t) = prod_i (1 + x_i t_1 t + x_i^2 t_2 t^2 + ...),
    // reduced in the x alphabet only.
    detail::TruncSeries ht(n);
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Polynomial> factor(n + 1);
        factor[0] = Polynomial(1);
        for (unsigned j = 1; j <= n; ++j) {
            Monomial piece =
                Monomial::variable({Alph::X, i}, j) * Monomial::variable({Alph::T, j});
            factor[j] = Polynomial::term(piece, 1);
        }
        ht.mul_series(factor);
    }
    const Polynomial& raw = ht.at(n);
    if (!is_symmetric_in(raw, Alph::X, n))
        throw Error("product_p: alternate expansion lost x-symmetry");
    Polynomial alternate = elementary_reduce(raw, Alph::X, n, Alph::S);
    detail::check_roundtrip_in_x(alternate, raw, n);

    if (!(definition == alternate))
        throw RouteMismatch("product_p(" + std::to_string(n) + "): routes disagree");

    UniversalPoly u{UKind::P, n, 0, definition, Route::Definition,
                    universal_cache_key(UKind::P, n, 0)};
    validate_universal(u);
    return u;
}

// P_{n,m} via the defining product g(t) over the C(nm, m) compound factors,
// and independently via an incremental elementary-symmetric accumulation
// over the same compounds visited in the opposite order.
inline UniversalPoly composition_p(unsigned n, unsigned m, const UniversalOptions& opts = {}) {
    if (n < 1 || m < 1) throw Error("composition_p: n and m must be >= 1");
    const unsigned nm = n * m;
    if (nm > opts.composition_cap && !opts.force) {
        std::ostringstream msg;
        msg << "composition_p(" << n << ", " << m << "): n*m = " << nm << " exceeds cap "
            << opts.composition_cap << " (" << detail::binomial_coefficient(nm, m)
            << " compound factors, degree-" << nm << " symmetrization in " << nm
            << " variables); use force to override";
        throw CapExceeded(msg.str());
    }

    auto subsets = detail::subsets_lex(nm, m);
    std::vector<Monomial> compounds;
    compounds.reserve(subsets.size());
    for (const auto& subset : subsets) {
        Monomial c;
        for (unsigned idx : subset) c = c * Monomial::variable({Alph::X, idx});
        compounds.push_back(c);
    }

    // Route Definition: truncated expansion of prod (1 + compound * t).
    detail::TruncSeries g(n);
    for (const auto& c : compounds) g.mul_binomial(Polynomial::term(c, 1));
    Polynomial definition = to_elementary_basis(g.at(n), alph_x(nm)).expression;

    // Route Alternate: e_n of the compound multiset, accumulated over the
    // reversed factor list.
    std::vector<Polynomial> e(n + 1);
    e[0] = Polynomial(1);
    for (auto it = compounds.rbegin(); it != compounds.rend(); ++it) {
        Polynomial c = Polynomial::term(*it, 1);
        for (unsigned k = n; k >= 1; --k) {
            e[k] += e[k - 1] * c;
            if (k == 1) break;
        }
    }
    const Polynomial& raw = e[n];
    Polynomial alternate = elementary_reduce(raw, Alph::X, nm, Alph::S);
    detail::check_roundtrip_in_x(alternate, raw, nm);

    if (!(definition == alternate))
        throw RouteMismatch("composition_p(" + std::to_string(n) + ", " + std::to_string(m) +
                            "): routes disagree");

    UniversalPoly u{UKind::Pnm, n, m, definition, Route::Definition,
                    universal_cache_key(UKind::Pnm, n, m)};
    validate_universal(u);
    return u;
}

inline Int coefficient_sum(const UniversalPoly& u) {
    return u.body.evaluate([](VarId) { return Int(1); });
}

// The part of the body at most linear in the given alphabet.
inline Polynomial linear_part(const UniversalPoly& u, Alph alph) {
    return u.body.truncate_min_degree(alph, 2);
}

// JSON document for a universal polynomial: header plus term array; the
// exact format persisted by the cache.
inline nlohmann::json universal_to_json(const UniversalPoly& u) {
    nlohmann::json j{{"format_version", kUniversalFormatVersion},
                     {"kind", ukind_name(u.kind)},
                     {"route", route_name(u.route)},
                     {"terms", u.body.to_json()}};
    j["params"] = nlohmann::json{{"n", u.n}};
    if (u.kind == UKind::Pnm) j["params"]["m"] = u.m;
    return j;
}

// On-disk cache, one JSON file per polynomial: <dir>/<kind>/<params>.json.
class UniversalCache {
public:
    explicit UniversalCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }

    std::filesystem::path path_for(UKind kind, unsigned n, unsigned m = 0) const {
        return dir_ / ukind_name(kind) / (params_token(kind, n, m) + ".json");
    }

    std::optional<UniversalPoly> get(UKind kind, unsigned n, unsigned m = 0) const {
        const auto file = path_for(kind, n, m);
        std::ifstream in(file);
        if (!in) return std::nullopt;
        nlohmann::json j;
        try {
            in >> j;
            if (j.at("format_version").get<int>() != kUniversalFormatVersion)
                throw Error("format version mismatch");
            if (j.at("kind").get<std::string>() != ukind_name(kind)) throw Error("kind mismatch");
            const auto& params = j.at("params");
            if (params.at("n").get<unsigned>() != n) throw Error("params mismatch");
            if (kind == UKind::Pnm && params.at("m").get<unsigned>() != m)
                throw Error("params mismatch");
            UniversalPoly u;
            u.kind = kind;
            u.n = n;
            u.m = kind == UKind::Pnm ? m : 0;
            u.body = Polynomial::from_json(j.at("terms"));
            u.route = j.at("route").get<std::string>() == "alternate" ? Route::Alternate
                                                                      : Route::Definition;
            u.cache_key = universal_cache_key(kind, n, m);
            validate_universal(u);
            return u;
        } catch (const std::exception& e) {
            throw CorruptCache("corrupt cache entry " + file.string() + ": " + e.what());
        }
    }

    void put(const UniversalPoly& u) const {
        nlohmann::json j = universal_to_json(u);
        const auto file = path_for(u.kind, u.n, u.m);
        std::filesystem::create_directories(file.parent_path());
        // Atomic write-then-rename; bodies are deterministic, so concurrent
        // writers of the same key are idempotent.
        auto tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw Error("cannot write cache file " + tmp.string());
            out << j.dump(1) << '\n';
        }
        std::filesystem::rename(tmp, file);
    }

    std::vector<std::string> list() const {
        std::vector<std::string> keys;
        if (!std::filesystem::exists(dir_)) return keys;
        for (const auto& kind_dir : std::filesystem::directory_iterator(dir_)) {
            if (!kind_dir.is_directory()) continue;
            for (const auto& f : std::filesystem::directory_iterator(kind_dir.path()))
                if (f.path().extension() == ".json")
                    keys.push_back(kind_dir.path().filename().string() + "/" +
                                   f.path().stem().string());
        }
        std::sort(keys.begin(), keys.end());
        return keys;
    }

    std::size_t clear() const {
        std::size_t removed = 0;
        if (!std::filesystem::exists(dir_)) return removed;
        for (const auto& kind_dir : std::filesystem::directory_iterator(dir_)) {
            if (!kind_dir.is_directory()) continue;
            for (const auto& f : std::filesystem::directory_iterator(kind_dir.path()))
                if (f.path().extension() == ".json")
                    removed += std::filesystem::remove(f.path()) ? 1 : 0;
        }
        return removed;
    }

private:
    std::filesystem::path dir_;
};

// Memoizing front end over the generators, with optional disk cache and the
// feasibility caps from the run configuration.
class UniversalContext {
public:
    UniversalOptions opts;
    UniversalCache* cache = nullptr;

    UniversalContext() = default;
    explicit UniversalContext(UniversalOptions o, UniversalCache* c = nullptr)
        : opts(o), cache(c) {}

    const UniversalPoly& q(unsigned n) {
        if (n > opts.newton_cap && !opts.force)
            throw CapExceeded("newton_q(" + std::to_string(n) + "): exceeds cap " +
                              std::to_string(opts.newton_cap));
        return fetch(UKind::Q, n, 0, [&] { return newton_q(n); });
    }

    const UniversalPoly& p(unsigned n) {
        return fetch(UKind::P, n, 0, [&] { return product_p(n, opts); });
    }

    const UniversalPoly& pnm(unsigned n, unsigned m) {
        return fetch(UKind::Pnm, n, m, [&] { return composition_p(n, m, opts); });
    }

private:
    template <class Gen>
    const UniversalPoly& fetch(UKind kind, unsigned n, unsigned m, Gen&& generate) {
        const std::string key = universal_cache_key(kind, n, m);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        if (cache) {
            if (auto hit = cache->get(kind, n, m)) return memo_.emplace(key, std::move(*hit)).first->second;
        }
        UniversalPoly fresh = generate();
        if (cache) cache->put(fresh);
        return memo_.emplace(key, std::move(fresh)).first->second;
    }

    std::map<std::string, UniversalPoly> memo_;
};

// Lemma check: P_n reduced modulo all t-monomials of t-degree >= 2 equals
// Q_n * t_n.
inline VerificationReport check_linearity_lemma(unsigned n, UniversalContext& ctx) {
    const std::string params = "n=" + std::to_string(n);
    const Polynomial reduced = ctx.p(n).body.truncate_min_degree(Alph::T, 2);
    const Polynomial expected =
        ctx.q(n).body * Polynomial::variable({Alph::T, n});
    if (reduced == expected) return report_pass("linearity-lemma", params);
    return report_fail("linearity-lemma", params,
                       "difference = " + (reduced - expected).to_text());
}

// Lemma check: the linear part of P_{n,m} is exactly c * s_{nm} with c = -1
// iff n and m are both even; in particular no other linear term survives.
inline VerificationReport check_composition_linear(unsigned n, unsigned m,
                                                   UniversalContext& ctx) {
    const std::string params = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    const Polynomial lp = linear_part(ctx.pnm(n, m), Alph::S);
    const Int c = (n % 2 == 0 && m % 2 == 0) ? -1 : 1;
    const Polynomial expected = Polynomial::variable({Alph::S, n * m}) * c;
    if (lp == expected) return report_pass("composition-linear", params);
    return report_fail("composition-linear", params,
                       "linear part = " + lp.to_text() + ", expected " + expected.to_text());
}

// Polynomial form of the Newton identity:
// Q_k - s1 Q_{k-1} + s2 Q_{k-2} - ... + (-1)^{k-1} s_{k-1} Q_1
//     - (-1)^{k+1} k s_k = 0.
inline VerificationReport check_newton_identity(unsigned k, UniversalContext& ctx) {
    const std::string params = "k=" + std::to_string(k);
    Polynomial lhs = ctx.q(k).body;
    for (unsigned i = 1; i < k; ++i) {
        Polynomial term = Polynomial::variable({Alph::S, i}) * ctx.q(k - i).body;
        lhs += (i % 2 == 1) ? -term : term;
    }
    Int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k+1}
    lhs -= Polynomial::variable({Alph::S, k}) * (sign * Int(k));
    if (lhs.is_zero()) return report_pass("newton-identity", params);
    return report_fail("newton-identity", params, "residual = " + lhs.to_text());
}

}  // namespace lring
