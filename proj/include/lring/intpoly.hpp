#pragma once

// Sparse multivariate polynomials over arbitrary-precision integers.
//
// Variables live in five disjoint alphabets: x/y are underlying variables,
// s/t are elementary-symmetric outputs for the x/y alphabets, u is free for
// generic arguments. The global variable order is alphabet-major
// (x < y < s < t < u), index ascending, and every lexicographic comparison
// in the library uses it. Polynomials are immutable canonical values: no
// zero coefficients, no zero exponents, terms keyed by monomial.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "lring/bigint.hpp"
#include "lring/errors.hpp"

namespace lring {

enum class Alph : std::uint8_t { X = 0, Y = 1, S = 2, T = 3, U = 4 };

inline char alph_letter(Alph a) {
    switch (a) {
        case Alph::X: return 'x';
        case Alph::Y: return 'y';
        case Alph::S: return 's';
        case Alph::T: return 't';
        case Alph::U: return 'u';
    }
    throw Error("invalid alphabet tag");
}

inline std::optional<Alph> alph_from_letter(char c) {
    switch (c) {
        case 'x': return Alph::X;
        case 'y': return Alph::Y;
        case 's': return Alph::S;
        case 't': return Alph::T;
        case 'u': return Alph::U;
        default: return std::nullopt;
    }
}

struct VarId {
    Alph alphabet;
    unsigned index;  // >= 1

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline std::string var_name(VarId v) {
    return alph_letter(v.alphabet) + std::to_string(v.index);
}

// Squarefree-or-not product of variables with positive exponents, kept as a
// vector sorted by VarId. The empty monomial is 1.
class Monomial {
public:
    using Entry = std::pair<VarId, unsigned>;

    Monomial() = default;

    static Monomial variable(VarId v, unsigned exp = 1) {
        Monomial m;
        if (v.index < 1) throw Error("variable index must be >= 1");
        if (exp > 0) m.entries_.emplace_back(v, exp);
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_one() const { return entries_.empty(); }

    unsigned exponent(VarId v) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                                   [](const Entry& e, VarId w) { return e.first < w; });
        return (it != entries_.end() && it->first == v) ? it->second : 0;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : entries_) d += e;
        return d;
    }

    unsigned degree_in(Alph a) const {
        unsigned d = 0;
        for (const auto& [v, e] : entries_)
            if (v.alphabet == a) d += e;
        return d;
    }

    // weight = sum of index * exponent over one alphabet; the universal
    // polynomials are homogeneous for this grading.
    unsigned weight_in(Alph a) const {
        unsigned w = 0;
        for (const auto& [v, e] : entries_)
            if (v.alphabet == a) w += v.index * e;
        return w;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.entries_.reserve(entries_.size() + o.entries_.size());
        auto i = entries_.begin();
        auto j = o.entries_.begin();
        while (i != entries_.end() && j != o.entries_.end()) {
            if (i->first < j->first)
                r.entries_.push_back(*i++);
            else if (j->first < i->first)
                r.entries_.push_back(*j++);
            else {
                r.entries_.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.entries_.insert(r.entries_.end(), i, entries_.end());
        r.entries_.insert(r.entries_.end(), j, o.entries_.end());
        return r;
    }

    // Keep only the variables of one alphabet.
    Monomial restrict_to(Alph a) const {
        Monomial r;
        for (const auto& ent : entries_)
            if (ent.first.alphabet == a) r.entries_.push_back(ent);
        return r;
    }

    // Drop the variables of one alphabet.
    Monomial without(Alph a) const {
        Monomial r;
        for (const auto& ent : entries_)
            if (ent.first.alphabet != a) r.entries_.push_back(ent);
        return r;
    }

    Monomial map_vars(const std::function<VarId(VarId)>& f) const {
        Monomial r;
        for (const auto& [v, e] : entries_) {
            Monomial piece = Monomial::variable(f(v), e);
            r = r * piece;
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<Entry> entries_;
};

// Lexicographic comparison against the global variable order: exponent
// vectors are compared position by position, earliest variable first.
// Returns <0, 0, >0.
inline int lex_cmp(const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) return +1;  // a has positive exp at an earlier position
        if (eb[j].first < ea[i].first) return -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? +1 : -1;
        ++i;
        ++j;
    }
    if (i < ea.size()) return +1;
    if (j < eb.size()) return -1;
    return 0;
}

// Same comparison, restricted to one alphabet's exponents.
inline int lex_cmp_in(Alph alph, const Monomial& a, const Monomial& b) {
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = 0, j = 0;
    auto skip = [alph](const std::vector<Monomial::Entry>& v, std::size_t& k) {
        while (k < v.size() && v[k].first.alphabet != alph) ++k;
    };
    skip(ea, i);
    skip(eb, j);
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) return +1;
        if (eb[j].first < ea[i].first) return -1;
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? +1 : -1;
        ++i;
        ++j;
        skip(ea, i);
        skip(eb, j);
    }
    if (i < ea.size()) return +1;
    if (j < eb.size()) return -1;
    return 0;
}

struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return lex_cmp(a, b) < 0; }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, LexLess>;

    Polynomial() = default;  // zero
    Polynomial(int c) : Polynomial(Int(c)) {}
    Polynomial(const Int& c) {
        if (c != 0) terms_.emplace(Monomial(), c);
    }

    static Polynomial variable(VarId v) { return term(Monomial::variable(v), 1); }

    static Polynomial term(const Monomial& m, const Int& c) {
        Polynomial p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Int coefficient_of(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // Constant term shortcut.
    Int constant_term() const { return coefficient_of(Monomial()); }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial operator+(const Polynomial& o) const {
        Polynomial r = *this;
        r += o;
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial r = *this;
        r -= o;
        return r;
    }
    Polynomial operator-() const {
        Polynomial r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        Polynomial r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial operator*(const Int& c) const {
        Polynomial r;
        if (c == 0) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial pow(unsigned e) const {
        Polynomial r(1);
        Polynomial b = *this;
        while (e) {
            if (e & 1u) r *= b;
            if (e >>= 1u) b *= b;
        }
        return r;
    }

    // The unique ring homomorphism extending the assignment; variables
    // missing from the assignment are left fixed.
    Polynomial substitute(const std::map<VarId, Polynomial>& assignment) const {
        std::map<VarId, std::vector<Polynomial>> powers;  // powers[v][e-1] = image(v)^e
        auto image_pow = [&](VarId v, unsigned e) -> Polynomial {
            auto it = assignment.find(v);
            if (it == assignment.end()) return term(Monomial::variable(v, e), 1);
            auto& tab = powers[v];
            while (tab.size() < e) tab.push_back(tab.empty() ? it->second : tab.back() * it->second);
            return tab[e - 1];
        };
        Polynomial result;
        for (const auto& [m, c] : terms_) {
            Polynomial prod{c};
            for (const auto& [v, e] : m.entries()) prod *= image_pow(v, e);
            result += prod;
        }
        return result;
    }

    // Remove every term whose degree in `alph` is >= min_deg.
    Polynomial truncate_min_degree(Alph alph, unsigned min_deg) const {
        if (min_deg < 1) throw Error("truncate_min_degree: min_deg must be >= 1");
        Polynomial r;
        for (const auto& [m, c] : terms_)
            if (m.degree_in(alph) < min_deg) r.terms_.emplace(m, c);
        return r;
    }

    unsigned degree_in(Alph a) const {
        if (is_zero()) throw Error("degree of the zero polynomial is undefined");
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(a));
        return d;
    }

    unsigned total_degree() const {
        if (is_zero()) throw Error("degree of the zero polynomial is undefined");
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    // Lexicographically greatest monomial with respect to the alphabet's
    // exponents; ties on the restricted part are broken by global lex order.
    Monomial leading_monomial_lex(Alph alph) const {
        if (is_zero()) throw Error("leading monomial of the zero polynomial");
        const Monomial* best = nullptr;
        for (const auto& [m, c] : terms_) {
            if (!best) {
                best = &m;
                continue;
            }
            int cmp = lex_cmp_in(alph, m, *best);
            if (cmp > 0 || (cmp == 0 && lex_cmp(m, *best) > 0)) best = &m;
        }
        return *best;
    }

    std::set<VarId> variables() const {
        std::set<VarId> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vs.insert(v);
        return vs;
    }

    Int evaluate(const std::function<Int(VarId)>& point) const {
        Int sum = 0;
        for (const auto& [m, c] : terms_) {
            Int prod = c;
            for (const auto& [v, e] : m.entries()) prod *= int_pow(point(v), e);
            sum += prod;
        }
        return sum;
    }

    // Canonical text form: terms in descending lex order, explicit sign and
    // coefficient, e.g. "+3*s1^2*t2 -2*s2*t2". The zero polynomial is "0".
    std::string to_text() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += ' ';
            const Int& c = it->second;
            out += (c < 0) ? '-' : '+';
            out += ((c < 0) ? Int(-c) : c).str();
            for (const auto& [v, e] : it->first.entries()) {
                out += '*';
                out += var_name(v);
                if (e != 1) {
                    out += '^';
                    out += std::to_string(e);
                }
            }
        }
        return out;
    }

    static Polynomial parse_text(const std::string& text);

    // JSON form: array of {"coeff": decimal string, "mono": [[alphabet,
    // index, exponent], ...]} in the same descending lex order.
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            nlohmann::json mono = nlohmann::json::array();
            for (const auto& [v, e] : it->first.entries())
                mono.push_back({std::string(1, alph_letter(v.alphabet)), v.index, e});
            arr.push_back({{"coeff", it->second.str()}, {"mono", mono}});
        }
        return arr;
    }

    static Polynomial from_json(const nlohmann::json& arr) {
        if (!arr.is_array()) throw Error("polynomial json: expected array of terms");
        Polynomial p;
        for (const auto& t : arr) {
            if (!t.is_object() || !t.contains("coeff") || !t.contains("mono"))
                throw Error("polynomial json: malformed term");
            Int c;
            try {
                c = Int(t.at("coeff").get<std::string>());
            } catch (const std::exception&) {
                throw Error("polynomial json: bad coefficient");
            }
            Monomial m;
            for (const auto& piece : t.at("mono")) {
                if (!piece.is_array() || piece.size() != 3)
                    throw Error("polynomial json: malformed monomial entry");
                const auto letter = piece.at(0).get<std::string>();
                auto a = letter.size() == 1 ? alph_from_letter(letter[0]) : std::nullopt;
                if (!a) throw Error("polynomial json: unknown alphabet");
                const auto idx = piece.at(1).get<long long>();
                const auto exp = piece.at(2).get<long long>();
                if (idx < 1 || exp < 1) throw Error("polynomial json: bad index or exponent");
                m = m * Monomial::variable({*a, static_cast<unsigned>(idx)},
                                           static_cast<unsigned>(exp));
            }
            p.add_term(m, c);
        }
        return p;
    }

private:
    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

inline std::string monomial_text(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.entries()) {
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

inline Polynomial Polynomial::parse_text(const std::string& text) {
    Polynomial p;
    std::size_t i = 0;
    const auto n = text.size();
    auto skip_ws = [&] {
        while (i < n && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    };
    skip_ws();
    if (i < n && text[i] == '0' && (i + 1 == n || text[i + 1] == ' ')) {
        ++i;
        skip_ws();
        if (i == n) return p;
        throw Error("polynomial text: trailing content after 0");
    }
    while (i < n) {
        int sign = +1;
        if (text[i] == '+')
            ++i;
        else if (text[i] == '-') {
            sign = -1;
            ++i;
        } else {
            throw Error("polynomial text: term must start with sign");
        }
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw Error("polynomial text: missing coefficient");
        Int coeff = Int(text.substr(start, i - start)) * sign;
        Monomial m;
        while (i < n && text[i] == '*') {
            ++i;
            if (i >= n) throw Error("polynomial text: dangling *");
            auto a = alph_from_letter(text[i]);
            if (!a) throw Error("polynomial text: unknown variable letter");
            ++i;
            start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw Error("polynomial text: missing variable index");
            unsigned idx = static_cast<unsigned>(std::stoul(text.substr(start, i - start)));
            unsigned exp = 1;
            if (i < n && text[i] == '^') {
                ++i;
                start = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) throw Error("polynomial text: missing exponent");
                exp = static_cast<unsigned>(std::stoul(text.substr(start, i - start)));
            }
            if (idx < 1 || exp < 1) throw Error("polynomial text: bad index or exponent");
            m = m * Monomial::variable({*a, idx}, exp);
        }
        p.add_term(m, coeff);
        skip_ws();
    }
    return p;
}

}  // namespace lring
