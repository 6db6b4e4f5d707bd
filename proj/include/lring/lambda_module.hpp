#pragma once

// Modules over lambda-rings and the graded square-zero model.
//
// A lambda-module (M, lambda_{M,n}) over (R, lambda) is an R-module with
// additive operations satisfying
//   (1) lambda_{M,1} = id
//   (2) lambda_{M,n} lambda_{M,m} = lambda_{M,nm}
//   (3) lambda_{M,n}(a x) = psi^n(a) lambda_{M,n}(x).
//
// The canonical example is M = R with lambda_{M,n} = psi^n. The graded ring
// R + M_1 + ... + M_d with square-zero positive part carries lambda
// operations
//   lambda^r(a)_0 = lambda^r(a_0)
//   lambda^r(a)_k = sum_{i=0}^{r-1} lambda^i(a_0) * sgn(r-i) lambda_{M,r-i}(a_k)
// where sgn(j) = (-1)^{j-1}. Extracting lambda_{M,r} := (-1)^{r-1} lambda^r
// from the positive part recovers the module structure; the checks in this
// header verify semilinearity, the composition sign table, and the module
// axioms on concrete instances.

#include "lring/lambda.hpp"

namespace lring {

template <class M>
concept LambdaModule = requires(const M& m, const typename M::Ring::Element& a,
                                const typename M::Element& x, unsigned n, const Int& c) {
    typename M::Ring;
    typename M::Element;
    requires LambdaRing<typename M::Ring>;
    { m.ring() } -> std::convertible_to<const typename M::Ring&>;
    { m.zero() } -> std::same_as<typename M::Element>;
    { m.add(x, x) } -> std::same_as<typename M::Element>;
    { m.neg(x) } -> std::same_as<typename M::Element>;
    { m.eq(x, x) } -> std::convertible_to<bool>;
    { m.scalar(a, x) } -> std::same_as<typename M::Element>;
    { m.lambda_module(n, x) } -> std::same_as<typename M::Element>;
    { m.divisible(x, c) } -> std::convertible_to<bool>;
    { m.to_string(x) } -> std::convertible_to<std::string>;
    { m.name() } -> std::convertible_to<std::string>;
};

// The base ring viewed as a module over itself with lambda_{M,n} = psi^n.
template <LambdaRing R>
class AdamsModule {
public:
    using Ring = R;
    using Element = typename R::Element;

    explicit AdamsModule(const R& r) : ring_(&r) {}

    const R& ring() const { return *ring_; }
    Element zero() const { return ring_->zero(); }
    Element add(const Element& a, const Element& b) const { return ring_->add(a, b); }
    Element neg(const Element& a) const { return ring_->neg(a); }
    bool eq(const Element& a, const Element& b) const { return ring_->eq(a, b); }
    Element scalar(const typename R::Element& a, const Element& x) const {
        return ring_->mul(a, x);
    }
    Element lambda_module(unsigned n, const Element& x) const {
        return adams_via_newton(*ring_, n, x);
    }
    // Bulk form; index 0 unused.
    std::vector<Element> lambda_module_table(const Element& x, unsigned max_n) const {
        return adams_newton_table(*ring_, x, max_n);
    }
    bool divisible(const Element& a, const Int& d) const { return ring_->divisible(a, d); }
    std::string to_string(const Element& a) const { return ring_->to_string(a); }
    std::string name() const { return "adams"; }

private:
    const R* ring_;
};

// Negative control: lambda_{M,level} replaced by zero.
template <LambdaModule M>
class CorruptModule {
public:
    using Ring = typename M::Ring;
    using Element = typename M::Element;

    CorruptModule(M base, unsigned level) : base_(std::move(base)), level_(level) {}

    const Ring& ring() const { return base_.ring(); }
    Element zero() const { return base_.zero(); }
    Element add(const Element& a, const Element& b) const { return base_.add(a, b); }
    Element neg(const Element& a) const { return base_.neg(a); }
    bool eq(const Element& a, const Element& b) const { return base_.eq(a, b); }
    Element scalar(const typename Ring::Element& a, const Element& x) const {
        return base_.scalar(a, x);
    }
    Element lambda_module(unsigned n, const Element& x) const {
        return n == level_ ? base_.zero() : base_.lambda_module(n, x);
    }
    bool divisible(const Element& a, const Int& d) const { return base_.divisible(a, d); }
    std::string to_string(const Element& a) const { return base_.to_string(a); }
    std::string name() const {
        return base_.name() + "+corrupt-module" + std::to_string(level_);
    }

private:
    M base_;
    unsigned level_;
};

// R + M_1 + ... + M_d with square-zero positive part. Satisfies the
// LambdaRing concept, so the generic axiom checker runs on it unchanged.
template <LambdaModule M>
class GradedRing {
public:
    using RingElement = typename M::Ring::Element;
    using ModuleElement = typename M::Element;

    struct Element {
        RingElement a0;
        std::vector<ModuleElement> parts;
    };

    explicit GradedRing(const M& m, unsigned width = 1) : m_(&m), width_(width) {
        if (width_ < 1) throw Error("GradedRing: width must be >= 1");
    }

    const M& module() const { return *m_; }
    const typename M::Ring& base_ring() const { return m_->ring(); }
    unsigned width() const { return width_; }

    Element make(RingElement a0, std::vector<ModuleElement> parts) const {
        if (parts.size() != width_) throw Error("GradedRing: mismatched shapes");
        return {std::move(a0), std::move(parts)};
    }

    Element embed_ring(const RingElement& a) const {
        return {a, std::vector<ModuleElement>(width_, m_->zero())};
    }

    // Place a module element in one positive degree (1-based), zero elsewhere.
    Element embed_module(const ModuleElement& x, unsigned degree = 1) const {
        if (degree < 1 || degree > width_) throw Error("GradedRing: degree out of range");
        auto e = embed_ring(base_ring().zero());
        e.parts[degree - 1] = x;
        return e;
    }

    Element zero() const { return embed_ring(base_ring().zero()); }
    Element one() const { return embed_ring(base_ring().one()); }

    Element add(const Element& a, const Element& b) const {
        check_shape(a, b);
        Element c{base_ring().add(a.a0, b.a0), {}};
        c.parts.reserve(width_);
        for (unsigned k = 0; k < width_; ++k) c.parts.push_back(m_->add(a.parts[k], b.parts[k]));
        return c;
    }

    Element neg(const Element& a) const {
        Element c{base_ring().neg(a.a0), {}};
        c.parts.reserve(width_);
        for (unsigned k = 0; k < width_; ++k) c.parts.push_back(m_->neg(a.parts[k]));
        return c;
    }

    // (a b)_0 = a_0 b_0, (a b)_k = a_0 b_k + b_0 a_k: positive parts multiply
    // to zero.
    Element mul(const Element& a, const Element& b) const {
        check_shape(a, b);
        Element c{base_ring().mul(a.a0, b.a0), {}};
        c.parts.reserve(width_);
        for (unsigned k = 0; k < width_; ++k)
            c.parts.push_back(m_->add(m_->scalar(a.a0, b.parts[k]), m_->scalar(b.a0, a.parts[k])));
        return c;
    }

    bool eq(const Element& a, const Element& b) const {
        if (!base_ring().eq(a.a0, b.a0)) return false;
        for (unsigned k = 0; k < width_; ++k)
            if (!m_->eq(a.parts[k], b.parts[k])) return false;
        return true;
    }

    // The graded lambda operation acting through the module structure:
    // lambda^j on a positive part is (-1)^{j-1} lambda_{M,j}.
    ModuleElement signed_module_lambda(unsigned j, const ModuleElement& x) const {
        auto v = m_->lambda_module(j, x);
        return (j % 2 == 0) ? m_->neg(v) : v;
    }

    Element lambda(unsigned r, const Element& a) const {
        if (r == 0) return one();
        const auto& R = base_ring();
        Element c{R.lambda(r, a.a0), {}};
        c.parts.reserve(width_);
        for (unsigned k = 0; k < width_; ++k) {
            auto acc = m_->zero();
            for (unsigned i = 0; i < r; ++i)
                acc = m_->add(acc,
                              m_->scalar(R.lambda(i, a.a0), signed_module_lambda(r - i, a.parts[k])));
            c.parts.push_back(acc);
        }
        return c;
    }

    // Bulk lambda table: shares the base-ring table and one module table per
    // positive degree across all r. Same values as repeated lambda calls.
    std::vector<Element> lambda_table(const Element& a, unsigned max_r) const {
        auto a0tab = lring::lambda_table(base_ring(), a.a0, max_r);
        std::vector<std::vector<ModuleElement>> mtab;
        mtab.reserve(width_);
        for (unsigned k = 0; k < width_; ++k) mtab.push_back(module_lambda_table(a.parts[k], max_r));

        std::vector<Element> out;
        out.reserve(max_r + 1);
        out.push_back(one());
        for (unsigned r = 1; r <= max_r; ++r) {
            Element c{a0tab[r], {}};
            c.parts.reserve(width_);
            for (unsigned k = 0; k < width_; ++k) {
                auto acc = m_->zero();
                for (unsigned i = 0; i < r; ++i) {
                    const unsigned j = r - i;
                    auto v = mtab[k][j];
                    if (j % 2 == 0) v = m_->neg(v);
                    acc = m_->add(acc, m_->scalar(a0tab[i], v));
                }
                c.parts.push_back(acc);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    bool divisible(const Element& a, const Int& d) const {
        if (!base_ring().divisible(a.a0, d)) return false;
        for (unsigned k = 0; k < width_; ++k)
            if (!m_->divisible(a.parts[k], d)) return false;
        return true;
    }

    std::string to_string(const Element& a) const {
        std::string out = "(" + base_ring().to_string(a.a0);
        for (unsigned k = 0; k < width_; ++k) out += "; " + m_->to_string(a.parts[k]);
        return out + ")";
    }

    std::string name() const {
        return "graded(" + base_ring().name() + "," + m_->name() +
               ",width=" + std::to_string(width_) + ")";
    }

private:
    void check_shape(const Element& a, const Element& b) const {
        if (a.parts.size() != width_ || b.parts.size() != width_)
            throw Error("GradedRing: mismatched shapes");
    }

    // lambda_{M,0..max} with index 0 unused; uses the module's bulk table
    // when it has one.
    std::vector<ModuleElement> module_lambda_table(const ModuleElement& x, unsigned max) const {
        if constexpr (requires(const M& mm) {
                          {
                              mm.lambda_module_table(x, max)
                          } -> std::same_as<std::vector<ModuleElement>>;
                      }) {
            return m_->lambda_module_table(x, max);
        } else {
            std::vector<ModuleElement> tab(1, m_->zero());
            for (unsigned j = 1; j <= max; ++j) tab.push_back(m_->lambda_module(j, x));
            return tab;
        }
    }

    const M* m_;
    unsigned width_;
};

// The executable content of the main theorem: lambda_{M,r} := (-1)^{r-1}
// times the graded lambda^r restricted to one positive degree. With
// with_sign = false the extraction drops the sign, a negative control that
// must break the composition axiom.
template <LambdaModule M>
class ExtractedModule {
public:
    using Ring = typename M::Ring;
    using Element = typename M::Element;

    explicit ExtractedModule(GradedRing<M> graded, bool with_sign = true,
                             unsigned degree = 1)
        : graded_(std::move(graded)), with_sign_(with_sign), degree_(degree) {}

    const Ring& ring() const { return graded_.base_ring(); }
    Element zero() const { return graded_.module().zero(); }
    Element add(const Element& a, const Element& b) const { return graded_.module().add(a, b); }
    Element neg(const Element& a) const { return graded_.module().neg(a); }
    bool eq(const Element& a, const Element& b) const { return graded_.module().eq(a, b); }
    Element scalar(const typename Ring::Element& a, const Element& x) const {
        return graded_.module().scalar(a, x);
    }

    Element lambda_module(unsigned n, const Element& x) const {
        auto image = graded_.lambda(n, graded_.embed_module(x, degree_));
        auto v = image.parts[degree_ - 1];
        if (with_sign_ && n % 2 == 0) v = graded_.module().neg(v);  // (-1)^{n-1}
        return v;
    }

    bool divisible(const Element& a, const Int& d) const {
        return graded_.module().divisible(a, d);
    }
    std::string to_string(const Element& a) const { return graded_.module().to_string(a); }
    std::string name() const {
        return std::string("extracted(") + graded_.name() + (with_sign_ ? "" : ",broken-sign") +
               ")";
    }

private:
    GradedRing<M> graded_;
    bool with_sign_;
    unsigned degree_;
};

template <LambdaModule M>
ExtractedModule<M> extract_module(const GradedRing<M>& graded) {
    return ExtractedModule<M>(graded);
}

// ---------------------------------------------------------------------------
// Verification suite.

// Definition axioms (1)-(3) of a lambda-module.
template <LambdaModule M>
std::vector<VerificationReport> check_lambda_module_axioms(
    const M& m, const std::vector<typename M::Ring::Element>& ring_samples,
    const std::vector<typename M::Element>& module_samples, unsigned max_n,
    unsigned composition_cap) {
    const auto& R = m.ring();
    const std::string params = "module=" + m.name() + ",ring=" + R.name() +
                               ",max_n=" + std::to_string(max_n) +
                               ",composition_cap=" + std::to_string(composition_cap) +
                               ",samples=" + std::to_string(module_samples.size());

    detail::FailTracker ax1, ax2, ax3;

    for (const auto& x : module_samples) {
        auto v = m.lambda_module(1, x);
        if (!m.eq(v, x)) {
            ax1.fail("x=" + m.to_string(x) + ", lambda_{M,1}(x)=" + m.to_string(v));
            break;
        }
    }

    for (const auto& x : module_samples) {
        if (!ax2.pass) break;
        for (unsigned n = 1; n <= composition_cap && ax2.pass; ++n)
            for (unsigned k = 1; n * k <= composition_cap && ax2.pass; ++k) {
                auto lhs = m.lambda_module(n, m.lambda_module(k, x));
                auto rhs = m.lambda_module(n * k, x);
                if (!m.eq(lhs, rhs))
                    ax2.fail("x=" + m.to_string(x) + ", n=" + std::to_string(n) +
                             ", m=" + std::to_string(k) + ", lhs=" + m.to_string(lhs) +
                             ", rhs=" + m.to_string(rhs));
            }
    }

    for (const auto& a : ring_samples) {
        if (!ax3.pass) break;
        for (const auto& x : module_samples) {
            if (!ax3.pass) break;
            for (unsigned n = 1; n <= max_n && ax3.pass; ++n) {
                auto lhs = m.lambda_module(n, m.scalar(a, x));
                auto rhs = m.scalar(adams_via_newton(R, n, a), m.lambda_module(n, x));
                if (!m.eq(lhs, rhs))
                    ax3.fail("a=" + R.to_string(a) + ", x=" + m.to_string(x) +
                             ", n=" + std::to_string(n) + ", lhs=" + m.to_string(lhs) +
                             ", rhs=" + m.to_string(rhs));
            }
        }
    }

    return {ax1.report("module-axiom-1", params), ax2.report("module-axiom-2", params),
            ax3.report("module-axiom-3", params)};
}

// lambda^r(a.x) = psi^r(a) lambda^r(x) on the positive part of the graded
// ring.
template <LambdaModule M>
VerificationReport check_semilinearity(const GradedRing<M>& g,
                                       const std::vector<typename M::Ring::Element>& ring_samples,
                                       const std::vector<typename M::Element>& module_samples,
                                       unsigned max_r) {
    const auto& R = g.base_ring();
    const auto& m = g.module();
    const std::string params = "ring=" + g.name() + ",max_r=" + std::to_string(max_r) +
                               ",samples=" + std::to_string(ring_samples.size()) + "x" +
                               std::to_string(module_samples.size());
    detail::FailTracker t;
    for (const auto& a : ring_samples) {
        if (!t.pass) break;
        for (const auto& x : module_samples) {
            if (!t.pass) break;
            for (unsigned r = 1; r <= max_r && t.pass; ++r) {
                auto lhs = g.lambda(r, g.embed_module(m.scalar(a, x))).parts[0];
                auto rhs = m.scalar(adams_via_newton(R, r, a),
                                    g.lambda(r, g.embed_module(x)).parts[0]);
                if (!m.eq(lhs, rhs))
                    t.fail("a=" + R.to_string(a) + ", x=" + m.to_string(x) +
                           ", r=" + std::to_string(r) + ", lhs=" + m.to_string(lhs) +
                           ", rhs=" + m.to_string(rhs));
            }
        }
    }
    return t.report("semilinearity", params);
}

// lambda^r lambda^s = c lambda^{rs} on module embeddings, c = -1 iff r and s
// are both even.
template <LambdaModule M>
VerificationReport check_composition_sign(const GradedRing<M>& g,
                                          const std::vector<typename M::Element>& module_samples,
                                          unsigned max_rs) {
    const auto& m = g.module();
    const std::string params = "ring=" + g.name() + ",max_rs=" + std::to_string(max_rs) +
                               ",samples=" + std::to_string(module_samples.size());
    detail::FailTracker t;
    for (const auto& x : module_samples) {
        if (!t.pass) break;
        for (unsigned r = 1; r <= max_rs && t.pass; ++r)
            for (unsigned s = 1; r * s <= max_rs && t.pass; ++s) {
                auto e = g.embed_module(x);
                auto lhs = g.lambda(r, g.lambda(s, e));
                auto expected = g.lambda(r * s, e);
                if (r % 2 == 0 && s % 2 == 0) expected = g.neg(expected);
                if (!g.eq(lhs, expected))
                    t.fail("x=" + m.to_string(x) + ", r=" + std::to_string(r) +
                           ", s=" + std::to_string(s) + ", lhs=" + g.to_string(lhs) +
                           ", rhs=" + g.to_string(expected));
            }
    }
    return t.report("composition-sign", params);
}

// Pure sign bookkeeping: (-1)^{rs+1} = (-1)^{r+1} (-1)^{s+1} c(r,s).
inline VerificationReport check_sign_identity(unsigned max) {
    const std::string params = "max=" + std::to_string(max);
    detail::FailTracker t;
    for (unsigned r = 1; r <= max && t.pass; ++r)
        for (unsigned s = 1; s <= max && t.pass; ++s) {
            const int lhs = (r * s + 1) % 2 == 0 ? 1 : -1;
            const int c = (r % 2 == 0 && s % 2 == 0) ? -1 : 1;
            const int rhs = ((r + 1) % 2 == 0 ? 1 : -1) * ((s + 1) % 2 == 0 ? 1 : -1) * c;
            if (lhs != rhs)
                t.fail("r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                       ", lhs=" + std::to_string(lhs) + ", rhs=" + std::to_string(rhs));
        }
    return t.report("sign-identity", params);
}

// Newton-formula consequence on module embeddings:
// psi^r((0,x)) = (-1)^{r+1} r lambda^r((0,x)).
template <LambdaModule M>
VerificationReport check_graded_newton_consequence(
    const GradedRing<M>& g, const std::vector<typename M::Element>& module_samples,
    unsigned max_r) {
    const auto& m = g.module();
    const std::string params = "ring=" + g.name() + ",max_r=" + std::to_string(max_r) +
                               ",samples=" + std::to_string(module_samples.size());
    detail::FailTracker t;
    for (const auto& x : module_samples) {
        if (!t.pass) break;
        for (unsigned r = 1; r <= max_r && t.pass; ++r) {
            auto e = g.embed_module(x);
            auto lhs = adams_via_newton(g, r, e);
            Int sign = (r % 2 == 1) ? Int(r) : Int(-static_cast<long long>(r));
            auto rhs = scalar_mul(g, sign, g.lambda(r, e));
            if (!g.eq(lhs, rhs))
                t.fail("x=" + m.to_string(x) + ", r=" + std::to_string(r) +
                       ", lhs=" + g.to_string(lhs) + ", rhs=" + g.to_string(rhs));
        }
    }
    return t.report("graded-newton-consequence", params);
}

// Lambda-ring axioms on the graded square-zero extension, via the generic
// checker.
template <LambdaModule M>
std::vector<VerificationReport> check_graded_lambda_ring(
    const GradedRing<M>& g, UniversalContext& ctx,
    const std::vector<typename GradedRing<M>::Element>& samples, unsigned max_n) {
    return check_lambda_axioms(g, ctx, samples, max_n);
}

}  // namespace lring
