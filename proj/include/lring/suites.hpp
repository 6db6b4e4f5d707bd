#pragma once

// Default verification suites and instance rosters, shared by the CLI and
// the acceptance harness. All sampling is deterministic given the seed, and
// reports are merged in canonical order, so identical configurations produce
// byte-identical JSON output.

#include <cstdint>
#include <random>
#include <set>

#include "lring/lambda_module.hpp"

namespace lring {

struct RunConfig {
    std::string cache_dir;  // empty: no disk cache
    std::uint64_t seed = 0;
    unsigned newton_cap = 8;
    unsigned product_cap = 4;
    unsigned composition_cap = 8;
    bool force = false;
    std::string ring_filter;    // empty: default roster
    std::string module_filter;  // empty: default roster

    UniversalOptions universal_options() const {
        return {newton_cap, product_cap, composition_cap, force};
    }
};

// Raw mt19937_64 draws with modulo reduction; uniform_int_distribution is
// not reproducible across standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : eng_(seed) {}

    long long next(long long lo, long long hi) {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

inline std::vector<Int> int_sample_box(long long lo, long long hi) {
    std::vector<Int> out;
    for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

// Every element of Z[G] with coefficients in [lo, hi]; feasible only for
// tiny groups.
inline std::vector<LineGroupRing::Element> group_ring_coeff_box(const LineGroupRing& r,
                                                                long long lo, long long hi) {
    auto gs = r.group_elements();
    std::vector<LineGroupRing::Element> out{r.zero()};
    for (const auto& g : gs) {
        std::vector<LineGroupRing::Element> next;
        for (const auto& e : out)
            for (long long c = lo; c <= hi; ++c) {
                auto e2 = e;
                if (c != 0) e2[g] = Int(c);
                next.push_back(e2);
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Deterministic sample set with coefficients in [lo, hi]: the exhaustive box
// when it is small, otherwise a fixed head (0, 1, -1, the generator lines,
// 1 + g) plus seeded random elements.
inline std::vector<LineGroupRing::Element> group_ring_samples(const LineGroupRing& r,
                                                              std::uint64_t seed,
                                                              std::size_t count, long long lo,
                                                              long long hi) {
    double box_size = 1;
    for (unsigned i = 0; i < r.order(); ++i) box_size *= static_cast<double>(hi - lo + 1);
    if (box_size <= 32) return group_ring_coeff_box(r, lo, hi);

    std::set<LineGroupRing::Element> seen;
    seen.insert(r.zero());
    seen.insert(r.one());
    seen.insert(r.neg(r.one()));
    for (std::size_t i = 0; i < r.moduli().size(); ++i) {
        seen.insert(r.line(r.generator(i)));
        seen.insert(r.add(r.one(), r.line(r.generator(i))));
    }
    auto gs = r.group_elements();
    SampleRng rng(seed);
    while (seen.size() < count) {
        LineGroupRing::Element e;
        for (const auto& g : gs) {
            long long c = rng.next(lo, hi);
            if (c != 0) e[g] = Int(c);
        }
        seen.insert(e);
    }
    return {seen.begin(), seen.end()};
}

inline std::vector<std::string> default_ring_descriptors() {
    return {"binomial-int", "line-group-ring:Z/2", "line-group-ring:Z/2xZ/3"};
}

inline std::vector<std::string> default_module_descriptors() { return {"adams"}; }

namespace detail {

// Aggregates per-instance sub-checks into one family report; the witness of
// the first failing sub-check wins.
struct FamilyCheck {
    FailTracker tracker;

    void absorb(const VerificationReport& rep) {
        if (!rep.pass) tracker.fail("[" + rep.params + "] " + rep.witness);
    }

    void run(const std::function<VerificationReport()>& f) {
        try {
            absorb(f());
        } catch (const Error& e) {
            tracker.fail(e.what());
        }
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Universal polynomial suite.

inline std::vector<VerificationReport> suite_universal(UniversalContext& ctx) {
    const auto& opts = ctx.opts;
    std::vector<VerificationReport> out;

    // Route agreement: regenerate from scratch so that both generation routes
    // actually run, even when a warm cache backs the context.
    {
        detail::FamilyCheck fam;
        try {
            for (unsigned n = 1; n <= opts.newton_cap; ++n) newton_q(n);
        } catch (const Error& e) {
            fam.tracker.fail(e.what());
        }
        out.push_back(fam.tracker.report("q-routes", "n=1.." + std::to_string(opts.newton_cap)));
    }
    {
        detail::FamilyCheck fam;
        try {
            for (unsigned n = 1; n <= opts.product_cap; ++n) product_p(n, opts);
        } catch (const Error& e) {
            fam.tracker.fail(e.what());
        }
        out.push_back(fam.tracker.report("p-routes", "n=1.." + std::to_string(opts.product_cap)));
    }
    {
        detail::FamilyCheck fam;
        try {
            for (unsigned n = 1; n <= opts.composition_cap; ++n)
                for (unsigned m = 1; n * m <= opts.composition_cap; ++m) composition_p(n, m, opts);
        } catch (const Error& e) {
            fam.tracker.fail(e.what());
        }
        out.push_back(
            fam.tracker.report("pnm-routes", "nm<=" + std::to_string(opts.composition_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned k = 1; k <= opts.newton_cap; ++k)
            fam.run([&] { return check_newton_identity(k, ctx); });
        out.push_back(
            fam.tracker.report("newton-identity", "k=1.." + std::to_string(opts.newton_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned n = 1; n <= opts.product_cap; ++n)
            fam.run([&] { return check_linearity_lemma(n, ctx); });
        out.push_back(
            fam.tracker.report("linearity-lemma", "n=1.." + std::to_string(opts.product_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned n = 1; n <= opts.product_cap; ++n) {
            Int expected = (n == 1) ? 1 : 0;
            Int got = coefficient_sum(ctx.p(n));
            if (got != expected)
                fam.tracker.fail("n=" + std::to_string(n) + ", sum=" + got.str() + ", expected " +
                                 expected.str());
        }
        out.push_back(
            fam.tracker.report("coefficient-sum-p", "n=1.." + std::to_string(opts.product_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned n = 1; n <= opts.composition_cap; ++n)
            for (unsigned m = 1; n * m <= opts.composition_cap; ++m) {
                Int expected = (m % 2 == 1 || n == 1) ? 1 : 0;
                Int got = coefficient_sum(ctx.pnm(n, m));
                if (got != expected) {
                    fam.tracker.fail("n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                                     ", sum=" + got.str() + ", expected " + expected.str());
                }
            }
        out.push_back(fam.tracker.report("coefficient-sum-pnm",
                                         "nm<=" + std::to_string(opts.composition_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned n = 1; n <= opts.composition_cap; ++n)
            for (unsigned m = 1; n * m <= opts.composition_cap; ++m)
                fam.run([&] { return check_composition_linear(n, m, ctx); });
        out.push_back(fam.tracker.report("composition-linear",
                                         "nm<=" + std::to_string(opts.composition_cap)));
    }

    {
        detail::FamilyCheck fam;
        for (unsigned m = 1; m <= opts.composition_cap; ++m)
            if (!(ctx.pnm(1, m).body == Polynomial::variable({Alph::S, m})))
                fam.tracker.fail("m=" + std::to_string(m) +
                                 ", P_{1,m}=" + ctx.pnm(1, m).body.to_text());
        out.push_back(
            fam.tracker.report("p1m-identity", "m=1.." + std::to_string(opts.composition_cap)));
    }

    {
        // Weight invariants over everything the context now holds (including
        // cache-loaded bodies).
        detail::FamilyCheck fam;
        try {
            for (unsigned n = 1; n <= opts.newton_cap; ++n) validate_universal(ctx.q(n));
            for (unsigned n = 1; n <= opts.product_cap; ++n) validate_universal(ctx.p(n));
            for (unsigned n = 1; n <= opts.composition_cap; ++n)
                for (unsigned m = 1; n * m <= opts.composition_cap; ++m)
                    validate_universal(ctx.pnm(n, m));
        } catch (const Error& e) {
            fam.tracker.fail(e.what());
        }
        out.push_back(fam.tracker.report("isobaric-weight", "all"));
    }

    {
        // Specialization oracle: P_n evaluated at the elementary symmetric
        // polynomials reproduces the expanded t^n coefficient of h(t).
        detail::FamilyCheck fam;
        const unsigned top = std::min(3u, opts.product_cap);
        for (unsigned n = 1; n <= top; ++n) {
            detail::TruncSeries h(n);
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned j = 1; j <= n; ++j)
                    h.mul_binomial(Polynomial::term(
                        Monomial::variable({Alph::X, i}) * Monomial::variable({Alph::Y, j}), 1));
            std::map<VarId, Polynomial> back;
            for (unsigned k = 1; k <= n; ++k) {
                back.emplace(VarId{Alph::S, k}, elementary(static_cast<int>(k), alph_x(n)));
                back.emplace(VarId{Alph::T, k}, elementary(static_cast<int>(k), alph_y(n)));
            }
            if (!(ctx.p(n).body.substitute(back) == h.at(n)))
                fam.tracker.fail("n=" + std::to_string(n));
        }
        out.push_back(fam.tracker.report("specialization", "n=1.." + std::to_string(top)));
    }

    sort_reports(out);
    return out;
}

// ---------------------------------------------------------------------------
// Lambda ring suite over the instance roster.

namespace detail {

template <LambdaRing R>
std::vector<VerificationReport> lambda_suite_for(
    const R& r, UniversalContext& ctx, const std::vector<typename R::Element>& samples,
    unsigned max_n,
    const std::function<typename R::Element(unsigned, const typename R::Element&)>& oracle) {
    auto out = check_lambda_axioms(r, ctx, samples, max_n);
    auto adams_reports = check_adams_properties(r, ctx, samples, max_n, {2, 3, 5});
    out.insert(out.end(), adams_reports.begin(), adams_reports.end());
    out.push_back(check_adams_agreement(r, ctx, samples, max_n, oracle));
    return out;
}

inline std::vector<LineGroupRing::Element> roster_group_samples(const LineGroupRing& r,
                                                                std::uint64_t seed) {
    return group_ring_samples(r, seed, 24, -2, 2);
}

}  // namespace detail

inline std::vector<VerificationReport> suite_lambda(UniversalContext& ctx,
                                                    const RunConfig& cfg) {
    std::vector<std::string> rings =
        cfg.ring_filter.empty() ? default_ring_descriptors()
                                : std::vector<std::string>{cfg.ring_filter};
    std::vector<VerificationReport> out;
    for (const auto& descriptor : rings) {
        if (descriptor == "binomial-int") {
            BinomialInt z;
            auto samples = int_sample_box(-5, 5);
            auto reports = detail::lambda_suite_for<BinomialInt>(
                z, ctx, samples, 6, [](unsigned, const Int& x) { return x; });
            out.insert(out.end(), reports.begin(), reports.end());
        } else if (descriptor.rfind("line-group-ring:", 0) == 0) {
            LineGroupRing r = parse_line_group_ring(descriptor.substr(16));
            auto samples = detail::roster_group_samples(r, cfg.seed);
            auto oracle = [&r](unsigned n, const LineGroupRing::Element& x) {
                auto acc = r.zero();
                for (const auto& [g, c] : x)
                    acc = r.add(acc, scalar_mul(r, c, r.line(r.g_pow(g, n))));
                return acc;
            };
            auto reports = detail::lambda_suite_for<LineGroupRing>(r, ctx, samples, 6, oracle);
            out.insert(out.end(), reports.begin(), reports.end());
        } else {
            throw Error("unknown ring descriptor: " + descriptor);
        }
    }
    sort_reports(out);
    return out;
}

// ---------------------------------------------------------------------------
// Lambda module suite (the main-theorem instance checks).

namespace detail {

template <LambdaRing R>
std::vector<VerificationReport> module_suite_for(const R& ring,
                                                 const std::vector<typename R::Element>& ring_samples,
                                                 const std::vector<typename R::Element>& module_samples,
                                                 UniversalContext& ctx) {
    AdamsModule<R> m(ring);
    GradedRing<AdamsModule<R>> g(m);
    using GElem = typename GradedRing<AdamsModule<R>>::Element;

    // Graded sample set: the cross product of the two boxes.
    std::vector<GElem> graded_samples;
    for (const auto& a : ring_samples)
        for (const auto& x : module_samples) graded_samples.push_back(g.make(a, {x}));

    std::vector<VerificationReport> out = check_graded_lambda_ring(g, ctx, graded_samples, 6);
    out.push_back(check_semilinearity(g, ring_samples, module_samples, 6));
    out.push_back(check_composition_sign(g, module_samples, ctx.opts.composition_cap));
    out.push_back(check_graded_newton_consequence(g, module_samples, 6));

    auto extracted = extract_module(g);
    auto module_reports = check_lambda_module_axioms(extracted, ring_samples, module_samples, 6,
                                                     ctx.opts.composition_cap);
    out.insert(out.end(), module_reports.begin(), module_reports.end());

    // Roundtrip: the extracted operations coincide with the module they were
    // built from (here lambda_{M,n} = psi^n).
    {
        FailTracker t;
        for (const auto& x : module_samples) {
            for (unsigned n = 1; n <= 6 && t.pass; ++n) {
                auto got = extracted.lambda_module(n, x);
                auto expected = m.lambda_module(n, x);
                if (!m.eq(got, expected))
                    t.fail("x=" + m.to_string(x) + ", n=" + std::to_string(n) +
                           ", extracted=" + m.to_string(got) + ", psi=" + m.to_string(expected));
            }
            if (!t.pass) break;
        }
        out.push_back(t.report("extract-roundtrip",
                               "ring=" + ring.name() + ",module=adams,max_n=6"));
    }

    // Aggregate verdict for this instance pair.
    {
        FailTracker t;
        for (const auto& rep : out)
            if (!rep.pass) t.fail("first failing check: " + rep.check + " [" + rep.params + "]");
        out.push_back(t.report("theorem-1.2", "ring=" + ring.name() + ",module=adams"));
    }
    return out;
}

}  // namespace detail

inline std::vector<VerificationReport> suite_module(UniversalContext& ctx, const RunConfig& cfg) {
    std::vector<std::string> rings =
        cfg.ring_filter.empty() ? default_ring_descriptors()
                                : std::vector<std::string>{cfg.ring_filter};
    std::vector<std::string> modules =
        cfg.module_filter.empty() ? default_module_descriptors()
                                  : std::vector<std::string>{cfg.module_filter};
    for (const auto& mod : modules)
        if (mod != "adams") throw Error("unknown module descriptor: " + mod);

    std::vector<VerificationReport> out;
    for (const auto& descriptor : rings) {
        if (descriptor == "binomial-int") {
            BinomialInt z;
            auto box = int_sample_box(-5, 5);
            auto reports = detail::module_suite_for<BinomialInt>(z, box, box, ctx);
            out.insert(out.end(), reports.begin(), reports.end());
        } else if (descriptor.rfind("line-group-ring:", 0) == 0) {
            LineGroupRing r = parse_line_group_ring(descriptor.substr(16));
            // ring x module cross product of at least ~100 graded elements
            std::vector<LineGroupRing::Element> ring_samples, module_samples;
            if (r.order() <= 2) {
                ring_samples = group_ring_coeff_box(r, -2, 2);   // 25
                module_samples = group_ring_coeff_box(r, -1, 1);  // 9
            } else {
                ring_samples = group_ring_samples(r, cfg.seed, 12, -2, 2);
                module_samples = group_ring_samples(r, cfg.seed + 1, 9, -1, 1);
            }
            auto reports =
                detail::module_suite_for<LineGroupRing>(r, ring_samples, module_samples, ctx);
            out.insert(out.end(), reports.begin(), reports.end());
        } else {
            throw Error("unknown ring descriptor: " + descriptor);
        }
    }
    out.push_back(check_sign_identity(20));
    sort_reports(out);
    return out;
}

inline std::vector<VerificationReport> suite_all(UniversalContext& ctx, const RunConfig& cfg) {
    auto out = suite_universal(ctx);
    auto lam = suite_lambda(ctx, cfg);
    auto mod = suite_module(ctx, cfg);
    out.insert(out.end(), lam.begin(), lam.end());
    out.insert(out.end(), mod.begin(), mod.end());
    sort_reports(out);
    return out;
}

inline std::vector<VerificationReport> run_suite(const std::string& suite, UniversalContext& ctx,
                                                 const RunConfig& cfg) {
    if (suite == "universal") return suite_universal(ctx);
    if (suite == "lambda") return suite_lambda(ctx, cfg);
    if (suite == "module") return suite_module(ctx, cfg);
    if (suite == "all") return suite_all(ctx, cfg);
    throw Error("unknown suite: " + suite + " (expected universal|lambda|module|all)");
}

// ---------------------------------------------------------------------------
// Report rendering. Both forms are deterministic for a given configuration;
// the JSON form is byte-stable.

inline nlohmann::json report_document(const RunConfig& cfg, const std::string& suite,
                                      const std::vector<VerificationReport>& checks) {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["seed"] = cfg.seed;
    doc["caps"] = {{"newton", cfg.newton_cap},
                   {"product", cfg.product_cap},
                   {"composition", cfg.composition_cap}};
    doc["rings"] = cfg.ring_filter.empty() ? default_ring_descriptors()
                                           : std::vector<std::string>{cfg.ring_filter};
    doc["modules"] = cfg.module_filter.empty() ? default_module_descriptors()
                                               : std::vector<std::string>{cfg.module_filter};
    std::size_t failed = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rep : checks) {
        arr.push_back(rep.to_json());
        if (!rep.pass) ++failed;
    }
    doc["checks"] = arr;
    doc["passed"] = checks.size() - failed;
    doc["failed"] = failed;
    return doc;
}

inline std::string report_text(const RunConfig& cfg, const std::string& suite,
                               const std::vector<VerificationReport>& checks) {
    std::string out;
    std::size_t failed = 0;
    for (const auto& rep : checks) {
        out += rep.pass ? "PASS " : "FAIL ";
        out += rep.check + " [" + rep.params + "]\n";
        if (!rep.pass) {
            ++failed;
            out += "     witness: " + rep.witness + "\n";
        }
    }
    out += "suite=" + suite + " seed=" + std::to_string(cfg.seed) +
           " caps: newton=" + std::to_string(cfg.newton_cap) +
           " product=" + std::to_string(cfg.product_cap) +
           " composition=" + std::to_string(cfg.composition_cap) + "\n";
    out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
}

}  // namespace lring
