#include <catch2/catch_amalgamated.hpp>

#include "lring/lambda_module.hpp"
#include "test_util.hpp"

using namespace lring;
using namespace testutil;

namespace {

using ZRing = BinomialInt;
using ZModule = AdamsModule<ZRing>;
using ZGraded = GradedRing<ZModule>;

static_assert(LambdaRing<ZGraded>, "graded square-zero ring must model a lambda ring");
static_assert(LambdaModule<ExtractedModule<ZModule>>);

std::vector<Int> int_range(long long lo, long long hi) {
    std::vector<Int> out;
    for (long long v = lo; v <= hi; ++v) out.emplace_back(v);
    return out;
}

std::vector<ZGraded::Element> int_graded_box(const ZGraded& g, long long lo, long long hi) {
    std::vector<ZGraded::Element> out;
    for (long long a = lo; a <= hi; ++a)
        for (long long x = lo; x <= hi; ++x) out.push_back(g.make(Int(a), {Int(x)}));
    return out;
}

// Direct transcription of the display formula for lambda^2 on (a0, a1):
// (lambda^2(a0), lambda^0(a0) lambda^2|_M(a1) + lambda^1(a0) lambda^1|_M(a1))
// with lambda^j|_M = (-1)^{j-1} psi^j. Written against the formula, not the
// GradedRing implementation.
ZGraded::Element lambda2_oracle(const ZGraded& g, const Int& a0, const Int& a1) {
    BinomialInt z;
    Int head = z.lambda(2, a0);
    // psi on the integers is the identity
    Int part = Int(1) * (-a1) + a0 * a1;
    return g.make(head, {part});
}

}  // namespace

TEST_CASE("graded multiplication is square-zero") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);

    auto e1 = g.make(2, {3});
    auto e2 = g.make(5, {7});
    // (a, x)(b, y) = (ab, ay + bx)
    CHECK(g.eq(g.mul(e1, e2), g.make(10, {2 * 7 + 5 * 3})));

    // positive parts multiply to zero
    CHECK(g.eq(g.mul(g.embed_module(3), g.embed_module(7)), g.zero()));

    // unit
    CHECK(g.eq(g.mul(g.one(), e2), e2));
    CHECK(g.eq(g.mul(e2, g.one()), e2));

    // commutative and associative on a sample box
    auto box = int_graded_box(g, -2, 2);
    for (std::size_t i = 0; i < box.size(); i += 3)
        for (std::size_t j = 0; j < box.size(); j += 5) {
            REQUIRE(g.eq(g.mul(box[i], box[j]), g.mul(box[j], box[i])));
            REQUIRE(g.eq(g.mul(g.mul(box[i], box[j]), box[i]),
                         g.mul(box[i], g.mul(box[j], box[i]))));
        }

    // mismatched shapes are rejected
    ZGraded g2(m, 2);
    CHECK_THROWS_AS(g.mul(e1, g2.make(1, {0, 0})), Error);
}

TEST_CASE("graded lambda: identity, ring embedding, hand value") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);

    // lambda^1 is the identity on all parts
    for (const auto& e : int_graded_box(g, -3, 3)) REQUIRE(g.eq(g.lambda(1, e), e));

    // lambda^0 is the multiplicative unit
    CHECK(g.eq(g.lambda(0, g.make(4, {9})), g.one()));

    // zero module part: lambda^r((a, 0)) = (lambda^r(a), 0)
    for (unsigned r = 1; r <= 5; ++r)
        CHECK(g.eq(g.lambda(r, g.embed_ring(7)), g.embed_ring(z.lambda(r, 7))));

    // the display formula at r = 2, against the independent transcription
    for (long long a = -4; a <= 4; ++a)
        for (long long x = -4; x <= 4; ++x)
            REQUIRE(g.eq(g.lambda(2, g.make(Int(a), {Int(x)})), lambda2_oracle(g, a, x)));

    // recomputed value for the worked example: lambda^2((2,1)) = (1, 1)
    CHECK(g.eq(g.lambda(2, g.make(2, {1})), g.make(1, {1})));
}

TEST_CASE("bulk lambda table agrees with single-shot lambda") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);
    for (const auto& e : int_graded_box(g, -2, 2)) {
        auto tab = lambda_table(g, e, 6);
        for (unsigned r = 0; r <= 6; ++r) REQUIRE(g.eq(tab[r], g.lambda(r, e)));
    }

    LineGroupRing r2({2});
    AdamsModule<LineGroupRing> m2(r2);
    GradedRing<AdamsModule<LineGroupRing>> g2(m2);
    auto ggen = r2.line(r2.generator(0));
    auto e = g2.make(r2.add(r2.one(), ggen), {r_sub(r2, ggen, r2.one())});
    auto tab = lambda_table(g2, e, 8);
    for (unsigned r = 0; r <= 8; ++r) REQUIRE(g2.eq(tab[r], g2.lambda(r, e)));
}

TEST_CASE("graded square-zero ring passes the lambda-ring axioms") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);
    UniversalContext ctx;
    auto samples = int_graded_box(g, -2, 2);  // 25 graded elements
    auto reports = check_graded_lambda_ring(g, ctx, samples, 4);
    for (const auto& rep : reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }
}

TEST_CASE("corrupted module fails axiom 6 with a witness") {
    ZRing z;
    ZModule m(z);
    CorruptModule<ZModule> broken(m, 2);
    GradedRing<CorruptModule<ZModule>> g(broken);
    UniversalContext ctx;

    std::vector<GradedRing<CorruptModule<ZModule>>::Element> samples;
    for (long long a = -1; a <= 1; ++a)
        for (long long x = -1; x <= 1; ++x) samples.push_back(g.make(Int(a), {Int(x)}));

    auto reports = check_graded_lambda_ring(g, ctx, samples, 4);
    bool axiom6_failed = false;
    for (const auto& rep : reports)
        if (rep.check == "lambda-axiom-6") {
            CHECK_FALSE(rep.pass);
            CHECK_FALSE(rep.witness.empty());
            axiom6_failed = true;
        }
    CHECK(axiom6_failed);
}

TEST_CASE("semilinearity of the graded lambda operations") {
    UniversalContext ctx;

    SECTION("binomial base: both sides reduce to (-1)^{r-1} a x") {
        ZRing z;
        ZModule m(z);
        ZGraded g(m);
        auto rep = check_semilinearity(g, int_range(-3, 3), int_range(-3, 3), 6);
        INFO(rep.witness);
        CHECK(rep.pass);

        // spot check r = 1 triviality and the sign for r = 2
        auto e = g.embed_module(5);
        CHECK(g.eq(g.lambda(1, e), e));
        CHECK(g.eq(g.lambda(2, e), g.embed_module(-5)));
    }

    SECTION("group-ring base with a line scalar: psi^r(g) = g^r") {
        LineGroupRing r({2, 3});
        AdamsModule<LineGroupRing> m(r);
        GradedRing<AdamsModule<LineGroupRing>> g(m);
        std::vector<LineGroupRing::Element> ring_samples, module_samples;
        for (const auto& ge : r.group_elements()) ring_samples.push_back(r.line(ge));
        module_samples.push_back(r.one());
        module_samples.push_back(r.line(r.generator(0)));
        module_samples.push_back(r.add(r.one(), r.neg(r.line(r.generator(1)))));
        auto rep = check_semilinearity(g, ring_samples, module_samples, 6);
        INFO(rep.witness);
        CHECK(rep.pass);
    }
}

TEST_CASE("composition sign table") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);

    auto rep = check_composition_sign(g, int_range(-4, 4), 8);
    INFO(rep.witness);
    CHECK(rep.pass);

    // (2,2): lambda^2 lambda^2 = -lambda^4 on module embeddings
    auto e = g.embed_module(3);
    CHECK(g.eq(g.lambda(2, g.lambda(2, e)), g.neg(g.lambda(4, e))));
    // (2,3): plus sign
    CHECK(g.eq(g.lambda(2, g.lambda(3, e)), g.lambda(6, e)));
}

TEST_CASE("sign identity, exhaustively to 20") {
    auto rep = check_sign_identity(20);
    INFO(rep.witness);
    CHECK(rep.pass);
}

TEST_CASE("newton consequence on module embeddings") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);
    auto rep = check_graded_newton_consequence(g, int_range(-3, 3), 6);
    INFO(rep.witness);
    CHECK(rep.pass);
}

TEST_CASE("adams module satisfies the module axioms directly") {
    ZRing z;
    ZModule m(z);
    auto reports = check_lambda_module_axioms(m, int_range(-3, 3), int_range(-3, 3), 6, 8);
    for (const auto& rep : reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }
}

TEST_CASE("extraction recovers the module structure") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);
    auto extracted = extract_module(g);

    // roundtrip: module -> graded ring -> module is the identity on samples
    for (const auto& x : int_range(-5, 5))
        for (unsigned n = 1; n <= 6; ++n)
            REQUIRE(extracted.lambda_module(n, x) == m.lambda_module(n, x));

    // extracted operations equal psi^n = id on the integers
    for (const auto& x : int_range(-5, 5))
        for (unsigned n = 1; n <= 6; ++n) REQUIRE(extracted.lambda_module(n, x) == x);

    // and they satisfy the definition axioms
    auto reports = check_lambda_module_axioms(extracted, int_range(-3, 3), int_range(-3, 3), 6, 8);
    for (const auto& rep : reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }
}

TEST_CASE("extraction without the sign is a working negative control") {
    ZRing z;
    ZModule m(z);
    ZGraded g(m);
    ExtractedModule<ZModule> broken(g, /*with_sign=*/false);

    auto reports = check_lambda_module_axioms(broken, int_range(-2, 2), int_range(-2, 2), 4, 8);
    bool ax2_failed = false;
    for (const auto& rep : reports)
        if (rep.check == "module-axiom-2") {
            CHECK_FALSE(rep.pass);
            CHECK_FALSE(rep.witness.empty());
            ax2_failed = true;
        }
    CHECK(ax2_failed);
}

TEST_CASE("width independence: each degree behaves like the width-1 model") {
    ZRing z;
    ZModule m(z);
    ZGraded g1(m, 1);
    ZGraded g2(m, 2);

    // lambda acts componentwise on the positive degrees
    for (long long a = -2; a <= 2; ++a)
        for (long long x = -2; x <= 2; ++x)
            for (long long y = -2; y <= 2; ++y)
                for (unsigned r = 1; r <= 5; ++r) {
                    auto wide = g2.lambda(r, g2.make(Int(a), {Int(x), Int(y)}));
                    auto narrow_x = g1.lambda(r, g1.make(Int(a), {Int(x)}));
                    auto narrow_y = g1.lambda(r, g1.make(Int(a), {Int(y)}));
                    REQUIRE(wide.a0 == narrow_x.a0);
                    REQUIRE(wide.parts[0] == narrow_x.parts[0]);
                    REQUIRE(wide.parts[1] == narrow_y.parts[0]);
                }

    // the check suite gives the same verdicts at width 2
    UniversalContext ctx;
    std::vector<ZGraded::Element> wide_samples;
    for (long long a = -1; a <= 1; ++a)
        for (long long x = -1; x <= 1; ++x)
            for (long long y = -1; y <= 1; ++y) wide_samples.push_back(g2.make(Int(a), {Int(x), Int(y)}));
    auto wide_reports = check_graded_lambda_ring(g2, ctx, wide_samples, 4);
    for (const auto& rep : wide_reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }
    CHECK(check_semilinearity(g2, int_range(-2, 2), int_range(-2, 2), 6).pass);
    CHECK(check_composition_sign(g2, int_range(-2, 2), 8).pass);
}

TEST_CASE("graded ring over a group-ring module passes the axioms") {
    LineGroupRing r({2});
    AdamsModule<LineGroupRing> m(r);
    GradedRing<AdamsModule<LineGroupRing>> g(m);
    UniversalContext ctx;

    auto gline = r.line(r.generator(0));
    std::vector<LineGroupRing::Element> ring_box;
    for (long long c0 = -1; c0 <= 1; ++c0)
        for (long long c1 = -1; c1 <= 1; ++c1) {
            LineGroupRing::Element e;
            if (c0 != 0) e[r.identity()] = Int(c0);
            if (c1 != 0) e[r.generator(0)] = Int(c1);
            ring_box.push_back(e);
        }

    std::vector<GradedRing<AdamsModule<LineGroupRing>>::Element> samples;
    for (const auto& a : ring_box)
        for (const auto& x : ring_box) samples.push_back(g.make(a, {x}));

    auto reports = check_graded_lambda_ring(g, ctx, samples, 4);
    for (const auto& rep : reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }

    auto extracted = extract_module(g);
    auto mod_reports = check_lambda_module_axioms(extracted, ring_box, ring_box, 4, 8);
    for (const auto& rep : mod_reports) {
        INFO(rep.check << " " << rep.witness);
        REQUIRE(rep.pass);
    }
}
