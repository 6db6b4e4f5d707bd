#include <catch2/catch_amalgamated.hpp>

#include "lring/intpoly.hpp"
#include "test_util.hpp"

using namespace lring;
using namespace testutil;

TEST_CASE("variable order is alphabet-major, index ascending") {
    CHECK(vx(1) < vx(2));
    CHECK(vx(9) < vy(1));
    CHECK(vy(3) < vs(1));
    CHECK(vs(5) < vt(1));
    CHECK(vt(2) < vu(1));
}

TEST_CASE("addition: cancellation, identity, coefficient merge") {
    CHECK((X(1) + X(2)) + (-X(1)) == X(2));

    Polynomial p = X(1) * X(2) - 3 * X(3);
    CHECK(p + Polynomial() == p);

    CHECK(Polynomial::term(Monomial::variable(vx(1), 2), 2) +
              Polynomial::term(Monomial::variable(vx(1), 2), 3) ==
          Polynomial::term(Monomial::variable(vx(1), 2), 5));
}

TEST_CASE("multiplication: difference of squares, identity") {
    Polynomial lhs = (X(1) + X(2)) * (X(1) - X(2));
    Polynomial rhs = Polynomial::term(Monomial::variable(vx(1), 2), 1) -
                     Polynomial::term(Monomial::variable(vx(2), 2), 1);
    CHECK(lhs == rhs);

    Polynomial p = 5 * X(1) * Y(2) - 7;
    CHECK(p * Polynomial(1) == p);
}

TEST_CASE("multiplication against the dense-expansion oracle") {
    Polynomial a = Polynomial(1) + X(1) * Y(1);
    Polynomial b = Polynomial(1) + X(1) * Y(2);
    Polynomial prod = a * b;

    // 1 + x1 y1 + x1 y2 + x1^2 y1 y2, expanded by hand
    Polynomial expected = Polynomial(1) + X(1) * Y(1) + X(1) * Y(2) +
                          Polynomial::term(Monomial::variable(vx(1), 2) *
                                               Monomial::variable(vy(1)) *
                                               Monomial::variable(vy(2)),
                                           1);
    CHECK(prod == expected);
    CHECK(dense_equal(prod, dense_mul(to_dense(a), to_dense(b))));

    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        CHECK(dense_equal(p * q, dense_mul(to_dense(p), to_dense(q))));
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        Polynomial r = random_poly(rng);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p * q == q * p);
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE((p * q) * r == p * (q * r));
    }
}

TEST_CASE("evaluation commutes with ring operations") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        auto pt = random_point(rng, p, q);
        REQUIRE(eval_at(p + q, pt) == eval_at(p, pt) + eval_at(q, pt));
        REQUIRE(eval_at(p * q, pt) == eval_at(p, pt) * eval_at(q, pt));
    }
}

TEST_CASE("substitution: examples") {
    // substitute(s1*t1, {s1 -> 3, t1 -> x1}) = 3*x1
    Polynomial p = S(1) * T(1);
    std::map<VarId, Polynomial> sigma{{vs(1), Polynomial(3)}, {vt(1), X(1)}};
    CHECK(p.substitute(sigma) == 3 * X(1));

    // identity assignment
    Polynomial q = 2 * S(1) * S(1) - T(2) + 5;
    CHECK(q.substitute({}) == q);

    // s1^2 - 2 s2 at s1 -> x1+x2, s2 -> x1 x2 gives x1^2 + x2^2
    Polynomial expr = S(1) * S(1) - 2 * S(2);
    std::map<VarId, Polynomial> sigma2{{vs(1), X(1) + X(2)}, {vs(2), X(1) * X(2)}};
    Polynomial expected = Polynomial::term(Monomial::variable(vx(1), 2), 1) +
                          Polynomial::term(Monomial::variable(vx(2), 2), 1);
    CHECK(expr.substitute(sigma2) == expected);
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        std::map<VarId, Polynomial> sigma;
        sigma[vx(1)] = random_poly(rng, 3, 2, 2, 5);
        sigma[vx(2)] = random_poly(rng, 3, 2, 2, 5);
        REQUIRE((p + q).substitute(sigma) == p.substitute(sigma) + q.substitute(sigma));
        REQUIRE((p * q).substitute(sigma) == p.substitute(sigma) * q.substitute(sigma));
    }
}

TEST_CASE("truncate_min_degree: examples") {
    // t1^2 + t2 + s1 t1 t2, truncated in T at 2, leaves t2
    Polynomial p = Polynomial::term(Monomial::variable(vt(1), 2), 1) + T(2) +
                   S(1) * T(1) * T(2);
    CHECK(p.truncate_min_degree(Alph::T, 2) == T(2));

    Polynomial s1sq = Polynomial::term(Monomial::variable(vs(1), 2), 1);
    CHECK(s1sq.truncate_min_degree(Alph::T, 2) == s1sq);

    Polynomial u = U(1) * U(2) + U(3);
    CHECK(u.truncate_min_degree(Alph::U, 2) == U(3));
}

TEST_CASE("truncate_min_degree splits the polynomial") {
    Rng rng(19);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng);
        unsigned k = static_cast<unsigned>(rng.next(1, 4));
        Polynomial low = p.truncate_min_degree(Alph::X, k);
        Polynomial high = p - low;
        REQUIRE(low + high == p);
        for (const auto& [m, c] : high.terms()) REQUIRE(m.degree_in(Alph::X) >= k);
        for (const auto& [m, c] : low.terms()) REQUIRE(m.degree_in(Alph::X) < k);
    }
}

TEST_CASE("coefficient_of") {
    Polynomial p = 3 * S(2) * Polynomial::term(Monomial::variable(vt(1), 2), 1);
    Monomial m = Monomial::variable(vs(2)) * Monomial::variable(vt(1), 2);
    CHECK(p.coefficient_of(m) == 3);
    CHECK(S(1).coefficient_of(Monomial::variable(vs(2))) == 0);
}

TEST_CASE("leading monomial, lex within an alphabet") {
    // x1 x2 + x1^2: leading is x1^2 since (2,0) > (1,1)
    Polynomial p = X(1) * X(2) + Polynomial::term(Monomial::variable(vx(1), 2), 1);
    CHECK(p.leading_monomial_lex(Alph::X) == Monomial::variable(vx(1), 2));

    Polynomial q = Polynomial::term(Monomial::variable(vx(2), 3), 1);
    CHECK(q.leading_monomial_lex(Alph::X) == Monomial::variable(vx(2), 3));

    // x1^2 x2 + x1 x2^2: (2,1) > (1,2)
    Polynomial r = Polynomial::term(Monomial::variable(vx(1), 2) * Monomial::variable(vx(2)), 1) +
                   Polynomial::term(Monomial::variable(vx(1)) * Monomial::variable(vx(2), 2), 1);
    CHECK(r.leading_monomial_lex(Alph::X) ==
          Monomial::variable(vx(1), 2) * Monomial::variable(vx(2)));

    CHECK_THROWS_AS(Polynomial().leading_monomial_lex(Alph::X), Error);
}

TEST_CASE("degree of zero polynomial is rejected") {
    CHECK_THROWS_AS(Polynomial().total_degree(), Error);
    CHECK_THROWS_AS(Polynomial().degree_in(Alph::X), Error);
}

TEST_CASE("canonical form: no zero coefficients or exponents stored") {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng);
        Polynomial q = random_poly(rng);
        for (const Polynomial& r : {p + q, p - q, p * q}) {
            for (const auto& [m, c] : r.terms()) {
                REQUIRE(c != 0);
                for (const auto& [v, e] : m.entries()) REQUIRE(e > 0);
            }
            // Rebuilding term by term is a no-op (idempotent canonical form).
            Polynomial rebuilt;
            for (const auto& [m, c] : r.terms()) rebuilt += Polynomial::term(m, c);
            REQUIRE(rebuilt == r);
        }
    }
}

TEST_CASE("canonical text form") {
    Polynomial p = 3 * Polynomial::term(Monomial::variable(vs(1), 2) * Monomial::variable(vt(2)), 1) -
                   2 * S(2) * T(2) +
                   Polynomial::term(Monomial::variable(vs(2)) * Monomial::variable(vt(1), 2), 1);
    CHECK(p.to_text() == "+3*s1^2*t2 +1*s2*t1^2 -2*s2*t2");
    CHECK(Polynomial().to_text() == "0");
    CHECK(Polynomial(-7).to_text() == "-7");
    CHECK(Polynomial::parse_text(p.to_text()) == p);
    CHECK(Polynomial::parse_text("0") == Polynomial());
}

TEST_CASE("text and json round-trips") {
    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = random_poly(rng);
        REQUIRE(Polynomial::parse_text(p.to_text()) == p);
        REQUIRE(Polynomial::from_json(p.to_json()) == p);
    }
    // big coefficients survive
    Polynomial big = Polynomial::term(Monomial::variable(vx(1)), Int("123456789012345678901234567890"));
    CHECK(Polynomial::parse_text(big.to_text()) == big);
    CHECK(Polynomial::from_json(big.to_json()) == big);
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(Polynomial::from_json(nlohmann::json{{"not", "an array"}}), Error);
    auto bad = nlohmann::json::array();
    bad.push_back({{"coeff", "zz"}, {"mono", nlohmann::json::array()}});
    CHECK_THROWS_AS(Polynomial::from_json(bad), Error);
    auto bad2 = nlohmann::json::array();
    bad2.push_back({{"coeff", "1"}, {"mono", {{"q", 1, 1}}}});
    CHECK_THROWS_AS(Polynomial::from_json(bad2), Error);
}
