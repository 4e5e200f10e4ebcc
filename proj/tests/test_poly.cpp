// Copyright 2026 The pellquart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "pellq/laurent.hpp"
#include "pellq/ratfun.hpp"
#include "support.hpp"

using namespace pellq;
using pellq::testing::Rng;
using pellq::testing::uniform;

TEST_SUITE("poly") {

TEST_CASE("printing and parsing round trip") {
    QPoly p = parse_poly("2*x^8 - x^3 + 1/2*x - 7");
    CHECK(to_string(p) == "2*x^8 - x^3 + 1/2*x - 7");
    CHECK(parse_poly("x^4+2x^3-7x^2-4x+10") == parse_poly("x^4 + 2*x^3 - 7*x^2 - 4*x + 10"));
    CHECK(parse_poly("x - x") .is_zero());
    CHECK(to_string(QPoly()) == "0");
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("3y"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0x"), ParseError);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        QPoly q = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 7)), 30, 9);
        CHECK(parse_poly(to_string(q)) == q);
    }
}

TEST_CASE("ring laws against the schoolbook product") {
    Rng rng(12);
    for (int i = 0; i < 150; ++i) {
        QPoly a = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 20, 5);
        QPoly b = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 20, 5);
        QPoly c = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 20, 5);
        CHECK(a * b == testing::schoolbook_product(a, b));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        Rational t = testing::random_rational(rng, 20, 4);
        CHECK((a * b)(t) == a(t) * b(t));
    }
}

TEST_CASE("division with remainder") {
    Rng rng(13);
    for (int i = 0; i < 150; ++i) {
        QPoly a = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 8)), 20, 3);
        QPoly b = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 4)), 20, 3);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || r.degree() < b.degree()));
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(divmod(parse_poly("x"), QPoly()), DomainError);
}

TEST_CASE("gcd of products with a planted common factor") {
    Rng rng(14);
    for (int i = 0; i < 120; ++i) {
        QPoly g = testing::random_monic(rng, static_cast<int>(uniform(rng, 1, 3)), 9);
        QPoly u = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 4)), 9);
        QPoly v = testing::random_poly(rng, static_cast<int>(uniform(rng, 0, 4)), 9);
        QPoly h = gcd(g * u, g * v);
        CHECK(rem(g * u, h).is_zero());
        CHECK(rem(g * v, h).is_zero());
        CHECK(rem(h, g).is_zero());
        CHECK(h.leading() == Rational(1));
        // The cofactors are coprime, checked by the resultant.
        QPoly cu = exact_div(g * u, h), cv = exact_div(g * v, h);
        if (cu.degree() > 0 && cv.degree() > 0) CHECK_FALSE(testing::sylvester_resultant(cu, cv).is_zero());
    }
}

TEST_CASE("square-free test agrees with the discriminant resultant") {
    Rng rng(15);
    int repeated = 0;
    for (int i = 0; i < 200; ++i) {
        QPoly p = testing::random_monic(rng, 4, 3);
        if (i % 4 == 0) {
            QPoly l = testing::random_monic(rng, 1, 3);
            p = l * l * testing::random_monic(rng, 2, 3);
        }
        bool oracle = !testing::sylvester_resultant(p, derivative(p)).is_zero();
        CHECK(is_squarefree(p) == oracle);
        repeated += oracle ? 0 : 1;
    }
    CHECK(repeated >= 50);
}

TEST_CASE("square-free decomposition recombines") {
    QPoly p = parse_poly("x^2 + 1") * pow(parse_poly("x - 2"), 3) * pow(parse_poly("x + 1"), 2);
    auto parts = squarefree_decomposition(p);
    QPoly prod = QPoly::constant(Rational(1));
    for (auto& [f, m] : parts) {
        CHECK(is_squarefree(f));
        prod = prod * pow(f, static_cast<unsigned>(m));
    }
    CHECK(prod == p);
}

TEST_CASE("substitutions") {
    QPoly p = parse_poly("x^3 - 2x + 5");
    CHECK(shift(p, Rational(1)) == parse_poly("x^3 + 3x^2 + x + 4"));
    CHECK(scale_arg(p, Rational(2)) == parse_poly("8x^3 - 4x + 5"));
    CHECK(reflect(p) == parse_poly("-x^3 + 2x + 5"));
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
        QPoly q = testing::random_poly(rng, 4, 9, 3);
        Rational r = testing::random_rational(rng, 9, 4), t = testing::random_rational(rng, 9, 4);
        CHECK(shift(q, r)(t) == q(t + r));
        CHECK(scale_arg(q, r)(t) == q(t * r));
    }
}

TEST_CASE("rational roots and primitive parts") {
    auto roots = rational_roots(parse_poly("6x^3 - 7x^2 + 1"));  // (x - 1)(2x - 1)(3x + 1)
    CHECK(roots == std::vector<Rational>{Rational(-1, 3), Rational(1, 2), Rational(1)});
    CHECK(rational_roots(parse_poly("x^3 + x")) == std::vector<Rational>{Rational(0)});
    CHECK(primitive_part(parse_poly("1/2x^2 - 3/4")) == std::vector<Integer>{-3, 0, 2});
    CHECK(denominator_lcm(parse_poly("1/6x + 1/4")) == 12);
    CHECK(is_integral(parse_poly("x^2 - 3")));
    CHECK_FALSE(is_integral(parse_poly("x^2 - 1/3")));
}

TEST_CASE("polynomials over Q(a)") {
    const RatFun a = RatFun::variable();
    using P = Poly<RatFun>;
    P x = P::x();
    P f = x * x + P::constant(a) * x + P::constant(RatFun(1) / a);
    P g = x - P::constant(a);
    auto [q, r] = divmod(f * g + P::constant(a), g);
    CHECK(q == f);
    CHECK(r == P::constant(a));
    CHECK(to_string(f) == "x^2 + (a)*x + (1/a)");
}

TEST_CASE("Laurent series arithmetic") {
    using L = LaurentSeries<Rational>;
    L one_plus = L::from_poly(parse_poly("x + 1"), 10);
    L inv = one_plus.inverse();
    // 1/(x + 1) = x^-1 - x^-2 + x^-3 - ...
    for (int k = 1; k <= 8; ++k) CHECK(inv.coeff(-k) == Rational(k % 2 == 1 ? 1 : -1));
    L prod = one_plus * inv;
    CHECK(prod.coeff(0) == Rational(1));
    for (int k = 1; k <= 5; ++k) CHECK(prod.coeff(-k).is_zero());
    CHECK_THROWS_AS(prod.coeff(-60), PrecisionError);
    CHECK(principal_part(L::from_poly(parse_poly("x^2 + 3"), 4) / one_plus) == parse_poly("x - 1"));
}

TEST_CASE("sqrt series squares back to d") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        int deg = 2 * static_cast<int>(uniform(rng, 1, 3));
        QPoly d = testing::random_monic(rng, deg, 20);
        const int prec = 12;
        auto s = sqrt_series(d, prec);
        auto sq = s * s;
        for (int k = deg; k > deg - prec; --k) CHECK(sq.coeff(k) == d.coeff(k));
    }
    CHECK_THROWS_AS(sqrt_series(parse_poly("x^3 + 1"), 5), DomainError);
    CHECK_THROWS_AS(sqrt_series(parse_poly("2x^2 + 1"), 5), DomainError);
}

// sqrt(x^2 + u x^0) = x sqrt(1 + u x^-2) = sum C(1/2, k) u^k x^(1 - 2k).
TEST_CASE("sqrt series against the binomial series") {
    for (long u : {1L, -1L, 2L, 3L, -5L}) {
        auto s = sqrt_series(parse_poly("x^2") + QPoly::constant(Rational(u)), 16);
        for (int k = 0; k < 8; ++k) {
            CHECK(s.coeff(1 - 2 * k) == testing::half_binomial(k) * Rational(u).pow(k));
            CHECK(s.coeff(-2 * k).is_zero());
        }
    }
}

}  // TEST_SUITE
