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

#include "pellq/pell.hpp"
#include "support.hpp"

using namespace pellq;
using pellq::testing::Rng;
using pellq::testing::uniform;

namespace {

QPoly one() { return QPoly::constant(Rational(1)); }

using testing::pell_defect;

}  // namespace

TEST_SUITE("pell") {

TEST_CASE("minimal unit solutions for the classical quadratics") {
    auto s1 = minimal_solution(parse_poly("x^2 + 1"), 10);
    REQUIRE(s1);
    CHECK(s1->f == parse_poly("2x^2 + 1"));
    CHECK(s1->g == parse_poly("2x"));
    CHECK(pell_defect(s1->f, s1->g, parse_poly("x^2 + 1")).is_zero());

    auto s2 = minimal_solution(parse_poly("x^2 - 1"), 10);
    REQUIRE(s2);
    CHECK(s2->f == parse_poly("x"));
    CHECK(s2->g == one());

    auto s3 = minimal_solution(parse_poly("x^2 + x"), 10);
    REQUIRE(s3);
    CHECK(s3->f == parse_poly("2x + 1"));
    CHECK(s3->g == QPoly::constant(Rational(2)));

    auto s4 = minimal_solution(parse_poly("x^2 + 2"), 10);
    REQUIRE(s4);
    CHECK(s4->f == parse_poly("x^2 + 1"));
    CHECK(s4->g == parse_poly("x"));
}

TEST_CASE("quasi-period of x^2 + 1 is at k = 0 with c = -1") {
    auto qp = first_quasi_period(parse_poly("x^2 + 1"), 10);
    REQUIRE(qp);
    CHECK(qp->k == 0);
    CHECK(qp->c == Rational(-1));
    CHECK(qp->p == parse_poly("x"));
}

TEST_CASE("minimality against the degree-one coefficient system") {
    Rng rng(41);
    int deg1 = 0, deg2 = 0;
    for (int i = 0; i < 200; ++i) {
        long b = uniform(rng, -9, 9), c = uniform(rng, -9, 9);
        if (b * b - 4 * c == 0) continue;
        QPoly d({Rational(c), Rational(b), Rational(1)});
        auto s = minimal_solution(d, 10);
        REQUIRE(s);
        CHECK(pell_defect(s->f, s->g, d).is_zero());
        if (testing::quadratic_degree_one_solution(Rational(b), Rational(c))) {
            CHECK(s->f.degree() == 1);
            ++deg1;
        } else {
            // No solution of degree 0 or 1 exists, so degree 2 is minimal.
            CHECK(s->f.degree() == 2);
            ++deg2;
        }
    }
    CHECK(deg1 > 10);
    CHECK(deg2 > 10);
}

TEST_CASE("the integral quartic") {
    const QPoly d = parse_poly("x^4 + 2x^3 - 7x^2 - 4x + 10");
    auto res = is_pellian_over_Z(d);
    CHECK(res.verdict == IntegralityVerdict::integral);
    CHECK(res.power == 1);
    CHECK(res.solution->f == parse_poly("x^4 + 6x^3 + 7x^2 - 12x - 19"));
    CHECK(res.solution->g == parse_poly("x^2 + 5x + 6"));
    auto sq = power_solution(*res.solution, 2);
    CHECK(sq.f == parse_poly("2x^8 + 24x^7 + 100x^6 + 120x^5 - 266x^4 - 792x^3 - 244x^2 + 912x + 721"));
    CHECK(sq.g == parse_poly("2x^6 + 22x^5 + 86x^4 + 118x^3 - 74x^2 - 334x - 228"));
    CHECK(pell_defect(sq.f, sq.g, d).is_zero());
}

TEST_CASE("integrality verdicts") {
    CHECK(is_pellian_over_Z(parse_poly("x^2 + 3")).verdict == IntegralityVerdict::absent_at_bound);
    CHECK(is_pellian_over_Z(parse_poly("x^4 + x + 1"), 6, 20).verdict == IntegralityVerdict::no_period);
    CHECK_THROWS_AS(is_pellian_over_Z(parse_poly("x^2 + 1/2")), DomainError);
    CHECK_THROWS_AS(is_pellian_over_Z(parse_poly("x^2 + 1"), 0), DomainError);
}

TEST_CASE("property: leading coefficients c_n = 2^(n-1) c_1^n and the g recurrence") {
    Rng rng(42);
    int cases = 0;
    while (cases < 100) {
        QPoly d = uniform(rng, 0, 1) == 0 ? testing::random_monic(rng, 2, 12) : testing::random_monic(rng, 4, 4);
        if (is_square(d)) continue;
        auto s1 = minimal_solution(d, 16);
        if (!s1) continue;
        ++cases;
        std::vector<PellSolution<Rational>> s{*s1};
        for (int n = 2; n <= 6; ++n) s.push_back(power_solution(*s1, n));
        const Rational c1 = s1->g.leading();
        for (int n = 1; n <= 6; ++n)
            CHECK(s[static_cast<std::size_t>(n - 1)].g.leading() == Rational(2).pow(n - 1) * c1.pow(n));
        // g_0 = 0, g_1, ..., with g_(n+2) = 2 f_1 g_(n+1) - g_n.
        CHECK(s[1].g == QPoly::constant(Rational(2)) * s1->f * s1->g);
        for (int n = 1; n + 2 <= 6; ++n)
            CHECK(s[static_cast<std::size_t>(n + 1)].g ==
                  QPoly::constant(Rational(2)) * s1->f * s[static_cast<std::size_t>(n)].g -
                      s[static_cast<std::size_t>(n - 1)].g);
        for (const auto& x : s) CHECK(pell_defect(x.f, x.g, d).is_zero());
    }
}

TEST_CASE("G_n(a) sequences") {
    auto g = g_sequence_at(parse_poly("x^2 - 2"), Rational(1), 4);
    CHECK(g[0].is_zero());
    CHECK(g[1] == Rational(1));
    CHECK(g[2].is_zero());
    auto h = g_sequence_at(parse_poly("x^2 - 1"), Rational(3), 3);
    CHECK(h == std::vector<Rational>{Rational(0), Rational(1), Rational(6), Rational(35)});
    CHECK_THROWS_AS(g_sequence_at(parse_poly("x^4 + 1"), Rational(1), 3), DomainError);
}

TEST_CASE("symbolic minimal solution over Q(a)") {
    const RatFun a = RatFun::variable();
    using P = Poly<RatFun>;
    P d = P::x() * P::x() + P::constant(a);
    auto s = minimal_solution(d, 10);
    REQUIRE(s);
    CHECK(s->f.degree() == 2);
    CHECK(pell_norm(s->f, s->g, d) == P::constant(RatFun(1)));
    for (long v : {1L, -2L, 5L}) {
        QPoly f = QPoly({s->f.coeff(0).at(Rational(v)), s->f.coeff(1).at(Rational(v)), s->f.coeff(2).at(Rational(v))});
        QPoly g = QPoly({s->g.coeff(0).at(Rational(v)), s->g.coeff(1).at(Rational(v))});
        CHECK(pell_defect(f, g, parse_poly("x^2") + QPoly::constant(Rational(v))).is_zero());
    }
}

}  // TEST_SUITE
