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


// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pellq/classify.hpp"
#include "pellq/laurent.hpp"
#include "pellq/report.hpp"
#include "support.hpp"

using namespace pellq;
using pellq::testing::Rng;
using pellq::testing::uniform;

namespace {

// Collects the first failure message of a criterion.
struct Check {
    std::string failure;
    void operator()(bool ok, const std::string& what) {
        if (!ok && failure.empty()) failure = what;
    }
};

QPoly x2_plus(long s) { return parse_poly("x^2") + QPoly::constant(Rational(s)); }

void cf_goldens(Check& check) {
    auto cf = cf_expand(parse_poly("x^2 + 1"), 10);
    check(cf.a0 == parse_poly("x") && cf.period && cf.period->length == 1 && cf.quotient(1) == parse_poly("2x"),
          "sqrt(x^2 + 1) != [x; (2x)]");
    for (long s : {1L, -1L, 2L, -2L, 3L, 5L}) {
        auto e = cf_expand(x2_plus(s), 10);
        const int want = s == 1 ? 1 : 2;
        check(e.period.has_value() && e.period->length == want, "period of x^2 + " + std::to_string(s));
        check(e.quotient(1) == parse_poly("2x") * QPoly::constant(Rational(1, s)), "a_1 of x^2 + " + std::to_string(s));
        if (want == 2) check(e.quotient(2) == parse_poly("2x"), "a_2 of x^2 + " + std::to_string(s));
    }
}

void pell_goldens(Check& check) {
    struct Golden {
        const char *d, *f, *g;
    };
    for (const auto& [d, f, g] : {Golden{"x^2 + 1", "2x^2 + 1", "2x"}, Golden{"x^2 - 1", "x", "1"},
                                  Golden{"x^2 + x", "2x + 1", "2"}}) {
        auto s = minimal_solution(parse_poly(d));
        check(s.has_value() && s->f == parse_poly(f) && s->g == parse_poly(g), std::string("minimal solution of ") + d);
        check(testing::pell_defect(parse_poly(f), parse_poly(g), parse_poly(d)).is_zero(),
              std::string("f^2 - d g^2 - 1 != 0 for ") + d);
    }
}

void squarefree_classification(Check& check) {
    for (int m : supported_orders()) {
        SearchOptions opts;
        opts.workers = 1;
        auto rep = search_torsion(m, opts);
        if (m != 4) {
            check(rep.survivors.empty(), "m = " + std::to_string(m) + " has survivors");
            continue;
        }
        check(rep.candidate_count() <= 84, "m = 4 candidate count exceeds 84");
        auto status = [&](const Rational& a, const Rational& b) {
            for (const auto& c : rep.candidates)
                if (c.a == a && c.b == b) return std::optional<CandidateStatus>(c.status);
            return std::optional<CandidateStatus>();
        };
        check(status(Rational(2), Rational(4)) == CandidateStatus::no_integral_shift, "(2, 4) not cut by shift_filter");
        for (long sb : {1L, -1L}) {
            check(status(Rational(-1, 16), Rational(sb)) == CandidateStatus::non_squarefree,
                  "(-1/16, +-1) not non-square-free");
            check(status(Rational(-1, 64), Rational(sb, 2)) == CandidateStatus::survivor, "(-1/64, +-1/2) not surviving");
        }
        if (rep.survivors.size() != 1) {
            check(false, "m = 4 survivor count " + std::to_string(rep.survivors.size()));
            continue;
        }
        const Witness& w = *rep.survivors[0].witness;
        check(to_string(w.canonical.poly) == "x^4 + 2*x^3 - 7*x^2 - 4*x + 10", "canonical form");
        check(to_string(w.family_solution.f) ==
                  "2*x^8 + 24*x^7 + 100*x^6 + 120*x^5 - 266*x^4 - 792*x^3 - 244*x^2 + 912*x + 721",
              "witness f");
        check(to_string(w.family_solution.g) == "2*x^6 + 22*x^5 + 86*x^4 + 118*x^3 - 74*x^2 - 334*x - 228",
              "witness g");
    }
}

void nonsquarefree_classification(Check& check) {
    auto rep = classify_nonsquarefree();
    std::set<std::string> got, want;
    for (const auto& q : rep.quartics) got.insert(to_string(q));
    for (const char* t : {"x^4 + x^2", "x^4 - x^2", "x^4 + 2x^2", "x^4 - 2x^2", "x^4 - 2x^3 - x^2"})
        want.insert(to_string(canonicalize(parse_poly(t)).poly));
    check(got == want && got.size() == rep.quartics.size(), "nonsquare-free list differs");
}

void torsion_period(Check& check) {
    Rng rng(1005);
    std::set<std::pair<int, int>> seen;
    for (int m : supported_orders()) {
        int done = 0;
        while (done < 10) {
            Rational a = testing::random_nonzero_rational(rng, 40, 9), b = testing::random_nonzero_rational(rng, 9, 9);
            QPoly q;
            try {
                q = family_quartic(family(m), a, b);
            } catch (const DomainError&) {
                continue;
            }
            if (!is_squarefree(q)) continue;
            auto pt = check_period_torsion(q);
            check(pt.m == m, "torsion order at m = " + std::to_string(m));
            check(pt.n == m - 1 || pt.n == 2 * (m - 1), "period at m = " + std::to_string(m));
            seen.insert({pt.n, pt.m});
            ++done;
        }
    }
    check(seen.count({6, 4}) == 1, "(6, 4) not observed");
    check(seen.count({4, 5}) == 1, "(4, 5) not observed");
}

void property_suites(Check& check) {
    Rng rng(1006);
    auto radicand = [&]() {
        for (;;) {
            QPoly d = testing::random_monic(rng, uniform(rng, 0, 1) == 0 ? 2 : 4, 6);
            if (!is_square(d)) return d;
        }
    };
    for (int i = 0; i < 100; ++i) {
        QPoly d = radicand();
        auto cf = cf_expand(d, 8);
        QPoly pp = QPoly::constant(Rational(1)), qp;
        for (int k = 0; k < cf.quotient_count(); ++k) {
            auto [p, q] = convergents(cf, k);
            check(p * qp - pp * q == QPoly::constant(Rational(k % 2 == 0 ? -1 : 1)), "determinant identity");
            pp = p;
            qp = q;
        }
        for (const auto& s : cf.states) check(rem(d - s.P * s.P, s.Q).is_zero(), "surd divisibility");
    }
    for (int i = 0; i < 100;) {
        QPoly d = radicand();
        auto s1 = minimal_solution(d, 16);
        if (!s1) continue;
        ++i;
        std::vector<QPoly> g{QPoly(), s1->g};
        for (int n = 2; n <= 6; ++n) g.push_back(power_solution(*s1, n).g);
        for (int n = 1; n <= 6; ++n)
            check(g[static_cast<std::size_t>(n)].leading() == Rational(2).pow(n - 1) * s1->g.leading().pow(n),
                  "leading-coefficient law");
        for (std::size_t n = 0; n + 2 < g.size(); ++n)
            check(g[n + 2] == QPoly::constant(Rational(2)) * s1->f * g[n + 1] - g[n], "Pell recurrence");
    }
    for (int i = 0; i < 100;) {
        Rational x1 = testing::random_rational(rng, 20, 5), y1 = testing::random_rational(rng, 20, 5);
        Rational x2 = testing::random_rational(rng, 20, 5), y2 = testing::random_rational(rng, 20, 5);
        if (x1 == x2) continue;
        Rational A = (y1 * y1 - y2 * y2 - (x1 * x1 * x1 - x2 * x2 * x2)) / (x1 - x2);
        ShortWeierstrass<Rational> E{A, y1 * y1 - x1 * x1 * x1 - A * x1};
        if (E.is_singular()) continue;
        ++i;
        auto P = ECPoint<Rational>::affine(E, x1, y1), Q = ECPoint<Rational>::affine(E, x2, y2);
        auto R = ec_add(Q, ec_add(P, P));
        check(ec_add(ec_add(P, Q), R) == ec_add(P, ec_add(Q, R)), "associativity");
    }
    for (int i = 0; i < 100;) {
        QPoly q({testing::random_rational(rng, 30, 4), testing::random_rational(rng, 30, 4),
                 testing::random_rational(rng, 30, 4), Rational(0), Rational(1)});
        if (!is_squarefree(q)) continue;
        ++i;
        auto [E, P] = adams_razar_curve(q);
        check(E.contains(P.x, P.y), "point on curve");
    }
    for (int i = 0; i < 100;) {
        int m = supported_orders()[static_cast<std::size_t>(uniform(rng, 0, 7))];
        Rational a = testing::random_nonzero_rational(rng, 40, 9), b = testing::random_nonzero_rational(rng, 9, 9);
        try {
            QPoly q1 = family_quartic(family(m), a, Rational(1)), qb = family_quartic(family(m), a, b);
            check(qb == scale_arg(q1, b) * QPoly::constant(b.pow(-4)), "scaling covariance");
            ++i;
        } catch (const DomainError&) {
        }
    }
    for (int i = 0; i < 100; ++i) {
        QPoly d = testing::random_monic(rng, 4, 9);
        QPoly c = canonicalize(d).poly;
        check(canonicalize(c).poly == c, "canonicalize idempotence");
        for (int sign : {1, -1})
            for (long k = -3; k <= 3; ++k)
                check(canonicalize(substitute_linear(d, sign, Rational(k))).poly == c, "orbit constancy");
    }
}

void table_cross_validation(Check& check) {
    Rng rng(1007);
    for (int m : supported_orders()) {
        int done = 0;
        while (done < 5) {
            Rational a = testing::random_nonzero_rational(rng, 40, 9);
            QPoly q;
            try {
                q = family_quartic(family(m), a, Rational(1));
            } catch (const DomainError&) {
                continue;
            }
            if (!is_squarefree(q)) continue;
            auto tc = cross_validate(family(m), a);
            check(tc.agrees, "m = " + std::to_string(m) + ", a = " + a.to_string() + ": " + tc.detail);
            ++done;
        }
    }
}

void oracles(Check& check) {
    Rng rng(1008);
    for (int i = 0; i < 100; ++i) {
        const int deg = 2 * static_cast<int>(uniform(rng, 1, 3));
        QPoly d = testing::random_monic(rng, deg, 20);
        auto s = sqrt_series(d, 12);
        auto sq = s * s;
        for (int k = deg; k > deg - 12; --k) check(sq.coeff(k) == d.coeff(k), "sqrt_series squared");
    }
    for (long b = -6; b <= 6; ++b)
        for (long c = -6; c <= 6; ++c) {
            if (b * b == 4 * c) continue;
            auto s = minimal_solution(QPoly({Rational(c), Rational(b), Rational(1)}));
            const bool deg1 = testing::quadratic_degree_one_solution(Rational(b), Rational(c)).has_value();
            check(s.has_value() && s->f.degree() == (deg1 ? 1 : 2),
                  "minimal degree for x^2 + " + std::to_string(b) + "x + " + std::to_string(c));
        }
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        double limit_s;
        std::function<void(Check&)> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "continued-fraction goldens", 1, cf_goldens},
        {"AC2", "Pell goldens", 1, pell_goldens},
        {"AC3", "square-free classification", 600, squarefree_classification},
        {"AC4", "nonsquare-free classification", 5, nonsquarefree_classification},
        {"AC5", "torsion and period consistency", 120, torsion_period},
        {"AC6", "property suites", 0, property_suites},
        {"AC7", "table cross-validation", 0, table_cross_validation},
        {"AC8", "oracle checks", 0, oracles},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(check);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s)
            check(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
        const bool ok = check.failure.empty();
        failed += ok ? 0 : 1;
        std::printf("%s %s: %s (%.3f s)%s%s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs, ok ? "" : " - ",
                    check.failure.c_str());
    }
    return failed == 0 ? 0 : 1;
}
