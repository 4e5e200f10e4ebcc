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

#include <algorithm>
#include <set>

#include "pellq/classify.hpp"
#include "pellq/valuation.hpp"

namespace pellq {

namespace {

// u(s) = c / lead(q)^2 for the first quasi-period of sqrt(D_s), so that the
// leading coefficient of G_2n is 2^(2n-1) / u^n.
RatFun norm_base(const Poly<RatFun>& D) {
    auto qp = first_quasi_period(D, kDefaultMaxStepsSymbolic);
    if (!qp) throw std::logic_error("quadratic radicand without quasi-period");
    const RatFun lq = qp->q.leading();
    return qp->c / (lq * lq);
}

// Integers s with 2 / u(s) in Z. Writing u = (A s + B) / L with integers
// A, B, L, this says A s + B divides 2 L.
std::vector<Integer> admissible(const RatFun& u) {
    if (u.num().degree() != 1 || u.den().degree() != 0)
        throw std::logic_error("norm base " + u.to_string("s") + " is not linear in s");
    const QPoly n = u.num() * u.den().leading().inverse();
    const Integer L = denominator_lcm(n);
    const Integer A = (n.coeff(1) * Rational(L)).num(), B = (n.coeff(0) * Rational(L)).num();
    std::set<Integer> out;
    for (const auto& dv : divisors(2 * L))
        for (const Integer& delta : {Integer(dv), Integer(-dv)}) {
            Integer s = delta - B;
            if (s % A == 0) out.insert(s / A);
        }
    return {out.begin(), out.end()};
}

QPoly linear_root_factor(const Integer& a) { return QPoly({Rational(Integer(-a)), Rational(1)}); }

void add_integer_roots(std::set<Integer>& out, const QPoly& p) {
    if (p.degree() <= 0) return;
    for (const auto& r : rational_roots(p))
        if (r.is_integer()) out.insert(r.num());
}

// First n in [1, n_max] with G_n(a) = 0, stopping once |2 F_1(a)| >= 2 and
// the sequence has started to grow in absolute value.
std::optional<int> first_zero(const QPoly& D, const QPoly& F1, const Integer& a, int n_max) {
    std::vector<Rational> g = g_sequence_at(D, Rational(a), n_max);
    const bool growth = (Rational(2) * F1(Rational(a))).abs() >= Rational(2);
    for (int n = 1; n <= n_max; ++n) {
        if (g[static_cast<std::size_t>(n)].is_zero()) return n;
        if (growth && n + 1 <= n_max && !g[static_cast<std::size_t>(n)].is_zero() &&
            g[static_cast<std::size_t>(n + 1)].abs() > g[static_cast<std::size_t>(n)].abs())
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

NonsquarefreeReport classify_nonsquarefree(int window, int n_max) {
    const RatFun s = RatFun::variable();
    const Poly<RatFun> X = Poly<RatFun>::x();
    struct Shape {
        std::string name;
        Poly<RatFun> D;
        QPoly (*at)(const Integer&);
    };
    const std::vector<Shape> shapes{
        {"x^2 + s", X * X + Poly<RatFun>::constant(s),
         [](const Integer& v) { return QPoly({Rational(v), Rational(0), Rational(1)}); }},
        {"x^2 + x + s", X * X + X + Poly<RatFun>::constant(s),
         [](const Integer& v) { return QPoly({Rational(v), Rational(1), Rational(1)}); }},
    };

    NonsquarefreeReport rep;
    std::set<std::string> seen;
    for (const auto& shape : shapes) {
        NonsquarefreeCase cs;
        cs.shape = shape.name;
        cs.norm_base = norm_base(shape.D);
        for (const auto& sv : admissible(cs.norm_base)) {
            const QPoly D = shape.at(sv);
            if (is_square(D)) continue;
            cs.admissible_s.push_back(sv);
            auto sol = minimal_solution(D, kDefaultMaxStepsQ);
            if (!sol) throw std::logic_error("quadratic " + to_string(D) + " without unit solution");
            std::set<Integer> scan;
            add_integer_roots(scan, sol->f);
            add_integer_roots(scan, sol->g);
            for (int a = -window; a <= window; ++a) scan.insert(Integer(a));
            for (const auto& a : scan) {
                cs.scanned_a.push_back(a);
                auto n = first_zero(D, sol->f, a, n_max);
                if (!n) continue;
                const QPoly lin = linear_root_factor(a);
                QPoly d = D * lin * lin;
                IntegralityResult integ = is_pellian_over_Z(d, std::max(6, *n));
                if (integ.verdict != IntegralityVerdict::integral) continue;
                cs.roots.push_back({sv, a, *n, d});
                QPoly can = canonicalize(d).poly;
                if (seen.insert(to_string(can)).second) rep.quartics.push_back(can);
            }
        }
        std::sort(cs.scanned_a.begin(), cs.scanned_a.end());
        cs.scanned_a.erase(std::unique(cs.scanned_a.begin(), cs.scanned_a.end()), cs.scanned_a.end());
        rep.cases.push_back(std::move(cs));
    }
    std::sort(rep.quartics.begin(), rep.quartics.end(), canonical_less);
    return rep;
}

}  // namespace pellq
