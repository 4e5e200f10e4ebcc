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

#include "pellq/curves.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>

#include "pellq/contfrac.hpp"

namespace pellq {

namespace {

// Polynomial in the parameter from coefficients listed highest degree first.
QPoly desc_poly(std::initializer_list<long> desc) {
    std::vector<Rational> asc;
    for (auto it = std::rbegin(desc); it != std::rend(desc); ++it) asc.emplace_back(*it);
    return QPoly(std::move(asc));
}

RatFun ratio(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
    return RatFun(desc_poly(num), desc_poly(den));
}

// The square-free component of p that vanishes at t, for error messages.
std::string vanishing_factor(const QPoly& p, const Rational& t, std::string_view var) {
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        if (factor(t).is_zero()) {
            std::string s = to_string(factor, var);
            return mult > 1 ? "(" + s + ")^" + std::to_string(mult) : s;
        }
    return to_string(p, var);
}

Rational eval_checked(const RatFun& f, const Rational& at, std::string_view var, const std::string& what) {
    if (f.den()(at).is_zero())
        throw DomainError(what + ": denominator factor " + vanishing_factor(f.den(), at, var) + " vanishes at " +
                          std::string(var) + " = " + at.to_string());
    return f.at(at);
}

std::optional<Rational> rational_root(const Rational& q, unsigned k) {
    if (q.is_zero()) return Rational(0);
    if (q.sign() < 0 && k % 2 == 0) return std::nullopt;
    Integer n = abs(q.num()), d = q.den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
    Rational r(rn, rd);
    return q.sign() < 0 ? -r : r;
}

struct KubertData {
    TateCurve<RatFun> row;
    RatFun discriminant;
};

const std::map<int, KubertData>& kubert_data() {
    static const std::map<int, KubertData> data = [] {
        std::map<int, KubertData> out;
        auto put = [&](int m, RatFun b, RatFun c) {
            RatFun disc = tate_discriminant(b, c);
            out.emplace(m, KubertData{{std::move(b), std::move(c)}, std::move(disc)});
        };
        put(4, ratio({1, 0}), RatFun(0));
        put(5, ratio({1, 0}), ratio({1, 0}));
        put(6, ratio({1, 1, 0}), ratio({1, 0}));
        put(7, ratio({1, -1, 0, 0}), ratio({1, -1, 0}));
        put(8, ratio({2, -3, 1}), ratio({2, -3, 1}, {1, 0}));
        // t^2 (t - 1)(t^2 - t + 1) = t^5 - 2t^4 + 2t^3 - t^2
        put(9, ratio({1, -2, 2, -1, 0, 0}), ratio({1, -1, 0, 0}));
        // t^3 (t - 1)(2t - 1) / (t^2 - 3t + 1)^2, -t (t - 1)(2t - 1) / (t^2 - 3t + 1)
        put(10, ratio({2, -3, 1, 0, 0, 0}, {1, -6, 11, -6, 1}), ratio({-2, 3, -1, 0}, {1, -3, 1}));
        // t (2t - 1)(3t^2 - 3t + 1)(2t^2 - 2t + 1) / (t - 1)^4,
        // -t (2t - 1)(3t^2 - 3t + 1) / (t - 1)^3
        QPoly t = QPoly::x();
        QPoly common = t * desc_poly({2, -1}) * desc_poly({3, -3, 1});
        put(12, RatFun(common * desc_poly({2, -2, 1}), pow(desc_poly({1, -1}), 4)),
            RatFun(-common, pow(desc_poly({1, -1}), 3)));
        return out;
    }();
    return data;
}

const std::map<int, ParamFamily>& family_table() {
    static const std::map<int, ParamFamily> table = [] {
        std::map<int, ParamFamily> out;
        auto put = [&](int m, RatFun r2, RatFun r1, RatFun r0) {
            out.emplace(m, ParamFamily{m, std::move(r2), std::move(r1), std::move(r0)});
        };
        put(4, ratio({8, -2}), ratio({32, 0}), ratio({16, 24, 1}));
        put(5, ratio({-2, 12, -2}), ratio({32, 0}), ratio({1, -12, 6, 20, 1}));
        put(6, ratio({6, 12, -2}), ratio({32, 32, 0}), ratio({9, 4, 30, 20, 1}));
        put(7, ratio({-2, 12, -6, -4, -2}), ratio({32, -32, 0, 0}), ratio({1, -12, 42, -64, 51, 0, -22, 4, 1}));
        put(8, ratio({8, 8, -32, 16, -2}, {1, 0, 0}), ratio({64, -96, 32}),
            ratio({16, -96, 336, -576, 536, -296, 96, -16, 1}, {1, 0, 0, 0, 0}));
        put(9, ratio({-2, 12, -18, 20, -12, 0, -2}), ratio({32, -64, 64, -32, 0, 0}),
            ratio({1, -12, 54, -128, 181, -156, 82, -4, -42, 44, -20, 0, 1}));
        put(10, ratio({-8, 32, -16, -16, 0, 8, -2}, {1, -6, 11, -6, 1}),
            ratio({64, -96, 32, 0, 0, 0}, {1, -6, 11, -6, 1}),
            ratio({16, -128, 448, -896, 1024, -416, -408, 608, -304, 48, 16, -8, 1},
                  {1, -12, 58, -144, 195, -144, 58, -12, 1}));
        put(12, ratio({24, -240, 672, -936, 744, -336, 72, 0, -2}, {1, -6, 15, -20, 15, -6, 1}),
            ratio({384, -960, 1088, -672, 224, -32, 0}, {1, -4, 6, -4, 1}),
            ratio({144, -576, 2112, -9696, 34016, -82176, 141936, -181984, 177240, -132528, 76096, -33208,
                   10760, -2480, 376, -32, 1},
                  {1, -12, 66, -220, 495, -792, 924, -792, 495, -220, 66, -12, 1}));
        return out;
    }();
    return table;
}

}  // namespace

std::optional<int> torsion_order(const ECPoint<Rational>& P) {
    ECPoint<Rational> Q = P;
    for (int n = 1; n <= 12; ++n) {
        if (Q.infinity) return n;
        Q = ec_add(Q, P);
    }
    return std::nullopt;
}

const std::vector<int>& supported_orders() {
    static const std::vector<int> orders{4, 5, 6, 7, 8, 9, 10, 12};
    return orders;
}

void require_supported_order(int m) {
    const auto& o = supported_orders();
    if (std::find(o.begin(), o.end(), m) == o.end())
        throw DomainError("unsupported torsion order " + std::to_string(m) + " (expected 4-10 or 12)");
}

TateCurve<RatFun> kubert_row(int m) {
    require_supported_order(m);
    return kubert_data().at(m).row;
}

TateCurve<Rational> kubert_params(int m, const Rational& t) {
    require_supported_order(m);
    const auto& kd = kubert_data().at(m);
    const std::string what = "Kubert parameter for m = " + std::to_string(m);
    TateCurve<Rational> tc{eval_checked(kd.row.b, t, "t", what), eval_checked(kd.row.c, t, "t", what)};
    if (tate_discriminant(tc.b, tc.c).is_zero())
        throw DomainError(what + ": discriminant factor " + vanishing_factor(kd.discriminant.num(), t, "t") +
                          " vanishes at t = " + t.to_string());
    return tc;
}

std::vector<Rational> recover_kubert_t(int m, const TateCurve<Rational>& tc) {
    const auto& row = kubert_data().at(m).row;
    // Numerators of b(t) - b and c(t) - c vanish at every matching t.
    QPoly eb = (row.b - RatFun(tc.b)).num(), ec = (row.c - RatFun(tc.c)).num();
    QPoly g;
    if (eb.is_zero())
        g = ec;
    else if (ec.is_zero())
        g = eb;
    else
        g = gcd(eb, ec);
    std::vector<Rational> out;
    if (g.is_zero() || g.degree() < 1) return out;
    for (const auto& t : rational_roots(g)) {
        try {
            if (kubert_params(m, t) == tc) out.push_back(t);
        } catch (const DomainError&) {
        }
    }
    return out;
}

const ParamFamily& family(int m) {
    require_supported_order(m);
    return family_table().at(m);
}

Poly<RatFun> family_quartic_symbolic(const ParamFamily& fam) {
    return Poly<RatFun>({fam.r0, fam.r1, fam.r2, RatFun(0), RatFun(1)});
}

QPoly family_quartic(const ParamFamily& fam, const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("family parameter b = 0");
    const std::string what = "family m = " + std::to_string(fam.m);
    Rational r2 = eval_checked(fam.r2, a, "a", what) / b.pow(fam.b_weights[0]);
    Rational r1 = eval_checked(fam.r1, a, "a", what) / b.pow(fam.b_weights[1]);
    Rational r0 = eval_checked(fam.r0, a, "a", what) / b.pow(fam.b_weights[2]);
    return QPoly({r0, r1, r2, Rational(0), Rational(1)});
}

std::optional<Rational> weighted_scaling(const QPoly& r, const QPoly& s) {
    const std::array<int, 3> w{2, 3, 4};
    const std::array<Rational, 3> rc{r.coeff(2), r.coeff(1), r.coeff(0)}, sc{s.coeff(2), s.coeff(1), s.coeff(0)};
    std::array<std::optional<Rational>, 3> rho;
    for (int i = 0; i < 3; ++i) {
        if (rc[i].is_zero() != sc[i].is_zero()) return std::nullopt;
        if (!rc[i].is_zero()) rho[i] = sc[i] / rc[i];
    }
    std::vector<Rational> cands;
    if (rho[0] && rho[1]) cands.push_back(*rho[1] / *rho[0]);
    if (rho[1] && rho[2]) cands.push_back(*rho[2] / *rho[1]);
    for (int i = 0; i < 3; ++i)
        if (rho[i])
            if (auto u = rational_root(*rho[i], static_cast<unsigned>(w[i]))) {
                cands.push_back(*u);
                cands.push_back(-*u);
            }
    if (!rho[0] && !rho[1] && !rho[2]) cands.emplace_back(1);
    for (const auto& u : cands) {
        if (u.is_zero()) continue;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = sc[i] == rc[i] * u.pow(w[i]);
        if (ok) return u;
    }
    return std::nullopt;
}

TableCheck cross_validate(const ParamFamily& fam, const Rational& a) {
    TableCheck out;
    try {
        const QPoly q = family_quartic(fam, a, Rational(1));
        auto [E, P] = adams_razar_curve(q);
        const TateCurve<Rational> tc = tate_normal_form(P);
        auto ts = recover_kubert_t(fam.m, tc);
        if (ts.empty()) {
            out.detail = "Tate normal form (b, c) = (" + tc.b.to_string() + ", " + tc.c.to_string() +
                         ") is not on Kubert's row";
            return out;
        }
        for (const auto& t : ts) {
            auto [Ek, Pk] = tate_to_short(kubert_params(fam.m, t));
            QPoly rederived = adams_razar_quartic(Pk);
            if (auto u = weighted_scaling(q, rederived)) {
                out.agrees = true;
                out.t = t;
                out.u = *u;
                out.detail = "t = " + t.to_string() + ", u = " + u->to_string();
                return out;
            }
        }
        out.detail = "re-derived quartic differs beyond weighted scaling";
    } catch (const DomainError& e) {
        out.detail = e.what();
    }
    return out;
}

QPoly depress(const QPoly& d) {
    if (d.degree() != 4 || !d.leading().is_one()) throw DomainError("expected a monic quartic, got " + to_string(d));
    return shift(d, -d.coeff(3) / Rational(4));
}

PeriodTorsion check_period_torsion(const QPoly& d, int max_steps) {
    QPoly q = depress(d);
    auto cf = cf_expand(d, max_steps);
    if (!cf.period) throw DomainError("no period found for " + to_string(d) + " within " +
                                      std::to_string(max_steps) + " steps");
    auto [E, P] = adams_razar_curve(q);
    PeriodTorsion out;
    out.n = cf.period->length;
    out.m = torsion_order(P).value_or(0);
    out.consistent = out.m > 0 && (out.n == out.m - 1 || out.n == 2 * (out.m - 1));
    return out;
}

}  // namespace pellq
