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

#ifndef PELLQ_CURVES_HPP
#define PELLQ_CURVES_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pellq/errors.hpp"
#include "pellq/poly.hpp"
#include "pellq/ratfun.hpp"

namespace pellq {

/// y^2 + (1 - c) x y - b y = x^3 - b x^2, marked point (0, 0).
template <class F>
struct TateCurve {
    F b;
    F c;

    friend bool operator==(const TateCurve&, const TateCurve&) = default;
};

/// b^3 (16 b^2 - 8 b c^2 - 20 b c + b + c^4 - 3 c^3 + 3 c^2 - c).
template <class F>
F tate_discriminant(const F& b, const F& c) {
    F c2 = c * c;
    F inner = F(16) * b * b - F(8) * b * c2 - F(20) * b * c + b + c2 * c2 - F(3) * c2 * c + F(3) * c2 - c;
    return b * b * b * inner;
}

/// y^2 = x^3 + A x + B.
template <class F>
struct ShortWeierstrass {
    F A;
    F B;

    F discriminant() const { return F(4) * A * A * A + F(27) * B * B; }
    bool is_singular() const { return discriminant().is_zero(); }
    bool contains(const F& x, const F& y) const { return y * y == x * x * x + A * x + B; }

    friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

/// Point on a short Weierstrass curve; the curve travels with the point so
/// that mixing curves can be detected.
template <class F>
struct ECPoint {
    ShortWeierstrass<F> curve;
    bool infinity = true;
    F x{0};
    F y{0};

    static ECPoint at_infinity(const ShortWeierstrass<F>& E) { return ECPoint{E, true, F(0), F(0)}; }
    static ECPoint affine(const ShortWeierstrass<F>& E, const F& x, const F& y) {
        if (!E.contains(x, y)) throw DomainError("point is not on the curve");
        return ECPoint{E, false, x, y};
    }

    friend bool operator==(const ECPoint& p, const ECPoint& q) {
        if (!(p.curve == q.curve) || p.infinity != q.infinity) return false;
        return p.infinity || (p.x == q.x && p.y == q.y);
    }
};

template <class F>
ECPoint<F> ec_negate(const ECPoint<F>& P) {
    if (P.infinity) return P;
    return ECPoint<F>{P.curve, false, P.x, -P.y};
}

/// Chord-and-tangent addition.
template <class F>
ECPoint<F> ec_add(const ECPoint<F>& P, const ECPoint<F>& Q) {
    if (!(P.curve == Q.curve)) throw DomainError("points lie on different curves");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F lambda;
    if (P.x == Q.x) {
        if ((P.y + Q.y).is_zero()) return ECPoint<F>::at_infinity(P.curve);
        lambda = (F(3) * P.x * P.x + P.curve.A) / (F(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    F x3 = lambda * lambda - P.x - Q.x;
    F y3 = lambda * (P.x - x3) - P.y;
    return ECPoint<F>{P.curve, false, x3, y3};
}

/// n P by double-and-add; negative n uses -P.
template <class F>
ECPoint<F> ec_multiply(const ECPoint<F>& P, long n) {
    ECPoint<F> base = n < 0 ? ec_negate(P) : P;
    auto k = static_cast<unsigned long>(n < 0 ? -n : n);
    ECPoint<F> acc = ECPoint<F>::at_infinity(P.curve);
    while (k > 0) {
        if (k & 1UL) acc = ec_add(acc, base);
        k >>= 1UL;
        if (k > 0) base = ec_add(base, base);
    }
    return acc;
}

/// Smallest n <= 12 with n P = O, scanning n = 1, 2, ...; empty means the
/// point has infinite order over Q (rational torsion never exceeds 12).
std::optional<int> torsion_order(const ECPoint<Rational>& P);

/// Standard completion of the square and removal of the x^2 term for a
/// curve in Tate normal form; returns the model and the image of (0, 0).
template <class F>
std::pair<ShortWeierstrass<F>, ECPoint<F>> tate_to_short(const TateCurve<F>& tc) {
    if (tate_discriminant(tc.b, tc.c).is_zero()) throw DomainError("Tate curve is singular");
    const F a1 = F(1) - tc.c, a2 = -tc.b, a3 = -tc.b;
    const F b2 = a1 * a1 + F(4) * a2, b4 = a1 * a3, b6 = a3 * a3;
    ShortWeierstrass<F> E{b4 / F(2) - b2 * b2 / F(48), b6 / F(4) - b2 * b4 / F(24) + b2 * b2 * b2 / F(864)};
    return {E, ECPoint<F>::affine(E, b2 / F(12), a3 / F(2))};
}

/// Tate normal form of (E, P): translate P to the origin, shear away the
/// tangent slope, and rescale so that a_2 = a_3 = -b. Needs 3 P != O and
/// 2 P != O.
template <class F>
TateCurve<F> tate_normal_form(const ECPoint<F>& P) {
    if (P.infinity) throw DomainError("Tate normal form of the identity");
    if (P.y.is_zero()) throw DomainError("Tate normal form needs a point of order > 2");
    const F lambda = (F(3) * P.x * P.x + P.curve.A) / (F(2) * P.y);
    const F a1 = F(2) * lambda, a3 = F(2) * P.y, a2 = F(3) * P.x - lambda * lambda;
    if (a2.is_zero()) throw DomainError("Tate normal form needs a point of order > 3");
    return TateCurve<F>{-(a2 * a2 * a2) / (a3 * a3), F(1) - a1 * a2 / a3};
}

/// Jacobian model of y^2 = x^4 - 6 alpha x^2 - 8 beta x + gamma, given the
/// depressed quartic x^4 + r2 x^2 + r1 x + r0; the point at infinity
/// difference maps to (alpha, beta).
template <class F>
std::pair<ShortWeierstrass<F>, ECPoint<F>> adams_razar_curve(const Poly<F>& q) {
    if (q.degree() != 4 || !(q.leading() == F(1)) || !q.coeff(3).is_zero())
        throw DomainError("expected a monic quartic with no cubic term, got " + to_string(q));
    if (!is_squarefree(q)) throw DomainError("quartic " + to_string(q) + " is not square-free");
    const F alpha = -q.coeff(2) / F(6), beta = -q.coeff(1) / F(8), gamma = q.coeff(0);
    const F A = -(gamma + F(3) * alpha * alpha) / F(4);
    const F B = beta * beta - alpha * alpha * alpha - A * alpha;
    ShortWeierstrass<F> E{A, B};
    return {E, ECPoint<F>::affine(E, alpha, beta)};
}

/// Depressed quartic whose Jacobian model is (E, P): r2 = -6X, r1 = -8Y,
/// r0 = -4A - 3X^2.
template <class F>
Poly<F> adams_razar_quartic(const ECPoint<F>& P) {
    if (P.infinity) throw DomainError("no quartic for the identity point");
    return Poly<F>({-F(4) * P.curve.A - F(3) * P.x * P.x, -F(8) * P.y, -F(6) * P.x, F(0), F(1)});
}

/// The torsion orders with a one-parameter family of rational points.
const std::vector<int>& supported_orders();
void require_supported_order(int m);

/// (b(t), c(t)) of the order-m family as functions of t.
TateCurve<RatFun> kubert_row(int m);

/// Kubert's curve with a point of order m at parameter t. Poles and
/// vanishing discriminant are rejected with the offending factor named.
TateCurve<Rational> kubert_params(int m, const Rational& t);

/// Parameters t with kubert_params(m, t) equal to the given Tate curve.
std::vector<Rational> recover_kubert_t(int m, const TateCurve<Rational>& tc);

/// Depressed quartics x^4 + r2 x^2 + r1 x + r0 whose Jacobian point has
/// order m; the full coefficients are r_i(a) / b^w_i with w = (2, 3, 4).
struct ParamFamily {
    int m = 0;
    RatFun r2;
    RatFun r1;
    RatFun r0;
    std::array<int, 3> b_weights{2, 3, 4};
};

/// The hard-coded family for order m.
const ParamFamily& family(int m);

/// x^4 + r2 x^2 + r1 x + r0 as a polynomial over Q(a) at b = 1.
Poly<RatFun> family_quartic_symbolic(const ParamFamily& fam);

/// The family member at (a, b). Throws DomainError naming the vanishing
/// denominator factor, or b = 0.
QPoly family_quartic(const ParamFamily& fam, const Rational& a, const Rational& b);

/// u with (s2, s1, s0) = (u^2 r2, u^3 r1, u^4 r0) for depressed quartics
/// r and s, i.e. s(x) = u^4 r(x / u).
std::optional<Rational> weighted_scaling(const QPoly& r, const QPoly& s);

struct TableCheck {
    bool agrees = false;
    Rational t;
    Rational u;
    std::string detail;
};

/// Re-derives the family member at (a, 1) from Kubert's row: Jacobian model,
/// Tate normal form, recovered parameter t, back through Kubert, the short
/// model and the inverse Jacobian map, then compares up to weighted scaling.
TableCheck cross_validate(const ParamFamily& fam, const Rational& a);

struct PeriodTorsion {
    int n = 0;
    int m = 0;  // 0 when the point has infinite order
    bool consistent = false;
};

/// Period of sqrt(d) against the torsion order of its Jacobian point;
/// consistent when n = m - 1 or n = 2 (m - 1). Throws DomainError when no
/// period is found within max_steps.
PeriodTorsion check_period_torsion(const QPoly& d, int max_steps = 64);

/// d(x - a3/4) for a monic quartic d.
QPoly depress(const QPoly& d);

}  // namespace pellq

#endif  // PELLQ_CURVES_HPP
