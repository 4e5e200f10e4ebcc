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

#ifndef PELLQ_PELL_HPP
#define PELLQ_PELL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "pellq/contfrac.hpp"
#include "pellq/poly.hpp"
#include "pellq/ratfun.hpp"

namespace pellq {

/// f^2 - d g^2 = constant. `index` is n for the n-th power of the minimal
/// solution.
template <class F>
struct PellSolution {
    Poly<F> f;
    Poly<F> g;
    F constant{1};
    int index = 1;
    Poly<F> d;
};

/// First convergent p_k/q_k whose norm p_k^2 - d q_k^2 is a constant c,
/// i.e. the first k with deg Q_{k+1} = 0, where c = (-1)^(k+1) Q_{k+1}.
template <class F>
struct QuasiPeriod {
    int k = 0;
    Poly<F> p;
    Poly<F> q;
    F c{1};
};

template <class F>
Poly<F> pell_norm(const Poly<F>& f, const Poly<F>& g, const Poly<F>& d) {
    return f * f - d * (g * g);
}

namespace detail {

template <class F>
bool leads_negative(const F& c) {
    if constexpr (std::is_same_v<F, RatFun>)
        return !c.is_zero() && c.num().leading().sign() < 0;
    else
        return c.sign() < 0;
}

template <class F>
void normalize_signs(PellSolution<F>& s) {
    if (!s.f.is_zero() && leads_negative(s.f.leading())) s.f = -s.f;
    if (!s.g.is_zero() && leads_negative(s.g.leading())) s.g = -s.g;
}

template <class F>
void verify(const PellSolution<F>& s) {
    Poly<F> n = pell_norm(s.f, s.g, s.d);
    if (!(n == Poly<F>::constant(s.constant)))
        throw std::logic_error("Pell identity fails for f = " + to_string(s.f) + ", g = " + to_string(s.g));
}

}  // namespace detail

template <class F>
std::optional<QuasiPeriod<F>> first_quasi_period(const Poly<F>& d, int max_steps) {
    require_pell_radicand(d);
    const Poly<F> a0 = sqrt_floor(d);
    if (a0 * a0 == d) throw DomainError("radicand " + to_string(d) + " is a perfect square");
    const Poly<F> one = Poly<F>::constant(F(1));
    Poly<F> p_prev = one, q_prev, p = a0, q = one;
    Surd<F> s = next_surd(Surd<F>{Poly<F>(), one}, a0, d);
    for (int k = 0; k <= max_steps; ++k) {
        if (k > 0) {
            Poly<F> a = surd_floor(s, a0);
            Poly<F> p_next = a * p + p_prev, q_next = a * q + q_prev;
            p_prev = std::move(p);
            q_prev = std::move(q);
            p = std::move(p_next);
            q = std::move(q_next);
            s = next_surd(s, a, d);
        }
        // s is alpha_{k+1} and (p, q) the k-th convergent.
        if (s.Q.degree() == 0) {
            F c = s.Q.leading();
            if (k % 2 == 0) c = -c;
            return QuasiPeriod<F>{k, p, q, c};
        }
    }
    return std::nullopt;
}

/// Unit solution built from a quasi-period. Without doubling, c must be a
/// square in F and (p, q)/sqrt(c) is returned; with doubling the result is
/// ((p^2 + d q^2)/c, 2 p q / c).
template <class F>
PellSolution<F> solution_from_quasi_period(const QuasiPeriod<F>& qp, const Poly<F>& d, bool doubled) {
    PellSolution<F> s;
    s.d = d;
    if (doubled) {
        const F inv = F(1) / qp.c;
        s.f = (qp.p * qp.p + d * (qp.q * qp.q)) * inv;
        s.g = (qp.p * qp.q) * (inv * F(2));
    } else {
        auto root = is_square(qp.c);
        if (!root) throw DomainError("quasi-period constant is not a square");
        const F inv = F(1) / *root;
        s.f = qp.p * inv;
        s.g = qp.q * inv;
    }
    detail::normalize_signs(s);
    detail::verify(s);
    return s;
}

/// Smallest-degree unit solution: the first quasi-period, divided by
/// sqrt(c) when c is a square and doubled otherwise. Empty when no
/// quasi-period occurs within max_steps partial quotients.
template <class F>
std::optional<PellSolution<F>> minimal_solution(const Poly<F>& d, int max_steps) {
    auto qp = first_quasi_period(d, max_steps);
    if (!qp) return std::nullopt;
    return solution_from_quasi_period(*qp, d, !is_square(qp->c).has_value());
}

template <class F>
std::optional<PellSolution<F>> minimal_solution(const Poly<F>& d) {
    return minimal_solution(d, std::is_same_v<F, RatFun> ? kDefaultMaxStepsSymbolic : kDefaultMaxStepsQ);
}

/// (f + g sqrt(d))^n by binary exponentiation in F[x][sqrt(d)].
template <class F>
PellSolution<F> power_solution(const PellSolution<F>& s, int n) {
    if (n < 1) throw DomainError("power must be at least 1");
    if (!(s.constant == F(1))) throw DomainError("power_solution needs a unit solution");
    const Poly<F> one = Poly<F>::constant(F(1));
    Poly<F> rf = one, rg, bf = s.f, bg = s.g;
    auto mul = [&](const Poly<F>& f1, const Poly<F>& g1, const Poly<F>& f2, const Poly<F>& g2) {
        return std::pair<Poly<F>, Poly<F>>{f1 * f2 + s.d * (g1 * g2), f1 * g2 + f2 * g1};
    };
    for (unsigned e = static_cast<unsigned>(n); e > 0; e >>= 1U) {
        if (e & 1U) std::tie(rf, rg) = mul(rf, rg, bf, bg);
        if (e > 1) std::tie(bf, bg) = mul(bf, bg, bf, bg);
    }
    PellSolution<F> out{rf, rg, F(1), n * s.index, s.d};
    detail::normalize_signs(out);
    detail::verify(out);
    return out;
}

enum class IntegralityVerdict {
    integral,        // some power n <= bound lies in Z[x]
    absent_at_bound, // periodic, but no power up to the bound is integral
    no_period,       // no quasi-period within the step cutoff
};

struct IntegralityResult {
    IntegralityVerdict verdict = IntegralityVerdict::no_period;
    std::optional<PellSolution<Rational>> minimal;
    std::optional<PellSolution<Rational>> solution;  // least integral power
    int power = 0;
};

std::string to_string(IntegralityVerdict v);

/// Least power n <= power_bound of the minimal solution over Q with
/// f_n, g_n in Z[x].
IntegralityResult is_pellian_over_Z(const QPoly& d, int power_bound = 6, int max_steps = kDefaultMaxStepsQ);

/// G_0(a), ..., G_{n_max}(a) from G_{n+2} = 2 F_1(a) G_{n+1} - G_n for a monic
/// quadratic D with minimal solution (F_1, G_1).
std::vector<Rational> g_sequence_at(const QPoly& D, const Rational& a, int n_max);

}  // namespace pellq

#endif  // PELLQ_PELL_HPP
