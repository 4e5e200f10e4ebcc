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

#ifndef PELLQ_CONTFRAC_HPP
#define PELLQ_CONTFRAC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pellq/errors.hpp"
#include "pellq/laurent.hpp"
#include "pellq/poly.hpp"
#include "pellq/ratfun.hpp"

namespace pellq {

inline constexpr int kDefaultMaxStepsQ = 64;
inline constexpr int kDefaultMaxStepsSymbolic = 40;

/// Complete quotient (P + sqrt(d)) / Q.
template <class F>
struct Surd {
    Poly<F> P;
    Poly<F> Q;

    friend bool operator==(const Surd&, const Surd&) = default;
};

/// A parameter value at which a symbolic expansion over Q(a) stops
/// specializing faithfully: a partial quotient or Q_k loses its leading
/// term, or a coefficient acquires a pole.
struct SideCondition {
    int index = 0;
    std::string kind;
    QPoly factor;  // polynomial in a whose vanishing triggers the event
    std::vector<Rational> rational_roots;
};

struct Period {
    int start = 1;
    int length = 0;
};

template <class F>
struct CFExpansion {
    Poly<F> d;
    Poly<F> a0;
    std::vector<Poly<F>> partial_quotients;  // a_1, a_2, ...
    std::vector<Surd<F>> states;              // alpha_0, alpha_1, ...
    std::optional<Period> period;
    bool truncated = false;
    std::vector<SideCondition> side_conditions;

    /// a_k with a_0 included.
    const Poly<F>& quotient(int k) const {
        if (k < 0 || k > static_cast<int>(partial_quotients.size()))
            throw std::out_of_range("partial quotient index " + std::to_string(k) + " not computed");
        return k == 0 ? a0 : partial_quotients[static_cast<std::size_t>(k - 1)];
    }
    int quotient_count() const { return static_cast<int>(partial_quotients.size()) + 1; }
};

template <class F>
void require_pell_radicand(const Poly<F>& d) {
    if (d.degree() < 2 || d.degree() % 2 != 0)
        throw DomainError("radicand must have positive even degree, got " + to_string(d));
    if (!(d.leading() == F(1))) throw DomainError("radicand must be monic, got " + to_string(d));
}

/// Polynomial part of sqrt(d) for monic even-degree d.
template <class F>
Poly<F> sqrt_floor(const Poly<F>& d) {
    require_pell_radicand(d);
    return principal_part(sqrt_series(d, d.degree() / 2 + 1));
}

/// floor(alpha) for alpha = (P + sqrt(d))/Q, computed exactly as the
/// polynomial quotient of P + floor(sqrt(d)) by Q.
template <class F>
Poly<F> surd_floor(const Surd<F>& s, const Poly<F>& a0) {
    return quo(s.P + a0, s.Q);
}

/// floor(alpha) through the Laurent series of sqrt(d). Starts at
/// deg(d) + 8 terms and doubles on PrecisionError.
template <class F>
Poly<F> surd_floor_series(const Surd<F>& s, const Poly<F>& d, int precision = 0) {
    if (precision <= 0) precision = d.degree() + 8;
    for (;;) {
        try {
            auto root = sqrt_series(d, precision);
            auto num = LaurentSeries<F>::from_poly(s.P, precision) + root;
            auto den = LaurentSeries<F>::from_poly(s.Q, precision);
            return principal_part(num / den);
        } catch (const PrecisionError&) {
            if (precision > (1 << 16)) throw;
            precision *= 2;
        }
    }
}

/// alpha_{k+1} from alpha_k and a_k:
/// P' = a Q - P, Q' = (d - P'^2) / Q with the division checked exact.
template <class F>
Surd<F> next_surd(const Surd<F>& s, const Poly<F>& a, const Poly<F>& d) {
    Surd<F> n;
    n.P = a * s.Q - s.P;
    auto [q, r] = divmod(d - n.P * n.P, s.Q);
    if (!r.is_zero())
        throw std::logic_error("surd invariant violated: Q does not divide d - P^2 at " + to_string(s.Q));
    n.Q = std::move(q);
    return n;
}

namespace detail {

inline void note_condition(std::vector<SideCondition>& out, int index, std::string kind, const QPoly& factor) {
    if (factor.degree() < 1) return;
    QPoly m = monic(factor);
    for (const auto& sc : out)
        if (sc.factor == m) return;
    out.push_back({index, std::move(kind), m, rational_roots(m)});
}

template <class F>
void collect_conditions(std::vector<SideCondition>& out, int index, const Poly<F>& a, const Poly<F>& Q) {
    if constexpr (std::is_same_v<F, RatFun>) {
        for (const auto& c : a.coeffs()) note_condition(out, index, "pole in a_" + std::to_string(index), c.den());
        note_condition(out, index, "leading coefficient of a_" + std::to_string(index) + " vanishes",
                       a.leading().num());
        for (const auto& c : Q.coeffs()) note_condition(out, index, "pole in Q_" + std::to_string(index), c.den());
        note_condition(out, index, "leading coefficient of Q_" + std::to_string(index) + " vanishes",
                       Q.leading().num());
    } else {
        (void)out;
        (void)index;
        (void)a;
        (void)Q;
    }
}

template <class F>
std::string state_key(const Surd<F>& s) {
    return to_string(s.P) + "|" + to_string(s.Q);
}

}  // namespace detail

/// Continued fraction of sqrt(d). The period is found as the first repeated
/// complete quotient; `truncated` is set when max_steps partial quotients
/// beyond a_0 produce no repetition.
template <class F>
CFExpansion<F> cf_expand(const Poly<F>& d, int max_steps) {
    require_pell_radicand(d);
    if (max_steps < 1) throw DomainError("max_steps must be positive");
    CFExpansion<F> cf;
    cf.d = d;
    cf.a0 = sqrt_floor(d);
    if (cf.a0 * cf.a0 == d) throw DomainError("radicand " + to_string(d) + " is a perfect square");

    Surd<F> s{Poly<F>(), Poly<F>::constant(F(1))};
    cf.states.push_back(s);
    s = next_surd(s, cf.a0, d);
    cf.states.push_back(s);
    std::unordered_map<std::string, int> seen{{detail::state_key(s), 1}};
    for (int k = 1; k <= max_steps; ++k) {
        Poly<F> a = surd_floor(s, cf.a0);
        detail::collect_conditions(cf.side_conditions, k, a, s.Q);
        s = next_surd(s, a, d);
        cf.partial_quotients.push_back(std::move(a));
        auto key = detail::state_key(s);
        if (auto it = seen.find(key); it != seen.end()) {
            cf.period = Period{it->second, k + 1 - it->second};
            return cf;
        }
        seen.emplace(std::move(key), k + 1);
        cf.states.push_back(s);
    }
    cf.truncated = true;
    return cf;
}

template <class F>
CFExpansion<F> cf_expand(const Poly<F>& d) {
    return cf_expand(d, std::is_same_v<F, RatFun> ? kDefaultMaxStepsSymbolic : kDefaultMaxStepsQ);
}

/// (p_n, q_n) from p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2},
/// with p_{-1} = 1, q_{-1} = 0, so (p_0, q_0) = (a_0, 1).
template <class F>
std::pair<Poly<F>, Poly<F>> convergents(const CFExpansion<F>& cf, int n) {
    if (n < 0 || n >= cf.quotient_count())
        throw std::out_of_range("convergent index " + std::to_string(n) + " outside computed range");
    const Poly<F> one = Poly<F>::constant(F(1));
    Poly<F> p_prev = one, q_prev, p = cf.a0, q = one;
    for (int k = 1; k <= n; ++k) {
        const auto& a = cf.quotient(k);
        Poly<F> p_next = a * p + p_prev, q_next = a * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, q};
}

/// Final period quotient equals 2 a_0 and a_1 .. a_{n-1} is palindromic.
template <class F>
bool abel_check(const CFExpansion<F>& cf) {
    if (!cf.period) return false;
    const int n = cf.period->length;
    if (cf.period->start != 1 || n < 1 || cf.quotient_count() <= n) return false;
    if (!(cf.quotient(n) == cf.a0 * F(2))) return false;
    for (int i = 1, j = n - 1; i < j; ++i, --j)
        if (!(cf.quotient(i) == cf.quotient(j))) return false;
    return true;
}

}  // namespace pellq

#endif  // PELLQ_CONTFRAC_HPP
