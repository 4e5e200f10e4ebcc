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

#include "pellq/pell.hpp"

namespace pellq {

std::string to_string(IntegralityVerdict v) {
    switch (v) {
        case IntegralityVerdict::integral: return "integral";
        case IntegralityVerdict::absent_at_bound: return "absent_at_bound";
        case IntegralityVerdict::no_period: return "no_period";
    }
    return "unknown";
}

IntegralityResult is_pellian_over_Z(const QPoly& d, int power_bound, int max_steps) {
    if (!is_integral(d)) throw DomainError("integrality test needs integer coefficients, got " + to_string(d));
    if (power_bound < 1) throw DomainError("power bound must be positive");
    IntegralityResult out;
    out.minimal = minimal_solution(d, max_steps);
    if (!out.minimal) return out;
    out.verdict = IntegralityVerdict::absent_at_bound;
    PellSolution<Rational> s = *out.minimal;
    for (int n = 1; n <= power_bound; ++n) {
        if (n > 1) s = power_solution(*out.minimal, n);
        if (is_integral(s.f) && is_integral(s.g)) {
            out.verdict = IntegralityVerdict::integral;
            out.solution = s;
            out.power = n;
            break;
        }
    }
    return out;
}

std::vector<Rational> g_sequence_at(const QPoly& D, const Rational& a, int n_max) {
    if (D.degree() != 2 || !D.leading().is_one()) throw DomainError("expected a monic quadratic, got " + to_string(D));
    if (n_max < 0) throw DomainError("n_max must be nonnegative");
    auto s = minimal_solution(D);
    if (!s) throw DomainError(to_string(D) + " is not Pellian within the step cutoff");
    const Rational two_f = Rational(2) * s->f(a);
    std::vector<Rational> g{Rational(0)};
    if (n_max >= 1) g.push_back(s->g(a));
    for (int n = 2; n <= n_max; ++n) g.push_back(two_f * g[g.size() - 1] - g[g.size() - 2]);
    return g;
}

}  // namespace pellq
