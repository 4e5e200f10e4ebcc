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

// Generators and oracles shared by the test binaries. Oracles avoid the
// code paths they check: resultants use a dense determinant, series use
// binomial coefficients, valuations are built from known factorizations.

#ifndef PELLQ_TESTS_SUPPORT_HPP
#define PELLQ_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "pellq/poly.hpp"
#include "pellq/rational.hpp"

namespace pellq::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_range, long den_max) {
    return Rational(uniform(rng, -num_range, num_range), uniform(rng, 1, den_max));
}

inline Rational random_nonzero_rational(Rng& rng, long num_range, long den_max) {
    Rational q;
    while (q.is_zero()) q = random_rational(rng, num_range, den_max);
    return q;
}

/// Monic polynomial of the given degree with coefficients in [-range, range].
inline QPoly random_monic(Rng& rng, int degree, long range) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.emplace_back(uniform(rng, -range, range));
    c.emplace_back(1);
    return QPoly(c);
}

inline QPoly random_poly(Rng& rng, int degree, long range, long den_max = 1) {
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(random_rational(rng, range, den_max));
    c.push_back(random_nonzero_rational(rng, range, den_max));
    return QPoly(c);
}

/// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Resultant of p and q from the Sylvester matrix.
inline Rational sylvester_resultant(const QPoly& p, const QPoly& q) {
    const int m = p.degree(), n = q.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = p.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = q.coeff(n - j);
    return determinant(s);
}

/// Binomial coefficient C(1/2, k).
inline Rational half_binomial(int k) {
    Rational c(1);
    for (int i = 0; i < k; ++i) c = c * (Rational(1, 2) - Rational(i)) / Rational(i + 1);
    return c;
}

/// Plain O(n^2) product, independent of any multiplication hook.
inline QPoly schoolbook_product(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), Rational(0));
    for (int i = 0; i <= a.degree(); ++i)
        for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    return QPoly(c);
}

/// f^2 - d g^2 - 1 expanded with the schoolbook product.
inline QPoly pell_defect(const QPoly& f, const QPoly& g, const QPoly& d) {
    return schoolbook_product(f, f) - schoolbook_product(d, schoolbook_product(g, g)) -
           QPoly::constant(Rational(1));
}

/// A solution of f^2 - (x^2 + b x + c) g^2 = 1 with deg f = 1, if any.
/// Writing f = u x + v, g = w, the coefficients of x^2, x and 1 force
/// w^2 = u^2, v = b u / 2 and u^2 (b^2 - 4 c) = 4. Degree 0 is impossible
/// for g != 0, so none here means the minimal degree is at least 2.
inline std::optional<std::pair<QPoly, QPoly>> quadratic_degree_one_solution(const Rational& b, const Rational& c) {
    const Rational disc = b * b - Rational(4) * c;
    if (disc.is_zero()) return std::nullopt;
    auto u = is_square(Rational(4) / disc);
    if (!u) return std::nullopt;
    QPoly f({b * *u / Rational(2), *u}), g = QPoly::constant(*u);
    if (!pell_defect(f, g, QPoly({c, b, Rational(1)})).is_zero()) return std::nullopt;
    return std::pair{f, g};
}

}  // namespace pellq::testing

#endif  // PELLQ_TESTS_SUPPORT_HPP
