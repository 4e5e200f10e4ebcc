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

#ifndef PELLQ_POLY_HPP
#define PELLQ_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pellq/errors.hpp"
#include "pellq/rational.hpp"

namespace pellq {

template <class F>
class Poly;

/// Coefficient fields may supply a faster product (for example one that
/// clears denominators first) by specializing this hook.
template <class F>
struct PolyMulHook {
    static constexpr bool enabled = false;
};

/// Dense univariate polynomial over a field F. Coefficients are stored in
/// ascending degree order with no trailing zero; the zero polynomial is empty.
///
/// F needs value semantics, construction from long, the four field
/// operations, equality, is_zero(), and the coeff_* printing hooks.
template <class F>
class Poly {
public:
    using value_type = F;

    Poly() = default;
    explicit Poly(std::vector<F> ascending) : c_(std::move(ascending)) { trim(); }
    Poly(std::initializer_list<F> ascending) : c_(ascending) { trim(); }

    static Poly constant(const F& c) { return Poly(std::vector<F>{c}); }
    static Poly monomial(const F& c, int degree) {
        std::vector<F> v(static_cast<std::size_t>(degree) + 1, F(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    static Poly x() { return monomial(F(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const F& leading() const {
        if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    /// Coefficient of x^i; zero outside the stored range.
    F coeff(int i) const {
        return (i < 0 || i > degree()) ? F(0) : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<F>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const F& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if constexpr (PolyMulHook<F>::enabled) return PolyMulHook<F>::mul(a, b);
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Horner evaluation.
    F operator()(const F& at) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

// Content-stripped integer PRS; defined in poly.cpp.
Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b);

template <class F>
struct DivMod {
    Poly<F> quotient;
    Poly<F> remainder;
};

template <class F>
DivMod<F> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> rem = a.coeffs();
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
    const F lead_inv = F(1) / b.leading();
    const int db = b.degree();
    for (int k = a.degree() - db; k >= 0; --k) {
        F& top = rem[static_cast<std::size_t>(k + db)];
        if (top.is_zero()) continue;
        F q = top * lead_inv;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
        quo[static_cast<std::size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> quo(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).quotient; }

template <class F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).remainder; }

/// a / b, where b must divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p * (F(1) / p.leading());
}

/// Monic gcd by the plain Euclidean algorithm over F.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.degree() < 1) return Poly<F>();
    std::vector<F> d;
    d.reserve(p.coeffs().size() - 1);
    for (int i = 1; i <= p.degree(); ++i) d.push_back(p.coeffs()[static_cast<std::size_t>(i)] * F(i));
    return Poly<F>(std::move(d));
}

template <class F>
Poly<F> pow(const Poly<F>& p, unsigned n) {
    Poly<F> result = Poly<F>::constant(F(1)), base = p;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

/// p(x + r).
template <class F>
Poly<F> shift(const Poly<F>& p, const F& r) {
    const Poly<F> lin(std::vector<F>{r, F(1)});
    Poly<F> acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * lin + Poly<F>::constant(*it);
    return acc;
}

/// p(s * x).
template <class F>
Poly<F> scale_arg(const Poly<F>& p, const F& s) {
    std::vector<F> c = p.coeffs();
    F sk(1);
    for (auto& ci : c) {
        ci *= sk;
        sk *= s;
    }
    return Poly<F>(std::move(c));
}

/// p(-x).
template <class F>
Poly<F> reflect(const Poly<F>& p) { return scale_arg(p, F(-1)); }

/// gcd(d, d') is a nonzero constant. The zero polynomial is not square-free.
template <class F>
bool is_squarefree(const Poly<F>& d) {
    if (d.is_zero()) return false;
    if (d.degree() < 2) return true;
    return gcd(d, derivative(d)).degree() == 0;
}

/// Yun's algorithm: d = lc * prod f_i^i with the f_i monic, square-free and
/// pairwise coprime. Entries with f_i = 1 are omitted.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& d) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (d.degree() < 1) return out;
    Poly<F> a = monic(d);
    Poly<F> da = derivative(a);
    Poly<F> g = gcd(a, da);
    Poly<F> b = exact_div(a, g);
    Poly<F> c = exact_div(da, g);
    Poly<F> e = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Poly<F> f = gcd(b, e);
        if (f.degree() > 0) out.emplace_back(f, i);
        b = exact_div(b, f);
        c = exact_div(e, f);
        e = c - derivative(b);
    }
    return out;
}

/// Prints in descending order, e.g. "x^4 + 2*x^3 - 7/8*x^2 - x + 10".
template <class F>
std::string to_string(const Poly<F>& p, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        F c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        bool neg = coeff_is_negative(c);
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
        if (i == 0) {
            out += coeff_is_atomic(c) ? coeff_to_string(c) : "(" + coeff_to_string(c) + ")";
        } else if (c == F(1)) {
            out += mono;
        } else {
            out += (coeff_is_atomic(c) ? coeff_to_string(c) : "(" + coeff_to_string(c) + ")") + "*" + mono;
        }
    }
    return out;
}

template <class F>
std::ostream& operator<<(std::ostream& os, const Poly<F>& p) { return os << to_string(p); }

using QPoly = Poly<Rational>;

/// Parses terms such as "x^4 + 2*x^3 - 7/8*x^2 - x + 10" in the given variable.
QPoly parse_poly(std::string_view text, char var = 'x');

/// True when every coefficient is an integer.
bool is_integral(const QPoly& p);

/// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const QPoly& p);

/// p scaled to a primitive integer polynomial with positive leading
/// coefficient, returned as integers in ascending order.
std::vector<Integer> primitive_part(const QPoly& p);

/// Distinct rational roots, sorted ascending.
std::vector<Rational> rational_roots(const QPoly& p);

}  // namespace pellq

#endif  // PELLQ_POLY_HPP
