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

#include "pellq/ratfun.hpp"

namespace pellq {

namespace {

const QPoly& one_poly() {
    static const QPoly one = QPoly::constant(Rational(1));
    return one;
}

bool single_term(const QPoly& p) {
    int nonzero = 0;
    for (const auto& c : p.coeffs()) nonzero += c.is_zero() ? 0 : 1;
    return nonzero == 1;
}

}  // namespace

RatFun::RatFun(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = one_poly();
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    Rational lc = den_.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFun::as_rational() const {
    if (!is_rational()) throw DomainError("rational function " + to_string() + " is not constant");
    return num_.coeff(0) / den_.coeff(0);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        QPoly n = num_ + o.num_;
        return *this = RatFun(std::move(n), den_);
    }
    QPoly g = gcd(den_, o.den_);
    QPoly b1 = exact_div(den_, g), d1 = exact_div(o.den_, g);
    QPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return *this = RatFun();
    QPoly dd = den_ * d1;
    QPoly h = gcd(n, g);
    if (h.degree() > 0) {
        n = exact_div(n, h);
        dd = exact_div(dd, h);
    }
    num_ = std::move(n);
    den_ = std::move(dd);
    return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    QPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    QPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    QPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    Rational lc = d.leading();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        n *= inv;
        d *= inv;
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(a)");
    return RatFun(den_, num_);
}

RatFun RatFun::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r(1), base = *this;
    auto n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1UL) r *= base;
        n >>= 1UL;
        if (n > 0) base *= base;
    }
    return r;
}

Rational RatFun::at(const Rational& t) const {
    Rational d = den_(t);
    if (d.is_zero()) throw DomainError("pole of " + to_string() + " at a = " + t.to_string());
    return num_(t) / d;
}

std::string RatFun::to_string(std::string_view var) const {
    std::string n = pellq::to_string(num_, var);
    if (den_.degree() == 0) return n;
    std::string d = pellq::to_string(den_, var);
    if (!single_term(num_)) n = "(" + n + ")";
    if (!single_term(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

// p = (1/D) * sum N_i x^i with D the monic lcm of the coefficient denominators.
struct Cleared {
    QPoly D;
    std::vector<QPoly> N;
};

Cleared clear_denominators(const Poly<RatFun>& p) {
    Cleared out{one_poly(), {}};
    for (const auto& c : p.coeffs()) {
        if (c.den() == out.D || c.den().degree() == 0) continue;
        QPoly g = gcd(out.D, c.den());
        out.D = out.D * exact_div(c.den(), g);
    }
    out.N.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.N.push_back(c.is_zero() ? QPoly() : c.num() * exact_div(out.D, c.den()));
    return out;
}

}  // namespace

Poly<RatFun> PolyMulHook<RatFun>::mul(const Poly<RatFun>& a, const Poly<RatFun>& b) {
    Cleared ca = clear_denominators(a), cb = clear_denominators(b);
    const QPoly D = ca.D * cb.D;
    std::vector<QPoly> acc(ca.N.size() + cb.N.size() - 1);
    for (std::size_t i = 0; i < ca.N.size(); ++i) {
        if (ca.N[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.N.size(); ++j)
            if (!cb.N[j].is_zero()) acc[i + j] += ca.N[i] * cb.N[j];
    }
    std::vector<RatFun> c;
    c.reserve(acc.size());
    for (auto& n : acc) c.emplace_back(std::move(n), D);
    return Poly<RatFun>(std::move(c));
}

bool coeff_is_atomic(const RatFun& f) {
    return f.den().degree() == 0 && f.num().degree() <= 0;
}

bool coeff_is_negative(const RatFun& f) {
    return f.den().degree() == 0 && f.num().degree() <= 0 && !f.is_zero() && f.num().leading().sign() < 0;
}

std::optional<QPoly> is_square(const QPoly& p) {
    if (p.is_zero()) return QPoly();
    auto lc_root = is_square(p.leading());
    if (!lc_root) return std::nullopt;
    QPoly root = QPoly::constant(*lc_root);
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        if (mult % 2 != 0) return std::nullopt;
        root = root * pow(factor, static_cast<unsigned>(mult / 2));
    }
    return root;
}

std::optional<RatFun> is_square(const RatFun& f) {
    auto n = is_square(f.num());
    if (!n) return std::nullopt;
    auto d = is_square(f.den());
    if (!d) return std::nullopt;
    return RatFun(*n, *d);
}

}  // namespace pellq
