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

#include "pellq/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "pellq/valuation.hpp"

namespace pellq {

namespace {

using ZVec = std::vector<Integer>;

void ztrim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(ZVec& v) {
    ztrim(v);
    if (v.empty()) return;
    Integer g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b, primitive part only.
ZVec prem_primitive(ZVec a, const ZVec& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        Integer la = a.back();
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        a.pop_back();  // cancelled by construction
        ztrim(a);
        make_primitive(a);
    }
    return a;
}

QPoly to_qpoly(const ZVec& v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return QPoly(std::move(c));
}

Integer max_norm(const ZVec& v) {
    Integer m = 0;
    for (const auto& c : v)
        if (abs(c) > m) m = abs(c);
    return m;
}

Integer eval_at(const ZVec& v, const Integer& xi) {
    Integer acc = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * xi + *it;
    return acc;
}

// Heuristic gcd of primitive integer polynomials: evaluate at a large xi,
// take the integer gcd, and read the polynomial back from its symmetric
// xi-adic digits. A candidate that divides both inputs is the gcd.
std::optional<ZVec> heuristic_gcd(const ZVec& a, const ZVec& b) {
    Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * std::max(a.size(), b.size()) > 4000000) return std::nullopt;
        Integer g;
        Integer va = eval_at(a, xi), vb = eval_at(b, xi);
        mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
        ZVec cand;
        const Integer half = xi / 2;
        while (g != 0) {
            Integer e;
            mpz_fdiv_r(e.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (e > half) e -= xi;
            cand.push_back(e);
            g = (g - e) / xi;
        }
        make_primitive(cand);
        if (!cand.empty()) {
            QPoly c = to_qpoly(cand);
            if (rem(to_qpoly(a), c).is_zero() && rem(to_qpoly(b), c).is_zero()) return cand;
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Integer> primitive_part(const QPoly& p) {
    ZVec out;
    if (p.is_zero()) return out;
    Integer l = denominator_lcm(p);
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(Integer(c.num() * (l / c.den())));
    make_primitive(out);
    return out;
}

Integer denominator_lcm(const QPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

bool is_integral(const QPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    ZVec x = primitive_part(a), y = primitive_part(b);
    if (x.size() == 1 || y.size() == 1) return QPoly::constant(Rational(1));
    if (x == y) return monic(a);
    if (auto h = heuristic_gcd(x, y)) {
        x = std::move(*h);
    } else {
        if (x.size() < y.size()) std::swap(x, y);
        while (!y.empty()) {
            ZVec r = prem_primitive(x, y);
            x = std::move(y);
            y = std::move(r);
        }
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (const auto& v : x) c.emplace_back(Rational(v, x.back()));
    return QPoly(std::move(c));
}

std::vector<Rational> rational_roots(const QPoly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::set<Rational> roots;
    ZVec z = primitive_part(p);
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) {
        roots.insert(Rational(0));
        z.erase(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (z.size() > 1) {
        std::vector<Rational> q;
        for (const auto& v : z) q.emplace_back(v);
        const QPoly reduced(q);
        for (const auto& r : divisors(z.front()))
            for (const auto& s : divisors(z.back())) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
                if (g != 1) continue;
                for (int sg : {1, -1}) {
                    Rational cand(Integer(sg * r), s);
                    if (reduced(cand).is_zero()) roots.insert(cand);
                }
            }
    }
    return {roots.begin(), roots.end()};
}

QPoly parse_poly(std::string_view text, char var) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty polynomial");

    std::map<int, Rational> acc;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> void {
        throw ParseError("cannot parse polynomial '" + std::string(text) + "': " + why + " at offset " +
                         std::to_string(i));
    };
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected digits");
        return s.substr(start, i - start);
    };

    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        if (i >= s.size()) fail("dangling sign");

        Rational coef(1);
        int degree = 0;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            Integer n(read_digits(), 10), d(1);
            if (i < s.size() && s[i] == '/') {
                ++i;
                d = Integer(read_digits(), 10);
                if (d == 0) fail("zero denominator");
            }
            coef = Rational(n, d);
            have_number = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != var) fail(std::string("expected '") + var + "'");
            }
        }
        if (i < s.size() && s[i] == var) {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                degree = std::stoi(read_digits());
            }
        } else if (!have_number) {
            fail("expected a term");
        }
        acc[degree] += sign < 0 ? -coef : coef;
    }

    int top = acc.empty() ? -1 : acc.rbegin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(top + 1), Rational(0));
    for (auto& [d, v] : acc) c[static_cast<std::size_t>(d)] = v;
    return QPoly(std::move(c));
}

}  // namespace pellq
