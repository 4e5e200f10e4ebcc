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

#include "pellq/valuation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pellq/errors.hpp"

namespace pellq {

Rational Valuation::absolute() const {
    if (is_infinite()) return Rational(0);
    return Rational(prime).pow(-*value);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

long valuation_of(const Integer& n, const Integer& p) {
    if (n == 0) throw DomainError("valuation of zero integer");
    Integer m = n;
    long v = 0;
    v = static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
    return v;
}

Valuation p_adic_valuation(const Rational& x, const Integer& p) {
    if (!is_prime(p)) throw std::invalid_argument("valuation base " + p.get_str() + " is not prime");
    if (x.is_zero()) return {p, std::nullopt};
    return {p, valuation_of(x.num(), p) - valuation_of(x.den(), p)};
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
        unsigned long r = 1, m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(Integer(x - y))) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(Integer(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const Integer& n, std::map<Integer, long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers defeat rho quickly, peel them first
    for (unsigned long k = 64; k >= 2; --k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
            std::map<Integer, long> sub;
            split(root, sub);
            for (auto& [p, e] : sub) out[p] += e * static_cast<long>(k);
            return;
        }
    }
    Integer d = pollard_brent(n);
    split(d, out);
    split(Integer(n / d), out);
}

}  // namespace

std::vector<std::pair<Integer, long>> factorize(const Integer& n) {
    if (n == 0) throw DomainError("factorization of zero");
    Integer m = abs(n);
    std::map<Integer, long> acc;
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
            Integer pp(p);
            acc[pp] += static_cast<long>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t()));
        }
    }
    split(m, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t base = ds.size();
        Integer pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace pellq
