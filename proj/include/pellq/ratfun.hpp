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

#ifndef PELLQ_RATFUN_HPP
#define PELLQ_RATFUN_HPP

#include <optional>
#include <string>

#include "pellq/poly.hpp"
#include "pellq/rational.hpp"

namespace pellq {

/// Element of the rational function field Q(a). Numerator and denominator
/// are coprime and the denominator is monic, so equal values have equal
/// representations.
class RatFun {
public:
    RatFun() : den_(QPoly::constant(Rational(1))) {}
    RatFun(long c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFun(int c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c)  // NOLINT(google-explicit-constructor)
        : num_(QPoly::constant(c)), den_(QPoly::constant(Rational(1))) {}
    explicit RatFun(QPoly num) : num_(std::move(num)), den_(QPoly::constant(Rational(1))) {}
    RatFun(QPoly num, QPoly den);

    /// The indeterminate a.
    static RatFun variable() { return RatFun(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// A constant of Q (no dependence on a).
    bool is_rational() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational as_rational() const;

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o) { return *this += -o; }
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
    friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
    friend RatFun operator*(RatFun x, const RatFun& y) { return x *= y; }
    friend RatFun operator/(RatFun x, const RatFun& y) { return x /= y; }
    friend bool operator==(const RatFun& x, const RatFun& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    RatFun inverse() const;
    RatFun pow(long e) const;

    /// Value at a = t. Throws DomainError on a pole.
    Rational at(const Rational& t) const;

    std::string to_string(std::string_view var = "a") const;

private:
    QPoly num_;
    QPoly den_;
};

/// Square root in Q(a) when one exists, found through square-free
/// decomposition of numerator and denominator.
std::optional<RatFun> is_square(const RatFun& f);

/// Square root of a polynomial in Q[x] when it is a perfect square.
std::optional<QPoly> is_square(const QPoly& p);

/// Products over Q(a) clear denominators first, multiply in Q[a][x], and
/// normalize each coefficient once.
template <>
struct PolyMulHook<RatFun> {
    static constexpr bool enabled = true;
    static Poly<RatFun> mul(const Poly<RatFun>& a, const Poly<RatFun>& b);
};

inline std::string coeff_to_string(const RatFun& f) { return f.to_string(); }
bool coeff_is_atomic(const RatFun& f);
bool coeff_is_negative(const RatFun& f);

}  // namespace pellq

#endif  // PELLQ_RATFUN_HPP
