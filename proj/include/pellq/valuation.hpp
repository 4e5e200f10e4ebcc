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

#ifndef PELLQ_VALUATION_HPP
#define PELLQ_VALUATION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pellq/rational.hpp"

namespace pellq {

/// v_p(x) for a fixed prime p. An empty value stands for +infinity (x = 0).
struct Valuation {
    Integer prime;
    std::optional<long> value;

    bool is_infinite() const { return !value.has_value(); }
    /// |x|_p = p^(-v_p(x)); zero when infinite.
    Rational absolute() const;
};

bool is_prime(const Integer& n);

/// Throws std::invalid_argument when p is not prime.
Valuation p_adic_valuation(const Rational& x, const Integer& p);

/// Exponent of p in the nonzero integer n.
long valuation_of(const Integer& n, const Integer& p);

/// Prime factorization of |n| (n != 0) in increasing prime order.
/// Trial division, then Pollard-Brent rho on the cofactor.
std::vector<std::pair<Integer, long>> factorize(const Integer& n);

/// All positive divisors of |n|, sorted.
std::vector<Integer> divisors(const Integer& n);

}  // namespace pellq

#endif  // PELLQ_VALUATION_HPP
