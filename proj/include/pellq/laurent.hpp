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

#ifndef PELLQ_LAURENT_HPP
#define PELLQ_LAURENT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "pellq/errors.hpp"
#include "pellq/poly.hpp"

namespace pellq {

/// Truncated Laurent series in x^-1: sum over n <= N of h_n x^n, with every
/// coefficient from degree N down to lowest_known() exact and nothing below
/// it known. Arithmetic shrinks the window to what is still guaranteed.
template <class F>
class LaurentSeries {
public:
    /// The series known to be zero down to (and including) degree `lowest`.
    static LaurentSeries zero(int lowest) { return LaurentSeries(lowest, {}); }

    /// `descending` holds the coefficients of x^top, x^(top-1), ...
    LaurentSeries(int top, const std::vector<F>& descending)
        : low_(top - static_cast<int>(descending.size()) + 1),
          asc_(descending.rbegin(), descending.rend()) {
        trim();
    }

    /// A polynomial known exactly down to degree deg(p) - precision + 1.
    static LaurentSeries from_poly(const Poly<F>& p, int precision) {
        const int top = std::max(p.degree(), 0);
        std::vector<F> desc;
        for (int n = top; n > top - precision; --n) desc.push_back(p.coeff(n));
        return LaurentSeries(top, desc);
    }

    bool is_zero() const { return asc_.empty(); }
    /// Degree N of the leading nonzero term (lowest_known() - 1 for zero).
    int top_degree() const { return low_ + static_cast<int>(asc_.size()) - 1; }
    int lowest_known() const { return low_; }
    /// Number of known terms from the leading term down.
    int precision() const { return static_cast<int>(asc_.size()); }

    F coeff(int n) const {
        if (n < low_)
            throw PrecisionError("coefficient of x^" + std::to_string(n) + " lies below the known window (x^" +
                                 std::to_string(low_) + ")");
        if (n > top_degree()) return F(0);
        return asc_[static_cast<std::size_t>(n - low_)];
    }
    /// Known coefficients from the top down.
    std::vector<F> coefficients() const { return {asc_.rbegin(), asc_.rend()}; }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.asc_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = std::max(a.low_, b.low_);
        const int top = std::max(a.top_degree(), b.top_degree());
        std::vector<F> asc;
        for (int n = low; n <= top; ++n) asc.push_back(a.coeff(n) + b.coeff(n));
        return LaurentSeries(low, std::move(asc), 0);
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = std::max(a.low_ + b.top_degree(), b.low_ + a.top_degree());
        if (a.is_zero() || b.is_zero()) return zero(low);
        const int top = a.top_degree() + b.top_degree();
        std::vector<F> asc(static_cast<std::size_t>(std::max(top - low + 1, 0)), F(0));
        for (int i = a.low_; i <= a.top_degree(); ++i)
            for (int j = b.low_; j <= b.top_degree(); ++j)
                if (i + j >= low) asc[static_cast<std::size_t>(i + j - low)] += a.coeff(i) * b.coeff(j);
        return LaurentSeries(low, std::move(asc), 0);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const F& s) {
        LaurentSeries r = a;
        for (auto& c : r.asc_) c *= s;
        r.trim();
        return r;
    }

    /// Multiplicative inverse with the same relative precision.
    LaurentSeries inverse() const {
        if (is_zero()) throw PrecisionError("inverse of a series with no known nonzero term");
        const int t = top_degree(), p = precision();
        const F lead_inv = F(1) / coeff(t);
        std::vector<F> desc;  // desc[k] = coefficient of x^(-t-k)
        for (int k = 0; k < p; ++k) {
            if (k == 0) {
                desc.push_back(lead_inv);
                continue;
            }
            F acc(0);
            for (int j = 1; j <= k; ++j) acc += coeff(t - j) * desc[static_cast<std::size_t>(k - j)];
            desc.push_back(-(acc * lead_inv));
        }
        return LaurentSeries(-t, desc);
    }

    friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inverse(); }

private:
    LaurentSeries(int low, std::vector<F> asc, int /*ascending tag*/) : low_(low), asc_(std::move(asc)) { trim(); }

    void trim() {
        while (!asc_.empty() && asc_.back().is_zero()) asc_.pop_back();
    }

    int low_;
    std::vector<F> asc_;
};

/// floor(h): the polynomial formed by the terms of nonnegative degree.
template <class F>
Poly<F> principal_part(const LaurentSeries<F>& h) {
    if (h.lowest_known() > 0)
        throw PrecisionError("principal part needs coefficients down to x^0, window ends at x^" +
                             std::to_string(h.lowest_known()));
    std::vector<F> asc;
    for (int n = 0; n <= h.top_degree(); ++n) asc.push_back(h.coeff(n));
    return Poly<F>(std::move(asc));
}

/// Series square root of a monic polynomial of even degree 2m, from the
/// coefficient recursion of s^2 = d. The result has top degree m, leading
/// coefficient 1 and `precision` known terms.
template <class F>
LaurentSeries<F> sqrt_series(const Poly<F>& d, int precision) {
    if (d.is_zero()) throw DomainError("square root of the zero polynomial");
    if (d.degree() % 2 != 0) throw DomainError("square root series needs an even-degree radicand");
    if (!(d.leading() == F(1))) throw DomainError("square root series needs a monic radicand");
    if (precision < 1) throw DomainError("precision must be positive");
    const int m = d.degree() / 2;
    std::vector<F> s;  // s[k] = coefficient of x^(m-k)
    s.reserve(static_cast<std::size_t>(precision));
    s.push_back(F(1));
    const F half = F(1) / F(2);
    for (int k = 1; k < precision; ++k) {
        F acc = d.coeff(2 * m - k);
        for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
        s.push_back(acc * half);
    }
    return LaurentSeries<F>(m, s);
}

}  // namespace pellq

#endif  // PELLQ_LAURENT_HPP
