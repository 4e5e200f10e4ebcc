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

#ifndef PELLQ_CLASSIFY_HPP
#define PELLQ_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pellq/contfrac.hpp"
#include "pellq/curves.hpp"
#include "pellq/pell.hpp"
#include "pellq/ratfun.hpp"

namespace pellq {

/// Asserts expr(a) / b^b_weight is an integer.
struct ConstraintItem {
    std::string label;
    RatFun expr;
    int b_weight = 0;
};

/// Integrality conditions for a family member at (a, b) to be Pellian over
/// Z[x] after a rational shift, plus the symbolic facts they came from.
struct ConstraintSet {
    int m = 0;
    std::vector<ConstraintItem> items;  // 8 r2, 8 r1, 256 r0, lead(f)
    int period_length = 0;              // generic period of sqrt(d) over Q(a)
    int quasi_index = 0;                // k of the first constant-norm convergent
    RatFun quasi_constant;              // c = p_k^2 - d q_k^2 at b = 1
    bool doubled = false;               // c is not a square in Q(a)
    int solution_degree = 0;
    std::vector<SideCondition> side_conditions;
    std::vector<Rational> degenerate_a;  // where the generic data fails to specialize
};

/// Runs the continued fraction of the order-m family over Q(a) at b = 1 and
/// assembles the four base constraints.
ConstraintSet build_constraints(int m, int cf_cutoff = kDefaultMaxStepsSymbolic);

/// Constraints at a fixed parameter a, from the concrete expansion at
/// (a, 1). Used on degeneration loci. Empty when sqrt(d) has no quasi-period.
std::optional<ConstraintSet> build_constraints_at(int m, const Rational& a, int max_steps = kDefaultMaxStepsQ);

struct BFreeCombination {
    std::vector<int> exponents;
    RatFun expr;
    bool lemma_shape = false;
};

/// Every product of constraint expressions with exponents in {0,..,3} whose
/// b-weights cancel.
std::vector<BFreeCombination> b_free_combinations(const ConstraintSet& cs);

/// The preferred combination: usable by bound_a first, then smallest
/// numerator degree, then lexicographically smallest exponents.
BFreeCombination b_free_combination(const ConstraintSet& cs);

/// True when expr = p/q with integer p, q, deg p > deg q, q(0) = 0, p(0) != 0.
bool has_lemma_shape(const RatFun& expr);

/// All a = r/s in lowest terms with s | p_n and r | p_0, both signs, for
/// expr = p/q in the shape above. Throws DomainError otherwise.
std::vector<Rational> bound_a(const RatFun& expr);

struct ValuationBox {
    Integer prime;
    long lo = 0;
    long hi = 0;
};

struct BBound {
    std::vector<ValuationBox> boxes;  // relevant primes; all others force v_p(b) = 0
                                      // (only the box with lo > hi when values is empty)
    std::vector<Rational> values;     // every b in the boxes, ascending
};

/// Per-prime interval for v_p(b) from v_p(expr(a)) - w v_p(b) >= 0 over
/// all items. Empty when some interval is empty; throws DomainError when
/// unbounded.
BBound bound_b(const ConstraintSet& cs, const Rational& a);

/// First failing constraint at (a, b), or empty when all hold.
std::optional<std::string> failed_constraint(const ConstraintSet& cs, const Rational& a, const Rational& b);

struct ShiftResult {
    int c = 0;
    QPoly d_int;
};

/// d(x + c/4) for c = 0..3; the first with integer coefficients.
std::optional<ShiftResult> shift_filter(const QPoly& d);

/// Representative of {d(+-x + k) : k in Z} with cubic coefficient in
/// {0,1,2,3}; of the two sign choices the lexicographically larger
/// coefficient tuple (cubic first) wins. poly(x) = d(sign x + shift).
struct CanonicalQuartic {
    QPoly poly;
    int sign = 1;
    Rational shift;
};

CanonicalQuartic canonicalize(const QPoly& d);

/// p(sign x + shift).
QPoly substitute_linear(const QPoly& p, int sign, const Rational& shift);

enum class CandidateStatus { sieved_out, non_squarefree, no_integral_shift, not_pellian_over_z, survivor };

std::string to_string(CandidateStatus s);

struct Witness {
    int shift_c = 0;
    QPoly shifted;                          // d(x + c/4)
    CanonicalQuartic canonical;
    PellSolution<Rational> family_solution; // in canonical coordinates
    PellSolution<Rational> minimal;         // least integral power of the minimal solution
    int power = 1;
};

struct Candidate {
    int m = 0;
    Rational a;
    Rational b;
    std::string origin = "generic";
    QPoly quartic;
    CandidateStatus status = CandidateStatus::sieved_out;
    std::string certificate;
    std::optional<Witness> witness;
};

/// Sub-search at a parameter value where the generic constraints do not
/// specialize.
struct LocusReport {
    Rational a;
    std::string outcome;
    std::optional<ConstraintSet> constraints;
    std::vector<ValuationBox> boxes;
};

struct AValuationBoxes {
    Rational a;
    std::vector<ValuationBox> boxes;
};

struct SearchOptions {
    int cf_cutoff = kDefaultMaxStepsSymbolic;
    int max_steps = kDefaultMaxStepsQ;
    int power_bound = 6;
    int workers = 1;
};

struct SearchReport {
    int m = 0;
    ConstraintSet constraints;
    BFreeCombination combination;
    std::vector<Rational> a_divisor_set;   // bound_a output
    std::vector<Rational> a_values;        // after every b-free combination is checked
    std::vector<Integer> primes;
    std::vector<AValuationBoxes> boxes;
    std::vector<LocusReport> loci;
    std::vector<Candidate> candidates;     // all enumerated pairs, sorted by (origin, a, b)
    std::vector<Candidate> survivors;      // one per canonical form

    std::size_t count(CandidateStatus s) const;
    /// Pairs passing the exact constraint re-check.
    std::size_t candidate_count() const;
};

SearchReport search_torsion(int m, const SearchOptions& opts = {});

/// Monic quartics d = D (x - a)^2 Pellian over Z[x], canonicalized.
struct NonsquarefreeCase {
    std::string shape;                 // "x^2 + s" or "x^2 + x + s"
    RatFun norm_base;                  // u(s) with lead(G_2n) = 2^(2n-1) / u^n
    std::vector<Integer> admissible_s;
    struct Root {
        Integer s;
        Integer a;
        int n = 0;  // first index with G_n(a) = 0
        QPoly d;
    };
    std::vector<Root> roots;
    std::vector<Integer> scanned_a;
};

struct NonsquarefreeReport {
    std::vector<NonsquarefreeCase> cases;
    std::vector<QPoly> quartics;  // canonical, sorted, distinct
};

NonsquarefreeReport classify_nonsquarefree(int window = 10, int n_max = 30);

/// Descending coefficient order used to sort canonical forms.
bool canonical_less(const QPoly& x, const QPoly& y);

}  // namespace pellq

#endif  // PELLQ_CLASSIFY_HPP
