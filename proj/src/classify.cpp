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

#include "pellq/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "pellq/valuation.hpp"

namespace pellq {

namespace {

std::optional<Rational> try_at(const RatFun& f, const Rational& a) {
    if (f.den()(a).is_zero()) return std::nullopt;
    return f.num()(a) / f.den()(a);
}

void add_roots(std::set<Rational>& out, const QPoly& p) {
    if (p.degree() <= 0) return;
    for (const auto& r : rational_roots(p)) out.insert(r);
}

Rational floor_of(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return Rational(f);
}

long floor_div(long n, long d) {
    long q = n / d;
    return (n % d != 0 && ((n < 0) != (d < 0))) ? q - 1 : q;
}

long ceil_div(long n, long d) { return -floor_div(-n, d); }

std::vector<Rational> desc(const QPoly& p) {
    std::vector<Rational> out(p.coeffs().rbegin(), p.coeffs().rend());
    return out;
}

std::vector<ConstraintItem> base_items(const RatFun& r2, const RatFun& r1, const RatFun& r0, const RatFun& lead,
                                       int deg_f) {
    return {{"8 r2", RatFun(8) * r2, 2},
            {"8 r1", RatFun(8) * r1, 3},
            {"256 r0", RatFun(256) * r0, 4},
            {"lead f", lead, -deg_f}};
}

// (k, c, lead p_k, deg p_k) of the first quasi-period read off an expansion.
template <class F>
struct QuasiData {
    int k = 0;
    F c;
    F lead_p;
    int deg_p = 0;
};

template <class F>
std::optional<QuasiData<F>> quasi_from_cf(const CFExpansion<F>& cf) {
    F lead = cf.a0.leading();
    int deg = cf.a0.degree();
    for (std::size_t k = 0; k + 1 < cf.states.size(); ++k) {
        if (k > 0) {
            lead = lead * cf.partial_quotients[k - 1].leading();
            deg += cf.partial_quotients[k - 1].degree();
        }
        const auto& Q = cf.states[k + 1].Q;
        if (Q.degree() == 0) {
            F c = Q.leading();
            if (k % 2 == 0) c = -c;
            return QuasiData<F>{static_cast<int>(k), c, lead, deg};
        }
    }
    return std::nullopt;
}

// lead(f) and deg f of the unit solution built from the quasi-period:
// lead(p)/sqrt(c) directly, or 2 lead(p)^2 / c after doubling.
template <class F>
std::pair<F, int> solution_lead(const QuasiData<F>& q, bool doubled) {
    if (doubled) return {F(2) * q.lead_p * q.lead_p / q.c, 2 * q.deg_p};
    auto root = is_square(q.c);
    if (!root) throw DomainError("quasi-period constant is not a square");
    return {q.lead_p / *root, q.deg_p};
}

// The convergent at index k of sqrt(d) with its constant norm.
QuasiPeriod<Rational> quasi_period_at(const QPoly& d, int k) {
    CFExpansion<Rational> cf = cf_expand(d, k + 1);
    if (static_cast<int>(cf.states.size()) < k + 2)
        throw std::logic_error("expansion of " + to_string(d) + " ended before index " + std::to_string(k));
    const QPoly& Q = cf.states[static_cast<std::size_t>(k + 1)].Q;
    if (Q.degree() != 0)
        throw std::logic_error("convergent " + std::to_string(k) + " of " + to_string(d) + " has nonconstant norm");
    auto [p, q] = convergents(cf, k);
    Rational c = Q.leading();
    if (k % 2 == 0) c = -c;
    return QuasiPeriod<Rational>{k, p, q, c};
}

bool better(const BFreeCombination& x, const BFreeCombination& y) {
    if (x.lemma_shape != y.lemma_shape) return x.lemma_shape;
    if (x.expr.num().degree() != y.expr.num().degree()) return x.expr.num().degree() < y.expr.num().degree();
    return x.exponents < y.exponents;
}

struct WorkItem {
    Rational a;
    Rational b;
    std::string origin;
    const ConstraintSet* cs = nullptr;
};

std::string shift_certificate(const QPoly& d) {
    std::string s = "d(x + c/4) has coefficient denominators";
    for (int c = 0; c < 4; ++c)
        s += (c ? ", " : " ") + std::to_string(c) + ": " + denominator_lcm(shift(d, Rational(c, 4))).get_str();
    return s;
}

Candidate evaluate(const WorkItem& w, const SearchOptions& opts) {
    Candidate cand;
    cand.m = w.cs->m;
    cand.a = w.a;
    cand.b = w.b;
    cand.origin = w.origin;
    if (auto fail = failed_constraint(*w.cs, w.a, w.b)) {
        cand.status = CandidateStatus::sieved_out;
        cand.certificate = *fail;
        try {
            cand.quartic = family_quartic(family(cand.m), w.a, w.b);
        } catch (const DomainError&) {
        }
        return cand;
    }
    cand.quartic = family_quartic(family(cand.m), w.a, w.b);
    const QPoly& d = cand.quartic;
    QPoly g = gcd(d, derivative(d));
    if (g.degree() > 0) {
        cand.status = CandidateStatus::non_squarefree;
        cand.certificate = "gcd(d, d') = " + to_string(g);
        return cand;
    }
    auto sh = shift_filter(d);
    if (!sh) {
        cand.status = CandidateStatus::no_integral_shift;
        cand.certificate = shift_certificate(d);
        return cand;
    }
    CanonicalQuartic can = canonicalize(sh->d_int);
    IntegralityResult integ = is_pellian_over_Z(can.poly, opts.power_bound, opts.max_steps);
    if (integ.verdict != IntegralityVerdict::integral) {
        cand.status = CandidateStatus::not_pellian_over_z;
        cand.certificate = "canonical form " + to_string(can.poly) + ": " + to_string(integ.verdict) +
                           " (power bound " + std::to_string(opts.power_bound) + ")";
        return cand;
    }
    Witness wit;
    wit.shift_c = sh->c;
    wit.shifted = sh->d_int;
    wit.canonical = can;
    wit.minimal = *integ.solution;
    wit.power = integ.power;
    // Family solution at (a, b), carried to canonical coordinates.
    QuasiPeriod<Rational> qp = quasi_period_at(d, w.cs->quasi_index);
    PellSolution<Rational> fam = solution_from_quasi_period(qp, d, w.cs->doubled);
    const Rational offset = can.shift + Rational(sh->c, 4);
    PellSolution<Rational> moved{substitute_linear(fam.f, can.sign, offset),
                                 substitute_linear(fam.g, can.sign, offset), fam.constant, fam.index, can.poly};
    detail::normalize_signs(moved);
    detail::verify(moved);
    wit.family_solution = moved;
    cand.status = CandidateStatus::survivor;
    cand.certificate = "f, g in Z[x] at power " + std::to_string(integ.power);
    cand.witness = std::move(wit);
    return cand;
}

std::vector<Candidate> run_pool(const std::vector<WorkItem>& work, const SearchOptions& opts) {
    std::vector<Candidate> out(work.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (std::size_t i = next++; i < work.size(); i = next++) {
            try {
                out[i] = evaluate(work[i], opts);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(opts.workers, static_cast<int>(work.size())));
    std::vector<std::thread> threads;
    for (int t = 1; t < n; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace

ConstraintSet build_constraints(int m, int cf_cutoff) {
    const ParamFamily& fam = family(m);
    const Poly<RatFun> D = family_quartic_symbolic(fam);
    CFExpansion<RatFun> cf = cf_expand(D, cf_cutoff);
    auto q = quasi_from_cf(cf);
    if (!q) throw DomainError("no quasi-period for m = " + std::to_string(m) + " within " +
                              std::to_string(cf_cutoff) + " steps");
    ConstraintSet cs;
    cs.m = m;
    cs.period_length = cf.period ? cf.period->length : 0;
    cs.quasi_index = q->k;
    cs.quasi_constant = q->c;
    cs.doubled = !is_square(q->c).has_value();
    auto [lead, deg_f] = solution_lead(*q, cs.doubled);
    cs.solution_degree = deg_f;
    cs.items = base_items(fam.r2, fam.r1, fam.r0, lead, deg_f);
    cs.side_conditions = cf.side_conditions;

    std::set<Rational> degenerate;
    for (const auto& sc : cf.side_conditions)
        for (const auto& r : sc.rational_roots) degenerate.insert(r);
    for (const RatFun* r : {&fam.r2, &fam.r1, &fam.r0}) add_roots(degenerate, r->den());
    for (const RatFun* r : {&q->c, &lead}) {
        add_roots(degenerate, r->num());
        add_roots(degenerate, r->den());
    }
    cs.degenerate_a.assign(degenerate.begin(), degenerate.end());
    return cs;
}

std::optional<ConstraintSet> build_constraints_at(int m, const Rational& a, int max_steps) {
    const ParamFamily& fam = family(m);
    const QPoly d = family_quartic(fam, a, Rational(1));
    CFExpansion<Rational> cf = cf_expand(d, max_steps);
    auto q = quasi_from_cf(cf);
    if (!q) return std::nullopt;
    ConstraintSet cs;
    cs.m = m;
    cs.period_length = cf.period ? cf.period->length : 0;
    cs.quasi_index = q->k;
    cs.quasi_constant = RatFun(q->c);
    cs.doubled = !is_square(q->c).has_value();
    auto [lead, deg_f] = solution_lead(*q, cs.doubled);
    cs.solution_degree = deg_f;
    cs.items = base_items(RatFun(fam.r2.at(a)), RatFun(fam.r1.at(a)), RatFun(fam.r0.at(a)), RatFun(lead), deg_f);
    return cs;
}

std::vector<BFreeCombination> b_free_combinations(const ConstraintSet& cs) {
    const std::size_t n = cs.items.size();
    std::vector<BFreeCombination> out;
    std::vector<int> e(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && e[i] == 3) e[i++] = 0;
        if (i == n) break;
        ++e[i];
        int weight = 0;
        for (std::size_t j = 0; j < n; ++j) weight += e[j] * cs.items[j].b_weight;
        if (weight != 0) continue;
        RatFun expr(1);
        for (std::size_t j = 0; j < n; ++j)
            if (e[j] > 0) expr *= cs.items[j].expr.pow(e[j]);
        out.push_back({e, expr, has_lemma_shape(expr)});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.exponents < y.exponents; });
    return out;
}

BFreeCombination b_free_combination(const ConstraintSet& cs) {
    auto all = b_free_combinations(cs);
    if (all.empty()) throw DomainError("no b-free combination for m = " + std::to_string(cs.m));
    return *std::min_element(all.begin(), all.end(), better);
}

bool has_lemma_shape(const RatFun& expr) {
    const QPoly &p = expr.num(), &q = expr.den();
    return !p.is_zero() && p.degree() > q.degree() && q.coeff(0).is_zero() && !p.coeff(0).is_zero();
}

std::vector<Rational> bound_a(const RatFun& expr) {
    if (!has_lemma_shape(expr))
        throw DomainError("combination " + expr.to_string() + " is not of the form p/q with deg p > deg q, q(0) = 0");
    // expr = (u/v) Np / Dp with Np, Dp primitive integer polynomials.
    std::vector<Integer> np = primitive_part(expr.num()), dp = primitive_part(expr.den());
    Rational u = expr.num().leading() / Rational(np.back()) * Rational(dp.back()) / expr.den().leading();
    const Integer pn = u.num() * np.back(), p0 = u.num() * np.front();
    std::set<Rational> out;
    for (const auto& r : divisors(p0))
        for (const auto& s : divisors(pn)) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
            if (g != 1) continue;
            out.insert(Rational(r, s));
            out.insert(Rational(Integer(-r), s));
        }
    return {out.begin(), out.end()};
}

BBound bound_b(const ConstraintSet& cs, const Rational& a) {
    std::vector<std::pair<Rational, int>> vals;
    for (const auto& it : cs.items) {
        auto v = try_at(it.expr, a);
        if (!v) throw DomainError("constraint " + it.label + " has a pole at a = " + a.to_string());
        if (!v->is_zero() && it.b_weight != 0) vals.emplace_back(*v, it.b_weight);
    }
    bool pos = false, neg = false;
    for (const auto& [v, w] : vals) (w > 0 ? pos : neg) = true;
    if (!pos || !neg) throw DomainError("v_p(b) is unbounded at a = " + a.to_string());

    std::set<Integer> primes;
    for (const auto& [v, w] : vals)
        for (const Integer& n : {v.num(), v.den()})
            if (abs(n) > 1)
                for (const auto& [p, e] : factorize(n)) primes.insert(p);

    BBound out;
    for (const auto& p : primes) {
        long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
        for (const auto& [v, w] : vals) {
            long e = *p_adic_valuation(v, p).value;
            if (w > 0)
                hi = std::min(hi, floor_div(e, w));
            else
                lo = std::max(lo, ceil_div(-e, -w));
        }
        // The contradictory box alone is kept as the certificate.
        if (lo > hi) return BBound{{{p, lo, hi}}, {}};
        out.boxes.push_back({p, lo, hi});
    }
    // Primes outside the set need v_p(b) in [0, 0]; the unit sign is free.
    std::vector<Rational> mags{Rational(1)};
    for (const auto& box : out.boxes) {
        std::vector<Rational> next;
        for (const auto& x : mags)
            for (long e = box.lo; e <= box.hi; ++e) next.push_back(x * Rational(box.prime).pow(e));
        mags = std::move(next);
    }
    for (const auto& x : mags) {
        out.values.push_back(x);
        out.values.push_back(-x);
    }
    std::sort(out.values.begin(), out.values.end());
    return out;
}

std::optional<std::string> failed_constraint(const ConstraintSet& cs, const Rational& a, const Rational& b) {
    for (const auto& it : cs.items) {
        auto v = try_at(it.expr, a);
        if (!v) return it.label + " has a pole at a = " + a.to_string();
        Rational x = *v / b.pow(it.b_weight);
        if (!x.is_integer()) return it.label + " / b^" + std::to_string(it.b_weight) + " = " + x.to_string();
    }
    return std::nullopt;
}

std::optional<ShiftResult> shift_filter(const QPoly& d) {
    for (int c = 0; c < 4; ++c) {
        QPoly s = shift(d, Rational(c, 4));
        if (is_integral(s)) return ShiftResult{c, s};
    }
    return std::nullopt;
}

QPoly substitute_linear(const QPoly& p, int sign, const Rational& shift_by) {
    return scale_arg(shift(p, shift_by), Rational(sign));
}

bool canonical_less(const QPoly& x, const QPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return desc(x) < desc(y);
}

CanonicalQuartic canonicalize(const QPoly& d) {
    if (d.degree() < 1) throw DomainError("canonical form of a constant");
    std::optional<CanonicalQuartic> best;
    for (int sign : {1, -1}) {
        QPoly e = scale_arg(d, Rational(sign));
        const int n = d.degree();
        // Cubic-type coefficient below the leading term fixed to [0, n).
        Rational k = -floor_of(e.coeff(n - 1) / (e.leading() * Rational(n)));
        QPoly poly = shift(e, k);
        CanonicalQuartic c{poly, sign, Rational(sign) * k};
        if (!best || canonical_less(best->poly, poly)) best = c;
    }
    return *best;
}

std::string to_string(CandidateStatus s) {
    switch (s) {
        case CandidateStatus::sieved_out: return "sieved_out";
        case CandidateStatus::non_squarefree: return "non_squarefree";
        case CandidateStatus::no_integral_shift: return "no_integral_shift";
        case CandidateStatus::not_pellian_over_z: return "not_pellian_over_z";
        case CandidateStatus::survivor: return "survivor";
    }
    return "unknown";
}

std::size_t SearchReport::count(CandidateStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(candidates.begin(), candidates.end(), [s](const Candidate& c) { return c.status == s; }));
}

std::size_t SearchReport::candidate_count() const { return candidates.size() - count(CandidateStatus::sieved_out); }

SearchReport search_torsion(int m, const SearchOptions& opts) {
    require_supported_order(m);
    const ParamFamily& fam = family(m);
    SearchReport rep;
    rep.m = m;
    rep.constraints = build_constraints(m, opts.cf_cutoff);
    const ConstraintSet& cs = rep.constraints;
    const auto combos = b_free_combinations(cs);
    rep.combination = b_free_combination(cs);
    rep.a_divisor_set = bound_a(rep.combination.expr);

    // Degeneration loci with a square-free member get their own constraints.
    std::set<Rational> sub_searched;
    std::vector<std::pair<Rational, const ConstraintSet*>> locus_sets;
    for (const auto& a : cs.degenerate_a) {
        LocusReport loc;
        loc.a = a;
        QPoly d1;
        try {
            d1 = family_quartic(fam, a, Rational(1));
        } catch (const DomainError&) {
            loc.outcome = "family undefined";
            rep.loci.push_back(std::move(loc));
            continue;
        }
        if (!is_squarefree(d1)) {
            loc.outcome = "non-square-free for every b";
            rep.loci.push_back(std::move(loc));
            continue;
        }
        sub_searched.insert(a);
        loc.constraints = build_constraints_at(m, a, opts.max_steps);
        if (!loc.constraints) {
            loc.outcome = "no quasi-period within " + std::to_string(opts.max_steps) + " steps";
        } else {
            BBound bb = bound_b(*loc.constraints, a);
            loc.boxes = bb.boxes;
            loc.outcome = std::to_string(bb.values.size()) + " values of b";
        }
        rep.loci.push_back(std::move(loc));
    }

    std::vector<WorkItem> work;
    std::set<Integer> primes;
    for (const auto& a : rep.a_divisor_set) {
        if (sub_searched.count(a)) continue;
        bool ok = std::all_of(combos.begin(), combos.end(), [&](const BFreeCombination& c) {
            auto v = try_at(c.expr, a);
            return v && v->is_integer();
        });
        if (!ok) continue;
        rep.a_values.push_back(a);
        BBound bb = bound_b(cs, a);
        for (const auto& box : bb.boxes) primes.insert(box.prime);
        rep.boxes.push_back({a, bb.boxes});
        for (const auto& b : bb.values) work.push_back({a, b, "generic", &cs});
    }
    for (const auto& loc : rep.loci) {
        if (!loc.constraints) continue;
        for (const auto& b : bound_b(*loc.constraints, loc.a).values)
            work.push_back({loc.a, b, "locus a = " + loc.a.to_string(), &*loc.constraints});
    }
    rep.primes.assign(primes.begin(), primes.end());

    rep.candidates = run_pool(work, opts);
    std::stable_sort(rep.candidates.begin(), rep.candidates.end(), [](const Candidate& x, const Candidate& y) {
        if (x.origin != y.origin) return x.origin < y.origin;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    std::map<std::string, Candidate> distinct;
    for (const auto& c : rep.candidates)
        if (c.status == CandidateStatus::survivor) distinct.emplace(to_string(c.witness->canonical.poly), c);
    for (auto& [key, c] : distinct) rep.survivors.push_back(c);
    std::sort(rep.survivors.begin(), rep.survivors.end(), [](const Candidate& x, const Candidate& y) {
        return canonical_less(x.witness->canonical.poly, y.witness->canonical.poly);
    });
    return rep;
}

}  // namespace pellq
