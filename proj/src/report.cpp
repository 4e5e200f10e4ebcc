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

#include "pellq/report.hpp"

#include <algorithm>
#include <set>

namespace pellq {

namespace {

using Json = nlohmann::ordered_json;

Json header(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

std::string str(const QPoly& p) { return to_string(p); }
std::string str(const Rational& q) { return q.to_string(); }

template <class T>
Json str_list(const std::vector<T>& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if constexpr (std::is_same_v<T, Integer>)
            out.push_back(x.get_str());
        else
            out.push_back(str(x));
    }
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

Json solution_json(const PellSolution<Rational>& s) {
    Json j;
    j["f"] = str(s.f);
    j["g"] = str(s.g);
    j["constant"] = str(s.constant);
    j["index"] = s.index;
    return j;
}

Json boxes_json(const std::vector<ValuationBox>& boxes) {
    Json out = Json::array();
    for (const auto& b : boxes) out.push_back(Json{{"p", b.prime.get_str()}, {"lo", b.lo}, {"hi", b.hi}});
    return out;
}

std::string boxes_text(const std::vector<ValuationBox>& boxes) {
    std::vector<std::string> parts;
    for (const auto& b : boxes) {
        std::string v = "v_" + b.prime.get_str() + "(b)";
        parts.push_back(b.lo > b.hi ? v + " <= " + std::to_string(b.hi) + " and >= " + std::to_string(b.lo) + ": no b"
                                    : v + " in [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]");
    }
    return parts.empty() ? "b = +-1" : join(parts, ", ");
}

std::string quotient_list(const CFExpansion<Rational>& cf) {
    std::vector<std::string> q;
    const int start = cf.period ? cf.period->start : -1;
    const int n = static_cast<int>(cf.partial_quotients.size());
    for (int k = 1; k <= n; ++k) {
        std::string s = str(cf.quotient(k));
        if (k == start) s = "(" + s;
        q.push_back(s);
    }
    std::string body = join(q, ", ");
    if (cf.period) body += ")";
    if (cf.truncated) body += ", ...";
    return "[" + str(cf.a0) + "; " + body + "]";
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "tsv") return Format::tsv;
    if (name == "text") return Format::text;
    throw ParseError("unknown format '" + std::string(name) + "' (expected json, tsv or text)");
}

std::string render(const Report& r, Format f) {
    switch (f) {
        case Format::json: return r.body.dump(2) + "\n";
        case Format::tsv: {
            std::string s;
            for (const auto& row : r.table) s += join(row, "\t") + "\n";
            return s;
        }
        case Format::text: {
            std::string s;
            for (const auto& line : r.lines) s += line + "\n";
            return s;
        }
    }
    return {};
}

Report cf_report(const CFExpansion<Rational>& cf) {
    Report r;
    r.body = header("cf");
    r.body["d"] = str(cf.d);
    r.body["a0"] = str(cf.a0);
    Json quotients = Json::array();
    for (int k = 0; k <= static_cast<int>(cf.partial_quotients.size()); ++k) quotients.push_back(str(cf.quotient(k)));
    r.body["quotients"] = quotients;
    if (cf.period) {
        r.body["period"] = Json{{"start", cf.period->start}, {"length", cf.period->length}};
        r.body["abel_check"] = abel_check(cf);
    } else {
        r.body["period"] = nullptr;
        r.body["abel_check"] = nullptr;
    }
    r.body["truncated"] = cf.truncated;

    r.table.push_back({"k", "a_k", "P_k", "Q_k"});
    for (std::size_t k = 0; k < cf.states.size(); ++k) {
        std::string a = k <= cf.partial_quotients.size() ? str(cf.quotient(static_cast<int>(k))) : "";
        r.table.push_back({std::to_string(k), a, str(cf.states[k].P), str(cf.states[k].Q)});
    }

    r.lines.push_back("d: " + str(cf.d));
    r.lines.push_back("sqrt(d) = " + quotient_list(cf));
    if (cf.period) {
        r.lines.push_back("period: " + std::to_string(cf.period->length) + " (from index " +
                          std::to_string(cf.period->start) + ")");
        r.lines.push_back(std::string("Abel check: ") + (abel_check(cf) ? "pass" : "fail"));
    } else {
        r.lines.push_back("period: not found within " + std::to_string(cf.partial_quotients.size()) + " steps");
    }
    return r;
}

Report pell_report(const QPoly& d, const IntegralityResult& res, int power_bound) {
    Report r;
    r.body = header("pell");
    r.body["d"] = str(d);
    r.body["verdict"] = to_string(res.verdict);
    r.body["pellian_over_Z"] = res.verdict == IntegralityVerdict::integral;
    r.body["power_bound"] = power_bound;
    r.body["minimal"] = res.minimal ? solution_json(*res.minimal) : Json(nullptr);
    r.body["integral"] = res.solution ? solution_json(*res.solution) : Json(nullptr);

    r.table.push_back({"key", "value"});
    r.table.push_back({"d", str(d)});
    r.table.push_back({"verdict", to_string(res.verdict)});
    if (res.minimal) {
        r.table.push_back({"f1", str(res.minimal->f)});
        r.table.push_back({"g1", str(res.minimal->g)});
        r.table.push_back({"constant", str(res.minimal->constant)});
    }
    if (res.solution) {
        r.table.push_back({"power", std::to_string(res.power)});
        r.table.push_back({"f", str(res.solution->f)});
        r.table.push_back({"g", str(res.solution->g)});
    }

    r.lines.push_back("d: " + str(d));
    if (res.minimal) {
        r.lines.push_back("minimal solution over Q:");
        r.lines.push_back("  f = " + str(res.minimal->f));
        r.lines.push_back("  g = " + str(res.minimal->g));
    }
    switch (res.verdict) {
        case IntegralityVerdict::integral:
            r.lines.push_back("Pellian over Z[x]: yes (power " + std::to_string(res.power) + ")");
            if (res.power != 1) {
                r.lines.push_back("  f = " + str(res.solution->f));
                r.lines.push_back("  g = " + str(res.solution->g));
            }
            break;
        case IntegralityVerdict::absent_at_bound:
            r.lines.push_back("Pellian over Z[x]: no power up to " + std::to_string(power_bound) + " is integral");
            break;
        case IntegralityVerdict::no_period:
            r.lines.push_back("Pellian over Z[x]: inconclusive, no quasi-period within the step cutoff");
            break;
    }
    return r;
}

Report jacobian_report(const QPoly& d, int max_steps) {
    if (d.degree() != 4 || !d.leading().is_one()) throw DomainError("expected a monic quartic, got " + str(d));
    const QPoly dep = depress(d);
    auto [E, P] = adams_razar_curve(dep);
    auto order = torsion_order(P);
    PeriodTorsion pt = check_period_torsion(d, max_steps);

    Report r;
    r.body = header("jacobian");
    r.body["d"] = str(d);
    r.body["depressed"] = str(dep);
    r.body["curve"] = Json{{"A", str(E.A)}, {"B", str(E.B)}};
    r.body["point"] = Json{{"x", str(P.x)}, {"y", str(P.y)}};
    r.body["torsion_order"] = order ? Json(*order) : Json(nullptr);
    r.body["period"] = pt.n;
    r.body["consistent"] = pt.consistent;

    r.table = {{"key", "value"},
               {"d", str(d)},
               {"depressed", str(dep)},
               {"A", str(E.A)},
               {"B", str(E.B)},
               {"x", str(P.x)},
               {"y", str(P.y)},
               {"torsion_order", order ? std::to_string(*order) : "infinite"},
               {"period", std::to_string(pt.n)},
               {"consistent", pt.consistent ? "yes" : "no"}};

    r.lines.push_back("d: " + str(d));
    r.lines.push_back("depressed: " + str(dep));
    r.lines.push_back("Jacobian: y^2 = x^3 + (" + str(E.A) + ") x + (" + str(E.B) + ")");
    r.lines.push_back("point: (" + str(P.x) + ", " + str(P.y) + ")");
    r.lines.push_back("torsion order: " + (order ? std::to_string(*order) : std::string("infinite")));
    r.lines.push_back("period: " + std::to_string(pt.n) + (pt.consistent ? " (consistent)" : " (inconsistent)"));
    return r;
}

Report family_report(int m, const Rational& a, const Rational& b) {
    const ParamFamily& fam = family(m);
    const QPoly d = family_quartic(fam, a, b);
    Report r;
    r.body = header("family");
    r.body["m"] = m;
    r.body["a"] = str(a);
    r.body["b"] = str(b);
    r.body["r2"] = fam.r2.to_string();
    r.body["r1"] = fam.r1.to_string();
    r.body["r0"] = fam.r0.to_string();
    r.body["quartic"] = str(d);
    r.table = {{"m", "a", "b", "quartic"}, {std::to_string(m), str(a), str(b), str(d)}};
    r.lines.push_back("order " + std::to_string(m) + ": r2 = " + fam.r2.to_string() + ", r1 = " + fam.r1.to_string() +
                      ", r0 = " + fam.r0.to_string());
    r.lines.push_back("d(x) at a = " + str(a) + ", b = " + str(b) + ": " + str(d));
    return r;
}

Report search_report(const SearchReport& rep) {
    const ConstraintSet& cs = rep.constraints;
    Report r;
    r.body = header("search");
    r.body["m"] = rep.m;

    Json cons;
    Json items = Json::array();
    for (const auto& it : cs.items)
        items.push_back(Json{{"label", it.label}, {"expr", it.expr.to_string()}, {"b_weight", it.b_weight}});
    cons["items"] = items;
    cons["period_length"] = cs.period_length;
    cons["quasi_index"] = cs.quasi_index;
    cons["quasi_constant"] = cs.quasi_constant.to_string();
    cons["doubled"] = cs.doubled;
    cons["solution_degree"] = cs.solution_degree;
    cons["degenerate_a"] = str_list(cs.degenerate_a);
    r.body["constraints"] = cons;

    r.body["combination"] = Json{{"exponents", rep.combination.exponents},
                                 {"expr", rep.combination.expr.to_string()},
                                 {"lemma_shape", rep.combination.lemma_shape}};
    r.body["a_divisor_set_size"] = rep.a_divisor_set.size();
    r.body["a_values"] = str_list(rep.a_values);
    r.body["primes"] = str_list(rep.primes);
    Json boxes = Json::array();
    for (const auto& b : rep.boxes) boxes.push_back(Json{{"a", str(b.a)}, {"boxes", boxes_json(b.boxes)}});
    r.body["valuation_boxes"] = boxes;
    Json loci = Json::array();
    for (const auto& l : rep.loci)
        loci.push_back(Json{{"a", str(l.a)}, {"outcome", l.outcome}, {"boxes", boxes_json(l.boxes)}});
    r.body["loci"] = loci;

    Json counts;
    counts["enumerated"] = rep.candidates.size();
    counts["candidates"] = rep.candidate_count();
    for (auto s : {CandidateStatus::sieved_out, CandidateStatus::non_squarefree, CandidateStatus::no_integral_shift,
                   CandidateStatus::not_pellian_over_z, CandidateStatus::survivor})
        counts[to_string(s)] = rep.count(s);
    r.body["counts"] = counts;

    Json cands = Json::array();
    r.table.push_back({"m", "origin", "a", "b", "status", "quartic", "certificate"});
    for (const auto& c : rep.candidates) {
        cands.push_back(Json{{"a", str(c.a)},
                             {"b", str(c.b)},
                             {"origin", c.origin},
                             {"quartic", str(c.quartic)},
                             {"status", to_string(c.status)},
                             {"certificate", c.certificate}});
        r.table.push_back({std::to_string(rep.m), c.origin, str(c.a), str(c.b), to_string(c.status), str(c.quartic),
                           c.certificate});
    }
    r.body["candidates"] = cands;

    Json surv = Json::array();
    for (const auto& c : rep.survivors) {
        const Witness& w = *c.witness;
        surv.push_back(Json{{"a", str(c.a)},
                            {"b", str(c.b)},
                            {"canonical", str(w.canonical.poly)},
                            {"shift_c", w.shift_c},
                            {"sign", w.canonical.sign},
                            {"translation", str(w.canonical.shift)},
                            {"family_solution", solution_json(w.family_solution)},
                            {"minimal_integral", solution_json(w.minimal)},
                            {"power", w.power}});
    }
    r.body["survivors"] = surv;

    r.lines.push_back("order " + std::to_string(rep.m) + ": period " + std::to_string(cs.period_length) +
                      ", quasi-period at k = " + std::to_string(cs.quasi_index) + ", c = " +
                      cs.quasi_constant.to_string() + (cs.doubled ? " (doubled)" : ""));
    for (const auto& it : cs.items)
        r.lines.push_back("  " + it.label + " / b^" + std::to_string(it.b_weight) + ": " + it.expr.to_string());
    std::string e;
    for (int x : rep.combination.exponents) e += std::to_string(x);
    r.lines.push_back("b-free combination (" + e + "): " + rep.combination.expr.to_string());
    r.lines.push_back("a: " + std::to_string(rep.a_divisor_set.size()) + " divisor candidates, " +
                      std::to_string(rep.a_values.size()) + " pass every combination");
    for (const auto& b : rep.boxes) r.lines.push_back("  a = " + str(b.a) + ": " + boxes_text(b.boxes));
    for (const auto& l : rep.loci) r.lines.push_back("locus a = " + str(l.a) + ": " + l.outcome);
    r.lines.push_back("candidates: " + std::to_string(rep.candidate_count()) + " of " +
                      std::to_string(rep.candidates.size()) + " enumerated pairs");
    for (auto s : {CandidateStatus::non_squarefree, CandidateStatus::no_integral_shift,
                   CandidateStatus::not_pellian_over_z, CandidateStatus::survivor})
        r.lines.push_back("  " + to_string(s) + ": " + std::to_string(rep.count(s)));
    for (const auto& c : rep.candidates)
        if (c.status == CandidateStatus::non_squarefree || c.status == CandidateStatus::survivor ||
            c.status == CandidateStatus::not_pellian_over_z)
            r.lines.push_back("  (" + str(c.a) + ", " + str(c.b) + ") " + to_string(c.status) + ": " + c.certificate);
    r.lines.push_back("survivors: " + std::to_string(rep.survivors.size()));
    for (const auto& c : rep.survivors) {
        const Witness& w = *c.witness;
        r.lines.push_back("  d = " + str(w.canonical.poly));
        r.lines.push_back("    f = " + str(w.family_solution.f));
        r.lines.push_back("    g = " + str(w.family_solution.g));
    }
    return r;
}

Report nonsquarefree_report(const NonsquarefreeReport& rep) {
    Report r;
    r.body = header("classify-nonsquarefree");
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json roots = Json::array();
        for (const auto& x : c.roots)
            roots.push_back(Json{{"s", x.s.get_str()}, {"a", x.a.get_str()}, {"n", x.n}, {"d", str(x.d)}});
        cases.push_back(Json{{"shape", c.shape},
                             {"norm_base", c.norm_base.to_string("s")},
                             {"admissible_s", str_list(c.admissible_s)},
                             {"scanned_a", str_list(c.scanned_a)},
                             {"roots", roots}});
    }
    r.body["cases"] = cases;
    r.body["quartics"] = str_list(rep.quartics);

    r.table.push_back({"shape", "s", "a", "n", "d", "canonical"});
    for (const auto& c : rep.cases)
        for (const auto& x : c.roots)
            r.table.push_back({c.shape, x.s.get_str(), x.a.get_str(), std::to_string(x.n), str(x.d),
                               str(canonicalize(x.d).poly)});

    for (const auto& c : rep.cases) {
        std::vector<std::string> s;
        for (const auto& v : c.admissible_s) s.push_back(v.get_str());
        r.lines.push_back("D = " + c.shape + ": u = " + c.norm_base.to_string("s") + ", admissible s: {" +
                          join(s, ", ") + "}");
        for (const auto& x : c.roots)
            r.lines.push_back("  s = " + x.s.get_str() + ", a = " + x.a.get_str() + ": G_" + std::to_string(x.n) +
                              "(a) = 0, d = " + str(x.d));
    }
    r.lines.push_back("Pellian over Z[x], canonical forms:");
    for (const auto& q : rep.quartics) r.lines.push_back("  " + str(q));
    return r;
}

const QPoly& squarefree_target() {
    static const QPoly d = parse_poly("x^4 + 2x^3 - 7x^2 - 4x + 10");
    return d;
}

const PellSolution<Rational>& squarefree_target_solution() {
    static const PellSolution<Rational> s{
        parse_poly("2x^8 + 24x^7 + 100x^6 + 120x^5 - 266x^4 - 792x^3 - 244x^2 + 912x + 721"),
        parse_poly("2x^6 + 22x^5 + 86x^4 + 118x^3 - 74x^2 - 334x - 228"), Rational(1), 1, squarefree_target()};
    return s;
}

const std::vector<QPoly>& nonsquarefree_targets() {
    static const std::vector<QPoly> v{parse_poly("x^4 + x^2"), parse_poly("x^4 - x^2"), parse_poly("x^4 + 2x^2"),
                                      parse_poly("x^4 - 2x^2"), parse_poly("x^4 - 2x^3 - x^2")};
    return v;
}

std::vector<TheoremCheck> verify_theorems(const SearchOptions& opts) {
    std::vector<TheoremCheck> out;

    TheoremCheck sqf{"square-free classification", false, {}, {}};
    sqf.expected.push_back("4: " + str(canonicalize(squarefree_target()).poly));
    bool witness_ok = false;
    for (int m : supported_orders()) {
        SearchReport rep = search_torsion(m, opts);
        for (const auto& c : rep.survivors) {
            sqf.actual.push_back(std::to_string(m) + ": " + str(c.witness->canonical.poly));
            const auto& w = c.witness->family_solution;
            if (w.f == squarefree_target_solution().f && w.g == squarefree_target_solution().g) witness_ok = true;
        }
    }
    sqf.reproduced = sqf.actual == sqf.expected;
    out.push_back(sqf);

    TheoremCheck wit{"square-free witness", witness_ok, {}, {}};
    wit.expected = {str(squarefree_target_solution().f), str(squarefree_target_solution().g)};
    wit.actual = witness_ok ? wit.expected : std::vector<std::string>{"no survivor carries the expected f, g"};
    out.push_back(wit);

    TheoremCheck nsq{"nonsquare-free classification", false, {}, {}};
    std::vector<QPoly> expected;
    for (const auto& q : nonsquarefree_targets()) expected.push_back(canonicalize(q).poly);
    std::sort(expected.begin(), expected.end(), canonical_less);
    for (const auto& q : expected) nsq.expected.push_back(str(q));
    for (const auto& q : classify_nonsquarefree().quartics) nsq.actual.push_back(str(q));
    nsq.reproduced = nsq.actual == nsq.expected;
    out.push_back(nsq);
    return out;
}

Report verify_report(const std::vector<TheoremCheck>& checks) {
    Report r;
    r.body = header("verify-theorems");
    Json arr = Json::array();
    r.table.push_back({"check", "reproduced", "expected", "actual"});
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.reproduced;
        arr.push_back(
            Json{{"name", c.name}, {"reproduced", c.reproduced}, {"expected", c.expected}, {"actual", c.actual}});
        r.table.push_back({c.name, c.reproduced ? "yes" : "no", join(c.expected, "; "), join(c.actual, "; ")});
        r.lines.push_back((c.reproduced ? "REPRODUCED  " : "MISMATCH    ") + c.name);
        if (!c.reproduced) {
            std::set<std::string> e(c.expected.begin(), c.expected.end()), a(c.actual.begin(), c.actual.end());
            for (const auto& x : c.expected)
                if (!a.count(x)) r.lines.push_back("  - " + x);
            for (const auto& x : c.actual)
                if (!e.count(x)) r.lines.push_back("  + " + x);
        }
    }
    r.body["checks"] = arr;
    r.body["reproduced"] = all;
    return r;
}

}  // namespace pellq
