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

// pellquart: continued fractions, Pell equations and the integral
// classification of Pellian quartics.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "pellq/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
    int max_steps = pellq::kDefaultMaxStepsQ;
    int power_bound = 6;
    int workers = std::max(1U, std::thread::hardware_concurrency());
    std::string format = "text";
    std::string out;
};

void emit(const pellq::Report& r, const RunConfig& cfg) {
    const std::string text = pellq::render(r, pellq::parse_format(cfg.format));
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    f << text;
}

pellq::SearchOptions search_options(const RunConfig& cfg) {
    pellq::SearchOptions o;
    o.max_steps = cfg.max_steps;
    o.power_bound = cfg.power_bound;
    o.workers = cfg.workers;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued fractions, Pell equations and Pellian quartics over Z[x]"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    const auto positive = CLI::Range(1, 1 << 20);
    app.add_option("--max-steps", cfg.max_steps, "Partial quotients to compute before giving up")
        ->envname("PELLQUART_MAX_STEPS")
        ->check(positive);
    app.add_option("--power-bound", cfg.power_bound, "Largest power of the minimal solution tried for integrality")
        ->envname("PELLQUART_POWER_BOUND")
        ->check(positive);
    app.add_option("--workers", cfg.workers, "Worker threads for the candidate search")
        ->envname("PELLQUART_WORKERS")
        ->check(positive);
    app.add_option("--format", cfg.format, "Output format")
        ->envname("PELLQUART_FORMAT")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--out", cfg.out, "Write the report to this file instead of stdout")->envname("PELLQUART_OUT");

    std::string poly;
    int m = 0;
    std::string a_text, b_text;
    int window = 10, n_max = 30;

    auto* cf = app.add_subcommand("cf", "Continued fraction of sqrt(d)");
    cf->add_option("poly", poly, "Monic polynomial of even degree")->required();
    auto* pell = app.add_subcommand("pell", "Minimal Pell solution and integrality over Z[x]");
    pell->add_option("poly", poly, "Monic polynomial of even degree with integer coefficients")->required();
    auto* jac = app.add_subcommand("jacobian", "Jacobian curve, point, torsion order and period of a quartic");
    jac->add_option("poly", poly, "Monic square-free quartic")->required();
    auto* fam = app.add_subcommand("family", "Member of the order-m family at (a, b)");
    fam->add_option("m", m, "Torsion order")->required();
    fam->add_option("a", a_text, "Parameter a")->required();
    fam->add_option("b", b_text, "Parameter b")->required();
    auto* search = app.add_subcommand("search", "Integral search for torsion order m");
    search->add_option("m", m, "Torsion order in {4,...,10,12}")->required();
    auto* nsq = app.add_subcommand("classify-nonsquarefree", "Nonsquare-free quartics Pellian over Z[x]");
    nsq->add_option("--window", window, "Integers |a| <= window scanned directly")->check(positive);
    nsq->add_option("--n-max", n_max, "Longest G_n sequence scanned")->check(positive);
    auto* verify = app.add_subcommand("verify-theorems", "Re-run the full classification and compare");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cf->parsed()) {
            auto c = pellq::cf_expand(pellq::parse_poly(poly), cfg.max_steps);
            emit(pellq::cf_report(c), cfg);
            return c.truncated ? kExitInconclusive : kExitOk;
        }
        if (pell->parsed()) {
            const pellq::QPoly d = pellq::parse_poly(poly);
            auto res = pellq::is_pellian_over_Z(d, cfg.power_bound, cfg.max_steps);
            emit(pellq::pell_report(d, res, cfg.power_bound), cfg);
            return res.verdict == pellq::IntegralityVerdict::no_period ? kExitInconclusive : kExitOk;
        }
        if (jac->parsed()) {
            emit(pellq::jacobian_report(pellq::parse_poly(poly), cfg.max_steps), cfg);
            return kExitOk;
        }
        if (fam->parsed()) {
            emit(pellq::family_report(m, pellq::Rational::parse(a_text), pellq::Rational::parse(b_text)), cfg);
            return kExitOk;
        }
        if (search->parsed()) {
            emit(pellq::search_report(pellq::search_torsion(m, search_options(cfg))), cfg);
            return kExitOk;
        }
        if (nsq->parsed()) {
            emit(pellq::nonsquarefree_report(pellq::classify_nonsquarefree(window, n_max)), cfg);
            return kExitOk;
        }
        if (verify->parsed()) {
            auto checks = pellq::verify_theorems(search_options(cfg));
            emit(pellq::verify_report(checks), cfg);
            for (const auto& c : checks)
                if (!c.reproduced) return kExitMismatch;
            return kExitOk;
        }
    } catch (const pellq::PrecisionError& e) {
        std::cerr << "pellquart: inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "pellquart: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
