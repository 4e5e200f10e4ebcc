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

#ifndef PELLQ_REPORT_HPP
#define PELLQ_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pellq/classify.hpp"

namespace pellq {

enum class Format { json, tsv, text };

/// "json", "tsv" or "text"; throws ParseError otherwise.
Format parse_format(std::string_view name);

/// One command's output in all three renderings. `body` carries
/// `schema` and `command`; `table` starts with its header row.
struct Report {
    nlohmann::ordered_json body;
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> lines;
};

/// Byte-deterministic rendering; every format ends with a newline.
std::string render(const Report& r, Format f);

Report cf_report(const CFExpansion<Rational>& cf);
Report pell_report(const QPoly& d, const IntegralityResult& res, int power_bound);
Report jacobian_report(const QPoly& d, int max_steps);
Report family_report(int m, const Rational& a, const Rational& b);
Report search_report(const SearchReport& rep);
Report nonsquarefree_report(const NonsquarefreeReport& rep);

struct TheoremCheck {
    std::string name;
    bool reproduced = false;
    std::vector<std::string> expected;
    std::vector<std::string> actual;
};

/// Runs every order and the nonsquare-free classifier and compares with
/// the two classification statements and the published witness.
std::vector<TheoremCheck> verify_theorems(const SearchOptions& opts);

Report verify_report(const std::vector<TheoremCheck>& checks);

/// The square-free classification: the single Pellian quartic up to
/// x -> +-x + c, and its degree-8 unit solution.
const QPoly& squarefree_target();
const PellSolution<Rational>& squarefree_target_solution();

/// The nonsquare-free list before canonicalization.
const std::vector<QPoly>& nonsquarefree_targets();

}  // namespace pellq

#endif  // PELLQ_REPORT_HPP
