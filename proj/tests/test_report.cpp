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


#include <doctest.h>

#include "pellq/report.hpp"

using namespace pellq;

TEST_SUITE("report") {

TEST_CASE("format names") {
    CHECK(parse_format("json") == Format::json);
    CHECK(parse_format("tsv") == Format::tsv);
    CHECK(parse_format("text") == Format::text);
    CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("every body carries the schema version and command") {
    auto cf = cf_report(cf_expand(parse_poly("x^2 + 1"), 10));
    CHECK(cf.body["schema"] == 1);
    CHECK(cf.body["command"] == "cf");
    CHECK(cf.body["quotients"] == nlohmann::ordered_json::array({"x", "2*x"}));
    const QPoly d = parse_poly("x^4 + 2x^3 - 7x^2 - 4x + 10");
    auto pell = pell_report(d, is_pellian_over_Z(d), 6);
    CHECK(pell.body["schema"] == 1);
    CHECK(pell.body["command"] == "pell");
    CHECK(pell.body["pellian_over_Z"] == true);
    auto jac = jacobian_report(d, 64);
    CHECK(jac.body["torsion_order"] == 4);
    CHECK(jac.body["period"] == 6);
    auto fam = family_report(4, Rational(2), Rational(4));
    CHECK(fam.body["quartic"] == "x^4 + 7/8*x^2 + x + 113/256");
}

TEST_CASE("search output is byte-identical across runs and worker counts") {
    SearchOptions one, many;
    many.workers = 3;
    for (Format f : {Format::json, Format::tsv, Format::text}) {
        const std::string x = render(search_report(search_torsion(4, one)), f);
        const std::string y = render(search_report(search_torsion(4, many)), f);
        CHECK(x == y);
        CHECK_FALSE(x.empty());
        CHECK(x.back() == '\n');
    }
}

TEST_CASE("search report content for m = 4") {
    auto r = search_report(search_torsion(4, {}));
    REQUIRE(r.body["survivors"].size() == 1);
    const auto& s = r.body["survivors"][0];
    CHECK(s["canonical"] == "x^4 + 2*x^3 - 7*x^2 - 4*x + 10");
    CHECK(s["family_solution"]["f"] ==
          "2*x^8 + 24*x^7 + 100*x^6 + 120*x^5 - 266*x^4 - 792*x^3 - 244*x^2 + 912*x + 721");
    CHECK(s["family_solution"]["g"] == "2*x^6 + 22*x^5 + 86*x^4 + 118*x^3 - 74*x^2 - 334*x - 228");
    // TSV: header plus one row per candidate, all with the same column count.
    REQUIRE(r.table.size() >= 2);
    for (const auto& row : r.table) CHECK(row.size() == r.table[0].size());
}

TEST_CASE("nonsquare-free report lists five forms") {
    auto r = nonsquarefree_report(classify_nonsquarefree());
    CHECK(r.body["command"] == "classify-nonsquarefree");
    CHECK(r.body["quartics"].size() == 5);
}

}  // TEST_SUITE
