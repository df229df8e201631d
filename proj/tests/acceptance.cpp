/*
   Copyright 2026 The sigmacode Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sigmacode/bounds.hpp"
#include "sigmacode/codes.hpp"
#include "sigmacode/curve_parse.hpp"
#include "sigmacode/tables.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace sigmacode;

namespace {

struct Check {
    std::ostringstream notes;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Published cells, in this library's notation.
struct PublishedRow {
    long long d;
    std::vector<std::string> cells;  // extension, restriction, [multiplication], ours
};

const std::vector<PublishedRow> kTableI{{4, {"15625", "25184", "23328", "25626"}},
                                    {5, {"3125", "3598", "1000", "5126"}},
                                    {6, {"625", "514", "324", "1026"}},
                                    {7, {"125", "74", "18", "206"}},
                                    {8, {"25", "11", "6", "42"}}};

const std::vector<PublishedRow> kTableII{{7, {"387,420,489", "513,158,119", "617,003,002"}},
                                     {8, {"43,046,721", "46,650,739", "68,555,890"}},
                                     {9, {"4,782,969", "4,240,977", "7,617,322"}},
                                     {10, {"531,441", "385,544", "846,370"}},
                                     {11, {"59,049", "35,050", "94,042"}},
                                     {12, {"6,561", "3,187", "10,450"}},
                                     {13, {"729", "290", "1,162"}},
                                     {14, {"81", "27", "130"}}};

const std::vector<PublishedRow> kTableIII{{6, {"1.22×10^19", "4.67×10^19", "4.85×10^19"}},
                                      {7, {"1.35×10^18", "4.24×10^18", "5.39×10^18"}},
                                      {8, {"1.50×10^17", "3.86×10^17", "5.99×10^17"}},
                                      {9, {"1.67×10^16", "3.50×10^16", "6.66×10^16"}},
                                      {10, {"1.85×10^15", "3.19×10^15", "7.40×10^15"}},
                                      {11, {"2.06×10^14", "2.90×10^14", "8.22×10^14"}},
                                      {12, {"2.29×10^13", "2.63×10^13", "9.13×10^13"}},
                                      {13, {"2.54×10^12", "2.39×10^12", "1.01×10^13"}},
                                      {14, {"2.82×10^11", "2.18×10^11", "1.12×10^12"}},
                                      {15, {"3.14×10^10", "1.98×10^10", "1.25×10^11"}},
                                      {16, {"3.49×10^9", "1.80×10^9", "1.39×10^10"}},
                                      {17, {"3.87×10^8", "1.64×10^8", "1.54×10^9"}},
                                      {18, {"4.30×10^7", "1.49×10^7", "1.71×10^8"}},
                                      {19, {"4.78×10^6", "1.35×10^6", "1.91×10^7"}},
                                      {20, {"5.31×10^5", "1.23×10^5", "2.12×10^6"}},
                                      {21, {"59,049", "11,168", "235,882"}},
                                      {22, {"6,561", "1,016", "26,210"}}};

std::vector<std::string> row_cells(const tables::Row& r) {
    std::vector<std::string> c{r.extension.text, r.restriction.text};
    if (r.multiplication) c.push_back(r.multiplication->text);
    c.push_back(r.ours.text);
    return c;
}

// Independent exhaustive (m, s) scan with counts from the L(t) power series.
bounds::Optimum scan(const LPolynomial& l, long long n, long long d, long long mlo, long long scap) {
    const auto a = oracle::series_counts(l.coeffs, l.q, static_cast<unsigned>(n));
    bounds::Optimum best{-1, 0, 0};
    for (long long m = mlo; m <= n - d; ++m)
        for (long long s = 0; 2 * s <= n - d - m && s <= scap; ++s) {
            BigInt v = 1;
            for (long long i = 0; i <= s; ++i)
                v += ipow(BigInt(l.q - 1), static_cast<unsigned>(i)) *
                     ipow(BigInt(l.q), static_cast<unsigned>(m - l.g + 1)) * a[static_cast<std::size_t>(i)];
            if (best.m < 0 || v > best.size) best = {m, static_cast<unsigned>(s), v};
        }
    return best;
}

CurveModel model(const char* text, std::uint32_t q) { return parse_curve(text, Field::of_order(q)); }

const SigmaCode& code_1026() {
    static const SigmaCode c = build_code(model("y2=3*(x^4+2)", 5), {2, 1, DPolicy::Disjoint});
    return c;
}
const SigmaCode& code_25626() {
    static const SigmaCode c = build_code(model("y2=3*(x^4+2)", 5), {4, 1, DPolicy::Disjoint});
    return c;
}

void criterion1(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<tables::Preset, const std::vector<PublishedRow>*>> presets{
        {tables::Preset::I, &kTableI}, {tables::Preset::II, &kTableII}, {tables::Preset::III, &kTableIII}};
    int cells = 0;
    for (const auto& [id, published] : presets) {
        const tables::Table t = tables::build(id);
        (void)tables::render_md(t);
        c.expect(t.rows.size() == published->size(), "row count of table " + std::string(tables::to_string(id)));
        for (std::size_t i = 0; i < std::min(t.rows.size(), published->size()); ++i) {
            const auto got = row_cells(t.rows[i]);
            c.expect(t.rows[i].d == (*published)[i].d, "d column");
            c.expect(got == (*published)[i].cells, "table " + std::string(tables::to_string(id)) + " row d=" +
                                                   std::to_string((*published)[i].d));
            cells += static_cast<int>(got.size());
        }
    }
    const double secs = seconds_since(t0);
    c.expect(secs < 1.0, "runtime under 1 s");
    c.notes << " " << cells << " cells, " << secs << " s";
}

void criterion2(Check& c) {
    const auto t1 = tables::build(tables::Preset::I);
    const auto t3 = tables::build(tables::Preset::III);
    const LPolynomial e = zeta::elliptic(5, 10), h = zeta::maximal(9, 3);
    for (const auto& r : t1.rows) {
        const auto ref = scan(e, 10, r.d, 1, 1 << 20);
        c.expect(r.strict && r.strict->size == ref.size && r.strict->m == ref.m, "table I strict scan d=" + std::to_string(r.d));
        const auto pref = scan(e, 10, r.d, 0, 2);
        c.expect(r.paper.size == pref.size, "table I paper-mode scan d=" + std::to_string(r.d));
    }
    const auto& d8 = t1.rows.back();
    c.expect(d8.d == 8 && d8.strict && d8.strict->size == 26 && d8.paper.size == 42 && d8.diverges, "table I d=8: 26 vs 42");
    for (const auto& r : t3.rows) {
        const auto ref = scan(h, 28, r.d, 5, 1 << 20);
        c.expect(r.strict && r.strict->size == ref.size && r.strict->m == ref.m && r.strict->s == ref.s,
                 "table III strict scan d=" + std::to_string(r.d));
        const auto pref = scan(h, 28, r.d, 2, 2);
        c.expect(r.paper.size == pref.size, "table III paper-mode scan d=" + std::to_string(r.d));
        if (r.d >= 20) c.expect(r.strict->size < r.paper.size && r.diverges, "table III d=" + std::to_string(r.d) + " smaller");
    }
    const auto& d6 = t3.rows.front();
    const BigInt expect6 = 1 + ipow(BigInt(9), 14) * 2252385;
    c.expect(d6.strict && d6.strict->m == 16 && d6.strict->s == 3 && d6.strict->size == expect6 && d6.diverges,
             "table III d=6 strict (16, 3)");
    c.expect(d6.strict && d6.strict->size > d6.paper.size, "table III d=6 strict larger");
    c.notes << " I d=8 strict " << (d8.strict ? to_decimal(d8.strict->size) : "-") << ", III d=6 strict "
            << (d6.strict ? scientific3(d6.strict->size, SciRounding::Truncate) : "-");
}

void criterion3(Check& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const SigmaCode& a = code_1026();
    const SigmaCode& b = code_25626();
    const double secs = seconds_since(t0);
    c.expect(a.size() == 1026, "M = 1026");
    c.expect(b.size() == 25626, "M = 25626");
    const auto n = std::vector<std::uint64_t>{oracle::hyperelliptic_points(5, 1, {6, 0, 0, 0, 3}),
                                              oracle::hyperelliptic_points(5, 2, {6, 0, 0, 0, 3}),
                                              oracle::hyperelliptic_points(5, 3, {6, 0, 0, 0, 3})};
    const auto big_a = oracle::effective_from_places(oracle::places_from_points(n));
    for (const SigmaCode* code : {&a, &b}) {
        const auto& meta = *code->meta;
        for (unsigned i = 0; i <= meta.s; ++i) {
            const BigInt term = ipow(BigInt(4), i) * ipow(BigInt(5), static_cast<unsigned>(meta.m)) * big_a[i];
            c.expect(BigInt(meta.stratum_counts[i]) == term, "stratum " + std::to_string(i) + " for m=" + std::to_string(meta.m));
        }
        c.expect(meta.closed_form_checked, "closed-form check ran");
    }
    c.expect(secs < 30, "build within seconds");
    c.notes << " strata 25+1000 and 625+25000, " << secs << " s";
}

void criterion4(Check& c) {
    const SigmaCode& a = code_1026();
    const SigmaCode& b = code_25626();
    const auto da = min_distance(a);
    c.expect(da.d >= 6, "d(1026) >= 6");
    c.expect(da.d == oracle::naive_min_distance(a), "d(1026) equals brute force");
    const auto t0 = std::chrono::steady_clock::now();
    const auto db = min_distance(b, {1, false});
    const double secs = seconds_since(t0);
    c.expect(db.d >= 4, "d(25626) >= 4");
    c.expect(secs < 60, "single-worker audit under 60 s");
    const auto d3 = min_distance(b, {3, false});
    const auto dx = min_distance(b, {2, true});
    c.expect(d3.d == db.d && d3.i == db.i && d3.j == db.j, "worker-count invariance");
    c.expect(dx.d == db.d && dx.i == db.i && dx.j == db.j, "exact profile agrees");
    c.expect(db.pairs == 25626ULL * 25625 / 2, "all pairs visited");
    c.notes << " d = " << da.d << " and " << db.d << ", " << db.pairs << " pairs in " << secs << " s";
}

void criterion5(Check& c) {
    const CurveModel m = model("y2=x^4+1", 9);
    c.expect(point_count(m, 1) == 16, "point count 16");
    c.expect(oracle::hyperelliptic_points(3, 2, {1, 0, 0, 0, 1}) == 16, "oracle point count 16");
    const SigmaCode code = build_code(m, {2, 1, DPolicy::Disjoint});
    c.expect(code.size() == 10450, "M = 10450");
    const auto d = min_distance(code);
    c.expect(d.d >= 12, "d >= 12");
    c.expect(d.d == oracle::naive_min_distance(code), "d equals brute force");
    c.notes << " M = " << code.size() << ", d = " << d.d;
}

void criterion6(Check& c) {
    const SigmaCode code = build_code(model("rational", 5), {0, 1, DPolicy::Disjoint});
    const ZetaTable z = zeta::effective_counts(code.meta->lpoly, 1);
    const AuditReport r = audit(code, &z);
    c.expect(r.M == 126, "M = 126");
    c.expect(r.size_lower && *r.size_lower == 126, "bound = 126");
    c.expect(r.distance.d >= 4, "d >= 4");
    c.expect(r.companion_value && *r.companion_value == 142 && *r.companion_value != r.M, "142 flagged");
    c.expect(r.passed(), "audit passes");
    c.notes << " M = " << r.M << ", d = " << r.distance.d << ", companion 142 not reproduced";
}

void criterion7(Check& c) {
    const CurveModel h = model("affine:y^3+y-x^4:inf=1:g=3", 9);
    c.expect(point_count(h, 1) == 28, "point count 28");
    const std::vector<std::uint64_t> n{oracle::hermitian_points(2), oracle::hermitian_points(4),
                                       oracle::hermitian_points(6)};
    c.expect(n[0] == 28, "oracle N_1 = 28");
    c.expect(point_count(h, 2) == n[1], "library N_2 over F_81 matches oracle");
    const ZetaTable z = zeta::effective_counts(zeta::maximal(9, 3), 3);
    c.expect(z.counts[1] == 28 && z.counts[2] == 406 && z.counts[3] == 4348, "A_1..A_3 = 28, 406, 4348");
    const auto ref = oracle::effective_from_places(oracle::places_from_points(n));
    c.expect(ref[1] == z.counts[1] && ref[2] == z.counts[2] && ref[3] == z.counts[3], "place-counting oracle");
    c.notes << " N_2 = " << n[1] << ", N_3 = " << n[2];
}

void criterion8(Check& c) {
    for (const auto& s : properties::all(120)) {
        c.expect(s.ok(100), s.name + ": " + s.first_failure);
        c.notes << " " << s.name << " " << s.cases << "/" << s.failures << ";";
    }
}

void criterion9(Check& c) {
    using bounds::best_known;
    using bounds::rule_restriction;
    const std::vector<std::pair<long long, long long>> t1{{4, 25184}, {5, 3598}, {6, 514}, {7, 74}, {8, 11}};
    for (const auto& [d, want] : t1) c.expect(rule_restriction(best_known(7, 10, d).size, 6, 7, 10) == want, "restriction d=" + std::to_string(d));
    c.expect(rule_restriction(best_known(11, 16, 7).size, 10, 11, 16) == 513158119, "table II d=7");
    c.expect(rule_restriction(best_known(11, 28, 22).size, 10, 11, 28) == 1016, "table III d=22");
    const std::vector<std::pair<long long, long long>> mult{{4, 23328}, {6, 324}, {7, 18}, {8, 6}};
    for (const auto& [d, want] : mult)
        c.expect(bounds::rule_multiplication(best_known(2, 10, d).size, best_known(3, 10, d).size, d, d).first == want,
                 "multiplication d=" + std::to_string(d));
    c.expect(bounds::nq1(5) == 10 && bounds::nq1(9) == 16, "nq1(5), nq1(9)");
    c.expect(bounds::is_exceptional(128) && bounds::nq1(128) == 150, "exceptional q = 128");
    c.expect(ipow(BigInt(7), 6) == best_known(7, 10, 4).size, "7-ary [10,6,4] size");
    c.notes << " 7 restriction and 4 multiplication cells, nq1 = 10, 16, 150";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"table reproduction", criterion1},     {"strict-mode divergences", criterion2},
        {"construction sizes", criterion3},     {"distance audit", criterion4},
        {"q=9 elliptic construction", criterion5},      {"rational-field case", criterion6},
        {"Hermitian counts", criterion7},       {"property suites", criterion8},
        {"propagation rules", criterion9}};
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.notes << " [exception: " << e.what() << "]";
        }
        all = all && c.ok;
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (c.ok ? "PASS" : "FAIL") << " -"
                  << c.notes.str() << std::endl;
    }
    return all ? 0 : 1;
}
