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

#include "sigmacode/tables.hpp"

#include <algorithm>
#include <json.hpp>

#include "sigmacode/error.hpp"

namespace sigmacode::tables {

namespace {

enum class Style { Plain, Commas, Scientific };

struct Spec {
    std::uint64_t q;
    unsigned g;
    long long n;
    long long dlo;
    long long dhi;
    std::uint64_t donor;  // alphabet of the restricted codes
    Style style;
    bool multiplication;
    LPolynomial lpoly;
};

Spec spec_of(Preset id) {
    switch (id) {
        case Preset::I:
            return {5, 1, 10, 4, 8, 7, Style::Plain, true, zeta::elliptic(5, 10)};
        case Preset::II:
            return {9, 1, 16, 7, 14, 11, Style::Commas, false, zeta::elliptic(9, 16)};
        case Preset::III:
            return {9, 3, 28, 6, 22, 11, Style::Scientific, false, zeta::maximal(9, 3)};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown preset");
}

const BigInt kSciThreshold = 1000000;

std::string format(const BigInt& v, Style style, bool sci_row, SciRounding rounding) {
    if (style == Style::Plain) return to_decimal(v);
    if (style == Style::Scientific && sci_row) return scientific3(v, rounding);
    return with_commas(v);
}

std::string optimum_note(const bounds::Optimum& o) {
    return "m=" + std::to_string(o.m) + ", s=" + std::to_string(o.s);
}

// Display width in code points.
std::size_t width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::vector<std::string> headers(const Table& t) {
    std::vector<std::string> h{"d", "Alphabet extension", "Alphabet restriction"};
    if (t.id == Preset::I) h.emplace_back("Alphabet multiplication");
    h.insert(h.end(), {"Ours (paper mode)", "Paper m, s", "Strict mode", "Divergence"});
    return h;
}

std::vector<std::string> cells(const Row& r) {
    std::vector<std::string> c{std::to_string(r.d), r.extension.text, r.restriction.text};
    if (r.multiplication) c.push_back(r.multiplication->text);
    c.push_back(r.ours.text);
    c.push_back(optimum_note(r.paper));
    c.push_back(r.strict_text);
    c.push_back(r.diverges ? "flagged" : "");
    return c;
}

}  // namespace

Preset parse_preset(std::string_view text) {
    if (text == "I") return Preset::I;
    if (text == "II") return Preset::II;
    if (text == "III") return Preset::III;
    throw Error(ErrorCode::InvalidArgument, "unknown preset '" + std::string(text) + "'");
}

std::string_view to_string(Preset p) noexcept {
    switch (p) {
        case Preset::I:
            return "I";
        case Preset::II:
            return "II";
        case Preset::III:
            return "III";
    }
    return "?";
}

Table build(Preset id) {
    const Spec sp = spec_of(id);
    Table t;
    t.id = id;
    t.q = sp.q;
    t.g = sp.g;
    t.n = sp.n;
    t.title = "Table " + std::string(to_string(id)) + ": " + std::to_string(sp.q + 1) + "-ary codes of length " +
              std::to_string(sp.n) + " (q = " + std::to_string(sp.q) + ", g = " + std::to_string(sp.g) + ")";
    const ZetaTable zeta = bounds::zeta_for_length(sp.lpoly, sp.n);
    for (long long d = sp.dlo; d <= sp.dhi; ++d) {
        Row r;
        r.d = d;
        r.extension.value = ipow(sp.q, static_cast<unsigned>(sp.n - sp.g + 1 - d));
        r.restriction.value = bounds::rule_restriction(bounds::best_known(sp.donor, sp.n, d).size, sp.q + 1,
                                                       sp.donor, sp.n);
        if (sp.multiplication) {
            Cell c;
            if (const auto& known = bounds::best_known();
                std::any_of(known.begin(), known.end(), [&](const auto& e) { return e.alphabet == sp.q + 1 && e.d == d; })) {
                c.value = bounds::best_known(sp.q + 1, sp.n, d).size;
            } else {
                c.value = bounds::rule_multiplication(bounds::best_known(2, sp.n, d).size,
                                                      bounds::best_known(3, sp.n, d).size, d, d)
                              .first;
            }
            r.multiplication = c;
        }
        r.paper = bounds::optimize({sp.q, sp.g, zeta, sp.n, d, bounds::Mode::Paper});
        r.ours.value = r.paper.size;
        try {
            r.strict = bounds::optimize({sp.q, sp.g, zeta, sp.n, d, bounds::Mode::Strict});
        } catch (const Error& e) {
            if (e.code() != ErrorCode::EmptyDomain) throw;
        }

        bool sci = r.extension.value >= kSciThreshold || r.restriction.value >= kSciThreshold ||
                   r.ours.value >= kSciThreshold;
        if (r.multiplication) sci = sci || r.multiplication->value >= kSciThreshold;
        r.extension.text = format(r.extension.value, sp.style, sci, SciRounding::Nearest);
        r.restriction.text = format(r.restriction.value, sp.style, sci, SciRounding::Nearest);
        if (r.multiplication) r.multiplication->text = format(r.multiplication->value, sp.style, sci, SciRounding::Nearest);
        r.ours.text = format(r.ours.value, sp.style, sci, SciRounding::Truncate);
        if (r.strict) {
            const bool ssci = sci || r.strict->size >= kSciThreshold;
            r.strict_text = format(r.strict->size, sp.style, ssci, SciRounding::Truncate) + " (" +
                            optimum_note(*r.strict) + ")";
            r.diverges = r.strict->size != r.paper.size;
        } else {
            r.strict_text = "empty domain";
            r.diverges = true;
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

std::string render_md(const Table& t) {
    const auto head = headers(t);
    std::vector<std::vector<std::string>> body;
    for (const Row& r : t.rows) body.push_back(cells(r));
    std::vector<std::size_t> w(head.size());
    for (std::size_t k = 0; k < head.size(); ++k) {
        w[k] = std::max<std::size_t>(3, width(head[k]));
        for (const auto& b : body) w[k] = std::max(w[k], width(b[k]));
    }
    auto line = [&](const std::vector<std::string>& v) {
        std::string s = "|";
        for (std::size_t k = 0; k < v.size(); ++k) {
            const std::string pad(w[k] - width(v[k]), ' ');
            s += " " + (k == 0 ? v[k] + pad : pad + v[k]) + " |";
        }
        return s + "\n";
    };
    std::string out = "## " + t.title + "\n\n" + line(head) + "|";
    // d column left-aligned, numbers right-aligned.
    for (std::size_t k = 0; k < head.size(); ++k)
        out += k == 0 ? ":" + std::string(w[k] + 1, '-') + "|" : std::string(w[k] + 1, '-') + ":|";
    out += "\n";
    for (const auto& b : body) out += line(b);
    return out;
}

std::string render_csv(const Table& t) {
    std::string out = "d,extension,restriction,";
    if (t.id == Preset::I) out += "multiplication,";
    out += "ours,ours_m,ours_s,strict,strict_m,strict_s,diverges\n";
    for (const Row& r : t.rows) {
        out += std::to_string(r.d) + "," + to_decimal(r.extension.value) + "," + to_decimal(r.restriction.value) + ",";
        if (r.multiplication) out += to_decimal(r.multiplication->value) + ",";
        out += to_decimal(r.ours.value) + "," + std::to_string(r.paper.m) + "," + std::to_string(r.paper.s) + ",";
        if (r.strict)
            out += to_decimal(r.strict->size) + "," + std::to_string(r.strict->m) + "," + std::to_string(r.strict->s);
        else
            out += ",,";
        out += r.diverges ? ",true\n" : ",false\n";
    }
    return out;
}

std::string render_json(const Table& t) {
    using nlohmann::ordered_json;
    auto cell = [](const Cell& c) { return ordered_json{{"exact", to_decimal(c.value)}, {"text", c.text}}; };
    ordered_json j;
    j["preset"] = std::string(to_string(t.id));
    j["q"] = t.q;
    j["g"] = t.g;
    j["n"] = t.n;
    j["title"] = t.title;
    j["rows"] = ordered_json::array();
    for (const Row& r : t.rows) {
        ordered_json row;
        row["d"] = r.d;
        row["extension"] = cell(r.extension);
        row["restriction"] = cell(r.restriction);
        if (r.multiplication) row["multiplication"] = cell(*r.multiplication);
        row["ours"] = cell(r.ours);
        row["ours"]["m"] = r.paper.m;
        row["ours"]["s"] = r.paper.s;
        if (r.strict)
            row["strict"] = {{"exact", to_decimal(r.strict->size)}, {"m", r.strict->m}, {"s", r.strict->s}};
        else
            row["strict"] = nullptr;
        row["diverges"] = r.diverges;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string render(const Table& t, std::string_view format) {
    if (format == "md") return render_md(t);
    if (format == "csv") return render_csv(t);
    if (format == "json") return render_json(t);
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + std::string(format) + "'");
}

}  // namespace sigmacode::tables
